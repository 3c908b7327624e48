import csv
import io
import json
import subprocess
import sys

import pytest

from monoidaut.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


# --- count ---------------------------------------------------------------------------------

def test_count_two_adic():
    assert run('count', '--p', '2', '--e', '5') == (0, 'unit:16 monoid:64\n')


def test_count_odd_prime():
    assert run('count', '--p', '3', '--e', '1') == (0, 'unit:1 monoid:1\n')


def test_count_with_oracle():
    code, out = run('count', '--p', '5', '--e', '2', '--oracle')
    assert code == 0
    assert out.startswith('unit:8 monoid:32') and 'oracle-match:true' in out


def test_count_json_fields():
    code, out = run('count', '--p', '3', '--e', '3', '--oracle', '--format', 'json')
    report = json.loads(out)
    assert code == 0
    assert report == {'p': 3, 'e': 3, 'unit': 6, 'monoid': 36, 'oracle_unit': 6,
                      'oracle_monoid': 36, 'oracle_match': True}
    assert out == json.dumps(report, sort_keys=True) + '\n'


def test_count_oracle_refuses_above_bound():
    code, _ = run('count', '--p', '2', '--e', '10', '--oracle')
    assert code == 2


@pytest.mark.parametrize('argv', [
    ('count', '--p', '4', '--e', '2'),
    ('count', '--p', 'x', '--e', '2'),
    ('count', '--p', '3', '--e', '0'),
    ('count', '--p', '3'),
    ('frobnicate',),
    (),
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


# --- list -------------------------------------------------------------------------------------

def test_list_units_mod_8():
    code, out = run('list', '--p', '2', '--e', '3', '--which', 'units')
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 6
    assert sum(r['params']['id'] for r in rows) == 1
    assert all(set(r) == {'params', 'image_of_generators', 'full_map'} for r in rows)


@pytest.mark.parametrize('p,e,which,key', [(2, 5, 'units', 'unit'), (2, 5, 'monoid', 'monoid'),
                                           (3, 2, 'monoid', 'monoid'), (7, 1, 'units', 'unit')])
def test_list_line_count_equals_count(p, e, which, key):
    _, listing = run('list', '--p', str(p), '--e', str(e), '--which', which)
    _, count = run('count', '--p', str(p), '--e', str(e), '--format', 'json')
    assert len(listing.splitlines()) == json.loads(count)[key]


def test_list_omits_full_map_above_bound():
    _, out = run('list', '--p', '2', '--e', '5', '--bound', '16')
    assert all('full_map' not in json.loads(line) for line in out.splitlines())


def test_list_monoid_full_maps_are_permutations():
    _, out = run('list', '--p', '3', '--e', '2', '--which', 'monoid')
    for line in out.splitlines():
        assert sorted(json.loads(line)['full_map']) == list(range(9))


def test_list_is_byte_deterministic():
    assert run('list', '--p', '2', '--e', '6', '--which', 'monoid') == \
        run('list', '--p', '2', '--e', '6', '--which', 'monoid')


# --- structure -----------------------------------------------------------------------------------

def test_structure_u16_is_d4():
    code, out = run('structure', '--p', '2', '--e', '4')
    report = json.loads(out)
    assert code == 0 and report['decomposition'] == 'D4' and report['verified']


def test_structure_z8_monoid_is_klein():
    code, out = run('structure', '--p', '2', '--e', '3', '--which', 'monoid')
    report = json.loads(out)
    assert code == 0 and report['decomposition'] == 'Klein' and report['verified']


def test_structure_e6_central_product_report():
    code, out = run('structure', '--p', '2', '--e', '6')
    report = json.loads(out)
    assert code == 0 and report['verified']
    assert report['decomposition'] == 'Z/2 x (D4 o Z/2^2)'
    assert all(report['checks'].values())
    assert report['witness_sample']


def test_structure_cyclic_unit_group():
    code, out = run('structure', '--p', '3', '--e', '2', '--format', 'text')
    assert code == 0 and out.startswith('U_6 (order 2): verified')


# --- ring ---------------------------------------------------------------------------------------

def parse_table(text):
    rows = list(csv.reader(io.StringIO(text)))
    header = rows[0][1:]
    return header, {r[0]: [int(v) for v in r[1:]] for r in rows[1:]}


def test_ring_identity_index_is_standard_addition():
    code, out = run('ring', '--p', '2', '--e', '3', '--phi', '0')
    header, table = parse_table(out)
    assert code == 0 and header == [str(i) for i in range(8)]
    assert all(table[str(a)] == [(a + b) % 8 for b in range(8)] for a in range(8))


def test_ring_phi_1_mod_8():
    code, out = run('ring', '--p', '2', '--e', '3', '--phi', '1')
    header, table = parse_table(out)
    assert code == 0 and len(table) == 8
    assert table['2'][2] == 4


def test_ring_json_reports_checks():
    code, out = run('ring', '--p', '3', '--e', '2', '--phi', '3', '--format', 'json')
    report = json.loads(out)
    assert code == 0 and report['ok'] and all(report['checks'].values())


def test_ring_index_out_of_range():
    assert run('ring', '--p', '2', '--e', '3', '--phi', '4')[0] == 2


def test_ring_above_bound():
    assert run('ring', '--p', '2', '--e', '10', '--bound', '512')[0] == 2


# --- verify, order, decompose -------------------------------------------------------------------

def test_verify_structure_single_context():
    code, out = run('verify', '--p', '2', '--e', '5', '--suite', 'structure')
    summary = json.loads(out)
    assert code == 0
    assert summary['values']['Ve_center_size'] == 4
    assert summary['failures'] == [] and summary['suite'] == 'structure'


def test_verify_monoid_single_context():
    code, out = run('verify', '--p', '3', '--e', '3', '--suite', 'monoid-aut')
    assert code == 0 and json.loads(out)['cases'] > 0


def test_order_with_oracle():
    assert run('order', '--p', '2', '--e', '5', '--a', '7', '--oracle', '--format', 'json') == \
        (0, '{"a": 7, "modulus": 32, "oracle_match": true, "oracle_order": 4, "order": 4}\n')


def test_order_rejects_non_unit():
    assert run('order', '--p', '2', '--e', '5', '--a', '6')[0] == 2


def test_decompose_json():
    code, out = run('decompose', '--p', '2', '--e', '5', '--a', '14', '--format', 'json')
    report = json.loads(out)
    assert code == 0
    assert (report['u'], report['r']) == (1, 7)
    assert report['unit_part'] == {'form': '(-1)^v 5^w', 'v': 1, 'w': 2}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, '-m', 'monoidaut', 'count', '--p', '2', '--e', '5'],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == 'unit:16 monoid:64\n'


def test_module_entry_point_usage_error():
    proc = subprocess.run([sys.executable, '-m', 'monoidaut', 'count', '--p', '9', '--e', '1'],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and 'not prime' in proc.stderr
