"""Counts produced by the brute-force oracle (``monoidaut.oracle``), frozen.

Regenerate with ``python3 tests/frozen_oracle.py --regenerate`` and review the diff;
the fast tests compare closed forms against these numbers, while the acceptance
suite re-runs the oracle live.
"""

# modulus -> |Aut(U_n)| found by extension search on the unit-group table
ORACLE_UNIT_AUT = {
    2: 1, 3: 1, 4: 1, 5: 2, 7: 2, 8: 6, 9: 2, 11: 4, 13: 4, 16: 8, 17: 8, 19: 6, 23: 10,
    25: 8, 27: 6, 29: 12, 31: 8, 32: 16, 37: 12, 41: 16, 43: 12, 47: 22, 49: 12, 53: 24,
    59: 28, 61: 16, 64: 32, 67: 20, 71: 24, 73: 24, 79: 24, 81: 18, 83: 40, 89: 40,
    97: 32, 101: 40, 103: 32, 107: 52, 109: 36, 113: 48, 121: 40, 125: 40, 127: 36,
    128: 64, 131: 48, 137: 64, 139: 44, 149: 72, 151: 40, 157: 48, 163: 54, 167: 82,
    169: 48, 173: 84, 179: 88, 181: 48, 191: 72, 193: 64, 197: 84, 199: 60, 211: 48,
    223: 72, 227: 112, 229: 72, 233: 112, 239: 96, 241: 64, 243: 54, 251: 100, 256: 128,
    257: 128, 263: 130, 269: 132, 271: 72, 277: 88, 281: 96, 283: 92, 289: 128,
    293: 144, 307: 96, 311: 120, 313: 96, 317: 156, 331: 80, 337: 96, 343: 84, 347: 172,
    349: 112, 353: 160, 359: 178, 361: 108, 367: 120, 373: 120, 379: 108, 383: 190,
    389: 192, 397: 120, 401: 160, 409: 128, 419: 180, 421: 96, 431: 168, 433: 144,
    439: 144, 443: 192, 449: 192, 457: 144, 461: 176, 463: 120, 467: 232, 479: 238,
    487: 162, 491: 168, 499: 164, 503: 250, 509: 252, 512: 256
}

# modulus -> |Aut(Z/nZ, *)| found by extension search on the monoid table
ORACLE_MONOID_AUT = {
    2: 1, 3: 1, 4: 1, 5: 2, 7: 2, 8: 4, 9: 4, 11: 4, 13: 4, 16: 16, 17: 8, 19: 6,
    23: 10, 25: 32, 27: 36, 29: 12, 31: 8, 32: 64, 37: 12, 41: 16, 43: 12, 47: 22,
    49: 72, 53: 24, 59: 28, 61: 16, 64: 256, 67: 20, 71: 24, 73: 24, 79: 24, 81: 324,
    83: 40, 89: 40, 97: 32, 101: 40, 103: 32, 107: 52, 109: 36, 113: 48, 121: 400,
    125: 800, 127: 36, 128: 1024, 131: 48, 137: 64, 139: 44, 149: 72, 151: 40, 157: 48,
    163: 54, 167: 82, 169: 576, 173: 84, 179: 88, 181: 48, 191: 72, 193: 64, 197: 84,
    199: 60, 211: 48, 223: 72, 227: 112, 229: 72, 233: 112, 239: 96, 241: 64, 243: 2916,
    251: 100, 256: 4096, 257: 128, 263: 130, 269: 132, 271: 72, 277: 88, 281: 96,
    283: 92, 289: 2048, 293: 144, 307: 96, 311: 120, 313: 96, 317: 156, 331: 80,
    337: 96, 343: 3528, 347: 172, 349: 112, 353: 160, 359: 178, 361: 1944, 367: 120,
    373: 120, 379: 108, 383: 190, 389: 192, 397: 120, 401: 160, 409: 128, 419: 180,
    421: 96, 431: 168, 433: 144, 439: 144, 443: 192, 449: 192, 457: 144, 461: 176,
    463: 120, 467: 232, 479: 238, 487: 162, 491: 168, 499: 164, 503: 250, 509: 252,
    512: 16384
}

# modulus -> (#minimal generating sets of U_n, #minimal generating sets of Z/nZ)
ORACLE_MINGEN = {
    2: (1, 1), 3: (1, 1), 4: (1, 1), 5: (2, 2), 7: (2, 2), 8: (3, 6), 9: (2, 4),
    11: (4, 4), 13: (4, 4), 16: (12, 48), 17: (8, 8), 19: (6, 6), 23: (10, 10),
    25: (8, 32), 27: (6, 36), 29: (12, 12), 31: (8, 8), 32: (48, 384), 37: (12, 12),
    41: (16, 16), 43: (12, 12), 47: (22, 22), 49: (12, 72), 53: (24, 24), 59: (28, 28),
    61: (16, 16), 64: (192, 3072), 67: (20, 20), 71: (24, 24), 73: (24, 24),
    79: (24, 24), 81: (18, 324), 83: (40, 40), 89: (40, 40), 97: (32, 32),
    101: (40, 40), 103: (32, 32), 107: (52, 52), 109: (36, 36), 113: (48, 48),
    121: (40, 400), 125: (40, 800), 127: (36, 36), 128: (768, 24576), 131: (48, 48),
    137: (64, 64), 139: (44, 44), 149: (72, 72), 151: (40, 40), 157: (48, 48),
    163: (54, 54), 167: (82, 82), 169: (48, 576), 173: (84, 84), 179: (88, 88),
    181: (48, 48), 191: (72, 72), 193: (64, 64), 197: (84, 84), 199: (60, 60),
    211: (48, 48), 223: (72, 72), 227: (112, 112), 229: (72, 72), 233: (112, 112),
    239: (96, 96), 241: (64, 64), 243: (54, 2916), 251: (100, 100), 256: (3072, 196608)
}


def _regenerate():
    from monoidaut import oracle, residue
    unit, monoid, gens = {}, {}, {}
    for p, e in residue.prime_powers(512):
        unit[p**e] = len(oracle.brute_monoid_automorphisms(oracle.unit_group_table(p, e)))
        monoid[p**e] = len(oracle.brute_monoid_automorphisms(oracle.monoid_table(p, e)))
    for p, e in residue.prime_powers(256):
        gens[p**e] = (len(oracle.brute_minimal_generating_sets(oracle.unit_group_table(p, e))),
                      len(oracle.brute_minimal_generating_sets(oracle.monoid_table(p, e))))
    return unit, monoid, gens


if __name__ == '__main__':
    import sys
    if '--regenerate' in sys.argv:
        u, m, g = _regenerate()
        print('ORACLE_UNIT_AUT =', u)
        print('ORACLE_MONOID_AUT =', m)
        print('ORACLE_MINGEN =', g)
