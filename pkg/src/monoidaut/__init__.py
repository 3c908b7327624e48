"""Automorphisms of the multiplicative monoid Z/p^eZ and of its unit group.

Closed-form parameterizations live in ``unit_aut`` and ``monoid_aut``;
``oracle`` holds classification-agnostic brute-force counterparts used to
cross-check them, and ``structure`` certifies group decompositions with
explicit isomorphism witnesses.
"""
from .residue import *  # noqa: F401,F403
from .oracle import *  # noqa: F401,F403
from .unit_aut import *  # noqa: F401,F403
from .structure import *  # noqa: F401,F403
from .monoid_aut import *  # noqa: F401,F403
from .verify import SUITES, SuiteResult, run_suite

__version__ = '0.1.0'
