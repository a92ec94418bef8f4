"""
Acceptance criteria, one test per criterion.

The checks live in :mod:`qwparrondo.verification` (also run by ``qwalk verify``);
each result line is printed in the pytest terminal summary.
"""

import pytest

from qwparrondo import verification as v

RESULTS = []


def test_tolerances_are_pinned():
    assert v.ALGEBRA_TOL == 1e-12
    assert v.SYMMETRY_TOL == 1e-10
    assert v.VARIANCE_REL_TOL == 0.05
    assert v.NARROW_LOSS_BOUND == 0.1


@pytest.mark.parametrize("index, check", list(enumerate(v.CHECKS)), ids=[c.__name__ for c in v.CHECKS])
def test_criterion(index, check, numpy_rng_for):
    result = check(numpy_rng_for(index))
    RESULTS.append(result)
    print(result.line())
    assert result.passed, result.line()
