import pytest

from quivercone.errors import BudgetError
from quivercone.semiinv import si_weights_by_degree


def by_sigma(spaces):
    return {w.sigma: w.dims_by_degree for w in spaces}


def test_a2_11(a2):
    d = by_sigma(si_weights_by_degree(a2, (1, 1), 3))
    assert d == {
        (0, 0): {0: 1},
        (1, -1): {1: 1},
        (2, -2): {2: 1},
        (3, -3): {3: 1},
    }


def test_k2_11(k2):
    d = by_sigma(si_weights_by_degree(k2, (1, 1), 2))
    # two independent coordinates of weight (1,-1), their degree-2 monomials
    assert d[(1, -1)] == {1: 2}
    assert d[(2, -2)] == {2: 3}


def test_a2_21_only_constants(a2):
    # Sigma(A_2,(2,1)) = {0}; no nonconstant semi-invariants in low degree
    d = by_sigma(si_weights_by_degree(a2, (2, 1), 4))
    assert d == {(0, 0): {0: 1}}


def test_a2_22_powers_of_det(a2):
    d = by_sigma(si_weights_by_degree(a2, (2, 2), 4))
    assert d == {
        (0, 0): {0: 1},
        (1, -1): {2: 1},
        (2, -2): {4: 1},
    }


def test_k2_22(k2):
    d = by_sigma(si_weights_by_degree(k2, (2, 2), 6))
    # det(xA + yB) has 3 coefficients; their degree-k products stay independent
    assert d[(1, -1)] == {2: 3}
    assert d[(2, -2)] == {4: 6}
    assert d[(3, -3)] == {6: 10}
    assert set(d) == {(0, 0), (1, -1), (2, -2), (3, -3)}


def test_a3_111(a3):
    d = by_sigma(si_weights_by_degree(a3, (1, 1, 1), 2))
    assert d[(1, -1, 0)] == {1: 1}
    assert d[(0, 1, -1)] == {1: 1}
    assert d[(1, 0, -1)] == {2: 1}


def test_dmax_budget(a2):
    with pytest.raises(BudgetError):
        si_weights_by_degree(a2, (1, 1), 9)


def test_deterministic(k2):
    a = si_weights_by_degree(k2, (2, 2), 4, seed=5)
    b = si_weights_by_degree(k2, (2, 2), 4, seed=5)
    assert a == b
