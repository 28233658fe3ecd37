import pytest

from quivercone.errors import NotBelowError
from quivercone.homext import (
    canonical_decomposition,
    ext_recursive,
    generic_hom,
    generic_subdims,
    hom_ext_recursive,
    is_generic_subdim,
    is_rational_schur_root,
    is_schur_root,
)
from quivercone.quiver import euler_form, vectors_below


def test_generic_subdims_a2(a2):
    assert generic_subdims(a2, (1, 1)) == ((0, 0), (0, 1), (1, 1))
    assert generic_subdims(a2, (2, 2)) == (
        (0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2),
    )


def test_generic_subdims_k2(k2):
    # (2,1) is not generic inside (2,2): a general pair of maps has no
    # 2-dimensional source subspace mapping into a line
    subs = generic_subdims(k2, (2, 2))
    assert (2, 1) not in subs
    assert subs == ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


def test_generic_subdims_a3(a3):
    subs = generic_subdims(a3, (1, 1, 1))
    assert subs == ((0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1))


def test_is_generic_subdim_bounds(a2):
    with pytest.raises(NotBelowError):
        is_generic_subdim(a2, (2, 0), (1, 1))


def test_ext_values(a2, k2, k3):
    assert ext_recursive(a2, (1, 0), (0, 1)) == 1
    assert ext_recursive(a2, (0, 1), (1, 0)) == 0
    assert ext_recursive(k2, (1, 1), (1, 1)) == 0
    assert ext_recursive(k3, (1, 1), (1, 1)) == 1


def test_hom_ext_euler(a2, k2):
    for q in (a2, k2):
        for a in vectors_below((2, 2)):
            for b in vectors_below((2, 2)):
                r = hom_ext_recursive(q, a, b)
                assert r.hom - r.ext == euler_form(q, a, b)
                assert r.hom >= 0 and r.ext >= 0


def test_sampled_agrees_with_recursive(k2):
    for a in vectors_below((2, 2)):
        for b in vectors_below((2, 2)):
            r = hom_ext_recursive(k2, a, b)
            s = generic_hom(k2, a, b)
            assert (r.hom, r.ext) == (s.hom, s.ext), (a, b)


def test_schur_roots(a2, a3, k2, k3):
    assert is_schur_root(a2, (1, 1))
    assert not is_schur_root(a2, (1, 2))
    assert not is_schur_root(a2, (2, 2))
    assert is_schur_root(k2, (1, 1))
    assert is_schur_root(k2, (1, 2))
    assert not is_schur_root(k2, (2, 2))
    assert is_schur_root(k3, (2, 2))  # imaginary root of the 3-Kronecker form
    assert is_schur_root(a3, (1, 1, 1))
    assert not is_schur_root(a3, (1, 0, 1))


def test_rational_schur_roots(k2, a2):
    assert is_rational_schur_root(k2, (2, 2))
    assert is_rational_schur_root(k2, (3, 3))
    assert is_rational_schur_root(a2, (2, 2))  # (1,1) is Schur
    assert not is_rational_schur_root(a2, (2, 4))  # (1,2) is not


def test_canonical_decomposition(a2, a3, k2):
    assert canonical_decomposition(a2, (1, 1)) == ((1, 1),)
    assert canonical_decomposition(a2, (2, 1)) == ((1, 1), (1, 0))
    assert canonical_decomposition(a2, (2, 2)) == ((1, 1), (1, 1))
    assert canonical_decomposition(k2, (2, 2)) == ((1, 1), (1, 1))
    assert canonical_decomposition(a3, (1, 0, 1)) == ((1, 0, 0), (0, 0, 1))


def test_canonical_decomposition_sums(a3, k3):
    for q, bound in ((a3, (2, 2, 2)), (k3, (2, 2))):
        for b in vectors_below(bound):
            if all(x == 0 for x in b):
                continue
            parts = canonical_decomposition(q, b)
            total = tuple(sum(p[i] for p in parts) for i in range(q.n))
            assert total == b
            for p in parts:
                assert is_schur_root(q, p)
            for i, p in enumerate(parts):
                for j, r in enumerate(parts):
                    if i != j:
                        assert ext_recursive(q, p, r) == 0


def test_zero_vector_rejected(a2):
    with pytest.raises(NotBelowError):
        canonical_decomposition(a2, (0, 0))
    with pytest.raises(NotBelowError):
        is_schur_root(a2, (0, 0))
