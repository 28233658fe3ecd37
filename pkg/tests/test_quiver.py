import pytest
from hypothesis import given
from hypothesis import strategies as st

from quivercone.errors import (
    CyclicQuiverError,
    DuplicateIdError,
    MismatchedQuiverError,
)
from quivercone.quiver import (
    OrderedDecomposition,
    canonical_weight,
    euler_form,
    mu,
    quiver_from_dict,
    realign,
    validate_quiver,
    vec_add,
    vec_primitive,
    vectors_below,
    weight_apply,
    z_from_ordered,
)

small_int = st.integers(min_value=-5, max_value=5)


def vecs(n):
    return st.tuples(*([small_int] * n))


def test_topological_order_is_canonical():
    q1 = validate_quiver(["x", "y"], [("a", "x", "y")])
    q2 = validate_quiver(["y", "x"], [("a", "x", "y")])
    assert q1.vertices == q2.vertices == ("x", "y")


def test_cycle_detected():
    with pytest.raises(CyclicQuiverError):
        validate_quiver(["1", "2"], [("a", "1", "2"), ("b", "2", "1")])


def test_duplicate_ids_rejected():
    with pytest.raises(DuplicateIdError):
        validate_quiver(["1", "1"], [])
    with pytest.raises(DuplicateIdError):
        validate_quiver(["1", "2"], [("a", "1", "2"), ("a", "1", "2")])


def test_unknown_endpoint_rejected():
    with pytest.raises(MismatchedQuiverError):
        validate_quiver(["1", "2"], [("a", "1", "3")])


def test_vector_length_checked(a2):
    with pytest.raises(MismatchedQuiverError):
        a2.check_vector((1, 1, 1))


def test_realign_matches_declared_order():
    q = quiver_from_dict(
        {
            "vertices": ["b", "a"],
            "arrows": [{"id": "f", "tail": "b", "head": "a"}],
        }
    )
    # canonical order puts the source first
    assert q.vertices == ("b", "a")
    assert realign(q, ["b", "a"], (3, 7)) == (3, 7)
    assert realign(q, ["a", "b"], (3, 7)) == (7, 3)


def test_euler_form_values(a2, a3, k2, k3):
    assert euler_form(a2, (1, 1), (1, 1)) == 1
    assert euler_form(a2, (1, 0), (0, 1)) == -1
    assert euler_form(a2, (0, 1), (1, 0)) == 0
    assert euler_form(k2, (1, 1), (1, 1)) == 0
    assert euler_form(k3, (1, 1), (1, 1)) == -1
    assert euler_form(a3, (1, 1, 1), (1, 1, 1)) == 1


@given(a=vecs(3), b=vecs(3), c=vecs(3))
def test_euler_form_bilinear(a, b, c):
    q = validate_quiver(["1", "2", "3"], [("a", "1", "2"), ("b", "2", "3")])
    assert euler_form(q, vec_add(a, b), c) == euler_form(q, a, c) + euler_form(q, b, c)
    assert euler_form(q, a, vec_add(b, c)) == euler_form(q, a, b) + euler_form(q, a, c)


def test_canonical_weight(a2, k2):
    assert canonical_weight(a2, (1, 1)) == (1, -1)
    assert canonical_weight(k2, (2, 2)) == (4, -4)
    assert canonical_weight(k2, (1, 1)) == (2, -2)


def test_canonical_weight_kills_beta(a2, a3, k2, k3):
    for q, beta in [(a2, (2, 3)), (a3, (1, 2, 1)), (k2, (3, 1)), (k3, (2, 2))]:
        assert weight_apply(q, canonical_weight(q, beta), beta) == 0


def test_vectors_below_is_a_box():
    below = vectors_below((1, 2))
    assert below == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]


def test_vec_primitive():
    assert vec_primitive((2, -4)) == (1, -2)
    assert vec_primitive((0, 0)) == (0, 0)
    assert vec_primitive((0, 3)) == (0, 1)


def test_ordered_decomposition_rejects_zero_part():
    with pytest.raises(MismatchedQuiverError):
        OrderedDecomposition(((1, 0), (0, 0)))


def test_mu_first_part_highest(a2):
    d = OrderedDecomposition(((0, 1), (1, 0)))
    # weights 2 and 1 on the parts
    assert mu(1, a2, (1, -1), d) == 2 * (-1) + 1 * 1
    assert mu(5, a2, (1, -1), d) == mu(1, a2, (1, -1), d)


@given(s1=vecs(2), s2=vecs(2))
def test_mu_linear_in_sigma(s1, s2):
    q = validate_quiver(["1", "2"], [("a", "1", "2")])
    d = OrderedDecomposition(((1, 1), (1, 0), (0, 1)))
    assert mu(1, q, vec_add(s1, s2), d) == mu(1, q, s1, d) + mu(1, q, s2, d)


def test_z_from_ordered_roundtrip():
    d = OrderedDecomposition(((1, 1), (1, 0), (0, 1)))
    z = z_from_ordered(d)
    assert z == {3: (1, 1), 2: (1, 0), 1: (0, 1)}
    rebuilt = tuple(z[k] for k in sorted(z, reverse=True))
    assert rebuilt == d.parts
