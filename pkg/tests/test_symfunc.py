import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropwitt.errors import ConstantTermError, DegreeOverflowError, FormatError, NotSymmetricError
from tropwitt.partitions import EMPTY, Partition, partitions_of, partitions_up_to
from tropwitt.symfunc import (
    SymFunc,
    TensorSymFunc,
    complete,
    coproduct_add,
    coproduct_mult,
    counit_add,
    counit_mult,
    elementary,
    expand_in_vars,
    from_polynomial,
    monomial,
    multiply,
    plethysm,
    poly_mul,
    tensor_counit_left,
    tensor_counit_right,
)

from oracles import naive_comult, nat_combination_exists, three_way_splittings

N = 8


def m(*parts, bound=N):
    return monomial(Partition(parts), bound)


def oracle_product(f, g):
    k = f.degree() + g.degree()
    return from_polynomial(
        poly_mul(expand_in_vars(f, k), expand_in_vars(g, k)), k, f.degree_bound
    )


# -- bases -------------------------------------------------------------------


def test_monomial_unit():
    assert m() == SymFunc.one(N)
    assert monomial(EMPTY, N).constant_term == 1


def test_elementary_is_column():
    assert elementary(2, N) == m(1, 1)
    assert elementary(0, N) == SymFunc.one(N)


def test_complete_examples():
    assert complete(2, N) == m(2) + m(1, 1)
    assert complete(0, N) == SymFunc.one(N)
    for n in range(1, N + 1):
        expected = SymFunc({lam: 1 for lam in partitions_of(n)}, N)
        assert complete(n, N) == expected


def test_basis_degree_overflow():
    with pytest.raises(DegreeOverflowError):
        monomial(Partition([9]), 8)
    with pytest.raises(DegreeOverflowError):
        complete(9, 8)


# -- expansion oracle ----------------------------------------------------------


def test_expand_single_orbits():
    assert expand_in_vars(m(2), 2) == {(2, 0): 1, (0, 2): 1}
    assert expand_in_vars(m(1, 1), 2) == {(1, 1): 1}
    assert expand_in_vars(m(1, 1, 1), 2) == {}


def test_from_polynomial_peels():
    p = {(2, 0): 1, (0, 2): 1, (1, 1): 2}
    assert from_polynomial(p, 2) == monomial(Partition([2]), 2) + 2 * monomial(
        Partition([1, 1]), 2
    )


def test_from_polynomial_rejects_asymmetric():
    with pytest.raises(NotSymmetricError):
        from_polynomial({(1, 0): 1}, 2)
    with pytest.raises(NotSymmetricError):
        from_polynomial({(2, 0): 1, (0, 2): 1, (1, 1): 1, (0, 0): 0, (2, 1): 1}, 2)


small_sym = st.dictionaries(
    st.lists(st.integers(1, 3), max_size=2).map(Partition),
    st.integers(1, 4),
    max_size=3,
).map(lambda d: SymFunc(d, 6))


@given(small_sym)
def test_expand_round_trip(f):
    k = 6
    assert from_polynomial(expand_in_vars(f, k), k, 6) == f


# -- product ----------------------------------------------------------------------


def test_product_examples():
    assert m(1) * m(2) == m(3) + m(2, 1)
    assert m(1) * m(1) == m(2) + 2 * m(1, 1)
    assert m() * m(2, 1) == m(2, 1)


def test_product_row_times_row():
    for n in range(1, 4):
        for np in range(1, 4):
            got = m(n) * m(np)
            if n == np:
                assert got == m(2 * n) + 2 * m(n, n)
            else:
                assert got == m(n + np) + m(n, np)


def test_product_matches_expansion_oracle_small_pairs():
    for mu in partitions_up_to(4):
        for nu in partitions_up_to(4):
            if mu.is_empty() or nu.is_empty() or mu.size + nu.size > 6:
                continue
            d = mu.size + nu.size
            f, g = monomial(mu, d), monomial(nu, d)
            assert multiply(f, g) == oracle_product(f, g), (mu, nu)


def test_rig_laws_against_oracle():
    rng = random.Random(7)
    basis = [lam for lam in partitions_up_to(3) if not lam.is_empty()]
    for _ in range(25):
        lams = [basis[rng.randrange(len(basis))] for _ in range(3)]
        if sum(l.size for l in lams) > 6:
            continue
        f, g, h = (monomial(l, 6) for l in lams)
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == oracle_product(oracle_product(f, g), h)
        assert f * (g + h) == oracle_product(f, g + h)


def test_truncation_silent_and_strict():
    f = monomial(Partition([2]), 3)
    assert f * f == SymFunc.zero(3)
    with pytest.raises(DegreeOverflowError):
        multiply(f, f, strict=True)
    g = monomial(Partition([1]), 3)
    # the in-bound part of a mixed product survives truncation
    assert (f + g) * g == g * g + f * g


def test_degree_bound_mismatch():
    with pytest.raises(ValueError):
        multiply(m(1), m(1, bound=6))
    with pytest.raises(ValueError):
        m(1) + m(1, bound=6)


# -- additive coproduct ------------------------------------------------------------


def test_coproduct_add_examples():
    for n in (1, 3, 8):
        assert dict(coproduct_add(m(n)).items()) == {
            (Partition([n]), EMPTY): 1,
            (EMPTY, Partition([n])): 1,
        }
    assert dict(coproduct_add(m(2, 1)).items()) == {
        (Partition([2, 1]), EMPTY): 1,
        (Partition([2]), Partition([1])): 1,
        (Partition([1]), Partition([2])): 1,
        (EMPTY, Partition([2, 1])): 1,
    }
    assert dict(coproduct_add(m()).items()) == {(EMPTY, EMPTY): 1}


def test_coproduct_add_matches_two_alphabet_oracle():
    for lam in partitions_up_to(6):
        if lam.is_empty():
            continue
        k = lam.size
        poly = expand_in_vars(monomial(lam, k), 2 * k)
        rebuilt = {}
        for (mu, nu), c in coproduct_add(monomial(lam, k)).items():
            for el in expand_in_vars(monomial(mu, k), k):
                for er in expand_in_vars(monomial(nu, k), k):
                    key = el + er
                    rebuilt[key] = rebuilt.get(key, 0) + c
        assert rebuilt == poly, lam


def test_coproduct_add_bidegrees_split_the_degree():
    for lam in partitions_up_to(6):
        for (mu, nu), _ in coproduct_add(monomial(lam, 6)).items():
            assert mu.size + nu.size == lam.size


def test_coproduct_add_coassociative():
    for lam in partitions_up_to(5):
        left = {}
        right = {}
        for (mu, nu), c in coproduct_add(monomial(lam, 5)).items():
            for (a, b), d in coproduct_add(monomial(mu, 5)).items():
                left[(a, b, nu)] = left.get((a, b, nu), 0) + c * d
            for (a, b), d in coproduct_add(monomial(nu, 5)).items():
                right[(mu, a, b)] = right.get((mu, a, b), 0) + c * d
        assert left == right == dict(three_way_splittings(lam))


def test_counit_add_is_counit_for_coproduct_add():
    for lam in partitions_up_to(6):
        f = monomial(lam, 6)
        assert tensor_counit_left(coproduct_add(f), "add") == f
        assert tensor_counit_right(coproduct_add(f), "add") == f


# -- multiplicative coproduct ----------------------------------------------------------


def test_coproduct_mult_examples():
    for n in range(1, N + 1):
        assert dict(coproduct_mult(m(n)).items()) == {
            (Partition([n]), Partition([n])): 1
        }
    assert dict(coproduct_mult(m(1, 1)).items()) == {
        (Partition([2]), Partition([1, 1])): 1,
        (Partition([1, 1]), Partition([2])): 1,
        (Partition([1, 1]), Partition([1, 1])): 2,
    }


def test_coproduct_mult_matches_naive_doubled_alphabet():
    for lam in partitions_up_to(4):
        if lam.is_empty():
            continue
        got = {pair: c for pair, c in coproduct_mult(monomial(lam, 4)).items()}
        assert got == naive_comult(lam), lam


def test_coproduct_mult_preserves_degree_on_both_sides():
    for lam in partitions_up_to(6):
        for (mu, nu), _ in coproduct_mult(monomial(lam, 6)).items():
            assert mu.size == lam.size and nu.size == lam.size


def test_counit_mult_is_counit_for_coproduct_mult():
    for lam in partitions_up_to(6):
        f = monomial(lam, 6)
        assert tensor_counit_left(coproduct_mult(f), "mult") == f
        assert tensor_counit_right(coproduct_mult(f), "mult") == f


def test_coproduct_mult_coassociative():
    for lam in partitions_up_to(4):
        left = {}
        right = {}
        for (mu, nu), c in coproduct_mult(monomial(lam, 4)).items():
            for (a, b), d in coproduct_mult(monomial(mu, 4)).items():
                left[(a, b, nu)] = left.get((a, b, nu), 0) + c * d
            for (a, b), d in coproduct_mult(monomial(nu, 4)).items():
                right[(mu, a, b)] = right.get((mu, a, b), 0) + c * d
        assert left == right, lam


# -- counits ------------------------------------------------------------------------------


def test_counit_values():
    for lam in partitions_up_to(6):
        f = monomial(lam, 6)
        assert counit_add(f) == (1 if lam.is_empty() else 0)
        assert counit_mult(f) == (1 if lam.is_empty() or lam.is_row() else 0)
    assert counit_mult(complete(2, N)) == 1
    assert counit_add(complete(2, N)) == 0


# -- composition ----------------------------------------------------------------------------


def test_plethysm_rows():
    assert plethysm(m(2), m(3)) == m(6)
    for n in range(1, 5):
        for np in range(1, 5):
            if n * np <= N:
                assert plethysm(m(n), m(np)) == m(n * np)


@given(small_sym)
def test_plethysm_unit_laws(f):
    one_var = monomial(Partition([1]), 6)
    assert plethysm(f, one_var) == f
    if f.constant_term == 0:
        assert plethysm(one_var, f) == f


def test_plethysm_on_sums():
    # e_2 composed with m_(1)+m_(2) in enough variables: exact small case
    inner = m(1) + m(2)
    got = plethysm(m(1, 1), inner)
    # pairs of distinct alphabet entries: x_i x_j, x_i y_j^2, y_i^2 y_j^2 orbits
    want = oracle_product(inner, inner)
    # m_(1,1)(a_1, a_2, ...) = e_2 of the alphabet = (S^2 - sum of squares)/2
    squares = plethysm(m(2), inner)
    assert 2 * got + squares == want
    assert plethysm(elementary(2, N), inner) == got


def test_plethysm_is_rig_hom_in_left_argument():
    g = m(2)
    for mu in partitions_up_to(2):
        for nu in partitions_up_to(2):
            if mu.is_empty() or nu.is_empty():
                continue
            f1, f2 = monomial(mu, 8), monomial(nu, 8)
            assert plethysm(f1 + f2, g) == plethysm(f1, g) + plethysm(f2, g)
            assert plethysm(f1 * f2, g) == plethysm(f1, g) * plethysm(f2, g)


def test_plethysm_rejects_constant_term():
    with pytest.raises(ConstantTermError):
        plethysm(m(2), m() + m(1))


def test_plethysm_degree_overflow():
    with pytest.raises(DegreeOverflowError):
        plethysm(m(3), m(3))


def test_plethysm_zero_inner():
    assert plethysm(m(2), SymFunc.zero(N)) == SymFunc.zero(N)
    assert plethysm(m() + m(2), SymFunc.zero(N)) == SymFunc.one(N)


# -- the e-basis does not span over ℕ ------------------------------------------------------------


def test_monomial_not_natural_combination_of_elementary_products():
    def generators(n):
        out = []
        for mu in partitions_of(n):
            prod = SymFunc.one(n)
            for part in mu:
                prod = prod * elementary(part, n)
            out.append(dict(prod.items()))
        return out

    witnesses = {
        n: [
            lam
            for lam in partitions_of(n)
            if not nat_combination_exists({lam: 1}, generators(n))
        ]
        for n in (2, 3, 4)
    }
    assert all(witnesses[n] for n in witnesses)
    assert Partition([2]) in witnesses[2]
    # sanity: e_2 itself is reachable
    assert nat_combination_exists({Partition([1, 1]): 1}, generators(2))


# -- serialization -------------------------------------------------------------------------------


def test_symfunc_json_round_trip():
    f = 3 * m(2, 1) + m() + 2 * m(4)
    data = f.to_json()
    assert data == {"degree_bound": 8, "coeffs": {"": 1, "2,1": 3, "4": 2}}
    assert SymFunc.from_json(data) == f


def test_tensor_json_round_trip():
    t = coproduct_add(m(2, 1))
    assert TensorSymFunc.from_json(t.to_json()) == t
    keys = list(t.to_json()["coeffs"])
    assert "2,1|" in keys and "|2,1" in keys and "1|2" in keys


def test_symfunc_json_rejects_bad_inputs():
    with pytest.raises(FormatError):
        SymFunc.from_json({"coeffs": {}})
    with pytest.raises(FormatError):
        SymFunc.from_json({"degree_bound": 4, "coeffs": {"2,1": -1}})
    with pytest.raises(FormatError):
        SymFunc.from_json({"degree_bound": 4, "coeffs": {"9": 1}})
    with pytest.raises(FormatError):
        TensorSymFunc.from_json({"degree_bound": 4, "coeffs": {"2,1": 1}})


def test_scalar_and_zero():
    f = m(2) + m(1, 1)
    assert 0 * f == SymFunc.zero(N)
    assert f + SymFunc.zero(N) == f
    with pytest.raises(ValueError):
        f.scale(-1)
