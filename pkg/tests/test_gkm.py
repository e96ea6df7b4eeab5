from __future__ import annotations

import json
import random
from itertools import combinations_with_replacement, permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqloc.exact import LaurentPoly, ResidualDenominator, zeta
from eqloc.gkm import (
    EquivClass,
    FiberedFixedPointData,
    FixedPointData,
    WeylData,
    complete_homogeneous,
    euler_class_expansion,
    fiberwise_pushforward,
    flag_data,
    flag_fibration,
    flag_variables,
    invertible_at,
    is_symmetric,
    lambda_minus_one,
    line_bundle_class,
    o_d_class,
    point_class,
    projective_space_data,
    pushforward_to_point,
    random_symmetric,
    schur_polynomial,
    semistandard_tableaux,
    verify_prop36,
    weyl_dimension,
)
from eqloc.groups import DescriptorError


def forms_character(variables, d):
    """Character of degree-d forms by listing monomials."""
    terms = {}
    for combo in combinations_with_replacement(range(len(variables)), d):
        e = [0] * len(variables)
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return LaurentPoly(variables, terms)


def bialternant(variables, lam):
    """Numerator and denominator alternants of s_lambda."""
    n = len(variables)

    def alt(exps):
        out = LaurentPoly(variables)
        for perm in permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            e = [0] * n
            for i in range(n):
                e[perm[i]] += exps[i]
            out = out + LaurentPoly.monomial(variables, e, sign)
        return out

    return alt([lam[j] + n - 1 - j for j in range(n)]), alt([n - 1 - j for j in range(n)])


# -- lambda_{-1} ---------------------------------------------------------------------------------
def test_lambda_minus_one_examples():
    v = ("x0", "x1")
    one = LaurentPoly.constant(v, 1)
    assert lambda_minus_one(v, []) == one
    assert lambda_minus_one(v, [(1, -1)]) == one - LaurentPoly.monomial(v, (-1, 1))
    single = one - LaurentPoly.monomial(v, (-1, 1))
    assert lambda_minus_one(v, [(1, -1), (1, -1)]) == single * single


# -- pushforward to a point ----------------------------------------------------------------------
def test_pushforward_examples():
    data = projective_space_data(1)
    assert pushforward_to_point(o_d_class(data, 1)) == LaurentPoly(("x0", "x1"), {(1, 0): 1, (0, 1): 1})
    for n in range(4):
        d = projective_space_data(n)
        assert pushforward_to_point(EquivClass.constant(d, 1)) == LaurentPoly.constant(d.variables, 1)
    pt = FixedPointData.point(("t",))
    assert pushforward_to_point(EquivClass.constant(pt, zeta(5))) == LaurentPoly.constant(("t",), zeta(5))


@pytest.mark.parametrize("n", range(5))
def test_pn_collapse_matches_forms(n):
    data = projective_space_data(n)
    for d in range(7):
        got = pushforward_to_point(o_d_class(data, d))
        assert got == forms_character(data.variables, d) == complete_homogeneous(data.variables, d)
        assert is_symmetric(got)


def test_pn_examples():
    h2 = pushforward_to_point(o_d_class(projective_space_data(2), 2))
    assert len(h2.terms) == 6
    assert pushforward_to_point(o_d_class(projective_space_data(3), 0)) == LaurentPoly.constant(projective_space_data(3).variables, 1)


def test_non_genuine_class_leaves_denominator():
    data = projective_space_data(1)
    half = EquivClass(data, [LaurentPoly.constant(data.variables, 1), LaurentPoly(data.variables)])
    with pytest.raises(ResidualDenominator):
        pushforward_to_point(half)


@given(st.integers(1, 3), st.lists(st.integers(0, 4), min_size=1, max_size=3), st.integers(-2, 2))
@settings(max_examples=30, deadline=None)
def test_collapse_of_sums_and_products(n, degrees, shift):
    data = projective_space_data(n)
    cls = EquivClass.constant(data, shift)
    prod = EquivClass.constant(data, 1)
    for d in degrees:
        cls = cls + o_d_class(data, d)
        prod = prod * o_d_class(data, d)
    expect = LaurentPoly.constant(data.variables, shift)
    for d in degrees:
        expect = expect + forms_character(data.variables, d)
    assert pushforward_to_point(cls) == expect
    assert pushforward_to_point(prod) == forms_character(data.variables, sum(degrees))


# -- flags ----------------------------------------------------------------------------------------
def test_flag_examples():
    w2 = WeylData.full(2)
    assert len(flag_data(w2).points) == 2
    v2 = tuple(flag_variables(2))
    assert pushforward_to_point(line_bundle_class(w2, (1, 0))) == schur_polynomial(v2, (1,))
    assert pushforward_to_point(line_bundle_class(w2, (1, 0))) == LaurentPoly(v2, {(1, 0): 1, (0, 1): 1})
    w3 = WeylData.full(3)
    s21 = pushforward_to_point(line_bundle_class(w3, (2, 1, 0)))
    assert s21 == schur_polynomial(flag_variables(3), (2, 1))
    assert len(s21.terms) == 7 and s21.coefficient_sum() == 8 == weyl_dimension((2, 1, 0))
    assert pushforward_to_point(line_bundle_class(w3, (0, 0, 0))) == LaurentPoly.constant(flag_variables(3), 1)


def test_flag_bad_inputs():
    with pytest.raises(ValueError):
        WeylData(3, (2, 2))
    with pytest.raises(ValueError):
        WeylData(0, ())
    with pytest.raises(ValueError):
        line_bundle_class(WeylData(3, (2, 1)), (1, 0, 0))
    with pytest.raises(ValueError):
        line_bundle_class(WeylData.full(3), (1, 0))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_weyl_character_formula(n):
    variables = flag_variables(n)
    for lam in product(range(4), repeat=n):
        if list(lam) != sorted(lam, reverse=True):
            continue
        got = pushforward_to_point(line_bundle_class(WeylData.full(n), lam))
        assert got == schur_polynomial(variables, lam)
        num, den = bialternant(variables, lam)
        assert got * den == num
        assert got.coefficient_sum() == weyl_dimension(lam)
        assert is_symmetric(got)


def test_semistandard_tableaux_counts():
    assert len(list(semistandard_tableaux((2, 1), 3))) == 8
    assert len(list(semistandard_tableaux((1, 1, 1), 3))) == 1
    assert len(list(semistandard_tableaux((2,), 2))) == 3


@pytest.mark.parametrize("comp", [(1, 1), (1, 1, 1), (2, 1), (1, 2)])
def test_flag_projection_identities(comp):
    weyl = WeylData(sum(comp), comp)
    rng = random.Random(f"projection:{comp}")
    variables = flag_variables(weyl.n)
    samples = [LaurentPoly.constant(variables, 1), LaurentPoly(variables)]
    samples += [random_symmetric(variables, rng) for _ in range(5)]
    for alpha in samples:
        assert is_symmetric(alpha)
        report = verify_prop36(weyl, alpha)
        assert report["pass"], [c["name"] for c in report["checks"] if not c["pass"]]
    assert verify_prop36(weyl, samples[0])["weyl_order"] in (2, 6)


def test_flag_projection_examples():
    v2 = flag_variables(2)
    report = verify_prop36(WeylData.full(2), LaurentPoly(v2, {(1, 0): 1, (0, 1): 1}))
    assert report["checks"][0]["actual"] == LaurentPoly(v2, {(1, 0): 2, (0, 1): 2})
    report = verify_prop36(WeylData(3, (2, 1)), LaurentPoly.constant(flag_variables(3), 1))
    assert report["checks"][1]["actual"] == LaurentPoly.constant(flag_variables(3), 3)
    assert report["levi_weyl_order"] == 2


def test_fibration_shape():
    fib = flag_fibration(WeylData(3, (2, 1)))
    assert len(fib.source.points) == 6 and len(fib.target.points) == 3
    assert all(len(fib.fiber(q)) == 2 for q in range(3))
    same = flag_fibration(WeylData.full(3))
    beta = line_bundle_class(WeylData.full(3), (2, 1, 0))
    assert fiberwise_pushforward(same, beta) == beta


@pytest.mark.parametrize("comp", [(2, 1), (1, 2), (3,)])
def test_functoriality(comp):
    weyl = WeylData(3, comp)
    fib = flag_fibration(weyl)
    for lam in [(0, 0, 0), (1, 0, 0), (2, 1, 0), (3, 1, 1)]:
        beta = line_bundle_class(WeylData.full(3), lam)
        assert pushforward_to_point(fiberwise_pushforward(fib, beta)) == pushforward_to_point(beta)
    to_pt = FiberedFixedPointData.to_point(fib.source)
    beta = line_bundle_class(WeylData.full(3), (2, 1, 0))
    assert fiberwise_pushforward(to_pt, beta).polynomials()[0] == pushforward_to_point(beta)


def test_fiberwise_residual():
    fib = flag_fibration(WeylData(2, (2,)))
    v = fib.source.variables
    odd = EquivClass(fib.source, [LaurentPoly.constant(v, 1), LaurentPoly(v)])
    with pytest.raises(ResidualDenominator):
        fiberwise_pushforward(fib, odd)
    assert not fiberwise_pushforward(fib, odd, collapse=False).restrictions[0].is_polynomial()


def test_fibration_rejects_bad_tangent():
    p1 = projective_space_data(1)
    with pytest.raises(ValueError):
        FiberedFixedPointData(p1, FixedPointData.point(p1.variables), (0, 0), ((), ()))


# -- Euler class expansion ----------------------------------------------------------------------
@pytest.mark.parametrize("data", [projective_space_data(n) for n in range(4)]
                         + [flag_data(WeylData(n, c)) for n, c in [(2, (1, 1)), (3, (1, 1, 1)), (3, (2, 1)), (3, (1, 2))]],
                         ids=lambda d: f"{len(d.variables)}vars-{len(d.points)}pts")
def test_euler_class_expansion(data):
    out = euler_class_expansion(data)
    assert out["pass"] and out["expansion_ok"] and out["point_pushforwards_ok"]
    assert out["euler_pushforward"] == LaurentPoly.constant(data.variables, len(data.points))


def test_point_class_example():
    data = projective_space_data(1)
    assert pushforward_to_point(point_class(data, 0)) == LaurentPoly.constant(data.variables, 1)
    assert euler_class_expansion(flag_data(WeylData.full(2)))["euler_pushforward"] == LaurentPoly.constant(flag_variables(2), 2)
    assert euler_class_expansion(projective_space_data(2))["euler_pushforward"] == LaurentPoly.constant(projective_space_data(2).variables, 3)


# -- invertibility ------------------------------------------------------------------------------
def test_invertible_at():
    assert invertible_at([(1, -1)], [1, zeta(3)])
    assert not invertible_at([(1, -1)], [1, 1])
    assert invertible_at([], [1, 1])
    for n in range(1, 4):
        data = projective_space_data(n)
        point = [zeta(n + 1, i) for i in range(n + 1)]
        for p in data.points:
            assert invertible_at(p.tangent, point, data.variables)


# -- data validation and JSON -------------------------------------------------------------------
def test_fixed_point_data_validation():
    with pytest.raises(ValueError):
        FixedPointData.build(("x",), [("p", [(0,)])])
    with pytest.raises(ValueError):
        FixedPointData.build(("x",), [])


def test_fixed_point_json_roundtrip():
    data = flag_data(WeylData(3, (2, 1)))
    text = json.dumps(data.to_json())
    assert FixedPointData.from_json(json.loads(text)) == data
    cls = line_bundle_class(WeylData.full(3), (2, 1, 0))
    assert json.loads(json.dumps(cls.to_json())) == cls.to_json()


@pytest.mark.parametrize("obj,pointer", [
    ([], ""),
    ({"variables": "x", "points": []}, "/variables"),
    ({"variables": ["x"], "points": []}, "/points"),
    ({"variables": ["x"], "points": [{"label": "p"}]}, "/points/0"),
    ({"variables": ["x"], "points": [{"label": "p", "tangent": [[0]]}]}, "/points/0/tangent/0"),
    ({"variables": ["x"], "points": [{"label": "p", "tangent": [[1, 2]]}]}, "/points/0/tangent/0"),
])
def test_fixed_point_json_errors(obj, pointer):
    with pytest.raises(DescriptorError) as info:
        FixedPointData.from_json(obj)
    assert info.value.pointer == pointer
