from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqloc.exact.cyclotomic import CycNumber, zeta
from eqloc.groups import MatrixRep, builtin_group
from eqloc.groups.subgroups import subgroup_classes
from eqloc.gset import (
    EquivariantMap,
    EquivSheafOnGSet,
    GSet,
    MixedSpace,
    StabilizerClass,
    build_stabilizer,
    central_summand,
    central_summand_direct,
    class_from_sheaf,
    decompose,
    invariants,
    irreducible_sheaves,
    localize_via_fixed_locus,
    localize_via_sheaves,
    morita,
    morita_inverse,
    nonabelian_localize,
    pullback,
    pushforward,
    rr_gset_sector,
    sheaf_invariant_dimensions,
    sheaf_pullback,
    sheaf_pushforward,
    sheaf_tensor,
    slice_model,
    stabilizer_of,
    twist_central,
    twist_on_slice,
    twist_via_reps,
)
from eqloc.suite import _random_sheaf, coset_map, transitive_gsets


@pytest.fixture(scope="module")
def s3():
    return builtin_group("S3")


@pytest.fixture(scope="module")
def natural(s3):
    return GSet.natural(s3)


def el(group, perm):
    return group.index[tuple(perm)]


def classes_by_size(group):
    return {c.size: c for c in group.conjugacy_classes}


def sign_sheaf(x):
    # sign rep of the stabilizer {e, (23)} of point 1
    g = x.group
    return EquivSheafOnGSet.from_generator_images(x, {0: {el(g, (0, 2, 1)): [[-1]]}})


# -- build_stabilizer --------------------------------------------------------------------------
def test_stabilizer_natural(s3, natural):
    s = build_stabilizer(natural)
    assert len(s) == 6
    expected = {(0, 0), (0, 1), (0, 2), (el(s3, (0, 2, 1)), 0), (el(s3, (2, 1, 0)), 1), (el(s3, (1, 0, 2)), 2)}
    assert set(s.pairs) == expected
    assert len(s.orbits) == 2


def test_stabilizer_trivial_and_free(s3):
    z2 = builtin_group("Z2")
    s = build_stabilizer(GSet.point(z2))
    assert len(s) == 2 and len(s.orbits) == 2
    free = build_stabilizer(GSet.regular(s3))
    assert all(g == 0 for g, _ in free.pairs) and len(free.orbits) == 1


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "A4"])
def test_slices_partition(name):
    group = builtin_group(name)
    for _, x in transitive_gsets(group):
        s = build_stabilizer(x)
        pieces = [set(s.slice(c)) for c in group.conjugacy_classes]
        assert sum(len(p) for p in pieces) == len(s)
        assert set().union(*pieces) == set(s.pairs)
        for c, piece in zip(group.conjugacy_classes, pieces):
            for k in range(len(group)):
                assert {s.move(k, p) for p in piece} == piece


# -- class_from_sheaf --------------------------------------------------------------------------
def test_class_from_sheaf_examples(s3, natural):
    assert class_from_sheaf(EquivSheafOnGSet.structure_sheaf(natural)) == StabilizerClass.constant(stabilizer_of(natural), 1)
    beta = class_from_sheaf(sign_sheaf(natural))
    assert beta(el(s3, (1, 0, 2)), 2) == -1
    assert beta(0, 2) == 1
    stab = natural.stabilizer_groups[0]
    regular = MatrixRep.permutation(stab, lambda g, i: stab.table[g][i], len(stab))
    reg = class_from_sheaf(EquivSheafOnGSet(natural, {0: regular}))
    assert [reg(g, x) for g, x in stabilizer_of(natural).pairs] == [2 if g == 0 else 0 for g, _ in stabilizer_of(natural).pairs]


# -- pushforward / pullback --------------------------------------------------------------------
def test_pushforward_examples(s3, natural):
    one = StabilizerClass.constant(stabilizer_of(natural), 1)
    assert pushforward(EquivariantMap.identity(natural), one) == one
    pt = pushforward(EquivariantMap.to_point(natural), one)
    sizes = classes_by_size(s3)
    assert [pt(sizes[k].representative, 0) for k in (1, 3, 2)] == [3, 1, 0]
    reg = GSet.regular(s3)
    free = pushforward(EquivariantMap.to_point(reg), StabilizerClass.constant(stabilizer_of(reg), 1))
    assert [free(g, 0) for g in range(6)] == [6, 0, 0, 0, 0, 0]


def test_pullback_examples(natural):
    q = EquivariantMap.to_point(natural)
    c = StabilizerClass.constant(stabilizer_of(q.target), zeta(3))
    assert pullback(q, c) == StabilizerClass.constant(stabilizer_of(natural), zeta(3))
    beta = class_from_sheaf(sign_sheaf(natural))
    assert pullback(EquivariantMap.identity(natural), beta) == beta


def _random_class(x, rng):
    sheaves = irreducible_sheaves(x)
    out = StabilizerClass(stabilizer_of(x))
    for s in sheaves:
        out = out + class_from_sheaf(s) * rng.randint(-3, 3)
    return out


@given(st.sampled_from(["S3", "D4", "Q8", "A4"]), st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_projection_formula_and_ring_map(name, seed):
    rng = random.Random(seed)
    group = builtin_group(name)
    subs = subgroup_classes(group, 8)
    small = rng.choice(subs)
    bigger = [b for b in subgroup_classes(group, 8) if small <= b] or [small]
    x, y, q = coset_map(group, small, rng.choice(bigger))
    alpha, alpha2 = _random_class(y, rng), _random_class(y, rng)
    beta = _random_class(x, rng)
    assert pushforward(q, pullback(q, alpha) * beta) == alpha * pushforward(q, beta)
    assert pullback(q, alpha * alpha2) == pullback(q, alpha) * pullback(q, alpha2)
    assert pushforward(q, beta).is_invariant() and pullback(q, alpha).is_invariant()
    for c in group.conjugacy_classes:
        assert pushforward(q, beta).localize(c) == pushforward(q, beta.localize(c))
        assert pullback(q, alpha).localize(c) == pullback(q, alpha.localize(c))


@given(st.sampled_from(["S3", "Z6", "D4", "Q8", "A4"]), st.integers(0, 10**6))
@settings(max_examples=15, deadline=None)
def test_bridging(name, seed):
    rng = random.Random(seed)
    group = builtin_group(name)
    subs = subgroup_classes(group, 8)
    small = rng.choice(subs)
    big = rng.choice([b for b in subs if small <= b] or [small])
    x, y, q = coset_map(group, small, big)
    f, f2, e = _random_sheaf(x, rng), _random_sheaf(x, rng), _random_sheaf(y, rng)
    assert class_from_sheaf(sheaf_pushforward(q, f)) == pushforward(q, class_from_sheaf(f))
    assert class_from_sheaf(sheaf_pullback(q, e)) == pullback(q, class_from_sheaf(e))
    assert class_from_sheaf(sheaf_tensor(f, f2)) == class_from_sheaf(f) * class_from_sheaf(f2)
    assert class_from_sheaf(f.direct_sum(f2)) == class_from_sheaf(f) + class_from_sheaf(f2)


def test_non_equivariant_map_rejected(natural):
    with pytest.raises(ValueError):
        EquivariantMap(natural, natural, [1, 0, 2])


# -- decompose -----------------------------------------------------------------------------------
def test_decompose_examples(s3, natural):
    one = StabilizerClass.constant(stabilizer_of(natural), 1)
    parts = decompose(one)
    sizes = classes_by_size(s3)
    assert {p for p, v in parts[sizes[1].position].values.items() if v} == {(0, x) for x in range(3)}
    assert {p for p, v in parts[sizes[3].position].values.items() if v} == {p for p in stabilizer_of(natural).pairs if p[0] != 0}
    assert parts[sizes[2].position].is_zero()
    total = StabilizerClass(stabilizer_of(natural))
    for v in parts.values():
        total = total + v
    assert total == one
    free = decompose(StabilizerClass.constant(stabilizer_of(GSet.regular(s3)), 1))
    assert [not v.is_zero() for v in free.values()] == [True, False, False]


# -- Morita --------------------------------------------------------------------------------------
def test_morita_examples(s3, natural):
    # Z = G, W = X is the identity transport up to relabelling
    whole = s3.subgroup(range(6))
    mixed = MixedSpace(s3, whole, natural.restrict(whole))
    assert mixed.gset.size == 3
    for sheaf in irreducible_sheaves(mixed.base):
        beta = class_from_sheaf(sheaf)
        assert morita_inverse(mixed, morita(mixed, beta)) == beta
    # Z = {e}, W = point: the free G-set
    triv = s3.subgroup([0])
    mixed = MixedSpace(s3, triv, GSet.point(triv))
    img = morita(mixed, StabilizerClass.constant(stabilizer_of(mixed.base), 1))
    assert mixed.gset.size == 6
    assert all(g == 0 for (g, _), v in img.values.items() if v)
    # Z = <(12)>, W = point, sign rep: G x_Z W is {1,2,3} and (12) fixes the coset [e, pt]
    t = el(s3, (1, 0, 2))
    z = s3.subgroup([0, t])
    w = GSet.point(z)
    sign = class_from_sheaf(EquivSheafOnGSet.from_generator_images(w, {0: {z.local_index(t): [[-1]]}}))
    mixed = MixedSpace(s3, z, w)
    out = morita(mixed, sign)
    assert mixed.gset.size == 3
    assert out(t, mixed.embed(0)) == -1 and out(0, mixed.embed(0)) == 1
    assert morita_inverse(mixed, out) == sign


# -- twisting ------------------------------------------------------------------------------------
def test_twist_z3_example():
    z3 = builtin_group("Z/3")
    pt = GSet.point(z3)
    g = z3.generators[0]
    w = zeta(3)
    sheaf = EquivSheafOnGSet.from_generator_images(pt, {0: {g: ((1, 0), (0, w))}})
    beta = class_from_sheaf(sheaf)
    order = [0, g, z3.table[g][g]]
    assert [beta(k, 0) for k in order] == [2, 1 + w, 1 + w * w]
    twisted = twist_central(beta, g)
    assert [twisted(k, 0) for k in order] == [1 + w, 1 + w * w, 2]
    assert twist_via_reps(sheaf, g) == twisted
    assert twist_central(beta, 0) == beta == twist_via_reps(sheaf, 0)
    assert twist_central(twisted, g) == twist_central(beta, z3.table[g][g])


def test_twist_errors(s3, natural):
    beta = StabilizerClass.constant(stabilizer_of(GSet.point(s3)), 1)
    with pytest.raises(ValueError):
        twist_central(beta, el(s3, (1, 0, 2)))
    z3 = builtin_group("Z/3")
    with pytest.raises(ValueError):
        twist_central(StabilizerClass.constant(stabilizer_of(GSet.regular(z3)), 1), z3.generators[0])


@pytest.mark.parametrize("name", ["S3", "Q8", "D4"])
def test_twist_eigensheaf_agreement(name):
    group = builtin_group(name)
    for _, x in transitive_gsets(group):
        for psi in group.conjugacy_classes:
            model = slice_model(x, psi)
            if model.fixed_set.size == 0:
                continue
            for sheaf in irreducible_sheaves(model.fixed_set):
                assert twist_central(class_from_sheaf(sheaf), model.h_local) == twist_via_reps(sheaf, model.h_local)


# -- central summand and localization ------------------------------------------------------------
def test_central_summand_examples(s3, natural):
    sizes = classes_by_size(s3)
    one = StabilizerClass.constant(stabilizer_of(natural), 1)
    for psi in (sizes[3], sizes[1]):
        model = slice_model(natural, psi)
        beta = pullback(model.f, one)
        c = central_summand(beta, model)
        assert c == central_summand_direct(beta)
        other = slice_model(natural, psi, psi.members[-1])
        assert central_summand(beta, other) == c
    model = slice_model(natural, sizes[1])
    beta = pullback(model.f, one)
    assert central_summand(beta, model) == beta.localize(sizes[1])
    with pytest.raises(ValueError):
        central_summand(one, model)


def test_central_summand_abelian():
    z6 = builtin_group("Z6")
    x = GSet.cosets(z6, z6.subgroup([0, 3]))
    one = StabilizerClass.constant(stabilizer_of(x), 1)
    for psi in z6.conjugacy_classes:
        model = slice_model(x, psi)
        beta = pullback(model.f, one)
        h = psi.representative
        expect = StabilizerClass(beta.carrier, {p: v for p, v in beta.values.items() if p[0] == h})
        assert central_summand(beta, model) == expect


def test_nonabelian_localize_examples(s3, natural):
    sizes = classes_by_size(s3)
    one = StabilizerClass.constant(stabilizer_of(natural), 1)
    parts = decompose(one)
    for psi in s3.conjugacy_classes:
        for route in ("morita", "direct"):
            assert nonabelian_localize(one, psi, route=route) == parts[psi.position]
        assert localize_via_sheaves(EquivSheafOnGSet.structure_sheaf(natural), psi) == parts[psi.position]
    assert nonabelian_localize(one, sizes[2]).is_zero()
    reg = GSet.regular(s3)
    alpha = StabilizerClass.constant(stabilizer_of(reg), 1)
    assert nonabelian_localize(alpha, sizes[1]) == alpha
    with pytest.raises(ValueError):
        nonabelian_localize(one, sizes[1], route="other")


@pytest.mark.parametrize("name", ["S3", "Z6", "D4", "Q8", "A4"])
def test_localization_spanning_set(name):
    group = builtin_group(name)
    for _, x in transitive_gsets(group):
        for sheaf in irreducible_sheaves(x):
            alpha = class_from_sheaf(sheaf)
            parts = decompose(alpha)
            for psi in group.conjugacy_classes:
                expected = parts[psi.position]
                assert nonabelian_localize(alpha, psi) == expected
                assert nonabelian_localize(alpha, psi, route="direct") == expected
                assert localize_via_fixed_locus(alpha, psi) == expected
                assert localize_via_sheaves(sheaf, psi) == expected


# -- invariants and the degree-zero sector identity ----------------------------------------------
def test_invariants_examples(natural):
    assert invariants(StabilizerClass.constant(stabilizer_of(natural), 1)) == [1]
    assert invariants(class_from_sheaf(sign_sheaf(natural))) == [0]
    stab = natural.stabilizer_groups[0]
    regular = MatrixRep.permutation(stab, lambda g, i: stab.table[g][i], len(stab))
    assert invariants(class_from_sheaf(EquivSheafOnGSet(natural, {0: regular}))) == [1]


@pytest.mark.parametrize("name", ["S3", "D4", "A4"])
def test_invariants_match_oracles(name):
    group = builtin_group(name)
    for _, x in transitive_gsets(group):
        for sheaf in irreducible_sheaves(x):
            inv = invariants(class_from_sheaf(sheaf))
            for method in ("projector", "nullspace"):
                assert inv == [CycNumber.rational(k) for k in sheaf_invariant_dimensions(sheaf, method=method)]


def test_rr_gset_sector_examples(s3, natural):
    sizes = classes_by_size(s3)
    one = StabilizerClass.constant(stabilizer_of(natural), 1)
    for psi in s3.conjugacy_classes:
        rep = rr_gset_sector(one, psi)
        assert rep["pass"] and rep["twist_invariance"]
    empty = rr_gset_sector(one, sizes[2])
    assert empty["invariants"] == [0] and empty["via_twist"] == [0]
    rng = random.Random(7)
    alpha = class_from_sheaf(_random_sheaf(natural, rng))
    assert all(rr_gset_sector(alpha, psi)["pass"] for psi in s3.conjugacy_classes)


def test_twist_preserves_invariants_on_slices(s3, natural):
    for psi in s3.conjugacy_classes:
        model = slice_model(natural, psi)
        if model.slice.size == 0:
            continue
        for sheaf in irreducible_sheaves(model.slice):
            beta = class_from_sheaf(sheaf)
            assert invariants(beta) == invariants(twist_on_slice(beta))


def test_gset_axioms_checked(s3):
    with pytest.raises(ValueError):
        GSet(s3, [[1, 0, 2]] * 6)
