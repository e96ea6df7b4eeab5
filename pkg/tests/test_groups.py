from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqloc.exact.cyclotomic import CycNumber, zeta
from eqloc.groups import (
    ClassFunction,
    DescriptorError,
    GroupCapExceeded,
    MatrixRep,
    NotFaithful,
    builtin_group,
    centralizer,
    class_intersection,
    conjugacy_classes,
    eigenvalue_multiset,
    find_good_embedding,
    good_embedding_check,
    group_from_descriptor,
    hom_dimension,
    localize_component,
    natural_rep,
    standard_rep,
)
from eqloc.groups.subgroups import all_subgroups, fixed_dimension, irreducible_reps, projector_rank, subgroup_classes

ORDERS = {"S3": 6, "S4": 24, "A4": 12, "D4": 8, "Q8": 8, "Z6": 6, "trivial": 1}
CLASS_COUNTS = {"S3": 3, "S4": 5, "A4": 4, "D4": 5, "Q8": 5, "Z6": 6, "trivial": 1}


@pytest.mark.parametrize("name", sorted(ORDERS))
def test_builtin_orders_and_classes(name):
    g = builtin_group(name)
    g.check_axioms()
    assert len(g) == ORDERS[name]
    classes = conjugacy_classes(g)
    assert len(classes) == CLASS_COUNTS[name]
    assert sum(c.size for c in classes) == len(g)
    assert tuple(classes[0].members) == (0,)
    # class equation: |psi| * |Z(h)| = |G|
    for c in classes:
        assert c.size * len(centralizer(g, c.representative)) == len(g)


def test_class_examples():
    assert [c.size for c in builtin_group("S3").conjugacy_classes] == [1, 2, 3]
    assert [c.size for c in builtin_group("Z4").conjugacy_classes] == [1, 1, 1, 1]
    assert [c.size for c in builtin_group("trivial").conjugacy_classes] == [1]
    assert sorted(c.size for c in builtin_group("S4").conjugacy_classes) == [1, 3, 6, 6, 8]


def test_centralizer_examples():
    s3 = builtin_group("S3")
    t = s3.conjugacy_classes[2].representative
    assert len(centralizer(s3, t)) == 2
    assert len(centralizer(s3, 0)) == 6
    q8 = builtin_group("Q8")
    assert len(q8.center()) == 2


def test_class_intersection_klein_four():
    s4 = builtin_group("S4")
    # normal Klein four group: identity and double transpositions
    dbl = [c for c in s4.conjugacy_classes if c.size == 3][0]
    v4 = s4.subgroup([0, *dbl.members])
    assert len(v4) == 4
    parts = class_intersection(s4, v4, dbl)
    assert [c.size for c in parts] == [1, 1, 1]
    assert class_intersection(s4, v4, s4.conjugacy_classes[0])[0].size == 1


def test_class_intersection_needs_subgroup():
    with pytest.raises(ValueError):
        class_intersection(builtin_group("S3"), builtin_group("Z3"), builtin_group("S3").conjugacy_classes[0])


def test_localize_component():
    s3 = builtin_group("S3")
    chi = standard_rep(s3).character()
    psi = s3.conjugacy_classes[1]
    loc = localize_component(chi, psi)
    assert [loc(g) for g in range(6)] == [chi(g) if g in psi else 0 for g in range(6)]
    total = ClassFunction.constant(s3, 0)
    for c in s3.conjugacy_classes:
        total = total + chi.localize(c)
    assert total == chi


def test_class_function_ring():
    s3 = builtin_group("S3")
    sign = ClassFunction.from_function(s3, lambda g: natural_rep(s3).trace(g) - 1)
    std = standard_rep(s3).character()
    assert std == sign
    assert std.inner(std) == 1
    assert (std * std).inner(ClassFunction.constant(s3, 1)) == 1


def test_eigenvalues():
    z3 = builtin_group("Z3")
    r = natural_rep(z3)
    assert eigenvalue_multiset(r, 1) == {0: 1, 1: 1, 2: 1}
    q8 = builtin_group("Q8")
    minus = [c for c in q8.conjugacy_classes if c.size == 1 and c.representative != 0][0]
    assert eigenvalue_multiset(natural_rep(q8), minus.representative) == {1: 2}


def test_good_embedding_examples():
    for name in ("S3", "S4"):
        g = builtin_group(name)
        for psi in g.conjugacy_classes:
            assert good_embedding_check([natural_rep(g)], psi) == (True, None)
    q8 = builtin_group("Q8")
    minus = [c for c in q8.conjugacy_classes if c.size == 1 and c.representative != 0][0]
    assert good_embedding_check([natural_rep(q8)], minus)[0]
    # the classes of i and j share eigenvalues {i, -i}, so they collide
    two = [c for c in q8.conjugacy_classes if c.size == 2]
    ok, other = good_embedding_check([natural_rep(q8)], two[0])
    assert not ok and other.size == 2


def test_good_embedding_rejects_non_faithful():
    s3 = builtin_group("S3")
    with pytest.raises(NotFaithful):
        good_embedding_check([MatrixRep.trivial(s3)], s3.conjugacy_classes[1])
    with pytest.raises(NotFaithful):
        good_embedding_check([], s3.conjugacy_classes[1])


def test_find_good_embedding():
    s3 = builtin_group("S3")
    sign = irreducible_reps(s3)[1]
    assert sign.dim == 1 and not sign.is_faithful()
    found = find_good_embedding([MatrixRep.trivial(s3), sign, natural_rep(s3)], s3.conjugacy_classes[2])
    assert found is not None and len(found) == 1
    assert find_good_embedding([MatrixRep.trivial(s3)], s3.conjugacy_classes[2]) is None


@given(st.sampled_from(["S3", "A4", "D4", "Q8", "Z6"]), st.data())
@settings(max_examples=25, deadline=None)
def test_hom_dimension_matches_inner_product(name, data):
    g = builtin_group(name)
    irr = irreducible_reps(g)
    k = data.draw(st.integers(0, len(irr) - 1))
    j = data.draw(st.integers(0, len(irr) - 1))
    v = irr[k].direct_sum(irr[j])
    w = irr[j].tensor(irr[k])
    inner = v.character().inner(w.character())
    assert CycNumber.rational(hom_dimension(v, w)) == inner


@pytest.mark.parametrize("name,dims", [
    ("S3", [1, 1, 2]), ("S4", [1, 1, 2, 3, 3]), ("A4", [1, 1, 1, 3]),
    ("D4", [1, 1, 1, 1, 2]), ("Q8", [1, 1, 1, 1, 2]), ("Z6", [1] * 6),
])
def test_irreducible_reps(name, dims):
    g = builtin_group(name)
    irr = irreducible_reps(g)
    assert [r.dim for r in irr] == dims
    for a in irr:
        for b in irr:
            assert a.character().inner(b.character()) == (1 if a is b else 0)


def test_subgroups():
    s4 = builtin_group("S4")
    assert len(all_subgroups(s4)) == 30
    assert len(subgroup_classes(s4, 24)) == 11
    assert len(subgroup_classes(s4, 12)) == 10


def test_fixed_dimension_oracles_agree():
    a4 = builtin_group("A4")
    for r in irreducible_reps(a4):
        t = r.tensor(r.dual())
        assert fixed_dimension(t) == projector_rank(t) == 1


def test_descriptors():
    g = group_from_descriptor({"type": "permutation", "degree": 3, "generators": [[2, 1, 3], [2, 3, 1]]})
    assert len(g) == 6
    h = group_from_descriptor({"type": "matrix", "generators": [[[{"order": 4, "coeffs": [0, 1]}, 0], [0, 1]]]})
    assert len(h) == 4
    assert len(group_from_descriptor("Z/5")) == 5


@pytest.mark.parametrize("obj,pointer", [
    ("Nope", ""),
    ({"type": "permutation", "degree": 3, "generators": [[1, 1, 2]]}, "/generators/0"),
    ({"type": "permutation", "degree": 3, "generators": [[1, 2]]}, "/generators/0"),
    ({"type": "permutation", "degree": 0, "generators": []}, "/degree"),
    ({"type": "lie", "generators": []}, "/type"),
    ({"type": "permutation", "degree": 3}, "/generators"),
    ({"type": "permutation", "degree": 3, "generators": [[2, 3, 1]], "exponent": 2}, "/exponent"),
])
def test_descriptor_errors(obj, pointer):
    with pytest.raises(DescriptorError) as info:
        group_from_descriptor(obj)
    assert info.value.pointer == pointer


def test_group_cap():
    with pytest.raises(GroupCapExceeded):
        builtin_group("S4", cap=10)


def test_matrix_rep_rejects_non_homomorphism():
    z2 = builtin_group("Z2")
    with pytest.raises(ValueError):
        MatrixRep.from_generators(z2, {z2.generators[0]: ((zeta(3),),)})
