"""Subgroup lattices, linear characters and monomial (induced) representations.

Irreducible representations are found by inducing linear characters from
subgroups and keeping the characters of norm one.  This is complete exactly
for monomial groups, which covers every fixture; completeness is checked via
sum of squared dimensions = |G|.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from ..exact import matrix as mx
from ..exact.cyclotomic import CycNumber
from .group import FiniteGroup
from .reps import ClassFunction, MatrixRep

__all__ = [
    "IncompleteIrreducibles",
    "all_subgroups",
    "induced_rep",
    "irreducible_reps",
    "linear_characters",
    "subgroup_classes",
]


class IncompleteIrreducibles(ArithmeticError):
    """Monomial search did not find every irreducible (group is not monomial)."""


def all_subgroups(group: FiniteGroup) -> list[frozenset[int]]:
    """Every subgroup as a frozenset of element indices, ordered by (size, elements)."""
    found = {frozenset([0])}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for sub in frontier:
            for g in range(len(group)):
                if g in sub:
                    continue
                bigger = frozenset(group.closure(list(sub) + [g]))
                if bigger not in found:
                    found.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def subgroup_classes(group: FiniteGroup, max_index: int | None = None) -> list[frozenset[int]]:
    """One subgroup per conjugacy class (the first in canonical order)."""
    seen: set[frozenset[int]] = set()
    out = []
    for sub in all_subgroups(group):
        if sub in seen:
            continue
        if max_index is not None and len(group) // len(sub) > max_index:
            continue
        conjugates = {frozenset(group.conj(g, s) for s in sub) for g in range(len(group))}
        seen |= conjugates
        out.append(sub)
    return out


def linear_characters(group: FiniteGroup) -> list[list[int]]:
    """Homomorphisms G -> mu_e (e = exponent), as exponent lists k with value zeta_e^k."""
    e = group.exponent
    gens = group.generators
    out = []
    for assignment in product(range(e), repeat=len(gens)):
        values: list[int | None] = [None] * len(group)
        values[0] = 0
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for s, a in zip(gens, assignment):
                    y = group.table[s][x]
                    v = (a + values[x]) % e
                    if values[y] is None:
                        values[y] = v
                        nxt.append(y)
                    elif values[y] != v:
                        ok = False
                        break
                if not ok:
                    break
            frontier = nxt
        if ok:
            # consistency along Cayley edges from every vertex makes this a homomorphism
            if all(values[group.table[s][x]] == (a + values[x]) % e for s, a in zip(gens, assignment) for x in range(len(group))):
                out.append(values)
    return out


def _coset_reps(group: FiniteGroup, sub: Sequence[int]) -> list[int]:
    seen: set[int] = set()
    reps = []
    for g in range(len(group)):
        if g in seen:
            continue
        reps.append(g)
        seen.update(group.table[g][k] for k in sub)
    return reps


def induced_rep(group: FiniteGroup, sub: Sequence[int], chi: Sequence[int], exponent: int) -> MatrixRep:
    """Ind_K^G of the linear character zeta_exponent^chi[local index] of K = ``sub``."""
    sub = sorted(sub)
    local = {g: i for i, g in enumerate(sub)}
    reps = _coset_reps(group, sub)
    m = len(reps)
    z = CycNumber.ZERO

    def mat(g):
        rows = [[z] * m for _ in range(m)]
        for j, t in enumerate(reps):
            gt = group.table[g][t]
            for i, s in enumerate(reps):
                u = group.table[group.inv[s]][gt]
                if u in local:
                    rows[i][j] = CycNumber.root(exponent, chi[local[u]])
                    break
        return tuple(tuple(r) for r in rows)

    return MatrixRep(group, [mat(g) for g in range(len(group))], name="induced")


def _induced_character(group: FiniteGroup, sub: Sequence[int], chi: Sequence[int], exponent: int) -> ClassFunction:
    local = {g: i for i, g in enumerate(sorted(sub))}
    values = []
    for c in group.conjugacy_classes:
        h = c.representative
        total = CycNumber.ZERO
        for t in range(len(group)):
            u = group.conj(group.inv[t], h)
            if u in local:
                total = total + CycNumber.root(exponent, chi[local[u]])
        values.append(total * Fraction(1, len(sub)))
    return ClassFunction(group, values)


def irreducible_reps(group: FiniteGroup) -> list[MatrixRep]:
    """All irreducible representations, ordered by (dimension, character)."""
    cached = getattr(group, "_irreps", None)
    if cached is not None:
        return cached
    found: dict[tuple, tuple] = {}
    total = 0
    for sub in sorted(all_subgroups(group), key=lambda s: (-len(s), sorted(s))):
        if total == len(group):
            break
        subgroup = group.subgroup(sub)
        for chi in linear_characters(subgroup):
            char = _induced_character(group, list(sub), chi, subgroup.exponent)
            if char.inner(char) != 1:
                continue
            key = tuple(v.sort_key() for v in char.values)
            if key in found:
                continue
            dim = len(group) // len(sub)
            found[key] = (dim, key, list(sub), chi, subgroup.exponent)
            total += dim * dim
    if total != len(group):
        raise IncompleteIrreducibles(f"monomial search found sum of squares {total} != {len(group)}")
    reps = [induced_rep(group, sub, chi, e) for _, _, sub, chi, e in sorted(found.values(), key=lambda t: (t[0], t[1]))]
    for r in reps:
        r.name = f"irrep{r.dim}"
    group._irreps = reps
    return reps


def fixed_dimension(rep: MatrixRep) -> int:
    """dim V^G via the nullspace of the stacked (rho(s) - 1) over generators."""
    n = rep.dim
    one = mx.identity(n)
    rows = []
    for s in rep.group.generators:
        m = rep(s)
        rows.extend([m[i][j] - one[i][j] for j in range(n)] for i in range(n))
    return len(mx.nullspace(rows, n))


def projector_rank(rep: MatrixRep) -> int:
    """Rank of the averaging projector (1/|G|) sum rho(g)."""
    acc = mx.zeros(rep.dim)
    for g in range(len(rep.group)):
        acc = mx.add(acc, rep(g))
    return mx.rank(mx.scale(acc, Fraction(1, len(rep.group))))
