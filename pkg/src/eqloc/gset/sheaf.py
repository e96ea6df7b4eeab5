"""Equivariant sheaves on finite G-sets: one stabilizer representation per orbit.

These are the oracle side of the function model.  Direct image, pullback and
tensor product are built at the level of matrices, and ``class_from_sheaf``
takes fiberwise traces.
"""
from __future__ import annotations

from typing import Mapping

from ..exact import matrix as mx
from ..exact.cyclotomic import CycNumber
from ..groups.group import FiniteGroup
from ..groups.reps import MatrixRep, eigenvalue_multiset
from ..groups.subgroups import fixed_dimension, irreducible_reps, projector_rank
from .core import EquivariantMap, GSet, StabilizerClass, stabilizer_of

__all__ = [
    "EquivSheafOnGSet",
    "class_from_sheaf",
    "irreducible_sheaves",
    "sheaf_invariant_dimensions",
    "sheaf_pullback",
    "sheaf_pushforward",
    "sheaf_tensor",
    "twist_via_reps",
]


class EquivSheafOnGSet:
    """A G-equivariant sheaf on X: a representation of G_x for each orbit representative x."""

    def __init__(self, base: GSet, fibers: Mapping[int, MatrixRep]) -> None:
        reps = base.orbit_representatives
        if sorted(fibers) != reps:
            raise ValueError(f"need one fiber per orbit representative {reps}")
        for x, rep in fibers.items():
            if rep.group is not base.stabilizer_groups[x]:
                raise ValueError(f"fiber at {x} is not a representation of the stabilizer G_x")
        self.base = base
        self.fibers = dict(fibers)

    @classmethod
    def structure_sheaf(cls, base: GSet) -> EquivSheafOnGSet:
        return cls(base, {x: MatrixRep.trivial(h) for x, h in base.stabilizer_groups.items()})

    @classmethod
    def from_group_rep(cls, base: GSet, rep: MatrixRep) -> EquivSheafOnGSet:
        """The pullback of a G-representation from the point (constant fiber V)."""
        return cls(base, {x: rep.restrict(h) for x, h in base.stabilizer_groups.items()})

    @classmethod
    def from_generator_images(cls, base: GSet, data: Mapping[int, Mapping[int, object]]) -> EquivSheafOnGSet:
        """Fibers from images of stabilizer generators (indices in G)."""
        fibers = {}
        for x, images in data.items():
            h = base.stabilizer_groups[x]
            local = {h.local_index(g): m for g, m in images.items()}
            if None in local:
                raise ValueError(f"generator does not stabilize {x}")
            fibers[x] = MatrixRep.from_generators(h, local) if local else MatrixRep.trivial(h, 1)
        return cls(base, fibers)

    @property
    def group(self) -> FiniteGroup:
        return self.base.group

    def fiber_dim(self, y: int) -> int:
        return self.fibers[self.base.orbits[self.base.orbit_of[y]][0]].dim

    def transport(self, g: int, y: int) -> mx.Matrix:
        """Matrix of g: F_y -> F_{gy}, with F_y identified with F_rep through the transporter."""
        x0 = self.base.orbits[self.base.orbit_of[y]][0]
        tr = self.base.transporters
        group = self.group
        u = group.table[group.table[group.inv[tr[self.base.act[g][y]]]][g]][tr[y]]
        stab = self.base.stabilizer_groups[x0]
        return self.fibers[x0](stab.local_index(u))

    def direct_sum(self, other: EquivSheafOnGSet) -> EquivSheafOnGSet:
        return EquivSheafOnGSet(self.base, {x: r.direct_sum(other.fibers[x]) for x, r in self.fibers.items()})

    def __repr__(self) -> str:
        dims = {x: r.dim for x, r in self.fibers.items()}
        return f"EquivSheafOnGSet(fiber dims {dims})"

    def to_json(self) -> dict:
        return {"fibers": [{"orbit_rep": x, "rep": r.to_json()} for x, r in sorted(self.fibers.items())]}


def class_from_sheaf(sheaf: EquivSheafOnGSet) -> StabilizerClass:
    carrier = stabilizer_of(sheaf.base)
    return StabilizerClass(carrier, {(g, y): mx.trace(sheaf.transport(g, y)) for g, y in carrier.pairs})


def sheaf_tensor(a: EquivSheafOnGSet, b: EquivSheafOnGSet) -> EquivSheafOnGSet:
    if a.base is not b.base:
        raise ValueError("sheaves live on different G-sets")
    return EquivSheafOnGSet(a.base, {x: r.tensor(b.fibers[x]) for x, r in a.fibers.items()})


def sheaf_pullback(q: EquivariantMap, sheaf: EquivSheafOnGSet) -> EquivSheafOnGSet:
    """(q^* F)_x' = F_{q(x')} as a representation of G_x'."""
    if sheaf.base is not q.target:
        raise ValueError("sheaf does not live on the target")
    fibers = {}
    for xs, h in q.source.stabilizer_groups.items():
        y = q.mapping[xs]
        fibers[xs] = MatrixRep(h, [sheaf.transport(g, y) for g in h.parent_index], name="pullback")
    return EquivSheafOnGSet(q.source, fibers)


def sheaf_pushforward(q: EquivariantMap, sheaf: EquivSheafOnGSet) -> EquivSheafOnGSet:
    """(q_* F)_y = direct sum of F_x' over the fiber q^-1(y), with G_y permuting blocks."""
    if sheaf.base is not q.source:
        raise ValueError("sheaf does not live on the source")
    fibers = {}
    for y, h in q.target.stabilizer_groups.items():
        pts = [xs for xs in range(q.source.size) if q.mapping[xs] == y]
        dims = [sheaf.fiber_dim(xs) for xs in pts]
        offsets = [sum(dims[:i]) for i in range(len(pts))]
        where = {xs: i for i, xs in enumerate(pts)}
        n = sum(dims)

        def mat(g, pts=pts, dims=dims, offsets=offsets, where=where, n=n):
            rows = [[CycNumber.ZERO] * n for _ in range(n)]
            for j, xs in enumerate(pts):
                i = where[q.source.act[g][xs]]
                block = sheaf.transport(g, xs)
                for a in range(dims[i]):
                    for b in range(dims[j]):
                        rows[offsets[i] + a][offsets[j] + b] = block[a][b]
            return tuple(tuple(r) for r in rows)

        fibers[y] = MatrixRep(h, [mat(g) for g in h.parent_index], name="pushforward")
    return EquivSheafOnGSet(q.target, fibers)


def sheaf_invariant_dimensions(sheaf: EquivSheafOnGSet, *, method: str = "projector") -> list[int]:
    """dim F_x^{G_x} per orbit, by projector rank or by the fixed-vector nullspace."""
    fn = projector_rank if method == "projector" else fixed_dimension
    return [fn(sheaf.fibers[x]) for x in sheaf.base.orbit_representatives]


def irreducible_sheaves(base: GSet) -> list[EquivSheafOnGSet]:
    """One sheaf per (orbit, irreducible rep of its stabilizer), zero on the other orbits.

    Their classes form a basis of G_0(G, X) (x) C.
    """
    out = []
    for x, h in base.stabilizer_groups.items():
        for r in irreducible_reps(h):
            fibers = {y: MatrixRep.trivial(k, 0) for y, k in base.stabilizer_groups.items()}
            fibers[x] = r
            out.append(EquivSheafOnGSet(base, fibers))
    return out


def twist_via_reps(sheaf: EquivSheafOnGSet, h: int) -> StabilizerClass:
    """h^-1 . [F] = sum_chi chi(h) [F_chi] over the h-eigensheaves, as a class.

    ``h`` must be central in the group and act trivially on the base.
    """
    base = sheaf.base
    group = base.group
    if any(group.table[h][g] != group.table[g][h] for g in range(len(group))):
        raise ValueError("twisting element is not central")
    if base.fixed_points(h) != list(range(base.size)):
        raise ValueError("twisting element acts nontrivially on the base")
    m = group.element_orders[h]
    pieces: dict[int, list[tuple[CycNumber, MatrixRep]]] = {}
    for x, rep in sheaf.fibers.items():
        stab = base.stabilizer_groups[x]
        hl = stab.local_index(h)
        mat = rep(hl)
        parts = []
        for k in sorted(eigenvalue_multiset(rep, hl)):
            ev = CycNumber.root(m, k)
            shifted = mx.add(mat, mx.scale(mx.identity(rep.dim), -ev))
            basis = mx.nullspace(shifted, rep.dim)
            sub = MatrixRep(stab, [mx.restrict_to_subspace(rep(g), basis) for g in range(len(stab))], check=False)
            parts.append((ev, sub))
        if sum(p.dim for _, p in parts) != rep.dim:
            raise ArithmeticError("eigenspaces do not span the fiber")
        pieces[x] = parts
    carrier = stabilizer_of(base)
    values = {}
    tr = base.transporters
    for g, y in carrier.pairs:
        x0 = base.orbits[base.orbit_of[y]][0]
        stab = base.stabilizer_groups[x0]
        u = stab.local_index(group.conj(group.inv[tr[y]], g))
        total = CycNumber.ZERO
        for ev, sub in pieces[x0]:
            total = total + ev * sub.trace(u)
        values[(g, y)] = total
    return StabilizerClass(carrier, values)
