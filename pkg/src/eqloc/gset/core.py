"""Finite G-sets and their K-theory in the global-stabilizer function model.

A class in G_0(G, X) (x) C is stored as a G-invariant function on the global
stabilizer S_X = {(g, x) : g x = x}; the value at (g, x) is the trace of g on
the fiber at x.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from ..exact.cyclotomic import CycNumber
from ..groups.group import ConjugacyClass, FiniteGroup
from ..groups.reps import ClassFunction

__all__ = [
    "EquivariantMap",
    "GSet",
    "GlobalStabilizer",
    "StabilizerClass",
    "build_stabilizer",
    "stabilizer_of",
    "decompose",
    "invariants",
    "pullback",
    "pushforward",
    "quotient_pushforward",
]

_ZERO = CycNumber.ZERO


class GSet:
    """A finite set {0..n-1} with a left action ``act[g][x]``."""

    def __init__(self, group: FiniteGroup, act: Sequence[Sequence[int]], labels: Sequence[Hashable] | None = None,
                 *, check: bool = True) -> None:
        self.group = group
        self.act = [tuple(row) for row in act]
        self.size = len(self.act[0]) if self.act else 0
        self.labels = list(labels) if labels is not None else list(range(self.size))
        if check:
            self.check_axioms()

    @classmethod
    def from_function(cls, group: FiniteGroup, points: Sequence[Hashable], action: Callable[[int, Hashable], Hashable]) -> GSet:
        index = {p: i for i, p in enumerate(points)}
        act = [[index[action(g, p)] for p in points] for g in range(len(group))]
        return cls(group, act, points)

    @classmethod
    def point(cls, group: FiniteGroup) -> GSet:
        return cls(group, [[0] for _ in range(len(group))], ["pt"], check=False)

    @classmethod
    def cosets(cls, group: FiniteGroup, sub: FiniteGroup) -> GSet:
        """Left cosets gH, labelled by their smallest element; gH for g = 0 is point 0."""
        members = set(sub.parent_index)
        seen: dict[int, int] = {}
        reps: list[int] = []
        for g in range(len(group)):
            if g in seen:
                continue
            coset = [group.table[g][h] for h in members]
            for k in coset:
                seen[k] = len(reps)
            reps.append(min(coset))
        act = [[seen[group.table[g][r]] for r in reps] for g in range(len(group))]
        return cls(group, act, [group.label(r) + "H" for r in reps])

    @classmethod
    def natural(cls, group: FiniteGroup) -> GSet:
        if group.kind != "permutation":
            raise ValueError("natural action needs a permutation group")
        return cls(group, [list(group.elements[g]) for g in range(len(group))], list(range(1, group.degree + 1)))

    @classmethod
    def regular(cls, group: FiniteGroup) -> GSet:
        return cls(group, [list(row) for row in group.table], [group.label(g) for g in range(len(group))], check=False)

    def check_axioms(self) -> None:
        t = self.group.table
        for x in range(self.size):
            if self.act[0][x] != x:
                raise ValueError(f"identity moves point {x}")
        for g in range(len(self.group)):
            if sorted(self.act[g]) != list(range(self.size)):
                raise ValueError(f"element {g} does not act bijectively")
            for h in range(len(self.group)):
                gh = t[g][h]
                for x in range(self.size):
                    if self.act[gh][x] != self.act[g][self.act[h][x]]:
                        raise ValueError("action is not compatible with multiplication")

    def __call__(self, g: int, x: int) -> int:
        return self.act[g][x]

    def stabilizer(self, x: int) -> list[int]:
        return [g for g in range(len(self.group)) if self.act[g][x] == x]

    @cached_property
    def stabilizer_groups(self) -> dict[int, FiniteGroup]:
        return {x: self.group.subgroup(self.stabilizer(x), name=f"G_{self.labels[x]}") for x in self.orbit_representatives}

    @cached_property
    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits ordered by their minimal point, which is the representative."""
        seen = set()
        out = []
        for x in range(self.size):
            if x in seen:
                continue
            orb = sorted({self.act[g][x] for g in range(len(self.group))})
            seen.update(orb)
            out.append(tuple(orb))
        return out

    @cached_property
    def orbit_of(self) -> list[int]:
        out = [0] * self.size
        for i, orb in enumerate(self.orbits):
            for x in orb:
                out[x] = i
        return out

    @property
    def orbit_representatives(self) -> list[int]:
        return [orb[0] for orb in self.orbits]

    @cached_property
    def transporters(self) -> list[int]:
        """For each y, the smallest k with k * rep(y) = y."""
        out = [-1] * self.size
        for orb in self.orbits:
            x0 = orb[0]
            for k in range(len(self.group)):
                y = self.act[k][x0]
                if out[y] < 0:
                    out[y] = k
        return out

    def fixed_points(self, g: int) -> list[int]:
        return [x for x in range(self.size) if self.act[g][x] == x]

    def restrict(self, sub: FiniteGroup, points: Sequence[int] | None = None) -> GSet:
        """Restriction to a subgroup, optionally on a sub-stable subset of points."""
        pts = list(range(self.size)) if points is None else list(points)
        local = {x: i for i, x in enumerate(pts)}
        act = [[local[self.act[p][x]] for x in pts] for p in sub.parent_index]
        return GSet(sub, act, [self.labels[x] for x in pts], check=False)

    def __repr__(self) -> str:
        return f"GSet({self.group!r}, points={self.size}, orbits={len(self.orbits)})"


class EquivariantMap:
    """q: source -> target with q(g x) = g q(x)."""

    def __init__(self, source: GSet, target: GSet, mapping: Sequence[int], *, check: bool = True) -> None:
        if source.group is not target.group:
            raise ValueError("equivariant maps need a common group")
        self.source = source
        self.target = target
        self.mapping = list(mapping)
        if check:
            for g in range(len(source.group)):
                for x in range(source.size):
                    if self.mapping[source.act[g][x]] != target.act[g][self.mapping[x]]:
                        raise ValueError("map is not equivariant")

    @classmethod
    def identity(cls, x: GSet) -> EquivariantMap:
        return cls(x, x, list(range(x.size)), check=False)

    @classmethod
    def to_point(cls, x: GSet) -> EquivariantMap:
        return cls(x, GSet.point(x.group), [0] * x.size, check=False)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def is_bijective(self) -> bool:
        return sorted(self.mapping) == list(range(self.target.size))

    def inverse(self) -> EquivariantMap:
        if not self.is_bijective():
            raise ValueError("map is not a bijection")
        inv = [0] * self.target.size
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return EquivariantMap(self.target, self.source, inv, check=False)


class GlobalStabilizer:
    """S_X = {(g, x) : g x = x} with the action k (g, x) = (k g k^-1, k x)."""

    def __init__(self, base: GSet) -> None:
        self.base = base
        group = base.group
        self.pairs = [(g, x) for g in range(len(group)) for x in range(base.size) if base.act[g][x] == x]
        self.index = {p: i for i, p in enumerate(self.pairs)}
        self._slices: dict = {}

    @property
    def group(self) -> FiniteGroup:
        return self.base.group

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        return pair in self.index

    def move(self, k: int, pair: tuple[int, int]) -> tuple[int, int]:
        g, x = pair
        return self.group.conj(k, g), self.base.act[k][x]

    @cached_property
    def orbits(self) -> list[tuple[tuple[int, int], ...]]:
        seen = set()
        out = []
        for p in self.pairs:
            if p in seen:
                continue
            orb = sorted({self.move(k, p) for k in range(len(self.group))})
            seen.update(orb)
            out.append(tuple(orb))
        return out

    def slice(self, psi: ConjugacyClass) -> list[tuple[int, int]]:
        """S_psi: pairs whose group element lies in psi."""
        return [p for p in self.pairs if p[0] in psi]

    def as_gset(self, psi: ConjugacyClass | None = None) -> tuple[GSet, EquivariantMap]:
        """S_X (or the slice S_psi) as a G-set, with its projection f to X (cached)."""
        key = None if psi is None else psi.position
        if key in self._slices:
            return self._slices[key]
        pts = self.pairs if psi is None else self.slice(psi)
        index = {p: i for i, p in enumerate(pts)}
        act = [[index[self.move(k, p)] for p in pts] for k in range(len(self.group))]
        s = GSet(self.group, act, pts, check=False)
        f = EquivariantMap(s, self.base, [x for _, x in pts], check=False)
        self._slices[key] = (s, f)
        return s, f

    def __repr__(self) -> str:
        return f"GlobalStabilizer(pairs={len(self.pairs)}, orbits={len(self.orbits)})"


def build_stabilizer(x: GSet) -> GlobalStabilizer:
    return stabilizer_of(x)


class StabilizerClass:
    """A G-invariant function on S_X: an element of G_0(G, X) (x) C."""

    __slots__ = ("carrier", "values")

    def __init__(self, carrier: GlobalStabilizer, values: Mapping[tuple[int, int], object] | None = None) -> None:
        self.carrier = carrier
        clean = {}
        for p, v in (values or {}).items():
            v = CycNumber.coerce(v)
            if not v.is_zero():
                if p not in carrier.index:
                    raise ValueError(f"{p} is not in the global stabilizer")
                clean[p] = v
        self.values = clean

    @classmethod
    def from_function(cls, carrier: GlobalStabilizer, f: Callable[[int, int], object]) -> StabilizerClass:
        return cls(carrier, {p: f(*p) for p in carrier.pairs})

    @classmethod
    def constant(cls, carrier: GlobalStabilizer, c=1) -> StabilizerClass:
        return cls(carrier, {p: c for p in carrier.pairs})

    @property
    def gset(self) -> GSet:
        return self.carrier.base

    @property
    def group(self) -> FiniteGroup:
        return self.carrier.group

    def __call__(self, g: int, x: int) -> CycNumber:
        return self.values.get((g, x), _ZERO)

    def _check(self, other: StabilizerClass) -> None:
        if other.carrier is not self.carrier:
            raise ValueError("classes live on different global stabilizers")

    def __add__(self, other) -> StabilizerClass:
        if not isinstance(other, StabilizerClass):
            return NotImplemented
        self._check(other)
        out = dict(self.values)
        for p, v in other.values.items():
            out[p] = out[p] + v if p in out else v
        return StabilizerClass(self.carrier, out)

    def __neg__(self) -> StabilizerClass:
        return StabilizerClass(self.carrier, {p: -v for p, v in self.values.items()})

    def __sub__(self, other) -> StabilizerClass:
        return self + (-other)

    def __mul__(self, other) -> StabilizerClass:
        """Pointwise product (tensor product of sheaves), R(G)-action, or scalar."""
        if isinstance(other, StabilizerClass):
            self._check(other)
            return StabilizerClass(self.carrier, {p: v * other.values[p] for p, v in self.values.items() if p in other.values})
        if isinstance(other, ClassFunction):
            return StabilizerClass(self.carrier, {p: v * other(p[0]) for p, v in self.values.items()})
        try:
            c = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return StabilizerClass(self.carrier, {p: v * c for p, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, StabilizerClass):
            return NotImplemented
        return self.carrier is other.carrier and self.values == other.values

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.values

    def is_invariant(self) -> bool:
        for p, v in self.values.items():
            for k in range(len(self.group)):
                if self(*self.carrier.move(k, p)) != v:
                    return False
        return True

    def localize(self, psi: ConjugacyClass) -> StabilizerClass:
        """Component at the maximal ideal of psi: restriction of support to S_psi."""
        return StabilizerClass(self.carrier, {p: v for p, v in self.values.items() if p[0] in psi})

    def support_classes(self) -> set[int]:
        return {self.group.class_index[g] for g, _ in self.values}

    def __repr__(self) -> str:
        items = ", ".join(f"({self.group.label(g)},{self.gset.labels[x]}):{v}" for (g, x), v in sorted(self.values.items()))
        return f"StabilizerClass({{{items}}})"

    def to_json(self) -> dict:
        return {
            "values": [
                {"g": self.group.label(g), "x": str(self.gset.labels[x]), "value": v.to_json()}
                for (g, x), v in sorted(self.values.items())
            ]
        }


def _carrier(x: GSet) -> GlobalStabilizer:
    cached = getattr(x, "_stabilizer", None)
    if cached is None:
        cached = GlobalStabilizer(x)
        x._stabilizer = cached
    return cached


def stabilizer_of(x: GSet) -> GlobalStabilizer:
    """The (cached) global stabilizer of ``x``; all classes on ``x`` share it."""
    return _carrier(x)


def pushforward(q: EquivariantMap, beta: StabilizerClass) -> StabilizerClass:
    """(q_* beta)(g, x) = sum of beta(g, x') over g-fixed x' in the fiber over x."""
    if beta.gset is not q.source:
        raise ValueError("class does not live on the source of the map")
    out: dict[tuple[int, int], CycNumber] = {}
    for (g, xs), v in beta.values.items():
        key = (g, q.mapping[xs])
        out[key] = out[key] + v if key in out else v
    return StabilizerClass(stabilizer_of(q.target), out)


def pullback(q: EquivariantMap, alpha: StabilizerClass) -> StabilizerClass:
    """(q^* alpha)(g, x') = alpha(g, q(x'))."""
    if alpha.gset is not q.target:
        raise ValueError("class does not live on the target of the map")
    carrier = stabilizer_of(q.source)
    return StabilizerClass(carrier, {(g, xs): alpha(g, q.mapping[xs]) for g, xs in carrier.pairs})


def decompose(alpha: StabilizerClass) -> dict[int, StabilizerClass]:
    """Components alpha_psi keyed by class position; they sum to alpha."""
    return {c.position: alpha.localize(c) for c in alpha.group.conjugacy_classes}


def invariants(alpha: StabilizerClass) -> list[CycNumber]:
    """Per orbit of X: (1/|G_x|) sum over G_x of alpha(g, x), at the orbit representative."""
    x_set = alpha.gset
    out = []
    for x in x_set.orbit_representatives:
        stab = x_set.stabilizer(x)
        total = _ZERO
        for g in stab:
            total = total + alpha(g, x)
        out.append(total * Fraction(1, len(stab)))
    return out


def quotient_pushforward(q: EquivariantMap, values: Sequence[CycNumber]) -> list[CycNumber]:
    """Pushforward of functions on orbit sets along the induced map X'/G -> X/G."""
    out = [_ZERO] * len(q.target.orbits)
    for i, orb in enumerate(q.source.orbits):
        j = q.target.orbit_of[q.mapping[orb[0]]]
        out[j] = out[j] + values[i]
    return out
