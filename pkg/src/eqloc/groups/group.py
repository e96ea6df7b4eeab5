"""Finite groups stored by full enumeration, with conjugacy classes and centralizers.

Elements are addressed by integer index into ``FiniteGroup.elements``; the
identity is always index 0 and the remaining elements follow the canonical
order of their forms (permutation tuples or matrices of CycNumber).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Callable, Hashable, Iterable, Sequence

DEFAULT_GROUP_CAP = 2000


class GroupCapExceeded(ValueError):
    pass


def _perm_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    # (a * b)(i) = a(b(i))
    return tuple(a[i] for i in b)


def _mat_mul(a, b):
    from ..exact.matrix import matmul

    return matmul(a, b)


def _form_key(form) -> tuple:
    if form and isinstance(form[0], tuple):
        return tuple(tuple(x.sort_key() for x in row) for row in form)
    return tuple(form)


@dataclass(eq=False)
class ConjugacyClass:
    """Conjugacy class C_G(h) with its representative's centralizer."""

    group: FiniteGroup
    representative: int
    members: tuple[int, ...]
    position: int = field(default=-1)

    @property
    def size(self) -> int:
        return len(self.members)

    @cached_property
    def centralizer(self) -> FiniteGroup:
        return self.group.centralizer(self.representative)

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self.member_set

    def __repr__(self) -> str:
        return f"ConjugacyClass(rep={self.group.label(self.representative)}, size={self.size})"


class FiniteGroup:
    """A finite group given by its elements and a multiplication table."""

    def __init__(
        self,
        forms: Sequence[Hashable],
        table: list[list[int]],
        *,
        kind: str,
        name: str = "",
        generators: Sequence[int] | None = None,
        parent: FiniteGroup | None = None,
        parent_index: Sequence[int] | None = None,
    ) -> None:
        self.elements = list(forms)
        self.table = table
        self.kind = kind
        self.name = name
        self.index = {f: i for i, f in enumerate(self.elements)}
        n = len(self.elements)
        self.inv = [0] * n
        for i in range(n):
            for j in range(n):
                if table[i][j] == 0:
                    self.inv[i] = j
                    break
        self.parent = parent
        self.parent_index = list(parent_index) if parent_index is not None else list(range(n))
        self.generators = list(generators) if generators is not None else self._find_generators()

    # -- construction ---------------------------------------------------------
    @classmethod
    def generate(
        cls,
        gens: Sequence[Hashable],
        identity: Hashable,
        mul: Callable,
        *,
        kind: str,
        name: str = "",
        cap: int = DEFAULT_GROUP_CAP,
    ) -> FiniteGroup:
        """Closure of ``gens`` under ``mul``, enumerated breadth-first."""
        seen = {identity}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = mul(s, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > cap:
                            raise GroupCapExceeded(f"group order exceeds cap {cap}")
            frontier = nxt
        others = sorted((f for f in seen if f != identity), key=_form_key)
        forms = [identity] + others
        index = {f: i for i, f in enumerate(forms)}
        table = [[index[mul(a, b)] for b in forms] for a in forms]
        gen_idx = sorted({index[g] for g in gens} - {0})
        return cls(forms, table, kind=kind, name=name, generators=gen_idx)

    @classmethod
    def from_permutations(cls, gens: Sequence[Sequence[int]], degree: int, *, name: str = "", cap: int = DEFAULT_GROUP_CAP) -> FiniteGroup:
        gens = [tuple(g) for g in gens]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise ValueError(f"{list(g)} is not a permutation of 0..{degree - 1}")
        group = cls.generate(gens, tuple(range(degree)), _perm_mul, kind="permutation", name=name, cap=cap)
        group.degree = degree
        return group

    @classmethod
    def from_matrices(cls, gens, *, name: str = "", cap: int = DEFAULT_GROUP_CAP) -> FiniteGroup:
        from ..exact.matrix import as_matrix, identity

        gens = [as_matrix(g) for g in gens]
        n = len(gens[0]) if gens else 1
        group = cls.generate(gens, identity(n), _mat_mul, kind="matrix", name=name, cap=cap)
        group.degree = n
        return group

    def _find_generators(self) -> list[int]:
        gens: list[int] = []
        span = {0}
        for g in range(1, len(self)):
            if g not in span:
                gens.append(g)
                span = set(self.closure(gens))
        return gens

    # -- basic operations -------------------------------------------------------
    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def conj(self, g: int, h: int) -> int:
        """g h g^-1."""
        return self.table[self.table[g][h]][self.inv[g]]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        out = 0
        for _ in range(k):
            out = self.table[out][g]
        return out

    @cached_property
    def element_orders(self) -> list[int]:
        orders = []
        for g in range(len(self)):
            k, x = 1, g
            while x != 0:
                x = self.table[x][g]
                k += 1
            orders.append(k)
        return orders

    @cached_property
    def exponent(self) -> int:
        e = 1
        for k in self.element_orders:
            e = e * k // gcd(e, k)
        return e

    def closure(self, gens: Iterable[int]) -> list[int]:
        gens = list(gens)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.table[s][x]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def is_abelian(self) -> bool:
        n = len(self)
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a + 1, n))

    def check_axioms(self) -> None:
        """Exhaustive associativity, identity and inverse check on the table."""
        n = len(self)
        t = self.table
        for a in range(n):
            if t[0][a] != a or t[a][0] != a:
                raise AssertionError("identity law fails")
            if t[a][self.inv[a]] != 0 or t[self.inv[a]][a] != 0:
                raise AssertionError("inverse law fails")
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise AssertionError(f"associativity fails at {a}, {b}, {c}")

    def label(self, g: int) -> str:
        form = self.elements[g]
        if self.kind == "permutation":
            return _cycle_notation(form)
        return f"g{g}"

    # -- subgroups -----------------------------------------------------------------
    def subgroup(self, indices: Iterable[int], *, name: str = "") -> FiniteGroup:
        """Subgroup on the given element indices (must be closed)."""
        idx = sorted(set(indices))
        if not idx or idx[0] != 0:
            raise ValueError("a subgroup must contain the identity")
        local = {g: i for i, g in enumerate(idx)}
        try:
            table = [[local[self.table[a][b]] for b in idx] for a in idx]
        except KeyError:
            raise ValueError("element set is not closed under multiplication") from None
        sub = FiniteGroup(
            [self.elements[g] for g in idx],
            table,
            kind=self.kind,
            name=name,
            parent=self,
            parent_index=idx,
        )
        if hasattr(self, "degree"):
            sub.degree = self.degree
        return sub

    def generated_subgroup(self, gens: Iterable[int], *, name: str = "") -> FiniteGroup:
        return self.subgroup(self.closure(gens), name=name)

    def to_root(self, g: int) -> int:
        """Index of ``g`` in the outermost ancestor group."""
        grp = self
        while grp.parent is not None:
            g = grp.parent_index[g]
            grp = grp.parent
        return g

    def local_index(self, parent_g: int) -> int | None:
        """Index in this subgroup of an element of the parent group (or None)."""
        if not hasattr(self, "_local"):
            self._local = {p: i for i, p in enumerate(self.parent_index)}
        return self._local.get(parent_g)

    def centralizer(self, h: int) -> FiniteGroup:
        """Subgroup {g : g h = h g}."""
        return self.subgroup(
            [g for g in range(len(self)) if self.table[g][h] == self.table[h][g]],
            name=f"Z({self.label(h)})",
        )

    def center(self) -> list[int]:
        return [h for h in range(len(self)) if all(self.table[h][g] == self.table[g][h] for g in range(len(self)))]

    # -- conjugacy classes -----------------------------------------------------------
    @cached_property
    def conjugacy_classes(self) -> list[ConjugacyClass]:
        """Classes partitioning G, ordered by (size, representative)."""
        seen = [False] * len(self)
        classes = []
        for h in range(len(self)):
            if seen[h]:
                continue
            orbit = sorted({self.conj(g, h) for g in range(len(self))})
            for x in orbit:
                seen[x] = True
            classes.append(ConjugacyClass(self, orbit[0], tuple(orbit)))
        classes.sort(key=lambda c: (c.size, c.representative))
        for i, c in enumerate(classes):
            c.position = i
        return classes

    @cached_property
    def class_index(self) -> list[int]:
        """Position of each element's class in ``conjugacy_classes``."""
        out = [0] * len(self)
        for c in self.conjugacy_classes:
            for g in c.members:
                out[g] = c.position
        return out

    def class_of(self, g: int) -> ConjugacyClass:
        return self.conjugacy_classes[self.class_index[g]]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or self.kind}, order={len(self)})"


def conjugacy_classes(group: FiniteGroup, cap: int = DEFAULT_GROUP_CAP) -> list[ConjugacyClass]:
    if len(group) > cap:
        raise GroupCapExceeded(f"|G| = {len(group)} exceeds cap {cap}")
    return group.conjugacy_classes


def centralizer(group: FiniteGroup, h: int) -> FiniteGroup:
    return group.centralizer(h)


def _cycle_notation(perm: Sequence[int]) -> str:
    seen = set()
    cycles = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        cycles.append("(" + " ".join(str(x + 1) for x in cyc) + ")")
    return "".join(cycles) or "e"
