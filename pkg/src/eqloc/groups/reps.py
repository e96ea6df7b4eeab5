"""Matrix representations, class functions as R(G) (x) C, and good embeddings."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from ..exact import matrix as mx
from ..exact.cyclotomic import CycNumber
from .group import ConjugacyClass, FiniteGroup

__all__ = [
    "ClassFunction",
    "MatrixRep",
    "NotFaithful",
    "class_intersection",
    "eigenvalue_multiset",
    "good_embedding_check",
    "hom_dimension",
    "localize_component",
]


class NotFaithful(ValueError):
    pass


class ClassFunction:
    """A vector of cyclotomic values indexed by the conjugacy classes of a group."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values: Sequence) -> None:
        if len(values) != len(group.conjugacy_classes):
            raise ValueError("one value per conjugacy class required")
        self.group = group
        self.values = tuple(CycNumber.coerce(v) for v in values)

    @classmethod
    def from_function(cls, group: FiniteGroup, f: Callable[[int], object]) -> ClassFunction:
        return cls(group, [f(c.representative) for c in group.conjugacy_classes])

    @classmethod
    def constant(cls, group: FiniteGroup, c=1) -> ClassFunction:
        return cls(group, [c] * len(group.conjugacy_classes))

    @classmethod
    def indicator(cls, group: FiniteGroup, psi: ConjugacyClass) -> ClassFunction:
        return cls(group, [int(c.position == psi.position) for c in group.conjugacy_classes])

    def __call__(self, g: int) -> CycNumber:
        return self.values[self.group.class_index[g]]

    def _check(self, other: ClassFunction) -> None:
        if other.group is not self.group:
            raise ValueError("class functions on different groups")

    def __add__(self, other) -> ClassFunction:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other) -> ClassFunction:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        self._check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self) -> ClassFunction:
        return ClassFunction(self.group, [-a for a in self.values])

    def __mul__(self, other) -> ClassFunction:
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        try:
            c = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return ClassFunction(self.group, [a * c for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    __hash__ = None

    def conjugate(self) -> ClassFunction:
        return ClassFunction(self.group, [a.conjugate() for a in self.values])

    def inner(self, other: ClassFunction) -> CycNumber:
        """(1/|G|) sum_g self(g) conj(other(g))."""
        self._check(other)
        total = CycNumber.ZERO
        for c, a, b in zip(self.group.conjugacy_classes, self.values, other.values):
            total = total + a * b.conjugate() * c.size
        return total * Fraction(1, len(self.group))

    def restrict(self, sub: FiniteGroup) -> ClassFunction:
        """Restriction to a subgroup whose ``parent`` is this group."""
        if sub.parent is not self.group:
            raise ValueError("restriction target must be a subgroup of this group")
        return ClassFunction.from_function(sub, lambda z: self(sub.parent_index[z]))

    def localize(self, psi: ConjugacyClass) -> ClassFunction:
        return ClassFunction(self.group, [v if c.position == psi.position else CycNumber.ZERO
                                          for c, v in zip(self.group.conjugacy_classes, self.values)])

    def __repr__(self) -> str:
        return f"ClassFunction({[str(v) for v in self.values]})"

    def to_json(self) -> dict:
        return {
            "classes": [self.group.label(c.representative) for c in self.group.conjugacy_classes],
            "values": [v.to_json() for v in self.values],
        }


class MatrixRep:
    """A homomorphism G -> GL_n over a cyclotomic field, stored per element."""

    def __init__(self, group: FiniteGroup, images: Sequence[mx.Matrix], *, check: bool = True, name: str = "") -> None:
        if len(images) != len(group):
            raise ValueError("one matrix per group element required")
        self.group = group
        self.images = list(images)
        self.dim = len(images[0])
        self.name = name
        if check:
            self.check_homomorphism()

    @classmethod
    def from_generators(cls, group: FiniteGroup, gen_images: Mapping[int, object], *, name: str = "") -> MatrixRep:
        """Extend generator images along the Cayley graph, then verify."""
        gens = {g: mx.as_matrix(m) for g, m in gen_images.items()}
        if set(group.closure(gens)) != set(range(len(group))):
            raise ValueError("the given elements do not generate the group")
        dim = len(next(iter(gens.values()))) if gens else 1
        images: list[mx.Matrix | None] = [None] * len(group)
        images[0] = mx.identity(dim)
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                for s, m in gens.items():
                    y = group.table[s][x]
                    if images[y] is None:
                        images[y] = mx.matmul(m, images[x])
                        nxt.append(y)
            frontier = nxt
        rep = cls(group, images, check=False, name=name)
        rep.check_homomorphism(list(gens))
        return rep

    @classmethod
    def from_function(cls, group: FiniteGroup, f: Callable[[int], mx.Matrix], *, name: str = "") -> MatrixRep:
        return cls(group, [f(g) for g in range(len(group))], name=name)

    @classmethod
    def trivial(cls, group: FiniteGroup, dim: int = 1) -> MatrixRep:
        one = mx.identity(dim)
        return cls(group, [one] * len(group), check=False, name="trivial")

    @classmethod
    def one_dimensional(cls, group: FiniteGroup, values: Callable[[int], object], *, name: str = "") -> MatrixRep:
        return cls(group, [((CycNumber.coerce(values(g)),),) for g in range(len(group))], name=name)

    @classmethod
    def permutation(cls, group: FiniteGroup, action: Callable[[int, int], int], npoints: int, *, name: str = "") -> MatrixRep:
        """Permutation matrices of an action on {0..npoints-1}."""
        def mat(g):
            rows = [[CycNumber.ZERO] * npoints for _ in range(npoints)]
            for x in range(npoints):
                rows[action(g, x)][x] = CycNumber.ONE
            return tuple(tuple(r) for r in rows)
        return cls(group, [mat(g) for g in range(len(group))], name=name)

    def check_homomorphism(self, gens: Iterable[int] | None = None) -> None:
        """rho(s g) = rho(s) rho(g) for every generator s and element g."""
        gens = list(self.group.generators if gens is None else gens)
        for s in gens:
            for g in range(len(self.group)):
                if mx.matmul(self.images[s], self.images[g]) != self.images[self.group.table[s][g]]:
                    raise ValueError(f"not a homomorphism at generator {s}, element {g}")
        if not mx.is_identity(self.images[0]):
            raise ValueError("identity does not map to the identity matrix")

    def __call__(self, g: int) -> mx.Matrix:
        return self.images[g]

    def trace(self, g: int) -> CycNumber:
        return mx.trace(self.images[g])

    def character(self) -> ClassFunction:
        return ClassFunction.from_function(self.group, self.trace)

    def kernel(self) -> list[int]:
        return [g for g in range(len(self.group)) if mx.is_identity(self.images[g])]

    def is_faithful(self) -> bool:
        return self.kernel() == [0]

    def restrict(self, sub: FiniteGroup) -> MatrixRep:
        if sub.parent is not self.group:
            raise ValueError("restriction target must be a subgroup of this group")
        return MatrixRep(sub, [self.images[p] for p in sub.parent_index], check=False, name=self.name)

    def tensor(self, other: MatrixRep) -> MatrixRep:
        return MatrixRep(self.group, [mx.kron(a, b) for a, b in zip(self.images, other.images)], check=False)

    def direct_sum(self, other: MatrixRep) -> MatrixRep:
        n, m = self.dim, other.dim
        z = CycNumber.ZERO

        def block(a, b):
            top = [tuple(r) + (z,) * m for r in a]
            bottom = [(z,) * n + tuple(r) for r in b]
            return tuple(top + bottom)

        return MatrixRep(self.group, [block(a, b) for a, b in zip(self.images, other.images)], check=False)

    def dual(self) -> MatrixRep:
        return MatrixRep(self.group, [mx.transpose(self.images[self.group.inv[g]]) for g in range(len(self.group))], check=False)

    def eigenvalues(self, g: int) -> dict[int, int]:
        """Multiplicity of zeta_m^k in rho(g), m = order of g, keyed by k."""
        return eigenvalue_multiset(self, g)

    def to_json(self) -> dict:
        return {
            "dimension": self.dim,
            "generators": {str(s): mx.to_json(self.images[s]) for s in self.group.generators},
        }


def eigenvalue_multiset(rep: MatrixRep, g: int) -> dict[int, int]:
    """Eigenvalue multiplicities of rho(g) from traces of its powers.

    mult(zeta_m^k) = (1/m) sum_j tr(rho(g)^j) zeta_m^(-jk).
    """
    group = rep.group
    m = group.element_orders[g]
    traces = []
    x = 0
    for _ in range(m):
        traces.append(rep.trace(x))
        x = group.table[x][g]
    out = {}
    for k in range(m):
        total = CycNumber.ZERO
        for j, t in enumerate(traces):
            total = total + t * CycNumber.root(m, -j * k)
        mult = (total * Fraction(1, m)).to_fraction()
        if mult.denominator != 1 or mult < 0:
            raise ArithmeticError("eigenvalue multiplicity is not a nonnegative integer")
        if mult:
            out[k] = int(mult)
    return out


def _eigen_signature(rep: MatrixRep, g: int) -> tuple:
    m = rep.group.element_orders[g]
    # normalize exponents to a common denominator so different orders compare
    exp = rep.group.exponent
    return tuple(sorted(((k * exp // m) % exp, mult) for k, mult in eigenvalue_multiset(rep, g).items()))


def good_embedding_check(reps: Sequence[MatrixRep], psi: ConjugacyClass) -> tuple[bool, ConjugacyClass | None]:
    """Does H = prod GL(V_i) satisfy C_H(h) cap G = C_G(h) for h in psi?

    Diagonalizable matrices are GL-conjugate iff their eigenvalue multisets
    agree, so this asks whether the tuple of eigenvalue multisets separates
    psi from every other class. Returns (verdict, first colliding class).
    """
    if not reps:
        raise NotFaithful("empty representation list")
    group = reps[0].group
    kernel = set(range(len(group)))
    for r in reps:
        if r.group is not group:
            raise ValueError("representations of different groups")
        kernel &= set(r.kernel())
    if kernel != {0}:
        raise NotFaithful(f"joint kernel has order {len(kernel)}")
    target = tuple(_eigen_signature(r, psi.representative) for r in reps)
    for c in group.conjugacy_classes:
        if c.position == psi.position:
            continue
        if tuple(_eigen_signature(r, c.representative) for r in reps) == target:
            return False, c
    return True, None


def find_good_embedding(candidates: Sequence[MatrixRep], psi: ConjugacyClass) -> list[MatrixRep] | None:
    """Smallest faithful sub-list of ``candidates`` passing the check (bounded search)."""
    from itertools import combinations

    for k in range(1, len(candidates) + 1):
        for combo in combinations(candidates, k):
            try:
                ok, _ = good_embedding_check(list(combo), psi)
            except NotFaithful:
                continue
            if ok:
                return list(combo)
    return None


def hom_dimension(v: MatrixRep, w: MatrixRep) -> int:
    """dim Hom_G(V, W): nullspace of T rho_V(s) = rho_W(s) T over generators s."""
    dv, dw = v.dim, w.dim
    rows = []
    for s in v.group.generators:
        a, b = v(s), w(s)
        # unknown T[i][j] at column i*dv + j; equation at entry (i, j)
        for i in range(dw):
            for j in range(dv):
                row = [CycNumber.ZERO] * (dw * dv)
                for k in range(dv):
                    row[i * dv + k] = row[i * dv + k] + a[k][j]
                for k in range(dw):
                    row[k * dv + j] = row[k * dv + j] - b[i][k]
                rows.append(row)
    return len(mx.nullspace(rows, dw * dv))


def localize_component(m, psi: ConjugacyClass):
    """Component of a class-indexed module element at the maximal ideal of psi."""
    return m.localize(psi)


def class_intersection(group: FiniteGroup, sub: FiniteGroup, psi: ConjugacyClass) -> list[ConjugacyClass]:
    """Classes of ``sub`` partitioning psi cap sub."""
    if sub.parent is not group:
        raise ValueError("sub must be a subgroup of group")
    return [c for c in sub.conjugacy_classes if sub.parent_index[c.representative] in psi]
