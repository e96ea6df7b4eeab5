"""Euler characteristics of O(d)^G on P(V)/G for finite G, sector by sector.

Degree-d forms carry the action g . y_i = sum_j rho(g)_{ji} y_j (substitute
each coordinate by the matching column of rho(g)), so the trace of h on
forms of degree d is h_d evaluated at the eigenvalues of rho(h).  This choice
makes the identity sector equal binom(n+d, d)/|G| and the sector sum equal
the Molien average.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, gcd

from ..exact import matrix as mx
from ..exact.cyclotomic import CycNumber
from ..exact.laurent import LaurentPoly
from ..groups.group import ConjugacyClass, FiniteGroup
from ..groups.reps import MatrixRep, eigenvalue_multiset
from ..gkm.fixed_points import pushforward_to_point
from ..gkm.flags import o_d_class, projective_space_data

__all__ = [
    "Caps",
    "CapExceeded",
    "LinearAction",
    "RRResult",
    "SectorReport",
    "galois_orbits",
    "kawasaki_chi",
    "molien_oracle",
    "sector_contribution",
    "sector_vs_lefschetz",
]


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class Caps:
    group_order: int = 2000
    basis_size: int = 5000
    degree: int = 60

    @classmethod
    def from_json(cls, obj) -> Caps:
        known = {"group_order", "basis_size", "degree"}
        extra = set(obj) - known
        if extra:
            raise ValueError(f"unknown caps {sorted(extra)}")
        return cls(**{k: int(v) for k, v in obj.items()})


DEFAULT_CAPS = Caps()


class LinearAction:
    """A faithful representation V of a finite group, acting on P(V) and on forms."""

    def __init__(self, rep: MatrixRep, *, name: str = "", caps: Caps = DEFAULT_CAPS) -> None:
        if len(rep.group) > caps.group_order:
            raise CapExceeded(f"|G| = {len(rep.group)} exceeds cap {caps.group_order}")
        if not rep.is_faithful():
            raise ValueError("the representation is not faithful")
        self.rep = rep
        self.group: FiniteGroup = rep.group
        self.name = name
        self.caps = caps
        self._forms: dict[tuple[int, int], list] = {}

    @property
    def dim(self) -> int:
        return self.rep.dim

    def monomials(self, d: int) -> list[tuple[int, ...]]:
        self._check_degree(d)
        size = comb(self.dim - 1 + d, d)
        if size > self.caps.basis_size:
            raise CapExceeded(f"monomial basis of size {size} exceeds cap {self.caps.basis_size}")
        out = []
        for combo in combinations_with_replacement(range(self.dim), d):
            e = [0] * self.dim
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
        return sorted(out, reverse=True)

    def _check_degree(self, d: int) -> None:
        if d < 0:
            raise ValueError("degree must be nonnegative")
        if d > self.caps.degree:
            raise CapExceeded(f"degree {d} exceeds cap {self.caps.degree}")

    def form_matrix(self, g: int, d: int) -> mx.Matrix:
        """Exact matrix of g on degree-d forms in the monomial basis (column = image)."""
        basis = self.monomials(d)
        where = {m: i for i, m in enumerate(basis)}
        names = [f"y{i}" for i in range(self.dim)]
        m = self.rep(g)
        columns = [
            LaurentPoly(names, {tuple(1 if k == j else 0 for k in range(self.dim)): m[j][i] for j in range(self.dim)})
            for i in range(self.dim)
        ]
        powers = [[LaurentPoly.constant(names, 1)] for _ in range(self.dim)]
        for i in range(self.dim):
            for _ in range(d):
                powers[i].append(powers[i][-1] * columns[i])
        rows = [[CycNumber.ZERO] * len(basis) for _ in basis]
        for c, mono in enumerate(basis):
            img = LaurentPoly.constant(names, 1)
            for i, a in enumerate(mono):
                if a:
                    img = img * powers[i][a]
            for exp, coeff in img.terms.items():
                rows[where[exp]][c] = coeff
        return tuple(tuple(r) for r in rows)

    def form_trace(self, g: int, d: int) -> CycNumber:
        return mx.trace(self.form_matrix(g, d))

    def eigenvalues(self, g: int) -> list[CycNumber]:
        m = self.group.element_orders[g]
        out = []
        for k, mult in sorted(eigenvalue_multiset(self.rep, g).items()):
            out.extend([CycNumber.root(m, k)] * mult)
        return out


@lru_cache(maxsize=None)
def _section_character(n: int, d: int) -> LaurentPoly:
    # collapsed fixed-point sum for O(d) on P^n
    data = projective_space_data(n)
    return pushforward_to_point(o_d_class(data, d))


def sector_contribution(act: LinearAction, psi: ConjugacyClass, d: int) -> CycNumber:
    """(|psi|/|G|) times the collapsed character of H^0(O(d)) evaluated at the eigenvalues of h."""
    act._check_degree(d)
    char = _section_character(act.dim - 1, d)
    value = char.evaluate(act.eigenvalues(psi.representative))
    return value * Fraction(psi.size, len(act.group))


def sector_vs_lefschetz(act: LinearAction, psi: ConjugacyClass, d: int) -> dict:
    """Sector value against (|psi|/|G|) trace(h | forms) from the explicit matrix, for two representatives."""
    sector = sector_contribution(act, psi, d)
    scale = Fraction(psi.size, len(act.group))
    reps = sorted({psi.representative, psi.members[-1]})
    lefschetz = [act.form_trace(h, d) * scale for h in reps]
    return {
        "sector": sector,
        "lefschetz": lefschetz[0],
        "representatives": reps,
        "pass": all(v == sector for v in lefschetz),
    }


def molien_oracle(act: LinearAction, d: int, *, projector: bool = False) -> dict:
    """(1/|G|) sum_g trace(g | forms), element by element; optionally the projector rank too."""
    group = act.group
    total = CycNumber.ZERO
    acc = None
    for g in range(len(group)):
        m = act.form_matrix(g, d)
        total = total + mx.trace(m)
        if projector:
            acc = m if acc is None else mx.add(acc, m)
    avg = total * Fraction(1, len(group))
    out = {"average": avg.to_fraction() if avg.is_rational() else avg}
    if projector:
        out["projector_rank"] = mx.rank(mx.scale(acc, Fraction(1, len(group))))
    return out


def galois_orbits(group: FiniteGroup) -> list[list[int]]:
    """Classes grouped under g -> g^k, gcd(k, exponent) = 1 (rational classes)."""
    e = group.exponent
    seen: set[int] = set()
    out = []
    for c in group.conjugacy_classes:
        if c.position in seen:
            continue
        orbit = sorted({group.class_index[group.power(c.representative, k)] for k in range(1, e + 1) if gcd(k, e) == 1})
        seen.update(orbit)
        out.append(orbit)
    return out


@dataclass
class SectorReport:
    psi: ConjugacyClass
    representative: int
    eigenvalues: list[CycNumber]
    contribution: CycNumber
    fixed_locus: list[int]
    lefschetz: CycNumber
    lefschetz_pass: bool

    def to_json(self) -> dict:
        group = self.psi.group
        return {
            "class": self.psi.position,
            "size": self.psi.size,
            "representative": group.label(self.representative),
            "eigenvalues": [v.to_json() for v in self.eigenvalues],
            "contribution": _jsonify(self.contribution),
            "fixed_locus_dims": self.fixed_locus,
            "lefschetz": _jsonify(self.lefschetz),
            "lefschetz_pass": self.lefschetz_pass,
        }


@dataclass
class RRResult:
    degree: int
    total: CycNumber
    sectors: list[SectorReport]
    oracle: Fraction
    galois_rational: bool
    projector_rank: int | None = None
    verdict: bool = field(init=False)

    def __post_init__(self) -> None:
        self.verdict = (
            self.total == self.oracle
            and self.galois_rational
            and all(s.lefschetz_pass for s in self.sectors)
            and (self.projector_rank is None or self.projector_rank == self.oracle)
        )

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "total": _jsonify(self.total),
            "oracle": str(self.oracle),
            "projector_rank": self.projector_rank,
            "galois_rational": self.galois_rational,
            "sectors": [s.to_json() for s in self.sectors],
            "verdict": self.verdict,
        }


def _jsonify(v: CycNumber):
    return str(v.to_fraction()) if v.is_rational() else v.to_json()


def kawasaki_chi(act: LinearAction, d: int, *, projector: bool = False) -> RRResult:
    """Sum of sector contributions, compared with the Molien average."""
    sectors = []
    for psi in act.group.conjugacy_classes:
        h = psi.representative
        lv = sector_vs_lefschetz(act, psi, d)
        profile = sorted(eigenvalue_multiset(act.rep, h).values(), reverse=True)
        sectors.append(SectorReport(
            psi=psi,
            representative=h,
            eigenvalues=act.eigenvalues(h),
            contribution=lv["sector"],
            # X^h is the disjoint union of P(E) over eigenspaces E
            fixed_locus=[m - 1 for m in profile],
            lefschetz=lv["lefschetz"],
            lefschetz_pass=lv["pass"],
        ))
    total = CycNumber.ZERO
    for s in sectors:
        total = total + s.contribution
    rational = True
    for orbit in galois_orbits(act.group):
        part = CycNumber.ZERO
        for i in orbit:
            part = part + sectors[i].contribution
        rational &= part.is_rational()
    oracle = molien_oracle(act, d, projector=projector)
    avg = oracle["average"]
    if not isinstance(avg, Fraction):
        raise ArithmeticError("Molien average is not rational")
    return RRResult(d, total, sectors, avg, rational, oracle.get("projector_rank"))
