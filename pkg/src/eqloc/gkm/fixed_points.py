"""Torus spaces given by isolated fixed points and tangent weights.

Convention, fixed in one place: a tangent weight chi at p contributes the
factor lambda_{-1}(chi^*) = 1 - chi^{-1}, and the pushforward to a point is
sum_p alpha_p / prod(1 - chi^{-1}).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ..exact.cyclotomic import CycNumber
from ..exact.laurent import LaurentPoly, Monomial, monomial_inverse
from ..exact.localized import LocalizedElement, ResidualDenominator, localized_sum

__all__ = [
    "EquivClass",
    "FiberedFixedPointData",
    "FixedPoint",
    "FixedPointData",
    "euler_class_expansion",
    "fiberwise_pushforward",
    "invertible_at",
    "lambda_minus_one",
    "point_class",
    "pushforward_to_point",
]


@dataclass(frozen=True)
class FixedPoint:
    label: str
    tangent: tuple[Monomial, ...]


@dataclass(frozen=True)
class FixedPointData:
    variables: tuple[str, ...]
    points: tuple[FixedPoint, ...]

    def __post_init__(self) -> None:
        n = len(self.variables)
        zero = (0,) * n
        for p in self.points:
            for w in p.tangent:
                if len(w) != n:
                    raise ValueError(f"weight {w} at {p.label} has the wrong length")
                if tuple(w) == zero:
                    raise ValueError(f"trivial tangent weight at {p.label}: fixed point is not isolated")
        if not self.points:
            raise ValueError("need at least one fixed point")

    @classmethod
    def build(cls, variables: Sequence[str], points: Iterable[tuple[str, Iterable[Sequence[int]]]]) -> FixedPointData:
        return cls(tuple(variables), tuple(FixedPoint(lab, tuple(tuple(w) for w in tan)) for lab, tan in points))

    @classmethod
    def point(cls, variables: Sequence[str]) -> FixedPointData:
        return cls.build(variables, [("pt", [])])

    def __len__(self) -> int:
        return len(self.points)

    def index(self, label: str) -> int:
        for i, p in enumerate(self.points):
            if p.label == label:
                return i
        raise KeyError(label)

    def euler_factor(self, i: int) -> LaurentPoly:
        return lambda_minus_one(self.variables, self.points[i].tangent)

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "points": [{"label": p.label, "tangent": [list(w) for w in p.tangent]} for p in self.points],
        }

    @classmethod
    def from_json(cls, obj, pointer: str = "") -> FixedPointData:
        from ..groups.builtins import DescriptorError

        if not isinstance(obj, dict):
            raise DescriptorError(pointer, "fixed-point data must be an object")
        variables = obj.get("variables")
        if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
            raise DescriptorError(f"{pointer}/variables", "expected a list of names")
        points = obj.get("points")
        if not isinstance(points, list) or not points:
            raise DescriptorError(f"{pointer}/points", "expected a nonempty list")
        built = []
        for i, p in enumerate(points):
            if not isinstance(p, dict) or not isinstance(p.get("tangent"), list):
                raise DescriptorError(f"{pointer}/points/{i}", "expected {label, tangent}")
            for j, w in enumerate(p["tangent"]):
                if not isinstance(w, list) or len(w) != len(variables) or not all(isinstance(e, int) for e in w):
                    raise DescriptorError(f"{pointer}/points/{i}/tangent/{j}", f"expected {len(variables)} integers")
                if not any(w):
                    raise DescriptorError(f"{pointer}/points/{i}/tangent/{j}", "trivial weight")
            built.append((str(p.get("label", i)), p["tangent"]))
        return cls.build(variables, built)


def lambda_minus_one(variables: Sequence[str], weights: Iterable[Monomial]) -> LaurentPoly:
    """prod over chi of (1 - chi^{-1})."""
    out = LaurentPoly.constant(variables, 1)
    one = LaurentPoly.constant(variables, 1)
    for w in weights:
        out = out * (one - LaurentPoly.monomial(variables, monomial_inverse(tuple(w))))
    return out


def _over_euler(num: LaurentPoly, weights: Iterable[Monomial]) -> LocalizedElement:
    return LocalizedElement.over_binomials(num, [(1, monomial_inverse(tuple(w))) for w in weights])


def _as_localized(x, variables) -> LocalizedElement:
    if isinstance(x, LocalizedElement):
        return x
    if isinstance(x, LaurentPoly):
        return LocalizedElement.polynomial(x)
    return LocalizedElement.polynomial(LaurentPoly.constant(variables, CycNumber.coerce(x)))


class EquivClass:
    """A class given by its restrictions to the fixed points."""

    __slots__ = ("data", "restrictions")

    def __init__(self, data: FixedPointData, restrictions: Sequence) -> None:
        if len(restrictions) != len(data.points):
            raise ValueError("one restriction per fixed point required")
        self.data = data
        self.restrictions = tuple(_as_localized(r, data.variables) for r in restrictions)

    @classmethod
    def constant(cls, data: FixedPointData, c=1) -> EquivClass:
        return cls(data, [c] * len(data.points))

    @classmethod
    def pullback_from_point(cls, data: FixedPointData, alpha: LaurentPoly) -> EquivClass:
        return cls(data, [alpha] * len(data.points))

    def _check(self, other: EquivClass) -> None:
        if other.data != self.data:
            raise ValueError("classes on different spaces")

    def __add__(self, other: EquivClass) -> EquivClass:
        self._check(other)
        return EquivClass(self.data, [a + b for a, b in zip(self.restrictions, other.restrictions)])

    def __sub__(self, other: EquivClass) -> EquivClass:
        self._check(other)
        return EquivClass(self.data, [a - b for a, b in zip(self.restrictions, other.restrictions)])

    def __mul__(self, other) -> EquivClass:
        if isinstance(other, EquivClass):
            self._check(other)
            return EquivClass(self.data, [a * b for a, b in zip(self.restrictions, other.restrictions)])
        return EquivClass(self.data, [a * other for a in self.restrictions])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, EquivClass):
            return NotImplemented
        return self.data == other.data and all(a == b for a, b in zip(self.restrictions, other.restrictions))

    __hash__ = None

    def polynomials(self) -> list[LaurentPoly]:
        return [r.as_polynomial(self.data.points[i].label) for i, r in enumerate(self.restrictions)]

    def to_json(self) -> dict:
        return {"restrictions": [r.to_json() for r in self.restrictions]}


def pushforward_to_point(alpha: EquivClass) -> LaurentPoly:
    """sum_p alpha_p / lambda_{-1}(T_p^*), collapsed to a Laurent polynomial."""
    data = alpha.data
    terms = [r * _over_euler(LaurentPoly.constant(data.variables, 1), p.tangent) for r, p in zip(alpha.restrictions, data.points)]
    return localized_sum(terms).as_polynomial("pushforward to a point")


def point_class(data: FixedPointData, l: int) -> EquivClass:
    """i_{l*} 1: restriction lambda_{-1}(T_{p_l}^*) at p_l and 0 elsewhere (self-intersection)."""
    zero = LaurentPoly(data.variables)
    return EquivClass(data, [data.euler_factor(i) if i == l else zero for i in range(len(data.points))])


def euler_class_expansion(data: FixedPointData) -> dict:
    """lambda_{-1}(T^*) against the sum of point classes, plus their pushforwards."""
    euler = EquivClass(data, [data.euler_factor(i) for i in range(len(data.points))])
    points = [point_class(data, l) for l in range(len(data.points))]
    total = points[0]
    for pc in points[1:]:
        total = total + pc
    point_pushes = [pushforward_to_point(pc) for pc in points]
    euler_push = pushforward_to_point(euler)
    return {
        "euler": euler,
        "expansion_ok": total == euler,
        "point_pushforwards_ok": all(p == LaurentPoly.constant(data.variables, 1) for p in point_pushes),
        "euler_pushforward": euler_push,
        "fixed_point_count": len(data.points),
        "pass": total == euler
        and all(p == LaurentPoly.constant(data.variables, 1) for p in point_pushes)
        and euler_push == LaurentPoly.constant(data.variables, len(data.points)),
    }


def invertible_at(weights: Iterable[Monomial], point: Mapping[str, object] | Sequence[object], variables: Sequence[str] | None = None) -> bool:
    """True iff chi(point) != 1 for every weight, i.e. lambda_{-1} of the dual is a unit there."""
    weights = [tuple(w) for w in weights]
    if not weights:
        return True
    if variables is None:
        if isinstance(point, Mapping):
            variables = list(point)
        else:
            variables = [f"x{i}" for i in range(len(point))]
    for w in weights:
        if LaurentPoly.monomial(variables, w).evaluate(point) == 1:
            return False
    return True


@dataclass(frozen=True)
class FiberedFixedPointData:
    """A fibration source -> target on fixed points, with relative tangent weights per source point."""

    source: FixedPointData
    target: FixedPointData
    projection: tuple[int, ...]
    relative: tuple[tuple[Monomial, ...], ...]

    def __post_init__(self) -> None:
        from collections import Counter

        if self.source.variables != self.target.variables:
            raise ValueError("source and target use different variables")
        if len(self.projection) != len(self.source.points) or len(self.relative) != len(self.source.points):
            raise ValueError("projection and relative tangents must cover every source point")
        if set(self.projection) != set(range(len(self.target.points))):
            raise ValueError("projection is not surjective")
        for i, p in enumerate(self.source.points):
            base = self.target.points[self.projection[i]].tangent
            if Counter(p.tangent) != Counter(self.relative[i]) + Counter(base):
                raise ValueError(f"tangent at {p.label} is not fiber + base")

    def fiber(self, q: int) -> list[int]:
        return [i for i, t in enumerate(self.projection) if t == q]

    @classmethod
    def to_point(cls, data: FixedPointData) -> FiberedFixedPointData:
        return cls(data, FixedPointData.point(data.variables), (0,) * len(data.points), tuple(p.tangent for p in data.points))


def fiberwise_pushforward(fib: FiberedFixedPointData, beta: EquivClass, *, collapse: bool = True) -> EquivClass:
    """Per target point q: sum over p above q of beta_p / lambda_{-1}(relative T_p^*)."""
    if beta.data != fib.source:
        raise ValueError("class does not live on the source")
    variables = fib.source.variables
    out = []
    for q, tp in enumerate(fib.target.points):
        terms = [
            beta.restrictions[i] * _over_euler(LaurentPoly.constant(variables, 1), fib.relative[i])
            for i in fib.fiber(q)
        ]
        s = localized_sum(terms)
        if collapse and not s.is_polynomial():
            raise ResidualDenominator(s, f"fiber over {tp.label}")
        out.append(s)
    return EquivClass(fib.target, out)
