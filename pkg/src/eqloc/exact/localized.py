"""Localized elements: Laurent polynomials over products of binomials (1 - c x^m)."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .cyclotomic import CycNumber
from .laurent import LaurentPoly, Monomial, monomial_inverse

__all__ = ["BinomialFactor", "LocalizedElement", "ResidualDenominator", "localized_sum"]


class ResidualDenominator(ArithmeticError):
    """Denominator factors survived reduction where a polynomial was expected."""

    def __init__(self, element: LocalizedElement, context: str = "") -> None:
        self.element = element
        factors = ", ".join(str(f) for f in element.denominator)
        msg = f"residual denominator [{factors}]"
        super().__init__(f"{context}: {msg}" if context else msg)


@dataclass(frozen=True)
class BinomialFactor:
    """The binomial 1 - scalar * x^monomial.

    Canonical factors have a lexicographically positive monomial; use
    :meth:`canonical` to split an arbitrary binomial into unit * factor.
    """

    monomial: Monomial
    scalar: CycNumber

    def __post_init__(self) -> None:
        if self.scalar.is_zero():
            raise ValueError("binomial factor with zero scalar is the unit 1")
        if not any(self.monomial) and self.scalar == 1:
            raise ValueError("1 - 1 is zero and cannot be a denominator factor")

    def __lt__(self, other: BinomialFactor) -> bool:
        return (self.monomial, self.scalar.sort_key()) < (other.monomial, other.scalar.sort_key())

    @staticmethod
    def canonical(scalar, monomial: Monomial) -> tuple[CycNumber, Monomial, BinomialFactor | None]:
        """Write 1 - c x^m = u * x^s * f with f canonical (None when m = 0)."""
        c = CycNumber.coerce(scalar)
        m = tuple(monomial)
        if not any(m):
            return 1 - c, m, None
        if m > (0,) * len(m):
            return CycNumber.ONE, (0,) * len(m), BinomialFactor(m, c)
        # 1 - c x^m = -c x^m (1 - c^-1 x^-m)
        return -c, m, BinomialFactor(monomial_inverse(m), c.inverse())

    def as_poly(self, variables) -> LaurentPoly:
        zero = (0,) * len(variables)
        return LaurentPoly(variables, {zero: 1}) - LaurentPoly(variables, {self.monomial: self.scalar})

    def __str__(self) -> str:
        return f"(1 - ({self.scalar})*x^{list(self.monomial)})"

    def to_json(self) -> dict:
        return {"c": self.scalar.to_json(), "m": list(self.monomial)}

    @classmethod
    def from_json(cls, obj) -> BinomialFactor:
        return cls(tuple(obj["m"]), CycNumber.from_json(obj["c"]))


class LocalizedElement:
    """numerator / prod(denominator); always stored reduced."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: Iterable[BinomialFactor] = (), *, reduce: bool = True) -> None:
        num = numerator
        den: list[BinomialFactor] = []
        for f in denominator:
            u, s, g = BinomialFactor.canonical(f.scalar, f.monomial)
            if g is None:
                num = num * u.inverse()
                continue
            if g != f:
                num = num.shift(monomial_inverse(s), u.inverse())
            den.append(g)
        self.numerator = num
        self.denominator = tuple(sorted(den))
        if reduce:
            self._reduce()

    @classmethod
    def over_binomials(cls, numerator: LaurentPoly, binomials: Iterable[tuple[object, Monomial]]) -> LocalizedElement:
        """numerator / prod(1 - c x^m) for arbitrary (c, m) pairs."""
        num = numerator
        den = []
        for c, m in binomials:
            u, s, g = BinomialFactor.canonical(c, m)
            if u.is_zero():
                raise ZeroDivisionError("denominator binomial 1 - 1 vanishes")
            num = num.shift(monomial_inverse(s), u.inverse())
            if g is not None:
                den.append(g)
        return cls(num, den)

    @classmethod
    def polynomial(cls, p: LaurentPoly) -> LocalizedElement:
        return cls(p, (), reduce=False)

    @property
    def variables(self) -> tuple[str, ...]:
        return self.numerator.variables

    def _reduce(self) -> None:
        if self.numerator.is_zero():
            self.denominator = ()
            return
        remaining = list(self.denominator)
        num = self.numerator
        changed = True
        while changed and remaining:
            changed = False
            for f in sorted(set(remaining)):
                q = num.divide_binomial(f.scalar, f.monomial)
                if q is not None:
                    num = q
                    remaining.remove(f)
                    changed = True
        self.numerator = num
        self.denominator = tuple(sorted(remaining))

    # -- arithmetic ------------------------------------------------------------
    def _coerce(self, other) -> LocalizedElement:
        if isinstance(other, LocalizedElement):
            return other
        if isinstance(other, LaurentPoly):
            return LocalizedElement.polynomial(other)
        return LocalizedElement.polynomial(LaurentPoly.constant(self.variables, CycNumber.coerce(other)))

    def __add__(self, other) -> LocalizedElement:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return localized_sum([self, other])

    __radd__ = __add__

    def __neg__(self) -> LocalizedElement:
        return LocalizedElement(-self.numerator, self.denominator, reduce=False)

    def __sub__(self, other) -> LocalizedElement:
        return self + (-self._coerce(other))

    def __mul__(self, other) -> LocalizedElement:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return LocalizedElement(self.numerator * other.numerator, self.denominator + other.denominator)

    __rmul__ = __mul__

    def divide_by(self, factors: Iterable[BinomialFactor]) -> LocalizedElement:
        return LocalizedElement(self.numerator, self.denominator + tuple(factors))

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        lhs = self.numerator
        for f in other.denominator:
            lhs = lhs * f.as_poly(self.variables)
        rhs = other.numerator
        for f in self.denominator:
            rhs = rhs * f.as_poly(self.variables)
        return lhs == rhs

    __hash__ = None

    def is_polynomial(self) -> bool:
        return not self.denominator

    def as_polynomial(self, context: str = "") -> LaurentPoly:
        if self.denominator:
            raise ResidualDenominator(self, context)
        return self.numerator

    def __repr__(self) -> str:
        if not self.denominator:
            return f"LocalizedElement({self.numerator})"
        den = " * ".join(str(f) for f in self.denominator)
        return f"LocalizedElement(({self.numerator}) / {den})"

    def to_json(self) -> dict:
        return {"num": self.numerator.to_json(), "den": [f.to_json() for f in self.denominator]}

    @classmethod
    def from_json(cls, obj) -> LocalizedElement:
        return cls(LaurentPoly.from_json(obj["num"]), [BinomialFactor.from_json(f) for f in obj["den"]], reduce=False)


def localized_sum(items: Iterable[LocalizedElement]) -> LocalizedElement:
    """Sum over the least common multiset of denominators, reduced once."""
    items = list(items)
    if not items:
        raise ValueError("localized_sum needs at least one term to know its variables")
    variables = items[0].variables
    common: Counter[BinomialFactor] = Counter()
    for it in items:
        common |= Counter(it.denominator)
    num = LaurentPoly(variables)
    for it in items:
        missing = common - Counter(it.denominator)
        term = it.numerator
        for f, k in sorted(missing.items()):
            for _ in range(k):
                term = term * f.as_poly(variables)
        num = num + term
    return LocalizedElement(num, common.elements())
