"""Multivariate Laurent polynomials with cyclotomic coefficients.

Monomials are plain integer tuples indexed like ``LaurentPoly.variables``;
the zero tuple is the multiplicative identity.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CycNumber

__all__ = ["LaurentPoly", "Monomial", "monomial_inverse", "monomial_mul"]

Monomial = tuple[int, ...]


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_inverse(a: Monomial) -> Monomial:
    return tuple(-x for x in a)


def monomial_pow(a: Monomial, k: int) -> Monomial:
    return tuple(k * x for x in a)


class LaurentPoly:
    """Finite sum of c * x^e with no zero coefficients stored."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Monomial, object] | None = None) -> None:
        self.variables = tuple(variables)
        clean: dict[Monomial, CycNumber] = {}
        for exp, c in (terms or {}).items():
            c = CycNumber.coerce(c)
            if not c.is_zero():
                if len(exp) != len(self.variables):
                    raise ValueError(f"exponent {exp} does not match variables {self.variables}")
                clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict) -> LaurentPoly:
        p = cls.__new__(cls)
        p.variables = variables
        p.terms = {e: c for e, c in terms.items() if not c.is_zero()}
        return p

    # -- constructors ------------------------------------------------------
    @classmethod
    def constant(cls, variables: Sequence[str], c=1) -> LaurentPoly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables: Sequence[str], exp: Iterable[int], c=1) -> LaurentPoly:
        return cls(variables, {tuple(exp): c})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> LaurentPoly:
        exp = [0] * len(variables)
        exp[list(variables).index(name)] = 1
        return cls(variables, {tuple(exp): 1})

    def _like(self, terms: dict) -> LaurentPoly:
        return LaurentPoly._raw(self.variables, terms)

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        return LaurentPoly.constant(self.variables, CycNumber.coerce(other))

    # -- ring operations -----------------------------------------------------
    def __add__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            other = self._coerce(other)
            out: dict[Monomial, CycNumber] = defaultdict(lambda: CycNumber.ZERO)
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    out[e] = out[e] + c1 * c2
            return self._like(dict(out))
        try:
            c = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if c.is_zero():
            return self._like({})
        return self._like({e: v * c for e, v in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            return self._like({monomial_pow(e, k): c ** k})
        result = LaurentPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exp: Monomial, c=1) -> LaurentPoly:
        """Multiply by the unit c * x^exp."""
        c = CycNumber.coerce(c)
        return self._like({monomial_mul(e, exp): v * c for e, v in self.terms.items()})

    # -- queries -----------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * len(self.variables)}

    def constant_term(self) -> CycNumber:
        return self.terms.get((0,) * len(self.variables), CycNumber.ZERO)

    def sorted_terms(self) -> list[tuple[Monomial, CycNumber]]:
        return sorted(self.terms.items())

    def coefficient_sum(self) -> CycNumber:
        total = CycNumber.ZERO
        for c in self.terms.values():
            total = total + c
        return total

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.variables == other.variables and self.terms == other.terms
        try:
            return self == self._coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.variables, frozenset(self.terms.items())))

    def permute_variables(self, perm: Sequence[int]) -> LaurentPoly:
        """Substitute x_i -> x_perm[i]."""
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(e)
            for i, k in enumerate(e):
                new[perm[i]] += k
            out[tuple(new)] = c
        return self._like(out)

    def evaluate(self, point: Mapping[str, object] | Sequence[object]) -> CycNumber:
        """Exact substitution of cyclotomic values for the variables."""
        if isinstance(point, Mapping):
            values = [CycNumber.coerce(point[v]) for v in self.variables]
        else:
            values = [CycNumber.coerce(v) for v in point]
        for v, name in zip(values, self.variables):
            if v.is_zero() and any(e[self.variables.index(name)] < 0 for e in self.terms):
                raise ZeroDivisionError(f"variable {name} is zero but appears with a negative exponent")
        cache: dict[tuple[int, int], CycNumber] = {}

        def power(i: int, k: int) -> CycNumber:
            if (i, k) not in cache:
                cache[(i, k)] = values[i] ** k
            return cache[(i, k)]

        total = CycNumber.ZERO
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def divide_binomial(self, c: CycNumber, m: Monomial) -> LaurentPoly | None:
        """Exact quotient by (1 - c x^m), or None when it does not divide.

        Terms are grouped into chains e + k*m; on each chain the division is
        univariate synthetic division in t = x^m.
        """
        c = CycNumber.coerce(c)
        if not any(m):
            unit = 1 - c
            if unit.is_zero():
                return None if self.terms else self
            return self * unit.inverse()
        pivot = next(i for i, x in enumerate(m) if x)
        chains: dict[Monomial, dict[int, CycNumber]] = defaultdict(dict)
        for e, v in self.terms.items():
            k = e[pivot] // m[pivot]
            base = tuple(x - k * y for x, y in zip(e, m))
            chains[base][k] = v
        out: dict[Monomial, CycNumber] = {}
        for base, coeffs in chains.items():
            lo, hi = min(coeffs), max(coeffs)
            if lo == hi:
                return None
            prev = CycNumber.ZERO
            for k in range(lo, hi):
                q = coeffs.get(k, CycNumber.ZERO) + c * prev
                if not q.is_zero():
                    out[tuple(x + k * y for x, y in zip(base, m))] = q
                prev = q
            if not (coeffs[hi] + c * prev).is_zero():
                return None
        return self._like(out)

    # -- display and serialization ---------------------------------------------
    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms()[::-1]:
            mon = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.variables, e) if k
            )
            cs = str(c)
            if not mon:
                parts.append(cs)
            elif cs == "1":
                parts.append(mon)
            elif cs == "-1":
                parts.append("-" + mon)
            elif c.is_rational():
                parts.append(f"{cs}*{mon}")
            else:
                parts.append(f"({cs})*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [[list(e), c.to_json()] for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, obj) -> LaurentPoly:
        return cls(obj["variables"], {tuple(e): CycNumber.from_json(c) for e, c in obj["terms"]})
