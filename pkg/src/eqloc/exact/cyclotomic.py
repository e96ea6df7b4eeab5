"""Exact arithmetic in cyclotomic fields.

Every element is stored over the power basis of the smallest field
Q(zeta_N) that contains it, so equal numbers have identical representations
and can be hashed.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational

__all__ = ["CycNumber", "cyclotomic_polynomial", "euler_phi", "zeta"]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result = n
    for p in _prime_factors(n):
        result -= result // p
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d:
            continue
        den = cyclotomic_polynomial(d)
        # exact division by a monic polynomial
        quot = [0] * (len(num) - len(den) + 1)
        rem = list(num)
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(den) - 1]
            quot[i] = c
            if c:
                for j, dc in enumerate(den):
                    rem[i + j] -= c * dc
        assert not any(rem[: len(den) - 1])
        num = quot
    return tuple(num)


def _reduce(vec: list[Fraction], n: int) -> list[Fraction]:
    """Reduce a coefficient vector in zeta_n modulo Phi_n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    vec = list(vec)
    for i in range(len(vec) - 1, deg - 1, -1):
        c = vec[i]
        if c:
            base = i - deg
            for j in range(deg):
                if phi[j]:
                    vec[base + j] -= c * phi[j]
            vec[i] = 0
    if len(vec) < deg:
        vec.extend([Fraction(0)] * (deg - len(vec)))
    return vec[:deg]


def _from_powers(n: int, powers: dict[int, Fraction]) -> list[Fraction]:
    vec = [Fraction(0)] * n
    for k, c in powers.items():
        vec[k % n] += c
    return _reduce(vec, n)


def _promote(coeffs: tuple[Fraction, ...], n: int, m: int) -> list[Fraction]:
    """Re-express an element of Q(zeta_n) in the power basis of Q(zeta_m), n | m."""
    if n == m:
        return list(coeffs)
    step = m // n
    vec = [Fraction(0)] * m
    for k, c in enumerate(coeffs):
        if c:
            vec[(k * step) % m] += c
    return _reduce(vec, m)


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular rational system by Gauss-Jordan elimination."""
    n = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


@lru_cache(maxsize=None)
def _descent_data(n: int, m: int):
    """Embedding of Q(zeta_m) in Q(zeta_n), pivot rows, and the inverse pivot block."""
    dm = euler_phi(m)
    cols = [_promote(tuple(Fraction(int(i == j)) for i in range(dm)), m, n) for j in range(dm)]
    emb = [[cols[j][i] for j in range(dm)] for i in range(euler_phi(n))]
    chosen: list[int] = []
    reduced: list[tuple[list[Fraction], int]] = []
    for i, row in enumerate(emb):
        r = list(row)
        for b, col in reduced:
            if r[col]:
                f = r[col] / b[col]
                r = [x - f * y for x, y in zip(r, b)]
        col = next((k for k, x in enumerate(r) if x), None)
        if col is not None:
            reduced.append((r, col))
            chosen.append(i)
        if len(chosen) == dm:
            break
    block = [emb[i] for i in chosen]
    inv_cols = [_solve(block, [Fraction(int(i == j)) for i in range(dm)]) for j in range(dm)]
    inv = [[inv_cols[j][i] for j in range(dm)] for i in range(dm)]
    return emb, tuple(chosen), inv


def _try_descend(vec: list[Fraction], n: int, m: int) -> list[Fraction] | None:
    p = n // m
    if m % p == 0:
        # Q(zeta_n) = Q(zeta_m)(zeta_n) with basis 1, zeta_n, ..., zeta_n^(p-1)
        if any(c for k, c in enumerate(vec) if k % p):
            return None
        return list(vec[::p])
    emb, rows, inv = _descent_data(n, m)
    rhs = [vec[i] for i in rows]
    d = [sum((a * b for a, b in zip(row, rhs) if a), Fraction(0)) for row in inv]
    for i, row in enumerate(emb):
        if sum((a * b for a, b in zip(row, d) if a), Fraction(0)) != vec[i]:
            return None
    return d


def _normalize(n: int, vec: list[Fraction]) -> tuple[int, tuple[Fraction, ...]]:
    if all(c == 0 for c in vec[1:]):
        return 1, (vec[0] if vec else Fraction(0),)
    while True:
        if n % 4 == 2:
            d = _try_descend(vec, n, n // 2)
            assert d is not None
            n, vec = n // 2, d
            continue
        for p in _prime_factors(n):
            m = n // p
            if m % 4 == 2:
                m //= 2
            d = _try_descend(vec, n, m)
            if d is not None:
                n, vec = m, d
                break
        else:
            return n, tuple(vec)
        if all(c == 0 for c in vec[1:]):
            return 1, (vec[0],)


class CycNumber:
    """An element of Q(zeta_N), zeta_N = exp(2 pi i / N).

    ``order`` is the conductor of the smallest cyclotomic field containing the
    value; ``coeffs`` are its rational coordinates on 1, zeta, ..., zeta^(phi-1).
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs, *, _canonical: bool = False) -> None:
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        vec = [Fraction(c) for c in coeffs]
        if not _canonical:
            deg = euler_phi(order)
            if len(vec) != deg:
                vec = _reduce(vec + [Fraction(0)] * max(0, deg - len(vec)), order)
            order, vec = _normalize(order, vec)
        self.order = order
        self.coeffs = tuple(vec)
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def rational(cls, q) -> CycNumber:
        return cls(1, (Fraction(q),), _canonical=True)

    @classmethod
    def root(cls, n: int, k: int = 1) -> CycNumber:
        """zeta_n ** k."""
        return cls.from_powers(n, {k: 1})

    @classmethod
    def from_powers(cls, n: int, powers: dict[int, object]) -> CycNumber:
        """Sum of c * zeta_n**k over the given {k: c} mapping."""
        return cls(n, _from_powers(n, {k: Fraction(c) for k, c in powers.items()}))

    @classmethod
    def coerce(cls, x) -> CycNumber:
        if isinstance(x, CycNumber):
            return x
        if isinstance(x, (int, Rational)):
            return cls.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to CycNumber")

    # -- predicates and views -------------------------------------------
    def is_zero(self) -> bool:
        return self.order == 1 and self.coeffs[0] == 0

    def is_rational(self) -> bool:
        return self.order == 1

    def to_fraction(self) -> Fraction:
        if self.order != 1:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def sort_key(self) -> tuple:
        return (self.order, self.coeffs)

    def in_order(self, m: int) -> list[Fraction]:
        """Coordinates in Q(zeta_m); m must be a multiple of ``order``."""
        if m % self.order:
            raise ValueError(f"Q(zeta_{self.order}) is not contained in Q(zeta_{m})")
        return _promote(self.coeffs, self.order, m)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other) -> CycNumber:
        try:
            other = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if self.order == 1 and other.order == 1:
            return CycNumber.rational(self.coeffs[0] + other.coeffs[0])
        m = _lcm(self.order, other.order)
        a, b = self.in_order(m), other.in_order(m)
        return CycNumber(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> CycNumber:
        return CycNumber(self.order, tuple(-c for c in self.coeffs), _canonical=True)

    def __sub__(self, other) -> CycNumber:
        try:
            other = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> CycNumber:
        return CycNumber.coerce(other) - self

    def __mul__(self, other) -> CycNumber:
        try:
            other = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if other.order == 1:
            q = other.coeffs[0]
            if q == 0:
                return _ZERO
            return CycNumber(self.order, tuple(c * q for c in self.coeffs), _canonical=True)
        if self.order == 1:
            return other * self
        m = _lcm(self.order, other.order)
        a, b = self.in_order(m), other.in_order(m)
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycNumber(m, _reduce(prod, m))

    __rmul__ = __mul__

    def inverse(self) -> CycNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.order == 1:
            return CycNumber.rational(1 / self.coeffs[0])
        n, deg = self.order, len(self.coeffs)
        # columns: coordinates of self * zeta^j
        cols = []
        for j in range(deg):
            vec = [Fraction(0)] * (deg + j)
            vec[j:] = self.coeffs
            cols.append(_reduce(vec, n))
        rows = [[cols[j][i] for j in range(deg)] for i in range(deg)]
        rhs = [Fraction(int(i == 0)) for i in range(deg)]
        return CycNumber(n, _solve(rows, rhs))

    def __truediv__(self, other) -> CycNumber:
        try:
            other = CycNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> CycNumber:
        return CycNumber.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> CycNumber:
        if e < 0:
            return self.inverse() ** (-e)
        result, base = _ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def galois(self, a: int) -> CycNumber:
        """Image under zeta_N -> zeta_N**a (a coprime to N)."""
        if gcd(a, self.order) != 1:
            raise ValueError("Galois exponent must be coprime to the order")
        n = self.order
        return CycNumber(n, _from_powers(n, {(a * k) % n: c for k, c in enumerate(self.coeffs) if c}))

    def conjugate(self) -> CycNumber:
        return self.galois(-1) if self.order > 2 else self

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, CycNumber):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.order == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.order == 1 else hash((self.order, self.coeffs))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        if self.order == 1:
            return f"CycNumber.rational({str(self.coeffs[0])!r})"
        return f"CycNumber({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.order == 1:
            return str(self.coeffs[0])
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mon = "" if k == 0 else (f"z{self.order}" if k == 1 else f"z{self.order}^{k}")
            if not mon:
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append("-" + mon)
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- serialization ------------------------------------------------------
    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> CycNumber:
        if isinstance(obj, (int, str)):
            return cls.rational(Fraction(obj))
        return cls(int(obj["order"]), [Fraction(c) for c in obj["coeffs"]])


_ZERO = CycNumber.rational(0)
_ONE = CycNumber.rational(1)
CycNumber.ZERO = _ZERO
CycNumber.ONE = _ONE


def zeta(n: int, k: int = 1) -> CycNumber:
    return CycNumber.root(n, k)
