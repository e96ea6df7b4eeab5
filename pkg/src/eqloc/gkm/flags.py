"""Builtin fixed-point packages: projective spaces and (partial) flag varieties of GL_n.

Flag fixed points are ordered set partitions (B_1, ..., B_k) of {1..n} of the
shape given by the composition.  The tangent weights at a point are x_a / x_b
with a in an earlier block than b; this is the orientation for which the
pushforward of L_(1,0) on the GL_2 flag variety is x_1 + x_2.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from math import factorial, prod
from typing import Sequence

from ..exact.laurent import LaurentPoly
from .fixed_points import EquivClass, FiberedFixedPointData, FixedPointData, fiberwise_pushforward, lambda_minus_one, pushforward_to_point

__all__ = [
    "WeylData",
    "flag_data",
    "flag_fibration",
    "flag_variables",
    "line_bundle_class",
    "o_d_class",
    "projective_space_data",
    "verify_prop36",
]


def _weight(n: int, a: int, b: int) -> tuple[int, ...]:
    # x_a / x_b with 0-based variable positions
    w = [0] * n
    w[a] += 1
    w[b] -= 1
    return tuple(w)


def projective_space_data(n: int) -> FixedPointData:
    """P^n with variables x0..xn; tangent at p_i is {x_i / x_j : j != i}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    variables = [f"x{i}" for i in range(n + 1)]
    if n == 0:
        return FixedPointData.point(variables)
    return FixedPointData.build(
        variables, [(f"p{i}", [_weight(n + 1, i, j) for j in range(n + 1) if j != i]) for i in range(n + 1)]
    )


def o_d_class(data: FixedPointData, d: int) -> EquivClass:
    """O(d) on P^n: restriction x_i^d at p_i."""
    n = len(data.variables)
    out = []
    for i in range(len(data.points)):
        e = [0] * n
        e[i] = d
        out.append(LaurentPoly.monomial(data.variables, e))
    return EquivClass(data, out)


@dataclass(frozen=True)
class WeylData:
    n: int
    composition: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or not self.composition or any(c < 1 for c in self.composition) or sum(self.composition) != self.n:
            raise ValueError(f"composition {self.composition} is not a composition of {self.n}")

    @classmethod
    def full(cls, n: int) -> WeylData:
        return cls(n, (1,) * n)

    @property
    def weyl_order(self) -> int:
        return factorial(self.n)

    @property
    def levi_weyl_order(self) -> int:
        return prod(factorial(c) for c in self.composition)

    def blocks_of(self, w: Sequence[int]) -> tuple[tuple[int, ...], ...]:
        """Ordered set partition cut from the one-line word w (0-based letters)."""
        out, start = [], 0
        for c in self.composition:
            out.append(tuple(sorted(w[start:start + c])))
            start += c
        return tuple(out)

    def fixed_points(self) -> list[tuple[tuple[int, ...], ...]]:
        seen = []
        found = set()
        for w in permutations(range(self.n)):
            b = self.blocks_of(w)
            if b not in found:
                found.add(b)
                seen.append(b)
        return seen


def flag_variables(n: int) -> list[str]:
    return [f"x{i}" for i in range(1, n + 1)]


def _label(blocks) -> str:
    return "|".join("".join(str(a + 1) for a in b) for b in blocks)


def _tangent(n: int, blocks) -> list[tuple[int, ...]]:
    out = []
    for i, bi in enumerate(blocks):
        for bj in blocks[i + 1:]:
            out.extend(_weight(n, a, b) for a in bi for b in bj)
    return out


def flag_data(weyl: WeylData) -> FixedPointData:
    n = weyl.n
    return FixedPointData.build(flag_variables(n), [(_label(b), _tangent(n, b)) for b in weyl.fixed_points()])


def line_bundle_class(weyl: WeylData, lam: Sequence[int]) -> EquivClass:
    """L_lambda on the full flag variety: restriction prod x_{w(i)}^{lambda_i}."""
    if weyl.composition != (1,) * weyl.n:
        raise ValueError("line bundles L_lambda are defined on the full flag variety")
    if len(lam) != weyl.n:
        raise ValueError("lambda must have length n")
    data = flag_data(weyl)
    out = []
    for blocks in weyl.fixed_points():
        e = [0] * weyl.n
        for i, (a,) in enumerate(blocks):
            e[a] += lam[i]
        out.append(LaurentPoly.monomial(data.variables, e))
    return EquivClass(data, out)


def flag_fibration(weyl: WeylData) -> FiberedFixedPointData:
    """p: full flags -> partial flags of the given composition."""
    n = weyl.n
    full = WeylData.full(n)
    source = flag_data(full)
    target = flag_data(weyl)
    target_index = {b: i for i, b in enumerate(weyl.fixed_points())}
    projection, relative = [], []
    for blocks in full.fixed_points():
        word = [b[0] for b in blocks]
        coarse = weyl.blocks_of(word)
        projection.append(target_index[coarse])
        which = {a: i for i, blk in enumerate(coarse) for a in blk}
        relative.append(tuple(
            _weight(n, word[i], word[j]) for i in range(n) for j in range(i + 1, n) if which[word[i]] == which[word[j]]
        ))
    return FiberedFixedPointData(source, target, tuple(projection), tuple(relative))


def verify_prop36(weyl: WeylData, alpha: LaurentPoly) -> dict:
    """The three projection identities for G/B -> G/P -> point, reported check by check."""
    n = weyl.n
    variables = tuple(flag_variables(n))
    if alpha.variables != variables:
        raise ValueError(f"alpha must use variables {variables}")
    fib = flag_fibration(weyl)
    full, partial = fib.source, fib.target
    w_g, w_z = weyl.weyl_order, weyl.levi_weyl_order

    def euler(data: FixedPointData) -> EquivClass:
        return EquivClass(data, [data.euler_factor(i) for i in range(len(data.points))])

    lhs_i = pushforward_to_point(euler(full) * EquivClass.pullback_from_point(full, alpha))
    lhs_ii = pushforward_to_point(euler(partial) * EquivClass.pullback_from_point(partial, alpha))
    beta = EquivClass.pullback_from_point(partial, alpha)
    pulled = EquivClass(full, [beta.restrictions[q] for q in fib.projection])
    lhs_iii = fiberwise_pushforward(fib, euler(full) * pulled)
    rhs_iii = euler(partial) * beta * w_z
    checks = [
        {"name": "i", "expected": alpha * w_g, "actual": lhs_i, "pass": lhs_i == alpha * w_g},
        {"name": "ii", "expected": alpha * (w_g // w_z), "actual": lhs_ii, "pass": lhs_ii == alpha * (w_g // w_z)},
        {"name": "iii", "expected": rhs_iii, "actual": lhs_iii, "pass": lhs_iii == rhs_iii},
    ]
    return {"weyl_order": w_g, "levi_weyl_order": w_z, "checks": checks, "pass": all(c["pass"] for c in checks)}
