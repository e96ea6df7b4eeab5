"""Combinatorial oracles: complete homogeneous and Schur polynomials, Weyl dimensions."""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from typing import Sequence

from ..exact.laurent import LaurentPoly

__all__ = [
    "complete_homogeneous",
    "is_symmetric",
    "random_symmetric",
    "schur_polynomial",
    "semistandard_tableaux",
    "weyl_dimension",
]


def complete_homogeneous(variables: Sequence[str], d: int) -> LaurentPoly:
    """h_d as the sum of all degree-d monomials."""
    n = len(variables)
    terms = {}
    if d < 0:
        return LaurentPoly(variables)
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        terms[tuple(e)] = 1
    return LaurentPoly(variables, terms)


def semistandard_tableaux(shape: Sequence[int], n: int):
    """Fillings with entries 0..n-1, rows weakly increasing, columns strictly increasing."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling: dict[tuple[int, int], int] = {}

    def extend(k: int):
        if k == len(cells):
            yield dict(filling)
            return
        r, c = cells[k]
        lo = 0
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, n):
            filling[(r, c)] = v
            yield from extend(k + 1)
        filling.pop((r, c), None)

    yield from extend(0)


def schur_polynomial(variables: Sequence[str], shape: Sequence[int]) -> LaurentPoly:
    """s_lambda = sum over semistandard tableaux of x^content."""
    shape = [s for s in shape if s > 0]
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise ValueError("shape must be a partition")
    n = len(variables)
    terms: dict[tuple[int, ...], int] = {}
    for t in semistandard_tableaux(shape, n):
        e = [0] * n
        for v in t.values():
            e[v] += 1
        key = tuple(e)
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(variables, terms)


def weyl_dimension(lam: Sequence[int]) -> int:
    """prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)."""
    n = len(lam)
    out = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            out *= Fraction(lam[i] - lam[j] + j - i, j - i)
    if out.denominator != 1:
        raise ArithmeticError("Weyl dimension is not an integer")
    return int(out)


def is_symmetric(p: LaurentPoly) -> bool:
    n = len(p.variables)
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if p.permute_variables(perm) != p:
            return False
    return True


def random_symmetric(variables: Sequence[str], rng: random.Random, *, terms: int = 3, span: int = 2) -> LaurentPoly:
    """Sum of symmetrized random monomials with small integer coefficients."""
    n = len(variables)
    out = LaurentPoly(variables)
    for _ in range(terms):
        e = tuple(rng.randint(-span, span) for _ in range(n))
        c = rng.randint(-3, 3) or 1
        orbit = {tuple(e[p[i]] for i in range(n)) for p in permutations(range(n))}
        out = out + LaurentPoly(variables, {m: c for m in orbit})
    return out
