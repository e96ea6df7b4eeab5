"""Dense exact matrices over cyclotomic fields (tuples of tuples of CycNumber)."""
from __future__ import annotations

from typing import Sequence

from .cyclotomic import CycNumber

Matrix = tuple[tuple[CycNumber, ...], ...]
Vector = tuple[CycNumber, ...]

_Z = CycNumber.ZERO
_O = CycNumber.ONE


def as_matrix(rows) -> Matrix:
    return tuple(tuple(CycNumber.coerce(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(_O if i == j else _Z for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    return tuple(tuple(_Z for _ in range(n if m is None else m)) for _ in range(n))


def diagonal(entries: Sequence) -> Matrix:
    n = len(entries)
    return tuple(
        tuple(CycNumber.coerce(entries[i]) if i == j else _Z for j in range(n)) for i in range(n)
    )


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b)) if b else []
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if not x.is_zero()]
        new = []
        for col in cols:
            acc = _Z
            for k, x in nz:
                y = col[k]
                if not y.is_zero():
                    acc = acc + x * y
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def matvec(a: Matrix, v: Sequence[CycNumber]) -> Vector:
    out = []
    for row in a:
        acc = _Z
        for x, y in zip(row, v):
            if not x.is_zero() and not y.is_zero():
                acc = acc + x * y
        out.append(acc)
    return tuple(out)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(a: Matrix, c) -> Matrix:
    c = CycNumber.coerce(c)
    return tuple(tuple(x * c for x in r) for r in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def trace(a: Matrix) -> CycNumber:
    acc = _Z
    for i, row in enumerate(a):
        acc = acc + row[i]
    return acc


def kron(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x * y for x in ra for y in rb)
        for ra in a
        for rb in b
    )


def power(a: Matrix, k: int) -> Matrix:
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def rref(a: Sequence[Sequence[CycNumber]]) -> tuple[list[list[CycNumber]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in a]
    pivots: list[int] = []
    ncols = len(m[0]) if m else 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(m)) if not m[r][col].is_zero()), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = m[row][col].inverse()
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [x - f * y if not y.is_zero() else x for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m, pivots


def rank(a: Sequence[Sequence[CycNumber]]) -> int:
    if not a:
        return 0
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence[CycNumber]], ncols: int | None = None) -> list[Vector]:
    """Basis of {v : a v = 0}."""
    if not a:
        n = ncols or 0
        return [tuple(_O if i == j else _Z for i in range(n)) for j in range(n)]
    r, pivots = rref(a)
    n = len(a[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [_Z] * n
        v[fc] = _O
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][fc]
        basis.append(tuple(v))
    return basis


def restrict_to_subspace(a: Matrix, basis: Sequence[Vector]) -> Matrix:
    """Matrix of ``a`` on the invariant subspace spanned by ``basis``.

    Returns M with a B = B M; raises if the subspace is not ``a``-stable.
    """
    k = len(basis)
    if k == 0:
        return ()
    n = len(basis[0])
    images = [matvec(a, v) for v in basis]
    # solve B c = w for each image w
    aug = [[basis[j][i] for j in range(k)] + [w[i] for w in images] for i in range(n)]
    r, pivots = rref(aug)
    if any(p >= k for p in pivots):
        raise ValueError("subspace is not invariant under the matrix")
    cols = [[r[i][k + t] for i in range(k)] for t in range(k)]
    return tuple(tuple(cols[t][i] for t in range(k)) for i in range(k))


def is_identity(a: Matrix) -> bool:
    return all((x == 1) if i == j else x.is_zero() for i, row in enumerate(a) for j, x in enumerate(row))


def to_json(a: Matrix) -> list:
    return [[x.to_json() for x in row] for row in a]


def from_json(obj) -> Matrix:
    return tuple(tuple(CycNumber.from_json(x) for x in row) for row in obj)
