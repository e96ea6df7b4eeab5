"""Named fixture groups, their standard representations, and JSON group descriptors."""
from __future__ import annotations

from fractions import Fraction

from ..exact import matrix as mx
from ..exact.cyclotomic import CycNumber, zeta
from .group import DEFAULT_GROUP_CAP, FiniteGroup
from .reps import MatrixRep

__all__ = [
    "DescriptorError",
    "builtin_group",
    "descriptor_generators",
    "group_from_descriptor",
    "natural_rep",
    "standard_rep",
]


class DescriptorError(ValueError):
    """Malformed descriptor; ``pointer`` is a JSON pointer to the offending value."""

    def __init__(self, pointer: str, message: str) -> None:
        self.pointer = pointer
        self.message = message
        super().__init__(f"{pointer or '/'}: {message}")


def _cyclic(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup.from_permutations([], 1, name="Z/1")
    return FiniteGroup.from_permutations([tuple((i + 1) % n for i in range(n))], n, name=f"Z/{n}")


def _q8() -> FiniteGroup:
    i = zeta(4)
    return FiniteGroup.from_matrices(
        [((i, 0), (0, -i)), ((0, 1), (-1, 0))],
        name="Q8",
    )


_PERMUTATION_BUILTINS = {
    "S3": ([(1, 0, 2), (1, 2, 0)], 3),
    "S4": ([(1, 0, 2, 3), (1, 2, 3, 0)], 4),
    "A4": ([(1, 2, 0, 3), (0, 2, 3, 1)], 4),
    "D4": ([(1, 2, 3, 0), (0, 3, 2, 1)], 4),
    "trivial": ([], 1),
}


def builtin_group(name: str, cap: int = DEFAULT_GROUP_CAP) -> FiniteGroup:
    """One of S3, S4, A4, D4, Q8, Z/n (also Zn), trivial."""
    if name in _PERMUTATION_BUILTINS:
        gens, degree = _PERMUTATION_BUILTINS[name]
        return FiniteGroup.from_permutations(gens, degree, name=name, cap=cap)
    if name == "Q8":
        return _q8()
    for prefix in ("Z/", "Z"):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return _cyclic(int(name[len(prefix):]))
    raise DescriptorError("", f"unknown builtin group {name!r}")


def natural_rep(group: FiniteGroup) -> MatrixRep:
    """Permutation matrices for a permutation group, the defining matrices otherwise."""
    if group.kind == "permutation":
        return MatrixRep.permutation(group, lambda g, x: group.elements[g][x], group.degree, name="natural")
    return MatrixRep(group, [mx.as_matrix(f) for f in group.elements], check=False, name="defining")


def standard_rep(group: FiniteGroup) -> MatrixRep:
    """Permutation action on the sum-zero hyperplane, basis e_i - e_{n-1}."""
    if group.kind != "permutation":
        raise ValueError("standard representation needs a permutation group")
    n = group.degree
    last = n - 1

    def mat(g):
        perm = group.elements[g]
        rows = [[CycNumber.ZERO] * (n - 1) for _ in range(n - 1)]
        shift = perm[last]
        for i in range(n - 1):
            # g(e_i - e_last) = (e_{g i} - e_last) - (e_{g last} - e_last)
            if perm[i] != last:
                rows[perm[i]][i] += 1
            if shift != last:
                rows[shift][i] -= 1
        return tuple(tuple(r) for r in rows)

    return MatrixRep(group, [mat(g) for g in range(len(group))], name="standard")


def _entry(obj, pointer: str, default_order: int | None) -> CycNumber:
    try:
        if isinstance(obj, (int, str)):
            return CycNumber.rational(Fraction(obj))
        if isinstance(obj, dict):
            order = int(obj.get("order", default_order or 1))
            return CycNumber(order, [Fraction(c) for c in obj["coeffs"]])
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise DescriptorError(pointer, f"bad cyclotomic entry: {exc}") from None
    raise DescriptorError(pointer, "expected a rational string/int or {order, coeffs}")


def parse_matrix(obj, pointer: str, default_order: int | None = None) -> mx.Matrix:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise DescriptorError(pointer, "expected a nonempty list of rows")
    n = len(obj)
    for i, row in enumerate(obj):
        if len(row) != n:
            raise DescriptorError(f"{pointer}/{i}", "matrix must be square")
    return tuple(
        tuple(_entry(x, f"{pointer}/{i}/{j}", default_order) for j, x in enumerate(row))
        for i, row in enumerate(obj)
    )


def group_from_descriptor(obj, pointer: str = "", cap: int = DEFAULT_GROUP_CAP) -> FiniteGroup:
    """Parse a builtin name or a permutation/matrix descriptor."""
    if isinstance(obj, str):
        try:
            return builtin_group(obj, cap)
        except DescriptorError as exc:
            raise DescriptorError(pointer, exc.message) from None
    if not isinstance(obj, dict):
        raise DescriptorError(pointer, "group descriptor must be a name or an object")
    kind = obj.get("type")
    gens = obj.get("generators")
    if not isinstance(gens, list):
        raise DescriptorError(f"{pointer}/generators", "missing generator list")
    if kind == "permutation":
        degree = obj.get("degree")
        if not isinstance(degree, int) or degree < 1:
            raise DescriptorError(f"{pointer}/degree", "degree must be a positive integer")
        perms = []
        for k, g in enumerate(gens):
            if not isinstance(g, list) or len(g) != degree or not all(isinstance(x, int) for x in g):
                raise DescriptorError(f"{pointer}/generators/{k}", f"expected {degree} integers")
            # image lists on {1..n} never contain 0
            img = [x - 1 for x in g] if 0 not in g else list(g)
            if sorted(img) != list(range(degree)):
                raise DescriptorError(f"{pointer}/generators/{k}", "not a permutation")
            perms.append(tuple(img))
        group = FiniteGroup.from_permutations(perms, degree, name=obj.get("name", ""), cap=cap)
    elif kind == "matrix":
        order = obj.get("cyclotomic_order")
        mats = [parse_matrix(g, f"{pointer}/generators/{k}", order) for k, g in enumerate(gens)]
        if len({len(m) for m in mats}) > 1:
            raise DescriptorError(f"{pointer}/generators", "generators have different sizes")
        group = FiniteGroup.from_matrices(mats, name=obj.get("name", ""), cap=cap)
    else:
        raise DescriptorError(f"{pointer}/type", "type must be 'permutation' or 'matrix'")
    declared = obj.get("exponent")
    if declared is not None and int(declared) % group.exponent:
        raise DescriptorError(f"{pointer}/exponent", f"element orders do not divide {declared}")
    return group



def descriptor_generators(group: FiniteGroup, obj) -> list[int]:
    """Element indices of the generators as listed in a descriptor (builtins: the group's own)."""
    if isinstance(obj, str):
        return list(group.generators)
    out = []
    for g in obj["generators"]:
        if obj["type"] == "permutation":
            form = tuple(x - 1 for x in g) if 0 not in g else tuple(g)
        else:
            form = parse_matrix(g, "", obj.get("cyclotomic_order"))
        out.append(group.index[form])
    return out
