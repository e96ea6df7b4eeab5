"""Named linear actions used by the CLI and the acceptance suite."""
from __future__ import annotations

from ..exact.cyclotomic import zeta
from ..groups.builtins import builtin_group, natural_rep, standard_rep, parse_matrix
from ..groups.group import FiniteGroup
from ..groups.reps import MatrixRep
from .rr import DEFAULT_CAPS, Caps, LinearAction

__all__ = ["FIXTURES", "action_from_descriptor", "fixture_action"]


def _diagonal_cyclic(n: int, weights: tuple[int, ...], name: str, caps: Caps) -> LinearAction:
    gen = tuple(tuple(zeta(n, w) if i == j else 0 for j in range(len(weights))) for i, w in enumerate(weights))
    group = FiniteGroup.from_matrices([gen], name=f"Z/{n}", cap=caps.group_order)
    return LinearAction(natural_rep(group), name=name, caps=caps)


FIXTURES = {
    "Z3-P1": lambda caps: _diagonal_cyclic(3, (0, 1), "Z3-P1", caps),
    "Z5-weights(1,2)": lambda caps: _diagonal_cyclic(5, (1, 2), "Z5-weights(1,2)", caps),
    "S3-irrep2": lambda caps: LinearAction(standard_rep(builtin_group("S3", caps.group_order)), name="S3-irrep2", caps=caps),
    "A4-std": lambda caps: LinearAction(standard_rep(builtin_group("A4", caps.group_order)), name="A4-std", caps=caps),
}


def fixture_action(name: str, caps: Caps = DEFAULT_CAPS) -> LinearAction:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
    return FIXTURES[name](caps)


def action_from_descriptor(obj, pointer: str = "", caps: Caps = DEFAULT_CAPS) -> LinearAction:
    """{"group": <group descriptor>, "rep": {"generators": {index: matrix}} or "natural"/"standard"}."""
    from ..groups.builtins import DescriptorError, descriptor_generators, group_from_descriptor

    if not isinstance(obj, dict) or "group" not in obj:
        raise DescriptorError(pointer, "action needs a group")
    group = group_from_descriptor(obj["group"], f"{pointer}/group", caps.group_order)
    rep = obj.get("rep", "natural")
    if rep == "natural":
        r = natural_rep(group)
    elif rep == "standard":
        r = standard_rep(group)
    elif isinstance(rep, dict) and isinstance(rep.get("generators"), list):
        gens = rep["generators"]
        targets = descriptor_generators(group, obj["group"])
        if len(gens) != len(targets):
            raise DescriptorError(f"{pointer}/rep/generators", f"expected {len(targets)} matrices")
        images = {}
        for i, (g, m) in enumerate(zip(targets, gens)):
            images[g] = parse_matrix(m, f"{pointer}/rep/generators/{i}", rep.get("cyclotomic_order"))
        try:
            r = MatrixRep.from_generators(group, images)
        except ValueError as exc:
            raise DescriptorError(f"{pointer}/rep", str(exc)) from None
    else:
        raise DescriptorError(f"{pointer}/rep", "expected 'natural', 'standard' or {generators}")
    try:
        return LinearAction(r, name=obj.get("name", ""), caps=caps)
    except ValueError as exc:
        raise DescriptorError(f"{pointer}/rep", str(exc)) from None
