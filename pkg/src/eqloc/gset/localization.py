"""Morita transport, central summands, twisting and nonabelian localization on finite G-sets.

On a finite set every normal bundle is zero, so each lambda_{-1} term in the
localization formulas is the unit; the slot is kept (``LAMBDA_UNIT``) so the
formulas read the same way as in the positive-dimensional setting.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from ..exact.cyclotomic import CycNumber
from ..groups.group import ConjugacyClass, FiniteGroup
from ..groups.subgroups import irreducible_reps
from .core import (
    EquivariantMap,
    GSet,
    StabilizerClass,
    decompose,
    invariants,
    pullback,
    pushforward,
    quotient_pushforward,
    stabilizer_of,
)
from .sheaf import EquivSheafOnGSet, class_from_sheaf, sheaf_tensor

__all__ = [
    "LAMBDA_UNIT",
    "MixedSpace",
    "SliceModel",
    "central_summand",
    "central_summand_direct",
    "localize_via_fixed_locus",
    "localize_via_sheaves",
    "morita",
    "morita_inverse",
    "nonabelian_localize",
    "rr_gset_sector",
    "slice_model",
    "twist_central",
    "twist_on_slice",
]

LAMBDA_UNIT = CycNumber.ONE


class MixedSpace:
    """G x_Z W = (G x W) / ((k, w) ~ (k z^-1, z w)) as a G-set; points labelled by minimal (k, w)."""

    def __init__(self, group: FiniteGroup, sub: FiniteGroup, base: GSet) -> None:
        if sub.parent is not group:
            raise ValueError("Z must be a subgroup of G")
        if base.group is not sub:
            raise ValueError("W must be a Z-set")
        self.group, self.sub, self.base = group, sub, base
        t = group.table
        point_of: dict[tuple[int, int], int] = {}
        labels: list[tuple[int, int]] = []
        for k in range(len(group)):
            for w in range(base.size):
                if (k, w) in point_of:
                    continue
                cls = [(t[k][group.inv[sub.parent_index[z]]], base.act[z][w]) for z in range(len(sub))]
                for pair in cls:
                    point_of[pair] = len(labels)
                labels.append(min(cls))
        act = [[point_of[(t[g][k], w)] for k, w in labels] for g in range(len(group))]
        self.point_of = point_of
        self.gset = GSet(group, act, labels, check=False)

    def embed(self, w: int) -> int:
        """w -> [e, w]."""
        return self.point_of[(0, w)]


def morita(mixed: MixedSpace, beta: StabilizerClass) -> StabilizerClass:
    """Transport a class on (Z, W) to (G, G x_Z W): value(g, [k, w]) = beta(k^-1 g k, w)."""
    if beta.gset is not mixed.base:
        raise ValueError("class does not live on W")
    group, sub = mixed.group, mixed.sub
    carrier = stabilizer_of(mixed.gset)
    values = {}
    for g, p in carrier.pairs:
        k, w = mixed.gset.labels[p]
        z = sub.local_index(group.conj(group.inv[k], g))
        if z is None or mixed.base.act[z][w] != w:
            raise ArithmeticError("stabilizer of [k, w] is not conjugate into Z_w")
        values[(g, p)] = beta(z, w)
    return StabilizerClass(carrier, values)


def morita_inverse(mixed: MixedSpace, gamma: StabilizerClass) -> StabilizerClass:
    """beta(z, w) = gamma(z, [e, w])."""
    if gamma.gset is not mixed.gset:
        raise ValueError("class does not live on the mixed space")
    carrier = stabilizer_of(mixed.base)
    return StabilizerClass(carrier, {(z, w): gamma(mixed.sub.parent_index[z], mixed.embed(w)) for z, w in carrier.pairs})


class SliceModel:
    """S_psi identified with G x_Z X^h for a chosen representative h of psi."""

    def __init__(self, base: GSet, psi: ConjugacyClass, h: int | None = None) -> None:
        group = base.group
        h = psi.representative if h is None else h
        if h not in psi:
            raise ValueError("h is not in psi")
        self.base, self.psi, self.h = base, psi, h
        self.slice, self.f = stabilizer_of(base).as_gset(psi)
        self.centralizer = group.centralizer(h)
        self.fixed = base.fixed_points(h)
        self.fixed_set = base.restrict(self.centralizer, self.fixed)
        self.h_local = self.centralizer.local_index(h)
        self.mixed = MixedSpace(group, self.centralizer, self.fixed_set)
        index = stabilizer_of(base).index
        slice_index = {lab: i for i, lab in enumerate(self.slice.labels)}
        mapping = []
        for k, w in self.mixed.gset.labels:
            pair = (group.conj(k, h), base.act[k][self.fixed[w]])
            if pair not in index:
                raise ArithmeticError("Phi_h does not land in the global stabilizer")
            mapping.append(slice_index[pair])
        # Phi_h: [k, x] -> (k h k^-1, k x)
        self.phi = EquivariantMap(self.mixed.gset, self.slice, mapping)
        if not self.phi.is_bijective():
            raise ArithmeticError("Phi_h is not a bijection onto S_psi")

    def to_fixed(self, beta: StabilizerClass) -> StabilizerClass:
        """Class on S_psi -> class on (Z, X^h)."""
        return morita_inverse(self.mixed, pullback(self.phi, beta))

    def from_fixed(self, beta: StabilizerClass) -> StabilizerClass:
        """Class on (Z, X^h) -> class on S_psi."""
        return pushforward(self.phi, morita(self.mixed, beta))


def slice_model(base: GSet, psi: ConjugacyClass, h: int | None = None) -> SliceModel:
    cache = base.__dict__.setdefault("_slice_models", {})
    key = (psi.position, psi.representative if h is None else h)
    if key not in cache:
        cache[key] = SliceModel(base, psi, h)
    return cache[key]


def _restrict_to_element(beta: StabilizerClass, z: int) -> StabilizerClass:
    # localization at a one-element class {z} keeps the z-coordinate only
    return StabilizerClass(beta.carrier, {p: v for p, v in beta.values.items() if p[0] == z})


def central_summand(beta: StabilizerClass, model: SliceModel) -> StabilizerClass:
    """beta_{c_psi} through Morita transport to (Z, X^h) and back."""
    if beta.gset is not model.slice:
        raise ValueError("class does not live on S_psi")
    on_fixed = model.to_fixed(beta)
    return model.from_fixed(_restrict_to_element(on_fixed, model.h_local))


def central_summand_direct(beta: StabilizerClass) -> StabilizerClass:
    """beta_{c_psi} as the support where the acting element equals the pair's element."""
    labels = beta.gset.labels
    if not all(isinstance(lab, tuple) and len(lab) == 2 for lab in labels):
        raise ValueError("carrier is not a slice of a global stabilizer")
    return StabilizerClass(beta.carrier, {(g, p): v for (g, p), v in beta.values.items() if labels[p][0] == g})


def twist_central(beta: StabilizerClass, h: int) -> StabilizerClass:
    """beta(h) = h^-1 . beta, i.e. (z, w) -> beta(h z, w)."""
    group = beta.group
    if any(group.table[h][g] != group.table[g][h] for g in range(len(group))):
        raise ValueError("twisting element is not central")
    if beta.gset.fixed_points(h) != list(range(beta.gset.size)):
        raise ValueError("twisting element acts nontrivially")
    return StabilizerClass.from_function(beta.carrier, lambda z, w: beta(group.table[h][z], w))


def twist_on_slice(beta: StabilizerClass) -> StabilizerClass:
    """beta(c_psi) on S_psi: (g', (g, x)) -> beta(g g', (g, x))."""
    labels = beta.gset.labels
    t = beta.group.table
    return StabilizerClass.from_function(beta.carrier, lambda g2, p: beta(t[labels[p][0]][g2], p))


def nonabelian_localize(alpha: StabilizerClass, psi: ConjugacyClass, *, route: str = "morita",
                        h: int | None = None) -> StabilizerClass:
    """f_*((f^* alpha)_{c_psi} / lambda_{-1}(N_f^*)) with f: S_psi -> X."""
    model = slice_model(alpha.gset, psi, h)
    beta = pullback(model.f, alpha)
    if route == "morita":
        c = central_summand(beta, model)
    elif route == "direct":
        c = central_summand_direct(beta)
    else:
        raise ValueError(f"unknown route {route!r}")
    return pushforward(model.f, c * LAMBDA_UNIT.inverse())


def localize_via_fixed_locus(alpha: StabilizerClass, psi: ConjugacyClass, h: int | None = None) -> StabilizerClass:
    """Restrict to (Z, X^h), keep the {h}-component, Morita to G x_Z X^h, push to X."""
    model = slice_model(alpha.gset, psi, h)
    base = alpha.gset
    carrier = stabilizer_of(model.fixed_set)
    parent = model.centralizer.parent_index
    restricted = StabilizerClass(carrier, {(z, w): alpha(parent[z], model.fixed[w]) for z, w in carrier.pairs})
    component = _restrict_to_element(restricted, model.h_local) * LAMBDA_UNIT.inverse()
    on_slice = model.from_fixed(component)
    return pushforward(model.f, on_slice)


def localize_via_sheaves(sheaf: EquivSheafOnGSet, psi: ConjugacyClass) -> StabilizerClass:
    """alpha_psi = e_psi . [F] with e_psi = (|psi|/|G|) sum_chi conj(chi(h)) [V_chi], as explicit tensor sheaves."""
    base = sheaf.base
    group = base.group
    h = psi.representative
    out = StabilizerClass(stabilizer_of(base))
    for rep in irreducible_reps(group):
        coeff = rep.trace(h).conjugate() * Fraction(psi.size, len(group))
        if coeff.is_zero():
            continue
        twisted = sheaf_tensor(sheaf, EquivSheafOnGSet.from_group_rep(base, rep))
        out = out + class_from_sheaf(twisted) * coeff
    return out


def rr_gset_sector(alpha: StabilizerClass, psi: ConjugacyClass) -> dict:
    """Degree-zero sector check: invariants of alpha_psi against g_* of invariants on S_psi."""
    base = alpha.gset
    model = slice_model(base, psi)
    lhs = invariants(decompose(alpha)[psi.position])
    beta = pullback(model.f, alpha)
    twisted = twist_on_slice(beta)
    identity_part = twisted.localize(base.group.conjugacy_classes[0])
    via_twist = quotient_pushforward(model.f, invariants(identity_part))
    via_summand = quotient_pushforward(model.f, invariants(central_summand(beta, model)))
    twist_ok = invariants(beta) == invariants(twisted)
    return {
        "class": psi.position,
        "invariants": lhs,
        "via_twist": via_twist,
        "via_central_summand": via_summand,
        "twist_invariance": twist_ok,
        "pass": lhs == via_twist == via_summand and twist_ok,
    }
