"""Verification sweeps shared by the ``verify`` command and the test suite.

Each sweep returns a list of checks {name, expected, actual, pass} with exact
values serialized to JSON-compatible form.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import product
from typing import Any, Callable

from .exact.cyclotomic import CycNumber
from .exact.laurent import LaurentPoly
from .exact.localized import LocalizedElement
from .groups.builtins import builtin_group, natural_rep
from .groups.reps import MatrixRep, NotFaithful, good_embedding_check
from .groups.subgroups import all_subgroups, subgroup_classes
from .gkm import (
    WeylData,
    complete_homogeneous,
    euler_class_expansion,
    flag_data,
    flag_fibration,
    flag_variables,
    fiberwise_pushforward,
    line_bundle_class,
    o_d_class,
    projective_space_data,
    pushforward_to_point,
    random_symmetric,
    schur_polynomial,
    verify_prop36,
    weyl_dimension,
)
from .gset import (
    EquivariantMap,
    EquivSheafOnGSet,
    GSet,
    class_from_sheaf,
    decompose,
    invariants,
    irreducible_sheaves,
    localize_via_fixed_locus,
    localize_via_sheaves,
    nonabelian_localize,
    pullback,
    pushforward,
    rr_gset_sector,
    sheaf_invariant_dimensions,
    sheaf_pullback,
    sheaf_pushforward,
    sheaf_tensor,
    slice_model,
    twist_central,
    twist_on_slice,
    twist_via_reps,
)
from .quotient import DEFAULT_CAPS, Caps, fixture_action, kawasaki_chi

__all__ = ["FIXTURE_GROUPS", "SWEEPS", "serialize", "run_sweeps", "transitive_gsets"]

FIXTURE_GROUPS = ("S3", "S4", "Z6", "D4", "Q8", "A4")
MAX_GSET_SIZE = 12


def serialize(v: Any) -> Any:
    """Exact values to JSON: rationals as "p/q", cyclotomics as {order, coeffs}."""
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, CycNumber):
        return str(v.to_fraction()) if v.is_rational() else v.to_json()
    if isinstance(v, (LaurentPoly, LocalizedElement)):
        return v.to_json()
    if isinstance(v, dict):
        return {str(k): serialize(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [serialize(x) for x in v]
    if hasattr(v, "to_json"):
        return v.to_json()
    raise TypeError(f"cannot serialize {type(v).__name__}")


def check(name: str, expected, actual, ok: bool | None = None) -> dict:
    return {
        "name": name,
        "expected": serialize(expected),
        "actual": serialize(actual),
        "pass": bool(expected == actual) if ok is None else bool(ok),
    }


def transitive_gsets(group, max_size: int = MAX_GSET_SIZE) -> list[tuple[str, GSet]]:
    out = []
    for sub in subgroup_classes(group, max_size):
        h = group.subgroup(sub)
        out.append((f"G/H(|H|={len(sub)},min={sorted(sub)[1] if len(sub) > 1 else 0})", GSet.cosets(group, h)))
    return out


# -- torus localization ------------------------------------------------------------------
def sweep_pn(rng: random.Random, caps: Caps = DEFAULT_CAPS) -> list[dict]:
    out = []
    for n in range(5):
        data = projective_space_data(n)
        for d in range(7):
            out.append(check(f"pn-pushforward n={n} d={d}", complete_homogeneous(data.variables, d),
                             pushforward_to_point(o_d_class(data, d))))
    return out


def _gkm_spaces():
    spaces = [(f"P{n}", projective_space_data(n)) for n in range(4)]
    for n, comp in [(2, (1, 1)), (3, (1, 1, 1)), (3, (2, 1)), (3, (1, 2))]:
        spaces.append((f"flag GL{n} {comp}", flag_data(WeylData(n, comp))))
    return spaces


def sweep_euler(rng: random.Random, caps: Caps = DEFAULT_CAPS) -> list[dict]:
    out = []
    for name, data in _gkm_spaces():
        rep = euler_class_expansion(data)
        out.append(check(f"euler-expansion {name}", True, rep["expansion_ok"] and rep["point_pushforwards_ok"]))
        out.append(check(f"euler-pushforward {name}", LaurentPoly.constant(data.variables, rep["fixed_point_count"]),
                         rep["euler_pushforward"]))
    return out


def sweep_projection(rng: random.Random, caps: Caps = DEFAULT_CAPS, samples: int = 20) -> list[dict]:
    out = []
    for n, comp in [(2, (1, 1)), (3, (1, 1, 1)), (3, (2, 1))]:
        weyl = WeylData(n, comp)
        for k in range(samples):
            alpha = random_symmetric(flag_variables(n), rng)
            rep = verify_prop36(weyl, alpha)
            for c in rep["checks"]:
                out.append({"name": f"flag-projection ({c['name']}) GL{n} {comp} #{k}",
                            "expected": serialize(c["expected"]), "actual": serialize(c["actual"]), "pass": c["pass"]})
    # functoriality along full -> partial -> point on line bundles
    weyl = WeylData(3, (2, 1))
    fib = flag_fibration(weyl)
    for lam in [(2, 1, 0), (3, 1, 0), (1, 1, 0)]:
        bundle = line_bundle_class(WeylData.full(3), lam)
        out.append(check(f"flag-functoriality GL3 (2, 1) lambda={lam}", pushforward_to_point(bundle),
                         pushforward_to_point(fiberwise_pushforward(fib, bundle))))
    return out


def sweep_weyl(rng: random.Random, caps: Caps = DEFAULT_CAPS) -> list[dict]:
    out = []
    for n in range(1, 4):
        for lam in product(range(4), repeat=n):
            if list(lam) != sorted(lam, reverse=True):
                continue
            p = pushforward_to_point(line_bundle_class(WeylData.full(n), lam))
            out.append(check(f"weyl-character n={n} lambda={lam}", schur_polynomial(flag_variables(n), lam), p))
            out.append(check(f"weyl-dimension n={n} lambda={lam}", weyl_dimension(lam), p.coefficient_sum().to_fraction()))
    return out


# -- finite G-sets ---------------------------------------------------------------------------
def sweep_localization(rng: random.Random, caps: Caps = DEFAULT_CAPS) -> list[dict]:
    out = []
    for gname in FIXTURE_GROUPS:
        group = builtin_group(gname, caps.group_order)
        for xname, x in transitive_gsets(group):
            sheaves = irreducible_sheaves(x)
            for psi in group.conjugacy_classes:
                total = agree = 0
                for sheaf in sheaves:
                    alpha = class_from_sheaf(sheaf)
                    expected = decompose(alpha)[psi.position]
                    routes = [
                        nonabelian_localize(alpha, psi),
                        nonabelian_localize(alpha, psi, h=psi.members[-1]),
                        nonabelian_localize(alpha, psi, route="direct"),
                        localize_via_fixed_locus(alpha, psi),
                        localize_via_sheaves(sheaf, psi),
                    ]
                    total += 1
                    agree += all(r == expected for r in routes)
                out.append(check(f"nonabelian-localization {gname} {xname} class {psi.position}", total, agree))
    return out


def coset_map(group, small: frozenset, big: frozenset) -> tuple[GSet, GSet, EquivariantMap]:
    """G/H -> G/K for H <= K, gH -> gK."""
    x = GSet.cosets(group, group.subgroup(small))
    y = GSet.cosets(group, group.subgroup(big))
    reps = {}
    for g in range(len(group)):
        reps.setdefault(x.act[g][0], g)
    mapping = [y.act[reps[p]][0] for p in range(x.size)]
    return x, y, EquivariantMap(x, y, mapping)


def _random_sheaf(x: GSet, rng: random.Random, max_dim: int = 4):
    pieces = irreducible_sheaves(x)
    sheaf = rng.choice(pieces)
    while True:
        extra = rng.choice(pieces)
        if max(r.dim + extra.fibers[k].dim for k, r in sheaf.fibers.items()) > max_dim or rng.random() < 0.4:
            return sheaf
        sheaf = sheaf.direct_sum(extra)


def sweep_bridging(rng: random.Random, caps: Caps = DEFAULT_CAPS, samples: int = 3) -> list[dict]:
    out = []
    for gname in FIXTURE_GROUPS:
        group = builtin_group(gname, caps.group_order)
        subs = subgroup_classes(group, 8)
        counts = {"pushforward": [0, 0], "pullback": [0, 0], "tensor": [0, 0], "additive": [0, 0]}
        for small in subs:
            for big in all_subgroups(group):
                if not small <= big or len(group) // len(big) > 8:
                    continue
                x, y, q = coset_map(group, small, big)
                for _ in range(samples):
                    f = _random_sheaf(x, rng)
                    e = _random_sheaf(y, rng)
                    f2 = _random_sheaf(x, rng)
                    for key, ok in (
                        ("pushforward", class_from_sheaf(sheaf_pushforward(q, f)) == pushforward(q, class_from_sheaf(f))),
                        ("pullback", class_from_sheaf(sheaf_pullback(q, e)) == pullback(q, class_from_sheaf(e))),
                        ("tensor", class_from_sheaf(sheaf_tensor(f, f2)) == class_from_sheaf(f) * class_from_sheaf(f2)),
                        ("additive", class_from_sheaf(f.direct_sum(f2)) == class_from_sheaf(f) + class_from_sheaf(f2)),
                    ):
                        counts[key][0] += 1
                        counts[key][1] += ok
        for key, (total, agree) in counts.items():
            out.append(check(f"sheaf-bridging {key} {gname}", total, agree))
    return out


def _slice_sheaf_cases(group, caps):
    for xname, x in transitive_gsets(group):
        for psi in group.conjugacy_classes:
            model = slice_model(x, psi)
            if model.fixed_set.size == 0:
                continue
            yield xname, x, psi, model


def sweep_twist(rng: random.Random, caps: Caps = DEFAULT_CAPS) -> list[dict]:
    out = []
    # the cyclic example: Z3 acting on a point, triv + chi
    z3 = builtin_group("Z/3")
    pt = GSet.point(z3)
    w = CycNumber.root(3, 1)
    g = z3.generators[0]
    gen_image = {g: ((1, 0), (0, w))}
    sheaf = EquivSheafOnGSet.from_generator_images(pt, {0: gen_image})
    beta = class_from_sheaf(sheaf)
    order = [0, g, z3.table[g][g]]
    out.append(check("twist Z3 example values", [2, 1 + w, 1 + w * w], [beta(k, 0) for k in order]))
    out.append(check("twist Z3 example twisted", [1 + w, 1 + w * w, 2], [twist_central(beta, g)(k, 0) for k in order]))
    for gname in FIXTURE_GROUPS:
        group = builtin_group(gname, caps.group_order)
        total = {"eigensheaf": 0, "inverse": 0, "augmentation": 0, "representative": 0}
        agree = dict.fromkeys(total, 0)
        for xname, x, psi, model in _slice_sheaf_cases(group, caps):
            z = model.centralizer
            h = model.h_local
            for sheaf in irreducible_sheaves(model.fixed_set):
                beta = class_from_sheaf(sheaf)
                twisted = twist_central(beta, h)
                total["eigensheaf"] += 1
                agree["eigensheaf"] += twisted == twist_via_reps(sheaf, h)
                total["inverse"] += 1
                agree["inverse"] += twist_central(twisted, z.inv[h]) == beta
                own = [c for c in z.conjugacy_classes if c.representative == h][0]
                total["augmentation"] += 1
                agree["augmentation"] += twist_central(beta.localize(own), h) == twisted.localize(z.conjugacy_classes[0])
            other = slice_model(x, psi, psi.members[-1])
            for sheaf in irreducible_sheaves(x):
                beta = pullback(model.f, class_from_sheaf(sheaf))
                direct = twist_on_slice(beta)
                via = [m.from_fixed(twist_central(m.to_fixed(beta), m.h_local)) for m in (model, other)]
                total["representative"] += 1
                agree["representative"] += all(v == direct for v in via)
        for key in total:
            out.append(check(f"twist {key} {gname}", total[key], agree[key]))
    return out


def sweep_invariants(rng: random.Random, caps: Caps = DEFAULT_CAPS) -> list[dict]:
    out = []
    for gname in FIXTURE_GROUPS:
        group = builtin_group(gname, caps.group_order)
        counts = {"twist-invariance": [0, 0], "projector": [0, 0], "nullspace": [0, 0], "sector": [0, 0]}
        for xname, x in transitive_gsets(group):
            for sheaf in irreducible_sheaves(x):
                alpha = class_from_sheaf(sheaf)
                inv = invariants(alpha)
                for key, method in (("projector", "projector"), ("nullspace", "nullspace")):
                    counts[key][0] += 1
                    counts[key][1] += inv == [CycNumber.rational(k) for k in sheaf_invariant_dimensions(sheaf, method=method)]
                for psi in group.conjugacy_classes:
                    rep = rr_gset_sector(alpha, psi)
                    counts["sector"][0] += 1
                    counts["sector"][1] += rep["pass"]
            for psi in group.conjugacy_classes:
                model = slice_model(x, psi)
                if model.slice.size == 0:
                    continue
                for sheaf in irreducible_sheaves(model.slice):
                    beta = class_from_sheaf(sheaf)
                    counts["twist-invariance"][0] += 1
                    counts["twist-invariance"][1] += invariants(beta) == invariants(twist_on_slice(beta))
        for key, (total, agree) in counts.items():
            out.append(check(f"invariants {key} {gname}", total, agree))
    return out


def sweep_embedding(rng: random.Random, caps: Caps = DEFAULT_CAPS) -> list[dict]:
    out = []
    for gname in ("S3", "S4"):
        group = builtin_group(gname, caps.group_order)
        rep = natural_rep(group)
        for psi in group.conjugacy_classes:
            ok, _ = good_embedding_check([rep], psi)
            out.append(check(f"good-embedding {gname} natural class {psi.position}", True, ok))
    q8 = builtin_group("Q8")
    minus_one = next(c for c in q8.conjugacy_classes if c.size == 1 and c.representative != 0)
    ok, _ = good_embedding_check([natural_rep(q8)], minus_one)
    out.append(check("good-embedding Q8 2-dim class {-1}", True, ok))
    s3 = builtin_group("S3")
    try:
        good_embedding_check([MatrixRep.trivial(s3)], s3.conjugacy_classes[1])
        rejected = False
    except NotFaithful:
        rejected = True
    out.append(check("good-embedding rejects non-faithful list", True, rejected))
    return out


RR_RANGES = {"Z3-P1": range(0, 13), "Z5-weights(1,2)": range(0, 21), "S3-irrep2": range(0, 13), "A4-std": range(0, 7)}


def sweep_rr(rng: random.Random, caps: Caps = DEFAULT_CAPS) -> list[dict]:
    out = []
    z3 = kawasaki_chi(fixture_action("Z3-P1", caps), 6)
    out.append(check("rr Z3-P1 d=6 sectors", ["7/3", "1/3", "1/3"], [serialize(s.contribution) for s in z3.sectors]))
    out.append(check("rr Z3-P1 d=6 total", 3, z3.total.to_fraction()))
    s3 = kawasaki_chi(fixture_action("S3-irrep2", caps), 6)
    out.append(check("rr S3-irrep2 d=6 total", 2, s3.total.to_fraction()))
    for name, degrees in RR_RANGES.items():
        act = fixture_action(name, caps)
        for d in degrees:
            res = kawasaki_chi(act, d, projector=d <= 6)
            out.append(check(f"rr {name} d={d} sector-sum vs molien", res.oracle, res.total, res.total == res.oracle))
            out.append(check(f"rr {name} d={d} sectors vs lefschetz", True, all(s.lefschetz_pass for s in res.sectors)))
            out.append(check(f"rr {name} d={d} rational per galois orbit", True, res.galois_rational))
            if res.projector_rank is not None:
                out.append(check(f"rr {name} d={d} projector rank", res.oracle, Fraction(res.projector_rank)))
    return out


SWEEPS: dict[str, Callable[..., list[dict]]] = {
    "pn-pushforward": sweep_pn,
    "euler-expansion": sweep_euler,
    "flag-projection": sweep_projection,
    "weyl-character": sweep_weyl,
    "sheaf-bridging": sweep_bridging,
    "nonabelian-localization": sweep_localization,
    "twisting": sweep_twist,
    "invariants": sweep_invariants,
    "riemann-roch-sectors": sweep_rr,
    "good-embedding": sweep_embedding,
}


def run_sweeps(seed: int = 0, caps: Caps = DEFAULT_CAPS, only: list[str] | None = None) -> list[dict]:
    out = []
    for name, fn in SWEEPS.items():
        if only and name not in only:
            continue
        rng = random.Random(f"{seed}:{name}")
        out.extend(fn(rng, caps))
    return out
