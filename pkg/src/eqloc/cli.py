"""Command-line entry point: ``eqloc <command> [options]``.

Reports are JSON with exact values; the exit status is 0 iff every check passes
(2 for rejected input).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .exact.localized import ResidualDenominator
from .groups.builtins import DescriptorError, builtin_group, descriptor_generators, group_from_descriptor, parse_matrix
from .groups.group import GroupCapExceeded
from .groups.subgroups import IncompleteIrreducibles
from .quotient import DEFAULT_CAPS, CapExceeded, Caps, action_from_descriptor, fixture_action, kawasaki_chi
from .suite import check, run_sweeps, serialize, transitive_gsets

COMMANDS = ("verify", "chi", "sectors", "weyl-char", "euler-gkm", "localize-gset")


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise DescriptorError(flag, f"expected comma-separated integers, got {text!r}") from None


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise DescriptorError("", f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DescriptorError("", f"{path} is not valid JSON: {exc.msg} at line {exc.lineno}") from None


# -- quotient-rr ------------------------------------------------------------------------
def _action(args, caps: Caps):
    if args.input:
        return action_from_descriptor(_load_json(args.input), "", caps)
    if not args.fixture:
        raise DescriptorError("--fixture", "give --fixture or --input")
    try:
        return fixture_action(args.fixture, caps)
    except KeyError as exc:
        raise DescriptorError("--fixture", exc.args[0]) from None


def cmd_chi(args, caps: Caps) -> tuple[dict, list[dict]]:
    if args.degree is None:
        raise DescriptorError("--degree", "required")
    act = _action(args, caps)
    res = kawasaki_chi(act, args.degree, projector=args.projector)
    checks = [
        check("sector sum equals Molien average", res.oracle, res.total, res.total == res.oracle),
        check("every sector matches its Lefschetz trace", True, all(s.lefschetz_pass for s in res.sectors)),
        check("sectors rational per Galois orbit", True, res.galois_rational),
    ]
    if res.projector_rank is not None:
        checks.append(check("projector rank equals Molien average", res.oracle, res.projector_rank))
    return res.to_json(), checks


def cmd_sectors(args, caps: Caps) -> tuple[dict, list[dict]]:
    results, checks = cmd_chi(args, caps)
    keep = {"degree": results["degree"], "sectors": results["sectors"]}
    return keep, [c for c in checks if "Lefschetz" in c["name"] or "Galois" in c["name"]]


# -- gkm-loc ------------------------------------------------------------------------------
def cmd_weyl_char(args, caps: Caps) -> tuple[dict, list[dict]]:
    from .gkm import WeylData, flag_variables, line_bundle_class, pushforward_to_point, schur_polynomial, weyl_dimension

    lam = _parse_int_list(args.lam or "", "--lambda")
    n = args.n if args.n is not None else len(lam)
    if n < 1 or len(lam) != n:
        raise DescriptorError("--lambda", f"need {n} entries")
    p = pushforward_to_point(line_bundle_class(WeylData.full(n), lam))
    dim = p.coefficient_sum()
    results = {"n": n, "lambda": lam, "character": str(p), "terms": p.to_json(), "dimension": serialize(dim)}
    checks = []
    if all(a >= b for a, b in zip(lam, lam[1:])) and lam[-1] >= 0:
        checks.append(check("character equals Schur polynomial", schur_polynomial(flag_variables(n), lam), p))
    checks.append(check("dimension equals Weyl dimension formula", weyl_dimension(lam), dim.to_fraction()))
    return results, checks


def cmd_euler_gkm(args, caps: Caps) -> tuple[dict, list[dict]]:
    from .exact.laurent import LaurentPoly
    from .gkm import FixedPointData, WeylData, euler_class_expansion, flag_data, projective_space_data

    if args.input:
        data = FixedPointData.from_json(_load_json(args.input))
        name = args.input
    else:
        fixture = args.fixture or "Pn"
        n = args.n if args.n is not None else 1
        if fixture == "Pn":
            data = projective_space_data(n)
        elif fixture == "flag":
            data = flag_data(WeylData.full(n))
        elif fixture == "partial-flag":
            comp = tuple(_parse_int_list(args.lam or "", "--lambda"))
            try:
                data = flag_data(WeylData(n, comp))
            except ValueError as exc:
                raise DescriptorError("--lambda", str(exc)) from None
        else:
            raise DescriptorError("--fixture", f"unknown space {fixture!r}; known: Pn, flag, partial-flag")
        name = f"{fixture} n={n}"
    rep = euler_class_expansion(data)
    results = {
        "space": name,
        "fixed_points": [p.label for p in data.points],
        "euler_pushforward": rep["euler_pushforward"].to_json(),
    }
    checks = [
        check("euler class equals sum of point classes", True, rep["expansion_ok"]),
        check("each point class pushes forward to 1", True, rep["point_pushforwards_ok"]),
        check("euler pushforward equals fixed-point count", LaurentPoly.constant(data.variables, rep["fixed_point_count"]),
              rep["euler_pushforward"]),
    ]
    return results, checks


# -- gset-k ---------------------------------------------------------------------------------
def _gset_from_descriptor(obj, caps: Caps):
    from .gset import GSet

    if not isinstance(obj, dict):
        raise DescriptorError("", "G-set descriptor must be an object")
    group = group_from_descriptor(obj.get("group"), "/group", caps.group_order)
    n = obj.get("points")
    if not isinstance(n, int) or n < 1:
        raise DescriptorError("/points", "expected a positive integer")
    action = obj.get("action")
    gens = descriptor_generators(group, obj["group"])
    if not isinstance(action, list) or len(action) != len(gens):
        raise DescriptorError("/action", f"expected one image list per generator ({len(gens)})")
    images = {}
    for i, (g, img) in enumerate(zip(gens, action)):
        if not isinstance(img, list) or sorted(img) != list(range(n)):
            raise DescriptorError(f"/action/{i}", f"expected a permutation of 0..{n - 1}")
        images[g] = img
    # extend along the Cayley graph
    act = [None] * len(group)
    act[0] = list(range(n))
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, img in images.items():
                y = group.table[g][x]
                if act[y] is None:
                    act[y] = [img[p] for p in act[x]]
                    nxt.append(y)
        frontier = nxt
    try:
        x = GSet(group, act)
    except ValueError as exc:
        raise DescriptorError("/action", str(exc)) from None
    return group, x


def _sheaves_from_descriptor(obj, x):
    from .gset import EquivSheafOnGSet

    out = []
    for i, sheaf in enumerate(obj.get("sheaves", [])):
        pointer = f"/sheaves/{i}"
        data = {}
        for j, fiber in enumerate(sheaf.get("fibers", [])):
            xr = fiber.get("orbit_rep")
            if xr not in x.orbit_representatives:
                raise DescriptorError(f"{pointer}/fibers/{j}/orbit_rep", f"not an orbit representative {x.orbit_representatives}")
            images = {}
            for k, entry in enumerate(fiber.get("rep", [])):
                g = entry.get("element")
                if not isinstance(g, int) or not 0 <= g < len(x.group):
                    raise DescriptorError(f"{pointer}/fibers/{j}/rep/{k}/element", "expected an element index")
                images[g] = parse_matrix(entry.get("matrix"), f"{pointer}/fibers/{j}/rep/{k}/matrix", fiber.get("cyclotomic_order"))
            data[xr] = images
        try:
            out.append(EquivSheafOnGSet.from_generator_images(x, data))
        except (ValueError, KeyError) as exc:
            raise DescriptorError(pointer, str(exc)) from None
    return out


def _localization_checks(label: str, x, sheaves) -> tuple[list[dict], list[dict]]:
    from .gset import (
        class_from_sheaf,
        decompose,
        localize_via_fixed_locus,
        localize_via_sheaves,
        nonabelian_localize,
        rr_gset_sector,
    )

    group = x.group
    rows, checks = [], []
    for si, sheaf in enumerate(sheaves):
        alpha = class_from_sheaf(sheaf)
        comps = decompose(alpha)
        for psi in group.conjugacy_classes:
            expected = comps[psi.position]
            routes = {
                "central-summand": nonabelian_localize(alpha, psi),
                "second-order": nonabelian_localize(alpha, psi, route="direct"),
                "other-representative": nonabelian_localize(alpha, psi, h=psi.members[-1]),
                "morita-restriction": localize_via_fixed_locus(alpha, psi),
                "sheaf-idempotent": localize_via_sheaves(sheaf, psi),
            }
            sector = rr_gset_sector(alpha, psi)
            rows.append({
                "gset": label,
                "sheaf": si,
                "class": psi.position,
                "representative": group.label(psi.representative),
                "component": expected.to_json(),
                "invariants": serialize(sector["invariants"]),
            })
            name = f"{label} sheaf {si} class {psi.position}"
            for route, value in routes.items():
                checks.append(check(f"{name} {route}", expected.to_json(), value.to_json(), value == expected))
            checks.append(check(f"{name} invariants sector", True, sector["pass"]))
    return rows, checks


def cmd_localize_gset(args, caps: Caps) -> tuple[dict, list[dict]]:
    from .gset import irreducible_sheaves

    rows, checks = [], []
    if args.input:
        obj = _load_json(args.input)
        group, x = _gset_from_descriptor(obj, caps)
        sheaves = _sheaves_from_descriptor(obj, x) or irreducible_sheaves(x)
        r, c = _localization_checks("input", x, sheaves)
        rows += r
        checks += c
    else:
        name = args.fixture or "S3"
        try:
            group = builtin_group(name, caps.group_order)
        except DescriptorError as exc:
            raise DescriptorError("--fixture", exc.message) from None
        for label, x in transitive_gsets(group):
            r, c = _localization_checks(label, x, irreducible_sheaves(x))
            rows += r
            checks += c
    classes = [{"position": c.position, "representative": group.label(c.representative), "size": c.size}
               for c in group.conjugacy_classes]
    return {"group": group.name, "classes": classes, "components": rows}, checks


def cmd_verify(args, caps: Caps) -> tuple[dict, list[dict]]:
    checks = run_sweeps(args.seed, caps)
    summary: dict[str, list[int]] = {}
    for c in checks:
        key = c["name"].split(" ")[0]
        summary.setdefault(key, [0, 0])
        summary[key][0] += 1
        summary[key][1] += c["pass"]
    return {"seed": args.seed, "sweeps": {k: {"checks": t, "passed": p} for k, (t, p) in summary.items()}}, checks


HANDLERS = {
    "verify": cmd_verify,
    "chi": cmd_chi,
    "sectors": cmd_sectors,
    "weyl-char": cmd_weyl_char,
    "euler-gkm": cmd_euler_gkm,
    "localize-gset": cmd_localize_gset,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eqloc", description="Exact equivariant localization computations and checks.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--fixture", help="named fixture (action, space or group depending on the command)")
    p.add_argument("--input", help="JSON descriptor path")
    p.add_argument("--degree", type=int, help="degree d of O(d)")
    p.add_argument("--n", type=int, help="rank n (GL_n) or dimension n (P^n)")
    p.add_argument("--lambda", dest="lam", help="comma-separated weight (weyl-char) or composition (partial-flag)")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    p.add_argument("--caps", help='JSON caps, e.g. {"group_order": 2000, "basis_size": 5000, "degree": 60}')
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--projector", action="store_true", help="also compute the averaging-projector rank (chi)")
    p.add_argument("--timing", action="store_true", help="record wall-clock timing (reports are then not reproducible)")
    return p


def run(argv: list[str] | None = None) -> tuple[dict, int]:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        caps = DEFAULT_CAPS
        if args.caps:
            try:
                caps = Caps.from_json(json.loads(args.caps))
            except (ValueError, TypeError) as exc:
                raise DescriptorError("--caps", str(exc)) from None
        results, checks = HANDLERS[args.command](args, caps)
    except DescriptorError as exc:
        return {"command": args.command, "error": {"pointer": exc.pointer or "/", "message": exc.message}}, 2
    except (CapExceeded, GroupCapExceeded, IncompleteIrreducibles) as exc:
        return {"command": args.command, "error": {"pointer": "/", "message": str(exc)}}, 2
    except ResidualDenominator as exc:
        results = {}
        checks = [check("pushforward collapses to a polynomial", "polynomial", exc.element.to_json(), False)]
    report = {
        "command": args.command,
        "options": {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "out", "timing") and v is not None},
        "results": results,
        "checks": checks,
        "passed": sum(c["pass"] for c in checks),
        "failed": sum(not c["pass"] for c in checks),
        "timing": {"seconds": round(time.perf_counter() - start, 3)} if args.timing else None,
    }
    return report, 0 if report["failed"] == 0 else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    report, status = run(argv)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    summary = f"{report['command']}: " + (
        f"error at {report['error']['pointer']}: {report['error']['message']}" if "error" in report
        else f"{report['passed']} passed, {report['failed']} failed"
    )
    print(summary, file=sys.stderr)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
