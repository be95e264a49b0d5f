"""Command-line front end.

Subcommands: analyze, join, count, fox.  Input files are JSON; stdout is a
human-readable report unless --json is given.  Every report embeds the
configuration (seed, budgets, tolerances) that produced it, and identical
invocations with the same seed print byte-identical JSON.

Exit codes: 0 success, 2 input error, 3 internal invariant violation,
4 completed with a flagged inconsistency (the result is still written).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from .degeneracy import Budget, check_local_tameness, check_strong_nondegeneracy
from .joincore import (
    AxisMultiplicityError,
    JoinInput,
    OracleBudgetError,
    count_fiber_points,
    cross_check,
    join_zeta,
)
from .linkalex import MultilinkData, builtin_alexander
from .mixedpoly import GaussianRational, MixedPolynomial, ParseError, format_poly, parse
from .newton import canonical_strata, compact_faces
from .foxcalc import FreeWord, Representation, h_der_matrix, zeta_gD_component
from .zetalg import GradedMonodromy, as_matrix

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INTERNAL = 3
EXIT_FLAGGED = 4


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    budget: int = 64
    target: float = 1e-3
    radius: float = 0.5
    json_output: bool = False
    out: str | None = None

    def echo(self) -> dict:
        return {
            "seed": self.seed,
            "budget": self.budget,
            "target": self.target,
            "radius": self.radius,
        }


def _config(args) -> RunConfig:
    return RunConfig(
        seed=args.seed,
        budget=args.budget,
        target=args.target,
        radius=args.radius,
        json_output=args.json,
        out=args.out,
    )


def _emit(payload: dict, cfg: RunConfig, text: str) -> None:
    payload = dict(payload)
    payload["config"] = cfg.echo()
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if cfg.json_output:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _parse_expr(args) -> MixedPolynomial:
    p = parse(args.expr, args.vars)
    if p.is_zero():
        raise ParseError("the zero polynomial has no Newton data", 0)
    return p


# ---------------------------------------------------------------------------
# analyze


def cmd_analyze(args) -> int:
    cfg = _config(args)
    p = _parse_expr(args)
    polygon = compact_faces(p)
    nonvanishing, vanishing = p.index_sets()
    budget = Budget(multistarts=cfg.budget)
    verdicts = check_strong_nondegeneracy(p, budget, cfg.seed)
    tameness = check_local_tameness(p, budget=budget, seed=cfg.seed)
    strata = canonical_strata(p)

    def iset(s) -> list[list[int]]:
        return sorted([sorted(i) for i in s])

    payload = {
        "polynomial": format_poly(p),
        "convenient": p.is_convenient(),
        "newton": polygon.to_json(),
        "index_sets": {"nonvanishing": iset(nonvanishing), "vanishing": iset(vanishing)},
        "strata": [{"kind": s.kind, "I": sorted(s.I), "label": s.label} for s in strata],
        "faces": [
            {
                "dim": face.dim,
                "points": [list(pt) for pt in face.lattice_points],
                "weight": list(face.supporting_weight.p),
                "verdict": v.to_json(),
            }
            for face, v in verdicts.items()
        ],
        "local_tameness": {
            "{" + ",".join(map(str, sorted(I))) + "}": v.to_json()
            for I, v in tameness.items()
        },
    }
    lines = [f"polynomial: {format_poly(p)}", f"convenient: {p.is_convenient()}"]
    lines.append(
        f"support: {sorted(list(pt) for pt in polygon.support)}; "
        f"{len(polygon.vertices())} vertices, {len(polygon.edges())} edges"
    )
    lines.append(f"I_nv = {iset(nonvanishing)}, I_v = {iset(vanishing)}")
    lines.append(f"{len(strata)} canonical strata")
    for face, v in verdicts.items():
        kind = "vertex" if face.dim == 0 else "edge"
        lines.append(
            f"{kind} {list(face.lattice_points)} weight {list(face.supporting_weight.p)}: "
            f"{v.status} ({v.rule})"
        )
    for I, v in tameness.items():
        lines.append(f"local tameness along C^{sorted(I)}: {v.status} ({v.rule})")
    if not tameness:
        lines.append("no vanishing coordinate subspaces (tameness is vacuous)")
    _emit(payload, cfg, "\n".join(lines))
    inconsistent = any(v.status == "REFUTED" for v in verdicts.values())
    return EXIT_OK if not args.strict or not inconsistent else EXIT_FLAGGED


# ---------------------------------------------------------------------------
# join


def _load_link(data: dict) -> MultilinkData:
    if "builtin" in data:
        spec = data["builtin"]
        return builtin_alexander(spec["family"], tuple(spec.get("params", ())))
    return MultilinkData.from_json(data)


def _load_bundle(path: str) -> tuple[JoinInput, dict]:
    with open(path) as fh:
        data = json.load(fh)
    g = parse(data["g"], int(data.get("vars", 2)))
    mono1 = GradedMonodromy.from_json(data["mono1"])
    mono2 = GradedMonodromy.from_json(data["mono2"])
    link = _load_link(data["link"])
    counts = tuple(data["counts"]) if "counts" in data else None
    bundle = JoinInput(g, mono1, mono2, link, counts)
    bundle_extra = {
        k: data[k] for k in ("chi_g", "chi_g_minus_axes") if k in data
    }
    return bundle, bundle_extra


def cmd_join(args) -> int:
    cfg = _config(args)
    bundle, extra = _load_bundle(args.bundle)
    # the cross-check reports an axis-multiplicity inconsistency as a
    # flagged entry (exit 4) rather than an input error
    checks = cross_check(
        bundle,
        chi_g_minus_axes=extra.get("chi_g_minus_axes"),
        chi_g=extra.get("chi_g"),
        target=cfg.target,
        radius=cfg.radius,
    )
    axis_ok = checks[0].passed
    if axis_ok:
        zeta, report = join_zeta(bundle, target=cfg.target, radius=cfg.radius)
        payload = report.to_json()
        lines = [report.to_text(), ""]
    else:
        payload = {"error": "axis multiplicity inconsistency; no zeta computed"}
        lines = ["axis multiplicity inconsistency; no zeta computed", ""]
    payload["checks"] = [
        {"name": c.name, "passed": c.passed, "details": c.details} for c in checks
    ]
    for c in checks:
        lines.append(f"check {c.name}: {'pass' if c.passed else 'FAIL'} ({c.details})")
    _emit(payload, cfg, "\n".join(lines))
    return EXIT_FLAGGED if any(not c.passed for c in checks) else EXIT_OK


# ---------------------------------------------------------------------------
# count


def cmd_count(args) -> int:
    cfg = _config(args)
    p = _parse_expr(args)
    result = count_fiber_points(
        p, args.axis, target=cfg.target, radius=cfg.radius
    )
    lf = result.factorization
    payload = {
        "polynomial": format_poly(p),
        "axis": args.axis,
        "count": result.count,
        "method": result.method,
        "formula_value": result.formula_value,
        "oracle_value": result.oracle_value,
        "notes": list(result.notes),
        "factorization": None
        if lf is None
        else {
            "c": str(lf.c),
            "a": lf.a,
            "b": lf.b,
            "d_low": lf.d_low,
            "d_high": lf.d_high,
            "exact": lf.exact,
            "factors": [
                {"delta": str(f.delta), "multiplicity": f.multiplicity, "exact": f.exact}
                for f in lf.factors
            ],
        },
    }
    lines = [
        f"axis {args.axis} fiber points of {format_poly(p)}: "
        f"{result.count if result.count is not None else 'UNDEFINED'} [{result.method}]",
    ]
    if result.formula_value is not None or result.oracle_value is not None:
        lines.append(
            f"formula = {result.formula_value}, oracle = {result.oracle_value}"
        )
    for n in result.notes:
        lines.append(f"note: {n}")
    _emit(payload, cfg, "\n".join(lines))
    return EXIT_FLAGGED if result.method == "mismatch-report" and args.strict else EXIT_OK


# ---------------------------------------------------------------------------
# fox


def _scalar(v) -> GaussianRational:
    if isinstance(v, int):
        return GaussianRational.of(v)
    if isinstance(v, str):
        return GaussianRational(Fraction(v), Fraction(0))
    raise ValueError(f"unsupported matrix entry {v!r}")


def cmd_fox(args) -> int:
    cfg = _config(args)
    with open(args.words) as fh:
        data = json.load(fh)
    mu = int(data["mu"])
    words = [FreeWord.from_list(w) for w in data["words"]]
    if len(words) != mu:
        raise ValueError("word count does not match mu")
    images = {
        int(k): [[_scalar(x) for x in row] for row in M]
        for k, M in data["rep"]["images"].items()
    }
    rho = Representation.of(images)
    if "h_word" in data:
        h = FreeWord.from_list(data["h_word"])
        h_mat = rho.evaluate(h)
    else:
        h_mat = as_matrix([[_scalar(x) for x in row] for row in data["h"]])
    hder = h_der_matrix(words, rho, h_mat)
    component = zeta_gD_component(h_mat, hder, 0)
    payload = {
        "mu": mu,
        "dim": rho.dim,
        "h_der": [[str(x) for x in row] for row in hder],
        "zeta_ratio": component.to_json(),
        "zeta_ratio_text": component.to_text(),
    }
    lines = [
        f"mu = {mu}, representation dimension {rho.dim}",
        f"h_der is {len(hder)}x{len(hder)}",
        f"det(1 - lambda rho(h)) / det(1 - lambda h_Der) = {component.to_text()}",
    ]
    _emit(payload, cfg, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument wiring


def _add_common(sp) -> None:
    sp.add_argument("--json", action="store_true", help="print the JSON payload")
    sp.add_argument("--out", help="write the JSON payload to this path")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=64, help="multistarts per face")
    sp.add_argument("--target", type=float, default=1e-3, help="oracle fiber value")
    sp.add_argument("--radius", type=float, default=0.5, help="oracle disk radius")
    sp.add_argument(
        "--strict",
        action="store_true",
        help="exit 4 when a check is flagged instead of 0",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mixedsing",
        description="Newton boundary, degeneracy and monodromy zeta analysis "
        "of mixed polynomial singularities",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="Newton boundary, index sets, degeneracy verdicts")
    a.add_argument("--expr", required=True)
    a.add_argument("--vars", type=int, default=2)
    _add_common(a)
    a.set_defaults(func=cmd_analyze)

    j = sub.add_parser("join", help="assemble the zeta function of g(f1, f2)")
    j.add_argument("--bundle", required=True, help="bundle JSON path")
    _add_common(j)
    j.set_defaults(func=cmd_join)

    c = sub.add_parser("count", help="axis fiber point count with oracle")
    c.add_argument("--expr", required=True)
    c.add_argument("--vars", type=int, default=2)
    c.add_argument("--axis", type=int, required=True, choices=(1, 2))
    _add_common(c)
    c.set_defaults(func=cmd_count)

    f = sub.add_parser("fox", help="Fox-derivative monodromy matrix from words")
    f.add_argument("--words", required=True, help="words/representation JSON path")
    _add_common(f)
    f.set_defaults(func=cmd_fox)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AxisMultiplicityError, OracleBudgetError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AssertionError, ArithmeticError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
