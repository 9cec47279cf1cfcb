"""Command-line front end.

One executable, eight subcommands, JSON reports on standard output.
Every report carries a versioned "schema" field; rationals travel as
"num/den" strings; nothing is ever parsed as a float.  Errors go to
standard error as structured JSON with a machine-readable code, and the
exit status distinguishes domain errors (1) from I/O and parse errors
(2).  Output is deterministic: identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .chamber import make_path, signed_preimage_count, wall_crossing_jump
from .divisibility import (
    hurewicz_cokernel_order,
    hurewicz_kernel_order,
    sharpness_scan,
    sw_divisibility_lower_bound,
)
from .fourmanifold import dirac_index_d, donaldson_k, expected_moduli_dimension
from .lattices import (
    GramMatrix,
    diagonal_witness,
    donaldson_admissible,
    min_characteristic_norm,
    validate,
)
from .rational import format_rational, parse_rational
from .reduction import (
    ReductionProblem,
    choose_reduction_subspace,
    reduce_and_degree,
    verify_miss_condition,
)

__all__ = ["RunConfig", "dispatch", "main"]


class CLIError(Exception):
    """Carries the exit status and a machine-readable error code."""

    def __init__(self, status, code, message):
        super().__init__(message)
        self.status = status
        self.code = code


def _domain(message):
    return CLIError(1, "domain", message)


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    options: dict


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CLIError(2, "io", f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CLIError(2, "parse", f"malformed JSON in {path}: {exc}") from exc


def _angle_list(text):
    # comma-separated rationals, in units of pi
    return [parse_rational(part) for part in text.split(",")]


# -- subcommand handlers ----------------------------------------------------


def _run_index(opt):
    d = dirac_index_d(opt["c2"], opt["sigma"])
    return {
        "schema": "swcohom/index/1",
        "c_squared": opt["c2"],
        "signature": opt["sigma"],
        "d": d,
    }


def _run_dim(opt):
    if opt["d"] is not None:
        d = opt["d"]
    elif opt["c2"] is not None and opt["sigma"] is not None:
        d = dirac_index_d(opt["c2"], opt["sigma"])
    else:
        raise _domain("need either --d or both --c2 and --sigma")
    k = expected_moduli_dimension(d, opt["bplus"])
    return {
        "schema": "swcohom/dim/1",
        "d": d,
        "b_plus": opt["bplus"],
        "k": k,
    }


def _bound_row(r):
    return {
        "d": r.d,
        "k": r.k,
        "p": r.p,
        "kappa": r.kappa,
        "a_coeffs": [format_rational(c) for c in r.a_coeffs],
        "denominators": list(r.denominators),
        "lower_bound": r.lower_bound,
        "lemma_cokernel_order": r.lemma_cokernel_order,
        "sharp": r.sharp,
    }


def _run_bound(opt):
    r = sw_divisibility_lower_bound(opt["d"], opt["k"])
    out = {"schema": "swcohom/bound/1"}
    out.update(_bound_row(r))
    return out


def _run_hurewicz(opt):
    d = opt["d"]
    ks = [opt["k"]] if opt["k"] is not None else [0, 1, 2, 3, 4]
    orders = []
    for k in ks:
        kernel = hurewicz_kernel_order(d, k)
        cokernel = None
        if k % 2 == 0 and not (k == 4 and d <= 2):
            cokernel = hurewicz_cokernel_order(d, k)
        orders.append({"k": k, "kernel": kernel, "cokernel": cokernel})
    return {"schema": "swcohom/hurewicz/1", "d": d, "orders": orders}


def _run_sharpscan(opt):
    rows = sharpness_scan(opt["dmin"], opt["dmax"])
    if opt["k"] is not None:
        rows = [r for r in rows if r.k == opt["k"]]
    return {
        "schema": "swcohom/sharpscan/1",
        "d_min": opt["dmin"],
        "d_max": opt["dmax"],
        "rows": [_bound_row(r) for r in rows],
    }


def _run_lattice(opt):
    doc = _load_json(opt["gram"])
    entries = doc.get("gram", doc) if isinstance(doc, dict) else doc
    try:
        g = GramMatrix(entries)
    except (TypeError, ValueError) as exc:
        raise CLIError(2, "parse", f"bad Gram matrix: {exc}") from exc
    v = validate(g)
    out = {
        "schema": "swcohom/lattice/1",
        "rank": g.n,
        "valid": v.valid,
        "failure": v.failure,
        "min_characteristic_norm": None,
        "admissible": None,
        "witness": None,
        "k": None,
        "diagonal_witness": None,
    }
    if not v.valid:
        return out
    verdict = donaldson_admissible(g)
    out["min_characteristic_norm"] = verdict.min_norm
    out["admissible"] = verdict.admissible
    if verdict.witness is not None:
        out["witness"] = verdict.witness.to_json()
    out["k"] = donaldson_k(-verdict.min_norm, g.n).k
    if g.n <= 8:
        basis = diagonal_witness(g)
        if basis is not None:
            out["diagonal_witness"] = [b.to_json() for b in basis]
    return out


def _run_reduce(opt):
    doc = _load_json(opt["problem"])
    try:
        p = ReductionProblem.from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise CLIError(2, "parse", f"bad reduction problem: {exc}") from exc
    v_basis = choose_reduction_subspace(p, opt["epsilon"], opt["samples"])
    miss = verify_miss_condition(p, v_basis)
    if not miss.ok:
        raise _domain(
            "miss condition failed for the chosen subspace; "
            "enlarge --samples or shrink --epsilon"
        )
    report = reduce_and_degree(p, v_basis, opt["epsilon"])
    return {
        "schema": "swcohom/reduce/1",
        "domain_dim": p.domain_dim,
        "target_dim": p.target_dim,
        "index": p.index(),
        "epsilon": format_rational(report.epsilon),
        "reduced_dim": report.reduced_dim,
        "subspace_V": [
            [format_rational(x) for x in v] for v in report.subspace_V
        ],
        "miss": {
            "ok": miss.ok,
            "worst_distance_squared": format_rational(
                miss.worst_distance_squared),
            "samples_checked": miss.samples_checked,
        },
        "degree": report.degree,
    }


def _run_chamber(opt):
    path = make_path(opt["n"])
    counts = []
    for alpha in opt["angles"]:
        c = signed_preimage_count(path, alpha)
        counts.append({
            "point_angle": format_rational(c.point_angle),
            "chamber": c.chamber,
            "signed_count": c.signed_count,
        })
    return {
        "schema": "swcohom/chamber/1",
        "n": opt["n"],
        "counts": counts,
        "jump": wall_crossing_jump(path),
    }


_HANDLERS = {
    "index": _run_index,
    "dim": _run_dim,
    "bound": _run_bound,
    "hurewicz": _run_hurewicz,
    "sharpscan": _run_sharpscan,
    "lattice": _run_lattice,
    "reduce": _run_reduce,
    "chamber": _run_chamber,
}


def dispatch(config: RunConfig) -> dict:
    """Route a validated config to its handler and return the report."""
    handler = _HANDLERS.get(config.subcommand)
    if handler is None:
        raise CLIError(2, "parse", f"unknown subcommand {config.subcommand!r}")
    try:
        return handler(config.options)
    except CLIError:
        raise
    except ValueError as exc:
        raise _domain(str(exc)) from exc


# -- table rendering --------------------------------------------------------


def _render_table(report):
    """Flat keys as `key value` lines; list-of-dict fields as aligned rows."""
    lines = []
    tables = []
    for key, value in report.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            tables.append((key, value))
        elif isinstance(value, dict):
            for k2, v2 in value.items():
                lines.append(f"{key}.{k2} {_cell(v2)}")
        else:
            lines.append(f"{key} {_cell(value)}")
    for key, rows in tables:
        lines.append(f"[{key}]")
        cols = list(rows[0].keys())
        grid = [cols] + [[_cell(r[c]) for c in cols] for r in rows]
        widths = [max(len(row[i]) for row in grid) for i in range(len(cols))]
        for row in grid:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _cell(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        sep = "; " if any(isinstance(v, list) for v in value) else ","
        return sep.join(_cell(v) for v in value)
    return str(value)


# -- argument parsing -------------------------------------------------------


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="swcohom",
        description="exact divisibility bounds, definite lattices, "
                    "finite-dimensional degree reductions",
    )
    parser.add_argument("--format", choices=("json", "table"), default="json")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("index", help="Dirac index d = (c^2 - sigma)/8")
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)

    p = sub.add_parser("dim", help="expected moduli dimension 2d - b+ - 1")
    p.add_argument("--d", type=int)
    p.add_argument("--c2", type=int)
    p.add_argument("--sigma", type=int)
    p.add_argument("--bplus", type=int, required=True)

    p = sub.add_parser("bound", help="divisibility lower bound for m(d, k)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("hurewicz", help="kernel/cokernel orders near the bottom cell")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int)

    p = sub.add_parser("sharpscan", help="bound vs cokernel order over a d range")
    p.add_argument("--dmin", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--k", type=int, choices=(2, 4))

    p = sub.add_parser("lattice", help="validate a Gram matrix and test admissibility")
    p.add_argument("--gram", required=True, metavar="FILE")

    p = sub.add_parser("reduce", help="finite-dimensional reduction and degree")
    p.add_argument("--problem", required=True, metavar="FILE")
    p.add_argument("--epsilon", type=parse_rational, default=Fraction(1, 4))
    p.add_argument("--samples", type=int, default=128)

    p = sub.add_parser("chamber", help="signed counts and the wall-crossing jump")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--angles", type=_angle_list, required=True,
                   help="comma-separated rationals, units of pi")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    options = {k: v for k, v in vars(args).items()
               if k not in ("subcommand", "format")}
    config = RunConfig(subcommand=args.subcommand, options=options)
    try:
        report = dispatch(config)
    except CLIError as exc:
        doc = {
            "schema": "swcohom/error/1",
            "error": {"code": exc.code, "message": str(exc)},
        }
        print(json.dumps(doc), file=sys.stderr)
        return exc.status
    if args.format == "table":
        print(_render_table(report))
    else:
        print(json.dumps(report, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
