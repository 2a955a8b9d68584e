"""Command-line front end.

Exit codes: 0 success, 1 a requested check failed, 2 graph not rational,
3 enumeration cap exceeded, 4 cycle not in L', 5 invalid input file,
6 singular or non-negative-definite form.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .classes import DEFAULT_CAP
from .cover import cover_pg_table, cube_sum_direct, cube_sum_rewritten, lambda_from_sw, sum_formula_rhs
from .errors import NotRational, PlumbingError
from .graph import load_graph
from .invariants import is_rational_graph, sw_rational, verify_equality_suite
from .lattice import Cycle, Lattice
from .lifting import anti_nef_ascent, distinguished_char, nef_lift, unit_cube_rep
from .rational import format_decimal, format_rational, parse_rational
from .seifert import load_seifert, star_graph, star_summary

COMMANDS = ("check", "invariants", "classes", "liftings", "sw", "cover", "conjecture", "seifert")


class Encoder:
    def __init__(self, decimal: bool = False):
        self.decimal = decimal

    def __call__(self, obj):
        if isinstance(obj, (bool, int)) or obj is None:
            return obj
        if isinstance(obj, Fraction):
            text = format_rational(obj)
            if self.decimal and obj.denominator != 1:
                text += f" ({format_decimal(obj)})"
            return text
        if isinstance(obj, Cycle):
            return [self(c) for c in obj]
        if isinstance(obj, dict):
            return {k: self(v) for k, v in obj.items()}
        if isinstance(obj, (list, tuple)):
            return [self(v) for v in obj]
        return obj


def _render_human(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, val in obj.items():
        if isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for row in val:
                inner = _render_human(row, indent + 2)
                inner[0] = pad + "  - " + inner[0].lstrip()
                lines.extend(inner)
        elif isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_human(val, indent + 1))
        elif isinstance(val, list):
            lines.append(f"{pad}{key}: (" + ", ".join(str(v) for v in val) + ")")
        else:
            lines.append(f"{pad}{key}: {val}")
    return lines


def emit(report: dict, fmt: str, decimal: bool, out=None):
    out = out or sys.stdout
    if fmt == "structured":
        out.write(json.dumps(Encoder(False)(report), indent=2) + "\n")
    else:
        out.write("\n".join(_render_human(Encoder(decimal)(report))) + "\n")


def _lattice(cfg):
    return Lattice(load_graph(cfg.input))


def _negdef_lattice(cfg):
    lat = _lattice(cfg)
    lat.require_negdef()
    return lat


def cmd_check(cfg):
    lat = _lattice(cfg)
    report = {
        "vertices": lat.s,
        "edges": len(lat.graph.edges),
        "tree": lat.graph.is_tree(),
        "det": lat.det,
        "negdef": lat.negdef,
    }
    return report, 0 if lat.negdef else 1


def cmd_invariants(cfg):
    lat = _lattice(cfg)
    K = lat.canonical_cycle
    report = {
        "s": lat.s,
        "det": lat.det,
        "negdef": lat.negdef,
        "K": K,
        "K^2+s": lat.K_squared_plus_s,
    }
    if not lat.negdef:
        return report, 6
    rat = is_rational_graph(lat)
    report.update(
        {
            "Z_min": rat.fundamental_cycle,
            "chi(Z_min)": rat.chi_zmin,
            "rational": rat.is_rational,
        }
    )
    return report, 0


def cmd_classes(cfg):
    lat = _negdef_lattice(cfg)
    group = lat.class_group(cfg.cap)
    rows = [
        {
            "coords": list(h.coords),
            "order": group.element_order(h),
            "representative": h.representative,
            "theta_exponents": list(group.theta_character(h)),
        }
        for h in group
    ]
    return {"order": group.order, "invariant_factors": list(group.invariant_factors), "classes": rows}, 0


def cmd_liftings(cfg):
    lat = _negdef_lattice(cfg)
    group = lat.class_group(cfg.cap)
    rows = []
    for h in group:
        top, trace = anti_nef_ascent(lat, h)
        k_r = distinguished_char(lat, h)
        row = {
            "class": list(h.coords),
            "unit_cube": unit_cube_rep(lat, h),
            "anti_nef": top,
            "nef": nef_lift(lat, group, h),
            "k_r": k_r,
            "k_r^2": lat.square(k_r),
        }
        if cfg.trace:
            row["trace"] = trace.to_dict()
        rows.append(row)
    return {"order": group.order, "liftings": rows}, 0


def cmd_sw(cfg):
    lat = _negdef_lattice(cfg)
    group = lat.class_group(cfg.cap)
    rows = []
    for h in group:
        data = sw_rational(lat, h)
        rows.append({"class": list(h.coords), "k_r": data.k_r, "sw": data.sw, "d": data.d})
    return {"s": lat.s, "sw": rows, "lambda": lambda_from_sw(lat, group)}, 0


def cmd_cover(cfg):
    lat = _negdef_lattice(cfg)
    group = lat.class_group(cfg.cap)
    table = cover_pg_table(lat, group)
    rows = [
        {"class": list(r.cls.coords), "theta_exponents": list(r.theta), "eigengenus": r.eigengenus}
        for r in table.rows
    ]
    return {"rows": rows, "total": table.total, "cover_rational": table.cover_rational}, 0


def cmd_conjecture(cfg):
    lat = _negdef_lattice(cfg)
    group = lat.class_group(cfg.cap)
    rational = is_rational_graph(lat).is_rational
    report = {"rational": rational}
    code = 0
    lam = cfg.lam
    if rational:
        suite = verify_equality_suite(lat, group, seed=cfg.seed)
        report["equality_suite"] = {
            "passed": suite.passed,
            "classes": [
                {
                    "class": list(c.coords),
                    "h1(nef_lift)": c.h1,
                    "rhs(nef_lift)": c.rhs,
                    "members": c.members_checked,
                    "non_members": c.nonmembers_checked,
                    "passed": c.passed,
                }
                for c in suite.classes
            ],
        }
        if not suite.passed:
            code = 1
        lam_sw = lambda_from_sw(lat, group)
        report["lambda_from_sw"] = lam_sw
        if lam is None:
            lam = lam_sw
        report["cover_total"] = cover_pg_table(lat, group).total
    elif lam is None:
        raise NotRational("graph is not rational: pass --lambda p/q to evaluate the sum formula")
    report["lambda"] = lam
    report["cube_sum"] = cube_sum_direct(lat, group)
    report["cube_sum_rewritten"] = cube_sum_rewritten(lat, group)
    report["sum_formula_rhs"] = sum_formula_rhs(lat, group, lam)
    if rational and report["sum_formula_rhs"] != report["cover_total"] and cfg.lam is None:
        code = 1
    return report, code


def cmd_seifert(cfg):
    data = load_seifert(cfg.input)
    graph = star_graph(data)
    if cfg.output:
        Path(cfg.output).write_text(graph.to_json() + "\n")
        return {"written": cfg.output, **star_summary(data)}, 0
    sys.stdout.write(graph.to_json() + "\n")
    return None, 0


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(5, f"{self.prog}: error: {message}\n")


def _glue_negative_values(argv):
    # argparse takes "-25/12" for an option; bind it to --lambda explicitly
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--lambda":
            val = next(it, None)
            out.append(tok if val is None else f"--lambda={val}")
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="plumbkit", description="Exact invariants of plumbing graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", "-i", required=True, help="graph file (Seifert file for 'seifert')")
        p.add_argument("--format", choices=("human", "structured"), default="human")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max classes to enumerate")
        p.add_argument("--decimal", action="store_true", help="append approximate decimals (display only)")
        if name == "conjecture":
            p.add_argument("--lambda", dest="lam", type=parse_rational, default=None, help="Casson-Walker invariant p/q")
            p.add_argument("--seed", type=int, default=0, help="sampling seed")
        if name == "liftings":
            p.add_argument("--trace", action="store_true", help="include anti-nef computation sequences")
        if name == "seifert":
            p.add_argument("--output", "-o", help="write the graph here instead of stdout")
    return parser


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg = build_parser().parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return exc.code
    if cfg.cap < 1:
        print("error: --cap must be >= 1", file=sys.stderr)
        return 5
    try:
        report, code = HANDLERS[cfg.command](cfg)
    except PlumbingError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    if report is not None:
        emit(report, cfg.format, cfg.decimal)
    return code


if __name__ == "__main__":
    sys.exit(main())
