"""Command-line front end.

Exit codes: 0 on success or a passing audit, 1 on audit violations, 2 on
usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import localization as loc
from . import sections as sec
from .audit import audit_oracle_vs_fixture, audit_sphere
from .errors import CellBudgetExceeded, DomainError, InvalidDescriptor
from .manifold import CATALOG_SAMPLES, resolve
from .oracle import DEFAULT_CELL_BUDGET, config2_homology, load_complex
from .plocal import Locale
from .stability import rational_stability, stable_range, torsion_stability


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(args, obj, text: str):
    if args.json:
        print(json.dumps(obj, separators=(",", ":"), ensure_ascii=False))
    else:
        print(text)


def _frac(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {s!r}") from None


def _primes(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad prime list {s!r}") from None


def _verdict_text(v) -> str:
    detail = v.conditions if v.conditions else v.reasons
    return f"{v.outcome.value} [{', '.join(detail)}] (scanning range i <= {v.range})"


# -- handlers ----------------------------------------------------------------

def cmd_range(args):
    r = stable_range(args.k)
    _emit(args, {"k": args.k, "range": r}, str(r))


def cmd_rational(args):
    v = rational_stability(resolve(args.manifold), args.k, args.j, args.i)
    _emit(args, v.to_dict(), _verdict_text(v))


def cmd_torsion(args):
    v = torsion_stability(resolve(args.manifold), args.k, args.j, args.i, args.p)
    _emit(args, v.to_dict(), _verdict_text(v))


def cmd_sections(args):
    op = args.op
    if op == "intersection":
        x = sec.HnClass(int(args.b1), _frac(args.f1))
        y = sec.HnClass(int(args.b2), _frac(args.f2))
        r = sec.intersection(x, y)
    elif op == "zero-section":
        r = sec.zero_section_coefficient(args.chi)
    elif op == "section-to-map":
        r = sec.section_to_map_degree(_frac(args.k), args.chi)
    elif op == "bundle-shift":
        r = sec.bundle_shift(_frac(args.k), _frac(args.d), args.chi)
    elif op == "map-equivalent":
        r = sec.map_components_equivalent(_frac(args.k), _frac(args.j))
    else:
        r = sec.section_components_equivalent(resolve(args.manifold), args.k, args.j, Locale.parse(args.locale))
    value = r if isinstance(r, bool) else str(r)
    _emit(args, {"op": op, "value": value}, str(value).lower() if isinstance(r, bool) else str(r))


def cmd_localization(args):
    op = args.op
    if op == "mapping-space":
        s = loc.mapping_space_type(args.n, _frac(args.d))
        _emit(args, s.to_dict(), f"{s} (connectivity {loc.connectivity_to_json(s.connectivity)})")
    elif op == "pi-sphere":
        g = loc.pi_sphere_local(args.n, args.i, args.p)
        _emit(args, {"op": op, "value": str(g)}, str(g))
    elif op == "fiber-connectivity":
        c = loc.fiber_connectivity(args.kind, args.n, Locale.parse(args.locale), _frac(args.degree))
        c = loc.connectivity_to_json(c)
        _emit(args, {"op": op, "value": c}, str(c))
    elif op == "obstructions":
        conn = loc.CONTRACTIBLE if args.conn == "contractible" else int(args.conn)
        r = loc.obstructions_vanish(resolve(args.manifold), conn)
        _emit(args, {"op": op, "value": r}, str(r).lower())
    else:
        g = loc.connecting_map_cokernel(args.p)
        _emit(args, {"op": op, "value": str(g)}, str(g))


def cmd_oracle(args):
    X = load_complex(args.complex)
    res = config2_homology(X, ordered=args.ordered, subdivisions=args.subdivide, cell_budget=args.cell_budget)
    lines = [f"H_{i} = {g}" for i, g in enumerate(res.groups)]
    lines.append(f"cells per degree: {res.cell_counts}")
    if res.previous_groups is not None:
        lines.append("subdivision check: " + ("consistent" if res.consistent else "MISMATCH with previous level"))
    _emit(args, {"complex": args.complex, **res.to_dict()}, "\n".join(lines))


def cmd_audit(args):
    report = audit_sphere(args.p, args.kmax)
    if not args.no_oracle:
        report = report.merge(audit_oracle_vs_fixture())
    lines = [
        f"primes {report.primes}, k <= {report.k_max}: {report.checked_pairs} pairs checked",
        f"violations: {len(report.violations)}",
    ]
    for r in report.violations:
        lines.append(f"  VIOLATION p={r.p} k={r.k} j={r.j} {list(r.conditions)}: {r.group_k} vs {r.group_j}")
    lines.append(f"non-stabilization witnesses: {len(report.witnesses)}")
    for r in report.witnesses[: args.show_witnesses]:
        lines.append(f"  p={r.p} k={r.k} j={r.j}: {r.group_k} vs {r.group_j}")
    for c in report.oracle_comparisons:
        kind = "ordered" if c.ordered else "unordered"
        lines.append(
            f"oracle {c.complex} ({kind}): {'pass' if c.passed else 'FAIL'} "
            f"computed ({', '.join(c.computed)}) expected ({', '.join(c.expected)})"
        )
    lines.append("PASS" if report.passed else "FAIL")
    _emit(args, report.to_dict(), "\n".join(lines))
    return 0 if report.passed else 1


def cmd_catalog(args):
    if args.name:
        m = resolve(args.name)
        d = m.to_dict()
        _emit(args, d, "\n".join(f"{k}: {v}" for k, v in d.items()))
        return
    entries = [resolve(n).to_dict() for n in CATALOG_SAMPLES]
    text = "\n".join(
        f"{e['name']:<34} dim {e['dim']}  chi {e['euler']:>3}  "
        f"{'orientable' if e['orientable'] else 'non-orientable':<14} "
        f"{'parallelizable' if e['parallelizable'] else ''}"
        for e in entries
    )
    _emit(args, entries, text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = _Parser(prog="confstab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("range", parents=[common], help="scanning range floor(k/2)")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_range)

    s = sub.add_parser("rational", parents=[common], help="rational stability verdict")
    for name in ("manifold", "k", "j", "i"):
        s.add_argument(name, type=str if name == "manifold" else int)
    s.set_defaults(func=cmd_rational)

    s = sub.add_parser("torsion", parents=[common], help="p-torsion stability verdict")
    for name in ("manifold", "k", "j", "i", "p"):
        s.add_argument(name, type=str if name == "manifold" else int)
    s.set_defaults(func=cmd_torsion)

    s = sub.add_parser("sections", help="section-space degree algebra")
    ops = s.add_subparsers(dest="op", required=True, parser_class=_Parser)
    o = ops.add_parser("intersection", parents=[common], help="(b1 B + f1 F) . (b2 B + f2 F)")
    for a in ("b1", "f1", "b2", "f2"):
        o.add_argument(a)
    o = ops.add_parser("zero-section", parents=[common], help="F-coefficient chi/2 of the zero section")
    o.add_argument("chi", type=int)
    o = ops.add_parser("section-to-map", parents=[common], help="map degree k - chi/2")
    o.add_argument("k")
    o.add_argument("chi", type=int)
    o = ops.add_parser("bundle-shift", parents=[common], help="d*k + (1-d)*chi/2")
    o.add_argument("k")
    o.add_argument("d")
    o.add_argument("chi", type=int)
    o = ops.add_parser("map-equivalent", parents=[common])
    o.add_argument("k")
    o.add_argument("j")
    o = ops.add_parser("section-equivalent", parents=[common])
    o.add_argument("manifold")
    o.add_argument("k", type=int)
    o.add_argument("j", type=int)
    o.add_argument("locale", help="rational, or p-local(P) / P")
    s.set_defaults(func=cmd_sections)

    s = sub.add_parser("localization", help="connectivity tables")
    ops = s.add_subparsers(dest="op", required=True, parser_class=_Parser)
    o = ops.add_parser("mapping-space", parents=[common])
    o.add_argument("n", type=int)
    o.add_argument("d")
    o = ops.add_parser("pi-sphere", parents=[common])
    o.add_argument("n", type=int)
    o.add_argument("i", type=int)
    o.add_argument("p", type=int)
    o = ops.add_parser("fiber-connectivity", parents=[common])
    o.add_argument("kind", choices=[loc.LOOPS_DEG1, loc.SELFMAPS])
    o.add_argument("n", type=int)
    o.add_argument("locale")
    o.add_argument("--degree", default="1")
    o = ops.add_parser("obstructions", parents=[common])
    o.add_argument("manifold")
    o.add_argument("conn", help="fiber connectivity, an integer or 'contractible'")
    o = ops.add_parser("connecting-map", parents=[common])
    o.add_argument("p", type=int)
    s.set_defaults(func=cmd_localization)

    s = sub.add_parser("oracle", parents=[common], help="homology of C_2 via deleted products")
    s.add_argument("complex", help="built-in name or triangulation JSON path")
    s.add_argument("--ordered", action="store_true")
    s.add_argument("--subdivide", type=int, default=0, metavar="S")
    s.add_argument("--cell-budget", type=int, default=DEFAULT_CELL_BUDGET)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("audit", parents=[common], help="audit torsion verdicts on S^2")
    s.add_argument("--p", type=_primes, default=[2, 3, 5], help="comma-separated primes")
    s.add_argument("--kmax", type=int, default=100)
    s.add_argument("--no-oracle", action="store_true", help="skip the deleted-product comparison")
    s.add_argument("--show-witnesses", type=int, default=5, metavar="N")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("catalog", parents=[common], help="list catalog manifolds or show one")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args) or 0
    except UsageError as e:
        print(e, file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except (DomainError, InvalidDescriptor, CellBudgetExceeded, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
