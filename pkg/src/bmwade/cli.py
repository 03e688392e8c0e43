"""Command-line front end.

Subcommands mirror the library layers: ``roots`` (root system data),
``reduce`` (word rewriting), ``tcoeff`` and ``hbeta`` (coefficient algebra),
``matrices`` (representation matrices, optionally through the classical
character), ``verify`` (relation suites) and ``dims`` (dimension formulas).

Exit codes: 0 on success or all checks passing, 1 when a verification check
fails, 2 on usage errors.  Output is deterministic: identical invocations
produce identical bytes, and JSON output re-serializes to itself.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .hecke import HeckeElement
from .lkrep import build_lk, classical_lk, theta_character_at
from .rootsys import DynkinType, build_type
from .scalar import Scalar
from .verify import SUITE_NAMES, UnsupportedModeError, a2_dimension_check, dims_report, run_suite
from .wordalg import parse_word, reduce_word, word_to_text


class UsageError(ValueError):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _parse_type(label: str):
    try:
        return build_type(DynkinType.parse(label).label)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_root(rs, text: str):
    try:
        coeffs = tuple(int(c) for c in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse root {text!r}: expected comma-separated integers") from exc
    if len(coeffs) != rs.n:
        raise UsageError(f"root needs {rs.n} coefficients for {rs.dtype.label}")
    if not rs.is_positive_root(coeffs):
        raise UsageError(f"{coeffs} is not a positive root of {rs.dtype.label}")
    return coeffs


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse rational {text!r}") from exc


def _tcache_path(cache_dir: str, label: str) -> Path:
    return Path(cache_dir) / f"{label}.tcoeff.json"


def _load_tcache(lk, cache_dir: str | None):
    if not cache_dir:
        return
    path = _tcache_path(cache_dir, lk.rs.dtype.label)
    if not path.exists():
        return
    data = json.loads(path.read_text())
    for key, helem in data.items():
        node_text, root_text = key.split("|")
        beta = tuple(int(c) for c in root_text.split(","))
        lk._t_memo[(int(node_text), beta)] = HeckeElement.from_json_dict(
            lk.rs, lk.c_set, helem)


def _save_tcache(lk, cache_dir: str | None):
    if not cache_dir:
        return
    path = _tcache_path(cache_dir, lk.rs.dtype.label)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = {
        f"{i}|{','.join(str(c) for c in beta)}": h.to_json_dict()
        for (i, beta), h in sorted(lk._t_memo.items())
    }
    path.write_text(_dumps(data) + "\n")


def _cmd_roots(args) -> int:
    rs = _parse_type(args.type)
    if args.json:
        print(_dumps(rs.to_json_dict()))
        return 0
    for beta in rs.positive_roots:
        print(" ".join(str(c) for c in beta))
    print("highest:", " ".join(str(c) for c in rs.highest_root))
    print("C:", " ".join(str(j) for j in rs.c_nodes) if rs.c_nodes else "(empty)")
    return 0


def _cmd_reduce(args) -> int:
    rs = _parse_type(args.type)
    try:
        word = parse_word(rs, args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    comb = reduce_word(rs, word)
    items = sorted(comb.items(), key=lambda kv: (len(kv[0]), kv[0]))
    if args.json:
        print(_dumps({
            "combination": [
                {"word": word_to_text(w).split(), "coeff": c.to_json_dict()}
                for w, c in items
            ]
        }))
        return 0
    for w, c in items:
        print(f"({c!r}) * {word_to_text(w) if w else '1'}")
    return 0


def _cmd_tcoeff(args) -> int:
    lk = build_lk(_parse_type(args.type).dtype.label)
    beta = _parse_root(lk.rs, args.root)
    if args.node not in lk.rs.nodes:
        raise UsageError(f"node {args.node} out of range")
    _load_tcache(lk, args.cache_dir)
    t = lk.t_coeff(args.node, beta)
    _save_tcache(lk, args.cache_dir)
    print(_dumps(t.to_json_dict()) if args.json else repr(t))
    return 0


def _cmd_hbeta(args) -> int:
    lk = build_lk(_parse_type(args.type).dtype.label)
    beta = _parse_root(lk.rs, args.root)
    if args.node not in lk.rs.nodes:
        raise UsageError(f"node {args.node} out of range")
    try:
        h = lk.h_node(beta, args.node)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(_dumps({"node": h}) if args.json else f"z{h}")
    return 0


def _cmd_matrices(args) -> int:
    lk = build_lk(_parse_type(args.type).dtype.label)
    _load_tcache(lk, args.cache_dir)
    if args.theta is None:
        payload = {
            "type": lk.rs.dtype.label,
            "size": lk.size,
            "sigma": {
                str(i): lk.sigma(i).to_json_columns(
                    lambda h: (h or HeckeElement.zero(lk.rs, lk.c_set)).to_json_dict())
                for i in lk.rs.nodes
            },
            "e": {
                str(i): lk.e_matrix(i).to_json_columns(
                    lambda h: (h or HeckeElement.zero(lk.rs, lk.c_set)).to_json_dict())
                for i in lk.rs.nodes
            },
        }
    else:
        if args.theta != "lk":
            raise UsageError("only the classical character --theta lk is built in")
        theta = theta_character_at(lk.rs, _parse_fraction(args.r)) if args.r \
            else classical_lk(lk.rs)
        gammas = lk.gamma_theta(theta)
        payload = {
            "type": lk.rs.dtype.label,
            "size": lk.size * theta.dimension,
            "gamma": {
                str(i): g.to_json_columns(lambda s: (s or Scalar.zero()).to_json_dict())
                for i, g in zip(lk.rs.nodes, gammas)
            },
        }
    _save_tcache(lk, args.cache_dir)
    text = _dumps(payload)
    if args.json and args.json is not True:
        Path(args.json).write_text(text + "\n")
    else:
        print(text)
    return 0


def _parse_specialize(text: str) -> tuple[Fraction, Fraction]:
    parts = dict(p.split("=", 1) for p in text.split(",") if "=" in p)
    if set(parts) != {"l", "r"}:
        raise UsageError("expected --specialize l=<rat>,r=<rat>")
    return _parse_fraction(parts["l"]), _parse_fraction(parts["r"])


def _cmd_verify(args) -> int:
    rs = _parse_type(args.type)
    if args.suite not in SUITE_NAMES + ("all", "a2dim"):
        raise UsageError(f"unknown suite {args.suite!r}")
    _load_tcache(build_lk(rs.dtype.label), args.cache_dir)
    try:
        if args.suite == "a2dim":
            if rs.dtype.label != "A2":
                raise UsageError("the a2dim suite runs on type A2 only")
            report = a2_dimension_check()
        elif args.specialize:
            l0, r0 = _parse_specialize(args.specialize)
            report = run_suite(args.suite, rs.dtype.label, "specialized", l0, r0)
        else:
            report = run_suite(args.suite, rs.dtype.label, "generic")
    except UnsupportedModeError as exc:
        raise UsageError(str(exc)) from exc
    _save_tcache(build_lk(rs.dtype.label), args.cache_dir)
    if args.json:
        print(_dumps(report.to_json_dict()))
    else:
        print("\n".join(report.text_lines()))
    return 0 if report.passed else 1


def _cmd_dims(args) -> int:
    rs = _parse_type(args.type)
    report = dims_report(rs.dtype.label)
    if args.json:
        print(_dumps(report))
        return 0
    for key in ("type", "phi_plus", "c_nodes", "w_c_order", "hecke_dim", "i1_mod_i2_dim"):
        print(f"{key}: {report[key]}")
    if report["total_dim"] is not None:
        tag = " (conjectural)" if report["total_conjectural"] else ""
        print(f"total_dim: {report['total_dim']}{tag}")
    if report["layers"]:
        for layer in report["layers"]:
            print(f"  layer cocliques={layer['cocliques']} orbit={layer['orbit']} dim={layer['dim']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bmwade",
        description="Exact BMW algebra and Lawrence-Krammer computations for ADE types.",
    )
    parser.add_argument("--cache-dir", default=None, help="directory for memoized T-coefficients")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", help="positive roots, highest root, and the node set C")
    p.add_argument("--type", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_roots)

    p = sub.add_parser("reduce", help="rewrite a word over g<i>/G<i>/e<i>")
    p.add_argument("--type", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("tcoeff", help="the coefficient T_{i,beta}")
    p.add_argument("--type", required=True)
    p.add_argument("--node", type=int, required=True)
    p.add_argument("--root", required=True, help="comma-separated coefficients")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_tcoeff)

    p = sub.add_parser("hbeta", help="the node with h_{beta,i} = z_j")
    p.add_argument("--type", required=True)
    p.add_argument("--root", required=True)
    p.add_argument("--node", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_hbeta)

    p = sub.add_parser("matrices", help="representation matrices, generic or through a character")
    p.add_argument("--type", required=True)
    p.add_argument("--theta", choices=["lk"], default=None)
    p.add_argument("--r", default=None, help="rational value for r (with --theta lk)")
    p.add_argument("--json", nargs="?", const=True, default=True,
                   metavar="PATH", help="write JSON to PATH instead of stdout")
    p.set_defaults(fn=_cmd_matrices)

    p = sub.add_parser("verify", help="run a relation suite")
    p.add_argument("--type", required=True)
    p.add_argument("--suite", required=True)
    p.add_argument("--specialize", default=None, help="l=<rat>,r=<rat>")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("dims", help="dimension formulas")
    p.add_argument("--type", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_dims)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"hint: see `bmwade {args.command} --help`", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
