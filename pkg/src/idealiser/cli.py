"""Command line front end.

All mathematical output goes to stdout and is byte-stable for a given
input; timing goes to stderr so transcripts can be diffed.  Exit codes:
0 success (for analyze: both sides decided), 2 analyze left something
undecided, 1 bad input or resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .action import Lattice, TranslationAction, complement, stabiliser
from .diophantine import pell_enumerate
from .groebner import Ideal, ResourceLimitError, ideal_quotient, is_maximal_effective
from .noether import (
    GrowthProbe,
    LatticeSubsetReport,
    Verdict,
    decide,
    growth_probe,
    integer_zeros_in_box,
    left_witness_ideal,
    s_set_box,
    t_set_box,
    tor1,
)
from .parser import ParseError
from .poly import MonomialOrder, PolyRing
from .skew import idealiser_membership, parse_skew, quotient_table

SCHEMA_VERSION = 1


# ------------------------------------------------------------- config


class InputError(ValueError):
    pass


def _load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read config: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"config is not valid JSON: {exc}")
    if not isinstance(cfg, dict):
        raise InputError("config must be a JSON object")
    return cfg


def _build_ring(cfg: dict) -> PolyRing:
    ring_cfg = cfg.get("ring", {})
    variables = tuple(ring_cfg.get("vars", ("x", "y")))
    if not variables:
        raise InputError("ring.vars must be nonempty")
    order = ring_cfg.get("order", "grevlex")
    if order == "grevlex":
        return PolyRing(variables)
    if order == "lex":
        return PolyRing(variables, MonomialOrder.lex(len(variables)))
    raise InputError(f"unknown order {order!r} (use 'lex' or 'grevlex')")


def _build_action(cfg: dict, ring: PolyRing) -> TranslationAction:
    act_cfg = cfg.get("action")
    if not act_cfg or "matrix" not in act_cfg:
        return TranslationAction.standard(ring)
    try:
        rows = [[Fraction(str(x)) for x in row] for row in act_cfg["matrix"]]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad action matrix entry: {exc}")
    return TranslationAction(ring, rows)


def _build_ideal(cfg: dict, ring: PolyRing) -> Ideal:
    ideal_cfg = cfg.get("ideal")
    if not ideal_cfg or not ideal_cfg.get("generators"):
        raise InputError("config needs ideal.generators")
    gens = [ring.parse(s) for s in ideal_cfg["generators"]]
    return Ideal(
        ring,
        gens,
        claimed_prime=bool(ideal_cfg.get("claimed_prime", False)),
        claimed_maximal=bool(ideal_cfg.get("claimed_maximal", False)),
    )


def _options(cfg: dict) -> dict:
    opts = dict(cfg.get("options", {}))
    if "pair_limit" in opts:
        os.environ["IDEALISER_PAIR_LIMIT"] = str(int(opts["pair_limit"]))
    return opts


def _parse_point(text: str, n: int) -> tuple[Fraction, ...]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise InputError(f"point needs {n} coordinates, got {len(parts)}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad point coordinate: {exc}")


def _point_ideal(ring: PolyRing, p) -> Ideal:
    gens = [ring.var(i) - ring.const(p[i]) for i in range(ring.n)]
    return Ideal(ring, gens, claimed_prime=True, claimed_maximal=True)


# ----------------------------------------------------------- rendering


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _lattice_str(L: Lattice) -> str:
    if L.rank == 0:
        return "trivial"
    return " ".join(_vec(b) for b in L.basis)


def _lattice_json(L: Lattice) -> list:
    return [list(v) for v in L.basis]


def _ideal_str(I: Ideal) -> str:
    if I.is_unit_ideal():
        return "<1>"
    if not I.gens:
        return "<0>"
    return "<" + ", ".join(str(g) for g in I.groebner_basis()) + ">"


def _report_json(rep: LatticeSubsetReport) -> dict:
    return {
        "kind": rep.kind,
        "description": rep.description,
        "box": rep.box,
        "members": [list(m) for m in rep.members],
        "cosets": [
            {"rep": list(rep_), "members": [list(m) for m in ms]}
            for rep_, ms in rep.cosets
        ],
        "stabiliser": _lattice_json(rep.stabiliser),
        "sublattice": _lattice_json(rep.sublattice),
    }


def _probe_json(p: GrowthProbe) -> dict:
    return {
        "side": p.side,
        "radii": list(p.radii),
        "counts": list(p.counts),
        "flag": p.flag,
        "target": p.target,
    }


def _emit(payload: dict, as_json: bool, human_lines) -> None:
    if as_json:
        payload = dict(payload)
        payload["version"] = SCHEMA_VERSION
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _print_report_lines(rep: LatticeSubsetReport):
    lines = [
        f"{rep.kind}-set ({rep.description})",
        f"  box: {rep.box}",
        f"  members ({len(rep.members)}): "
        + (" ".join(_vec(m) for m in rep.members) if rep.members else "none"),
        f"  coset classes: {len(rep.cosets)}",
    ]
    for rep_, ms in rep.cosets:
        lines.append(f"    class {_vec(rep_)}: " + " ".join(_vec(m) for m in ms))
    return lines


# --------------------------------------------------------- subcommands


def _cmd_analyze(args) -> int:
    cfg = _load_config(args.config)
    ring = _build_ring(cfg)
    act = _build_action(cfg, ring)
    I = _build_ideal(cfg, ring)
    opts = _options(cfg)
    box = args.box if args.box is not None else int(opts.get("box", 8))
    if args.probe_radii:
        radii = [int(r) for r in args.probe_radii.split(",")]
    else:
        radii = [int(r) for r in opts.get("probe_radii", [2, 4, 8])]

    t0 = time.perf_counter()
    verdict, sets = decide(I, act, box=box)
    K = stabiliser(I, act)
    H = complement(K)

    probes = []
    zeros = integer_zeros_in_box(I.gens, ring.n, box)
    right_target = _point_ideal(ring, zeros[0]) if zeros else I
    probes.append(growth_probe(I, right_target, act, "right", radii))
    witness = left_witness_ideal(verdict, ring)
    if witness is not None:
        left_target = witness
    elif zeros:
        left_target = _point_ideal(ring, zeros[0])
    else:
        left_target = I
    probes.append(growth_probe(I, left_target, act, "left", radii))
    elapsed = time.perf_counter() - t0
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)

    payload = {
        "verdict": {
            "right": verdict.right,
            "left": verdict.left,
            "certificates": [
                {"rule": c.rule, "payload": c.payload} for c in verdict.certificates
            ],
        },
        "stabiliser": _lattice_json(K),
        "complement": _lattice_json(H),
        "sets": [_report_json(r) for r in sets],
        "probes": [_probe_json(p) for p in probes],
    }
    lines = [
        "ideal: " + _ideal_str(I),
        "stabiliser: " + _lattice_str(K),
        "complement: " + _lattice_str(H),
        f"right noetherian: {verdict.right}",
        f"left noetherian: {verdict.left}",
    ]
    for c in verdict.certificates:
        detail = ", ".join(f"{k}={c.payload[k]}" for k in sorted(c.payload))
        lines.append(f"certificate {c.rule}: {detail}")
    for rep in sets:
        lines.extend(_print_report_lines(rep))
    for p in probes:
        lines.append(
            f"probe {p.side} vs {p.target}: radii "
            + ",".join(str(r) for r in p.radii)
            + " counts "
            + ",".join(str(c) for c in p.counts)
            + f" [{p.flag}]"
        )
    _emit(payload, args.json, lines)
    return 0 if verdict.right != "unknown" and verdict.left != "unknown" else 2


def _cmd_stab(args) -> int:
    cfg = _load_config(args.config)
    ring = _build_ring(cfg)
    act = _build_action(cfg, ring)
    I = _build_ideal(cfg, ring)
    _options(cfg)
    K = stabiliser(I, act)
    payload = {"stabiliser": _lattice_json(K), "rank": K.rank}
    _emit(payload, args.json, [f"lattice basis: {_lattice_str(K)}"])
    return 0


def _cmd_complement(args) -> int:
    cfg = _load_config(args.config)
    ring = _build_ring(cfg)
    act = _build_action(cfg, ring)
    I = _build_ideal(cfg, ring)
    _options(cfg)
    K = stabiliser(I, act)
    H = complement(K)
    payload = {
        "stabiliser": _lattice_json(K),
        "complement": _lattice_json(H),
    }
    _emit(
        payload,
        args.json,
        [
            f"stabiliser: {_lattice_str(K)}",
            f"complement: {_lattice_str(H)}",
        ],
    )
    return 0


def _cmd_quotient_table(args) -> int:
    cfg = _load_config(args.config)
    ring = _build_ring(cfg)
    act = _build_action(cfg, ring)
    I = _build_ideal(cfg, ring)
    opts = _options(cfg)
    box = args.box if args.box is not None else int(opts.get("box", 2))
    t0 = time.perf_counter()
    table = quotient_table(I, I, act, box)
    print(f"elapsed: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
    payload = {
        "box": box,
        "entries": [
            {"g": list(g), "component": _ideal_str(comp)}
            for g, comp in sorted(table.items())
        ],
    }
    lines = [f"idealiser components (I : I^g), box {box}:"]
    for g, comp in sorted(table.items()):
        lines.append(f"  g={_vec(g)}: {_ideal_str(comp)}")
    _emit(payload, args.json, lines)
    return 0


def _cmd_tor(args) -> int:
    cfg = _load_config(args.config)
    ring = _build_ring(cfg)
    _build_action(cfg, ring)
    I = _build_ideal(cfg, ring)
    _options(cfg)
    J = Ideal(ring, [ring.parse(s) for s in args.target])
    mod = tor1(I, J)
    payload = {
        "is_zero": mod.is_zero,
        "numerator": _ideal_str(mod.numerator),
        "denominator": _ideal_str(mod.denominator),
        "dimension_probe": list(mod.dimension_probe),
    }
    _emit(
        payload,
        args.json,
        [
            f"tor1 zero: {'yes' if mod.is_zero else 'no'}",
            "intersection: " + _ideal_str(mod.numerator),
            "product: " + _ideal_str(mod.denominator),
            "dimension probe: " + ",".join(str(d) for d in mod.dimension_probe),
        ],
    )
    return 0


def _sub_for(args, act: TranslationAction, I: Ideal) -> Lattice:
    if args.full:
        return Lattice.standard(act.d)
    return complement(stabiliser(I, act))


def _cmd_sset(args) -> int:
    cfg = _load_config(args.config)
    ring = _build_ring(cfg)
    act = _build_action(cfg, ring)
    I = _build_ideal(cfg, ring)
    opts = _options(cfg)
    box = args.box if args.box is not None else int(opts.get("box", 8))
    sub = _sub_for(args, act, I)
    if args.point is not None:
        target = _parse_point(args.point, ring.n)
    elif args.target:
        target = Ideal(ring, [ring.parse(s) for s in args.target], claimed_prime=True)
    else:
        raise InputError("sset needs --point or --target")
    rep = s_set_box(I, target, sub, box, act)
    _emit(_report_json(rep), args.json, _print_report_lines(rep))
    return 0


def _cmd_tset(args) -> int:
    cfg = _load_config(args.config)
    ring = _build_ring(cfg)
    act = _build_action(cfg, ring)
    I = _build_ideal(cfg, ring)
    opts = _options(cfg)
    box = args.box if args.box is not None else int(opts.get("box", 6))
    sub = _sub_for(args, act, I)
    J = Ideal(ring, [ring.parse(s) for s in args.target], claimed_prime=args.prime)
    rep = t_set_box(I, J, sub, box, act)
    _emit(_report_json(rep), args.json, _print_report_lines(rep))
    return 0


def _cmd_pell(args) -> int:
    if args.n < 2:
        raise InputError("n must be at least 2")
    try:
        sols = pell_enumerate(args.n, args.count)
    except ValueError as exc:
        raise InputError(str(exc))
    payload = {
        "n": args.n,
        "fundamental": [sols[0].x, sols[0].y],
        "solutions": [[s.x, s.y] for s in sols],
    }
    _emit(
        payload,
        args.json,
        [" ".join(f"({s.x},{s.y})" for s in sols)],
    )
    return 0


def _default_cfg_ring_action(args):
    if args.config:
        cfg = _load_config(args.config)
        ring = _build_ring(cfg)
        act = _build_action(cfg, ring)
        _options(cfg)
        return cfg, ring, act
    ring = PolyRing(("x", "y"))
    return {}, ring, TranslationAction.standard(ring)


def _cmd_skewmul(args) -> int:
    _, ring, act = _default_cfg_ring_action(args)
    a = parse_skew(args.left, act)
    b = parse_skew(args.right, act)
    prod = a * b
    payload = {"left": str(a), "right": str(b), "product": str(prod)}
    _emit(payload, args.json, [str(prod)])
    return 0


def _cmd_member(args) -> int:
    cfg = _load_config(args.config)
    ring = _build_ring(cfg)
    act = _build_action(cfg, ring)
    I = _build_ideal(cfg, ring)
    _options(cfg)
    elt = parse_skew(args.element, act)
    ok = idealiser_membership(elt, I, act)
    payload = {"element": str(elt), "member": ok}
    _emit(payload, args.json, [f"member: {'yes' if ok else 'no'}"])
    return 0


def _cmd_probe(args) -> int:
    cfg = _load_config(args.config)
    ring = _build_ring(cfg)
    act = _build_action(cfg, ring)
    I = _build_ideal(cfg, ring)
    opts = _options(cfg)
    if args.radii:
        radii = [int(r) for r in args.radii.split(",")]
    else:
        radii = [int(r) for r in opts.get("probe_radii", [2, 4, 8])]
    if args.target:
        J = Ideal(ring, [ring.parse(s) for s in args.target], claimed_prime=args.prime)
    elif args.point is not None:
        J = _point_ideal(ring, _parse_point(args.point, ring.n))
    else:
        zeros = integer_zeros_in_box(I.gens, ring.n, max(radii))
        J = _point_ideal(ring, zeros[0]) if zeros else I
    sides = ["right", "left"] if args.side == "both" else [args.side]
    probes = [growth_probe(I, J, act, side, radii) for side in sides]
    payload = {"probes": [_probe_json(p) for p in probes]}
    lines = []
    for p in probes:
        lines.append(
            f"probe {p.side} vs {p.target}: radii "
            + ",".join(str(r) for r in p.radii)
            + " counts "
            + ",".join(str(c) for c in p.counts)
            + f" [{p.flag}]"
        )
    _emit(payload, args.json, lines)
    return 0


# -------------------------------------------------------------- parser


def _build_argparser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="idealiser",
        description="Idealiser subrings of polynomial skew group rings: "
        "stabilisers, graded components, and noetherianity verdicts.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, needs_config=True):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        if needs_config:
            p.add_argument("-c", "--config", required=True, help="JSON config file")
        else:
            p.add_argument("-c", "--config", help="JSON config file")
        p.add_argument("--json", action="store_true", help="machine readable output")
        return p

    p = add("analyze", _cmd_analyze, "decide noetherianity and report evidence")
    p.add_argument("--box", type=int, help="evidence box radius")
    p.add_argument("--probe-radii", help="comma separated probe radii")

    add("stab", _cmd_stab, "stabiliser lattice of the ideal")
    add("complement", _cmd_complement, "stabiliser and a complement")

    p = add("quotient-table", _cmd_quotient_table, "graded components (I : I^g)")
    p.add_argument("--box", type=int, help="box radius (default 2)")

    p = add("tor", _cmd_tor, "Tor_1(C/I, C/J) vanishing and dimensions")
    p.add_argument("target", nargs="+", help="generators of J")

    p = add("sset", _cmd_sset, "S-set of the ideal in a box")
    p.add_argument("--point", help="target point, comma separated")
    p.add_argument("--target", nargs="+", help="generators of a target prime")
    p.add_argument("--box", type=int)
    p.add_argument("--full", action="store_true", help="use the full lattice")

    p = add("tset", _cmd_tset, "T-set of the ideal against J in a box")
    p.add_argument("target", nargs="+", help="generators of J")
    p.add_argument("--box", type=int)
    p.add_argument("--full", action="store_true", help="use the full lattice")
    p.add_argument("--prime", action="store_true", help="J is known prime")

    p = add("pell", _cmd_pell, "fundamental solution of x^2 - n*y^2 = 1", needs_config=False)
    p.add_argument("n", type=int)
    p.add_argument("--count", type=int, default=5)

    p = add("skewmul", _cmd_skewmul, "multiply two skew group ring elements", needs_config=False)
    p.add_argument("left")
    p.add_argument("right")

    p = add("member", _cmd_member, "does a skew element lie in the idealiser")
    p.add_argument("element")

    p = add("probe", _cmd_probe, "growth of nonzero components in boxes")
    p.add_argument("--side", choices=("right", "left", "both"), default="both")
    p.add_argument("--radii", help="comma separated radii")
    p.add_argument("--target", nargs="+", help="generators of the target ideal")
    p.add_argument("--point", help="target point, comma separated")
    p.add_argument("--prime", action="store_true", help="target is known prime")

    return ap


def main(argv=None) -> int:
    ap = _build_argparser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
