"""Command-line interface.

Exit codes: 0 feasible / verified, 1 infeasible / violated, 2 usage,
input or guard error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from itertools import combinations
from typing import Any

from . import bisets, characterize, oracle
from .bigraph import (
    bigraph_to_digraph,
    check_k_elementary_degrees,
    digraph_to_bigraph,
    is_k_elementary,
    recheck_bipartite_certificate,
)
from .characterize import AugmentInstance, check_instance, recheck_certificate
from .connectivity import (
    edge_connectivity,
    is_strong,
    is_strong_masks,
    node_connectivity,
)
from .construct import construct_witness
from .digraph import Digraph, full_mask, members
from .errors import DDFError, InputError, InvariantViolation
from .grids import PRESETS, oracle_grid
from .jsonio import SCHEMA, dumps, load_json, parse_bigraph, parse_instance
from .realize import (
    greedy_realize,
    loop_reduce,
    loopless_condition,
    ore_realize,
    simple_realizable,
    simple_realize,
)
from .verdict import FeasibilityVerdict

CHECKERS = (
    "simple",
    "strong",
    "cover",
    "edge+1",
    "edge-multi",
    "node-simple",
    "node-multi",
    "strong-augment",
    "kseq",
    "kelem",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ddf", description="Degree-specified digraph realization and augmentation.")
    parser.add_argument("--cap", type=int, help="override enumeration guards (node count)")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="run a characterization checker on an instance")
    p.add_argument("instance")
    p.add_argument("--theorem", choices=CHECKERS, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--loopless", action="store_true", help="forbid loops (edge-multi, node-multi)")
    p.add_argument("--method", choices=("auto", "prefix", "exhaustive"), default="auto")
    p.add_argument("--recheck-certificate", metavar="FILE", help="re-evaluate a certificate from a previous check")

    p = sub.add_parser("realize", help="realize a degree spec")
    p.add_argument("instance")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--simple", action="store_const", const="simple", dest="kind")
    g.add_argument("--loopless", action="store_const", const="loopless", dest="kind")
    g.add_argument("--any", action="store_const", const="any", dest="kind")
    g.add_argument("--host", metavar="FILE", help="find a subgraph of the digraph in FILE")

    for verb, text in (("augment", "decide an augmentation instance"), ("witness", "construct an augmenting digraph")):
        p = sub.add_parser(verb, help=text)
        p.add_argument("instance")
        p.add_argument("--k", type=int)
        p.add_argument("--mode", choices=characterize.MODES, default="node")
        p.add_argument("--simplicity", choices=characterize.SIMPLICITIES, default="augmented_simple")
        if verb == "witness":
            p.add_argument("--budget", type=int, default=7)

    p = sub.add_parser("verify", help="verify connectivity, simplicity and degrees of a digraph")
    p.add_argument("instance")
    p.add_argument("--k", type=int)
    p.add_argument("--mode", choices=("node", "edge", "strong"), default="node")

    p = sub.add_parser("oracle", help="brute-force ground truth")
    p.add_argument("--grid", choices=sorted(PRESETS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, help="instances for random presets")
    p.add_argument("--instance", metavar="FILE", help="decide a single instance by enumeration")
    p.add_argument("--mode", choices=oracle.MODES, default="node")
    p.add_argument("--simplicity", choices=oracle.SIMPLICITIES, default="simple_D0_plus_D")
    p.add_argument("--k", type=int)

    p = sub.add_parser("bigraph", help="bipartite operations")
    p.add_argument("instance")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-digraph", action="store_true")
    g.add_argument("--from-digraph", action="store_true")
    g.add_argument("--check-k-elementary", action="store_true")
    g.add_argument("--realize-degrees", action="store_true")
    p.add_argument("--k", type=int)
    return parser


def _emit(args, result: dict, code: int, instance: dict | None = None) -> int:
    config = {k: v for k, v in sorted(vars(args).items()) if v is not None}
    payload: dict[str, Any] = {"schema": SCHEMA, "command": args.verb, "config": config, "result": result}
    if instance is not None:
        payload["instance"] = instance
    print(dumps(payload))
    return code


def _verdict_code(verdict: FeasibilityVerdict) -> int:
    return 0 if verdict.feasible else 1


# -- verbs --------------------------------------------------------------------


def _cmd_check(args) -> int:
    data = load_json(args.instance)
    cap = args.cap
    if args.theorem == "kelem":
        inst, k = parse_bigraph(data)
        k = args.k if args.k is not None else k
        if k is None:
            raise InputError("kelem needs 'k'")
        if args.recheck_certificate:
            verdict = _load_verdict(args.recheck_certificate)
            return _recheck(args, verdict, lambda: recheck_bipartite_certificate(verdict, inst.m_S, inst.m_T))
        verdict = check_k_elementary_degrees(inst.m_S, inst.m_T, k)
        return _emit(args, verdict.to_json(), _verdict_code(verdict))

    inst = parse_instance(data)
    spec = inst.require_spec()
    k = args.k if args.k is not None else inst.k
    if args.recheck_certificate:
        verdict = _load_verdict(args.recheck_certificate)
        if verdict.feasible:
            raise InputError("the certificate file holds a feasible verdict; nothing to recheck")
        return _recheck(args, verdict, lambda: recheck_certificate(verdict, spec, inst.D0, k, inst.f0, inst.family))

    family_cap = characterize.FAMILY_CHECK_CAP if cap is None else cap
    t = args.theorem
    if t == "simple":
        verdict = simple_realizable(spec)
    elif t == "strong":
        verdict = characterize.check_strong_simple(spec, args.method)
    elif t == "cover":
        if inst.family is None:
            raise InputError("cover needs 'family'")
        verdict = characterize.check_cover_crossing_family(spec, inst.family)
    elif t == "edge+1":
        verdict = characterize.check_edge_augment_plus_one(inst.D0, spec, inst.require_k(k))
    elif t == "edge-multi":
        verdict = characterize.check_edge_augment_multigraph(inst.D0, spec, inst.require_k(k), args.loopless)
    elif t == "node-simple":
        simplicity = "augmenting_simple" if inst.f0 is not None else "augmented_simple"
        a = AugmentInstance(inst.D0, spec, inst.require_k(k), simplicity=simplicity, F0=inst.f0)
        verdict = characterize.check_node_augment_simple(a, family_cap)
    elif t == "node-multi":
        a = AugmentInstance(inst.D0, spec, inst.require_k(k), simplicity="loopless" if args.loopless else "any")
        verdict = characterize.check_node_augment_multigraph(a, family_cap)
    elif t == "strong-augment":
        verdict = characterize.check_strong_augment_simple(inst.D0, spec)
    else:
        verdict = characterize.check_k_connected_degree_sequence(spec, inst.require_k(k))
    return _emit(args, verdict.to_json(), _verdict_code(verdict))


def _recheck(args, verdict: FeasibilityVerdict, run) -> int:
    """Exit 0 when the certificate re-evaluates as a genuine violation, 1 when
    it does not."""
    try:
        lhs, rhs = run()
    except InvariantViolation as exc:
        return _emit(args, {"recheck": "rejected", "condition": verdict.condition, "reason": str(exc)}, 1)
    return _emit(args, {"recheck": "violation confirmed", "condition": verdict.condition, "lhs": lhs, "rhs": rhs}, 0)


def _load_verdict(path: str) -> FeasibilityVerdict:
    data = load_json(path)
    if isinstance(data, dict) and "result" in data:
        data = data["result"]
    if not isinstance(data, dict) or "feasible" not in data:
        raise InputError(f"{path}: no verdict found")
    return FeasibilityVerdict.from_json(data)


def _cmd_realize(args) -> int:
    inst = parse_instance(load_json(args.instance))
    spec = inst.require_spec()
    if args.host:
        host = parse_instance(load_json(args.host)).D0
        result = ore_realize(host, spec)
        return _emit(args, result.to_json(), 0 if result.feasible else 1)
    kind = args.kind or "simple"
    if kind == "simple":
        result = simple_realize(spec)
        return _emit(args, result.to_json(), 0 if result.feasible else 1)
    if kind == "loopless":
        verdict = loopless_condition(spec)
        if not verdict:
            return _emit(args, verdict.to_json(), 1)
        g = loop_reduce(greedy_realize(spec))
    else:
        g = greedy_realize(spec)
    return _emit(args, {"feasible": True, "arcs": g.to_json()}, 0)


def _augment_instance(args) -> tuple[AugmentInstance, Any]:
    inst = parse_instance(load_json(args.instance))
    spec = inst.require_spec()
    k = inst.require_k(args.k)
    simplicity = args.simplicity
    if inst.f0 is not None and simplicity == "augmented_simple":
        simplicity = "augmenting_simple"
    return AugmentInstance(inst.D0, spec, k, args.mode, simplicity, F0=inst.f0), inst


def _cmd_augment(args) -> int:
    a, _ = _augment_instance(args)
    cap = characterize.FAMILY_CHECK_CAP if args.cap is None else args.cap
    verdict = check_instance(a, cap)
    return _emit(args, verdict.to_json(), _verdict_code(verdict))


def _cmd_witness(args) -> int:
    a, _ = _augment_instance(args)
    budget = args.budget if args.cap is None else args.cap
    result = construct_witness(a, budget=budget)
    if not result.feasible:
        return _emit(args, result.to_json(), 1)
    D = result.digraph
    out = result.to_json()
    out["augmented_arcs"] = (a.D0 + D).to_json()
    instance = {
        "n": a.D0.n,
        "arcs": a.D0.to_json(),
        "augmenting_arcs": D.to_json(),
        "m_o": list(a.spec.m_o),
        "m_i": list(a.spec.m_i),
        "k": a.k,
    }
    return _emit(args, out, 0, instance)


def _node_separator(g: Digraph, k: int) -> list[int] | None:
    """A smallest node set of size < k whose removal leaves a non-strong digraph."""
    outs = [g.out_neighbors(u) for u in range(g.n)]
    ins = [g.in_neighbors(u) for u in range(g.n)]
    V = full_mask(g.n)
    for size in range(min(k, g.n)):
        for removed in combinations(range(g.n), size):
            alive = V
            for v in removed:
                alive &= ~(1 << v)
            if not is_strong_masks(outs, ins, alive):
                return list(removed)
    return None


def _cmd_verify(args) -> int:
    inst = parse_instance(load_json(args.instance))
    k = inst.require_k(args.k) if args.mode != "strong" else 1
    total = inst.D0 if inst.augmenting is None else inst.D0 + inst.augmenting
    fitted = inst.augmenting if inst.augmenting is not None else inst.D0
    n = total.n
    report: dict[str, Any] = {
        "simple": total.is_simple,
        "k_node": node_connectivity(total.collapse()),
        "k_edge": edge_connectivity(total) if n >= 2 else 0,
        "strong": is_strong(total),
        "witnesses": {},
    }
    if inst.spec is not None:
        report["fits_spec"] = inst.spec.fits(fitted)
    if args.mode == "node":
        ok = report["k_node"] >= k
        if not ok:
            report["witnesses"]["separator"] = _node_separator(total.collapse(), k)
    elif args.mode == "edge":
        ok = n < 2 or report["k_edge"] >= k
        if not ok:
            X = min(range(1, total.V), key=lambda S: (total.in_degree_set(S), S))
            report["witnesses"]["cut"] = {"X": members(X), "in_degree": total.in_degree_set(X)}
    else:
        ok = report["strong"]
        if not ok:
            report["witnesses"]["separator"] = []
    if inst.augmenting is not None and inst.augmenting.arcs and not inst.augmenting.is_simple:
        report["augmenting_simple"] = False
    ok = ok and report.get("fits_spec", True)
    report["verified"] = ok
    return _emit(args, report, 0 if ok else 1)


def _cmd_oracle(args) -> int:
    if args.grid:
        report = oracle_grid(args.grid, args.seed, args.count)
        return _emit(args, report.to_json(), 0 if report.ok else 1)
    if not args.instance:
        raise InputError("give --grid PRESET or --instance FILE")
    inst = parse_instance(load_json(args.instance))
    spec = inst.require_spec()
    k = args.k if args.k is not None else (inst.k if inst.k is not None else 1)
    q = oracle.OracleQuery(
        spec,
        inst.D0,
        k,
        args.mode,
        args.simplicity,
        avoid=tuple(inst.f0 or ()),
        family=tuple(inst.family or ()),
    )
    exists, witness = oracle.oracle_exists(q, args.cap)
    result: dict[str, Any] = {"feasible": exists}
    if witness is not None:
        result["arcs"] = witness.to_json()
    return _emit(args, result, 0 if exists else 1)


def _cmd_bigraph(args) -> int:
    data = load_json(args.instance)
    if args.from_digraph:
        g = parse_instance(data).D0
        inst, _ = digraph_to_bigraph(g)
        return _emit(args, inst.to_json(), 0)
    inst, k = parse_bigraph(data)
    k = args.k if args.k is not None else k
    if args.to_digraph:
        if inst.matching is None:
            raise InputError("--to-digraph needs 'matching'")
        g = bigraph_to_digraph(inst, inst.matching)
        return _emit(args, {"n": g.n, "arcs": g.to_json()}, 0)
    if k is None:
        raise InputError("this operation needs 'k'")
    if args.check_k_elementary:
        ok = is_k_elementary(inst, k)
        return _emit(args, {"k_elementary": ok}, 0 if ok else 1)
    verdict = check_k_elementary_degrees(inst.m_S, inst.m_T, k)
    return _emit(args, verdict.to_json(), _verdict_code(verdict))


COMMANDS = {
    "check": _cmd_check,
    "realize": _cmd_realize,
    "augment": _cmd_augment,
    "witness": _cmd_witness,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "bigraph": _cmd_bigraph,
}


def _apply_cap(cap: int | None) -> None:
    if cap is None:
        return
    print(f"warning: --cap {cap} overrides enumeration guards; runs may be very slow", file=sys.stderr)
    bisets.FAMILY_SEARCH_CAP = max(bisets.FAMILY_SEARCH_CAP, cap)
    characterize.PAIR_SCAN_CAP = max(characterize.PAIR_SCAN_CAP, cap)
    characterize.DISJOINT_SCAN_CAP = max(characterize.DISJOINT_SCAN_CAP, cap)
    oracle.SIMPLE_CAP = max(oracle.SIMPLE_CAP, cap)
    oracle.MULTI_CAP = max(oracle.MULTI_CAP, cap)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _apply_cap(args.cap)
    try:
        return COMMANDS[args.verb](args)
    except InvariantViolation as exc:
        print(f"ddf: internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except (DDFError, ValueError, OSError) as exc:
        print(f"ddf: error: {exc}", file=sys.stderr)
        print(dumps({"schema": SCHEMA, "command": args.verb, "error": str(exc)}))
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
