"""Command-line surface: weights, operator application, crystal graphs,
blocks, the Hecke workbench, and the verification suites.

Output is deterministic byte-for-byte for identical invocations: fixed term
and node orders, no timestamps.  Exit codes: 0 success, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import comb

from . import _linalg, fock_space, hecke_desk, structure_analysis
from .crystal import BoxOrder, build_graph
from .cyclotomic import mat_mul_cyc
from .multipartition import (
    Multicharge,
    enumerate_multipartitions,
    parse_multipartition,
)
from .structure_analysis import AxiomReport
from .weight_lattice import cartan_entry, pair_coroot, simple_root, wt

MAX_GRAPH_NODES = 50_000


class UsageError(Exception):
    pass


def _dump(data) -> str:
    return json.dumps(data, separators=(",", ":"))


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--e", type=int, default=2 if d is None else d,
                        help="quantum characteristic, at least 2")
    parser.add_argument("--s", type=str, default="0" if d is None else d,
                        help="multicharge as comma-separated integers")
    parser.add_argument("--max-rank", type=int, default=5 if d is None else d,
                        help="rank bound for graphs and sweeps")
    parser.add_argument("--order", choices=["asc", "desc"],
                        default="asc" if d is None else d,
                        help="signature box order")
    parser.add_argument("--format", choices=["json", "dot", "text"],
                        default="json" if d is None else d,
                        help="output format")
    parser.add_argument("--n", type=int, default=2 if d is None else d,
                        help="number of Hecke strands")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="focklab",
        description="Exact combinatorics of level-l Fock spaces, their "
        "crystals, and desk-scale cyclotomic Hecke algebras.",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p_wt = sub.add_parser("wt", help="weight of a multipartition")
    _add_common(p_wt, suppress=True)
    p_wt.add_argument("multipartition", help="JSON like [[2,1],[1]]")

    p_apply = sub.add_parser("apply", help="apply a Chevalley operator")
    _add_common(p_apply, suppress=True)
    p_apply.add_argument("op", choices=["e", "f", "h"])
    p_apply.add_argument("i", type=int, help="residue index in 0..e-1")
    p_apply.add_argument("vector",
                         help="multipartition JSON or Fock vector JSON")

    p_graph = sub.add_parser("crystal-graph", help="build the crystal graph")
    _add_common(p_graph, suppress=True)

    p_blocks = sub.add_parser("blocks", help="group rank-n shapes by weight")
    _add_common(p_blocks, suppress=True)
    p_blocks.add_argument("rank", type=int)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    _add_common(p_verify, suppress=True)
    p_verify.add_argument(
        "suite",
        choices=["fock", "crystal", "perfect", "components", "hecke", "all"],
    )

    p_hecke = sub.add_parser("hecke-build",
                             help="build the Hecke regular representation")
    _add_common(p_hecke, suppress=True)

    return parser


def _charge(args) -> Multicharge:
    try:
        s = tuple(int(v) for v in str(args.s).split(","))
    except ValueError as exc:
        raise UsageError(f"bad multicharge {args.s!r}: {exc}") from exc
    try:
        return Multicharge(args.e, s)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_wt(args) -> int:
    charge = _charge(args)
    mp = parse_multipartition(args.multipartition, level=charge.level)
    weight = wt(mp, charge)
    if args.format == "text":
        print(f"wt({mp}) = {weight}")
    else:
        print(_dump(weight.to_json()))
    return 0


def cmd_apply(args) -> int:
    charge = _charge(args)
    if not 0 <= args.i < charge.e:
        raise UsageError(f"residue {args.i} out of 0..{charge.e - 1}")
    vector = fock_space.parse_vector(args.vector, level=charge.level)
    op = {"e": fock_space.apply_e,
          "f": fock_space.apply_f,
          "h": fock_space.apply_h}[args.op]
    result = op(args.i, vector, charge)
    if args.format == "text":
        print(result)
    else:
        print(_dump(result.to_json()))
    return 0


def _node_count(charge: Multicharge, max_rank: int) -> int:
    """Cheap node-count prediction so oversized graphs fail before building."""
    single = [0] * (max_rank + 1)
    single[0] = 1
    for part in range(1, max_rank + 1):
        for total in range(part, max_rank + 1):
            single[total] += single[total - part]
    counts = [1] + [0] * max_rank
    for _ in range(charge.level):
        counts = [
            sum(counts[k] * single[t - k] for k in range(t + 1))
            for t in range(max_rank + 1)
        ]
    return sum(counts)


def cmd_crystal_graph(args) -> int:
    charge = _charge(args)
    if args.max_rank < 0:
        raise UsageError("--max-rank must be nonnegative")
    predicted = _node_count(charge, args.max_rank)
    if predicted > MAX_GRAPH_NODES:
        raise UsageError(
            f"resource bound exceeded: {predicted} nodes > {MAX_GRAPH_NODES}"
        )
    graph = build_graph(charge, args.max_rank, BoxOrder(args.order))
    if args.format == "dot":
        sys.stdout.write(graph.to_dot())
    elif args.format == "text":
        print(f"nodes={len(graph.nodes)} edges={len(graph.edges)} "
              f"boundary={len(graph.boundary)}")
        for a, i, b in graph.edges:
            print(f"{a} --{i}--> {b}")
    else:
        print(_dump(graph.to_json()))
    return 0


def cmd_blocks(args) -> int:
    charge = _charge(args)
    if args.rank < 0:
        raise UsageError("rank must be nonnegative")
    groups: dict = {}
    for mp in enumerate_multipartitions(args.rank, charge.level):
        groups.setdefault(wt(mp, charge), []).append(mp)
    ordered = sorted(groups.items(), key=lambda kv: (kv[0].lam, kv[0].delta))
    if args.format == "text":
        for weight, members in ordered:
            names = " ".join(str(mp) for mp in members)
            print(f"wt={weight}: {names}")
    else:
        doc = {
            "n": args.rank,
            "blocks": [
                {"wt": weight.to_json(),
                 "multipartitions": [mp.to_lists() for mp in members]}
                for weight, members in ordered
            ],
        }
        print(_dump(doc))
    return 0


def cmd_hecke_build(args) -> int:
    charge = _charge(args)
    try:
        rep = hecke_desk.build_algebra(charge.level, args.n, charge)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "text":
        print(f"dimension={rep.dimension} words={rep.word_labels()}")
    else:
        print(_dump(rep.to_json()))
    return 0


def _emit(suite: str, reports, failures: list) -> None:
    for report in reports:
        doc = report.to_json()
        doc["axiom"] = f"{suite}.{doc['axiom']}"
        if report.status == "fail" and not report.informational:
            failures.append(doc["axiom"])
        print(_dump(doc))


def _suite_fock(charge, max_rank, failures) -> None:
    weight_bad, comm_bad, serre_bad, pieri_bad, depth_bad, positive_bad = (
        [], [], [], [], [], [])
    alphas = [simple_root(i, charge.e) for i in range(charge.e)]
    basis = [
        mp
        for n in range(max_rank + 1)
        for mp in enumerate_multipartitions(n, charge.level)
    ]
    for mp in basis:
        v = fock_space.FockVector.basis(mp)
        weight = wt(mp, charge)
        for i in range(charge.e):
            up = fock_space.apply_f(i, v, charge)
            down = fock_space.apply_e(i, v, charge)
            for target in up.terms:
                if wt(target, charge) != weight - alphas[i]:
                    weight_bad.append({"mp": mp.to_lists(), "i": i, "op": "f"})
            for target in down.terms:
                if wt(target, charge) != weight + alphas[i]:
                    weight_bad.append({"mp": mp.to_lists(), "i": i, "op": "e"})
            if any(c < 0 for c in up.terms.values()) or any(
                c < 0 for c in down.terms.values()
            ):
                positive_bad.append({"mp": mp.to_lists(), "i": i})
            d = fock_space.depth(i, v, charge)
            if d > mp.rank:
                depth_bad.append({"mp": mp.to_lists(), "i": i, "depth": d})
            for j in range(charge.e):
                fj = fock_space.apply_f(j, v, charge)
                ei = fock_space.apply_e(i, v, charge)
                bracket = fock_space.apply_e(i, fj, charge) - fock_space.apply_f(
                    j, ei, charge
                )
                expected = (
                    v.scaled(pair_coroot(i, weight))
                    if i == j
                    else fock_space.FockVector.zero()
                )
                if bracket != expected:
                    comm_bad.append({"mp": mp.to_lists(), "i": i, "j": j})
        if not fock_space.verify_pieri(mp, charge):
            pieri_bad.append({"mp": mp.to_lists()})
        for i in range(charge.e):
            for j in range(charge.e):
                if i == j:
                    continue
                if not _serre_holds(i, j, mp, charge):
                    serre_bad.append({"mp": mp.to_lists(), "i": i, "j": j})

    reports = [
        AxiomReport("weight_step", tuple(weight_bad)),
        AxiomReport("sl2_commutators", tuple(comm_bad)),
        AxiomReport("serre", tuple(serre_bad)),
        AxiomReport("pieri", tuple(pieri_bad)),
        AxiomReport("depth_bound", tuple(depth_bad)),
        AxiomReport("positivity", tuple(positive_bad)),
    ]
    _emit("fock", reports, failures)


def _serre_holds(i: int, j: int, mp, charge) -> bool:
    m = 1 - cartan_entry(i, j, charge.e)
    v = fock_space.FockVector.basis(mp)
    for apply_op in (fock_space.apply_e, fock_space.apply_f):
        total = fock_space.FockVector.zero()
        for k in range(m + 1):
            term = v
            for _ in range(k):
                term = apply_op(i, term, charge)
            term = apply_op(j, term, charge)
            for _ in range(m - k):
                term = apply_op(i, term, charge)
            total = total + term.scaled(Fraction((-1) ** k * comb(m, k)))
        if not total.is_zero():
            return False
    return True


def _suite_crystal(charge, max_rank, order, failures) -> None:
    first = build_graph(charge, max_rank, order)
    second = build_graph(charge, max_rank, order)
    same = _dump(first.to_json()) == _dump(second.to_json())
    _emit(
        "crystal",
        [AxiomReport("graph_determinism",
                     () if same else ({"rebuilt_equal": False},))],
        failures,
    )
    _emit("crystal", structure_analysis.check_crystal_axioms(first), failures)


def _suite_hecke(charge, n, failures) -> None:
    try:
        rep = hecke_desk.build_algebra(charge.level, n, charge)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit("hecke", [AxiomReport("dimension", ())], failures)
    _emit("hecke", hecke_desk.check_relations(rep), failures)

    q = rep.params.q
    jms = hecke_desk.jm_elements(rep)
    twist_bad = []
    for i in range(1, rep.n):
        lhs = mat_mul_cyc(mat_mul_cyc(rep.gens[i], jms[i - 1]), rep.gens[i])
        rhs = _linalg.mat_scale(jms[i], q)
        if not _linalg.mat_is_zero(_linalg.mat_sub(lhs, rhs)):
            twist_bad.append({"i": i})
    commute_bad = []
    for i in range(rep.n):
        for j in range(i + 1, rep.n):
            lhs = mat_mul_cyc(jms[i], jms[j])
            rhs = mat_mul_cyc(jms[j], jms[i])
            if not _linalg.mat_is_zero(_linalg.mat_sub(lhs, rhs)):
                commute_bad.append({"i": i, "j": j})
    central_bad = []
    for k in range(1, rep.n + 1):
        ek = hecke_desk.symmetric_jm(rep, k)
        for g, gen in enumerate(rep.gens):
            lhs = mat_mul_cyc(ek, gen)
            rhs = mat_mul_cyc(gen, ek)
            if not _linalg.mat_is_zero(_linalg.mat_sub(lhs, rhs)):
                central_bad.append({"k": k, "generator": g})
    _emit(
        "hecke",
        [
            AxiomReport("jm_twist", tuple(twist_bad)),
            AxiomReport("jm_commute", tuple(commute_bad)),
            AxiomReport("jm_centrality", tuple(central_bad)),
        ],
        failures,
    )

    spectrum = hecke_desk.central_characters(rep, n, charge)
    _emit("hecke", list(spectrum.reports), failures)
    weights = {wt(mp, charge) for mp in enumerate_multipartitions(n, charge.level)}
    block_bad = []
    if len(spectrum.attained) != len(weights):
        block_bad.append(
            {"attained_characters": len(spectrum.attained),
             "distinct_weights": len(weights)}
        )
    shapes = enumerate_multipartitions(n, charge.level)
    for a in range(len(shapes)):
        for b in range(a + 1, len(shapes)):
            same_char = hecke_desk.a_poly(shapes[a], charge) == hecke_desk.a_poly(
                shapes[b], charge
            )
            same_wt = wt(shapes[a], charge) == wt(shapes[b], charge)
            if same_char != same_wt:
                block_bad.append(
                    {"mp1": shapes[a].to_lists(), "mp2": shapes[b].to_lists(),
                     "same_character": same_char, "same_weight": same_wt}
                )
    _emit("hecke", [AxiomReport("block_weights", tuple(block_bad))], failures)


def cmd_verify(args) -> int:
    charge = _charge(args)
    order = BoxOrder(args.order)
    failures: list[str] = []
    suite = args.suite
    if suite in ("fock", "all"):
        _suite_fock(charge, args.max_rank, failures)
    if suite in ("crystal", "all"):
        _suite_crystal(charge, args.max_rank, order, failures)
    if suite in ("perfect", "all"):
        _emit(
            "perfect",
            structure_analysis.check_perfect_basis(charge, args.max_rank, order),
            failures,
        )
    if suite in ("components", "all"):
        _emit(
            "components",
            structure_analysis.compare_components(charge, args.max_rank, order),
            failures,
        )
    if suite in ("hecke", "all"):
        _suite_hecke(charge, args.n, failures)
    return 0 if not failures else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "wt": cmd_wt,
        "apply": cmd_apply,
        "crystal-graph": cmd_crystal_graph,
        "blocks": cmd_blocks,
        "verify": cmd_verify,
        "hecke-build": cmd_hecke_build,
    }
    try:
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
