"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure or violation, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
import time
from pathlib import Path

from . import adem, at_model, coops, reductions
from .errors import FiltrationError, NotInKernelError, SimplexError
from .fixtures import FIXTURES, fixture
from .io import ParseError, dump_model, load_document, load_model
from .report import Report, render_text
from .simplicial import (ORDER_POLICIES, barycentric_subdivision, close_complex,
                         random_complex)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _sorted_simplices(xs):
    return sorted(xs, key=lambda s: (len(s), s))


def _listed(chain):
    return [list(s) for s in _sorted_simplices(chain)]


def _load(args):
    try:
        doc = load_document(args.complex)
        K = doc.to_complex(args.order)
    except (ParseError, FiltrationError, SimplexError) as exc:
        raise InputError(str(exc)) from None
    return doc, K


def _model(args):
    doc, K = _load(args)
    return doc, at_model.build_contraction(K, args.tau)


def _emit(args, report: Report):
    print(report.to_json() if args.json else render_text(report))


def parse_class(spec: str, model, dim=None, tau="largest") -> coops.CohomologyClass:
    """'1,2,3;1,5,6' -> sum of the duals of generators <1,2,3> and <1,5,6>.

    Names are looked up among the generators of ``model``. When some are
    missing there, they are looked up in the model built with the
    ``appearance`` order (whose generators follow the input listing) and the
    class is carried over through its representative cocycle.
    """
    gens = []
    for part in spec.split(";"):
        part = part.strip()
        if not part:
            continue
        try:
            gens.append(tuple(sorted(int(v) for v in part.split(","))))
        except ValueError:
            raise InputError(f"bad generator name {part!r}") from None
    dims = {len(g) - 1 for g in gens}
    if len(dims) > 1:
        raise InputError("generators of different dimensions in one class")
    q = dims.pop() if dims else dim
    if dim is not None and q != dim:
        raise InputError(f"expected a class of dimension {dim}, got {q}")
    try:
        return coops.CohomologyClass.from_generators(model, q, gens)
    except KeyError as exc:
        first = exc.args[0]
    K = model.complex
    if not all(g in K for g in gens):
        raise InputError(first)
    other = at_model.build_contraction(
        close_complex(K.maximal_simplices(), order="appearance"), tau)
    try:
        alpha = coops.CohomologyClass.from_generators(other, q, gens)
    except KeyError:
        raise InputError(first) from None
    return coops.f_star(model, coops.g_star(other, alpha), q)


def cmd_homology(args) -> int:
    doc, model = _model(args)
    cycles = at_model.representative_cycles(model)
    report = Report(
        name=doc.name,
        betti=list(at_model.betti_numbers(model)),
        generators=[list(g) for g in model.generators],
        cycles={",".join(map(str, g)): _listed(z) for g, z in cycles.items()},
    )
    if args.figure:
        from .plotting import betti_figure

        betti_figure(report.betti, args.figure, title=doc.name)
    _emit(args, report)
    return EXIT_OK


def _verify_one(model):
    violations = at_model.verify_contraction(model)
    got = at_model.betti_numbers(model)
    oracle = at_model.betti_by_rank(model.complex)
    return violations, got, oracle


def cmd_verify(args) -> int:
    if args.random is not None:
        rng = random.Random(args.seed)
        failures = []
        for trial in range(args.random):
            K = random_complex(rng, max_vertices=args.vertices, shuffle=True)
            model = at_model.build_contraction(K, args.tau)
            violations, got, oracle = _verify_one(model)
            if violations or got != oracle:
                failures.append(trial)
        report = Report(verification={
            "ok": not failures, "trials": args.random, "seed": args.seed,
            "failed_trials": failures,
        })
        _emit(args, report)
        return EXIT_FAIL if failures else EXIT_OK
    if args.complex is None:
        raise InputError("verify needs a complex file or --random N")
    doc, K = _load(args)
    if doc.model is not None and not args.rebuild:
        try:
            model = load_model(doc)
        except ParseError as exc:
            raise InputError(str(exc)) from None
    else:
        model = at_model.build_contraction(K, args.tau)
    violations, got, oracle = _verify_one(model)
    ok = not violations and got == oracle
    report = Report(name=doc.name, verification={
        "ok": ok,
        "violations": [v.describe() for v in violations],
        "betti": list(got),
        "betti_rank_oracle": list(oracle),
    })
    _emit(args, report)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ring(args) -> int:
    doc, model = _model(args)
    table = coops.cohomology_ring(model)
    triples = [{"alpha": list(a), "beta": list(b), "gamma": list(g)}
               for (a, b, g), bit in sorted(table.items(), key=lambda kv: tuple(
                   (len(s), s) for s in kv[0])) if bit]
    _emit(args, Report(name=doc.name, ring=triples))
    return EXIT_OK


def _sq_section(model, i, q):
    M = coops.sq_matrix(model, i, q)
    return {
        "i": i, "q": q,
        "source": [list(g) for g in model.generators_of_dim(q)],
        "target": [list(g) for g in model.generators_of_dim(q + i)],
        "matrix": M.to_lists(),
        "kernel": [[list(g) for g in c.generators(model)]
                   for c in coops.sq_kernel_basis(model, i, q)],
        "image": [[list(g) for g in c.generators(model)]
                  for c in coops.sq_image_basis(model, i, q)],
    }


def cmd_sq(args) -> int:
    doc, model = _model(args)
    _emit(args, Report(name=doc.name, sq=_sq_section(model, args.i, args.dim)))
    return EXIT_OK


def cmd_psi2(args) -> int:
    doc, model = _model(args)
    alpha = parse_class(args.cls, model, dim=2, tau=args.tau)
    try:
        res = adem.psi2(model, alpha, args.e3)
    except NotInKernelError as exc:
        image = coops.CohomologyClass(4, exc.image)
        print(f"error: class is not in the kernel of Sq^2; Sq^2 of it is "
              f"{[list(g) for g in image.generators(model)]}", file=sys.stderr)
        return EXIT_FAIL
    gens5 = model.generators_of_dim(5)
    report = Report(name=doc.name, psi2={
        "e3": args.e3,
        "input": [list(g) for g in alpha.generators(model)],
        "w": _listed(res.w_cochain),
        "w_class": [list(g) for g in res.w_class.generators(model)],
        "image": [[list(g) for g in c.generators(model)] for c in res.image_basis],
        "coset": [list(g) for g, x in zip(gens5, res.coset_rep) if x],
        "is_zero": res.is_zero,
    })
    _emit(args, report)
    return EXIT_OK


def cmd_contraction(args) -> int:
    doc, model = _model(args)
    dump = dump_model(model, doc.name, args.tau)
    if args.json:
        import json

        print(json.dumps(dump, sort_keys=True, indent=1))
        return EXIT_OK
    from .report import chain_name, simplex_name

    print(f"generators: {', '.join(simplex_name(g) for g in model.generators)}")
    for s in model.complex:
        fs, ps = model.f.get(s), model.phi.get(s)
        if fs or ps:
            print(f"{simplex_name(s)}  f: {chain_name(_sorted_simplices(fs or ()))}  "
                  f"phi: {chain_name(_sorted_simplices(ps or ()))}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    doc, K = _load(args)
    M, c = reductions.collapse_thinning(K)
    before = at_model.betti_numbers(at_model.build_contraction(K, args.tau))
    after = at_model.betti_numbers(at_model.build_contraction(M, args.tau))
    width = max(len(before), len(after))
    pad = lambda b: list(b) + [0] * (width - len(b))  # noqa: E731
    report = Report(name=doc.name, reduction={
        "steps": (len(K) - len(M)) // 2,
        "before": list(K.counts()),
        "after": list(M.counts()),
        "maximal": [list(s) for s in M.maximal_simplices()],
        "verified": True,
        "betti_preserved": pad(before) == pad(after),
    })
    _emit(args, report)
    return EXIT_OK


def _bench_families(levels):
    for name in ("sphere", "rp2", "torus"):
        K = fixture(name)
        for level in range(levels + 1):
            yield name, level, K
            K = barycentric_subdivision(K)


def cmd_bench(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for fam, level, K in _bench_families(args.levels):
        t0 = time.perf_counter()
        model = at_model.build_contraction(K)
        t1 = time.perf_counter()
        violations = at_model.verify_contraction(model)
        t2 = time.perf_counter()
        rows.append({"family": fam, "level": level, "simplices": len(K),
                     "betti": " ".join(map(str, at_model.betti_numbers(model))),
                     "contraction_s": round(t1 - t0, 6), "verify_s": round(t2 - t1, 6),
                     "violations": len(violations)})
    csv_path = out / "scaling.csv"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
    from .plotting import scaling_figure

    scaling_figure(rows, out / "scaling.png")
    for r in rows:
        print(f"{r['family']:8s} level {r['level']}  m={r['simplices']:6d}  "
              f"betti {r['betti']:8s} contraction {r['contraction_s']:.4f}s  "
              f"verify {r['verify_s']:.4f}s")
    print(f"wrote {csv_path} and {out / 'scaling.png'}")
    return EXIT_FAIL if any(r["violations"] for r in rows) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gf2topo",
        description="Mod 2 homology, cohomology ring, Steenrod squares and Psi_2 "
                    "of simplicial complexes via an explicit chain contraction.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--order", choices=ORDER_POLICIES, default="lex",
                        help="simplex order used to build the contraction (default: lex)")
    common.add_argument("--tau", choices=at_model.TAU_STRATEGIES, default="largest",
                        help="which generator a new simplex kills")
    src_help = f"complex file (JSON or text) or a bundled fixture: {', '.join(sorted(FIXTURES))}"
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", parents=[common], help="Betti numbers and representative cycles")
    p.add_argument("complex", help=src_help)
    p.add_argument("--figure", help="also write a Betti-number bar chart to this path")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("verify", parents=[common], help="check the contraction identities")
    p.add_argument("complex", nargs="?", help=src_help)
    p.add_argument("--rebuild", action="store_true",
                   help="ignore a stored model in the document and rebuild it")
    p.add_argument("--random", type=int, metavar="N", help="fuzz N random complexes instead")
    p.add_argument("--vertices", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ring", parents=[common], help="nonzero cup-product structure constants")
    p.add_argument("complex", help=src_help)
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("sq", parents=[common], help="matrix, kernel and image of Sq^i on H^q")
    p.add_argument("complex", help=src_help)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(func=cmd_sq)

    p = sub.add_parser("psi2", parents=[common], help="Adem secondary operation on H^2")
    p.add_argument("complex", help=src_help)
    p.add_argument("--class", dest="cls", default="",
                   help="sum of generator duals, e.g. '1,2,3;1,5,6' (empty = zero class)")
    p.add_argument("--e3", choices=sorted(adem.E3_VARIANTS), default="standard",
                   help="E_3 formula; 'legacy' fails the coboundary relation")
    p.set_defaults(func=cmd_psi2)

    p = sub.add_parser("contraction", parents=[common], help="dump f, phi and the generators")
    p.add_argument("complex", help=src_help)
    p.set_defaults(func=cmd_contraction)

    p = sub.add_parser("reduce", parents=[common], help="collapse thinning report")
    p.add_argument("complex", help=src_help)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bench", help="timing harness; writes scaling.csv and scaling.png")
    p.add_argument("--levels", type=int, default=2, help="barycentric subdivision depth")
    p.add_argument("--out", default="bench-out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
