"""Command-line entry point wiring every module into scriptable subcommands.

Output contract: text mode is aligned human-readable lines; JSON mode is
schema-stable with every number rendered as a decimal string (arbitrary
precision must survive serialization) and a "tool-version" field.  Exit
codes: 0 success, 1 usage error, 2 invalid input data, 3 certifier
contradiction (refutation-candidate signal).

CROSSLAB_THREADS caps worker parallelism when set; all computations are
deterministic regardless, so it never changes any output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from . import bounds as bnd
from . import halvings as hv
from . import symmetry as sym
from .crossings import (
    DegenerateInputError,
    count_crossings_brute,
    count_k_edges,
    cr_from_k,
    cr_from_le_k,
)
from .geometry import (
    expand_seed,
    paper_config,
    paper_seed,
    parse_points,
    parse_seed,
    validate_general_position,
)
from .optimizer import SearchConfig, anneal, objective
from .sequences import (
    build_circular_sequence,
    halfperiod_from_json,
    halfperiod_to_json,
    pcr_from_profile,
    transposition_profile,
    validate_halfperiod,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_CONTRADICTION = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _num(x):
    """Decimal-string rendering for JSON (ints and Fractions)."""
    return str(x)


def _emit(args, payload: dict, text_lines: list[str]):
    if args.format == "json":
        payload = {"tool-version": __version__, **payload}
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InvalidInput(f"cannot read {path}: {exc.strerror}")


class _InvalidInput(Exception):
    pass


def _load_points(args):
    if args.points is None:
        return paper_config()
    try:
        ps = parse_points(_read(args.points))
    except ValueError as exc:
        raise _InvalidInput(str(exc))
    report = validate_general_position(ps)
    if not report.ok:
        triple = report.collinear_triples[0]
        raise _InvalidInput(f"degenerate input: collinear triple {triple}")
    return ps


def _load_halfperiod(args):
    try:
        h = halfperiod_from_json(_read(args.halfperiod))
    except (ValueError, KeyError) as exc:
        raise _InvalidInput(f"bad halfperiod file: {exc}")
    return h


# --------------------------------------------------------------------------
# subcommands


def cmd_verify_paper(args) -> int:
    ps = paper_config()
    brute = count_crossings_brute(ps)
    profile = count_k_edges(ps)
    eq1 = cr_from_le_k(profile)
    eq2 = cr_from_k(profile)
    h = build_circular_sequence(ps)
    validity = validate_halfperiod(h)
    tp = transposition_profile(h)
    pcr = pcr_from_profile(tp)
    obs = profile.e_le_k == tp.n_le_k
    values = {
        "brute": brute.value,
        "from-le-kedges": eq1.value,
        "from-kedges": eq2.value,
        "from-sequence": pcr,
    }
    ok = (
        validity.ok
        and obs
        and all(v == 14634 for v in values.values())
    )
    _emit(
        args,
        {
            "crossings": {k: _num(v) for k, v in values.items()},
            "halfperiod-valid": validity.ok,
            "kedge-sequence-identity": obs,
            "ok": ok,
        },
        [
            f"crossings (brute):         {brute.value}",
            f"crossings (<=k identity):  {eq1.value}",
            f"crossings (k identity):    {eq2.value}",
            f"crossings (sequence):      {pcr}",
            f"halfperiod valid:          {validity.ok}",
            f"k-edge/sequence identity:  {obs}",
            f"verdict: {'OK' if ok else 'FAIL'}",
        ],
    )
    return EXIT_OK if ok else EXIT_INVALID


def cmd_crossings(args) -> int:
    ps = _load_points(args)
    if args.method == "brute":
        result = count_crossings_brute(ps)
    else:
        profile = count_k_edges(ps)
        result = cr_from_le_k(profile) if args.method == "le-k" else cr_from_k(profile)
    _emit(
        args,
        {"n": _num(ps.n), "crossings": _num(result.value), "method": result.method},
        [f"{result.value}"],
    )
    return EXIT_OK


def cmd_kedges(args) -> int:
    ps = _load_points(args)
    profile = count_k_edges(ps)
    _emit(
        args,
        {
            "n": _num(ps.n),
            "e_k": [_num(v) for v in profile.e_k],
            "e_le_k": [_num(v) for v in profile.e_le_k],
        },
        [
            "k    E_k    E_<=k",
            *(
                f"{k:<4d} {ek:<6d} {le}"
                for k, (ek, le) in enumerate(zip(profile.e_k, profile.e_le_k))
            ),
        ],
    )
    return EXIT_OK


def cmd_sequence(args) -> int:
    ps = _load_points(args)
    h = build_circular_sequence(ps)
    validity = validate_halfperiod(h)
    tp = transposition_profile(h)
    pcr = pcr_from_profile(tp)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(halfperiod_to_json(h) + "\n")
    _emit(
        args,
        {
            "n": _num(h.n),
            "valid": validity.ok,
            "N_k": [_num(v) for v in tp.n_k],
            "N_le_k": [_num(v) for v in tp.n_le_k],
            "pcr": _num(pcr),
        },
        [
            f"n:      {h.n}",
            f"valid:  {validity.ok}",
            f"N_k:    {tp.n_k}",
            f"N_<=k:  {tp.n_le_k}",
            f"pcr:    {pcr}",
        ],
    )
    return EXIT_OK if validity.ok else EXIT_INVALID


def cmd_bounds(args) -> int:
    if args.n < 5:
        raise _InvalidInput(f"n={args.n} too small for the bound ladder")
    if args.sym3 and args.n % 3:
        raise _InvalidInput("--sym3 requires n divisible by 3")
    vec = bnd.best_lb_vector(args.n, args.sym3)
    bound = bnd.lb_crossing(args.n, args.sym3)
    _emit(
        args,
        {
            "n": _num(args.n),
            "sym3": bool(args.sym3),
            "vector": [_num(v) for v in vec.entries],
            "provenance": list(vec.provenance),
            "crossing-bound": _num(bound),
        },
        [
            "k    N_<=k   source",
            *(
                f"{k:<4d} {v:<7d} {src}"
                for k, (v, src) in enumerate(zip(vec.entries, vec.provenance), start=1)
            ),
            f"vector: {vec.entries}",
            f"crossing bound: {bound}",
        ],
    )
    return EXIT_OK


def cmd_structure(args) -> int:
    if args.halfperiod:
        h = _load_halfperiod(args)
    else:
        h = build_circular_sequence(_load_points(args))
    validity = validate_halfperiod(h)
    if not validity.ok:
        raise _InvalidInput(f"invalid halfperiod: {validity.violations[0]}")
    labeling = sym.find_3decomposition(h)
    payload: dict = {"n": _num(h.n), "3-decomposable": labeling is not None}
    lines = [f"n: {h.n}", f"3-decomposable: {labeling is not None}"]
    if labeling is not None:
        classified = sym.classify_transpositions(h, labeling)
        closed = tuple(
            sym.bichromatic_closed_form(h.n, k) for k in range(1, h.n // 2 + 1)
        )
        payload["N_le_bi"] = [_num(v) for v in classified.n_le_bi]
        payload["N_le_bi-closed-form-match"] = classified.n_le_bi == closed
        payload["phase-order"] = labeling.phase_order_ok
        lines.append(f"N_<=k bichromatic: {classified.n_le_bi}")
        lines.append(f"closed-form match: {classified.n_le_bi == closed}")
        lines.append(f"phase order satisfiable: {labeling.phase_order_ok}")
        canonical = None
        if h.n == 33:
            try:
                canonical = sym.canonical_labels(h, labeling)
                payload["canonical-labeling"] = True
            except sym.CanonicalLabelingError as exc:
                payload["canonical-labeling"] = False
                lines.append(f"canonical labeling failed: {exc}")
        symmetric = False
        if canonical is not None:
            for forward in (True, False):
                sigma = hv.derive_sigma(canonical, forward)
                if sym.check_3symmetric_sequence(h, sigma).ok:
                    symmetric = True
                    break
        payload["3-symmetric"] = symmetric
        lines.append(f"3-symmetric: {symmetric}")
        if args.out_labels and canonical is not None:
            with open(args.out_labels, "w", encoding="utf-8") as fh:
                fh.write(sym.labeling_to_json(canonical) + "\n")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_certify(args) -> int:
    h = _load_halfperiod(args)
    labeling = None
    if args.labels:
        try:
            labeling = sym.labeling_from_json(_read(args.labels))
        except ValueError as exc:
            raise _InvalidInput(f"bad labels file: {exc}")
    try:
        report = hv.certify(h, labeling)
    except hv.WrongSizeError as exc:
        raise _InvalidInput(str(exc))
    payload = report.to_jsonable()
    lines = [
        f"pcr: {report.pcr}",
        *(f"{item.id:36s} {item.status}" for item in report.items),
        f"hard-invalid: {report.hard_invalid}",
        f"refutation-candidate: {report.refutation_candidate}",
    ]
    _emit(args, payload, lines)
    if report.hard_invalid:
        return EXIT_INVALID
    if report.refutation_candidate:
        return EXIT_CONTRADICTION
    return EXIT_OK


def cmd_search(args) -> int:
    if args.seed:
        try:
            seed = parse_seed(_read(args.seed))
        except ValueError as exc:
            raise _InvalidInput(str(exc))
    else:
        seed = paper_seed()
    try:
        cfg = SearchConfig(
            iterations=args.iters,
            rng_seed=args.rng_seed,
            move_radius=args.radius,
            initial_temperature=Fraction(args.temp),
            cooling_rate=Fraction(args.cool),
            report_every=args.report_every,
        )
    except ValueError as exc:
        raise _InvalidInput(str(exc))
    start_value = objective(seed)
    if start_value is None:
        raise _InvalidInput("seed expands to a degenerate configuration")
    best_seed, trace = anneal(seed, cfg)
    if args.out_trace:
        with open(args.out_trace, "w", encoding="utf-8") as fh:
            fh.write("iteration,current,best\n")
            for it, cur, best in trace.history:
                fh.write(f"{it},{cur},{best}\n")
    _emit(
        args,
        {
            "initial": _num(trace.initial),
            "best": _num(trace.best),
            "evaluations": _num(trace.evaluations),
            "accepted": _num(trace.accepted),
            "rejected-degenerate": _num(trace.rejected_degenerate),
            "history": [[_num(a), _num(b), _num(c)] for a, b, c in trace.history],
        },
        [
            f"initial: {trace.initial}",
            f"best:    {trace.best}",
            f"evals:   {trace.evaluations}  accepted: {trace.accepted}  "
            f"degenerate: {trace.rejected_degenerate}",
        ],
    )
    return EXIT_OK


# --------------------------------------------------------------------------
# argument wiring


def build_parser() -> _Parser:
    parser = _Parser(prog="crosslab", description=__doc__)
    parser.add_argument("--version", action="version", version=f"crosslab {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    add("verify-paper", cmd_verify_paper, help="full self-check on the embedded configuration")

    p = add("crossings", cmd_crossings, help="exact crossing count of a point set")
    p.add_argument("--points", help="point file (default: embedded configuration)")
    p.add_argument("--method", choices=("brute", "le-k", "k"), default="brute")

    p = add("kedges", cmd_kedges, help="k-edge vector of a point set")
    p.add_argument("--points")

    p = add("sequence", cmd_sequence, help="circular-sequence halfperiod of a point set")
    p.add_argument("--points")
    p.add_argument("--out", help="write halfperiod JSON to this file")

    p = add("bounds", cmd_bounds, help="lower-bound vector and crossing bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sym3", action="store_true")

    p = add("structure", cmd_structure, help="3-decomposition / 3-symmetry analysis")
    p.add_argument("--halfperiod", help="halfperiod JSON file")
    p.add_argument("--points", help="point file (alternative input)")
    p.add_argument("--out-labels", help="write canonical labeling JSON to this file")

    p = add("certify", cmd_certify, help="run the certificate battery on a halfperiod")
    p.add_argument("--halfperiod", required=True)
    p.add_argument("--labels", help="labeling JSON file")

    p = add("search", cmd_search, help="simulated annealing from a seed set")
    p.add_argument("--seed", help="seed file (default: embedded seed)")
    p.add_argument("--iters", type=int, default=2000)
    p.add_argument("--rng-seed", type=int, default=1)
    p.add_argument("--radius", type=int, default=1)
    p.add_argument("--temp", default="40")
    p.add_argument("--cool", default="995/1000")
    p.add_argument("--report-every", type=int, default=100)
    p.add_argument("--out-trace", help="write CSV trace to this file")

    return parser


def main(argv=None) -> int:
    os.environ.setdefault("CROSSLAB_THREADS", "")  # accepted; results identical
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except _InvalidInput as exc:
        print(f"crosslab: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DegenerateInputError as exc:
        print(f"crosslab: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
