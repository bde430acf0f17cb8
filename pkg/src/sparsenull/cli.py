"""Command-line interface.

Data (matrices, CSV reports) goes to stdout or the named output files;
diagnostics go to stderr.  Exit codes:

    0  success (including negative verdicts from ``certify``)
    2  unparsable input, incompatible shapes or invalid parameters
    3  a guardrail of an exhaustive routine was exceeded
    4  ``sparsify`` input without full column rank
    5  ``edr`` target outside the column span of the dictionary
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .certify import (MAX_CIRCUIT_COLS, NotColumnEquivalent, check_unsparsifiable_hypothesis,
                      fuchs_edr, fuchs_ms, fuchs_mu, fuchs_sns, is_optimally_sparse)
from .errors import GuardrailExceeded
from .fileformat import MatrixParseError, as_vector, read_matrix, render
from .problems import (EdrInstance, InstanceError, MsInstance, MuInstance, SnsInstance,
                       gen_hardness_instance, gen_unsparsifiable, random_full_rank, random_matrix,
                       stacked_unsparsifiable)
from .ratlinalg import Mat, in_col_span, rank, same_column_space
from .report import CERTIFY_COLUMNS, RunReport, cell, report_csv, to_csv, trace_csv
from .solvers import (EXACT, L1, edr_bruteforce, edr_solve, ms_bruteforce, ms_greedy,
                      mu_bruteforce, sns_bruteforce, sns_solve)

EXIT_OK, EXIT_INPUT, EXIT_GUARDRAIL, EXIT_RANK, EXIT_INFEASIBLE = 0, 2, 3, 4, 5

ORACLES = {"exact": EXACT, "l1": L1}


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _vector_file(path) -> tuple:
    try:
        return as_vector(read_matrix(path))
    except ValueError as e:
        if isinstance(e, MatrixParseError):
            raise
        raise CliError(f"{path}: {e}") from None


class _Timer:
    def __init__(self, enabled: bool):
        self.enabled = enabled

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = f"{time.perf_counter() - self.t0:.6f}" if self.enabled else None


def _emit(text: str, out=None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _certificate_cell(fn, *args) -> str | None:
    try:
        cert = fn(*args)
    except (NotColumnEquivalent, GuardrailExceeded) as e:
        return f"error: {e}"
    present = cert.present if hasattr(cert, "present") else cert is not None
    return "present" if present else "absent"


# solving commands --------------------------------------------------------------

def cmd_nullspace(args) -> int:
    A = read_matrix(args.matrix)
    with _Timer(args.timing) as t:
        N = sns_solve(SnsInstance(A), ORACLES[args.oracle])
    rep = RunReport(str(args.matrix), "SNS", args.oracle, N.nnz(), wall_time=t.elapsed,
                    verified=SnsInstance(A).is_solution(N))
    if args.oracle == "exact":
        rep.optimum = rep.objective
    else:
        rep.certificate = _certificate_cell(fuchs_sns, A, N)
    _emit(render(N), args.out)
    _emit(report_csv([rep]))
    return EXIT_OK


def cmd_sparsify(args) -> int:
    B = read_matrix(args.matrix)
    r = rank(B)
    if r != B.cols:
        print(f"error: {args.matrix}: rank {r} < {B.cols} columns; "
              "matrix sparsification needs full column rank", file=sys.stderr)
        return EXIT_RANK
    with _Timer(args.timing) as t:
        out, trace = ms_greedy(MsInstance(B), ORACLES[args.oracle])
    rep = RunReport(str(args.matrix), "MS", args.oracle, out.nnz(), wall_time=t.elapsed,
                    verified=rank(out) == B.cols and same_column_space(out, B))
    if args.oracle == "exact":
        rep.optimum = rep.objective
    else:
        rep.certificate = _certificate_cell(fuchs_ms, B, out)
    _emit(render(out), args.out)
    if args.trace:
        _emit(trace_csv(trace), args.trace)
    _emit(report_csv([rep]))
    return EXIT_OK


def cmd_minunsat(args) -> int:
    A, y = read_matrix(args.a), _vector_file(args.y)
    inst = MuInstance(A, y)
    oracle = ORACLES[args.oracle]
    with _Timer(args.timing) as t:
        ans = oracle(inst)
    rep = RunReport(f"{args.a}|{args.y}", "MU", args.oracle, ans.l0, wall_time=t.elapsed,
                    verified=inst.is_solution(ans.x), solution=ans.x)
    if args.oracle == "exact":
        rep.optimum = rep.objective
    else:
        rep.certificate = _certificate_cell(fuchs_mu, A, y, ans.x)
    _emit(report_csv([rep]))
    return EXIT_OK


def cmd_edr(args) -> int:
    D, s = read_matrix(args.d), _vector_file(args.s)
    if len(s) != D.rows:
        raise CliError(f"target length {len(s)} differs from dictionary row count {D.rows}")
    if not in_col_span(D, s):
        print(f"error: {args.s}: target is not in the column span of {args.d}", file=sys.stderr)
        return EXIT_INFEASIBLE
    inst = EdrInstance(D, s)
    with _Timer(args.timing) as t:
        v = edr_solve(inst, ORACLES[args.oracle])
    rep = RunReport(f"{args.d}|{args.s}", "EDR", args.oracle, inst.objective(v),
                    wall_time=t.elapsed, verified=inst.is_solution(v), solution=v)
    if args.oracle == "exact":
        rep.optimum = rep.objective
    else:
        rep.certificate = _certificate_cell(fuchs_edr, D, v)
    _emit(report_csv([rep]))
    return EXIT_OK


# generators --------------------------------------------------------------------

def cmd_generate(args) -> int:
    try:
        if args.kind == "vandermonde":
            M = (stacked_unsparsifiable if args.stacked else gen_unsparsifiable)(args.m, args.n)
        elif args.kind == "hardness":
            inst = MuInstance(read_matrix(args.a), _vector_file(args.y))
            M = gen_hardness_instance(inst, args.p, args.q)
        else:
            if args.m < 0 or args.n < 0 or args.lo > args.hi:
                raise ValueError("need m, n >= 0 and lo <= hi")
            if args.full_rank and args.n and args.lo == args.hi == 0:
                raise ValueError("a zero entry range cannot give full rank")
            rng = random.Random(args.seed)
            gen = random_full_rank if args.full_rank else random_matrix
            M = gen(args.m, args.n, rng, args.lo, args.hi)
    except ValueError as e:
        if isinstance(e, MatrixParseError):
            raise
        raise CliError(f"invalid parameters: {e}") from None
    _emit(render(M), args.out)
    return EXIT_OK


# certificates ------------------------------------------------------------------

def _verdict(check: str, instance: str, verdict: str, witness: str = "") -> int:
    print(f"{check}: {verdict}" + (f" ({witness})" if witness else ""), file=sys.stderr)
    sys.stdout.write(to_csv(CERTIFY_COLUMNS, [[check, instance, verdict, witness]]))
    return EXIT_OK


def _family_witness(fam) -> str:
    parts = []
    for i, c in enumerate(fam.certificates):
        parts.append(f"{i}:" + ("none" if c is None else cell(c.witness)))
    return "; ".join(parts)


def cmd_certify(args) -> int:
    if args.check == "optimal-sparsity":
        A = read_matrix(args.matrix)
        v = is_optimally_sparse(A, max_cols=args.max_cols)
        witness = "" if v.optimal else f"x={cell(v.x)}; column={v.column}"
        return _verdict("optimal-sparsity", str(args.matrix), cell(v.optimal), witness)
    if args.check == "unsparsifiable":
        A = read_matrix(args.matrix)
        if A.rows < A.cols:
            raise CliError(f"hypothesis needs rows >= cols, got {A.rows}x{A.cols}")
        ok = check_unsparsifiable_hypothesis(A)
        return _verdict("unsparsifiable-hypothesis", str(args.matrix), cell(ok))
    return _certify_fuchs(args)


def _certify_fuchs(args) -> int:
    tag = args.tag
    M = read_matrix(args.matrix)
    name = str(args.matrix)
    check = f"fuchs-{tag}"
    if tag in ("edr", "mu"):
        if args.vector is None:
            raise CliError(f"fuchs {tag} needs a target vector file")
        y = _vector_file(args.vector)
        name = f"{args.matrix}|{args.vector}"
        if tag == "edr":
            inst = EdrInstance(M, y)
            cand = _vector_file(args.candidate) if args.candidate else edr_bruteforce(inst)
            if len(cand) != M.cols or not inst.is_solution(cand):
                raise CliError("candidate is not a solution of D v = s")
            cert = fuchs_edr(M, cand)
        else:
            inst = MuInstance(M, y)
            cand = _vector_file(args.candidate) if args.candidate else mu_bruteforce(inst)
            if len(cand) != M.cols:
                raise CliError("candidate length differs from column count of A")
            cert = fuchs_mu(M, y, cand)
        if cert is None:
            return _verdict(check, name, "absent", f"candidate={cell(cand)}")
        return _verdict(check, name, "present",
                        f"candidate={cell(cand)}; witness={cell(cert.witness)}")
    if tag == "ms":
        if rank(M) != M.cols:
            raise CliError("matrix sparsification needs full column rank", EXIT_RANK)
        cand = read_matrix(args.candidate) if args.candidate else ms_greedy(MsInstance(M))[0]
        fam = fuchs_ms(M, cand)
    else:
        cand = read_matrix(args.candidate) if args.candidate else sns_solve(SnsInstance(M))
        fam = fuchs_sns(M, cand)
    return _verdict(check, name, "present" if fam.present else "absent", _family_witness(fam))


# benchmark ---------------------------------------------------------------------

def instance_kind(path: Path) -> str:
    """Problem of an instance file, from its double suffix (default MS)."""
    parts = path.name.split(".")
    if len(parts) >= 3 and parts[-2] in ("ms", "sns", "mu", "edr"):
        return parts[-2]
    return "ms"


def _split_augmented(M: Mat) -> tuple[Mat, tuple]:
    if M.cols < 1:
        raise ValueError("augmented instance needs at least one column")
    return M.submatrix(None, range(M.cols - 1)), M.col(M.cols - 1)


def bench_instance(path: str, oracles: tuple, timing: bool = False) -> list[RunReport]:
    """Rows for one instance file, one per oracle; failures become error cells."""
    p = Path(path)
    kind = instance_kind(p)
    name = p.name
    try:
        M = read_matrix(p)
        if kind == "ms":
            inst = MsInstance(M)
            optimum = lambda: ms_bruteforce(inst).nnz()  # noqa: E731

            def run(o):
                out = ms_greedy(inst, ORACLES[o])[0]
                return out.nnz(), (fuchs_ms, M, out)
        elif kind == "sns":
            inst = SnsInstance(M)
            optimum = lambda: sns_bruteforce(inst).nnz()  # noqa: E731

            def run(o):
                N = sns_solve(inst, ORACLES[o])
                return N.nnz(), (fuchs_sns, M, N)
        elif kind == "mu":
            A, y = _split_augmented(M)
            inst = MuInstance(A, y)
            optimum = lambda: inst.objective(mu_bruteforce(inst))  # noqa: E731

            def run(o):
                ans = ORACLES[o](inst)
                return ans.l0, (fuchs_mu, A, y, ans.x)
        else:
            D, s = _split_augmented(M)
            inst = EdrInstance(D, s)
            optimum = lambda: inst.objective(edr_bruteforce(inst))  # noqa: E731

            def run(o):
                v = edr_solve(inst, ORACLES[o])
                return inst.objective(v), (fuchs_edr, D, v)
    except (ValueError, GuardrailExceeded) as e:
        return [RunReport(name, kind.upper(), o, error=str(e)) for o in oracles]

    try:
        opt, opt_error = optimum(), None
    except GuardrailExceeded as e:
        opt, opt_error = None, f"optimum: {e}"
    reports = []
    for o in oracles:
        rep = RunReport(name, kind.upper(), o, optimum=opt, error=opt_error)
        try:
            with _Timer(timing) as t:
                rep.objective, cert_args = run(o)
            rep.wall_time = t.elapsed
            if o == "l1":
                rep.certificate = _certificate_cell(*cert_args)
        except GuardrailExceeded as e:
            rep.error = str(e)
        reports.append(rep)
    return reports


def cmd_bench(args) -> int:
    oracles = tuple(o.strip() for o in args.oracles.split(",") if o.strip())
    bad = [o for o in oracles if o not in ORACLES]
    if bad or not oracles:
        raise CliError(f"unknown oracle(s): {', '.join(bad) or '(none)'}")
    directory = Path(args.directory)
    if not directory.is_dir():
        raise CliError(f"{directory}: not a directory")
    files = sorted(str(f) for f in directory.glob("*.rmat"))
    if args.threads > 1 and len(files) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            results = list(pool.map(bench_instance, files, [oracles] * len(files),
                                    [args.timing] * len(files)))
    else:
        results = [bench_instance(f, oracles, args.timing) for f in files]
    reports = sorted((r for rows in results for r in rows), key=lambda r: (r.instance, r.oracle))
    _emit(report_csv(reports, summary=True), args.csv)
    return EXIT_OK


# argument parsing --------------------------------------------------------------

def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sparsenull",
                                     description="Exact sparse null space and matrix sparsification.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def solver(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--oracle", choices=sorted(ORACLES), default="exact")
        p.add_argument("--timing", action="store_true", help="fill the wall_time column")
        return p

    p = solver("nullspace", "sparse null space of a matrix")
    p.add_argument("matrix")
    p.add_argument("--out", required=True, help="file for the null matrix")
    p.set_defaults(func=cmd_nullspace)

    p = solver("sparsify", "column-equivalent sparsification of a full-rank matrix")
    p.add_argument("matrix")
    p.add_argument("--out", required=True, help="file for the sparsified matrix")
    p.add_argument("--trace", help="CSV file for the per-iteration trace")
    p.set_defaults(func=cmd_sparsify)

    p = solver("minunsat", "min unsatisfy: x minimizing the nonzeros of y - A x")
    p.add_argument("a", metavar="A")
    p.add_argument("y", metavar="Y")
    p.set_defaults(func=cmd_minunsat)

    p = solver("edr", "exact dictionary representation: sparsest v with D v = s")
    p.add_argument("d", metavar="D")
    p.add_argument("s", metavar="S")
    p.set_defaults(func=cmd_edr)

    g = sub.add_parser("generate", help="write a generated matrix")
    gsub = g.add_subparsers(dest="kind", required=True)
    p = gsub.add_parser("vandermonde", help="integer Vandermonde matrix i**j")
    p.add_argument("m", type=_positive)
    p.add_argument("n", type=_positive)
    p.add_argument("--stacked", action="store_true", help="stack the identity on top")
    p = gsub.add_parser("hardness", help="block construction from a min unsatisfy instance")
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--y", required=True, metavar="FILE")
    p.add_argument("--p", type=_positive)
    p.add_argument("--q", type=_positive)
    p = gsub.add_parser("random", help="seeded random integer matrix")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lo", type=int, default=-3)
    p.add_argument("--hi", type=int, default=3)
    p.add_argument("--full-rank", action="store_true")
    for p in gsub.choices.values():
        p.add_argument("--out", help="output file (default stdout)")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("certify", help="verdicts: optimal sparsity, unsparsifiability, l1 certificates")
    csub = c.add_subparsers(dest="check", required=True)
    p = csub.add_parser("optimal-sparsity")
    p.add_argument("matrix")
    p.add_argument("--max-cols", type=_positive, default=MAX_CIRCUIT_COLS)
    p = csub.add_parser("unsparsifiable")
    p.add_argument("matrix")
    p = csub.add_parser("fuchs")
    p.add_argument("tag", choices=("edr", "mu", "ms", "sns"))
    p.add_argument("matrix", help="D, A, B or A depending on the tag")
    p.add_argument("vector", nargs="?", help="target s (edr) or y (mu)")
    p.add_argument("--candidate", help="solution to certify (default: exact solver result)")
    c.set_defaults(func=cmd_certify)

    b = sub.add_parser("bench", help="compare oracles with exhaustive optima over a directory")
    b.add_argument("directory")
    b.add_argument("--oracles", default="exact,l1")
    b.add_argument("--csv", help="output file (default stdout)")
    b.add_argument("--threads", type=_positive, default=1)
    b.add_argument("--timing", action="store_true")
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatrixParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except GuardrailExceeded as e:
        print(f"error: guardrail: {e}", file=sys.stderr)
        return EXIT_GUARDRAIL
    except (InstanceError, NotColumnEquivalent) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
