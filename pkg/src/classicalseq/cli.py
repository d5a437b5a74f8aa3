"""Command-line interface.

Exit codes: 0 when every requested check passes, 1 when a mathematical check
fails, 2 on malformed or invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import characterize as ch
from .errors import ClassicalSeqError, InputError, QuasiDefiniteViolation, StructureViolation
from .hankel import (build_gram, cholesky_extend, cholesky_init, det_ratio_check,
                     verify_factorization)
from .moments import (FIXTURES, first_recurrence_failure, generate_moments, sigma_chain,
                      validate_pearson)
from .operators import check_moment_kernel, check_self_adjoint
from .poly import derivative_family, extract_polynomials, format_rational

CHECK_ORDER = ("recurrence", "cholesky", "selfadjoint", "bochner", "hahn", "ngn",
               "struct1", "struct2", "rodrigues")

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(InputError):
    pass


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}")


def _rationals(xs):
    return [format_rational(x) for x in xs]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="classicalseq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    defaults = {"gen": ("csv", 0), "factor": ("text", 0), "verify": ("text", 1),
                "polys": ("text", 0), "report": ("json", 2)}
    for name, (fmt, k) in defaults.items():
        sp = sub.add_parser(name)
        sp.add_argument("--family", choices=sorted(FIXTURES))
        for coef in "abcde":
            sp.add_argument(f"--{coef}", type=_rational)
        sp.add_argument("--mu0", type=_rational)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--k", type=int, default=k)
        sp.add_argument("--checks", default="all")
        sp.add_argument("--format", choices=("json", "csv", "text"), default=fmt)
        sp.add_argument("--out")
        sp.add_argument("--no-timing", action="store_true")
    return parser


class RunConfig:
    def __init__(self, args):
        self.command = args.command
        explicit = [getattr(args, c) for c in "abcde"]
        if args.family and any(v is not None for v in explicit):
            raise UsageError("give either --family or --a..--e, not both")
        if args.family:
            fx = FIXTURES[args.family]
            coeffs = fx.pearson.as_tuple()
            mu0 = fx.mu0
        elif all(v is not None for v in explicit):
            coeffs = tuple(explicit)
            mu0 = Fraction(1)
        else:
            raise UsageError("Pearson data missing: use --family or all of --a --b --c --d --e")
        self.family = args.family
        self.coeffs = coeffs
        self.mu0 = args.mu0 if args.mu0 is not None else mu0
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        if args.k < 0:
            raise UsageError("--k must be >= 0")
        self.n, self.k = args.n, args.k
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        if not checks:
            raise UsageError("--checks must not be empty")
        if "all" in checks:
            checks = list(CHECK_ORDER)
        unknown = sorted(set(checks) - set(CHECK_ORDER))
        if unknown:
            raise UsageError(f"unknown checks: {', '.join(unknown)}")
        self.checks = [c for c in CHECK_ORDER if c in checks]
        self.format = args.format
        self.out = args.out
        self.timing = not args.no_timing

    @property
    def depth(self) -> int:
        """Depth used by the derived-basis checks; at least 1."""
        return max(self.k, 1)

    def echo(self) -> dict:
        out = {"command": self.command, "family": self.family}
        out.update(zip("abcde", _rationals(self.coeffs)))
        out.update({"mu0": format_rational(self.mu0), "n": self.n, "k": self.k})
        if self.command in ("verify", "report"):
            out["checks"] = list(self.checks)
        return out


class Session:
    """Moments and factorization for one config, computed once and shared by
    every check."""

    def __init__(self, cfg: RunConfig, order: int):
        self.cfg = cfg
        self.p = validate_pearson(*cfg.coeffs, range_N=2 * order)
        self.m = generate_moments(self.p, cfg.mu0, order)
        self.state = None
        self.failure = None
        st = cholesky_init(self.m)
        try:
            for _ in range(order):
                st = cholesky_extend(st, self.m)
        except QuasiDefiniteViolation as exc:
            self.failure = exc
        self.state = st


def _check(status, index=None, message=None, **extra):
    out = {"pass": status == "pass", "status": status, "first_failing_index": index}
    if message:
        out["message"] = message
    out.update(extra)
    return out


def _first(pred, indices):
    return next((i for i in indices if not pred(i)), None)


def run_checks(cfg: RunConfig, s: Session, report: dict):
    n, K = cfg.n, cfg.depth
    p, m = s.p, s.m
    checks = {}
    have_chol = s.failure is None
    st = s.state
    for name in cfg.checks:
        if name == "recurrence":
            bad = first_recurrence_failure(m)
            ok = bad is None and check_moment_kernel(p, m)
            checks[name] = _check("pass" if ok else "fail", bad)
            continue
        if name == "cholesky":
            if not have_chol:
                checks[name] = _check("fail", s.failure.order, str(s.failure))
            else:
                ok = verify_factorization(st, build_gram(m, st.order)) and det_ratio_check(st, m)
                checks[name] = _check("pass" if ok else "fail")
            continue
        if name == "selfadjoint":
            bad = _first(lambda j: check_self_adjoint(p, build_gram(m, j)), range(n + 1))
            checks[name] = _check("pass" if bad is None else "fail", bad)
            continue
        if name == "ngn":
            bad = _first(lambda j: ch.ngn_check(m, p, j), range(n))
            checks[name] = _check("pass" if bad is None else "fail", bad)
            continue
        if not have_chol:
            checks[name] = _check("skipped", message=f"requires cholesky ({s.failure})")
            continue
        if name == "bochner":
            rep = ch.bochner_verify(st.truncate(n), p)
            report["lambda"] = _rationals(rep.eigenvalues)
            checks[name] = _check("pass" if rep.ok else "fail", rep.first_failure)
        elif name == "hahn":
            sig = sigma_chain(m, K, check=False)
            norms = {}
            bad = None
            for depth in range(1, K + 1):
                db = ch.hahn_basis(st, p, depth, n)
                norms[str(depth)] = _rationals(db.h)
                if bad is None and not ch.hahn_verify(db, build_gram(sig[depth], n)):
                    bad = depth
            checks[name] = _check("pass" if bad is None else "fail", bad, h_derived=norms)
        elif name in ("struct1", "struct2"):
            if n < 2:
                checks[name] = _check("skipped", message="needs --n >= 2")
                continue
            try:
                if name == "struct1":
                    fs = ch.first_structure(m, st, p, n)
                    checks[name] = _check(
                        "pass", triples=[_rationals(t) for t in fs.triples],
                        psi_hat=_rationals((fs.d_hat, fs.e_hat)))
                else:
                    ss = ch.second_structure(m, st, p, n)
                    checks[name] = _check(
                        "pass", pairs=[_rationals(t) for t in ss.pairs],
                        phi_hat=_rationals(ss.phi_hat), psi_hat=_rationals(ss.psi_hat),
                        t=format_rational(ss.t))
            except StructureViolation as exc:
                checks[name] = _check("fail", exc.index, str(exc))
        elif name == "rodrigues":
            varpi, bad = [], None
            for k in range(1, min(K, n) + 1):
                rep = ch.rodrigues_verify(m, st, p, n, k)
                varpi.append(format_rational(rep.varpi))
                if bad is None and not rep.passed:
                    bad = k
            report["varpi"] = varpi
            checks[name] = _check("pass" if bad is None else "fail", bad)
    report["checks"] = checks
    return all(c["status"] != "fail" for c in checks.values())


def _polys(st, n, k):
    P = extract_polynomials(st)
    out = {"P": [str(q) for q in P[:n + 1]]}
    for depth in range(1, k + 1):
        out[f"Q{depth}"] = [str(q) for q in derivative_family(P[:n + depth + 1], depth)]
    return out


def execute(cfg: RunConfig) -> tuple:
    """Run one command; returns ``(report, ok)``."""
    t0 = time.perf_counter()
    report = {"config": cfg.echo()}
    ok = True
    n, K = cfg.n, cfg.depth
    if cfg.command == "gen":
        p = validate_pearson(*cfg.coeffs, range_N=2 * (n + cfg.k))
        m = generate_moments(p, cfg.mu0, n + cfg.k)
        base = m.truncated(2 * n + 1)
        report["moments"] = _rationals(base)
        if cfg.k:
            chain = sigma_chain(m, cfg.k)
            report["sigma"] = {str(i): _rationals(chain[i].values[:2 * n + 1])
                               for i in range(1, cfg.k + 1)}
    elif cfg.command == "factor":
        s = Session(cfg, n)
        report["moments"] = _rationals(s.m)
        report["h"] = _rationals(s.state.h)
        report["s"] = [_rationals(row) for row in s.state.upper()]
        if s.failure is not None:
            report["error"] = str(s.failure)
            ok = False
    elif cfg.command == "polys":
        s = Session(cfg, n + cfg.k)
        if s.failure is not None:
            report["error"] = str(s.failure)
            ok = False
        else:
            report["polynomials"] = _polys(s.state, n, cfg.k)
    else:
        s = Session(cfg, n + K)
        report["moments"] = _rationals(s.m.values[:2 * n + 1])
        if cfg.command == "report":
            chain = sigma_chain(s.m, K, check=False)
            report["sigma"] = {str(i): _rationals(chain[i].values[:2 * n + 1])
                               for i in range(1, K + 1)}
        report["h"] = _rationals(s.state.h[:n + 1])
        report["lambda"] = _rationals(s.p.eigenvalue(j) for j in range(n + 1))
        ok = run_checks(cfg, s, report)
        if cfg.command == "report" and s.failure is None:
            report["polynomials"] = _polys(s.state, n, 0)["P"]
        report.setdefault("varpi", [])
        report["status"] = "pass" if ok else "fail"
    if cfg.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    return report, ok


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        return _render_csv(report)
    return _render_text(report)


def _table_rows(report):
    rows = []
    if "moments" in report:
        rows.append(["mu"] + report["moments"])
    for lvl, vals in report.get("sigma", {}).items():
        rows.append([f"sigma{lvl}"] + vals)
    for key in ("h", "lambda", "varpi"):
        if report.get(key):
            rows.append([key] + report[key])
    for name, c in report.get("checks", {}).items():
        rows.append([f"check:{name}", c["status"]])
    polys = report.get("polynomials")
    if isinstance(polys, list):
        polys = {"P": polys}
    for fam, qs in (polys or {}).items():
        rows.append([fam] + qs)
    return rows


def _render_csv(report):
    rows = _table_rows(report)
    width = max((len(r) for r in rows), default=1) - 1
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name"] + [str(i) for i in range(width)])
    for r in rows:
        w.writerow(r + [""] * (width + 1 - len(r)))
    return buf.getvalue()


def _render_text(report):
    lines = []
    if "moments" in report:
        lines.append("mu = [" + ", ".join(report["moments"]) + "]")
    for lvl, vals in report.get("sigma", {}).items():
        lines.append(f"sigma^({lvl}) = [" + ", ".join(vals) + "]")
    for key in ("h", "lambda", "varpi"):
        if report.get(key):
            lines.append(f"{key} = [" + ", ".join(report[key]) + "]")
    if "s" in report:
        lines.append("S^T =")
        lines += ["  [" + ", ".join(row) + "]" for row in report["s"]]
    polys = report.get("polynomials")
    if isinstance(polys, list):
        polys = {"P": polys}
    for fam, qs in (polys or {}).items():
        for j, q in enumerate(qs):
            name = f"P_{j}" if fam == "P" else f"Q^({fam[1:]})_{j}"
            lines.append(f"{name} = {q}")
    for name, c in report.get("checks", {}).items():
        line = f"{name}: {c['status']}"
        if c.get("first_failing_index") is not None:
            line += f" at index {c['first_failing_index']}"
        if c.get("message"):
            line += f" ({c['message']})"
        lines.append(line)
    if "error" in report:
        lines.append(report["error"])
    if "status" in report:
        lines.append(f"overall: {report['status']}")
    if "timing" in report:
        lines.append(f"time: {report['timing']['seconds']}s")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig(args)
        report, ok = execute(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ClassicalSeqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT if isinstance(exc, InputError) else EXIT_FAIL
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    except Exception as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = render(report, cfg.format)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        if "status" in report:
            print(f"overall: {report['status']}")
    else:
        sys.stdout.write(text)
    if not ok and "error" in report:
        print(report["error"], file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
