"""Command-line front end.

    parketaylor matrix --n 5 [--out FILE]
    parketaylor verify --suite {toric,lifts,moduli,conjecture,full} --n N [budgets] [--opt-in-long]
    parketaylor export {ideal,lifts,matrix} --n N [--format {canonical,cas-script}] [--out FILE]

Exit codes: 0 every required verdict passed, 1 a required verdict failed,
2 invalid arguments, 3 a required item ran out of budget.
"""

from __future__ import annotations

import argparse
import resource
import sys
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from . import __version__
from .groebner import Budget, BudgetExceeded, cas_script, minimal_generators_by_degree, projective_degree_and_dim
from .linalg import rank
from .ptcore import build_matrix, parse_z_poly, vanishes_on_pt, vanishes_on_torus
from .toric import (
    adjacency_balanced,
    check_conjecture,
    expected_kernel_rank,
    kernel_basis,
    kernel_binomials,
    toric_ideal,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

SUITES = ("toric", "lifts", "moduli", "conjecture", "full")

# (suite, n) pairs that need --opt-in-long
LONG = {
    ("toric", 6),
    ("toric", 7),
    ("toric", 8),
    ("lifts", 6),
    ("conjecture", 8),
    ("conjecture", 9),
}


class UsageError(ValueError):
    pass


@dataclass
class Verdict:
    name: str
    claim: str
    passed: bool | None  # None: skipped or out of budget
    value: str = ""
    required: bool = True
    status: str = ""  # "", "skipped", "budget-exceeded"

    def line(self) -> str:
        if self.status:
            state = self.status
        else:
            state = "pass" if self.passed else "FAIL"
        req = "required" if self.required else "info"
        return f"{state:15s} {req:8s} {self.name}: {self.value}  [{self.claim}]"


@dataclass
class RunReport:
    command: str
    parameters: dict
    verdicts: list[Verdict] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    artifacts: list[str] = field(default_factory=list)

    def exit_code(self) -> int:
        req = [v for v in self.verdicts if v.required]
        if any(v.passed is False for v in req):
            return EXIT_FAIL
        if any(v.status == "budget-exceeded" for v in req):
            return EXIT_BUDGET
        return EXIT_OK

    def dumps(self) -> str:
        out = [f"command = {self.command}", f"version = {__version__}"]
        for k in sorted(self.parameters):
            out.append(f"param.{k} = {self.parameters[k]}")
        for v in self.verdicts:
            out.append(f"verdict {v.line()}")
        for k, t in self.timings.items():
            out.append(f"time.{k} = {t:.3f}s")
        for a in self.artifacts:
            out.append(f"artifact = {a}")
        out.append(f"exit = {self.exit_code()}")
        return "\n".join(out) + "\n"


class Runner:
    def __init__(self, report: RunReport, seconds: float | None, max_bytes: int | None, long_ok: bool):
        self.report = report
        self.seconds = seconds
        self.max_bytes = max_bytes
        self.long_ok = long_ok

    def budget(self) -> Budget:
        return Budget(seconds=self.seconds)

    def run(self, name: str, claim: str, fn: Callable[[], tuple[bool, str]], *, required=True, long=False):
        if long and not self.long_ok:
            self.report.verdicts.append(Verdict(name, claim, None, "needs --opt-in-long", required, "skipped"))
            return
        t = time.perf_counter()
        try:
            ok, value = fn()
            status = ""
        except BudgetExceeded as exc:
            ok, value, status = None, str(exc), "budget-exceeded"
        self.report.timings[name] = time.perf_counter() - t
        if self.max_bytes is not None and status == "":
            peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss * 1024
            if peak > self.max_bytes:
                ok, value, status = None, f"peak memory {peak} bytes over {self.max_bytes}", "budget-exceeded"
        self.report.verdicts.append(Verdict(name, claim, ok, value, required, status))


# ---------------------------------------------------------------------------
# suites

TORIC_CUBIC_5 = "z12354*z12435*z12543 - z12345*z12453*z12534"
QUARTIC_6 = "z123654*z124536*z125463*z126345 - z123645*z124563*z125436*z126354"


def suite_toric(r: Runner, n: int) -> None:
    def matrix_rank():
        k = rank(build_matrix(n))
        return k == comb(n - 1, 2) - 1, f"rank {k}"

    r.run(f"rank A_{n}", "A_n has rank C(n-1,2)-1", matrix_rank)

    def kernel_rank():
        k = kernel_basis(n).rank
        return k == expected_kernel_rank(n), f"kernel rank {k}"

    r.run(f"kernel rank n={n}", "kernel rank (n-2)! - C(n-1,2) + 1", kernel_rank)

    def binomials_ok():
        bs = kernel_binomials(n)
        ok = all(adjacency_balanced(b) and vanishes_on_torus(b.polynomial(n)) for b in bs)
        return ok, f"{len(bs)} binomials balanced and vanishing on T_n"

    r.run(f"kernel binomials n={n}", "kernel binomials lie in I(T_n)", binomials_ok)

    if n == 5:

        def principal():
            I = toric_ideal(5, r.budget())
            gb = I.groebner()
            cubic = parse_z_poly(TORIC_CUBIC_5, 5)
            ok = len(gb) == 1 and I.equals(type(I)([cubic], I.ring))
            return ok, f"{len(gb)} generator(s)"

        r.run("toric ideal n=5", "I(T_5) is principal, generated by the cubic", principal)
    elif n == 6:

        def mingens():
            I = toric_ideal(6, r.budget())
            if I.flags.get("budget_exceeded"):
                raise BudgetExceeded(I.flags.get("reason", "toric ideal out of budget"))
            counts = minimal_generators_by_degree(I, 4).counts
            q = parse_z_poly(QUARTIC_6, 6)
            from .groebner import Ideal

            sub = Ideal([b.polynomial(6) for b in kernel_binomials(6)], I.ring)
            ok = dict(counts) == {2: 24, 3: 164, 4: 6} and q in I and q not in sub
            return ok, f"minimal generators {dict(counts)}"

        r.run("toric ideal n=6", "I(T_6) minimal generators 24/164/6", mingens, long=True)
    elif n >= 7:
        r.run(
            f"toric ideal n={n}",
            "minimal generators of I(T_n) beyond desk scale",
            lambda: (_ for _ in ()).throw(BudgetExceeded("beyond the coordinate cap of the saturation engine")),
            required=False,
            long=True,
        )


def suite_lifts(r: Runner, n: int) -> None:
    from .lifts import closed_pt_ideal, open_pt_generators, plucker_lifts

    def certified():
        ls = plucker_lifts(n)
        ok = all(vanishes_on_pt(lr.F) for lr in ls)
        return ok, f"{len(ls)} lifts certified"

    r.run(f"lifts n={n}", "each lift pulls back to a monomial times its Pluecker relation", certified)

    def open_gens():
        I = open_pt_generators(n)
        return all(vanishes_on_pt(g) for g in I.gens), f"{len(I.gens)} generators vanish on PT_{n}"

    r.run(f"open generators n={n}", "binomials and lifts vanish on PT_n", open_gens)

    if n == 5:

        def closed5():
            I = closed_pt_ideal(5, r.budget())
            dim, deg = projective_degree_and_dim(I)
            quad = all(g.degree() == 2 for g in I.groebner())
            return (dim, deg) == (2, 5) and quad, f"dim {dim}, degree {deg}, quadratic GB {quad}"

        r.run("closed ideal n=5", "PT_5 has dimension 2 and degree 5", closed5)
    elif n == 6:

        def closed6():
            I = closed_pt_ideal(6, r.budget())
            if I.flags.get("budget_exceeded"):
                raise BudgetExceeded(I.flags.get("reason", "closed ideal out of budget"))
            counts = minimal_generators_by_degree(I, 2).counts
            dim, deg = projective_degree_and_dim(I)
            return counts.get(2) == 175 and deg == 61, f"{counts.get(2)} quadrics, dim {dim}, degree {deg}"

        r.run("closed ideal n=6", "PT_6 has 175 quadratic generators and degree 61", closed6, long=True)


def suite_moduli(r: Runner, n: int) -> None:
    from .moduli import build_L, degree_formula, lc_ideal, pull_to_pt, verify_linear_iso, verify_lower_order_ideal

    def lower():
        L = build_L(n)
        bad = [k for k, S in L.items() if not verify_lower_order_ideal(S).ok]
        return not bad, f"{len(L) - len(bad)}/{len(L)} supports are lower order ideals"

    r.run(f"supports n={n}", "support sets are lower order ideals in the weak order", lower)

    def iso():
        rep = verify_linear_iso(n)
        return rep.ok, f"{rep.pairs - len(rep.failures)}/{rep.pairs} pairs"

    r.run(f"linear iso n={n}", "L_n identifies PT_n with LC_n", iso, long=n >= 8)

    if n in (5, 6):
        target = {5: 5, 6: 61}[n]

        def degree():
            d = degree_formula(n)
            return d == target, f"degree {d}"

        r.run(f"degree formula n={n}", f"degree of PT_{n} is {target}", degree)

    if n == 5:
        from .lifts import closed_pt_ideal

        def lc():
            I = lc_ideal(5)
            ok = pull_to_pt(I).equals(closed_pt_ideal(5, r.budget()))
            return ok, "L_5 pulls I(LC_5) back to I(PT_5)" if ok else "ideals differ"

        r.run("log canonical n=5", "L_5 sends I(LC_5) to I(PT_5)", lc)


def suite_conjecture(r: Runner, n: int) -> None:
    def fam():
        rep = check_conjecture(n, "families")
        return rep.verdict, (
            f"span {rep.span_rank}/{rep.kernel_rank}, saturated {rep.saturated}, index {rep.index}"
        )

    r.run(
        f"quadratic families n={n}",
        "the two quadratic families span the integer kernel",
        fam,
        long=(("conjecture", n) in LONG),
    )

    def quads():
        rep = check_conjecture(n, "quadratics")
        return rep.verdict, f"span {rep.span_rank}/{rep.kernel_rank}, saturated {rep.saturated}"

    r.run(
        f"all quadratic binomials n={n}",
        "the quadratic part of I(T_n) spans the integer kernel",
        quads,
        required=False,
        long=(("conjecture", n) in LONG),
    )


SUITE_FUNCS = {
    "toric": (suite_toric, 5),
    "lifts": (suite_lifts, 5),
    "moduli": (suite_moduli, 5),
    "conjecture": (suite_conjecture, 6),
}


def cmd_verify(suite: str, n: int, seconds=None, max_bytes=None, long_ok=False) -> RunReport:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    report = RunReport("verify", {"suite": suite, "n": n, "opt_in_long": long_ok})
    r = Runner(report, seconds, max_bytes, long_ok)
    names = ["toric", "lifts", "moduli", "conjecture"] if suite == "full" else [suite]
    for s in names:
        fn, lo = SUITE_FUNCS[s]
        if n < lo:
            if suite == "full":
                continue
            raise UsageError(f"suite {s} needs n >= {lo}")
        fn(r, n)
    return report


# ---------------------------------------------------------------------------
# artifacts


def cmd_matrix(n: int) -> str:
    if not 4 <= n <= 10:
        raise UsageError(f"matrix needs 4 <= n <= 10, got {n}")
    return build_matrix(n).dumps()


def cmd_export(obj: str, n: int, fmt: str = "canonical") -> str:
    if obj == "matrix":
        if fmt != "canonical":
            raise UsageError("matrices are exported in canonical form only")
        return cmd_matrix(n)
    if n < 5:
        raise UsageError(f"{obj} export needs n >= 5, got {n}")
    from .lifts import lift_table, open_pt_generators

    if obj == "lifts":
        if fmt == "canonical":
            return "\n".join(lift_table(n)) + "\n"
        I = open_pt_generators(n)
        k = len(kernel_binomials(n))
        from .groebner import Ideal

        return cas_script(Ideal(I.gens[k:], I.ring), name="L")
    if obj == "ideal":
        I = open_pt_generators(n)
        if fmt == "canonical":
            return I.dumps()
        return cas_script(I, saturate_by_product=True)
    raise UsageError(f"unknown export object {obj!r}")


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="parketaylor", description="Exact computations on Parke-Taylor varieties.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    m = sub.add_parser("matrix", help="write the adjacency matrix A_n")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--out")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--budget-seconds", type=float)
    v.add_argument("--budget-bytes", type=int)
    v.add_argument("--opt-in-long", action="store_true")
    v.add_argument("--out")

    e = sub.add_parser("export", help="export an ideal, the lifts or the matrix")
    e.add_argument("object", choices=("ideal", "lifts", "matrix"))
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--format", choices=("canonical", "cas-script"), default="canonical")
    e.add_argument("--out")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    try:
        if args.command == "matrix":
            _write(cmd_matrix(args.n), args.out)
            return EXIT_OK
        if args.command == "export":
            _write(cmd_export(args.object, args.n, args.format), args.out)
            return EXIT_OK
        rep = cmd_verify(args.suite, args.n, args.budget_seconds, args.budget_bytes, args.opt_in_long)
        if args.out:
            rep.artifacts.append(args.out)
        text = rep.dumps()
        _write(text, args.out)
        if args.out:
            sys.stdout.write(text)
        return rep.exit_code()
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
