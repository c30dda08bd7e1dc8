"""Command-line front end: normalization queries, verification suites,
confluence checks, machine-readable reports.

Exit codes: 0 all checks passed, 1 at least one failure or error, 2 usage
error (unknown suite/presentation, malformed expression, bad flags).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import calculus, hopf, liealg, rmatrix
from .catalog import get_catalog
from .errors import QdcError, UnknownSuiteError
from .kernel import check_local_confluence, format_element, normalize
from .parser import parse_expression
from .report import SuiteReport, timed_check

_CONFLUENCE_DEGREES = (
    ("A_glq11", 4), ("A_hat", 4), ("Omega", 5), ("Omega_loc", 4),
    ("Forms", 4), ("LieAlg", 4), ("A_q", 4), ("A_q_dual", 4),
    ("Planes_diff", 4),
)


def _suite_relations(cat):
    out = []
    out.extend(calculus.verify_family("relations_2", cat))
    out.extend(calculus.verify_family("relations_17", cat))
    out.extend(calculus.verify_family("dT_relations", cat))
    out.extend(calculus.d_on_relations_checks(cat))
    out.extend(calculus.d_squared_checks(cat))
    return out


def _suite_ansatz(cat):
    return calculus.ansatz_checks(cat)


def _suite_inverse(cat):
    out = []
    out.extend(calculus.verify_family("T_unit", cat))
    out.extend(calculus.verify_family("T_inverse", cat))
    out.extend(calculus.verify_family("inverse_differential", cat))
    out.extend(calculus.localized_rule_checks(cat))
    return out


def _suite_forms(cat):
    out = []
    loc = cat.presentation("Omega_loc")
    for name, want in (("w1", 1), ("u", 0), ("w2", 1), ("v", 0)):
        def fn(name=name, want=want):
            got = loc.element_parity(normalize(loc.defined[name], loc))
            return None if got == want else f"parity {got}, expected {want}"
        out.append(timed_check(f"forms.parity_{name}",
                               f"one-form composite {name} has parity {want}",
                               "(32)", fn))
    out.extend(calculus.verify_family("T_forms", cat))
    out.extend(calculus.verify_family("forms", cat))
    out.extend(calculus.verify_family("forms_to_dT", cat))
    return out


def _suite_structure(cat):
    return calculus.verify_structure_equations(cat)


def _suite_superalgebra(cat):
    out = []
    out.extend(liealg.verify_superalgebra(cat))
    out.extend(liealg.verify_xy_basis(cat))
    out.extend(liealg.verify_cross_relations_consistency(cat))
    out.extend(liealg.classical_limit_checks())
    return out


def _suite_hopf(cat):
    return hopf.verify_hopf_axioms(cat)


def _suite_central(cat):
    out = []
    out.extend(hopf.verify_central_element(cat))
    out.extend(calculus.localized_rule_checks(cat, only_dgamma=True))
    return out


def _suite_rmatrix(cat):
    out = list(rmatrix.check_hecke_braid(cat).checks)
    for eq in ("53", "54", "55", "56", "57"):
        out.extend(rmatrix.verify_rtt_family(eq, cat))
    return out


def _suite_plane(cat):
    return rmatrix.verify_plane_covariance(cat)


def _suite_confluence(cat):
    out = []
    for name, degree in _CONFLUENCE_DEGREES:
        p = cat.presentation(name)

        def fn(p=p, degree=degree):
            rep = check_local_confluence(p, degree)
            if rep.failures:
                w = rep.failures[0][0]
                return f"{len(rep.failures)} failing overlaps, first at {'*'.join(w)}"
            return None

        out.append(timed_check(
            f"confluence.{name}",
            f"local confluence of {name} to degree {degree}",
            "diamond", fn))
    return out


SUITES = {
    "relations": _suite_relations,
    "ansatz": _suite_ansatz,
    "inverse": _suite_inverse,
    "forms": _suite_forms,
    "structure": _suite_structure,
    "superalgebra": _suite_superalgebra,
    "hopf": _suite_hopf,
    "central": _suite_central,
    "rmatrix": _suite_rmatrix,
    "plane": _suite_plane,
    "confluence": _suite_confluence,
}

_ALL_ORDER = ("relations", "ansatz", "inverse", "forms", "structure",
              "superalgebra", "hopf", "central", "rmatrix", "plane",
              "confluence")


def run_suite(name, q0=None, fmt="text"):
    """Execute a named suite; returns the (order-stable) SuiteReport."""
    if name != "all" and name not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; have {['all', *SUITES]}"
        )
    cat = get_catalog(q0)
    report = SuiteReport(name)
    suites = _ALL_ORDER if name == "all" else (name,)
    for s in suites:
        report.checks.extend(SUITES[s](cat))
    report = report.sorted()
    if q0 is not None:
        for c in report.checks:
            c.description += f" [numeric shadow at q = {q0}]"
    return report


def main(argv=None):
    ap = argparse.ArgumentParser(
        prog="qdc",
        description="Exact verification kernel for the q-deformed "
                    "differential calculus on the quantum supergroup.",
    )
    sub = ap.add_subparsers(dest="command")

    ap_norm = sub.add_parser("normalize", help="reduce an expression to normal form")
    ap_norm.add_argument("--presentation", required=True)
    ap_norm.add_argument("expression")

    ap_verify = sub.add_parser("verify", help="run a verification suite")
    ap_verify.add_argument("--suite", required=True)
    ap_verify.add_argument("--q", default=None,
                           help="substitute an exact rational for q "
                                "(numeric shadow; weaker than symbolic)")
    ap_verify.add_argument("--format", choices=("text", "json"), default="text")

    ap_conf = sub.add_parser("confluence", help="check local confluence")
    ap_conf.add_argument("--presentation", required=True)
    ap_conf.add_argument("--max-degree", type=int, required=True)

    sub.add_parser("list", help="list presentations, suites and families")

    args = ap.parse_args(argv)
    if args.command is None:
        ap.print_help()
        return 2
    try:
        return _dispatch(args)
    except QdcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args):
    if args.command == "normalize":
        cat = get_catalog()
        p = cat.presentation(args.presentation)
        el = parse_expression(args.expression, p)
        print(format_element(normalize(el, p), p))
        return 0

    if args.command == "verify":
        q0 = Fraction(args.q) if args.q is not None else None
        if q0 == 0:
            raise QdcError("q = 0 is outside the coefficient ring")
        report = run_suite(args.suite, q0=q0, fmt=args.format)
        if args.format == "json":
            print(report.to_json())
        else:
            if q0 is not None:
                print(f"# numeric shadow at q = {q0}: a passing run is "
                      f"necessary, not sufficient; the symbolic run is "
                      f"the authoritative one")
            print(report.to_text())
        return 0 if report.ok else 1

    if args.command == "confluence":
        cat = get_catalog()
        p = cat.presentation(args.presentation)
        rep = check_local_confluence(p, args.max_degree)
        print(f"{p.name}: checked {rep.words_checked} words to degree "
              f"{rep.max_degree}; {rep.ambiguous} ambiguous, "
              f"{len(rep.failures)} failing overlaps")
        for w, nf1, nf2 in rep.failures[:10]:
            print(f"  overlap {'*'.join(w)}:")
            print(f"    {format_element(nf1, p)}")
            print(f"    {format_element(nf2, p)}")
        return 0 if rep.ok else 1

    if args.command == "list":
        cat = get_catalog()
        print("presentations:")
        for n in cat.names():
            p = cat.presentation(n)
            print(f"  {n}: {len(p.generators)} generators, {len(p.rules)} rules")
        print("suites:", ", ".join(["all", *SUITES]))
        print("identity families:")
        for fam, pname in sorted(cat.all_families().items()):
            print(f"  {fam} ({pname})")
        return 0
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
