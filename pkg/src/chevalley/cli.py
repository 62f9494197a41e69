"""Command-line entry point: build systems, verify instances, emit JSON.

Output is deterministic (sorted keys, no unseeded randomness); exit
codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from .badprimes import coker_eta, regular_counterexample_report
from .corpus import run_corpus, standard_corpus
from .fields import FunctionField, PrimeField, RationalField
from .gradedmap import (block_report, check_kernel, graded_ad, lattice_image,
                        verify_phi_inverse, verify_rrao)
from .grading import grade
from .lie import LieElement, root_vector, structure_constants
from .optimality import brute_force_verify, kirwan_ness_torus_check, optimal_cocharacter
from .rootsystem import build

USAGE_ERROR = 2
VERIFY_ERROR = 1

_COEFF_RE = re.compile(r"^(-?\d+)?(?:\*?t(?:\^(\d+))?)?$")


def _parse_type(args) -> str:
    if args.type is None:
        raise ValueError("--type is required")
    t = args.type
    if args.rank is not None:
        t = f"{t}{args.rank}"
    return t


def _parse_support(rs, text: str):
    """Tokens like a1,a2 or a1+a2=3; returns (roots, coefficient strings)."""
    if text is None:
        raise ValueError("--support is required")
    roots, coeffs = [], []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if "=" in token:
            root_part, coeff = token.split("=", 1)
        else:
            root_part, coeff = token, "1"
        total = [0] * rs.rank
        for name in root_part.split("+"):
            name = name.strip()
            if not name.startswith("a"):
                raise ValueError(f"bad simple-root name {name!r}")
            i = int(name[1:])
            if not 1 <= i <= rs.rank:
                raise ValueError(f"simple root index out of range in {name!r}")
            total[i - 1] += 1
        if tuple(total) not in rs.root_index:
            raise ValueError(f"{root_part!r} is not a root of {rs.type_string()}")
        roots.append(tuple(total))
        coeffs.append(coeff)
    if not roots:
        raise ValueError("empty support")
    return roots, coeffs


def _coeff_to_field(field, coeff: str):
    if isinstance(field, FunctionField):
        m = _COEFF_RE.match(coeff.replace(" ", ""))
        if not m:
            raise ValueError(f"cannot parse coefficient {coeff!r} over GF(q)(t)")
        c = int(m.group(1)) if m.group(1) else 1
        if "t" in coeff:
            e = int(m.group(2)) if m.group(2) else 1
            return field.poly([0] * e + [c])
        return field.element(c)
    if isinstance(field, RationalField):
        return field.element(Fraction(coeff))
    return field.element(int(coeff))


def _element(rs, field, roots, coeffs) -> LieElement:
    Y = LieElement(field)
    for r, c in zip(roots, coeffs):
        Y = Y + root_vector(rs, field, rs.root_index[r], _coeff_to_field(field, c))
    if Y.is_zero():
        raise ValueError("support collapsed to zero over the chosen field")
    return Y


def _emit(payload: dict, out_path: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    print(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _cert_payload(cert) -> dict:
    return cert.to_json()


def cmd_roots(args):
    rs = build(_parse_type(args), args.isogeny)
    return rs.to_json(), 0


def cmd_constants(args):
    rs = build(_parse_type(args), args.isogeny)
    sc = structure_constants(rs)
    payload = sc.to_json()
    payload["max_abs_n"] = sc.max_abs_n()
    return payload, 0


def cmd_grade(args):
    rs = build(_parse_type(args), args.isogeny)
    roots, coeffs = _parse_support(rs, args.support)
    q = RationalField()
    cert = optimal_cocharacter(rs, _element(rs, q, roots, coeffs))
    report = grade(rs, cert.lam)
    return {"certificate": _cert_payload(cert), "grading": report.to_json()}, 0


def cmd_optimal(args):
    rs = build(_parse_type(args), args.isogeny)
    roots, coeffs = _parse_support(rs, args.support)
    q = RationalField()
    Y = _element(rs, q, roots, coeffs)
    cert = optimal_cocharacter(rs, Y)
    code = 0
    if args.box_radius:
        bf = brute_force_verify(rs, Y, cert, args.box_radius)
        cert.brute_force_checked = bf
        code = 0 if bf["ok"] else VERIFY_ERROR
    payload = _cert_payload(cert)
    payload["torus_check"] = kirwan_ness_torus_check(rs, Y, cert.lam)
    return payload, code


def cmd_kernel_check(args):
    rs = build(_parse_type(args), args.isogeny)
    sc = structure_constants(rs)
    roots, coeffs = _parse_support(rs, args.support)
    q = RationalField()
    Y = _element(rs, q, roots, coeffs)
    cert = optimal_cocharacter(rs, Y)
    payload = {"certificate": _cert_payload(cert), "fields": {}}
    ok = True
    gbm = graded_ad(rs, sc, Y, cert.lam, cert.k)
    kern = check_kernel(q, gbm)
    payload["fields"]["Q"] = {str(i): kern[i] for i in sorted(kern)}
    ok = ok and all(v["injective"] for v in kern.values())
    if args.prime:
        fp = PrimeField(args.prime)
        Yp = _element(rs, fp, roots, coeffs)
        kern_p = check_kernel(fp, graded_ad(rs, sc, Yp, cert.lam, cert.k))
        payload["fields"][f"F{args.prime}"] = {str(i): kern_p[i] for i in sorted(kern_p)}
        ok = ok and all(v["injective"] for v in kern_p.values())
    payload["all_injective"] = ok
    return payload, 0 if ok else VERIFY_ERROR


def cmd_phi(args):
    rs = build(_parse_type(args), args.isogeny)
    sc = structure_constants(rs)
    roots, coeffs = _parse_support(rs, args.support)
    field = RationalField(args.prime or 2)
    Y = _element(rs, field, roots, coeffs)
    cert = optimal_cocharacter(rs, Y)
    payload = {"certificate": _cert_payload(cert)}
    payload.update(block_report(rs, sc, Y, cert.lam, cert.k, field))
    return payload, 0


def cmd_rrao_check(args):
    rs = build(_parse_type(args), args.isogeny)
    sc = structure_constants(rs)
    roots, coeffs = _parse_support(rs, args.support)
    field = RationalField(args.prime or 2)
    Y = _element(rs, field, roots, coeffs)
    cert = optimal_cocharacter(rs, Y)
    rng = random.Random(args.seed)
    degree_k = [ri for ri in range(len(rs.roots))
                if rs.pair(rs.roots[ri], cert.lam) == cert.k]
    p = field.residue_cardinality
    trials, failures = [], 0
    for t in range(args.trials):
        X = LieElement(field)
        for ri in degree_k:
            if rng.random() < 0.8:
                c = field.element(rng.randint(1, 9)) * field.element(p) ** rng.randint(0, 2)
                X = X + root_vector(rs, field, ri, c)
        v = tuple(rng.randint(-3, 3) for _ in range(rs.rank))
        if X.is_zero():
            continue
        ok_rrao = verify_rrao(rs, sc, X, cert.lam, cert.k, v)
        ok_inv = verify_phi_inverse(rs, sc, X, cert.lam, cert.k)
        if not (ok_rrao and ok_inv):
            failures += 1
        trials.append({"trial": t, "rrao": ok_rrao, "inverse": ok_inv,
                       "v": list(v)})
    payload = {"certificate": _cert_payload(cert), "trials": trials,
               "failures": failures, "ok": failures == 0}
    return payload, 0 if failures == 0 else VERIFY_ERROR


def cmd_snf(args):
    rs = build(_parse_type(args), args.isogeny)
    sc = structure_constants(rs)
    roots, coeffs = _parse_support(rs, args.support)
    field = FunctionField(args.q or 2)
    Y = _element(rs, field, roots, coeffs)
    q0 = RationalField()
    cert = optimal_cocharacter(rs, _element(rs, q0, roots, ["1"] * len(roots)))
    m = args.trunc_m or 4
    divisors = {}
    for i in range(1, cert.k):
        vals = lattice_image(rs, sc, Y, cert.lam, cert.k, i, m)
        divisors[str(i)] = ["inf" if v is None else v for v in vals]
    payload = {"certificate": _cert_payload(cert), "q": field.residue_cardinality,
               "trunc_m": m, "divisor_valuations": divisors}
    return payload, 0


def cmd_counterexample(args):
    rs = build(_parse_type(args), args.isogeny)
    sc = structure_constants(rs)
    if not args.prime:
        raise ValueError("--prime is required")
    payload = regular_counterexample_report(rs, sc, args.prime)
    payload["coker_divisors"] = coker_eta(rs)
    return payload, 0


def cmd_corpus(args):
    if args.corpus:
        with open(args.corpus, "r", encoding="utf-8") as fh:
            corpus = json.load(fh)
    else:
        corpus = standard_corpus()
    report = run_corpus(corpus)
    return report, 0 if report["ok"] else VERIFY_ERROR


COMMANDS = {
    "roots": cmd_roots,
    "constants": cmd_constants,
    "grade": cmd_grade,
    "optimal": cmd_optimal,
    "kernel-check": cmd_kernel_check,
    "phi": cmd_phi,
    "rrao-check": cmd_rrao_check,
    "snf": cmd_snf,
    "counterexample": cmd_counterexample,
    "corpus": cmd_corpus,
}


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chevalley",
        description="Exact computations in Chevalley-basis Lie algebras: "
                    "gradings, optimal cocharacters, kernel checks, phi.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--type", help="Cartan type, e.g. A2 or A2xA1")
        p.add_argument("--rank", type=int, help="rank, when --type is a bare series letter")
        p.add_argument("--isogeny", choices=["simply_connected", "adjoint"],
                       default="simply_connected")
        p.add_argument("--support", help="e.g. a1,a2 or a1+a2=3")
        p.add_argument("--prime", type=int, help="prime for mod-p / p-adic computations")
        p.add_argument("--q", type=int, help="residue cardinality for GF(q)(t)")
        p.add_argument("--trunc-m", dest="trunc_m", type=int, help="lattice truncation level")
        p.add_argument("--box-radius", dest="box_radius", type=int,
                       help="brute-force verification box radius")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
        p.add_argument("--trials", type=int, default=20, help="number of randomized trials")
        p.add_argument("--corpus", help="corpus JSON file")
        p.add_argument("--out", help="also write the JSON report to this path")
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = COMMANDS[args.command](args)
    except (ValueError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return USAGE_ERROR
    _emit(payload, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
