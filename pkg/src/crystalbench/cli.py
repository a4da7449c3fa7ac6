"""Command-line front end.

Exit codes: 0 success / verification passed, 1 verification mismatch,
2 bad input, insufficient samples or an exceeded size cap or budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import crystal as cr
from .decomp import (decompose_product, lr_coefficient, product_crystal, tau_n,
                     verify_component_isomorphism)
from .ffgeom.checks import InsufficientSamples, hall_check, mflag_check, orbit_check, tensor_check
from .ffgeom.linalg import check_prime
from .ffgeom.subspaces import BudgetExceeded
from .gl2 import Gl2Elem, S2Label, tau2
from .schur import ExactPolynomial, decompose_into_schur, lr_oracle, schur
from .tableaux import crystal_of, levi_restrict, to_text
from .weights import format_weight, pad, parse_partition, parse_weight

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _weight(text: str):
    try:
        return parse_weight(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _primes(text: str) -> list[int]:
    try:
        return [check_prime(int(tok)) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _colors(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad color list {text!r}") from None


def _fit(p, n: int):
    try:
        return pad(p, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, record: dict, text: str) -> None:
    print(json.dumps(record) if args.format == "json" else text)


# ---------------------------------------------------------------- commands


def cmd_lr(args) -> int:
    mu1, mu2, lam = (_fit(p, args.n) for p in (args.mu1, args.mu2, args.lam))
    if sum(lam) != sum(mu1) + sum(mu2):
        raise UsageError(f"size mismatch: |lambda| = {sum(lam)} but |mu1| + |mu2| = "
                         f"{sum(mu1) + sum(mu2)}")
    c = lr_coefficient(mu1, mu2, lam, args.n)
    record = {"mu1": format_weight(mu1), "mu2": format_weight(mu2),
              "lambda": format_weight(lam), "n": args.n, "lr": c}
    code = EXIT_OK
    text = str(c)
    if args.verify:
        oracle = lr_oracle(mu1, mu2, lam, args.n)
        record["oracle"] = oracle
        record["agree"] = oracle == c
        text += f"\noracle {oracle} ({'agree' if oracle == c else 'MISMATCH'})"
        code = EXIT_OK if oracle == c else EXIT_MISMATCH
    _emit(args, record, text)
    return code


def cmd_decompose(args) -> int:
    factors = [_fit(p, args.n) for p in args.factors]
    report = decompose_product(factors, args.n)
    code = EXIT_OK
    if args.verify and not verify_component_isomorphism(report):
        code = EXIT_MISMATCH
    print(report.to_json() if args.format == "json" else report.to_text())
    return code


def cmd_tau2(args) -> int:
    try:
        a = Gl2Elem(args.v1, args.w1, args.r1)
        b = Gl2Elem(args.v2, args.w2, args.r2)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r0, v = tau2(a.v, a.w, a.r, b.v, b.w, b.r)
    label = S2Label(a.w, a.r, b.w, b.r, r0)
    target = Gl2Elem(v, a.w + b.w, r0)
    record = {"r0": r0, "v": v, "s2": str(label), "m2": str(target)}
    _emit(args, record, f"r0={r0} v={v}\n{a} x {b} -> {label} x {target}")
    return EXIT_OK


def cmd_tau(args) -> int:
    mu1, mu2 = _fit(args.mu1, args.n), _fit(args.mu2, args.n)
    c = product_crystal((mu1, mu2), args.n)
    rows = []
    for x in c.elements:
        lam, slot, image = tau_n(mu1, mu2, args.n, x)
        rows.append({"element": [to_text(x[0]), to_text(x[1])], "lambda": format_weight(lam),
                     "slot": slot, "image": to_text(image)})
    if args.format == "json":
        print(json.dumps(rows))
    else:
        for r in rows:
            print(f"{r['element'][0]} (x) {r['element'][1]} -> "
                  f"({r['lambda']}, {r['slot']}) {r['image']}")
    return EXIT_OK


def cmd_restrict(args) -> int:
    lam = _fit(args.lam, args.n)
    c = crystal_of(lam, args.n)
    keep = args.keep or []
    try:
        comps = levi_restrict(c, keep)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [{"head": to_text(h), "weight": format_weight(w), "size": len(m),
             "members": [to_text(t) for t in m]} for w, h, m in comps]
    if args.format == "json":
        print(json.dumps({"lambda": format_weight(lam), "keep": keep, "components": rows}))
    else:
        for r in rows:
            print(f"{r['head']} wt={r['weight']} size={r['size']}: {' '.join(r['members'])}")
    return EXIT_OK


def cmd_crystal(args) -> int:
    c = crystal_of(_fit(args.lam, args.n), args.n)
    if args.format == "dot":
        print(cr.to_dot(c))
    elif args.format == "json":
        print(cr.to_json(c))
    else:
        for a in c.elements:
            print(f"{to_text(a)} wt={format_weight(c.wt(a))}")
    return EXIT_OK


def cmd_schur(args) -> int:
    product = ExactPolynomial.one(args.n)
    for lam in args.shapes:
        product = product * schur(_fit(lam, args.n), args.n)
    parts = decompose_into_schur(product, args.n)
    if args.format == "json":
        print(json.dumps({
            "shapes": [format_weight(_fit(p, args.n)) for p in args.shapes],
            "monomials": {format_weight(e): c for e, c in sorted(product.terms.items(),
                                                                  reverse=True)},
            "schur": {format_weight(lam): m for lam, m in parts.items()},
        }))
    else:
        print(product)
        print(" + ".join(f"{m}*s({format_weight(lam)})" if m > 1 else f"s({format_weight(lam)})"
                         for lam, m in parts.items()))
    return EXIT_OK


def _report_check(args, record: dict) -> int:
    if args.format == "json":
        print(json.dumps(record))
    else:
        counts = " ".join(f"q={q}:{c}" for q, c in record["counts"].items())
        status = "pass" if record["pass"] else "FAIL"
        pred, obs = record["predicted"], record["observed"]
        print(f"{record['check']} {record['inputs']}\n  {counts}\n  fit {record['polynomial']}\n"
              f"  predicted degree {pred['degree']} leading {pred['leading']}; "
              f"observed degree {obs['degree']} leading {obs['leading']}: {status}")
    return EXIT_OK if record["pass"] else EXIT_MISMATCH


def cmd_hall_check(args) -> int:
    mu1, mu2, lam = (_fit(p, args.n) for p in (args.mu1, args.mu2, args.lam))
    return _report_check(args, hall_check(mu1, mu2, lam, args.n, args.primes, args.budget,
                                          args.jobs))


def cmd_mflag_check(args) -> int:
    if len(args.v) != args.n:
        raise UsageError(f"v must have {args.n} entries")
    return _report_check(args, mflag_check(args.v, _fit(args.lam, args.n), args.n, args.primes,
                                           args.budget))


def cmd_tensor_check(args) -> int:
    if len(args.v) != args.n:
        raise UsageError(f"v must have {args.n} entries")
    mu1, mu2 = _fit(args.mu1, args.n), _fit(args.mu2, args.n)
    return _report_check(args, tensor_check(args.v, mu1, mu2, args.n, args.primes, args.method,
                                            args.budget, args.jobs))


def cmd_orbit_check(args) -> int:
    return _report_check(args, orbit_check(args.lam, args.primes, args.method, args.budget,
                                           args.jobs))


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="rank N of gl_N (default 2)")
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for point counts")
    common.add_argument("--budget", type=lambda s: int(float(s)), default=None,
                        help="maximum candidates per enumeration")
    common.add_argument("--verify", action="store_true", help="cross-check against an oracle")
    common.add_argument("--primes", type=_primes, default=None,
                        help="comma-separated primes; default: as many as the prediction needs")

    parser = argparse.ArgumentParser(prog="crystalbench", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("lr", cmd_lr, "Littlewood-Richardson coefficient from the tensor crystal")
    p.add_argument("mu1", type=_partition)
    p.add_argument("mu2", type=_partition)
    p.add_argument("lam", type=_partition)

    p = add("decompose", cmd_decompose, "decompose a tensor product of highest-weight crystals")
    p.add_argument("factors", type=_partition, nargs="+")

    p = add("tau2", cmd_tau2, "image of M_2(v1,w1,r1) x M_2(v2,w2,r2)")
    for name in ("v1", "w1", "r1", "v2", "w2", "r2"):
        p.add_argument(f"--{name}", type=int, required=True)

    p = add("tau", cmd_tau, "tau_N on every element of crystal(mu1) (x) crystal(mu2)")
    p.add_argument("mu1", type=_partition)
    p.add_argument("mu2", type=_partition)

    p = add("restrict", cmd_restrict, "Levi restriction to a set of colors")
    p.add_argument("lam", type=_partition)
    p.add_argument("--keep", type=_colors, default=None, help="comma-separated colors to keep")

    p = add("crystal", cmd_crystal, "dump the tableau crystal of a shape")
    p.add_argument("lam", type=_partition)

    p = add("schur", cmd_schur, "monomial and Schur expansion of a product of Schur polynomials")
    p.add_argument("shapes", type=_partition, nargs="+")

    p = add("hall-check", cmd_hall_check, "point counts of S_2((mu1,mu2),lambda)")
    p.add_argument("mu1", type=_partition)
    p.add_argument("mu2", type=_partition)
    p.add_argument("lam", type=_partition)

    p = add("mflag-check", cmd_mflag_check, "point counts of M_N(v,lambda)")
    p.add_argument("v", type=_weight)
    p.add_argument("lam", type=_partition)

    p = add("tensor-check", cmd_tensor_check, "point counts of T_N(v,mu1,mu2)")
    p.add_argument("v", type=_weight)
    p.add_argument("mu1", type=_partition)
    p.add_argument("mu2", type=_partition)
    p.add_argument("--method", choices=("auto", "brute", "stratified"), default="auto")

    p = add("orbit-check", cmd_orbit_check, "point counts of a nilpotent orbit")
    p.add_argument("lam", type=_partition)
    p.add_argument("--method", choices=("auto", "exhaustive", "stabilizer"), default="auto")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        parser.error("--n must be positive")
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except (UsageError, InsufficientSamples, BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
