"""Point-count verification pipelines.

Each check counts F_q-points for several primes, interpolates, and compares
the degree and leading coefficient with a prediction.  At least D + 2
samples are required for predicted dimension D: a degree-D fit plus one
confirming point.  Without explicit primes the first D + 2 primes are used.
Every check returns a JSON-ready record.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from ..crystal import character
from ..decomp import lr_coefficient, product_crystal
from ..tableaux import crystal_of
from ..weights import (check_partition, check_weight, format_weight, m_dim, orbit_dim, pad,
                       spaltenstein_dim, t_dim)
from .interp import interpolate
from .linalg import check_prime, first_primes
from .varieties import (count_mflags, count_nilpotent_orbit, count_spaltenstein,
                        count_tensor_variety)


class InsufficientSamples(ValueError):
    pass


def primes_for(degree: int, base: Sequence[int] = ()) -> list[int]:
    """`base` extended by further primes until there are degree + 2 of them."""
    need = max(degree, 0) + 2
    out = list(base)
    for p in first_primes(need + len(out)):
        if len(out) >= need:
            break
        if p not in out:
            out.append(p)
    return out


def _frac(x: Fraction) -> str:
    return str(x)


def _run(kind: str, inputs: dict, primes: Sequence[int] | None, degree: int, leading: int,
         counter: Callable[[int], int]) -> dict:
    if primes is None:
        primes = primes_for(degree)
    primes = [check_prime(int(p)) for p in primes]
    if len(set(primes)) != len(primes):
        raise ValueError(f"repeated primes in {primes}")
    need = max(degree, 0) + 2
    if len(primes) < need:
        raise InsufficientSamples(
            f"{kind}: predicted dimension {degree} needs {need} primes, got {len(primes)}")
    counts = {p: counter(p) for p in primes}
    poly = interpolate(sorted(counts.items()))
    if leading == 0:
        passed = poly.is_zero()
    else:
        passed = (poly.degree == degree and poly.leading == leading
                  and poly.has_integer_coefficients())
    return {
        "check": kind,
        "inputs": inputs,
        "counts": {str(p): c for p, c in counts.items()},
        "coefficients": [_frac(c) for c in poly.coeffs],
        "polynomial": str(poly),
        "predicted": {"degree": degree if leading else None, "leading": leading},
        "observed": {"degree": poly.degree, "leading": _frac(poly.leading)},
        "pass": bool(passed),
    }


def hall_check(mu1, mu2, lam, n: int, primes: Sequence[int] | None = None,
               budget: int | None = None, jobs: int = 1) -> dict:
    """Points of S_2((mu1, mu2), lam): degree spaltenstein_dim, leading coefficient LR number."""
    mu1, mu2, lam = (pad(check_partition(p), n) for p in (mu1, mu2, lam))
    if sum(lam) != sum(mu1) + sum(mu2):
        raise ValueError(f"|{format_weight(lam)}| != "
                         f"|{format_weight(mu1)}| + |{format_weight(mu2)}|")
    degree = spaltenstein_dim((mu1, mu2), lam)
    leading = lr_coefficient(mu1, mu2, lam, n)
    inputs = {"mu1": format_weight(mu1), "mu2": format_weight(mu2),
              "lambda": format_weight(lam), "n": n}
    return _run("hall", inputs, primes, degree, leading,
                lambda q: count_spaltenstein((mu1, mu2), lam, q, budget, jobs))


def mflag_check(v, lam, n: int, primes: Sequence[int] | None = None,
                budget: int | None = None) -> dict:
    """Points of M_N(v, lam): degree m_dim, leading coefficient the multiplicity of v in L(lam)."""
    v = check_weight(v)
    lam = pad(check_partition(lam), n)
    if len(v) != n:
        raise ValueError(f"v = {format_weight(v)} must have {n} entries")
    degree = m_dim(v, lam)
    leading = character(crystal_of(lam, n)).get(v, 0)
    inputs = {"v": format_weight(v), "lambda": format_weight(lam), "n": n}
    return _run("mflag", inputs, primes, degree, leading,
                lambda q: count_mflags(v, lam, q, budget=budget))


def tensor_check(v, mu1, mu2, n: int, primes: Sequence[int] | None = None, method: str = "auto",
                 budget: int | None = None, jobs: int = 1) -> dict:
    """Points of T_N(v, mu1, mu2): degree t_dim, leading coefficient dim of the v-weight space
    of L(mu1) (x) L(mu2)."""
    v = check_weight(v)
    mu1, mu2 = pad(check_partition(mu1), n), pad(check_partition(mu2), n)
    if len(v) != n:
        raise ValueError(f"v = {format_weight(v)} must have {n} entries")
    degree = t_dim(v, mu1, mu2)
    leading = character(product_crystal((mu1, mu2), n)).get(v, 0)
    inputs = {"v": format_weight(v), "mu1": format_weight(mu1), "mu2": format_weight(mu2),
              "n": n, "method": method}
    return _run("tensor", inputs, primes, degree, leading,
                lambda q: count_tensor_variety(v, mu1, mu2, q, method, budget, jobs))


def orbit_check(lam, primes: Sequence[int] | None = None, method: str = "auto",
                budget: int | None = None, jobs: int = 1) -> dict:
    """Points of the nilpotent orbit of type lam: degree orbit_dim, leading coefficient 1."""
    lam = check_partition(lam)
    inputs = {"lambda": format_weight(lam), "method": method}
    return _run("orbit", inputs, primes, orbit_dim(lam), 1,
                lambda q: count_nilpotent_orbit(lam, q, method, budget, jobs))
