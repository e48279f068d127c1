"""Closed-form bounds on DNA code sizes, evaluated in exact rationals.

Every bound returns a :class:`BoundResult` carrying the exact value plus
its integer rounding (floor for upper bounds, ceiling for lower bounds),
with rounding applied exactly once.  Bounds whose side condition fails
come back inapplicable instead of raising.  Relations between externally
known maxima (halving, Cai, products, symmetries, monotonicities) are
checked by :func:`relation_check`; those quantities are always explicit
inputs, never looked up silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np


@dataclass(frozen=True)
class BoundResult:
    name: str
    direction: str  # "upper" | "lower"
    exact: Fraction | None
    bound: int | None
    applicable: bool = True
    reason: str | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "direction": self.direction,
            "exact": None if self.exact is None else
            f"{self.exact.numerator}/{self.exact.denominator}",
            "bound": self.bound,
            "applicable": self.applicable,
            "reason": self.reason,
        }


def _result(name: str, direction: str, exact: Fraction) -> BoundResult:
    rounded = math.floor(exact) if direction == "upper" else math.ceil(exact)
    return BoundResult(name, direction, exact, rounded)


def _inapplicable(name: str, direction: str, reason: str) -> BoundResult:
    return BoundResult(name, direction, None, None, False, reason)


def _check_nd(n: int, d: int):
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")


def sphere_packing(n: int, d: int) -> BoundResult:
    """Upper bound 4^n / |ball of radius floor((d-1)/2)|."""
    _check_nd(n, d)
    ball = sum(math.comb(n, i) * 3 ** i for i in range((d - 1) // 2 + 1))
    return _result("sphere_packing", "upper", Fraction(4 ** n, ball))


def gilbert_varshamov(n: int, d: int) -> BoundResult:
    """Lower bound 4^n / |ball of radius d-1|."""
    _check_nd(n, d)
    ball = sum(math.comb(n, i) * 3 ** i for i in range(d))
    return _result("gilbert_varshamov", "lower", Fraction(4 ** n, ball))


def singleton(n: int, d: int) -> BoundResult:
    _check_nd(n, d)
    return _result("singleton", "upper", Fraction(4 ** (n - d + 1)))


def plotkin(n: int, d: int) -> BoundResult:
    """Upper bound 4d / (4d - 3n), applicable when 4d > 3n."""
    _check_nd(n, d)
    if 4 * d <= 3 * n:
        return _inapplicable("plotkin", "upper", "needs 4*d > 3*n")
    return _result("plotkin", "upper", Fraction(4 * d, 4 * d - 3 * n))


def gc_plotkin(n: int, d: int, w: int) -> BoundResult:
    """Plotkin-style upper bound for fixed-GC codes."""
    _check_nd(n, d)
    if not 0 <= w <= n:
        raise ValueError("need 0 <= w <= n")
    excess = 2 * n * d - (n * n + 2 * n * w - 2 * w * w)
    if excess <= 0:
        return _inapplicable("gc_plotkin", "upper",
                             "needs 2*n*d > n^2 + 2*n*w - 2*w^2")
    return _result("gc_plotkin", "upper", Fraction(2 * n * d, excess))


def _gc_ball(n: int, d: int, w: int) -> int:
    total = 0
    for r in range(d):
        for i in range(min(r // 2, w, n - w) + 1):
            total += (math.comb(w, i) * math.comb(n - w, i)
                      * math.comb(n - 2 * i, r - 2 * i) * 4 ** i)
    return total


def gc_gilbert(n: int, d: int, w: int) -> BoundResult:
    """Gilbert-style lower bound for fixed-GC codes."""
    _check_nd(n, d)
    if not 0 <= w <= n:
        raise ValueError("need 0 <= w <= n")
    return _result("gc_gilbert", "lower",
                   Fraction(math.comb(n, w) * 2 ** n, _gc_ball(n, d, w)))


@lru_cache(maxsize=None)
def _v_table(n: int) -> np.ndarray:
    """counts[r, w] of length-n DNA strings with H(x, x^rc) = r, gc = w."""
    digits = ((np.arange(4 ** n)[:, None] // (4 ** np.arange(n - 1, -1, -1))[None, :])
              % 4).astype(np.uint8)
    rc = (3 - digits[:, ::-1]).astype(np.uint8)
    r = (digits != rc).sum(axis=1)
    w = ((digits == 1) | (digits == 2)).sum(axis=1)
    table = np.zeros((n + 1, n + 1), dtype=np.int64)
    np.add.at(table, (r, w), 1)
    return table


def v_count(n: int, r: int, w: int) -> int:
    """Number of length-n strings with rc-distance r to themselves and
    GC-weight w, by exhaustive enumeration."""
    if n > 8:
        raise ValueError("enumeration supported for n <= 8 only")
    if n < 1:
        raise ValueError("need n >= 1")
    if not (0 <= r <= n and 0 <= w <= n):
        return 0
    return int(_v_table(n)[r, w])


def gc_rc_gilbert(n: int, d: int, w: int) -> BoundResult:
    """Gilbert-style lower bound for codes with both the RC and fixed-GC
    constraints; the numerator counts words sufficiently far from their own
    reverse-complement."""
    _check_nd(n, d)
    if n > 8:
        raise ValueError("enumeration supported for n <= 8 only")
    if not 0 <= w <= n:
        raise ValueError("need 0 <= w <= n")
    numerator = sum(v_count(n, r, w) for r in range(d, n + 1))
    return _result("gc_rc_gilbert", "lower",
                   Fraction(numerator, 2 * _gc_ball(n, d, w)))


def b_count(n: int, w: int) -> int:
    """Closed-form count of homopolymer-free length-n strings with
    GC-weight w (inapplicable at w = 0 or w = n)."""
    if not 1 <= w <= n - 1:
        raise ValueError("need 1 <= w <= n-1 (v >= 1)")
    v = min(w, n - w)
    first = sum(2 ** (2 * v + 1 - 2 * j) * math.comb(v - 1, j)
                * math.comb(n - v, v - j) for j in range(v))
    second = sum(2 ** (2 * v - 1 - 2 * j) * math.comb(v - 1, j)
                 * math.comb(n - v - 1, v - j - 2) for j in range(v - 1))
    return first + second


def homopolymer_gc_gilbert(n: int, d: int, w: int) -> BoundResult:
    """Gilbert-style lower bound for homopolymer-free fixed-GC codes."""
    _check_nd(n, d)
    if w in (0, n):
        return _inapplicable("homopolymer_gc_gilbert", "lower",
                             "needs 1 <= w <= n-1")
    if not 0 <= w <= n:
        raise ValueError("need 0 <= w <= n")
    return _result("homopolymer_gc_gilbert", "lower",
                   Fraction(b_count(n, w), _gc_ball(n, d, w)))


def johnson_gc_step(n: int, d: int, w: int, a_prev: int,
                    variant: str = "w-1") -> BoundResult:
    """Johnson-style recursion step from a caller-supplied (n-1) bound.

    variant "w-1": floor(2n/w * A(n-1, d, w-1)); variant "w":
    floor(2n/(n-w) * A(n-1, d, w)).
    """
    _check_nd(n, d)
    if a_prev < 0:
        raise ValueError("a_prev must be a non-negative code size bound")
    if variant == "w-1":
        if w == 0:
            raise ValueError("variant w-1 needs w >= 1")
        return _result("johnson_gc_step", "upper", Fraction(2 * n * a_prev, w))
    if variant == "w":
        if w == n:
            raise ValueError("variant w needs w <= n-1")
        return _result("johnson_gc_step", "upper",
                       Fraction(2 * n * a_prev, n - w))
    raise ValueError("variant must be 'w-1' or 'w'")


# ---------------------------------------------------------------------------
# Relations between externally supplied maxima
# ---------------------------------------------------------------------------

def _frac(v) -> Fraction:
    return Fraction(v)


RELATIONS: dict[str, tuple[tuple[str, ...], object]] = {
    # reverse / reverse-complement interplay
    "halving": (("A4r", "A4"),
                lambda v: _frac(v["A4r"]) <= Fraction(v["A4"], 2)),
    "cai": (("A4r_2n2d", "A4"),
            lambda v: v["A4r_2n2d"] >= v["A4"] // 2),
    "product_r": (("A4r", "A2r", "A2"),
                  lambda v: v["A4r"] >= v["A2r"] * v["A2"]),
    "rc_eq_r_even": (("A4rc", "A4r"), lambda v: v["A4rc"] == v["A4r"]),
    "rc_sandwich_odd": (("A4r_dp1", "A4rc", "A4r_dm1"),
                        lambda v: v["A4r_dp1"] <= v["A4rc"] <= v["A4r_dm1"]),
    "rc_half_odd": (("A4rc", "A4r"),
                    lambda v: _frac(v["A4rc"]) <= Fraction(v["A4r"], 2)),
    # plain monotonicity
    "mono_n_d": (("A4", "A4_np1_dp1"), lambda v: v["A4"] >= v["A4_np1_dp1"]),
    "mono_n": (("A4", "A4_np1"),
               lambda v: _frac(v["A4"]) >= Fraction(v["A4_np1"], 4)),
    "r_mono_d": (("A4r", "A4r_dm1"), lambda v: v["A4r"] <= v["A4r_dm1"]),
    "r_mono_n_odd": (("A4r", "A4r_nm1"),
                     lambda v: Fraction(v["A4r"], 4) <= _frac(v["A4r_nm1"])
                     <= _frac(v["A4r"])),
    # GC-constrained families
    "gcrc_half_odd": (("A4rcGC", "A4rGC"),
                      lambda v: _frac(v["A4rcGC"]) <= Fraction(v["A4rGC"], 2)),
    "product": (("A4rcGC", "A2rw", "A2"),
                lambda v: v["A4rcGC"] >= v["A2rw"] * v["A2"]),
    "gcrc_mono_d": (("A4rcGC", "A4rcGC_dm1"),
                    lambda v: v["A4rcGC"] <= v["A4rcGC_dm1"]),
    "gcrc_mono_n": (("A4rcGC", "A4rcGC_np1"),
                    lambda v: v["A4rcGC"] <= v["A4rcGC_np1"]),
    "gc_symmetry": (("A4GC_w", "A4GC_nw"),
                    lambda v: v["A4GC_w"] == v["A4GC_nw"]),
    "gc_zero_weight": (("A4GC_w0", "A2"), lambda v: v["A4GC_w0"] == v["A2"]),
    "gcrc_eq_gcr_even": (("A4rcGC", "A4rGC"),
                         lambda v: v["A4rcGC"] == v["A4rGC"]),
    "gcr_sandwich_odd": (("A4rGC_dp1", "A4rcGC", "A4rGC_dm1"),
                         lambda v: v["A4rGC_dp1"] <= v["A4rcGC"]
                         <= v["A4rGC_dm1"]),
    # product lower bounds for GC families
    "gc_product_binary": (("A4GC", "A2w", "A2"),
                          lambda v: v["A4GC"] >= v["A2w"] * v["A2"]),
    "gcr_product_binary": (("A4rGC", "A2rw", "A2"),
                           lambda v: v["A4rGC"] >= v["A2rw"] * v["A2"]),
    "gcr_product_binary_alt": (("A4rGC", "A2w", "A2r"),
                               lambda v: v["A4rGC"] >= v["A2w"] * v["A2r"]),
    "gc_product_ternary": (("A4GC", "A3w", "A2_nw"),
                           lambda v: v["A4GC"] >= v["A3w"] * v["A2_nw"]),
    "gcr_product_ternary": (("A4rGC", "A3rw", "A2_nw"),
                            lambda v: v["A4rGC"] >= v["A3rw"] * v["A2_nw"]),
    "gcr_product_ternary_alt": (("A4rGC", "A3w", "A2r_nw"),
                                lambda v: v["A4rGC"] >= v["A3w"] * v["A2r_nw"]),
}


def relation_check(name: str, inputs: dict) -> bool:
    """Check one named inequality/equality on caller-supplied quantities."""
    entry = RELATIONS.get(name)
    if entry is None:
        raise ValueError(f"unknown relation {name!r} "
                         f"(choose from {', '.join(sorted(RELATIONS))})")
    keys, predicate = entry
    missing = [k for k in keys if k not in inputs]
    if missing:
        raise ValueError(f"relation {name} is missing quantities: "
                         f"{', '.join(missing)}")
    return bool(predicate(inputs))


BOUNDS = {
    "sphere_packing": sphere_packing,
    "gilbert_varshamov": gilbert_varshamov,
    "singleton": singleton,
    "plotkin": plotkin,
    "gc_plotkin": gc_plotkin,
    "gc_gilbert": gc_gilbert,
    "gc_rc_gilbert": gc_rc_gilbert,
    "homopolymer_gc_gilbert": homopolymer_gc_gilbert,
}
