"""DNA string algebra.

Strings are plain ``str`` over the uppercase alphabet ``ACGT`` (binary
strings over ``01``).  Positions are 1-based in documentation and error
messages.  Everything here is a pure function; nothing mutates its input.
"""

from __future__ import annotations

import math

DNA_ALPHABET = "ACGT"
_DNA_SET = frozenset(DNA_ALPHABET)
_BIN_SET = frozenset("01")

_COMPLEMENT = str.maketrans("ACGT", "TGCA")

# Watson-Crick/wobble interaction energies: only these pairs release energy.
INTERACTION_ENERGY = {
    ("G", "C"): -5, ("C", "G"): -5,
    ("A", "T"): -4, ("T", "A"): -4,
    ("G", "T"): -1, ("T", "G"): -1,
}

# Admissible secondary complements per base (pairs with nonzero energy).
# A and C have a unique secondary complement; G and T have two.
SECONDARY_COMPLEMENTS = {
    "A": frozenset("T"),
    "C": frozenset("G"),
    "G": frozenset("CT"),
    "T": frozenset("AG"),
}


def check_dna(x: str) -> str:
    """Validate a DNA string (nonempty, uppercase ACGT only)."""
    if not isinstance(x, str) or not x:
        raise ValueError("DNA string must be a nonempty str")
    if not _DNA_SET.issuperset(x):
        bad = next(c for c in x if c not in _DNA_SET)
        raise ValueError(f"invalid DNA symbol {bad!r} (alphabet is ACGT)")
    return x


def check_binary(x: str) -> str:
    """Validate a binary string (nonempty, 0/1 only)."""
    if not isinstance(x, str) or not x:
        raise ValueError("binary string must be a nonempty str")
    if not _BIN_SET.issuperset(x):
        bad = next(c for c in x if c not in _BIN_SET)
        raise ValueError(f"invalid binary symbol {bad!r}")
    return x


def reverse(x: str) -> str:
    """Reverse of a string (base i of the output is base n-i+1 of the input)."""
    return x[::-1]


def complement(x: str) -> str:
    """Watson-Crick complement: A<->T, C<->G, per base."""
    return x.translate(_COMPLEMENT)


def reverse_complement(x: str) -> str:
    """Reverse-complement: complement(reverse(x)) == reverse(complement(x))."""
    return x[::-1].translate(_COMPLEMENT)


def gc_weight(x: str) -> int:
    """Number of positions holding C or G."""
    return x.count("C") + x.count("G")


def melting_temperature(x: str, salt_molarity: float | None = None) -> float:
    """Melting temperature in deg C of a DNA string.

    Without salt the basic GC-weight formula is used; with a positive
    ``salt_molarity`` (mol/L) the salt-adjusted variant with a base-10
    logarithmic [Na+] term applies.
    """
    check_dna(x)
    n = len(x)
    w = gc_weight(x)
    if salt_molarity is None:
        return 64.9 + 41.0 * (w - 16.4) / n
    if salt_molarity <= 0:
        raise ValueError("salt molarity must be > 0")
    return 100.5 + 41.0 * (w - 36.4) / n + 16.6 * math.log10(salt_molarity)


def hamming(x: str, y: str) -> int:
    """Hamming distance between two equal-length strings."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(a != b for a, b in zip(x, y))


def correlation(x: str, y: str) -> str:
    """Correlation x o y as a binary string of length len(x).

    Bit i (1-based) is 1 iff, sliding y to start under position i of x,
    the overlapping region matches: x(i, i+t-1) == y(1, t) with
    t = min(len(y), len(x) - i + 1).
    """
    n, m = len(x), len(y)
    if n < 1 or m < 1:
        raise ValueError("correlation needs nonempty strings")
    bits = []
    for i in range(n):
        t = min(m, n - i)
        bits.append("1" if x[i:i + t] == y[:t] else "0")
    return "".join(bits)


def is_self_uncorrelated(x: str) -> bool:
    """True iff x o x = (1 0 ... 0): no proper suffix of x is a prefix of x."""
    c = correlation(x, x)
    return c[0] == "1" and "1" not in c[1:]


def are_mutually_uncorrelated(x: str, y: str) -> bool:
    """True iff x o y and y o x are both all-zero."""
    return "1" not in correlation(x, y) and "1" not in correlation(y, x)


def is_tandem_free(x: str, repeat_length: int) -> bool:
    """No two adjacent equal substrings of any length m = 1..repeat_length."""
    if repeat_length < 1:
        raise ValueError("repeat length must be >= 1")
    n = len(x)
    for m in range(1, repeat_length + 1):
        for i in range(n - 2 * m + 1):
            if x[i:i + m] == x[i + m:i + 2 * m]:
                return False
    return True


def has_homopolymer_run(x: str, run_length: int) -> bool:
    """True iff some substring of length run_length is a single repeated base."""
    if run_length < 1:
        raise ValueError("run length must be >= 1")
    if run_length > len(x):
        return False
    run = 1
    for a, b in zip(x, x[1:]):
        run = run + 1 if a == b else 1
        if run >= run_length:
            return True
    return run_length == 1


def interaction_energy(b1: str, b2: str) -> int:
    """Interaction energy of an ordered base pair (0 for non-binding pairs)."""
    return INTERACTION_ENERGY.get((b1, b2), 0)


def is_secondary_complement_pair(a: str, b: str) -> bool:
    """True iff b is an admissible secondary complement of a, per position.

    This is a relation, not a function: G and T admit two partners each.
    Equivalently, every aligned pair (a_i, b_i) has nonzero interaction
    energy.
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(v in SECONDARY_COMPLEMENTS[u] for u, v in zip(a, b))


def is_reverse_secondary_complement_pair(a: str, b: str) -> bool:
    """True iff b read backwards is a secondary complement of a."""
    return is_secondary_complement_pair(a, b[::-1])


def is_l_free_secondary(x: str, stem_length: int) -> bool:
    """True iff no stem of ``stem_length`` can fold within x.

    Scans every window pair x(i, i+l-1), x(j, j+l-1) with j - i > l and
    rejects when the later window is a secondary complement or a
    reverse-secondary-complement of the earlier one.
    """
    ell = stem_length
    if ell < 1:
        raise ValueError("stem length must be >= 1")
    n = len(x)
    last = n - ell  # 0-based start of the last full window
    if last < 0:
        return True
    windows = [x[i:i + ell] for i in range(last + 1)]

    # Fast path: if no pair of occurring window contents is related at all,
    # no positional pair can violate either.
    distinct = set(windows)
    hot = set()
    for w1 in distinct:
        for w2 in distinct:
            if is_secondary_complement_pair(w1, w2) or \
                    is_reverse_secondary_complement_pair(w1, w2):
                hot.add((w1, w2))
    if not hot:
        return True

    for i in range(last + 1):
        for j in range(i + ell + 1, last + 1):
            if (windows[i], windows[j]) in hot:
                return False
    return True


def min_free_energy(x: str) -> int:
    """Nussinov-Jacobson minimum free energy E(1, n) of a DNA string.

    Interval DP with E(r, r) = 0 and E(r-1, r) = 0: a base pairs with
    neither itself nor an immediate neighbour.  The result is <= 0.
    """
    check_dna(x)
    n = len(x)
    if n <= 2:
        return 0
    # e[i][j] for 0-based i <= j; length-1 and length-2 intervals are 0.
    e = [[0] * n for _ in range(n)]
    for span in range(2, n):
        for i in range(n - span):
            j = i + span
            best = e[i + 1][j - 1] + interaction_energy(x[i], x[j])
            for k in range(i + 1, j + 1):
                cand = e[i][k - 1] + e[k][j]
                if cand < best:
                    best = cand
            e[i][j] = best
    return e[0][n - 1]
