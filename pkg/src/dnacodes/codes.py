"""Codebooks, constraint verification and small search oracles.

A :class:`Codebook` is an immutable set of equal-length words over one of
four alphabets.  Words are kept sorted, so identical inputs always produce
identical reports and serializations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, product

import numpy as np

from . import dna
from .kernels import min_cross_hamming, min_pairwise_hamming

ALPHABETS = ("DNA", "binary", "quinary", "ringR")

_SYMBOLS = {"DNA": "ACGT", "binary": "01", "quinary": "01234"}

CONSTRAINT_KINDS = (
    "hamming", "reverse", "reverse_complement", "fixed_gc", "gc_content",
    "tandem_free", "homopolymer_free", "l_free_secondary",
    "mutually_uncorrelated", "thermodynamic",
)

# Constraint-token aliases accepted by parse_constraints / the CLI.
_TOKEN_ALIASES = {
    "hamming": "hamming", "h": "hamming",
    "r": "reverse", "reverse": "reverse",
    "rc": "reverse_complement", "reverse_complement": "reverse_complement",
    "gc": "gc_content", "fixed_gc": "fixed_gc", "gc_content": "gc_content",
    "tandem": "tandem_free", "tandem_free": "tandem_free",
    "homo": "homopolymer_free", "homopolymer": "homopolymer_free",
    "homopolymer_free": "homopolymer_free",
    "sec": "l_free_secondary", "l_free_secondary": "l_free_secondary",
    "mu": "mutually_uncorrelated", "uncorrelated": "mutually_uncorrelated",
    "mutually_uncorrelated": "mutually_uncorrelated",
    "thermo": "thermodynamic", "thermodynamic": "thermodynamic",
}


def word_symbols(word: str, alphabet: str) -> list[str]:
    """Split a stored word into symbols (ring words are space-separated)."""
    return word.split() if alphabet == "ringR" else list(word)


@dataclass(frozen=True)
class Codebook:
    """Finite set of equal-length words over one alphabet."""

    alphabet: str
    words: tuple[str, ...]
    n: int = field(init=False)

    def __post_init__(self):
        if self.alphabet not in ALPHABETS:
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        if not self.words:
            raise ValueError("codebook needs at least one word")
        symbols = [word_symbols(w, self.alphabet) for w in self.words]
        n = len(symbols[0])
        if n < 1:
            raise ValueError("words must be nonempty")
        if any(len(s) != n for s in symbols):
            raise ValueError("all words must have equal length")
        if len(set(self.words)) != len(self.words):
            raise ValueError("duplicate words in codebook")
        if self.alphabet == "ringR":
            from . import ring
            for s in symbols:
                for tok in s:
                    ring.RingElement.parse(tok)
        else:
            allowed = set(_SYMBOLS[self.alphabet])
            for w in self.words:
                if not allowed.issuperset(w):
                    raise ValueError(f"word {w!r} not over alphabet {self.alphabet}")
        object.__setattr__(self, "words", tuple(sorted(self.words)))
        object.__setattr__(self, "n", n)

    @property
    def size(self) -> int:
        return len(self.words)

    @classmethod
    def from_words(cls, words, alphabet: str = "DNA") -> "Codebook":
        return cls(alphabet, tuple(words))

    def to_matrix(self) -> np.ndarray:
        """Words as a (M, n) uint8 matrix of symbol indices."""
        if self.alphabet == "ringR":
            from . import ring
            rows = [[ring.RingElement.parse(t).index for t in w.split()]
                    for w in self.words]
            return np.array(rows, dtype=np.uint8)
        lut = {c: i for i, c in enumerate(_SYMBOLS[self.alphabet])}
        return np.array([[lut[c] for c in w] for w in self.words], dtype=np.uint8)


@dataclass(frozen=True)
class ConstraintSpec:
    """One named constraint plus the parameter its kind requires."""

    kind: str
    d: int | None = None
    w: int | None = None
    ell: int | None = None
    t: int | None = None
    delta: float | None = None

    def __post_init__(self):
        if self.kind not in CONSTRAINT_KINDS:
            raise ValueError(f"unknown constraint kind {self.kind!r}")

    def params(self) -> dict:
        out = {}
        for key in ("d", "w", "ell", "t", "delta"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


def parse_constraints(spec: str) -> list[ConstraintSpec]:
    """Parse a comma-separated `kind[:param]` list, e.g. "hamming:3,rc:3,gc"."""
    out = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        name, _, param = token.partition(":")
        kind = _TOKEN_ALIASES.get(name.lower())
        if kind is None:
            raise ValueError(f"unknown constraint token {name!r}")
        value = param.strip() if param else None
        if kind == "gc_content" and value is not None:
            kind = "fixed_gc"
        if kind in ("hamming", "reverse", "reverse_complement"):
            if value is None:
                raise ValueError(f"{name} needs a distance parameter, e.g. {name}:3")
            out.append(ConstraintSpec(kind, d=int(value)))
        elif kind == "fixed_gc":
            out.append(ConstraintSpec(kind, w=int(value)))
        elif kind == "gc_content":
            out.append(ConstraintSpec(kind))
        elif kind == "tandem_free":
            if value is None:
                raise ValueError("tandem needs a repeat length, e.g. tandem:2")
            out.append(ConstraintSpec(kind, ell=int(value)))
        elif kind == "homopolymer_free":
            out.append(ConstraintSpec(kind, t=int(value) if value else 2))
        elif kind == "l_free_secondary":
            if value is None:
                raise ValueError("sec needs a stem length, e.g. sec:3")
            out.append(ConstraintSpec(kind, ell=int(value)))
        elif kind == "mutually_uncorrelated":
            out.append(ConstraintSpec(kind))
        elif kind == "thermodynamic":
            if value is None:
                raise ValueError("thermo needs a tolerance, e.g. thermo:0")
            out.append(ConstraintSpec(kind, delta=float(value)))
    if not out:
        raise ValueError("empty constraint list")
    return out


@dataclass(frozen=True)
class VerificationReport:
    constraint: str
    params: dict
    passed: bool
    witness: tuple[str, ...] | None
    computed: dict

    def to_dict(self) -> dict:
        return {
            "constraint": self.constraint,
            "pass": self.passed,
            "witness": list(self.witness) if self.witness is not None else None,
            "params": dict(self.params),
            "computed": dict(self.computed),
        }


def min_hamming_distance(c: Codebook) -> int:
    """Minimum Hamming distance over unordered distinct word pairs."""
    if c.size < 2:
        raise ValueError("minimum distance undefined for codes of size < 2")
    return min_pairwise_hamming(c.to_matrix())


def _op_matrix(c: Codebook, op: str) -> np.ndarray:
    mat = c.to_matrix()
    if op == "reverse":
        return mat[:, ::-1]
    if op == "complement":
        return (3 - mat).astype(np.uint8)
    if op == "reverse_complement":
        return (3 - mat[:, ::-1]).astype(np.uint8)
    raise ValueError(f"unknown operation {op!r}")


def _require_dna(c: Codebook, kind: str):
    if c.alphabet != "DNA":
        raise ValueError(f"constraint {kind!r} requires a DNA codebook")


def _pair_scan(a: np.ndarray, b: np.ndarray, words, *, triangle: bool,
               skip_equal: bool):
    """Min distance over pairs plus the best witness at that distance.

    Witness ordering at the minimum distance: self-pairs (x, x) first, then
    lexicographic by (x, y).  Returns (None, None) when the guard excludes
    every pair.
    """
    m = a.shape[0]
    chunk = 1024
    best = None
    witness = None
    sentinel = np.iinfo(np.int32).max
    for i0 in range(0, m, chunk):
        ablk = a[i0:i0 + chunk]
        for j0 in range(i0 if triangle else 0, b.shape[0], chunk):
            bblk = b[j0:j0 + chunk]
            d = (ablk[:, None, :] != bblk[None, :, :]).sum(axis=2, dtype=np.int32)
            if triangle and i0 == j0:
                d[np.tril_indices(d.shape[0], k=0, m=d.shape[1])] = sentinel
            elif skip_equal:
                d[d == 0] = sentinel
            if d.size == 0:
                continue
            blk_min = int(d.min())
            if blk_min == sentinel or (best is not None and blk_min > best):
                continue
            if best is None or blk_min < best:
                best, witness = blk_min, None
            for bi, bj in np.argwhere(d == blk_min):
                i, j = i0 + int(bi), j0 + int(bj)
                key = (i != j, words[i], words[j])
                if witness is None or key < witness:
                    witness = key
    if best is None:
        return None, None
    return best, (witness[1], witness[2])


def check_constraint(c: Codebook, spec: ConstraintSpec) -> VerificationReport:
    """Verify one constraint, returning pass/fail plus witness and stats."""
    kind = spec.kind
    handler = _HANDLERS[kind]
    return handler(c, spec)


def check_constraints(c: Codebook, specs) -> list[VerificationReport]:
    return [check_constraint(c, s) for s in specs]


def _distance_computed(c: Codebook) -> dict:
    out = {}
    mat = c.to_matrix()
    if c.size >= 2:
        out["d_H"] = min_pairwise_hamming(mat)
    if c.alphabet == "DNA":
        out["min_reverse_distance"] = min_cross_hamming(
            _op_matrix(c, "reverse"), mat, skip_equal=True)
        out["min_rc_distance"] = min_cross_hamming(
            _op_matrix(c, "reverse_complement"), mat, skip_equal=True)
    return out


def _check_hamming(c: Codebook, spec: ConstraintSpec) -> VerificationReport:
    if spec.d is None:
        raise ValueError("hamming constraint needs distance parameter d")
    if c.size < 2:
        return VerificationReport("hamming", spec.params(), True, None,
                                  {"d_H": None})
    mat = c.to_matrix()
    dmin, pair = _pair_scan(mat, mat, c.words, triangle=True, skip_equal=False)
    passed = dmin >= spec.d
    computed = _distance_computed(c)
    return VerificationReport("hamming", spec.params(), passed,
                              None if passed else pair, computed)


def _check_reverse(c: Codebook, spec: ConstraintSpec, op: str,
                   kind: str) -> VerificationReport:
    _require_dna(c, kind)
    if spec.d is None:
        raise ValueError(f"{kind} constraint needs distance parameter d")
    imgs = _op_matrix(c, op)
    dmin, pair = _pair_scan(imgs, c.to_matrix(), c.words, triangle=False,
                            skip_equal=True)
    passed = dmin is None or dmin >= spec.d
    computed = _distance_computed(c)
    return VerificationReport(kind, spec.params(), passed,
                              None if passed else pair, computed)


def _check_fixed_gc(c: Codebook, spec: ConstraintSpec) -> VerificationReport:
    _require_dna(c, "fixed_gc")
    if spec.w is None:
        raise ValueError("fixed_gc constraint needs weight parameter w")
    weights = {w: dna.gc_weight(w) for w in c.words}
    bad = [w for w in c.words if weights[w] != spec.w]
    computed = {"gc_weights": sorted(set(weights.values()))}
    return VerificationReport("fixed_gc", spec.params(), not bad,
                              (bad[0],) if bad else None, computed)


def _check_gc_content(c: Codebook, spec: ConstraintSpec) -> VerificationReport:
    _require_dna(c, "gc_content")
    allowed = {c.n // 2, (c.n + 1) // 2}
    weights = {w: dna.gc_weight(w) for w in c.words}
    computed = {"gc_weights": sorted(set(weights.values())),
                "allowed": sorted(allowed)}
    out_of_range = [w for w in c.words if weights[w] not in allowed]
    if out_of_range:
        return VerificationReport("gc_content", spec.params(), False,
                                  (out_of_range[0],), computed)
    first = weights[c.words[0]]
    uneven = [w for w in c.words if weights[w] != first]
    if uneven:
        return VerificationReport("gc_content", spec.params(), False,
                                  (uneven[0],), computed)
    return VerificationReport("gc_content", spec.params(), True, None, computed)


def _word_predicate_report(c: Codebook, spec: ConstraintSpec, kind: str,
                           ok, computed=None) -> VerificationReport:
    bad = [w for w in c.words if not ok(w)]
    return VerificationReport(kind, spec.params(), not bad,
                              (bad[0],) if bad else None, computed or {})


def _check_mutually_uncorrelated(c: Codebook,
                                 spec: ConstraintSpec) -> VerificationReport:
    _require_dna(c, "mutually_uncorrelated")
    for w in c.words:
        if not dna.is_self_uncorrelated(w):
            return VerificationReport("mutually_uncorrelated", spec.params(),
                                      False, (w, w), {})
    for x, y in combinations(c.words, 2):
        if "1" in dna.correlation(x, y):
            return VerificationReport("mutually_uncorrelated", spec.params(),
                                      False, (x, y), {})
        if "1" in dna.correlation(y, x):
            return VerificationReport("mutually_uncorrelated", spec.params(),
                                      False, (y, x), {})
    return VerificationReport("mutually_uncorrelated", spec.params(), True,
                              None, {})


def _check_thermodynamic(c: Codebook, spec: ConstraintSpec) -> VerificationReport:
    _require_dna(c, "thermodynamic")
    if spec.delta is None or spec.delta < 0:
        raise ValueError("thermodynamic constraint needs tolerance delta >= 0")
    energies = {w: dna.min_free_energy(w) for w in c.words}
    lo = min(energies.values())
    hi = max(energies.values())
    computed = {"min_energy": lo, "max_energy": hi, "max_gap": hi - lo}
    if hi - lo <= spec.delta:
        return VerificationReport("thermodynamic", spec.params(), True, None,
                                  computed)
    w_lo = next(w for w in c.words if energies[w] == lo)
    w_hi = next(w for w in c.words if energies[w] == hi)
    return VerificationReport("thermodynamic", spec.params(), False,
                              (w_lo, w_hi), computed)


def _dispatch_tandem(c, spec):
    _require_dna(c, "tandem_free")
    if spec.ell is None:
        raise ValueError("tandem_free constraint needs repeat length ell")
    return _word_predicate_report(
        c, spec, "tandem_free", lambda w: dna.is_tandem_free(w, spec.ell))


def _dispatch_homopolymer(c, spec):
    _require_dna(c, "homopolymer_free")
    t = spec.t if spec.t is not None else 2
    return _word_predicate_report(
        c, spec, "homopolymer_free",
        lambda w: not dna.has_homopolymer_run(w, t))


def _dispatch_secondary(c, spec):
    _require_dna(c, "l_free_secondary")
    if spec.ell is None:
        raise ValueError("l_free_secondary constraint needs stem length ell")
    return _word_predicate_report(
        c, spec, "l_free_secondary",
        lambda w: dna.is_l_free_secondary(w, spec.ell))


_HANDLERS = {
    "hamming": _check_hamming,
    "reverse": lambda c, s: _check_reverse(c, s, "reverse", "reverse"),
    "reverse_complement": lambda c, s: _check_reverse(
        c, s, "reverse_complement", "reverse_complement"),
    "fixed_gc": _check_fixed_gc,
    "gc_content": _check_gc_content,
    "tandem_free": _dispatch_tandem,
    "homopolymer_free": _dispatch_homopolymer,
    "l_free_secondary": _dispatch_secondary,
    "mutually_uncorrelated": _check_mutually_uncorrelated,
    "thermodynamic": _check_thermodynamic,
}


def closure_under(c: Codebook, op: str) -> bool:
    """True iff the image of every word under op stays inside the codebook."""
    _require_dna(c, op)
    ops = {"reverse": dna.reverse, "complement": dna.complement,
           "reverse_complement": dna.reverse_complement}
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    have = set(c.words)
    return all(ops[op](w) in have for w in c.words)


def info(c: Codebook) -> dict:
    """Summary statistics: parameters, distance minima and GC profile."""
    out = {"alphabet": c.alphabet, "n": c.n, "M": c.size}
    out["d_H"] = min_hamming_distance(c) if c.size >= 2 else None
    if c.alphabet == "DNA":
        mat = c.to_matrix()
        out["min_reverse_distance"] = min_cross_hamming(
            _op_matrix(c, "reverse"), mat, skip_equal=True)
        out["min_rc_distance"] = min_cross_hamming(
            _op_matrix(c, "reverse_complement"), mat, skip_equal=True)
        profile: dict[int, int] = {}
        for w in c.words:
            profile[dna.gc_weight(w)] = profile.get(dna.gc_weight(w), 0) + 1
        out["gc_profile"] = {str(k): profile[k] for k in sorted(profile)}
    return out


# ---------------------------------------------------------------------------
# Search oracles for bound cross-checks
# ---------------------------------------------------------------------------

_GREEDY_LIMIT = {2: 20, 4: 12}


def _greedy_indices(n: int, d: int, q: int) -> list[int]:
    total = q ** n
    weights = np.array([q ** (n - 1 - j) for j in range(n)], dtype=np.int64)
    radius = d - 1
    rows_pos, rows_delta = [], []
    for i in range(1, radius + 1):
        for combo in combinations(range(n), i):
            for deltas in product(range(1, q), repeat=i):
                pad = radius - i
                rows_pos.append(list(combo) + [0] * pad)
                rows_delta.append(list(deltas) + [0] * pad)
    if rows_pos:
        pos = np.array(rows_pos, dtype=np.int8)
        delta = np.array(rows_delta, dtype=np.int8)
        wsel = weights[pos]
    covered = np.zeros(total, dtype=bool)
    accepted = []
    for idx in range(total):
        if covered[idx]:
            continue
        accepted.append(idx)
        covered[idx] = True
        if rows_pos:
            dig = (idx // weights) % q
            new = (dig[pos] + delta) % q
            shifts = ((new - dig[pos]) * wsel).sum(axis=1)
            covered[idx + shifts] = True
    return accepted


def greedy_lexicode(n: int, d: int, alphabet_size: int = 4) -> Codebook:
    """Deterministic lexicographic greedy code with min distance >= d.

    Serves as a constructive lower-bound witness for the bound sandwich.
    """
    q = alphabet_size
    if q not in _GREEDY_LIMIT:
        raise ValueError("alphabet_size must be 2 or 4")
    if not 1 <= d <= n <= _GREEDY_LIMIT[q]:
        raise ValueError(f"need 1 <= d <= n <= {_GREEDY_LIMIT[q]} for q={q}")
    symbols = _SYMBOLS["DNA" if q == 4 else "binary"]
    words = []
    for idx in _greedy_indices(n, d, q):
        digits = []
        for j in range(n - 1, -1, -1):
            digits.append(idx // q ** j % q)
        words.append("".join(symbols[t] for t in digits))
    return Codebook.from_words(words, "DNA" if q == 4 else "binary")


def max_code_size_exact(n: int, d: int, alphabet_size: int = 4) -> int:
    """Exact maximum code size by branch-and-bound (tiny n only)."""
    if n > 3:
        raise ValueError("exact search supported for n <= 3 only")
    q = alphabet_size
    if q not in (2, 4):
        raise ValueError("alphabet_size must be 2 or 4")
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    if d == 1:
        return q ** n
    strings = [tuple(t) for t in product(range(q), repeat=n)]
    total = len(strings)
    adj = [0] * total
    for i in range(total):
        for j in range(i + 1, total):
            if sum(a != b for a, b in zip(strings[i], strings[j])) >= d:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    best = 0

    def expand(size: int, cand: int):
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(size + 1, cand & adj[v])

    expand(0, (1 << total) - 1)
    return best
