"""Binary-to-DNA encoding that never repeats a block pattern.

A block pair (x, y) of equal length l spans the four-element state set
{x, y, x^c, y^c}; the encoder walks that set so adjacent output blocks
always differ, and the matching block-weighted distance on binary words
equals the Hamming distance of the encoded images.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import dna, formats
from .codes import Codebook

BUILTIN_CODES = ("repetition4", "hamming_7_4", "golay_23_12")

# Rows spanning the 16-word [7,4,3] Hamming code used by the constructions.
_HAMMING_7_4_ROWS = ("1110000", "1001100", "0101010", "1101001")

# Length-23 cyclic Golay generator polynomial, ascending powers of x.
_GOLAY_G = (1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1)


@dataclass(frozen=True)
class BlockPair:
    """Two DNA blocks whose set {x, y, x^c, y^c} has four distinct members."""

    x: str
    y: str

    def __post_init__(self):
        dna.check_dna(self.x)
        dna.check_dna(self.y)
        if len(self.x) != len(self.y):
            raise ValueError("blocks must have equal length")
        if len(self.states()) != 4:
            raise ValueError("blocks x, y, x^c, y^c must be pairwise distinct")

    @property
    def ell(self) -> int:
        return len(self.x)

    def states(self) -> set[str]:
        return {self.x, self.y, dna.complement(self.x), dna.complement(self.y)}


# State-machine steps: on bit 0 the walk cycles x -> y -> x^c -> y^c -> x,
# on bit 1 it cycles x -> y^c -> x^c -> y -> x.
_STEP = {
    (0, "x"): "y", (0, "xc"): "yc", (0, "y"): "xc", (0, "yc"): "x",
    (1, "x"): "yc", (1, "xc"): "y", (1, "y"): "x", (1, "yc"): "xc",
}


def _roles(pair: BlockPair) -> dict[str, str]:
    return {"x": pair.x, "y": pair.y,
            "xc": dna.complement(pair.x), "yc": dna.complement(pair.y)}


def psi_step(bit: int | str, block: str, pair: BlockPair) -> str:
    """Next block after ``block`` when consuming ``bit``."""
    bit = int(bit)
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    roles = _roles(pair)
    by_block = {v: k for k, v in roles.items()}
    role = by_block.get(block)
    if role is None:
        raise ValueError(f"block {block!r} is not in the state set")
    return roles[_STEP[(bit, role)]]


def psi_encode(bits, pair: BlockPair) -> str:
    """Encode a binary word: first block is x on 0 / x^c on 1, then step."""
    seq = [int(b) for b in bits]
    if not seq:
        raise ValueError("cannot encode an empty word")
    if any(b not in (0, 1) for b in seq):
        raise ValueError("bits must be 0 or 1")
    roles = _roles(pair)
    role = "x" if seq[0] == 0 else "xc"
    out = [roles[role]]
    for b in seq[1:]:
        role = _STEP[(b, role)]
        out.append(roles[role])
    return "".join(out)


def d_nho(a, b, ell: int) -> int:
    """Block-weighted distance: l times the paired gaps of the support set.

    The support set (positions where a and b differ, 1-based) is padded
    with n+1 when its size is odd; consecutive members are then paired and
    their gaps summed.
    """
    if ell < 1:
        raise ValueError("block length must be >= 1")
    a, b = list(a), list(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    support = [i + 1 for i, (u, v) in enumerate(zip(a, b)) if u != v]
    if not support:
        return 0
    if len(support) % 2:
        support.append(len(a) + 1)
    return ell * sum(support[i + 1] - support[i]
                     for i in range(0, len(support), 2))


def gc_weight_predict(pair: BlockPair, n: int) -> int:
    """GC-weight of any encoded word of n blocks (complement-invariant)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    wx = dna.gc_weight(pair.x)
    wy = dna.gc_weight(pair.y)
    if n % 2 == 0:
        return (n // 2) * (wx + wy)
    return wx + ((n - 1) // 2) * (wx + wy)


def block_pair_rrc_admissible(pair: BlockPair) -> bool:
    """True iff H(x^rc, y) = H(x^r, y) = l, the premise for the reverse and
    reverse-complement floors on encoded codes."""
    ell = pair.ell
    return (dna.hamming(dna.reverse_complement(pair.x), pair.y) == ell
            and dna.hamming(dna.reverse(pair.x), pair.y) == ell)


def block_pair_tandem_admissible(pair: BlockPair) -> bool:
    """True iff xy, xy^c, yx and yx^c are tandem-free at repeat length l,
    which makes every encoded word tandem-free at repeat length l."""
    x, y = pair.x, pair.y
    xc, yc = dna.complement(x), dna.complement(y)
    ell = pair.ell
    return all(dna.is_tandem_free(s, ell) for s in (x + y, x + yc, y + x, y + xc))


def _gf2_span(rows: tuple[str, ...]) -> list[str]:
    gen = np.array([[int(c) for c in row] for row in rows], dtype=np.uint8)
    k = gen.shape[0]
    msgs = ((np.arange(2 ** k)[:, None] >> np.arange(k)[None, :]) & 1).astype(np.uint8)
    words = msgs @ gen % 2
    return ["".join(str(int(t)) for t in row) for row in words]


def builtin_binary_code(name: str) -> Codebook:
    """Named binary codes the constructions are demonstrated on."""
    if name == "repetition4":
        return Codebook.from_words(["0000", "1111"], "binary")
    if name == "hamming_7_4":
        return Codebook.from_words(_gf2_span(_HAMMING_7_4_ROWS), "binary")
    if name == "golay_23_12":
        rows = tuple("0" * i + "".join(str(c) for c in _GOLAY_G) + "0" * (11 - i)
                     for i in range(12))
        return Codebook.from_words(_gf2_span(rows), "binary")
    raise ValueError(f"unknown builtin code {name!r} "
                     f"(choose from {', '.join(BUILTIN_CODES)})")


def load_binary_code(path) -> Codebook:
    """Read a binary codebook file (common codebook format)."""
    book = formats.load_codebook(path)
    if book.alphabet != "binary":
        raise ValueError(f"expected a binary codebook, got {book.alphabet}")
    return book


def build_dna_code(c: Codebook, pair: BlockPair) -> Codebook:
    """Encode every word of a binary code; the image is an (n*l, M) DNA code
    whose minimum Hamming distance equals the code's minimum block-weighted
    distance."""
    if c.alphabet != "binary":
        raise ValueError("construction needs a binary codebook")
    return Codebook.from_words([psi_encode(w, pair) for w in c.words], "DNA")


def min_nho_distance(c: Codebook, ell: int) -> int:
    """Minimum block-weighted distance by full pairwise scan."""
    if c.size < 2:
        raise ValueError("minimum distance undefined for codes of size < 2")
    words = c.words
    return min(d_nho(words[i], words[j], ell)
               for i in range(len(words)) for j in range(i + 1, len(words)))


def min_nho_distance_linear(c: Codebook, ell: int) -> int:
    """Minimum block-weighted distance of a linear binary code.

    The distance depends only on the positions where two words differ, so
    for a code closed under XOR it suffices to scan the nonzero words
    against zero (single-profile scan).
    """
    zero = "0" * c.n
    if zero not in c.words:
        raise ValueError("linear scan needs the all-zero word in the code")
    return min(d_nho(zero, w, ell) for w in c.words if w != zero)
