"""Z5 codes mapped onto the dinucleotide set {AA, AC, CA, CC, TC}.

Strings built from these five blocks contain no G and avoid every stem of
length three or more, which is what makes the family attractive for
folding-sensitive storage.
"""

from __future__ import annotations

import numpy as np

from .codes import Codebook
from .kernels import min_cross_hamming

PHI5 = ("CC", "CA", "AC", "AA", "TC")
_PHI5_INV = {img: i for i, img in enumerate(PHI5)}
SIGMA = frozenset(PHI5)


def phi5(x: int) -> str:
    """Image of a Z5 element as a dinucleotide block."""
    if not 0 <= x <= 4:
        raise ValueError("Z5 element must be in 0..4")
    return PHI5[x]


def phi5_inverse(block: str) -> int:
    idx = _PHI5_INV.get(block)
    if idx is None:
        raise ValueError(f"{block!r} is not one of the five code blocks")
    return idx


def phi5_encode(word) -> str:
    """Blockwise image of a Z5 word (iterable of digits or digit string)."""
    return "".join(phi5(int(x)) for x in word)


def phi5_decode(d: str) -> str:
    if len(d) % 2:
        raise ValueError("preimage needs an even-length DNA string")
    return "".join(str(phi5_inverse(d[i:i + 2])) for i in range(0, len(d), 2))


def g_k(k: int) -> np.ndarray:
    """Generator matrix family: k rows, 4^(k-1) columns over Z5.

    G_2 stacks the all-ones row on (1 2 3 4); G_k stacks the blockwise
    constant row (1..1 2..2 3..3 4..4) on four copies of G_(k-1).
    """
    if not 2 <= k <= 5:
        raise ValueError("k must be in 2..5")
    g = np.array([[1, 1, 1, 1], [1, 2, 3, 4]], dtype=np.uint8)
    for kk in range(3, k + 1):
        block = 4 ** (kk - 2)
        top = np.repeat(np.arange(1, 5, dtype=np.uint8), block)
        g = np.vstack([top, np.hstack([g, g, g, g])])
    return g


def span5_matrix(g: np.ndarray) -> np.ndarray:
    g = np.asarray(g, dtype=np.uint8) % 5
    k, n = g.shape
    if k > 6:
        raise ValueError("span enumeration supports at most 6 generator rows")
    acc = np.zeros((1, n), dtype=np.uint8)
    for row in g:
        prods = (np.arange(5, dtype=np.uint16)[:, None] * row[None, :]) % 5
        acc = (acc[None, :, :].astype(np.uint16) + prods[:, None, :]) % 5
        acc = np.unique(acc.reshape(-1, n).astype(np.uint8), axis=0)
    return acc


def span5(g: np.ndarray) -> Codebook:
    """All distinct Z5-linear combinations of the rows of g."""
    mat = span5_matrix(g)
    words = ["".join(str(int(t)) for t in row) for row in mat]
    return Codebook.from_words(words, "quinary")


def quinary_dna_code(k: int) -> Codebook:
    """DNA code of length 2^(2k-1) over the five-block alphabet."""
    mat = span5_matrix(g_k(k))
    words = ["".join(PHI5[t] for t in row) for row in mat]
    return Codebook.from_words(words, "DNA")


def min_rc_distance(c: Codebook) -> int:
    """Min over all ordered pairs (x = y included) of H(x, y^rc)."""
    if c.alphabet != "DNA":
        raise ValueError("reverse-complement distance needs a DNA codebook")
    mat = c.to_matrix()
    rc = (3 - mat[:, ::-1]).astype(np.uint8)
    return min_cross_hamming(mat, rc)
