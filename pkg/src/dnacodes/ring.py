"""The 16-element chain ring Z4 + uZ4 (u^2 = 2+2u) and its DNA machinery.

Elements a + b*u are written canonically as "0", "1", ..., "u", "2u",
"1+u", ..., "3+3u".  Internally an element is the index 4*a + b, which
makes numpy table lookups cheap and sorts words in (a, b)-lexicographic
order.  The bijection onto dinucleotides, the induced distance with its
matrix arrangement, and the Reed-Muller-style generator family live here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .codes import Codebook


@dataclass(frozen=True, order=True)
class RingElement:
    """Element a + b*u of Z4 + uZ4 with u^2 = 2 + 2u."""

    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % 4)
        object.__setattr__(self, "b", self.b % 4)

    def __add__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "RingElement":
        return RingElement(-self.a, -self.b)

    def __mul__(self, other: "RingElement") -> "RingElement":
        # (a+bu)(c+du) = ac + 2bd + (ad + bc + 2bd) u via u^2 = 2+2u
        a, b, c, d = self.a, self.b, other.a, other.b
        return RingElement(a * c + 2 * b * d, a * d + b * c + 2 * b * d)

    @property
    def index(self) -> int:
        return 4 * self.a + self.b

    @classmethod
    def from_index(cls, idx: int) -> "RingElement":
        return cls(idx // 4, idx % 4)

    @property
    def is_unit(self) -> bool:
        return self.a % 2 == 1

    @property
    def name(self) -> str:
        if self.b == 0:
            return str(self.a)
        upart = "u" if self.b == 1 else f"{self.b}u"
        return upart if self.a == 0 else f"{self.a}+{upart}"

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "RingElement":
        elem = _BY_NAME.get(text.strip())
        if elem is None:
            raise ValueError(f"not a canonical ring element: {text!r}")
        return elem


ELEMENTS = tuple(RingElement.from_index(i) for i in range(16))
_BY_NAME = {e.name: e for e in ELEMENTS}
ZERO = RingElement(0, 0)
ONE = RingElement(1, 0)
U = RingElement(0, 1)
UNITS = tuple(e for e in ELEMENTS if e.is_unit)
ZERO_DIVISORS = tuple(e for e in ELEMENTS if not e.is_unit)

ADD_TABLE = np.array([[(x + y).index for y in ELEMENTS] for x in ELEMENTS],
                     dtype=np.uint8)
MUL_TABLE = np.array([[(x * y).index for y in ELEMENTS] for x in ELEMENTS],
                     dtype=np.uint8)


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


# ---------------------------------------------------------------------------
# The bijection onto dinucleotides and its distance
# ---------------------------------------------------------------------------

_GAU_IMAGE_BY_NAME = {
    "0": "AA", "1": "AG", "2": "GG", "3": "GA",
    "u": "TG", "1+u": "TA", "2+u": "CA", "3+u": "CG",
    "2u": "CC", "1+2u": "CT", "2+2u": "TT", "3+2u": "TC",
    "3u": "GT", "1+3u": "GC", "2+3u": "AC", "3+3u": "AT",
}
GAU_IMAGE = tuple(_GAU_IMAGE_BY_NAME[e.name] for e in ELEMENTS)
_GAU_INVERSE = {img: ELEMENTS[i] for i, img in enumerate(GAU_IMAGE)}

# Square arrangement of the ring: two elements share a row (column) exactly
# when their images share the second (first) base, so the image distance
# decomposes into a row mismatch plus a column mismatch.
GAU_MATRIX = [
    ["0", "3", "2+u", "1+u"],
    ["1", "2", "3+u", "u"],
    ["2+3u", "1+3u", "2u", "3+2u"],
    ["3+3u", "3u", "1+2u", "2+2u"],
]
_GAU_POS = {}
for _i, _row in enumerate(GAU_MATRIX):
    for _j, _name in enumerate(_row):
        _GAU_POS[RingElement.parse(_name).index] = (_i, _j)


def gau_map(x: RingElement) -> str:
    """Image of a ring element: one of the 16 dinucleotides."""
    return GAU_IMAGE[x.index]


def gau_map_vector(xs) -> str:
    """Blockwise image of a ring vector (length doubles)."""
    return "".join(GAU_IMAGE[_as_index(x)] for x in xs)


def gau_inverse(d: str) -> tuple[RingElement, ...]:
    """Preimage of a DNA string of even length."""
    if len(d) % 2:
        raise ValueError("preimage needs an even-length DNA string")
    out = []
    for i in range(0, len(d), 2):
        block = d[i:i + 2]
        elem = _GAU_INVERSE.get(block)
        if elem is None:
            raise ValueError(f"not a dinucleotide over ACGT: {block!r}")
        out.append(elem)
    return tuple(out)


def gau_distance(x: RingElement, y: RingElement) -> int:
    """Ring distance agreeing with the Hamming distance of the images."""
    i, j = _GAU_POS[x.index]
    i2, j2 = _GAU_POS[y.index]
    return min(1, (i + 3 * i2) % 4) + min(1, (j + 3 * j2) % 4)


def gau_distance_vector(xs, ys) -> int:
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys):
        raise ValueError("length mismatch")
    return sum(gau_distance(ELEMENTS[_as_index(x)], ELEMENTS[_as_index(y)])
               for x, y in zip(xs, ys))


def _as_index(x) -> int:
    if isinstance(x, RingElement):
        return x.index
    if isinstance(x, str):
        return RingElement.parse(x).index
    return int(x)


# ---------------------------------------------------------------------------
# Generator matrices, spans, matrix types
# ---------------------------------------------------------------------------

def _as_matrix(rows) -> np.ndarray:
    mat = np.array([[_as_index(x) for x in row] for row in rows], dtype=np.uint8)
    if mat.ndim != 2 or mat.shape[0] < 1 or mat.shape[1] < 1:
        raise ValueError("generator matrix must be a nonempty 2-d array")
    return mat


def _span_iter(mat: np.ndarray) -> np.ndarray:
    """Row-by-row span accumulation, deduplicating between rows."""
    n = mat.shape[1]
    acc = np.zeros((1, n), dtype=np.uint8)
    coeffs = np.arange(16, dtype=np.uint8)
    for row in mat:
        prods = MUL_TABLE[coeffs[:, None], row[None, :]]
        acc = ADD_TABLE[acc[None, :, :], prods[:, None, :]].reshape(-1, n)
        acc = np.unique(acc, axis=0)
    return acc


def span_matrix(rows) -> np.ndarray:
    """All distinct R-linear combinations as an index matrix, sorted."""
    mat = _as_matrix(rows)
    if mat.shape[0] > 6:
        raise ValueError("span enumeration supports at most 6 generator rows")
    return _span_iter(mat)


def matrix_to_codebook(mat: np.ndarray) -> Codebook:
    words = [" ".join(ELEMENTS[i].name for i in row) for row in mat]
    return Codebook.from_words(words, "ringR")


def span(rows) -> Codebook:
    """Span of a generator matrix as a ring codebook."""
    return matrix_to_codebook(span_matrix(rows))


@dataclass(frozen=True)
class MatrixType:
    k0: int
    k1: int
    k2: int
    k3: int

    @property
    def span_size(self) -> int:
        return 16 ** self.k0 * 8 ** self.k1 * 4 ** self.k2 * 2 ** self.k3


def size_from_type(t: MatrixType) -> int:
    return t.span_size


_PIVOT_LEVEL = {ONE.index: 0, U.index: 1, RingElement(2, 0).index: 2,
                RingElement(0, 2).index: 3}
_LEVEL_IDEAL = (
    frozenset(range(16)),                                    # <1> = R
    frozenset(e.index for e in ELEMENTS if e.a % 2 == 0),    # <u>
    frozenset(e.index for e in ELEMENTS
              if e.a % 2 == 0 and e.b % 2 == 0),             # <2>
    frozenset((0, RingElement(0, 2).index)),                 # <2u>
)


def type_of_standard_form(rows) -> MatrixType:
    """Recognize a block-triangular standard-form matrix and read its type.

    Only a recognizer: no row reduction over the chain ring is attempted.
    Rows must carry pivots 1, u, 2, 2u on the diagonal in that block order,
    with zeros to the left and every entry inside the pivot's ideal.
    """
    mat = _as_matrix(rows)
    k, n = mat.shape
    if k > n:
        raise ValueError("unsupported shape: more rows than columns")
    counts = [0, 0, 0, 0]
    prev_level = 0
    for r in range(k):
        if any(mat[r][c] != 0 for c in range(r)):
            raise ValueError("unsupported shape: nonzero entry left of the diagonal")
        level = _PIVOT_LEVEL.get(int(mat[r][r]))
        if level is None or level < prev_level:
            raise ValueError("unsupported shape: diagonal pivots must be "
                             "1, u, 2, 2u in block order")
        if any(int(x) not in _LEVEL_IDEAL[level] for x in mat[r]):
            raise ValueError("unsupported shape: row entries leave the pivot ideal")
        counts[level] += 1
        prev_level = level
    return MatrixType(*counts)


# ---------------------------------------------------------------------------
# Reed-Muller-type family over the ring
# ---------------------------------------------------------------------------

def _check_rm_spec(r: int, m: int, z: RingElement):
    if not 0 <= r <= m <= 5:
        raise ValueError("need 0 <= r <= m <= 5")
    if z == ZERO:
        raise ValueError("z must be a nonzero ring element")


def rm_generator(r: int, m: int, z: RingElement | str) -> list[list[RingElement]]:
    """Generator matrix of the order-r code on 2^m columns.

    Base case is the all-ones row; the full-order case appends the row
    (0 ... 0 z); in between the matrix doubles [[G(r), G(r)], [0, G(r-1)]].
    """
    z = RingElement.parse(z) if isinstance(z, str) else z
    _check_rm_spec(r, m, z)

    def build(rr: int, mm: int) -> list[list[RingElement]]:
        cols = 2 ** mm
        if rr == 0:
            return [[ONE] * cols]
        if rr == mm:
            return build(mm - 1, mm) + [[ZERO] * (cols - 1) + [z]]
        top = [row + row for row in build(rr, mm - 1)]
        bottom = [[ZERO] * (cols // 2) + row for row in build(rr - 1, mm - 1)]
        return top + bottom

    return build(r, m)


def _z_class(z: RingElement) -> str:
    if z.is_unit:
        return "unit"
    if z.name == "2u":
        return "2u"
    if z.name in ("2", "2+2u"):
        return "2"
    return "u"  # u, 2+u, 3u, 2+3u


def rm_parameters(r: int, m: int, z: RingElement | str) -> tuple[int, int, int]:
    """(n, M, d) of the order-r ring code: length, span size, min distance.

    Distance law (validated by span enumeration): r = 0 has no z-row and
    constant codewords only, giving 2^m for every nonzero z.  For
    1 <= r < m the generator carries a unit-coefficient row of support
    2^(m-r), so the distance is 2^(m-r) regardless of z.  Only at r = m
    does the z-class matter: 2 when z is in {2, 2u, 2+2u} (that ideal has
    no distance-1 neighbour of any element), else 1.
    """
    z = RingElement.parse(z) if isinstance(z, str) else z
    _check_rm_spec(r, m, z)
    n = 2 ** m
    k_total = sum(math.comb(m, i) for i in range(r + 1))
    z_rows = sum(math.comb(m - 1, i) for i in range(r))
    exponent = {
        "2u": 4 * k_total - 3 * z_rows,
        "2": 4 * k_total - 2 * z_rows,
        "u": 4 * k_total - z_rows,
        "unit": 4 * k_total,
    }[_z_class(z)]
    size = 2 ** exponent
    if r == 0:
        dist = 2 ** m
    elif r < m or _z_class(z) in ("u", "unit"):
        dist = 2 ** (m - r)
    else:
        dist = 2 ** (m - r + 1)
    return n, size, dist


def rm_span_matrix(r: int, m: int, z: RingElement | str) -> np.ndarray:
    return _span_iter(_as_matrix(rm_generator(r, m, z)))


def ring_matrix_to_dna(mat: np.ndarray) -> Codebook:
    """Blockwise image of a ring codebook matrix as a DNA codebook."""
    blocks = np.array([list(img) for img in GAU_IMAGE])
    chars = blocks[mat]  # (M, n, 2)
    words = ["".join(row.reshape(-1)) for row in chars]
    return Codebook.from_words(words, "DNA")


def rm_dna_code(r: int, m: int, z: RingElement | str) -> Codebook:
    """DNA image of the order-r ring code: length 2^(m+1), closed under
    reverse and reverse-complement."""
    z = RingElement.parse(z) if isinstance(z, str) else z
    _, size, _ = rm_parameters(r, m, z)
    if size > 2 ** 24:
        raise ValueError(f"span of size {size} is too large to enumerate")
    return ring_matrix_to_dna(rm_span_matrix(r, m, z))
