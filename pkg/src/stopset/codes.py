"""Binary linear [n,k,d] block codes given by parity-check matrices.

A code is the null space of the row space of its parity-check matrix;
the row space itself is the dual code.  Values are immutable after
construction and all operations are pure.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .gf2 import BitMatrix, null_space_basis, parse_matrix, row_space_iter, rref

WEIGHT_ENUM_LIMIT = 28  # enumerating 2**k codewords
_DOUBLING_BITS = 20  # per-chunk codeword array size for counting


@dataclass(frozen=True)
class Enumerator:
    """Exact integer coefficient vector of a set-size enumerator.

    coefficients[i] counts objects of size i; length is n+1.
    """

    coefficients: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def total(self) -> int:
        return sum(self.coefficients)

    def poly_str(self) -> str:
        """Render in the conventional polynomial style, e.g. 1+14x^4+x^8."""
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else str(c)
                power = "x" if i == 1 else f"x^{i}"
                terms.append(coef + power)
        return "+".join(terms) if terms else "0"

    def to_json_obj(self) -> dict:
        return {
            "coefficients": [str(c) for c in self.coefficients],
            "poly": self.poly_str(),
        }


def _gray_iter(basis_rows: Sequence[int]) -> Iterator[int]:
    """All GF(2) combinations of independent rows, Gray-code order."""
    v = 0
    yield v
    for c in range(1, 1 << len(basis_rows)):
        v ^= basis_rows[(c & -c).bit_length() - 1]
        yield v


def _span_weight_counts(basis_rows: Sequence[int], n: int) -> list[int]:
    """Weight histogram of the 2**len(basis_rows) span elements."""
    k = len(basis_rows)
    counts = np.zeros(n + 1, dtype=np.int64)
    low = basis_rows[: min(k, _DOUBLING_BITS)]
    block = np.zeros(1, dtype=np.uint64)
    for b in low:
        block = np.concatenate([block, block ^ np.uint64(b)])
    for prefix in _gray_iter(basis_rows[len(low):]):
        words = block ^ np.uint64(prefix)
        counts += np.bincount(np.bitwise_count(words), minlength=n + 1).astype(np.int64)
    return [int(c) for c in counts]


class LinearCode:
    """An [n,k,d] binary linear code with canonical parity/generator bases."""

    def __init__(self, parity_basis: BitMatrix, generator_basis: BitMatrix):
        if parity_basis.n != generator_basis.n:
            raise ValueError("parity and generator lengths disagree")
        if parity_basis.n < 1:
            raise ValueError("code length must be positive")
        self.parity_basis = parity_basis
        self.generator_basis = generator_basis
        self.n = parity_basis.n
        self.k = generator_basis.r
        if parity_basis.r + self.k != self.n:
            raise ValueError("basis ranks do not add up to n")

    @classmethod
    def from_parity_check(cls, h: BitMatrix) -> "LinearCode":
        """Build the code defined by any parity-check matrix.

        Dependent or duplicate rows are legal and do not change the code.
        """
        reduced, _ = rref(h)
        return cls(reduced, null_space_basis(h))

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return (
            self.n == other.n
            and self.parity_basis.rows == other.parity_basis.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.parity_basis.rows))

    def contains(self, word: int) -> bool:
        """Codeword membership: word satisfies every parity check."""
        return all((row & word).bit_count() % 2 == 0 for row in self.parity_basis.rows)

    def codewords(self) -> Iterator[int]:
        """All 2**k codewords (Gray-code order, starts at zero)."""
        if self.k > WEIGHT_ENUM_LIMIT:
            raise ValueError(f"k={self.k} exceeds codeword enumeration limit {WEIGHT_ENUM_LIMIT}")
        return _gray_iter(self.generator_basis.rows)

    @cached_property
    def weight_enumerator(self) -> Enumerator:
        """A(x): A_i = number of codewords of weight i."""
        if self.k > WEIGHT_ENUM_LIMIT:
            raise ValueError(f"k={self.k} exceeds codeword enumeration limit {WEIGHT_ENUM_LIMIT}")
        return Enumerator(tuple(_span_weight_counts(self.generator_basis.rows, self.n)))

    @cached_property
    def minimum_distance(self) -> int | float:
        """Least nonzero-codeword weight; math.inf for the zero code."""
        a = self.weight_enumerator
        for i in range(1, self.n + 1):
            if a[i] > 0:
                return i
        return math.inf

    @property
    def d(self) -> int | float:
        return self.minimum_distance

    def dual(self) -> "LinearCode":
        """The [n, n-k] dual code: generator and parity roles swap."""
        return LinearCode(self.generator_basis, self.parity_basis)


def direct_sum(parts: Sequence[LinearCode]) -> LinearCode:
    """Juxtaposition code: block-diagonal parity-check structure."""
    if not parts:
        raise ValueError("direct_sum needs at least one part")
    n = sum(p.n for p in parts)
    parity_rows: list[int] = []
    gen_rows: list[int] = []
    offset = 0
    for p in parts:
        parity_rows.extend(row << offset for row in p.parity_basis.rows)
        gen_rows.extend(row << offset for row in p.generator_basis.rows)
        offset += p.n
    return LinearCode(
        rref(BitMatrix(tuple(parity_rows), n))[0],
        rref(BitMatrix(tuple(gen_rows), n))[0],
    )


def repetition(n: int) -> LinearCode:
    """The [n,1,n] repetition code {all-zero, all-one}."""
    if n < 1:
        raise ValueError("repetition length must be >= 1")
    rows = tuple(1 | (1 << i) for i in range(1, n))
    return LinearCode.from_parity_check(BitMatrix(rows, n))


def full_code(n: int) -> LinearCode:
    """The [n,n,1] code of all binary words."""
    if n < 1:
        raise ValueError("full code length must be >= 1")
    return LinearCode.from_parity_check(BitMatrix((), n))


def zero_code(n: int) -> LinearCode:
    """The [n,0,inf] code containing only the zero word."""
    if n < 1:
        raise ValueError("zero code length must be >= 1")
    return LinearCode.from_parity_check(BitMatrix(tuple(1 << i for i in range(n)), n))


# The standard 8x8 parity-check matrix for the [8,4,4] Reed-Muller code,
# embedded verbatim; first 4 or 5 rows are the H_4 / H_5 benchmarks.
_H8_TEXT = """
10101010
01010101
00110011
00001111
11110000
11001100
01101001
10010110
"""

_HAMMING_7_4_TEXT = """
1010101
0110011
0001111
"""


def _h8_matrix() -> BitMatrix:
    return parse_matrix(_H8_TEXT)


def rm_8_4_4() -> LinearCode:
    """The self-dual [8,4,4] Reed-Muller code."""
    return LinearCode.from_parity_check(_h8_matrix())


def hamming_7_4() -> LinearCode:
    """The [7,4,3] Hamming code (columns are all nonzero triples)."""
    return LinearCode.from_parity_check(parse_matrix(_HAMMING_7_4_TEXT))


def _h14_matrix() -> BitMatrix:
    code = rm_8_4_4()
    words = sorted(w for w in row_space_iter(code.parity_basis) if w.bit_count() == 4)
    return BitMatrix(tuple(words), 8)


_NAMED_CODES = {
    "rm_8_4_4": rm_8_4_4,
    "hamming_7_4": hamming_7_4,
}

_PARAM_CODES = {
    "repetition": repetition,
    "full": full_code,
    "zero": zero_code,
}


def catalog(name: str) -> LinearCode | BitMatrix:
    """Look up a named code or benchmark matrix.

    Codes: ``repetition(n)``, ``full(n)``, ``zero(n)``, ``rm_8_4_4``,
    ``hamming_7_4``.  Matrices: ``H_4``, ``H_5``, ``H_8``, ``H_14``.
    """
    name = name.strip()
    if name in _NAMED_CODES:
        return _NAMED_CODES[name]()
    m = re.fullmatch(r"(repetition|full|zero)\((\d+)\)", name)
    if m:
        return _PARAM_CODES[m.group(1)](int(m.group(2)))
    m = re.fullmatch(r"H_(4|5|8)", name)
    if m:
        h8 = _h8_matrix()
        return BitMatrix(h8.rows[: int(m.group(1))], 8)
    if name == "H_14":
        return _h14_matrix()
    raise ValueError(f"unknown catalog name {name!r}")
