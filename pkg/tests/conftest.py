"""Shared helpers: seeded random codes and brute-force oracles.

The oracles here deliberately avoid the library's vectorized paths:
stopping sets are tested row by row from the definition, dead-end sets
by scanning submasks for a nonempty stopping subset, incorrigible sets
by scanning codeword supports.  They are the independent reference the
fast implementations are checked against.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

from stopset.codes import Enumerator, LinearCode
from stopset.gf2 import BitMatrix, row_space_iter


def random_parity_matrix(rng: random.Random, n: int, rows: int) -> BitMatrix:
    return BitMatrix(tuple(rng.randrange(0, 1 << n) for _ in range(rows)), n)


def random_code(rng: random.Random, n: int, redundancy: int) -> LinearCode:
    return LinearCode.from_parity_check(random_parity_matrix(rng, n, redundancy))


def random_code_where(rng: random.Random, n_choices, redundancy_choices, pred, max_tries=10000) -> LinearCode:
    """Rejection-sample a random code satisfying pred."""
    for _ in range(max_tries):
        n = rng.choice(n_choices)
        code = random_code(rng, n, rng.choice(redundancy_choices))
        if pred(code):
            return code
    raise RuntimeError("could not sample a code matching the predicate")


def random_dual_spanning_matrix(rng: random.Random, code: LinearCode, extra_rows: int) -> BitMatrix:
    """The parity basis plus distinct random nonzero dual words."""
    basis = code.parity_basis.rows
    pool = [w for w in row_space_iter(code.parity_basis) if w and w not in set(basis)]
    extras = rng.sample(pool, min(extra_rows, len(pool)))
    return BitMatrix(basis + tuple(extras), code.n)


def extended_hamming(r: int) -> LinearCode:
    """The [2^r, 2^r - r - 1, 4] extended Hamming code."""
    n = 1 << r
    rows = []
    for i in range(r):
        row = 0
        for j in range(1, n):
            if (j >> i) & 1:
                row |= 1 << (j - 1)
        rows.append(row)
    rows.append((1 << n) - 1)  # overall parity
    return LinearCode.from_parity_check(BitMatrix(tuple(rows), n))


# ---------------------------------------------------------------------------
# brute-force oracles

def oracle_is_stopping(h: BitMatrix, mask: int) -> bool:
    return all((row & mask).bit_count() != 1 for row in h.rows)


def oracle_stopping_enumerator(h: BitMatrix) -> Enumerator:
    counts = [0] * (h.n + 1)
    for mask in range(1 << h.n):
        if oracle_is_stopping(h, mask):
            counts[mask.bit_count()] += 1
    return Enumerator(tuple(counts))


def oracle_dead_end_enumerator(h: BitMatrix) -> Enumerator:
    """Dead-end = contains a nonempty stopping set, by submask scan."""
    stopping = [oracle_is_stopping(h, m) for m in range(1 << h.n)]
    counts = [0] * (h.n + 1)
    for mask in range(1, 1 << h.n):
        sub = mask
        dead = False
        while sub:
            if stopping[sub]:
                dead = True
                break
            sub = (sub - 1) & mask
        if dead:
            counts[mask.bit_count()] += 1
    return Enumerator(tuple(counts))


def oracle_incorrigible_enumerator(code: LinearCode) -> Enumerator:
    supports = [c for c in code.codewords() if c]
    counts = [0] * (code.n + 1)
    for mask in range(1 << code.n):
        if any(c & ~mask == 0 for c in supports):
            counts[mask.bit_count()] += 1
    return Enumerator(tuple(counts))


def oracle_minimum_distance(code: LinearCode):
    weights = [c.bit_count() for c in code.codewords() if c]
    return min(weights) if weights else math.inf


def contained_supports(code: LinearCode, mask: int) -> list[int]:
    return [c for c in code.codewords() if c and c & ~mask == 0]


def poly_multiply(a: Enumerator, b: Enumerator) -> Enumerator:
    out = [0] * (a.n + b.n + 1)
    for i, ca in enumerate(a.coefficients):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coefficients):
            out[i + j] += ca * cb
    return Enumerator(tuple(out))


def all_masks_of_size(n: int, size: int):
    for combo in combinations(range(n), size):
        mask = 0
        for j in combo:
            mask |= 1 << j
        yield mask
