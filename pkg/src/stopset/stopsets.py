"""Stopping sets, dead-end sets, incorrigible sets and their enumerators.

Stopping and dead-end sets are properties of a parity-check matrix;
incorrigible sets are properties of the code alone.  Enumerators count
these sets by size with exact integers.  Full-subset enumeration is
capped at n <= 28 by default (override with the STOPSET_MAX_N env var).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .codes import Enumerator, LinearCode
from .gf2 import BitMatrix, as_mask, rank, select_columns

_DEFAULT_MAX_N = 28
_CHUNK = 1 << 20

OPTIMAL_MAX_N = 20
OPTIMAL_MAX_DUAL_DIM = 16


def _enumeration_limit() -> int:
    env = os.environ.get("STOPSET_MAX_N")
    return int(env) if env else _DEFAULT_MAX_N


def _check_enumeration_guard(n: int) -> None:
    limit = _enumeration_limit()
    if n > limit:
        raise ValueError(f"n={n} exceeds subset enumeration guard {limit} (set STOPSET_MAX_N to override)")


def _mask_dtype(n: int):
    return np.uint32 if n <= 32 else np.uint64


def _chunks(n: int) -> Iterable[np.ndarray]:
    dtype = _mask_dtype(n)
    total = 1 << n
    for start in range(0, total, _CHUNK):
        yield np.arange(start, min(start + _CHUNK, total), dtype=dtype)


def _span_array(rows: tuple[int, ...], dtype) -> np.ndarray:
    """All GF(2) combinations of the given rows, by repeated doubling."""
    span = np.zeros(1, dtype=dtype)
    for row in rows:
        span = np.concatenate([span, span ^ dtype(row)])
    return span


def _upward_closure(flags: np.ndarray, n: int) -> np.ndarray:
    """Mark every superset of a marked subset (subset-lattice OR)."""
    g = flags.copy()
    for j in range(n):
        view = g.reshape(-1, 2, 1 << j)
        view[:, 1, :] |= view[:, 0, :]
    return g


# ---------------------------------------------------------------------------
# predicates

def is_codeword_support(h: BitMatrix, subset: int | Iterable[int]) -> bool:
    """True iff every row of H restricted to the subset has even weight."""
    m = as_mask(subset)
    return all((row & m).bit_count() % 2 == 0 for row in h.rows)


def is_stopping_set(h: BitMatrix, subset: int | Iterable[int]) -> bool:
    """True iff no row of H restricted to the subset has weight one."""
    m = as_mask(subset)
    return all((row & m).bit_count() != 1 for row in h.rows)


def peel_closure(h: BitMatrix, subset: int | Iterable[int]) -> int:
    """Remove coordinates checked alone by some row, until fixpoint.

    The result is the unique maximal stopping set inside the subset;
    empty iff the subset contains no nonempty stopping set.  Removal
    order does not affect the fixpoint.
    """
    m = as_mask(subset)
    changed = True
    while changed and m:
        changed = False
        for row in h.rows:
            t = row & m
            if t and t.bit_count() == 1:
                m ^= t
                changed = True
    return m


def is_incorrigible(code: LinearCode, subset: int | Iterable[int]) -> bool:
    """True iff the subset contains the support of a nonzero codeword.

    Tested as linear dependence of the parity-check columns indexed by
    the subset.
    """
    m = as_mask(subset)
    cols = select_columns(code.parity_basis, m)
    return rank(cols) < cols.n


# ---------------------------------------------------------------------------
# enumerators

def stopping_set_enumerator(h: BitMatrix) -> Enumerator:
    """S(x): S_i = number of stopping sets of size i for H."""
    _check_enumeration_guard(h.n)
    dtype = _mask_dtype(h.n)
    rows = [dtype(r) for r in h.rows]
    counts = np.zeros(h.n + 1, dtype=np.int64)
    for masks in _chunks(h.n):
        ok = np.ones(masks.shape, dtype=bool)
        for row in rows:
            ok &= np.bitwise_count(masks & row) != 1
        sizes = np.bitwise_count(masks).astype(np.intp)
        counts += np.bincount(sizes[ok], minlength=h.n + 1)
    return Enumerator(tuple(int(c) for c in counts))


def batch_peel_residuals(h: BitMatrix, masks: np.ndarray) -> np.ndarray:
    """Peel closure of every mask in the array, as one batched fixpoint.

    Equivalent to calling peel_closure per mask; the fixpoint does not
    depend on sweep order.
    """
    rows = [masks.dtype.type(r) for r in h.rows]
    residual = masks.copy()
    changed = True
    while changed:
        changed = False
        for row in rows:
            t = residual & row
            single = np.bitwise_count(t) == 1
            if single.any():
                residual[single] ^= t[single]
                changed = True
    return residual


def dead_end_enumerator(h: BitMatrix) -> Enumerator:
    """D(x): D_i = number of size-i sets whose peel closure is nonempty.

    Computed by running the peeling fixpoint on every subset at once.
    """
    _check_enumeration_guard(h.n)
    counts = np.zeros(h.n + 1, dtype=np.int64)
    for masks in _chunks(h.n):
        dead = batch_peel_residuals(h, masks) != 0
        sizes = np.bitwise_count(masks).astype(np.intp)
        counts += np.bincount(sizes[dead], minlength=h.n + 1)
    return Enumerator(tuple(int(c) for c in counts))


def incorrigible_enumerator(code: LinearCode) -> Enumerator:
    """I(x): I_i = number of size-i sets containing a nonzero-codeword support."""
    n = code.n
    _check_enumeration_guard(n)
    dtype = _mask_dtype(n)
    supports = _span_array(code.generator_basis.rows, dtype)
    flags = np.zeros(1 << n, dtype=bool)
    flags[supports] = True
    flags[0] = False  # the zero codeword does not count
    incorr = _upward_closure(flags, n)
    sizes = np.bitwise_count(np.arange(1 << n, dtype=dtype)).astype(np.intp)
    counts = np.bincount(sizes[incorr], minlength=n + 1)
    return Enumerator(tuple(int(c) for c in counts))


def stopping_distance(h: BitMatrix) -> int:
    """Smallest size of a nonempty stopping set; n+1 if none exists."""
    s = stopping_set_enumerator(h)
    for i in range(1, h.n + 1):
        if s[i] > 0:
            return i
    return h.n + 1


# ---------------------------------------------------------------------------
# complete-matrix (optimal) enumerators

@dataclass(frozen=True)
class StoppingProfile:
    """Stopping and dead-end enumerators of one parity-check matrix."""

    stopping: Enumerator
    dead_end: Enumerator
    stopping_distance: int

    @property
    def no_nonempty_stopping_set(self) -> bool:
        return self.stopping_distance > self.stopping.n


def profile(h: BitMatrix) -> StoppingProfile:
    """S(x), D(x) and s for an explicit parity-check matrix."""
    s_poly = stopping_set_enumerator(h)
    d_poly = dead_end_enumerator(h)
    s = next((i for i in range(1, h.n + 1) if s_poly[i] > 0), h.n + 1)
    return StoppingProfile(s_poly, d_poly, s)


def optimal_enumerators(code: LinearCode) -> StoppingProfile:
    """S*(x), D*(x), s*: enumerators of the complete parity-check matrix.

    Scans every subset against all 2**(n-k) dual codewords directly from
    the definitions; the complete matrix is never materialized.
    """
    n = code.n
    if n > OPTIMAL_MAX_N:
        raise ValueError(f"n={n} exceeds optimal-enumerator guard {OPTIMAL_MAX_N}")
    if n - code.k > OPTIMAL_MAX_DUAL_DIM:
        raise ValueError(
            f"n-k={n - code.k} exceeds optimal-enumerator dual guard {OPTIMAL_MAX_DUAL_DIM}"
        )
    dtype = _mask_dtype(n)
    duals = _span_array(code.parity_basis.rows, dtype)
    masks = np.arange(1 << n, dtype=dtype)
    ok = np.ones(masks.shape, dtype=bool)
    for w in duals:
        if w == 0:
            continue
        ok &= np.bitwise_count(masks & w) != 1
    sizes = np.bitwise_count(masks).astype(np.intp)
    s_counts = np.bincount(sizes[ok], minlength=n + 1)

    nonempty_stop = ok.copy()
    nonempty_stop[0] = False
    dead = _upward_closure(nonempty_stop, n)
    d_counts = np.bincount(sizes[dead], minlength=n + 1)

    s_poly = Enumerator(tuple(int(c) for c in s_counts))
    d_poly = Enumerator(tuple(int(c) for c in d_counts))
    s = next((i for i in range(1, n + 1) if s_poly[i] > 0), n + 1)
    return StoppingProfile(s_poly, d_poly, s)


# ---------------------------------------------------------------------------
# minimum-stopping characterization

@dataclass(frozen=True)
class Decomposition:
    """Coordinate split witnessing S*(x) = A(x).

    The code is, up to the identity permutation implied by the listed
    coordinate sets, a direct sum of repetition codes on the blocks, a
    full code on full_positions, and a zero code on zero_positions.
    """

    repetition_blocks: tuple[tuple[int, ...], ...]
    full_positions: tuple[int, ...]
    zero_positions: tuple[int, ...]


def minimum_stopping_decomposition(code: LinearCode) -> Optional[Decomposition]:
    """Structural minimum-stopping test, without computing S*(x).

    Returns the repetition/full/zero coordinate split iff the optimal
    stopping set enumerator equals the weight enumerator; None otherwise.
    """
    n = code.n
    gen_rows = code.generator_basis.rows
    par_rows = code.parity_basis.rows

    zero_positions = []
    full_positions = []
    remaining = []
    for j in range(1, n + 1):
        bit = 1 << (j - 1)
        if all(row & bit == 0 for row in gen_rows):
            zero_positions.append(j)
        elif all(row & bit == 0 for row in par_rows):
            full_positions.append(j)  # the unit vector e_j is a codeword
        else:
            remaining.append(j)

    # Group remaining coordinates by equality of generator columns
    # (column equality holds iff c_i = c_j for every codeword, so the
    # grouping does not depend on the basis choice).
    groups: dict[int, list[int]] = {}
    for j in remaining:
        bit = 1 << (j - 1)
        col = 0
        for i, row in enumerate(gen_rows):
            if row & bit:
                col |= 1 << i
        groups.setdefault(col, []).append(j)

    blocks = sorted(groups.values())
    if any(len(b) < 2 for b in blocks):
        return None
    for block in blocks:
        indicator = 0
        for j in block:
            indicator |= 1 << (j - 1)
        if not code.contains(indicator):
            return None
    if code.k != len(blocks) + len(full_positions):
        return None
    return Decomposition(
        tuple(tuple(b) for b in blocks),
        tuple(full_positions),
        tuple(zero_positions),
    )
