"""Parity-check matrix constructions and row-count bounds.

Covers the complete (all dual codewords) matrix, low-weight dual-row
matrices, the adversarial construction that forces stopping distance 3,
exhaustive minimal-matrix search over dual-row subsets, and the known
closed-form bounds on the rows needed for optimal iterative decoding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .codes import LinearCode
from .gf2 import (
    BitMatrix,
    null_space_basis,
    permute_columns,
    rank,
    row_space_iter,
    select_columns,
    solve,
    transpose,
)
from .stopsets import incorrigible_enumerator, optimal_enumerators

COMPLETE_MAX_DUAL_DIM = 20
SEARCH_MAX_DUAL_WORDS = 20


def complete_matrix(code: LinearCode) -> BitMatrix:
    """All 2**(n-k) dual codewords as rows, ascending as integers.

    Includes the zero row, which no stopping or dead-end predicate ever
    reacts to; it is kept so the row count matches 2**(n-k).
    """
    if code.n - code.k > COMPLETE_MAX_DUAL_DIM:
        raise ValueError(f"n-k={code.n - code.k} exceeds complete-matrix guard {COMPLETE_MAX_DUAL_DIM}")
    return BitMatrix(tuple(sorted(row_space_iter(code.parity_basis))), code.n)


def weight_bounded_dual_matrix(code: LinearCode, w: int) -> BitMatrix:
    """All nonzero dual codewords of weight <= w, ascending as integers.

    For w >= k+1 the result is guaranteed to be a parity-check matrix of
    the code with dead-end enumerator equal to the incorrigible set
    enumerator.  For smaller w the rows may fail to span the dual; that
    is reported as an error since the result would not represent the
    code.
    """
    if code.n - code.k > COMPLETE_MAX_DUAL_DIM:
        raise ValueError(f"n-k={code.n - code.k} exceeds complete-matrix guard {COMPLETE_MAX_DUAL_DIM}")
    rows = sorted(v for v in row_space_iter(code.parity_basis) if 0 < v.bit_count() <= w)
    m = BitMatrix(tuple(rows), code.n)
    if rank(m) < code.n - code.k:
        raise ValueError(
            f"dual words of weight <= {w} have rank {rank(m)} < {code.n - code.k}: "
            "not a parity-check matrix of the code"
        )
    return m


def _gadget_rows(d: int) -> list[int]:
    """The (d-1) x d block that leaves {1,2,3} unchecked by weight-one rows."""
    rows = [0b11, 0b110, 0b1111]
    for i in range(4, d):
        rows.append((1 << (i - 1)) | (1 << i))
    return rows[: d - 1]


def bad_matrix(code: LinearCode) -> tuple[BitMatrix, tuple[int, ...]]:
    """A full-rank parity-check matrix with stopping distance 3.

    Exists for every code with finite minimum distance d >= 4.  Returns
    the matrix together with the coordinate permutation used: entry i of
    the permutation is the original 1-based coordinate now at position
    i+1 (the support of the chosen minimum-weight codeword moves to the
    first d positions, everything else keeps its relative order).
    """
    d = code.minimum_distance
    if d is math.inf or d < 4:
        raise ValueError(f"construction needs minimum distance >= 4, got d={d}")
    if code.k < 1:
        raise ValueError("construction needs k >= 1")
    d = int(d)

    support = min(
        (w for w in code.codewords() if w.bit_count() == d),
        key=lambda w: sorted(j for j in range(code.n) if (w >> j) & 1),
    )
    sup = [j + 1 for j in range(code.n) if (support >> j) & 1]
    rest = [j for j in range(1, code.n + 1) if j not in set(sup)]
    perm = tuple(sup + rest)

    hp = permute_columns(code.parity_basis, perm)
    first_d = select_columns(hp, range(1, d + 1))  # (n-k) x d
    t = transpose(first_d)  # d x (n-k); a . first_d = g  <=>  t . a^T = g^T

    def dual_word(coeffs: int) -> int:
        w = 0
        for i, row in enumerate(hp.rows):
            if (coeffs >> i) & 1:
                w ^= row
        return w

    top = []
    for g in _gadget_rows(d):
        solution = solve(t, g)
        if solution is None:  # impossible: the restriction space is the even-weight space
            raise AssertionError("gadget row not realizable as a dual restriction")
        top.append(dual_word(solution[0]))
    bottom = [dual_word(a) for a in null_space_basis(t).rows]

    h = BitMatrix(tuple(top + bottom), code.n)
    if rank(h) != code.n - code.k:
        raise AssertionError("constructed matrix lost rank")
    return h, perm


_PREDICATES = ("s=d", "S=S*", "D=I")


def minimal_matrix_search(
    code: LinearCode, predicate: str, max_rows: Optional[int] = None
) -> Optional[BitMatrix]:
    """Fewest-row parity-check matrix of distinct nonzero dual codewords
    satisfying the predicate; None if nothing qualifies within max_rows.

    Predicates: "s=d" (stopping distance equals minimum distance),
    "S=S*" (stopping set enumerator is optimal), "D=I" (dead-end set
    enumerator is optimal).  Candidates are scanned by increasing row
    count, then lexicographically on the sorted row list, so the result
    is deterministic.
    """
    if predicate not in _PREDICATES:
        raise ValueError(f"predicate must be one of {_PREDICATES}")
    duals = sorted(v for v in row_space_iter(code.parity_basis) if v)
    if len(duals) > SEARCH_MAX_DUAL_WORDS:
        raise ValueError(f"{len(duals)} nonzero dual words exceed search guard {SEARCH_MAX_DUAL_WORDS}")

    n = code.n
    n_masks = 1 << n
    need_rank = code.n - code.k

    # Bit m of these big ints refers to the coordinate subset with mask m.
    not_killed = {}
    for w in duals:
        bits = 0
        for m in range(n_masks):
            if (m & w).bit_count() != 1:
                bits |= 1 << m
        not_killed[w] = bits
    size_masks = [0] * (n + 1)
    for m in range(n_masks):
        size_masks[m.bit_count()] |= 1 << m
    all_subsets = (1 << n_masks) - 1
    # For the upward closure: bit positions whose subset-mask lacks bit j.
    clear_j = []
    for j in range(n):
        bits = 0
        for m in range(n_masks):
            if not (m >> j) & 1:
                bits |= 1 << m
        clear_j.append(bits)

    def counts(indicator: int) -> tuple[int, ...]:
        return tuple((indicator & size_masks[i]).bit_count() for i in range(n + 1))

    def dead_closure(stop_ind: int) -> int:
        x = stop_ind & ~1  # drop the empty set
        for j in range(n):
            x |= (x & clear_j[j]) << (1 << j)
        return x & all_subsets

    if predicate == "s=d":
        d = code.minimum_distance
        small = range(1, int(d) if d is not math.inf else n + 1)

        def accept(stop_ind: int) -> bool:
            return all((stop_ind & size_masks[i]) == 0 for i in small)

    elif predicate == "S=S*":
        target_s = optimal_enumerators(code).stopping.coefficients

        def accept(stop_ind: int) -> bool:
            return counts(stop_ind) == target_s

    else:  # "D=I"
        target_i = incorrigible_enumerator(code).coefficients

        def accept(stop_ind: int) -> bool:
            return counts(dead_closure(stop_ind)) == target_i

    limit = len(duals) if max_rows is None else min(max_rows, len(duals))
    for r in range(need_rank, limit + 1):
        for combo in combinations(duals, r):
            if rank(BitMatrix(combo, n)) != need_rank:
                continue
            stop_ind = all_subsets
            for w in combo:
                stop_ind &= not_killed[w]
            if accept(stop_ind):
                return BitMatrix(combo, n)
    return None


def binary_entropy(x: float) -> float:
    """H(x) = -x log2 x - (1-x) log2 (1-x), with H(0) = H(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"entropy argument {x} outside [0,1]")
    if x in (0.0, 1.0):
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


@dataclass(frozen=True)
class BoundReport:
    """Closed-form row-count bounds for a given (n, k, d, m).

    Bounds that do not apply to the parameters are None, with the reason
    recorded in notes; empty-sum conventions are flagged the same way.
    """

    n: int
    k: int
    d: Optional[int] = None
    m: Optional[int] = None
    sv_bound: Optional[int] = None
    hs_bound: Optional[int] = None
    ht_bound: Optional[int] = None
    holtol_bound: Optional[int] = None
    entropy_bound: Optional[float] = None
    notes: tuple[tuple[str, str], ...] = field(default=())

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "m": self.m,
            "sv_bound": self.sv_bound,
            "hs_bound": self.hs_bound,
            "ht_bound": self.ht_bound,
            "holtol_bound": self.holtol_bound,
            "entropy_bound": self.entropy_bound,
            "notes": dict(self.notes),
        }


def redundancy_bounds(
    n: int, k: int, d: Optional[int] = None, m: Optional[int] = None
) -> BoundReport:
    """Evaluate the known row-count bounds exactly.

    sv_bound: rows sufficient for s = d.  hs_bound: alternative bound for
    the same goal.  ht_bound(m): rows sufficient for D_i = I_i up to
    size m.  holtol_bound: 2**(n-k-1) rows suffice for D(x) = I(x).
    entropy_bound: 2**(n H((k+1)/n)) rows suffice when k <= n/2 - 1.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    notes: list[tuple[str, str]] = []
    r = n - k

    sv = None
    if d is None:
        notes.append(("sv_bound", "omitted: d not supplied"))
    elif d < 2:
        notes.append(("sv_bound", f"omitted: stated for d >= 3, got d={d}"))
    else:
        sv = sum(math.comb(r, i) for i in range(1, d - 1))
        if d == 2:
            notes.append(("sv_bound", "empty sum: the formula's range starts at d >= 3"))

    hs = None
    if d is None:
        notes.append(("hs_bound", "omitted: d not supplied"))
    elif d < 2:
        notes.append(("hs_bound", f"omitted: stated for d >= 2, got d={d}"))
    else:
        # ceil((d-1)/2) terms
        hs = sum(math.comb(r, 2 * i - 1) for i in range(1, d // 2 + 1))

    ht = None
    if m is None:
        notes.append(("ht_bound", "omitted: m not supplied"))
    elif not 2 <= m <= r:
        notes.append(("ht_bound", f"omitted: need 2 <= m <= n-k, got m={m}"))
    else:
        ht = sum(math.comb(r - 1, i) for i in range(m))

    holtol = None
    if k < n:
        holtol = 1 << (r - 1)
    else:
        notes.append(("holtol_bound", "omitted: requires k < n"))

    entropy = None
    if k <= n / 2 - 1:
        entropy = 2.0 ** (n * binary_entropy((k + 1) / n))
    else:
        notes.append(("entropy_bound", "omitted: requires k <= n/2 - 1"))

    return BoundReport(
        n=n, k=k, d=d, m=m,
        sv_bound=sv, hs_bound=hs, ht_bound=ht,
        holtol_bound=holtol, entropy_bound=entropy,
        notes=tuple(notes),
    )
