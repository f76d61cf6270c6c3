"""Tensor-product quantum codes and the burst-dispersing interleaver.

The check matrix of the tensor product of an inner code (check matrix H1,
rho1 checks over the base field) and an outer code over the degree-rho1
extension field (check matrix H2) is the Kronecker product H2 (x) H1, with
each extension-field entry expanded into its rho1 x rho1 base-field
multiplication matrix in the pinned power basis.

Two quantum branches: a GF(4) inner code that is Hermitian dual containing
yields the stabilizer from {conj(h), w*conj(h)} over the expanded rows; a
binary inner code containing its dual yields a CSS stabilizer on the
expanded tensor code.  Both produce [[n1*n2, n1*n2 - 2*rho1*rho2]].

The interleaver streams an n1 x n2 qubit array in row-groups of l1 rows,
column segment by column segment, so that a short stream burst lands in few
array columns with a short span inside each.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .classical import (LinearCode, binary_dual_containing,
                        hermitian_dual_containing)
from .gf import GF2, GF4, ExtField2, ExtField4, f4_conj, f4_mul
from .linalg import mat_nullspace, mat_rank
from .stabilizer import StabilizerCode, _f4_row_to_packed_ab, css_construct


@dataclass(frozen=True)
class QtpcSpec:
    n1: int
    k1: int
    n2: int
    k2: int
    rho1: int
    rho2: int
    expanded_check: Tuple[Tuple[int, ...], ...]
    params: Tuple[int, int]


def tensor_check_matrix(c1: LinearCode, c2: LinearCode) -> List[List[int]]:
    """Expanded (rho1*rho2) x (n1*n2) base-field check matrix of the tensor
    code.  The outer code must live over the degree-rho1 extension of the
    inner base field."""
    base = c1.field
    rho1 = c1.n - c1.k
    field2 = c2.field
    if base is GF4:
        wanted = ExtField4
    elif base is GF2:
        wanted = ExtField2
    else:
        raise ValueError("inner code must be over GF(2) or GF(4)")
    if not isinstance(field2, wanted) or field2.m != rho1:
        raise ValueError(
            f"outer code field must be the degree-{rho1} extension of {base!r}")
    rows: List[List[int]] = []
    mult = {e: field2.mult_matrix(e) for e in {x for row in c2.check_rows for x in row}}
    for h2_row in c2.check_rows:
        blocks = []  # per outer coordinate: rho1 x n1 block M_e * H1
        for e in h2_row:
            m = mult[e]
            block = [[0] * c1.n for _ in range(rho1)]
            for r in range(rho1):
                for t in range(rho1):
                    c = m[r][t]
                    if c:
                        h1 = c1.check_rows[t]
                        for col in range(c1.n):
                            if h1[col]:
                                block[r][col] ^= base.mul(c, h1[col])
            blocks.append(block)
        for r in range(rho1):
            row: List[int] = []
            for block in blocks:
                row.extend(block[r])
            rows.append(row)
    return rows


def qtpc_construct(c1: LinearCode, c2: LinearCode) -> Tuple[StabilizerCode, QtpcSpec]:
    """[[n1*n2, n1*n2 - 2*rho1*rho2]] stabilizer code from the tensor check
    matrix.  A GF(4) inner code must be Hermitian dual containing; a binary
    inner code must contain its own dual.

    Self-orthogonality of the result is verified by construction of the
    stabilizer, not assumed.
    """
    if c1.field is GF4:
        if not hermitian_dual_containing(c1):
            raise ValueError("inner code is not Hermitian dual containing")
    elif c1.field is GF2:
        if not binary_dual_containing(c1, c1):
            raise ValueError("inner code does not contain its dual")
    else:
        raise ValueError("inner code must be over GF(2) or GF(4)")
    expanded = tensor_check_matrix(c1, c2)
    rho1, rho2 = c1.n - c1.k, c2.n - c2.k
    n = c1.n * c2.n
    if mat_rank(c1.field, expanded) != rho1 * rho2:
        raise AssertionError("expanded check matrix has deficient rank")
    if c1.field is GF4:
        stab = _hermitian_from_check(n, expanded)
    else:
        gen = mat_nullspace(GF2, expanded, n)
        tpc = LinearCode(GF2, n, n - rho1 * rho2,
                         tuple(tuple(r) for r in gen),
                         tuple(tuple(r) for r in expanded))
        stab = css_construct(tpc, tpc)
    spec = QtpcSpec(c1.n, c1.k, c2.n, c2.k, rho1, rho2,
                    tuple(tuple(r) for r in expanded),
                    (n, n - 2 * rho1 * rho2))
    if stab.params != spec.params:
        raise AssertionError(f"constructed {stab.params}, expected {spec.params}")
    return stab, spec


def _hermitian_from_check(n: int, check_rows) -> StabilizerCode:
    """Stabilizer from {conj(h), w*conj(h)} over the check rows; the
    StabilizerCode constructor verifies self-orthogonality."""
    rows = []
    for h in check_rows:
        g = [f4_conj(x) for x in h]
        rows.append(_f4_row_to_packed_ab(g, n))
        rows.append(_f4_row_to_packed_ab([f4_mul(2, x) for x in g], n))
    return StabilizerCode(n, rows)


# ----------------------------------------------------------------------
# Interleaving
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class InterleaverMap:
    n1: int
    n2: int
    l1: int

    def __post_init__(self):
        if self.l1 <= 0 or self.n1 % self.l1 != 0:
            raise ValueError(f"subblock height {self.l1} must divide n1={self.n1}")

    @property
    def subblocks(self) -> int:
        return self.n1 // self.l1

    @property
    def size(self) -> int:
        return self.n1 * self.n2


def interleave(imap: InterleaverMap, row: int, col: int) -> int:
    """Stream position of array cell (row, col): row-groups of l1 rows are
    sent in order, each group column by column."""
    if not (0 <= row < imap.n1 and 0 <= col < imap.n2):
        raise ValueError(f"cell ({row}, {col}) outside {imap.n1} x {imap.n2}")
    group, offset = divmod(row, imap.l1)
    return group * (imap.l1 * imap.n2) + col * imap.l1 + offset


def deinterleave(imap: InterleaverMap, t: int) -> Tuple[int, int]:
    if not 0 <= t < imap.size:
        raise ValueError(f"stream position {t} outside [0, {imap.size})")
    group, rem = divmod(t, imap.l1 * imap.n2)
    col, offset = divmod(rem, imap.l1)
    return group * imap.l1 + offset, col


@dataclass(frozen=True)
class DispersalReport:
    burst_len: int
    max_affected_subblocks: int
    max_inner_burst: int
    worst_start: int
    aligned_only: bool


def dispersal_report(imap: InterleaverMap, burst_len: int,
                     aligned_only: bool = False) -> DispersalReport:
    """Measure, over every stream burst window of length <= burst_len, how
    many array columns are touched and the worst row span inside one column.

    aligned_only restricts window starts to multiples of l1.
    """
    if not 1 <= burst_len <= imap.size:
        raise ValueError(f"burst length {burst_len} outside [1, {imap.size}]")
    cells = [deinterleave(imap, t) for t in range(imap.size)]
    worst_cols = 0
    worst_span = 0
    worst_start = 0
    for start in range(imap.size):
        if aligned_only and start % imap.l1 != 0:
            continue
        col_rows: dict = {}
        for t in range(start, min(start + burst_len, imap.size)):
            row, col = cells[t]
            lo, hi = col_rows.get(col, (row, row))
            col_rows[col] = (min(lo, row), max(hi, row))
        n_cols = len(col_rows)
        span = max(hi - lo + 1 for lo, hi in col_rows.values())
        if n_cols > worst_cols:
            worst_cols, worst_start = n_cols, start
        worst_span = max(worst_span, span)
    return DispersalReport(burst_len, worst_cols, worst_span, worst_start,
                           aligned_only)


def affected_columns(imap: InterleaverMap, start: int, burst_len: int) -> List[int]:
    """Column indices touched by one stream window, in stream order."""
    cols = []
    for t in range(start, min(start + burst_len, imap.size)):
        _, col = deinterleave(imap, t)
        if col not in cols:
            cols.append(col)
    return cols


__all__ = [
    "QtpcSpec", "tensor_check_matrix", "qtpc_construct",
    "InterleaverMap", "interleave", "deinterleave",
    "DispersalReport", "dispersal_report", "affected_columns",
]
