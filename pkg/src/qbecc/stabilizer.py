"""Symplectic / GF(4) representation of Pauli errors and stabilizer codes.

A Pauli error on n qubits, phases aside, is a vector (a|b) in GF(2)^2n or
equivalently a GF(4)^n vector under the fixed bijection

    X <-> 1,   Z <-> w,   Y <-> w^2

so that per coordinate the a-bit (X part) is the low bit of the GF(4)
symbol code and the b-bit (Z part) is the high bit.  Packed int layouts:

* F4Vector.packed: symbol i occupies bits [2i, 2i+1].
* symplectic packed int: a in bits [0, n), b in bits [n, 2n).

Stabilizer codes are GF(2)-linear self-orthogonal subspaces under the
symplectic form; all analysis predicates live on that representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .classical import LinearCode, binary_dual_containing, hermitian_dual_containing
from .gf import f4_conj, f4_mul
from .linalg import gf2_in_span, gf2_nullspace, gf2_reduce_vector, gf2_row_reduce


class CommutationError(ValueError):
    """Input rows do not span a self-orthogonal (commuting) set."""


class ResourceLimitError(RuntimeError):
    """Requested enumeration exceeds the configured limit."""


@dataclass(frozen=True)
class SymplecticVector:
    n: int
    a: int
    b: int

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if self.a & ~mask or self.b & ~mask:
            raise ValueError("vector bits exceed declared length")

    @property
    def packed(self) -> int:
        return self.a | (self.b << self.n)

    @classmethod
    def from_packed(cls, n: int, packed: int) -> "SymplecticVector":
        mask = (1 << n) - 1
        return cls(n, packed & mask, packed >> n)


@dataclass(frozen=True)
class F4Vector:
    n: int
    packed: int  # 2 bits per symbol, low bit = X part, high bit = Z part

    @classmethod
    def from_symbols(cls, symbols: Sequence[int]) -> "F4Vector":
        packed = 0
        for i, c in enumerate(symbols):
            packed |= (c & 3) << (2 * i)
        return cls(len(symbols), packed)

    def symbols(self) -> Tuple[int, ...]:
        return tuple((self.packed >> (2 * i)) & 3 for i in range(self.n))

    def __add__(self, other: "F4Vector") -> "F4Vector":
        return F4Vector(self.n, self.packed ^ other.packed)


@dataclass(frozen=True)
class PauliError:
    phase: int  # power of i, carried but ignored by code-level predicates
    sym: SymplecticVector


def symplectic_ip(u: SymplecticVector, v: SymplecticVector) -> int:
    """a.b' + a'.b over GF(2); zero iff the Pauli operators commute."""
    if u.n != v.n:
        raise ValueError(f"length mismatch: {u.n} != {v.n}")
    return ((u.a & v.b).bit_count() ^ (u.b & v.a).bit_count()) & 1


def trace_ip(u: F4Vector, v: F4Vector) -> int:
    """Sum of u_i v_i^2 + u_i^2 v_i, an element of GF(2)."""
    if u.n != v.n:
        raise ValueError(f"length mismatch: {u.n} != {v.n}")
    acc = 0
    for x, y in zip(u.symbols(), v.symbols()):
        acc ^= f4_mul(x, f4_conj(y)) ^ f4_mul(f4_conj(x), y)
    return acc


def f4_symplectic_map(v: F4Vector) -> SymplecticVector:
    a = b = 0
    for i in range(v.n):
        c = (v.packed >> (2 * i)) & 3
        a |= (c & 1) << i
        b |= (c >> 1) << i
    return SymplecticVector(v.n, a, b)


def symplectic_f4_map(v: SymplecticVector) -> F4Vector:
    packed = 0
    for i in range(v.n):
        c = ((v.a >> i) & 1) | (((v.b >> i) & 1) << 1)
        packed |= c << (2 * i)
    return F4Vector(v.n, packed)


def burst_length(v) -> int:
    """Span from first to last non-identity coordinate; 0 for the zero vector."""
    if isinstance(v, SymplecticVector):
        mask = v.a | v.b
        if mask == 0:
            return 0
        first = (mask & -mask).bit_length() - 1
        last = mask.bit_length() - 1
        return last - first + 1
    p = v.packed
    if p == 0:
        return 0
    first = ((p & -p).bit_length() - 1) // 2
    last = (p.bit_length() - 1) // 2
    return last - first + 1


def _sweight_packed(packed: int, n: int) -> int:
    mask = (1 << n) - 1
    return ((packed & mask) | (packed >> n)).bit_count()


class StabilizerCode:
    """Self-orthogonal GF(2)-linear code C in symplectic representation.

    basis holds the canonical (reduced row-echelon) packed rows; syndromes
    and containment tests run against that basis.
    """

    def __init__(self, n: int, rows: Sequence[int], _validated: bool = False):
        self.n = n
        if not _validated:
            _check_self_orthogonal(n, rows)
        reduced, pivots = gf2_row_reduce(rows)
        self.basis: Tuple[int, ...] = tuple(reduced)
        self._pivots: Tuple[int, ...] = tuple(pivots)
        self.r = len(reduced)
        self.k = n - self.r
        # syndrome rows with halves pre-swapped: <u,v>_s = parity(swap(u) & v)
        self._swapped = tuple(_swap_halves(row, n) for row in reduced)
        self._dual_basis: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_vectors(cls, n: int, vectors: Iterable[SymplecticVector]) -> "StabilizerCode":
        return cls(n, [v.packed for v in vectors])

    @property
    def params(self) -> Tuple[int, int]:
        return (self.n, self.k)

    def syndrome(self, packed: int) -> int:
        syn = 0
        for j, s in enumerate(self._swapped):
            syn |= ((s & packed).bit_count() & 1) << j
        return syn

    def contains(self, packed: int) -> bool:
        return gf2_in_span(packed, self.basis, self._pivots)

    def in_dual(self, packed: int) -> bool:
        return self.syndrome(packed) == 0

    def dual_basis(self) -> Tuple[int, ...]:
        """Basis of the symplectic dual: the r stabilizer rows first, then
        2k completion vectors (logical representatives)."""
        if self._dual_basis is None:
            full = gf2_nullspace(self._swapped, 2 * self.n)
            chosen = list(self.basis)
            reduced = list(self.basis)
            pivots = list(self._pivots)
            for vec in full:
                residual = gf2_reduce_vector(vec, reduced, pivots)
                if residual:
                    chosen.append(vec)
                    reduced.append(residual)
                    pivots.append((residual & -residual).bit_length() - 1)
            if len(chosen) != self.n + self.k:
                raise AssertionError("symplectic dual has wrong dimension")
            self._dual_basis = tuple(chosen)
        return self._dual_basis

    def min_distance(self, limit: int = 1 << 28, include_stabilizer: bool = False) -> int:
        """Minimum symplectic weight over the dual, excluding stabilizer
        elements unless include_stabilizer (then only the zero vector is
        excluded)."""
        dual = self.dual_basis()
        dim = len(dual)
        if 1 << dim > limit:
            raise ResourceLimitError(
                f"dual enumeration needs 2^{dim} = {1 << dim} elements, limit {limit}")
        skip_membership = None
        if not include_stabilizer:
            if self.r <= 22:
                skip_membership = set()
                v = 0
                skip_membership.add(0)
                for i in range(1, 1 << self.r):
                    v ^= self.basis[(i & -i).bit_length() - 1]
                    skip_membership.add(v)
        best = 2 * self.n
        v = 0
        n = self.n
        for i in range(1, 1 << dim):
            v ^= dual[(i & -i).bit_length() - 1]
            w = _sweight_packed(v, n)
            if w >= best:
                continue
            if not include_stabilizer:
                if skip_membership is not None:
                    if v in skip_membership:
                        continue
                elif self.contains(v):
                    continue
            best = w
        return best


def _swap_halves(packed: int, n: int) -> int:
    mask = (1 << n) - 1
    return (packed >> n) | ((packed & mask) << n)


def _check_self_orthogonal(n: int, rows: Sequence[int]) -> None:
    swapped = [_swap_halves(r, n) for r in rows]
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if (swapped[i] & rows[j]).bit_count() & 1:
                raise CommutationError(
                    f"rows {i} and {j} anticommute (symplectic inner product 1)")


def additive_code(n: int, rows: Sequence[int] | Iterable[SymplecticVector]) -> StabilizerCode:
    """Stabilizer code from spanning symplectic rows; rejects anticommuting input."""
    packed = [r.packed if isinstance(r, SymplecticVector) else r for r in rows]
    return StabilizerCode(n, packed)


def _f4_row_to_packed_ab(row: Sequence[int], n: int) -> int:
    a = b = 0
    for i, c in enumerate(row):
        a |= (c & 1) << i
        b |= ((c >> 1) & 1) << i
    return a | (b << n)


def hermitian_construct(code: LinearCode) -> StabilizerCode:
    """[[n, 2k-n]] stabilizer code from a Hermitian-dual-containing GF(4) code.

    The stabilizer is the additive span of {g, w*g} over the generators g of
    the Hermitian dual (conjugated parity-check rows), mapped symplectically.
    """
    if not hermitian_dual_containing(code):
        raise ValueError("code is not Hermitian dual containing")
    n = code.n
    rows = []
    for h in code.check_rows:
        g = [f4_conj(x) for x in h]
        rows.append(_f4_row_to_packed_ab(g, n))
        rows.append(_f4_row_to_packed_ab([f4_mul(2, x) for x in g], n))
    stab = StabilizerCode(n, rows)
    if stab.k != 2 * code.k - code.n:
        raise AssertionError("Hermitian construction produced wrong dimension")
    return stab


def css_construct(c1: LinearCode, c2: LinearCode) -> StabilizerCode:
    """[[n, k1+k2-n]] CSS stabilizer code from binary codes with C2-dual in C1."""
    if not binary_dual_containing(c2, c1):
        raise ValueError("CSS precondition failed: dual of C2 is not inside C1")
    n = c1.n
    rows = []
    for h in c1.check_rows:
        bits = sum(1 << i for i, x in enumerate(h) if x)
        rows.append(bits)  # X-type row (a|0)
    for h in c2.check_rows:
        bits = sum(1 << i for i, x in enumerate(h) if x)
        rows.append(bits << n)  # Z-type row (0|b)
    stab = StabilizerCode(n, rows)
    if stab.k != c1.k + c2.k - n:
        raise AssertionError("CSS construction produced wrong dimension")
    return stab


__all__ = [
    "SymplecticVector", "F4Vector", "PauliError", "StabilizerCode",
    "CommutationError", "ResourceLimitError",
    "symplectic_ip", "trace_ip", "f4_symplectic_map", "symplectic_f4_map",
    "burst_length", "additive_code", "hermitian_construct", "css_construct",
]
