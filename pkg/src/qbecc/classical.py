"""Classical linear and cyclic codes over GF(2), GF(4), and GF(4^m).

Codes are stored by explicit generator and parity-check matrices (rows as
tuples of field-element ints).  Burst-correction capability is decided by
one engine: syndrome distinctness over every burst pattern.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .gf import GF2, GF4, Poly, xn_minus_1
from .linalg import mat_in_rowspan, mat_mul_vec, mat_nullspace, mat_row_reduce


class InvalidGeneratorError(ValueError):
    """Generator polynomial does not divide x^n - 1."""


@dataclass(frozen=True)
class LinearCode:
    field: object
    n: int
    k: int
    gen_rows: Tuple[Tuple[int, ...], ...]
    check_rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        for h in self.check_rows:
            syn = mat_mul_vec(self.field, self.gen_rows, h)
            if any(syn):
                raise AssertionError("generator and check matrices are not orthogonal")

    @property
    def params(self) -> Tuple[int, int]:
        return (self.n, self.k)

    def syndrome(self, vec: Sequence[int]) -> Tuple[int, ...]:
        return tuple(mat_mul_vec(self.field, self.check_rows, vec))

    def codewords(self):
        """All codewords; only safe for small codebooks."""
        field = self.field
        for coeffs in itertools.product(field.elements(), repeat=self.k):
            word = [0] * self.n
            for c, row in zip(coeffs, self.gen_rows):
                if c:
                    for j, g in enumerate(row):
                        if g:
                            word[j] ^= field.mul(c, g)
            yield tuple(word)


def linear_code(field, gen_rows: Sequence[Sequence[int]], n: Optional[int] = None) -> LinearCode:
    """Build a code from spanning rows; reduces to a basis and derives H."""
    if n is None:
        n = len(gen_rows[0])
    reduced, _ = mat_row_reduce(field, gen_rows)
    k = len(reduced)
    if k == 0:
        reduced = []
    check = mat_nullspace(field, reduced, n) if k else [
        [1 if j == i else 0 for j in range(n)] for i in range(n)]
    return LinearCode(field, n, k,
                      tuple(tuple(r) for r in reduced),
                      tuple(tuple(h) for h in check))


@dataclass(frozen=True)
class CyclicCode:
    base: LinearCode
    gen_poly: Poly

    @property
    def field(self):
        return self.base.field

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def k(self) -> int:
        return self.base.k


def cyclic_from_poly(g: Poly, n: int) -> CyclicCode:
    """Cyclic code of length n generated by g; g must divide x^n - 1."""
    field = g.field
    if g.is_zero:
        raise InvalidGeneratorError("zero polynomial cannot generate a cyclic code")
    g = g.monic()
    if not (xn_minus_1(n, field) % g).is_zero:
        raise InvalidGeneratorError(f"{g!r} does not divide x^{n} - 1 over {field!r}")
    k = n - g.degree
    rows = []
    for shift in range(k):
        row = [0] * n
        for i, c in enumerate(g.coeffs):
            row[shift + i] = c
        rows.append(row)
    return CyclicCode(linear_code(field, rows, n), g)


@dataclass(frozen=True)
class BurstCapability:
    l: int
    end_around: bool
    witness: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None


def _burst_patterns(order: int, n: int, span: int, end_around: bool):
    """Vectors of burst length exactly `span` (cyclic windows if end_around)."""
    nonzero = range(1, order)
    if span == 1:
        for s in range(n):
            for c in nonzero:
                vec = [0] * n
                vec[s] = c
                yield tuple(vec)
        return
    starts = range(n) if end_around else range(n - span + 1)
    seen = set() if end_around else None
    for s in starts:
        for first in nonzero:
            for middle in itertools.product(range(order), repeat=span - 2):
                for last in nonzero:
                    vec = [0] * n
                    vec[s] = first
                    for i, c in enumerate(middle):
                        vec[(s + 1 + i) % n] = c
                    vec[(s + span - 1) % n] = last
                    t = tuple(vec)
                    if seen is not None:
                        if t in seen:
                            continue
                        seen.add(t)
                    yield t


def classical_burst_capability(code: LinearCode, end_around: bool = False) -> BurstCapability:
    """Largest l with all bursts of length <= l having distinct syndromes."""
    n, k = code.n, code.k
    cap = (n - k) // 2  # Reiger bound ceiling
    syndromes = {code.syndrome([0] * n): tuple([0] * n)}
    witness = None
    achieved = 0
    for span in range(1, cap + 1):
        failed = False
        for vec in _burst_patterns(code.field.order, n, span, end_around):
            syn = code.syndrome(vec)
            other = syndromes.get(syn)
            if other is not None:
                witness = (other, vec)
                failed = True
                break
            syndromes[syn] = vec
        if failed:
            break
        achieved = span
    assert achieved <= cap
    return BurstCapability(achieved, end_around, witness)


def rs_mds(n2: int, l2: int, field) -> LinearCode:
    """[n2, n2-2*l2, 2*l2+1] Reed-Solomon code over an extension field.

    Evaluation points are the field elements 0, 1, 2, ... in int order; for
    n2 = order + 1 the extra coordinate is the coefficient of x^(k-1)
    (singly-extended construction, still MDS).
    """
    q = field.order
    if not 2 <= n2 <= q + 1:
        raise ValueError(f"length {n2} out of range [2, {q + 1}] for {field!r}")
    if not 0 <= l2 <= (n2 - 1) // 2:
        raise ValueError(f"burst target {l2} out of range [0, {(n2 - 1) // 2}]")
    k = n2 - 2 * l2
    if l2 == 0:
        return linear_code(field, [[1 if j == i else 0 for j in range(n2)]
                                   for i in range(n2)], n2)
    points = list(range(min(n2, q)))
    rows = []
    for i in range(k):
        row = [field.pow(x, i) for x in points]
        if n2 == q + 1:
            row.append(1 if i == k - 1 else 0)
        rows.append(row)
    return linear_code(field, rows, n2)


def rs_burst_capability(code: LinearCode) -> BurstCapability:
    """Burst capability of an MDS code from its distance: l = (d-1)//2 = (n-k)//2.

    Any pattern of that many symbol errors is correctable, so bursts are
    covered with end-around included; no enumeration needed.
    """
    return BurstCapability((code.n - code.k) // 2, end_around=True)


def hermitian_dual_containing(code: LinearCode) -> bool:
    """True iff the Hermitian dual of a GF(4) code lies inside the code."""
    if code.field is not GF4:
        raise ValueError("Hermitian dual containment is defined over GF(4)")
    if 2 * code.k < code.n:
        return False  # dual dimension n-k exceeds k
    reduced, pivots = mat_row_reduce(GF4, code.gen_rows)
    for h in code.check_rows:
        conj_h = [GF4.conj(x) for x in h]
        if not mat_in_rowspan(GF4, conj_h, reduced, pivots):
            return False
    return True


def binary_dual_containing(c2: LinearCode, c1: LinearCode) -> bool:
    """True iff the dual of c2 is contained in c1 (both binary, same length)."""
    if c2.field is not GF2 or c1.field is not GF2:
        raise ValueError("dual containment check requires binary codes")
    if c1.n != c2.n:
        raise ValueError(f"length mismatch: {c1.n} != {c2.n}")
    reduced, pivots = mat_row_reduce(GF2, c1.gen_rows)
    return all(mat_in_rowspan(GF2, h, reduced, pivots) for h in c2.check_rows)


__all__ = [
    "LinearCode", "CyclicCode", "BurstCapability", "InvalidGeneratorError",
    "linear_code", "cyclic_from_poly", "classical_burst_capability",
    "rs_mds", "rs_burst_capability",
    "hermitian_dual_containing", "binary_dual_containing",
]
