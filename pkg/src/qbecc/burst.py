"""Quantum burst-error capability analysis and the bound predicates.

The capability of a stabilizer code is the largest l such that any two
distinct error vectors of burst length <= l have a sum outside
dual(C) \\ C.  Equivalently: whenever two bursts share a syndrome, their
sum must lie in the stabilizer itself (a harmless, degenerate collision).

The production engine enumerates every burst once, computes all syndromes
as packed uint64 words with vectorized XOR folding, sorts them, and only
inspects colliding groups.  A naive all-pairs oracle is kept alongside for
cross-validation at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

import numpy as np

from .linalg import gf2_nullspace
from .stabilizer import F4Vector, ResourceLimitError, StabilizerCode

MAX_BURSTS_PER_LEVEL = 1 << 27


def qrb(n: int, k: int) -> int:
    """Ceiling on correctable burst length: floor((n-k)/4)."""
    if n <= k:
        return 0
    return (n - k) // 4


def no_cloning_check(n: int, l: int) -> bool:
    """A code with k >= 1 correcting bursts of length l requires n > 4l."""
    return n > 4 * l


@dataclass(frozen=True)
class BurstAnalysis:
    n: int
    k: int
    l: int
    degenerate: bool
    witness: Optional[Tuple[F4Vector, F4Vector]]
    checked_pairs: int
    method: str

    @property
    def saturates(self) -> bool:
        return self.l == qrb(self.n, self.k)


def check_qrb(analysis: BurstAnalysis) -> bool:
    return analysis.l <= qrb(analysis.n, analysis.k)


# ----------------------------------------------------------------------
# Burst enumeration
# ----------------------------------------------------------------------

def _window_lengths(n: int, l: int) -> List[Tuple[int, int]]:
    return [(s, min(l, n - s)) for s in range(n)]


def burst_count(n: int, l: int) -> int:
    """Number of vectors enumerate_bursts(n, l) yields (zero included)."""
    if l == 0:
        return 1
    return 1 + sum(3 * 4 ** (w - 1) for _, w in _window_lengths(n, l))


def _burst_vector(s: int, w: int, c: int) -> Tuple[int, int]:
    """(packed_f4, packed_ab) of the burst with window start s and content
    index c; the first symbol is c // 4^(w-1) + 1, remaining digits base 4
    big-endian."""
    first = (c >> (2 * (w - 1))) + 1
    f4 = first << (2 * s)
    a = (first & 1) << s
    b = (first >> 1) << s
    for t in range(1, w):
        d = (c >> (2 * (w - 1 - t))) & 3
        pos = s + t
        f4 |= d << (2 * pos)
        a |= (d & 1) << pos
        b |= (d >> 1) << pos
    return f4, (a, b)


def enumerate_bursts(n: int, l: int) -> Iterator[F4Vector]:
    """Yield the zero vector, then every vector of burst length in [1, l]
    exactly once, keyed by its first nonzero coordinate."""
    if not 0 <= l <= n:
        raise ValueError(f"burst bound {l} outside [0, {n}]")
    yield F4Vector(n, 0)
    if l == 0:
        return
    for s, w in _window_lengths(n, l):
        for c in range(3 * 4 ** (w - 1)):
            f4, _ = _burst_vector(s, w, c)
            yield F4Vector(n, f4)


# ----------------------------------------------------------------------
# Syndrome-hash engine
# ----------------------------------------------------------------------

def _unit_syndromes(code: StabilizerCode) -> np.ndarray:
    """uint64 table [position][symbol] of single-coordinate syndromes."""
    n = code.n
    tab = np.zeros((n, 4), dtype=np.uint64)
    for j, sw in enumerate(code._swapped):
        bit = 1 << j
        for i in range(n):
            za = (sw >> i) & 1          # pairs with the error's a bit
            zb = (sw >> (n + i)) & 1    # pairs with the error's b bit
            for c in range(1, 4):
                if (za & (c & 1)) ^ (zb & (c >> 1)):
                    tab[i, c] ^= np.uint64(bit)
    return tab


def _level_syndromes(code: StabilizerCode, l: int, tab: np.ndarray) -> np.ndarray:
    """Syndromes of every burst of length <= l, index 0 the zero vector,
    then the enumerate_bursts order."""
    chunks = [np.zeros(1, dtype=np.uint64)]
    if l > 0:
        for s, w in _window_lengths(code.n, l):
            arr = tab[s, 1:4].copy()
            for t in range(1, w):
                arr = (arr[:, None] ^ tab[s + t][None, :]).reshape(-1)
            chunks.append(arr)
    return np.concatenate(chunks)


def _index_to_vector(n: int, l: int, idx: int) -> Tuple[int, Tuple[int, int]]:
    if idx == 0:
        return 0, (0, 0)
    base = 1
    for s, w in _window_lengths(n, l):
        cnt = 3 * 4 ** (w - 1)
        if idx < base + cnt:
            return _burst_vector(s, w, idx - base)
        base += cnt
    raise IndexError(idx)


def _check_level_hash(code: StabilizerCode, l: int):
    n = code.n
    if l == 0:
        return True, False, None, 0
    total = burst_count(n, l)
    if total > MAX_BURSTS_PER_LEVEL:
        raise ResourceLimitError(
            f"level {l} needs {total} bursts, limit {MAX_BURSTS_PER_LEVEL}")
    tab = _unit_syndromes(code)
    syns = _level_syndromes(code, l, tab)
    s_sorted = np.sort(syns)
    dup_mask = s_sorted[1:] == s_sorted[:-1]
    if not dup_mask.any():
        return True, False, None, 0
    dup_vals = np.unique(s_sorted[1:][dup_mask])
    del s_sorted
    hit = np.flatnonzero(np.isin(syns, dup_vals))
    groups: dict = {}
    for idx in hit.tolist():
        groups.setdefault(int(syns[idx]), []).append(idx)
    degenerate = False
    pairs = 0
    for syn_val in sorted(groups):
        members = groups[syn_val]
        rep_f4, (rep_a, rep_b) = _index_to_vector(n, l, members[0])
        rep_ab = rep_a | (rep_b << n)
        for idx in members[1:]:
            f4, (a, b) = _index_to_vector(n, l, idx)
            u = rep_ab ^ (a | (b << n))
            pairs += 1
            if not code.contains(u):
                witness = (F4Vector(n, rep_f4), F4Vector(n, f4))
                return False, degenerate, witness, pairs
            degenerate = True  # distinct vectors, sum in C \ {0}
    return True, degenerate, None, pairs


# ----------------------------------------------------------------------
# All-pairs oracle
# ----------------------------------------------------------------------

def _check_level_oracle(code: StabilizerCode, l: int):
    n = code.n
    if l == 0:
        return True, False, None, 0
    if burst_count(n, l) > 20000:
        raise ResourceLimitError("oracle method is for small codes only")
    vecs = [(0, 0)]
    for s, w in _window_lengths(n, l):
        for c in range(3 * 4 ** (w - 1)):
            f4, (a, b) = _burst_vector(s, w, c)
            vecs.append((f4, a | (b << n)))
    degenerate = False
    pairs = 0
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            u = vecs[i][1] ^ vecs[j][1]
            pairs += 1
            if code.in_dual(u):
                if not code.contains(u):
                    witness = (F4Vector(n, vecs[i][0]), F4Vector(n, vecs[j][0]))
                    return False, degenerate, witness, pairs
                degenerate = True
    return True, degenerate, None, pairs


def quantum_burst_capability(code: StabilizerCode, method: str = "syndrome-hash") -> BurstAnalysis:
    """Largest correctable burst length, degeneracy flag, and witness.

    Candidates descend from the (n-k)/4 ceiling; the first passing level is
    the capability, and the witness (if any) certifies failure one above it.
    """
    check = {"syndrome-hash": _check_level_hash, "oracle": _check_level_oracle}[method]
    n, k = code.n, code.k
    ceiling = qrb(n, k)
    witness = None
    total_pairs = 0
    for cand in range(ceiling, -1, -1):
        ok, degenerate, wit, pairs = check(code, cand)
        total_pairs += pairs
        if ok:
            analysis = BurstAnalysis(n, k, cand, degenerate, witness, total_pairs, method)
            assert check_qrb(analysis)
            assert k < 1 or no_cloning_check(n, analysis.l)
            return analysis
        witness = wit
    raise AssertionError("level 0 cannot fail")


def located_burst_check(code: StabilizerCode, start: int, span: int) -> bool:
    """True iff every pair of errors supported on [start, start+span) has a
    sum outside dual(C) \\ C.

    The sums of such pairs are exactly the vectors supported on the window,
    so this reduces to: the window-supported subspace of dual(C) lies in C.
    """
    n = code.n
    if span < 0 or start < 0 or start + span > n:
        raise ValueError(f"window [{start}, {start + span}) outside length {n}")
    if span == 0:
        return True
    constraints = []
    for sw in code._swapped:
        row = 0
        for t in range(span):
            pos = start + t
            row |= ((sw >> pos) & 1) << (2 * t)            # a variable
            row |= ((sw >> (n + pos)) & 1) << (2 * t + 1)  # b variable
        constraints.append(row)
    for sol in gf2_nullspace(constraints, 2 * span):
        a = b = 0
        for t in range(span):
            a |= ((sol >> (2 * t)) & 1) << (start + t)
            b |= ((sol >> (2 * t + 1)) & 1) << (start + t)
        if not code.contains(a | (b << n)):
            return False
    return True


__all__ = [
    "BurstAnalysis", "qrb", "check_qrb", "no_cloning_check",
    "burst_count", "enumerate_bursts", "quantum_burst_capability",
    "located_burst_check", "MAX_BURSTS_PER_LEVEL",
]
