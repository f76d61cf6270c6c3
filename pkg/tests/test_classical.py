import itertools

import pytest

from qbecc.classical import (InvalidGeneratorError, binary_dual_containing,
                             classical_burst_capability, cyclic_from_poly,
                             hermitian_dual_containing, linear_code,
                             rs_burst_capability, rs_mds)
from qbecc.gf import GF2, GF4, Poly, ext_field_build
from qbecc.linalg import mat_mul_vec

W = 2

G_15_9 = Poly(GF4, (1, 0, 0, W, 0, 0, 1))  # x^6 + w x^3 + 1


def test_cyclic_15_9():
    code = cyclic_from_poly(G_15_9, 15)
    assert code.base.params == (15, 9)


def test_cyclic_unit_generator_full_space():
    code = cyclic_from_poly(Poly.one(GF2), 7)
    assert code.base.params == (7, 7)
    assert code.base.check_rows == ()


def test_cyclic_single_parity():
    code = cyclic_from_poly(Poly(GF2, (1, 1)), 3)
    assert code.base.params == (3, 2)


def test_cyclic_invalid_generator():
    with pytest.raises(InvalidGeneratorError):
        cyclic_from_poly(Poly(GF2, (1, 0, 1, 1)), 5)  # x^3+x^2+1 does not divide x^5-1


def test_generator_check_orthogonality():
    for g, n in [(G_15_9, 15), (Poly(GF2, (1, 1, 0, 1)), 7)]:
        code = cyclic_from_poly(g, n).base
        for h in code.check_rows:
            assert not any(mat_mul_vec(code.field, code.gen_rows, h))


def test_burst_capability_15_9_is_3():
    code = cyclic_from_poly(G_15_9, 15).base
    assert classical_burst_capability(code).l == 3


def test_burst_capability_repetition():
    code = cyclic_from_poly(Poly(GF2, (1, 1, 1)), 3).base  # [3,1] repetition
    assert code.params == (3, 1)
    assert classical_burst_capability(code).l == 1


def test_burst_capability_7_3():
    # frozen from the all-pairs oracle below
    g = Poly(GF2, (1, 1)) * Poly(GF2, (1, 1, 0, 1))
    code = cyclic_from_poly(g, 7).base
    assert code.params == (7, 3)
    cap = classical_burst_capability(code)
    assert cap.l == 2
    assert cap.l == _oracle_capability(code, end_around=False)


def _oracle_capability(code, end_around):
    """All-pairs syndrome-distinctness, written independently of the engine."""
    n = code.n
    order = code.field.order

    def all_bursts(l):
        vecs = {tuple([0] * n)}
        starts = range(n) if end_around else range(n)
        for s in starts:
            for span in range(1, l + 1):
                if not end_around and s + span > n:
                    continue
                for content in itertools.product(range(order), repeat=span):
                    if span > 1 and (content[0] == 0 or content[-1] == 0):
                        continue
                    if span == 1 and content[0] == 0:
                        continue
                    v = [0] * n
                    for i, c in enumerate(content):
                        v[(s + i) % n] = c
                    vecs.add(tuple(v))
        return vecs

    best = 0
    for l in range(1, (n - code.k) // 2 + 1):
        syns = set()
        ok = True
        for v in all_bursts(l):
            syn = code.syndrome(v)
            if syn in syns:
                ok = False
                break
            syns.add(syn)
        if not ok:
            break
        best = l
    return best


def test_burst_capability_end_around_not_larger():
    for g, n in [(G_15_9, 15), (Poly(GF2, (1, 1)) * Poly(GF2, (1, 1, 0, 1)), 7)]:
        code = cyclic_from_poly(g, n).base
        plain = classical_burst_capability(code, end_around=False)
        cyc = classical_burst_capability(code, end_around=True)
        assert cyc.l <= plain.l
        assert cyc.l == _oracle_capability(code, end_around=True)


def test_burst_capability_reiger_ceiling():
    for g, n in [(G_15_9, 15), (Poly(GF2, (1, 1, 1)), 3)]:
        code = cyclic_from_poly(g, n).base
        assert classical_burst_capability(code).l <= (code.n - code.k) // 2


# ----------------------------------------------------------------------
# Reed-Solomon
# ----------------------------------------------------------------------

def test_rs_mds_example_params():
    F = ext_field_build(6)
    code = rs_mds(6, 2, F)
    assert code.params == (6, 2)
    assert rs_burst_capability(code).l == 2
    assert rs_burst_capability(code).end_around


def test_rs_mds_l0_identity():
    F = ext_field_build(2)
    code = rs_mds(4, 0, F)
    assert code.params == (4, 4)


def test_rs_mds_gf16_distance_exhaustive():
    F = ext_field_build(2)
    code = rs_mds(4, 1, F)
    assert code.params == (4, 2)
    weights = sorted(sum(1 for x in w if x) for w in code.codewords())
    assert weights[0] == 0 and weights[1] == 3  # minimum distance 3


def test_rs_mds_singleton_equality_small():
    # every codebook up to 2^16 words is enumerated exactly
    for m, n2, l2 in [(2, 4, 1), (2, 6, 2), (2, 5, 1), (3, 5, 2)]:
        F = ext_field_build(m)
        code = rs_mds(n2, l2, F)
        if F.order ** code.k > 1 << 16:
            continue
        d = min(sum(1 for x in w if x) for w in code.codewords() if any(w))
        assert d == code.n - code.k + 1


def test_rs_mds_extended_length():
    F = ext_field_build(2)
    code = rs_mds(17, 1, F)  # q + 1
    assert code.params == (17, 15)
    with pytest.raises(ValueError):
        rs_mds(19, 1, F)  # beyond q + 1
    with pytest.raises(ValueError):
        rs_mds(6, 3, F)   # l2 above floor((n2-1)/2)


# ----------------------------------------------------------------------
# dual containment
# ----------------------------------------------------------------------

def test_hermitian_dual_containing_15_9():
    code = cyclic_from_poly(G_15_9, 15).base
    assert hermitian_dual_containing(code)


def test_hermitian_dual_containing_small_dimension():
    g = G_15_9 * Poly(GF4, (1, 1)) * Poly(GF4, (W, 1)) * Poly(GF4, (3, 1))
    code = cyclic_from_poly(g, 15).base
    # k = 6 < 15/2 is impossible by dimension count
    assert code.k < 15 / 2
    assert not hermitian_dual_containing(code)


def test_hermitian_dual_containing_full_space():
    code = linear_code(GF4, [[1 if j == i else 0 for j in range(5)] for i in range(5)])
    assert hermitian_dual_containing(code)


def test_hermitian_dual_containing_wrong_field():
    code = cyclic_from_poly(Poly(GF2, (1, 1)), 3).base
    with pytest.raises(ValueError):
        hermitian_dual_containing(code)


HAMMING_ROWS = [[1, 0, 0, 0, 0, 1, 1],
                [0, 1, 0, 0, 1, 0, 1],
                [0, 0, 1, 0, 1, 1, 0],
                [0, 0, 0, 1, 1, 1, 1]]


def test_binary_dual_containing_hamming():
    ham = linear_code(GF2, HAMMING_ROWS)
    assert ham.params == (7, 4)
    # classical fact: the Hamming check matrix is self-orthogonal
    for h1 in ham.check_rows:
        for h2 in ham.check_rows:
            assert sum(a & b for a, b in zip(h1, h2)) % 2 == 0
    assert binary_dual_containing(ham, ham)


def test_binary_dual_containing_full_and_zero():
    full = linear_code(GF2, [[1 if j == i else 0 for j in range(5)] for i in range(5)])
    ham = linear_code(GF2, HAMMING_ROWS)
    assert binary_dual_containing(ham, linear_code(GF2, [[1 if j == i else 0 for j in range(7)] for i in range(7)]))
    # dual of the full space is the zero code, contained everywhere
    proper = cyclic_from_poly(Poly(GF2, (1, 1)), 5).base
    assert binary_dual_containing(full, proper)


def test_binary_dual_containing_length_mismatch():
    a = cyclic_from_poly(Poly(GF2, (1, 1)), 3).base
    b = cyclic_from_poly(Poly(GF2, (1, 1)), 5).base
    with pytest.raises(ValueError):
        binary_dual_containing(a, b)
