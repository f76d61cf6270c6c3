"""Exact arithmetic for GF(2), GF(4), GF(4^m), and univariate polynomials.

Element encodings (all characteristic 2, so addition is always XOR):

* GF(2): ints 0, 1.
* GF(4): ints 0, 1, 2, 3 standing for 0, 1, w, w^2 where w is a generator
  (w^2 = w + 1).  The two bits of the code are the coordinates in the
  basis {1, w}: code 3 = 0b11 = 1 + w = w^2.
* GF(4^m): ints 0 .. 4^m-1, packed base-4 digit vectors (2 bits per GF(4)
  coefficient, lowest degree first) in the power basis of a fixed
  irreducible modulus.  Multiplication runs on log/antilog tables.

The moduli below are pinned constants so every build expands extension
field elements into identical GF(4) coordinate matrices.
"""

from __future__ import annotations

from typing import Iterable, List, Sequence, Tuple

from .linalg import mat_nullspace

# GF(4) multiplication: nonzero codes 1,2,3 are w^0, w^1, w^2
_F4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)
_F4_INV = (0, 1, 3, 2)  # index 0 unused
_F4_CONJ = (0, 1, 3, 2)  # x -> x^2 swaps w and w^2


def f4_add(x: int, y: int) -> int:
    """Sum in GF(4)."""
    return x ^ y


def f4_mul(x: int, y: int) -> int:
    """Product in GF(4)."""
    return _F4_MUL[x][y]


def f4_inv(x: int) -> int:
    if x == 0:
        raise ZeroDivisionError("0 has no inverse in GF(4)")
    return _F4_INV[x]


def f4_conj(x: int) -> int:
    """Conjugation x -> x^2, the nontrivial automorphism of GF(4)."""
    return _F4_CONJ[x]


class BinaryField:
    """GF(2) with the same element-int API as the larger fields."""

    order = 2
    name = "GF(2)"

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    @staticmethod
    def mul(a: int, b: int) -> int:
        return a & b

    @staticmethod
    def inv(a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2)")
        return 1

    @staticmethod
    def conj(a: int) -> int:
        return a

    @staticmethod
    def elements() -> range:
        return range(2)

    def __repr__(self) -> str:
        return self.name


class QuaternaryField:
    """GF(4) as a field object (element codes 0,1,2,3)."""

    order = 4
    name = "GF(4)"

    add = staticmethod(f4_add)
    mul = staticmethod(f4_mul)
    inv = staticmethod(f4_inv)
    conj = staticmethod(f4_conj)

    @staticmethod
    def elements() -> range:
        return range(4)

    def __repr__(self) -> str:
        return self.name


GF2 = BinaryField()
GF4 = QuaternaryField()


class UnsupportedDegreeError(ValueError):
    """Requested extension degree has no pinned modulus."""


# Irreducible moduli over GF(4) (coefficients lowest degree first, leading
# coefficient 1 omitted is NOT: full coefficient list including x^m term).
# Chosen so the class of x is a multiplicative generator.
_EXT_MODULI = {
    1: (2, 1),
    2: (2, 1, 1),
    3: (2, 1, 1, 1),
    4: (2, 0, 1, 1, 1),
    5: (2, 0, 0, 0, 1, 1),
    6: (2, 0, 0, 0, 1, 3, 1),
    7: (2, 0, 0, 0, 0, 1, 1, 1),
    8: (2, 0, 0, 0, 0, 2, 0, 2, 1),
}


class ExtField4:
    """GF(4^m) with packed-digit element ints and log/antilog tables."""

    def __init__(self, m: int):
        if m not in _EXT_MODULI:
            raise UnsupportedDegreeError(
                f"no pinned modulus for GF(4^{m}); supported m: {sorted(_EXT_MODULI)}")
        self.m = m
        self.order = 4 ** m
        self.modulus = _EXT_MODULI[m]
        self.name = f"GF(4^{m})"
        # packed low part of the modulus: x^m = sum of lower terms (char 2)
        low = 0
        for i in range(m):
            low |= self.modulus[i] << (2 * i)
        self._xm_images = tuple(_scale_packed(low, c, m) for c in range(4))
        self._build_tables()

    def _mul_by_x(self, e: int) -> int:
        top = (e >> (2 * (self.m - 1))) & 3
        rest = (e & ((1 << (2 * (self.m - 1))) - 1)) << 2
        return rest ^ self._xm_images[top]

    def _build_tables(self) -> None:
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        val = 1
        for i in range(n):
            exp[i] = val
            log[val] = i
            val = self._mul_by_x(val)
        if val != 1:
            raise AssertionError(f"x is not primitive for modulus of GF(4^{self.m})")
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp = exp
        self._log = log

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        return self._exp[self.order - 1 - self._log[a]]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    @property
    def generator(self) -> int:
        """The class of x, a generator of the multiplicative group."""
        return self._exp[1]

    def elements(self) -> range:
        return range(self.order)

    def digits(self, e: int) -> Tuple[int, ...]:
        """GF(4) coordinates of e in the power basis, lowest degree first."""
        return tuple((e >> (2 * i)) & 3 for i in range(self.m))

    def from_digits(self, digits: Sequence[int]) -> int:
        e = 0
        for i, d in enumerate(digits):
            e |= (d & 3) << (2 * i)
        return e

    def mult_matrix(self, e: int) -> List[List[int]]:
        """m x m GF(4) matrix of y -> e*y in the power basis (column j = e*x^j)."""
        cols = [self.digits(self.mul(e, self._exp[j])) for j in range(self.m)]
        return [[cols[j][i] for j in range(self.m)] for i in range(self.m)]

    def __repr__(self) -> str:
        return self.name


def _scale_packed(packed: int, c: int, m: int) -> int:
    """Multiply every 2-bit GF(4) digit of a packed vector by the scalar c."""
    out = 0
    for i in range(m):
        d = (packed >> (2 * i)) & 3
        out |= _F4_MUL[d][c] << (2 * i)
    return out


def ext_field_build(m: int) -> ExtField4:
    """Field object for GF(4^m); raises UnsupportedDegreeError outside the table."""
    return ExtField4(m)


# Primitive polynomials over GF(2), bit i = coefficient of x^i.
_EXT2_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
}


class ExtField2:
    """GF(2^m): elements are ints whose bits are GF(2) coordinates in the
    power basis; multiplication via log/antilog tables, x primitive."""

    def __init__(self, m: int):
        if m not in _EXT2_MODULI:
            raise UnsupportedDegreeError(
                f"no pinned modulus for GF(2^{m}); supported m: {sorted(_EXT2_MODULI)}")
        self.m = m
        self.order = 1 << m
        self.modulus = _EXT2_MODULI[m]
        self.name = f"GF(2^{m})"
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        val = 1
        for i in range(n):
            exp[i] = val
            log[val] = i
            val <<= 1
            if val & self.order:
                val ^= self.modulus
        if val != 1:
            raise AssertionError(f"x is not primitive for modulus of GF(2^{self.m})")
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp = exp
        self._log = log

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        return self._exp[self.order - 1 - self._log[a]]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    @property
    def generator(self) -> int:
        return self._exp[1]

    def elements(self) -> range:
        return range(self.order)

    def digits(self, e: int) -> Tuple[int, ...]:
        """GF(2) coordinates of e, lowest degree first."""
        return tuple((e >> i) & 1 for i in range(self.m))

    def from_digits(self, digits: Sequence[int]) -> int:
        e = 0
        for i, d in enumerate(digits):
            e |= (d & 1) << i
        return e

    def mult_matrix(self, e: int) -> List[List[int]]:
        """m x m GF(2) matrix of y -> e*y in the power basis."""
        cols = [self.digits(self.mul(e, self._exp[j])) for j in range(self.m)]
        return [[cols[j][i] for j in range(self.m)] for i in range(self.m)]

    def __repr__(self) -> str:
        return self.name


def ext2_field_build(m: int) -> ExtField2:
    """Field object for GF(2^m); raises UnsupportedDegreeError outside the table."""
    return ExtField2(m)


# ----------------------------------------------------------------------
# Polynomials
# ----------------------------------------------------------------------

class Poly:
    """Univariate polynomial over one of the fields above.

    Coefficients are stored lowest degree first with no trailing zeros; the
    zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field) -> "Poly":
        return cls(field, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c  # char 2
        return Poly(self.field, out)

    __sub__ = __add__

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero or other.is_zero:
            return Poly.zero(self.field)
        mul = self.field.mul
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] ^= mul(a, b)
        return Poly(self.field, out)

    def scale(self, c: int) -> "Poly":
        mul = self.field.mul
        return Poly(self.field, [mul(c, a) for a in self.coeffs])

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        field, mul = self.field, self.field.mul
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly.zero(field), self
        quot = [0] * (dq + 1)
        inv_lead = field.inv(other.coeffs[-1])
        for shift in range(dq, -1, -1):
            lead = rem[shift + other.degree]
            if lead == 0:
                continue
            c = mul(lead, inv_lead)
            quot[shift] = c
            for i, b in enumerate(other.coeffs):
                if b:
                    rem[shift + i] ^= mul(c, b)
        return Poly(field, quot), Poly(field, rem)

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def monic(self) -> "Poly":
        if self.is_zero or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.field is other.field
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((id(self.field), self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly<0>"
        names = {0: "0", 1: "1", 2: "w", 3: "w2"}
        terms = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            coef = "" if (c == 1 and e > 0) else names[c]
            if e == 0:
                terms.append(names[c])
            elif e == 1:
                terms.append(f"{coef}x")
            else:
                terms.append(f"{coef}x^{e}")
        return f"Poly<{' + '.join(terms)}>"


def poly_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Quotient and remainder with deg(r) < deg(b)."""
    return divmod(a, b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_powmod(base: Poly, e: int, mod: Poly) -> Poly:
    result = Poly.one(base.field)
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def xn_minus_1(n: int, field) -> Poly:
    """x^n - 1, which in characteristic 2 is x^n + 1."""
    coeffs = [0] * (n + 1)
    coeffs[0] = 1
    coeffs[n] = 1
    return Poly(field, coeffs)


def berlekamp_factor(f: Poly) -> List[Poly]:
    """Irreducible factors of a monic squarefree polynomial, sorted.

    Deterministic Berlekamp: nullspace of (Q - I)^T gives the splitting
    polynomials; refined by gcd against v + c over all field constants.
    """
    field = f.field
    if f.degree <= 1:
        return [f.monic()]
    d = f.degree
    q = field.order
    # Q rows: coefficients of x^(q*i) mod f
    xq = poly_powmod(Poly.x(field), q, f)
    rows = []
    cur = Poly.one(field)
    for _ in range(d):
        rows.append(list(cur.coeffs) + [0] * (d - len(cur.coeffs)))
        cur = (cur * xq) % f
    for i in range(d):
        rows[i][i] ^= 1  # Q - I
    transposed = [[rows[i][j] for i in range(d)] for j in range(d)]
    basis = mat_nullspace(field, transposed, d)
    n_factors = len(basis)
    factors = [f.monic()]
    if n_factors == 1:
        return factors
    consts = list(field.elements())
    for v in basis:
        vpoly = Poly(field, v)
        if vpoly.degree <= 0:
            continue
        next_factors: List[Poly] = []
        for g in factors:
            if g.degree <= 1:
                next_factors.append(g)
                continue
            parts = []
            for c in consts:
                h = poly_gcd(g, vpoly + Poly(field, (c,)))
                if h.degree >= 1:
                    parts.append(h)
            next_factors.extend(parts if len(parts) > 1 else [g])
        factors = next_factors
        if len(factors) == n_factors:
            break
    return sorted(factors, key=lambda p: (p.degree, p.coeffs))


__all__ = [
    "f4_add", "f4_mul", "f4_inv", "f4_conj",
    "GF2", "GF4", "BinaryField", "QuaternaryField",
    "ExtField4", "ext_field_build", "ExtField2", "ext2_field_build",
    "UnsupportedDegreeError",
    "Poly", "poly_divmod", "poly_gcd", "poly_powmod", "xn_minus_1",
    "berlekamp_factor",
]
