"""Exact arithmetic in GF(p) and GF(p**m) in a fixed polynomial basis.

Elements are dense coefficient vectors over GF(p), constant term first,
reduced modulo a monic irreducible polynomial of degree m. The canonical
element order is lexicographic on the coefficient tuple; it fixes the
coordinate order of every code built downstream, so it must never change.
An element's position in that order is its *index*:

    index(c0, c1, ..., c_{m-1}) = c0*p^(m-1) + c1*p^(m-2) + ... + c_{m-1}

When no modulus is supplied, the lexicographically smallest monic
irreducible polynomial (same scan order) is selected, which makes every
field, and hence every report, reproducible bit for bit.
"""

from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    NotPrime,
    ReducibleModulus,
)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _poly_divides(g, f, p):
    """Whether the monic polynomial g divides f over GF(p); coeff lists, constant first."""
    f = list(f)
    dg = len(g) - 1
    while len(f) > dg:
        c = f[-1]
        if c:
            off = len(f) - 1 - dg
            for i in range(dg + 1):
                f[off + i] = (f[off + i] - c * g[i]) % p
        f.pop()
    return all(c == 0 for c in f)


def _is_irreducible(f, p) -> bool:
    # trial division by every monic polynomial of degree 1 .. deg(f)//2;
    # feasible because p and m stay small at desk scale
    m = len(f) - 1
    for d in range(1, m // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if _poly_divides(list(tail) + [1], f, p):
                return False
    return True


def _smallest_irreducible(p, m):
    for coeffs in itertools.product(range(p), repeat=m):
        f = list(coeffs) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def make_field(p: int, m: int, modulus=None) -> "Field":
    """Construct GF(p**m) for an odd prime p.

    If `modulus` (coefficient list, constant term first, monic of degree m)
    is omitted, the lexicographically smallest monic irreducible polynomial
    is chosen by deterministic scan.
    """
    if not isinstance(p, int) or not isinstance(m, int):
        raise TypeError("p and m must be integers")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported; p must be an odd prime")
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree m must be at least 1")
    if modulus is None:
        modulus = _smallest_irreducible(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m, constant term first")
        if not _is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {list(modulus)} is reducible over GF({p})")
    return Field(p, m, modulus)


class Field:
    """GF(p**m) with a fixed modulus; lookup tables are lazy and treated as immutable."""

    def __init__(self, p, m, modulus):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        self._index_weights = tuple(p ** (m - 1 - i) for i in range(m))
        # digits of x**k mod modulus for k = 0 .. 2m-2, used to reduce products
        top = tuple((-c) % p for c in modulus[:m])
        rows = [tuple(1 if j == k else 0 for j in range(m)) for k in range(m)]
        for _ in range(m - 1):
            prev = rows[-1]
            carry = prev[m - 1]
            rows.append(tuple(((prev[j - 1] if j else 0) + carry * top[j]) % p for j in range(m)))
        self._xpow = tuple(rows)
        self.zero = FieldElement(self, (0,) * m)
        self.one = FieldElement(self, (1,) + (0,) * (m - 1))

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __eq__(self, other):
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    # -- element construction -------------------------------------------------

    def element(self, coeffs) -> "FieldElement":
        """Element from a length-m coefficient sequence, constant term first."""
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def constant(self, c: int) -> "FieldElement":
        """Embed a prime-field residue as a constant element."""
        return FieldElement(self, (int(c) % self.p,) + (0,) * (self.m - 1))

    def basis_element(self, i: int) -> "FieldElement":
        """The residue of x**i, 0 <= i < m."""
        if not 0 <= i < self.m:
            raise ValueError("basis exponent out of range")
        return FieldElement(self, self._xpow[i])

    def element_at(self, index: int) -> "FieldElement":
        """Element at a given position of the canonical order."""
        if not 0 <= index < self.q:
            raise ValueError("element index out of range")
        return FieldElement(self, tuple((index // w) % self.p for w in self._index_weights))

    def elements(self, nonzero_only: bool = False):
        return enumerate_field(self, nonzero_only)

    def prime_subfield_indices(self) -> tuple:
        """Canonical indices of the constants 0, 1, ..., p-1."""
        return tuple(c * self._index_weights[0] for c in range(self.p))

    # -- scalar core ----------------------------------------------------------

    def _mul_coeffs(self, a, b):
        p, m = self.p, self.m
        if m == 1:
            return ((a[0] * b[0]) % p,)
        conv = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = [0] * m
        for k in range(2 * m - 1):
            ck = conv[k] % p
            if ck:
                row = self._xpow[k]
                for j in range(m):
                    out[j] = (out[j] + ck * row[j]) % p
        return tuple(out)

    # -- bulk tables ------------------------------------------------------------
    # All tables are indexed by canonical element index and never mutated after
    # construction, so they may be shared freely across threads.

    @cached_property
    def digits(self) -> np.ndarray:
        """(q, m) int8 array; row i holds the coefficients of element i."""
        r = np.arange(self.q, dtype=np.int64)
        mat = np.column_stack([((r // w) % self.p).astype(np.int8) for w in self._index_weights])
        mat.setflags(write=False)
        return mat

    @cached_property
    def trace_table(self) -> np.ndarray:
        """(q,) int8 array of Tr(x) for every element, by linearity over the basis."""
        base = np.array([self.basis_element(i).trace() for i in range(self.m)], dtype=np.int16)
        t = ((self.digits.astype(np.int16) @ base) % self.p).astype(np.int8)
        t.setflags(write=False)
        return t

    @cached_property
    def square_index_table(self) -> np.ndarray:
        """(q,) int64 array mapping each element index to the index of its square."""
        m = self.m
        d = self.digits.astype(np.int32)
        red = np.array(self._xpow, dtype=np.int32)  # (2m-1, m)
        kernel = np.empty((m, m, m), dtype=np.int32)
        for i in range(m):
            for j in range(m):
                kernel[i, j] = red[i + j]
        pairs = np.einsum("ai,aj->aij", d, d).reshape(self.q, m * m)
        sq_digits = (pairs @ kernel.reshape(m * m, m)) % self.p
        idx = sq_digits.astype(np.int64) @ np.array(self._index_weights, dtype=np.int64)
        idx.setflags(write=False)
        return idx

    @cached_property
    def quadratic_character_table(self) -> np.ndarray:
        """(q,) int8 array of the quadratic character, built by marking squares."""
        table = np.full(self.q, -1, dtype=np.int8)
        table[0] = 0
        squares = np.unique(self.square_index_table[1:])
        table[squares] = 1
        assert squares.size == (self.q - 1) // 2
        table.setflags(write=False)
        return table

    def trace_of_multiples(self, c: "FieldElement") -> np.ndarray:
        """(q,) int8 array of Tr(c*x) over the whole field in canonical order."""
        if c.field != self:
            raise FieldMismatch("element belongs to a different field")
        col = np.array(
            [(c * self.basis_element(i)).trace() for i in range(self.m)], dtype=np.int16
        )
        return ((self.digits.astype(np.int16) @ col) % self.p).astype(np.int8)


class FieldElement:
    """Immutable element of a Field; supports +, -, *, /, ** and comparison."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    # -- representation -------------------------------------------------------

    def __repr__(self):
        return f"{self.field!r}{list(self.coeffs)}"

    @property
    def index(self) -> int:
        """Position of this element in the canonical field order."""
        return sum(c * w for c, w in zip(self.coeffs, self.field._index_weights))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- comparison / hashing ---------------------------------------------------

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected a FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch("operands belong to different fields")

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __lt__(self, other):
        self._check(other)
        return self.coeffs < other.coeffs

    def __le__(self, other):
        self._check(other)
        return self.coeffs <= other.coeffs

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field, self.field._mul_coeffs(self.coeffs, other.coeffs))

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("zero has no multiplicative inverse")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    # -- field-theoretic maps -----------------------------------------------------

    def trace(self) -> int:
        """Tr(x) = x + x^p + ... + x^(p^(m-1)), read off as a residue mod p."""
        p, m = self.field.p, self.field.m
        acc = self
        frob = self
        for _ in range(m - 1):
            frob = frob**p
            acc = acc + frob
        assert not any(acc.coeffs[1:]), "trace left the prime field"
        return acc.coeffs[0]


def trace(x: FieldElement) -> int:
    """Trace from GF(p**m) down to GF(p)."""
    return x.trace()


def quadratic_character(x: FieldElement) -> int:
    """0 at zero, +1 on nonzero squares, -1 on nonsquares (Euler's criterion)."""
    if x.is_zero():
        return 0
    v = x ** ((x.field.q - 1) // 2)
    if v == x.field.one:
        return 1
    assert v == -x.field.one
    return -1


def enumerate_field(field: Field, nonzero_only: bool = False):
    """Yield every element of the field exactly once in canonical order."""
    for coeffs in itertools.product(range(field.p), repeat=field.m):
        if nonzero_only and not any(coeffs):
            continue
        yield FieldElement(field, coeffs)
