"""Exact arithmetic in Z[xi_m] = Z[x]/(Phi_m(x)).

Integer polynomials are plain tuples of Python ints, lowest degree first,
with trailing zeros stripped; ``()`` is the zero polynomial.  Elements of
the quotient ring are :class:`CycElem` values holding the dense remainder
vector of length ``phi(m)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

IntPoly = Tuple[int, ...]


def normalize(coeffs: Iterable[int]) -> IntPoly:
    c = list(coeffs)
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def degree(p: Sequence[int]) -> Optional[int]:
    """Degree of a canonical IntPoly; None for the zero polynomial."""
    p = normalize(p)
    return len(p) - 1 if p else None


def poly_add(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, x in enumerate(b):
        res[i] += x
    return normalize(res)


def poly_neg(a: Sequence[int]) -> IntPoly:
    return tuple(-x for x in a)


def poly_sub(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: Sequence[int], b: Sequence[int]) -> IntPoly:
    if not a or not b:
        return ()
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return normalize(res)


def poly_divmod_monic(a: Sequence[int], b: Sequence[int]) -> Tuple[IntPoly, IntPoly]:
    """Long division of ``a`` by a monic ``b`` over the integers."""
    b = normalize(b)
    if not b or b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(normalize(a))
    db = len(b) - 1
    if len(rem) <= db:
        return (), tuple(rem)
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    return normalize(quot), normalize(rem)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPoly:
    """Phi_m(x), as x^m - 1 divided by Phi_d(x) for every proper divisor d."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    num: IntPoly = (-1,) + (0,) * (m - 1) + (1,)
    for d in range(1, m):
        if m % d == 0:
            num, rem = poly_divmod_monic(num, cyclotomic_poly(d))
            assert not rem, "cyclotomic division left a remainder"
    return num


def totient(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


@lru_cache(maxsize=None)
def _reduction_table(m: int) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    phi = cyclotomic_poly(m)
    d = len(phi) - 1
    return d, tuple((j, c) for j, c in enumerate(phi[:d]) if c)


def reduce_vector(coeffs: Sequence[int], m: int) -> Tuple[int, ...]:
    """Remainder of an integer coefficient vector mod Phi_m, padded to phi(m)."""
    d, table = _reduction_table(m)
    v = list(coeffs)
    for i in range(len(v) - 1, d - 1, -1):
        c = v[i]
        if c:
            base = i - d
            for j, pj in table:
                v[base + j] -= c * pj
    if len(v) < d:
        v.extend([0] * (d - len(v)))
    return tuple(v[:d])


@dataclass(frozen=True, slots=True)
class CycElem:
    """An element of Z[xi_m], stored in the power basis 1, z, ..., z^(phi(m)-1)."""

    m: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != totient(self.m):
            raise ValueError(
                f"Z[xi_{self.m}] elements need {totient(self.m)} coefficients, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def integer(cls, m: int, c: int) -> "CycElem":
        return cls(m, (c,) + (0,) * (totient(m) - 1))

    @classmethod
    def zero(cls, m: int) -> "CycElem":
        return cls.integer(m, 0)

    @classmethod
    def one(cls, m: int) -> "CycElem":
        return cls.integer(m, 1)

    @classmethod
    def xi(cls, m: int) -> "CycElem":
        """The primitive root of unity z itself."""
        return cyc_reduce((0, 1), m)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other) -> "CycElem":
        if isinstance(other, int):
            return CycElem.integer(self.m, other)
        if not isinstance(other, CycElem):
            return NotImplemented
        if other.m != self.m:
            raise ValueError(f"modulus mismatch: {self.m} vs {other.m}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycElem(self.m, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycElem(self.m, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycElem(self.m, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycElem(self.m, tuple(other * x for x in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.coeffs) == 1:
            return CycElem(self.m, (self.coeffs[0] * other.coeffs[0],))
        return CycElem(self.m, reduce_vector(_convolve(self.coeffs, other.coeffs), self.m))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycElem":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = CycElem.one(self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def as_int(self) -> Optional[int]:
        """The integer value if this element lies in Z, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]


def _convolve(a: Sequence[int], b: Sequence[int]) -> list:
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                res[i + j] += x * y
    return res


def cyc_reduce(p: Sequence[int], m: int) -> CycElem:
    """Canonical residue of an integer polynomial modulo Phi_m."""
    return CycElem(m, reduce_vector(p, m))


def cyc_add(a: CycElem, b: CycElem) -> CycElem:
    return a + b


def cyc_mul(a: CycElem, b: CycElem) -> CycElem:
    return a * b


def cyc_neg(a: CycElem) -> CycElem:
    return -a


def specialize_p(f: Sequence[int], m: int) -> CycElem:
    """Evaluate an integer polynomial at p = xi_m by Horner's rule."""
    z = CycElem.xi(m)
    acc = CycElem.zero(m)
    for c in reversed(tuple(f)):
        acc = acc * z + c
    return acc


@lru_cache(maxsize=None)
def xi_power(m: int, e: int) -> CycElem:
    """xi_m^e with the exponent taken mod m."""
    return cyc_reduce((0,) * (e % m) + (1,), m)
