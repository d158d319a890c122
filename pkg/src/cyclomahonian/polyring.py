"""Polynomials in q over Z[xi_m], truncated power series in t, and sparse
integer polynomials in (t, q, p).

Every q-polynomial carries its cyclotomic modulus ``m``; identities that do
not involve ``p`` simply live in the ``m = 1`` ring, which is Z.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .cyclotomic import CycElem, reduce_vector, totient, xi_power
from .errors import NotDivisibleError

Row = Tuple[int, ...]
Scalar = Union[int, CycElem]

DEFAULT_TRUNC = 12


# --------------------------------------------------------------------------
# QPoly

def _strip_rows(rows: Sequence[Row]) -> Tuple[Row, ...]:
    n = len(rows)
    while n and not any(rows[n - 1]):
        n -= 1
    return tuple(rows[:n])


def _mul_rows(a: Sequence[Row], b: Sequence[Row], m: int) -> List[Row]:
    if not a or not b:
        return []
    d = totient(m)
    if d == 1:
        out = [0] * (len(a) + len(b) - 1)
        bi = [r[0] for r in b]
        for i, (x,) in enumerate(a):
            if x:
                for j, y in enumerate(bi):
                    if y:
                        out[i + j] += x * y
        return [(c,) for c in out]
    acc = [[0] * (2 * d - 1) for _ in range(len(a) + len(b) - 1)]
    for i, ra in enumerate(a):
        if not any(ra):
            continue
        for j, rb in enumerate(b):
            if not any(rb):
                continue
            slot = acc[i + j]
            for u, x in enumerate(ra):
                if x:
                    for v, y in enumerate(rb):
                        if y:
                            slot[u + v] += x * y
    return [reduce_vector(s, m) for s in acc]


@dataclass(frozen=True, slots=True)
class QPoly:
    """Polynomial in q with coefficients in Z[xi_m].

    ``rows[j]`` is the power-basis vector of the coefficient of ``q^j``;
    trailing zero rows are never stored.
    """

    m: int
    rows: Tuple[Row, ...]

    @classmethod
    def from_rows(cls, m: int, rows: Sequence[Row]) -> "QPoly":
        return cls(m, _strip_rows([tuple(r) for r in rows]))

    @classmethod
    def from_ints(cls, m: int, ints: Sequence[int]) -> "QPoly":
        pad = (0,) * (totient(m) - 1)
        return cls.from_rows(m, [(c,) + pad for c in ints])

    @classmethod
    def from_coeffs(cls, m: int, coeffs: Sequence[CycElem]) -> "QPoly":
        for c in coeffs:
            if c.m != m:
                raise ValueError(f"modulus mismatch: {c.m} vs {m}")
        return cls.from_rows(m, [c.coeffs for c in coeffs])

    @classmethod
    def constant(cls, m: int, c: Scalar) -> "QPoly":
        return cls.monomial(m, 0, c)

    @classmethod
    def monomial(cls, m: int, deg: int, c: Scalar = 1) -> "QPoly":
        if isinstance(c, int):
            c = CycElem.integer(m, c)
        zero = (0,) * totient(m)
        return cls.from_rows(m, [zero] * deg + [c.coeffs])

    @classmethod
    def zero(cls, m: int) -> "QPoly":
        return cls(m, ())

    @classmethod
    def one(cls, m: int) -> "QPoly":
        return cls.constant(m, 1)

    @property
    def coeffs(self) -> Tuple[CycElem, ...]:
        return tuple(CycElem(self.m, r) for r in self.rows)

    def coeff(self, j: int) -> CycElem:
        if 0 <= j < len(self.rows):
            return CycElem(self.m, self.rows[j])
        return CycElem.zero(self.m)

    @property
    def degree(self) -> Optional[int]:
        return len(self.rows) - 1 if self.rows else None

    def is_zero(self) -> bool:
        return not self.rows

    def __bool__(self) -> bool:
        return bool(self.rows)

    def _lift(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            if other.m != self.m:
                raise ValueError(f"modulus mismatch: {self.m} vs {other.m}")
            return other
        if isinstance(other, (int, CycElem)):
            return QPoly.constant(self.m, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.rows, other.rows
        if len(a) < len(b):
            a, b = b, a
        rows = list(a)
        for j, r in enumerate(b):
            rows[j] = tuple(x + y for x, y in zip(rows[j], r))
        return QPoly.from_rows(self.m, rows)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(self.m, tuple(tuple(-x for x in r) for r in self.rows))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly.from_rows(self.m, [tuple(other * x for x in r) for r in self.rows])
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return QPoly.from_rows(self.m, _mul_rows(self.rows, other.rows, self.m))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = QPoly.one(self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, j: int) -> "QPoly":
        """Multiply by q^j."""
        if not self.rows:
            return self
        zero = (0,) * totient(self.m)
        return QPoly(self.m, (zero,) * j + self.rows)

    def subs_power(self, s: int) -> "QPoly":
        """Substitute q -> q^s."""
        if s == 1 or not self.rows:
            return self
        zero = (0,) * totient(self.m)
        rows = [zero] * (s * (len(self.rows) - 1) + 1)
        for j, r in enumerate(self.rows):
            rows[s * j] = r
        return QPoly.from_rows(self.m, rows)

    def eval_q1(self) -> CycElem:
        acc = [0] * totient(self.m)
        for r in self.rows:
            for u, x in enumerate(r):
                acc[u] += x
        return CycElem(self.m, tuple(acc))

    def embed(self, m: int) -> "QPoly":
        """Map an integer-coefficient polynomial into the Z[xi_m] ring."""
        if m == self.m:
            return self
        ints = []
        for r in self.rows:
            if any(r[1:]):
                raise ValueError("only integer-coefficient polynomials can change ring")
            ints.append(r[0])
        return QPoly.from_ints(m, ints)

    def int_coeffs(self) -> Tuple[int, ...]:
        """Integer coefficients; raises if some coefficient is not rational."""
        out = []
        for r in self.rows:
            if any(r[1:]):
                raise ValueError("polynomial has non-integer coefficients")
            out.append(r[0])
        return tuple(out)


def _unit_inverse(c: CycElem) -> CycElem:
    nz = [(u, x) for u, x in enumerate(c.coeffs) if x]
    if len(nz) != 1 or abs(nz[0][1]) != 1:
        raise ValueError(f"leading coefficient {c.coeffs} is not of the form +-xi^j")
    u, sign = nz[0]
    return xi_power(c.m, -u) * sign


def poly_div_exact(a: QPoly, b: QPoly) -> QPoly:
    """Exact quotient a / b; the leading coefficient of b must be +-xi^j."""
    if a.m != b.m:
        raise ValueError(f"modulus mismatch: {a.m} vs {b.m}")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    m = a.m
    db = b.degree
    inv = _unit_inverse(b.coeff(db))
    rem = list(a.coeffs)
    bc = b.coeffs
    if len(rem) <= db:
        raise NotDivisibleError("dividend degree below divisor degree")
    quot = [CycElem.zero(m)] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            qc = c * inv
            quot[i - db] = qc
            for j, bj in enumerate(bc):
                if bj:
                    rem[i - db + j] = rem[i - db + j] - qc * bj
    if any(r for r in rem[:db]):
        raise NotDivisibleError("nonzero remainder in exact polynomial division")
    return QPoly.from_coeffs(m, quot)


# --------------------------------------------------------------------------
# q-gadgets

def q_int(n: int, step: int = 1, m: int = 1) -> QPoly:
    """[n]_{q^step} = 1 + q^step + ... + q^(step*(n-1))."""
    if n < 0 or step < 1:
        raise ValueError("need n >= 0 and step >= 1")
    ints = [0] * (step * (n - 1) + 1) if n else []
    for j in range(n):
        ints[step * j] = 1
    return QPoly.from_ints(m, ints)


@lru_cache(maxsize=None)
def _q_pochhammer_int(n: int) -> QPoly:
    f = QPoly.one(1)
    for j in range(1, n + 1):
        f = f * (QPoly.one(1) - QPoly.monomial(1, j))
    return f


def q_pochhammer(n: int, m: int = 1) -> QPoly:
    """(q;q)_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _q_pochhammer_int(n).embed(m)


@lru_cache(maxsize=None)
def _q_factorial_int(n: int) -> QPoly:
    f = QPoly.one(1)
    for k in range(1, n + 1):
        f = f * q_int(k)
    return f


def q_factorial(n: int, m: int = 1) -> QPoly:
    """[n]_q!."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _q_factorial_int(n).embed(m)


@lru_cache(maxsize=None)
def _q_multinomial_int(parts: Tuple[int, ...]) -> QPoly:
    f = _q_pochhammer_int(sum(parts))
    for k in parts:
        f = poly_div_exact(f, _q_pochhammer_int(k))
    return f


def q_multinomial(parts: Sequence[int], m: int = 1) -> QPoly:
    """(q;q)_{sum parts} / prod (q;q)_{part}, by exact division."""
    parts = tuple(parts)
    if any(k < 0 for k in parts):
        raise ValueError("parts must be nonnegative")
    return _q_multinomial_int(tuple(sorted(parts))).embed(m)


def q_binomial(n: int, k: int, m: int = 1) -> QPoly:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return q_multinomial((k, n - k), m)


# --------------------------------------------------------------------------
# Truncated series in t

@dataclass(frozen=True, slots=True)
class TruncSeries:
    """Power series in t truncated at t^order, coefficients QPoly.

    ``exact`` marks a series known to have no terms beyond ``order`` (a
    polynomial in t); it does not take part in equality.
    """

    m: int
    order: int
    coeffs: Tuple[QPoly, ...]
    exact: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )
        for c in self.coeffs:
            if c.m != self.m:
                raise ValueError(f"modulus mismatch: {c.m} vs {self.m}")

    def coeff(self, ell: int) -> QPoly:
        if ell < 0 or ell > self.order:
            if ell > self.order and not self.exact:
                raise IndexError(f"t^{ell} is beyond truncation order {self.order}")
            return QPoly.zero(self.m)
        return self.coeffs[ell]

    @property
    def t_degree(self) -> Optional[int]:
        for ell in range(self.order, -1, -1):
            if self.coeffs[ell]:
                return ell
        return None


def make_series(m: int, order: int, coeffs: Sequence[QPoly], exact: bool = False) -> TruncSeries:
    """Build a series from a coefficient list, padding or truncating to ``order``."""
    coeffs = list(coeffs)
    if len(coeffs) > order + 1:
        if exact and any(c for c in coeffs[order + 1:]):
            exact = False
        coeffs = coeffs[: order + 1]
    coeffs += [QPoly.zero(m)] * (order + 1 - len(coeffs))
    return TruncSeries(m, order, tuple(coeffs), exact)


def series_zero(m: int, order: int = DEFAULT_TRUNC) -> TruncSeries:
    return make_series(m, order, [], exact=True)


def series_one(m: int, order: int = DEFAULT_TRUNC) -> TruncSeries:
    return make_series(m, order, [QPoly.one(m)], exact=True)


def geometric(m: int, order: int = DEFAULT_TRUNC) -> TruncSeries:
    """1/(1-t): the all-ones series, identity for the Hadamard product."""
    return make_series(m, order, [QPoly.one(m)] * (order + 1))


def with_order(f: TruncSeries, order: int) -> TruncSeries:
    """Re-truncate ``f``; extending is only valid for exact polynomials."""
    if order > f.order and not f.exact:
        raise ValueError(f"cannot extend a series truncated at {f.order} to order {order}")
    return make_series(f.m, order, f.coeffs, exact=f.exact)


def _check_same_ring(*fs: TruncSeries) -> int:
    ms = {f.m for f in fs}
    if len(ms) != 1:
        raise ValueError(f"modulus mismatch: {sorted(ms)}")
    return ms.pop()


def _result_order(fs: Sequence[TruncSeries], exact_order: int) -> Tuple[int, bool]:
    cut = [f.order for f in fs if not f.exact]
    if cut:
        return min(cut), False
    return exact_order, True


def series_add(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    m = _check_same_ring(f, g)
    order, exact = _result_order((f, g), max(f.order, g.order))
    return make_series(m, order, [f.coeff(j) + g.coeff(j) for j in range(order + 1)], exact)


def series_neg(f: TruncSeries) -> TruncSeries:
    return TruncSeries(f.m, f.order, tuple(-c for c in f.coeffs), f.exact)


def series_sub(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    return series_add(f, series_neg(g))


def series_scale(f: TruncSeries, c: Union[Scalar, QPoly]) -> TruncSeries:
    """Multiply every coefficient by a scalar or by a q-polynomial."""
    if isinstance(c, QPoly) and c.m != f.m:
        raise ValueError(f"modulus mismatch: {c.m} vs {f.m}")
    if isinstance(c, CycElem) and c.m != f.m:
        raise ValueError(f"modulus mismatch: {c.m} vs {f.m}")
    return TruncSeries(f.m, f.order, tuple(x * c for x in f.coeffs), f.exact)


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Cauchy product; truncated at the smaller order of any non-exact factor."""
    m = _check_same_ring(f, g)
    fd = f.t_degree
    gd = g.t_degree
    order, exact = _result_order((f, g), f.order + g.order)
    out = [QPoly.zero(m)] * (order + 1)
    if fd is None or gd is None:
        return make_series(m, order, out, exact)
    for a in range(min(fd, order) + 1):
        fa = f.coeffs[a]
        if not fa:
            continue
        for b in range(min(gd, order - a) + 1):
            gb = g.coeffs[b]
            if gb:
                out[a + b] = out[a + b] + fa * gb
    return make_series(m, order, out, exact)


def series_pow(f: TruncSeries, e: int) -> TruncSeries:
    result = series_one(f.m, 0 if f.exact else f.order)
    for _ in range(e):
        result = series_mul(result, f)
    return result


def series_eq(f: TruncSeries, g: TruncSeries) -> bool:
    _check_same_ring(f, g)
    if f.exact and g.exact:
        order = max(f.order, g.order)
        return with_order(f, order).coeffs == with_order(g, order).coeffs
    if f.order != g.order:
        raise ValueError(f"cannot compare series truncated at {f.order} and {g.order}")
    return f.coeffs == g.coeffs


def hadamard(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Coefficientwise product of two series of the same order."""
    m = _check_same_ring(f, g)
    if f.order != g.order:
        raise ValueError(f"Hadamard product needs equal orders, got {f.order} and {g.order}")
    return TruncSeries(m, f.order, tuple(a * b for a, b in zip(f.coeffs, g.coeffs)),
                       f.exact or g.exact)


def series_qsubs(f: TruncSeries, s: int) -> TruncSeries:
    """Substitute q -> q^s in every coefficient."""
    return TruncSeries(f.m, f.order, tuple(c.subs_power(s) for c in f.coeffs), f.exact)


def series_eval_q1(f: TruncSeries) -> TruncSeries:
    """Set q = 1, leaving constant q-polynomials."""
    return TruncSeries(f.m, f.order, tuple(QPoly.constant(f.m, c.eval_q1()) for c in f.coeffs),
                       f.exact)


def series_eval_t1(f: TruncSeries) -> QPoly:
    """Set t = 1; only meaningful for exact polynomials in t."""
    if not f.exact:
        raise ValueError("t = 1 is only defined for exact polynomials in t")
    acc = QPoly.zero(f.m)
    for c in f.coeffs:
        acc = acc + c
    return acc


def tpoly_div_exact(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Exact quotient of two polynomials in t whose divisor has constant term +-1."""
    m = _check_same_ring(a, b)
    if not (a.exact and b.exact):
        raise ValueError("exact division needs polynomials in t")
    da, db = a.t_degree, b.t_degree
    if db is None:
        raise ZeroDivisionError("division by the zero polynomial")
    if da is None:
        return series_zero(m, 0)
    b0 = b.coeffs[0].int_coeffs() if b.coeffs[0] else ()
    if b0 not in ((1,), (-1,)):
        raise ValueError("divisor must have constant term +-1")
    if da < db:
        raise NotDivisibleError("dividend degree below divisor degree")
    sign = b0[0]
    rem = list(with_order(a, da).coeffs)
    quot = []
    for j in range(da - db + 1):
        c = rem[j] * sign
        quot.append(c)
        if c:
            for u in range(1, db + 1):
                if j + u <= da and b.coeffs[u]:
                    rem[j + u] = rem[j + u] - c * b.coeffs[u]
    if any(r for r in rem[da - db + 1:]):
        raise NotDivisibleError("nonzero remainder in exact division by a polynomial in t")
    return make_series(m, da - db, quot, exact=True)


def pochhammer_t(a_tshift: int, a_qshift: int, qstep: int, n: int,
                 L: Optional[int] = None, m: int = 1) -> TruncSeries:
    """(t^a_tshift q^a_qshift ; q^qstep)_n, a polynomial in t.

    With ``L`` omitted the result is exact; otherwise it is truncated at t^L.
    """
    if n < 0 or qstep < 1 or a_tshift < 0 or a_qshift < 0:
        raise ValueError("invalid Pochhammer parameters")
    poly = [QPoly.one(m)]
    for j in range(n):
        mono = QPoly.monomial(m, a_qshift + j * qstep)
        nxt = [QPoly.zero(m)] * (len(poly) + a_tshift)
        for d, c in enumerate(poly):
            if c:
                nxt[d] = nxt[d] + c
                nxt[d + a_tshift] = nxt[d + a_tshift] - c * mono
        poly = nxt
    degree = len(poly) - 1
    if L is None:
        L = degree
    return make_series(m, L, poly, exact=True)


def inv_pochhammer_trunc(n: int, qstep: int = 1, L: int = DEFAULT_TRUNC, m: int = 1) -> TruncSeries:
    """1/(t; q^qstep)_n = sum_k [n+k-1 choose k]_{q^qstep} t^k, truncated at t^L."""
    if n == 0:
        return series_one(m, L)
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = [q_binomial(n + k - 1, k, m).subs_power(qstep) for k in range(L + 1)]
    return make_series(m, L, coeffs)


# --------------------------------------------------------------------------
# TriPoly

Exps = Tuple[int, int, int]
_VARS = {"t": 0, "q": 1, "p": 2}


class TriPoly:
    """Sparse integer polynomial in (t, q, p) keyed by exponent triples.

    Instances are immutable; terms iterate in lexicographic exponent order.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Exps, int], Iterable[Tuple[Exps, int]], None] = None):
        acc: Dict[Exps, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, v in items:
                k = tuple(k)
                if len(k) != 3 or min(k) < 0:
                    raise ValueError(f"bad exponent triple {k}")
                acc[k] = acc.get(k, 0) + v
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k]}

    @classmethod
    def one(cls) -> "TriPoly":
        return cls({(0, 0, 0): 1})

    @classmethod
    def from_series(cls, f: TruncSeries) -> "TriPoly":
        """Lift an integer (m = 1) series into (t, q) with p-degree 0."""
        if f.m != 1:
            raise ValueError("only m = 1 series have integer coefficients")
        out = {}
        for a, c in enumerate(f.coeffs):
            for b, (x,) in enumerate(c.rows):
                if x:
                    out[(a, b, 0)] = x
        return cls(out)

    def items(self) -> Iterator[Tuple[Exps, int]]:
        return iter(self._terms.items())

    @property
    def terms(self) -> Tuple[Tuple[Exps, int], ...]:
        return tuple(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"TriPoly({render_tripoly(self)!r})"

    def __add__(self, other: "TriPoly") -> "TriPoly":
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return TriPoly(acc)

    def __neg__(self) -> "TriPoly":
        return TriPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "TriPoly") -> "TriPoly":
        return self + (-other)

    def __mul__(self, other) -> "TriPoly":
        if isinstance(other, int):
            return TriPoly({k: v * other for k, v in self._terms.items()})
        return self.mul_truncated(other, None)

    __rmul__ = __mul__

    def mul_truncated(self, other: "TriPoly", max_t: Optional[int]) -> "TriPoly":
        acc: Dict[Exps, int] = {}
        for (a1, b1, c1), v1 in self._terms.items():
            for (a2, b2, c2), v2 in other._terms.items():
                a = a1 + a2
                if max_t is not None and a > max_t:
                    continue
                k = (a, b1 + b2, c1 + c2)
                acc[k] = acc.get(k, 0) + v1 * v2
        return TriPoly(acc)

    def set_one(self, var: str) -> "TriPoly":
        """Specialize one of t, q, p to 1."""
        idx = _VARS[var]
        acc: Dict[Exps, int] = {}
        for k, v in self._terms.items():
            k2 = list(k)
            k2[idx] = 0
            k2 = tuple(k2)
            acc[k2] = acc.get(k2, 0) + v
        return TriPoly(acc)

    def t_coefficient(self, ell: int) -> "TriPoly":
        return TriPoly({(0, b, c): v for (a, b, c), v in self._terms.items() if a == ell})

    def degree(self, var: str) -> Optional[int]:
        idx = _VARS[var]
        if not self._terms:
            return None
        return max(k[idx] for k in self._terms)

    def mass(self) -> int:
        return sum(self._terms.values())


def tri_specialize(f: TriPoly, m: int) -> TruncSeries:
    """Substitute p = xi_m; the result is an exact polynomial in t."""
    d = totient(m)
    slots: Dict[int, Dict[int, List[int]]] = {}
    for (a, b, c), v in f.items():
        row = slots.setdefault(a, {}).setdefault(b, [0] * d)
        for u, x in enumerate(xi_power(m, c).coeffs):
            if x:
                row[u] += v * x
    order = max(slots) if slots else 0
    zero = (0,) * d
    coeffs = []
    for a in range(order + 1):
        qs = slots.get(a, {})
        top = max(qs) if qs else -1
        coeffs.append(QPoly.from_rows(m, [tuple(qs[b]) if b in qs else zero
                                          for b in range(top + 1)]))
    return make_series(m, order, coeffs, exact=True)


# --------------------------------------------------------------------------
# Canonical text rendering

def render_cyc(c: CycElem) -> str:
    if c.m <= 2:
        return str(c.coeffs[0])
    return "[" + ",".join(str(x) for x in c.coeffs) + "]"


def _monomial(exps: Sequence[Tuple[str, int]]) -> str:
    parts = []
    for name, e in exps:
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_terms(terms: Iterable[Tuple[Sequence[Tuple[str, int]], Union[int, CycElem]]]) -> str:
    """Join (monomial exponents, coefficient) pairs in the order given."""
    out = []
    for exps, c in terms:
        mono = _monomial(exps)
        if isinstance(c, CycElem) and c.m > 2:
            body = render_cyc(c) + (f"*{mono}" if mono else "")
            out.append(("+", body))
            continue
        v = c if isinstance(c, int) else c.coeffs[0]
        if not v:
            continue
        if not mono:
            body = str(abs(v))
        elif abs(v) == 1:
            body = mono
        else:
            body = f"{abs(v)}*{mono}"
        out.append(("-" if v < 0 else "+", body))
    if not out:
        return "0"
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def render_qpoly(f: QPoly) -> str:
    return render_terms(((("q", j),), c) for j, c in enumerate(f.coeffs) if c)


def render_series(f: TruncSeries) -> str:
    text = render_terms(
        ((("t", a), ("q", b)), c)
        for a, qp in enumerate(f.coeffs)
        for b, c in enumerate(qp.coeffs)
        if c
    )
    if not f.exact:
        tail = f"O(t^{f.order + 1})" if f.order + 1 > 1 else "O(t)"
        text = tail if text == "0" else f"{text} + {tail}"
    return text


def render_tripoly(f: TriPoly) -> str:
    return render_terms(((("t", a), ("q", b), ("p", c)), v) for (a, b, c), v in f.items())
