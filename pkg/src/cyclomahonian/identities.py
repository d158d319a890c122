"""Verification suites: each builds both sides of one identity with exact
arithmetic and compares them coefficient by coefficient.

Sides are normalized to :class:`Side`, a sparse map from (t-degree,
q-degree) to a coefficient that is either a :class:`CycElem` or, when ``p``
stays symbolic, an integer polynomial in ``p``.  Series identities are
compared up to a truncation order ``L``; polynomial identities exactly.

A few printed formulas contain typos.  Their verbatim versions are still
checked, tagged with ``erratum = 1`` in the parameters; those reports are
expected to fail and the companion ``erratum = 0`` report carries the
corrected statement.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .cyclotomic import CycElem, IntPoly, specialize_p
from .permstat import c_stream, carlitz_rhs, euler_mahonian, util_rhs
from .polyring import (
    DEFAULT_TRUNC,
    QPoly,
    TriPoly,
    TruncSeries,
    hadamard,
    inv_pochhammer_trunc,
    make_series,
    pochhammer_t,
    poly_div_exact,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
    q_pochhammer,
    render_cyc,
    render_terms,
    series_eval_q1,
    series_eval_t1,
    series_mul,
    series_pow,
    series_qsubs,
    series_scale,
    tpoly_div_exact,
    tri_specialize,
    with_order,
)

SUITES = (
    "main", "carlitz", "util", "case_i0", "case_i1", "case_i2", "case_I",
    "missing_odd", "df_even", "df_odd", "gessel_simion", "wachs", "adin_gr",
    "q1_triple", "m4_eulerian", "m4_mahonian", "qlucas", "lemma_agr",
)

DEFAULT_N_MAX = 8
DEFAULT_M_SET = (1, 2, 3, 4, 5, 6)
UTIL_N_MAX = 6
UTIL_ELL_MAX = 4
QLUCAS_MAX_LEN = 3

Coeff = Union[CycElem, IntPoly]
Key = Tuple[int, int]


# --------------------------------------------------------------------------
# Sides and reports

@dataclass(frozen=True)
class Side:
    """Nonzero coefficients keyed by (t-degree, q-degree).

    ``order`` is the truncation order in t, or None for an exact polynomial.
    """

    terms: Tuple[Tuple[Key, Coeff], ...]
    order: Optional[int] = None
    symbolic_p: bool = False

    def as_dict(self) -> Dict[Key, Coeff]:
        return dict(self.terms)

    def render(self) -> str:
        if self.symbolic_p:
            text = render_terms(
                ((("t", a), ("q", b), ("p", c)), v)
                for (a, b), poly in self.terms
                for c, v in enumerate(poly)
                if v
            )
        else:
            text = render_terms(((("t", a), ("q", b)), c) for (a, b), c in self.terms)
        if self.order is not None:
            tail = f"O(t^{self.order + 1})" if self.order else "O(t)"
            text = tail if text == "0" else f"{text} + {tail}"
        return text


def _is_zero(c: Coeff) -> bool:
    return c.is_zero() if isinstance(c, CycElem) else not any(c)


def _make_side(items: Iterable[Tuple[Key, Coeff]], order=None, symbolic_p=False) -> Side:
    terms = sorted((k, c) for k, c in items if not _is_zero(c))
    return Side(tuple(terms), order, symbolic_p)


def series_side(f: TruncSeries, order: Optional[int] = None) -> Side:
    """Side of a series; with ``order`` given it is re-truncated there."""
    if order is not None:
        f = with_order(f, order)
    elif not f.exact:
        order = f.order
    return _make_side(
        (((a, b), c) for a, qp in enumerate(f.coeffs) for b, c in enumerate(qp.coeffs)),
        order,
    )


def qpoly_side(f: QPoly) -> Side:
    return _make_side(((0, b), c) for b, c in enumerate(f.coeffs))


def scalar_side(c: CycElem) -> Side:
    return _make_side([((0, 0), c)])


def tripoly_side(f: TriPoly) -> Side:
    """Group terms of a TriPoly by (t, q) with coefficients polynomial in p."""
    acc: Dict[Key, List[int]] = {}
    for (a, b, c), v in f.items():
        row = acc.setdefault((a, b), [])
        row.extend([0] * (c + 1 - len(row)))
        row[c] += v
    return _make_side(((k, tuple(v)) for k, v in acc.items()), symbolic_p=True)


def render_coeff(c: Optional[Coeff]) -> str:
    if c is None:
        return "0"
    if isinstance(c, CycElem):
        return render_cyc(c)
    return render_terms(((("p", e),), v) for e, v in enumerate(c) if v)


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    params: Mapping[str, int]
    status: str
    lhs: str
    rhs: str
    first_mismatch: Optional[Tuple[int, int, str, str]] = None

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "pass") != (self.first_mismatch is None):
            raise ValueError("status must be pass exactly when there is no mismatch")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def expected_status(self) -> str:
        return "fail" if self.params.get("erratum") else "pass"

    @property
    def ok(self) -> bool:
        """The outcome matches expectation (verbatim errata are expected to fail)."""
        return self.status == self.expected_status

    def sort_key(self):
        return (self.suite, tuple(sorted(self.params.items())))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "first_mismatch": list(self.first_mismatch) if self.first_mismatch else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "VerificationReport":
        d = json.loads(line)
        fm = d["first_mismatch"]
        return cls(d["suite"], dict(d["params"]), d["status"], d["lhs"], d["rhs"],
                   tuple(fm) if fm is not None else None)


def compare(suite: str, params: Mapping[str, int], lhs: Side, rhs: Side) -> VerificationReport:
    if lhs.order != rhs.order:
        raise ValueError(f"sides truncated differently: {lhs.order} vs {rhs.order}")
    a, b = lhs.as_dict(), rhs.as_dict()
    mismatch = None
    for key in sorted(set(a) | set(b)):
        ca, cb = a.get(key), b.get(key)
        if ca != cb:
            mismatch = (key[0], key[1], render_coeff(ca), render_coeff(cb))
            break
    return VerificationReport(
        suite, dict(sorted(params.items())), "fail" if mismatch else "pass",
        lhs.render(), rhs.render(), mismatch,
    )


def perturb(side: Side, key: Key) -> Side:
    """Add 1 to the constant part of the coefficient at ``key``."""
    d = side.as_dict()
    c = d.get(key)
    if side.symbolic_p:
        poly = list(c) if c is not None else [0]
        poly[0] += 1
        d[key] = tuple(poly)
    else:
        if c is None:
            sample = side.terms[0][1] if side.terms else None
            m = sample.m if sample is not None else 1
            c = CycElem.zero(m)
        d[key] = c + 1
    return _make_side(d.items(), side.order, side.symbolic_p)


# --------------------------------------------------------------------------
# Shared building blocks

@lru_cache(maxsize=None)
def _A(n: int, m: int) -> TruncSeries:
    """A_n(t, q, xi_m), exact in t."""
    return tri_specialize(euler_mahonian(n), m)


@lru_cache(maxsize=None)
def _A_p1(n: int, m: int, qstep: int = 1) -> TruncSeries:
    """A_n(t, q^qstep) (p = 1), embedded in the Z[xi_m] ring."""
    return series_qsubs(tri_specialize(euler_mahonian(n).set_one("p"), m), qstep)


@lru_cache(maxsize=None)
def _lhs_series(n: int, m: int, L: int) -> TruncSeries:
    """A_n(t, q, xi_m) / (t; q)_{n+1} up to t^L."""
    return series_mul(_A(n, m), inv_pochhammer_trunc(n + 1, 1, L, m))


def _one_minus_t_pow(m: int, e: int) -> TruncSeries:
    return series_pow(pochhammer_t(1, 0, 1, 1, None, m), e)


def _q1(f: TruncSeries) -> TruncSeries:
    return series_eval_q1(f)


def _t1(f: TruncSeries) -> QPoly:
    return series_eval_t1(f)


def _one_minus_q_pow(m: int, step: int, e: int = 1) -> QPoly:
    return (QPoly.one(m) - QPoly.monomial(m, step)) ** e


def _split(n: int, m: int) -> Tuple[int, int]:
    return divmod(n, m)


# --------------------------------------------------------------------------
# Per-suite sides.  Each returns (lhs, rhs).

def _sides_main(p):
    n, m, L = p["n"], p["m"], p["L"]
    k, i = _split(n, m)
    lhs = _lhs_series(n, m, L)
    rhs = hadamard(c_stream(i, m, L), carlitz_rhs(k, m, L, m))
    return series_side(lhs), series_side(rhs)


def _sides_carlitz(p):
    n, L = p["n"], p["L"]
    return series_side(_lhs_series(n, 1, L)), series_side(carlitz_rhs(n, 1, L, 1))


def _sides_util(p):
    n, ell = p["n"], p["ell"]
    inv = TriPoly.from_series(inv_pochhammer_trunc(n + 1, 1, ell, 1))
    prod = euler_mahonian(n).mul_truncated(inv, ell)
    lhs = TriPoly({k: v for k, v in prod.items() if k[0] == ell})
    rhs = TriPoly({(ell, b, c): v for (_, b, c), v in util_rhs(n, ell).items()})
    return tripoly_side(lhs), tripoly_side(rhs)


def _case_i0(m: int, k: int):
    num = pochhammer_t(1, 0, 1, m * k + 1, None, m)
    den = pochhammer_t(1, 0, m, k + 1, None, m)
    rhs = series_mul(tpoly_div_exact(num, den), _A_p1(k, m, m))
    return series_side(_A(m * k, m)), series_side(rhs)


def _sides_case_i0(p):
    return _case_i0(p["m"], p["k"])


def _sides_case_I(p):
    return _case_i0(4, p["k"])


def _sides_wachs(p):
    k = p["k"]
    rhs = series_mul(pochhammer_t(1, 1, 2, k, None, 2), _A_p1(k, 2, 2))
    return series_side(_A(2 * k, 2)), series_side(rhs)


def _case_i1(m: int, k: int, L: int):
    n = m * k + 1
    stream = make_series(m, L, [q_int(ell + 1, 1, m) * q_int(ell + 1, m, m) ** k
                                for ell in range(L + 1)])
    rhs = series_mul(pochhammer_t(1, 0, 1, n + 1, None, m), stream)
    return series_side(_A(n, m), L), series_side(rhs)


def _sides_case_i1(p):
    return _case_i1(p["m"], p["k"], p["L"])


def _sides_missing_odd(p):
    return _case_i1(2, p["k"], p["L"])


def c2_coefficient(ell: int, m: int) -> QPoly:
    """((1 - q^(l+2)) + q xi (1 - q^l)) [l+1]_q / (1 - q^2), by exact division."""
    xi = CycElem.xi(m)
    num = (QPoly.one(m) - QPoly.monomial(m, ell + 2)) \
        + (QPoly.one(m) - QPoly.monomial(m, ell)).shift(1) * xi
    return poly_div_exact(num * q_int(ell + 1, 1, m), _one_minus_q_pow(m, 2))


def _sides_case_i2(p):
    m, k, L = p["m"], p["k"], p["L"]
    n = m * k + 2
    rhs = make_series(m, L, [c2_coefficient(ell, m) * q_int(ell + 1, m, m) ** k
                             for ell in range(L + 1)])
    return series_side(_lhs_series(n, m, L)), series_side(rhs)


def _sides_df_even(p):
    k = p["k"]
    rhs = series_mul(_one_minus_t_pow(2, k), _q1(_A_p1(k, 2)))
    return series_side(_q1(_A(2 * k, 2))), series_side(rhs)


def _sides_df_odd(p):
    k = p["k"]
    rhs = series_mul(_one_minus_t_pow(2, k), _q1(_A_p1(k + 1, 2)))
    return series_side(_q1(_A(2 * k + 1, 2))), series_side(rhs)


def _sides_gessel_simion(p):
    n = p["n"]
    h = n // 2
    one_plus_q = QPoly.from_ints(2, [1, 1])
    lhs = one_plus_q ** h * _t1(_A(n, 2))
    rhs = _one_minus_q_pow(2, 1, h) * q_factorial(n, 2)
    return qpoly_side(lhs), qpoly_side(rhs)


def _sides_adin_gr(p):
    n, m = p["n"], p["m"]
    k, i = _split(n, m)
    lhs = q_pochhammer(i, m) * _one_minus_q_pow(m, m, k) * _t1(_A(n, m))
    rhs = q_pochhammer(n, m) * _t1(_A(i, m))
    return qpoly_side(lhs), qpoly_side(rhs)


def _eulerian_triple(m: int, k: int, line: int, erratum: int, L: Optional[int]):
    xi = CycElem.xi(m)
    if line == 0:
        lhs = _q1(_A(m * k, m))
        rhs = series_mul(_one_minus_t_pow(m, (m - 1) * k), _q1(_A_p1(k, m)))
        return series_side(lhs), series_side(rhs)
    if line == 1:
        lhs = _q1(_A(m * k + 1, m))
        rhs = series_mul(_one_minus_t_pow(m, (m - 1) * k), _q1(_A_p1(k + 1, m)))
        return series_side(lhs), series_side(rhs)
    lhs = series_scale(_q1(_A(m * k + 2, m)), 2)
    if erratum:
        # prefactor exactly as printed, (k + 2 + k xi) outside the sum
        rhs = series_scale(
            series_mul(_one_minus_t_pow(m, m * k - k + 1), _q1(_A_p1(k + 1, m))),
            xi * k + (k + 2),
        )
        return series_side(lhs), series_side(rhs)
    # prefactor depends on the summation index: ((l + 2) + l xi) (l + 1)^(k + 1)
    stream = make_series(m, L, [QPoly.constant(m, (xi * ell + (ell + 2)) * (ell + 1) ** (k + 1))
                                for ell in range(L + 1)])
    rhs = series_mul(_one_minus_t_pow(m, m * k + 3), stream)
    return series_side(lhs, L), series_side(rhs)


def _sides_q1_triple(p):
    return _eulerian_triple(p["m"], p["k"], p["line"], p.get("erratum", 0), p.get("L"))


def _sides_m4_eulerian(p):
    return _eulerian_triple(4, p["k"], p["line"], p.get("erratum", 0), p.get("L"))


def _sides_m4_mahonian(p):
    k, line, erratum = p["k"], p["line"], p.get("erratum", 0)
    m = 4
    n = 4 * k + line
    a = _t1(_A(n, m))
    one_minus_q4k = _one_minus_q_pow(m, 4, k)
    one_minus_q = _one_minus_q_pow(m, 1)
    if line == 0:
        return qpoly_side(one_minus_q4k * a), qpoly_side(_one_minus_q_pow(m, 1, n) * q_factorial(n, m))
    if line == 1:
        lhs = one_minus_q * one_minus_q4k * a
        return qpoly_side(lhs), qpoly_side(_one_minus_q_pow(m, 1, n) * q_factorial(n, m))
    if line == 2:
        if erratum:
            # verbatim: (1 + q I) (1 - q)^(4k+2) [4k+3]_q! over (1-q)(1-q^2)(1-q^4)^k
            lhs = one_minus_q * _one_minus_q_pow(m, 2) * one_minus_q4k * a
            one_plus_qI = QPoly.one(m) + QPoly.monomial(m, 1, CycElem.xi(m))
            rhs = one_plus_qI * _one_minus_q_pow(m, 1, n) * q_factorial(n + 1, m)
            return qpoly_side(lhs), qpoly_side(rhs)
        lhs = q_pochhammer(2, m) * one_minus_q4k * a
        rhs = q_pochhammer(n, m) * _t1(_A(2, m))
        return qpoly_side(lhs), qpoly_side(rhs)
    xi = CycElem.xi(m)
    lhs = q_pochhammer(3, m) * one_minus_q4k * a
    pref = QPoly.from_ints(m, [1, -1, -1]) + QPoly.from_ints(m, [0, 1, 1, -1]) * xi
    rhs = pref * _one_minus_q_pow(m, 1, n) * q_factorial(n, m)
    return qpoly_side(lhs), qpoly_side(rhs)


def _multinomial(parts: Sequence[int]) -> int:
    out = factorial(sum(parts))
    for k in parts:
        out //= factorial(k)
    return out


def _at_xi(f: QPoly, m: int) -> CycElem:
    return specialize_p(f.int_coeffs(), m)


def qlucas_parts(p: Mapping[str, int]) -> Tuple[int, ...]:
    return tuple(p[f"n{j}"] for j in range(p["len"]))


def _sides_qlucas(p):
    m = p["m"]
    parts = qlucas_parts(p)
    ks = [x // m for x in parts]
    rs = [x % m for x in parts]
    small = _at_xi(q_multinomial(rs), m)
    if p.get("vanish"):
        return scalar_side(small), scalar_side(CycElem.zero(m))
    return scalar_side(_at_xi(q_multinomial(parts), m)), scalar_side(small * _multinomial(ks))


def _sides_lemma_agr(p):
    m = p["m"]
    if p["part"] == 3:
        return scalar_side(_at_xi(q_pochhammer(m - 1), m)), scalar_side(CycElem.integer(m, m))
    i, j = p["i"], p["j"]
    return scalar_side(_at_xi(q_binomial(i + j, i), m)), scalar_side(CycElem.zero(m))


_BUILDERS = {
    "main": _sides_main,
    "carlitz": _sides_carlitz,
    "util": _sides_util,
    "case_i0": _sides_case_i0,
    "case_i1": _sides_case_i1,
    "case_i2": _sides_case_i2,
    "case_I": _sides_case_I,
    "missing_odd": _sides_missing_odd,
    "df_even": _sides_df_even,
    "df_odd": _sides_df_odd,
    "gessel_simion": _sides_gessel_simion,
    "wachs": _sides_wachs,
    "adin_gr": _sides_adin_gr,
    "q1_triple": _sides_q1_triple,
    "m4_eulerian": _sides_m4_eulerian,
    "m4_mahonian": _sides_m4_mahonian,
    "qlucas": _sides_qlucas,
    "lemma_agr": _sides_lemma_agr,
}


def _validate(suite: str, p: Mapping[str, int]) -> None:
    """Reject parameters outside a suite's stated range."""
    def need(cond, msg):
        if not cond:
            raise ValueError(f"{suite}: {msg} (params {dict(p)})")

    if any(v < 0 for v in p.values()):
        need(False, "parameters must be nonnegative")
    if "m" in p:
        need(p["m"] >= 1, "m must be positive")
    if suite == "case_i1":
        need(p["m"] >= 2, "i = 1 needs m >= 2")
    if suite == "case_i2":
        need(p["m"] >= 3, "i = 2 needs m >= 3")
    if suite in ("q1_triple", "m4_eulerian"):
        m = p.get("m", 4)
        need(p["line"] in (0, 1, 2) and p["line"] < m, "line must be 0..min(2, m-1)")
        need(p["line"] == 2 or not p.get("erratum"), "only line 2 has a printed erratum")
        need(p["line"] != 2 or p.get("erratum") or "L" in p, "corrected line 2 needs L")
    if suite == "m4_mahonian":
        need(p["line"] in (0, 1, 2, 3), "line must be 0..3")
        need(p["line"] == 2 or not p.get("erratum"), "only line 2 has a printed erratum")
    if suite == "qlucas":
        need(1 <= p["len"] <= QLUCAS_MAX_LEN, f"tuple length must be 1..{QLUCAS_MAX_LEN}")
        if p.get("vanish"):
            m = p["m"]
            need(sum(x % m for x in qlucas_parts(p)) >= m, "vanishing clause needs residues >= m")
    if suite == "lemma_agr":
        need(p["part"] in (1, 3), "part must be 1 or 3")
        if p["part"] == 1:
            m, i, j = p["m"], p["i"], p["j"]
            need(i < m and j < m and i + j >= m, "part 1 needs i, j < m <= i + j")


def build_sides(suite: str, params: Mapping[str, int]) -> Tuple[Side, Side]:
    if suite not in _BUILDERS:
        raise ValueError(f"unknown suite {suite!r}")
    _validate(suite, params)
    return _BUILDERS[suite](params)


def run_case(suite: str, params: Mapping[str, int]) -> VerificationReport:
    lhs, rhs = build_sides(suite, params)
    return compare(suite, params, lhs, rhs)


# --------------------------------------------------------------------------
# Public per-identity entry points

def verify_main(n: int, m: int, L: int = DEFAULT_TRUNC) -> VerificationReport:
    k, i = _split(n, m)
    return run_case("main", {"n": n, "m": m, "k": k, "i": i, "L": L})


def verify_carlitz(n: int, L: int = DEFAULT_TRUNC) -> VerificationReport:
    return run_case("carlitz", {"n": n, "L": L})


def verify_util(n: int, ell: int) -> VerificationReport:
    return run_case("util", {"n": n, "ell": ell})


def verify_specialization(suite: str, params: Mapping[str, int]) -> VerificationReport:
    return run_case(suite, params)


# --------------------------------------------------------------------------
# Parameter grids and the matrix runner

def suite_params(suite: str, n_max: int = DEFAULT_N_MAX, m_set: Sequence[int] = DEFAULT_M_SET,
                 L: int = DEFAULT_TRUNC) -> List[Dict[str, int]]:
    m_set = sorted(set(m_set))
    out: List[Dict[str, int]] = []
    if suite == "main":
        for n, m in product(range(n_max + 1), m_set):
            k, i = _split(n, m)
            out.append({"n": n, "m": m, "k": k, "i": i, "L": L})
    elif suite == "carlitz":
        out = [{"n": n, "L": L} for n in range(n_max + 1)]
    elif suite == "util":
        out = [{"n": n, "ell": ell}
               for n in range(min(n_max, UTIL_N_MAX) + 1) for ell in range(UTIL_ELL_MAX + 1)]
    elif suite == "case_i0":
        out = [{"m": m, "k": k} for m in m_set for k in range(n_max // m + 1)]
    elif suite == "case_I":
        out = [{"k": k} for k in range(n_max // 4 + 1)]
    elif suite == "wachs":
        out = [{"k": k} for k in range(n_max // 2 + 1)]
    elif suite == "case_i1":
        out = [{"m": m, "k": k, "L": L} for m in m_set if m >= 2
               for k in range((n_max - 1) // m + 1) if n_max >= 1]
    elif suite == "missing_odd":
        out = [{"k": k, "L": L} for k in range((n_max - 1) // 2 + 1) if n_max >= 1]
    elif suite == "case_i2":
        out = [{"m": m, "k": k, "L": L} for m in m_set if m >= 3
               for k in range((n_max - 2) // m + 1) if n_max >= 2]
    elif suite == "df_even":
        out = [{"k": k} for k in range(n_max // 2 + 1)]
    elif suite == "df_odd":
        out = [{"k": k} for k in range((n_max - 1) // 2 + 1) if n_max >= 1]
    elif suite == "gessel_simion":
        out = [{"n": n} for n in range(n_max + 1)]
    elif suite == "adin_gr":
        for n, m in product(range(n_max + 1), m_set):
            k, i = _split(n, m)
            out.append({"n": n, "m": m, "k": k, "i": i})
    elif suite in ("q1_triple", "m4_eulerian"):
        ms = m_set if suite == "q1_triple" else [4]
        for m in ms:
            for line in range(min(3, m)):
                for k in range(0, n_max + 1):
                    if m * k + line > n_max:
                        break
                    base = {"k": k, "line": line}
                    if suite == "q1_triple":
                        base["m"] = m
                    if line == 2:
                        out.append({**base, "erratum": 1})
                        out.append({**base, "erratum": 0, "L": L})
                    else:
                        out.append(base)
    elif suite == "m4_mahonian":
        for line in range(4):
            for k in range(n_max + 1):
                if 4 * k + line > n_max:
                    break
                if line == 2:
                    out.append({"k": k, "line": 2, "erratum": 1})
                    out.append({"k": k, "line": 2, "erratum": 0})
                else:
                    out.append({"k": k, "line": line})
    elif suite == "qlucas":
        for m in m_set:
            for length in range(1, QLUCAS_MAX_LEN + 1):
                for parts in product(range(n_max + 1), repeat=length):
                    if sum(parts) > n_max:
                        continue
                    p = {"m": m, "len": length, **{f"n{j}": x for j, x in enumerate(parts)}}
                    out.append(p)
                    if sum(x % m for x in parts) >= m:
                        out.append({**p, "vanish": 1})
    elif suite == "lemma_agr":
        for m in m_set:
            out.append({"m": m, "part": 3})
            for i, j in product(range(m), repeat=2):
                if i + j >= m:
                    out.append({"m": m, "part": 1, "i": i, "j": j})
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return out


def _run_task(task: Tuple[str, Dict[str, int]]) -> VerificationReport:
    return run_case(*task)


def run_matrix(suites: Iterable[str], n_max: int = DEFAULT_N_MAX,
               m_set: Sequence[int] = DEFAULT_M_SET, L: int = DEFAULT_TRUNC,
               jobs: int = 1) -> List[VerificationReport]:
    """Run every suite over its parameter grid; reports sorted by (suite, params)."""
    suites = list(suites)
    for s in suites:
        if s not in _BUILDERS:
            raise ValueError(f"unknown suite {s!r}")
    tasks = [(s, p) for s in sorted(set(suites)) for p in suite_params(s, n_max, m_set, L)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_task, tasks, chunksize=8))
    else:
        reports = [_run_task(t) for t in tasks]
    return sorted(reports, key=VerificationReport.sort_key)


def all_ok(reports: Iterable[VerificationReport]) -> bool:
    return all(r.ok for r in reports)
