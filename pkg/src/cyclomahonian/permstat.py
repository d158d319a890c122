"""Permutation and word statistics, the brute-force trivariate generating
polynomial over S_n, and the series it is compared against."""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterator, Sequence, Tuple

from .errors import ResourceLimitError
from .polyring import (
    DEFAULT_TRUNC,
    TriPoly,
    TruncSeries,
    inv_pochhammer_trunc,
    make_series,
    q_int,
    q_multinomial,
    series_mul,
    tri_specialize,
)

ENUMERATION_CAP = 9
HARD_CAP = 10
COMPOSITION_CAP = 200_000


def descents(sigma: Sequence[int]) -> Tuple[int, ...]:
    """1-based positions i with sigma_i > sigma_{i+1}."""
    return tuple(i + 1 for i in range(len(sigma) - 1) if sigma[i] > sigma[i + 1])


def des(sigma: Sequence[int]) -> int:
    return len(descents(sigma))


def maj(sigma: Sequence[int]) -> int:
    return sum(descents(sigma))


def inv(sigma: Sequence[int]) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def coinv(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] < w[j])


def sumt(w: Sequence[int]) -> int:
    return sum(w)


def maxw(w: Sequence[int]) -> int:
    return max(w, default=0)


def is_permutation(sigma: Sequence[int]) -> bool:
    return sorted(sigma) == list(range(1, len(sigma) + 1))


def _stat_counts(n: int, first: int) -> Counter:
    """(des, maj, inv) tallies over the permutations of 1..n starting with ``first``."""
    rest = [x for x in range(1, n + 1) if x != first]
    counts: Counter = Counter()
    for tail in permutations(rest):
        sigma = (first,) + tail
        d = mj = iv = 0
        for i in range(n - 1):
            a = sigma[i]
            if a > sigma[i + 1]:
                d += 1
                mj += i + 1
            for b in sigma[i + 1:]:
                if a > b:
                    iv += 1
        counts[(d, mj, iv)] += 1
    return counts


def _check_cap(n: int, allow_n10: bool) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = HARD_CAP if allow_n10 else ENUMERATION_CAP
    if n > limit:
        hint = "" if allow_n10 or n > HARD_CAP else " (n = 10 needs allow_n10)"
        raise ResourceLimitError(f"enumerating S_{n} exceeds the cap n <= {limit}{hint}")


@lru_cache(maxsize=None)
def _euler_mahonian(n: int, jobs: int) -> TriPoly:
    if n == 0:
        return TriPoly.one()
    firsts = range(1, n + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            blocks = list(pool.map(_stat_counts, [n] * n, firsts))
    else:
        blocks = [_stat_counts(n, f) for f in firsts]
    total: Counter = Counter()
    for block in blocks:
        total.update(block)
    return TriPoly(total)


def euler_mahonian(n: int, *, jobs: int = 1, allow_n10: bool = False) -> TriPoly:
    """A_n(t, q, p): sum over S_n of t^des q^maj p^inv, by enumeration.

    Work is split by first letter across ``jobs`` processes; the merged
    polynomial does not depend on the worker count.
    """
    _check_cap(n, allow_n10)
    return _euler_mahonian(n, 1 if n < 7 else max(1, jobs))


def carlitz_rhs(n: int, qstep: int = 1, L: int = DEFAULT_TRUNC, m: int = 1) -> TruncSeries:
    """sum_l t^l ([l+1]_{q^qstep})^n, truncated at t^L."""
    return make_series(m, L, [q_int(ell + 1, qstep, m) ** n for ell in range(L + 1)])


def c_stream(i: int, m: int, L: int = DEFAULT_TRUNC) -> TruncSeries:
    """Coefficients C_i(l; q, xi_m) of A_i(t, q, xi_m) / (t; q)_{i+1}."""
    if not 0 <= i <= m - 1:
        raise ValueError(f"need 0 <= i <= m - 1, got i={i}, m={m}")
    return series_mul(tri_specialize(euler_mahonian(i), m), inv_pochhammer_trunc(i + 1, 1, L, m))


def compositions(n: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of n into ``parts`` nonnegative summands, lexicographically."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def util_rhs(n: int, ell: int, cap: int = COMPOSITION_CAP) -> TriPoly:
    """sum over n_0 + ... + n_ell = n of q^(n_1 + 2 n_2 + ...) [n; n_0..n_ell]_p."""
    if n < 0 or ell < 0:
        raise ValueError("n and ell must be nonnegative")
    count = comb(n + ell, ell)
    if count > cap:
        raise ResourceLimitError(f"{count} compositions exceed the cap {cap}")
    acc: Counter = Counter()
    for parts in compositions(n, ell + 1):
        qexp = sum(j * nj for j, nj in enumerate(parts))
        for pexp, c in enumerate(q_multinomial(parts).int_coeffs()):
            if c:
                acc[(0, qexp, pexp)] += c
    return TriPoly(acc)

