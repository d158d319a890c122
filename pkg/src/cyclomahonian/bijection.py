"""Correspondence between words of length n over the nonnegative integers
and pairs (permutation, partition with largest part at most n).

The forward map sorts the word into weakly decreasing order, reads off the
permutation of positions, subtracts the descent-count vector and conjugates
what is left.  The inverse adds the vector back and un-sorts.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .errors import BijectionError
from .permstat import coinv, des, inv, maj, maxw, sumt

Word = Tuple[int, ...]
Permutation = Tuple[int, ...]
Partition = Tuple[int, ...]


@dataclass(frozen=True)
class BijectionTrace:
    w: Word
    wbar: Word
    sigma: Permutation
    z: Tuple[int, ...]
    mu: Tuple[int, ...]
    lam: Partition


def stable_desc_sort(w: Sequence[int]) -> Tuple[Word, Permutation]:
    """Sort letters into weakly decreasing order, ties kept in original order.

    Returns the sorted word and the 1-based original positions in sorted order.
    """
    order = sorted(range(len(w)), key=lambda j: (-w[j], j))
    return tuple(w[j] for j in order), tuple(j + 1 for j in order)


def swap_process(w: Sequence[int]) -> Iterator[Tuple[Word, Permutation]]:
    """Literal adjacent-swap version of :func:`stable_desc_sort`.

    Yields every intermediate (top word, bottom word), starting with
    (w, identity); a pair of columns is swapped when the left letter is
    strictly smaller than the right one.
    """
    top = list(w)
    bottom = list(range(1, len(w) + 1))
    yield tuple(top), tuple(bottom)
    swapped = True
    while swapped:
        swapped = False
        for j in range(len(top) - 1):
            if top[j] < top[j + 1]:
                top[j], top[j + 1] = top[j + 1], top[j]
                bottom[j], bottom[j + 1] = bottom[j + 1], bottom[j]
                swapped = True
                yield tuple(top), tuple(bottom)


def z_vector(sigma: Sequence[int]) -> Tuple[int, ...]:
    """z_j = number of descents of sigma at positions >= j (z_n = 0)."""
    n = len(sigma)
    z = [0] * n
    for j in range(n - 2, -1, -1):
        z[j] = z[j + 1] + (1 if sigma[j] > sigma[j + 1] else 0)
    return tuple(z)


def conjugate(mu: Sequence[int]) -> Partition:
    """Conjugate of a weakly decreasing sequence; zero parts are ignored."""
    parts = [x for x in mu if x]
    if any(parts[j] < parts[j + 1] for j in range(len(parts) - 1)):
        raise ValueError(f"{tuple(mu)} is not weakly decreasing")
    if parts and parts[-1] < 0:
        raise ValueError("parts must be nonnegative")
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x >= k) for k in range(1, parts[0] + 1))


def trace(w: Sequence[int]) -> BijectionTrace:
    w = tuple(w)
    if any(x < 0 for x in w):
        raise ValueError("letters must be nonnegative")
    wbar, sigma = stable_desc_sort(w)
    z = z_vector(sigma)
    mu = tuple(a - b for a, b in zip(wbar, z))
    if any(x < 0 for x in mu):
        raise BijectionError(f"negative entry in mu = {mu} for w = {w}")
    if any(mu[j] < mu[j + 1] for j in range(len(mu) - 1)):
        raise BijectionError(f"mu = {mu} is not weakly decreasing for w = {w}")
    return BijectionTrace(w, wbar, sigma, z, mu, conjugate(mu))


def word_to_pair(w: Sequence[int]) -> Tuple[Permutation, Partition]:
    t = trace(w)
    return t.sigma, t.lam


def pair_to_word(sigma: Sequence[int], lam: Sequence[int]) -> Word:
    n = len(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{tuple(sigma)} is not a permutation of 1..{n}")
    lam = tuple(lam)
    if lam and lam[0] > n:
        raise ValueError(f"largest part {lam[0]} exceeds n = {n}")
    mu = list(conjugate(lam))
    mu += [0] * (n - len(mu))
    z = z_vector(sigma)
    wbar = [a + b for a, b in zip(mu, z)]
    for j in range(n - 1):
        if wbar[j] < wbar[j + 1] or (wbar[j] == wbar[j + 1] and sigma[j] > sigma[j + 1]):
            raise BijectionError(f"un-sorting is ambiguous at position {j + 1}")
    w: List[int] = [0] * n
    for j, s in enumerate(sigma):
        w[s - 1] = wbar[j]
    return tuple(w)


def check_properties(w: Sequence[int]) -> Tuple[bool, bool, bool]:
    """Evaluate the max, sum and coinversion transfer laws for one word."""
    sigma, lam = word_to_pair(w)
    p1 = maxw(w) == des(sigma) + len(lam)
    p2 = sumt(w) == maj(sigma) + sum(lam)
    p3 = coinv(w) == inv(sigma)
    return p1, p2, p3


def swap_invariant_holds(w: Sequence[int]) -> bool:
    """coinv(top) + inv(bottom) is constant along :func:`swap_process`."""
    values = {coinv(top) + inv(bottom) for top, bottom in swap_process(w)}
    return len(values) == 1
