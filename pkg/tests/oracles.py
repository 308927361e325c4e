"""Brute-force oracles, independent of the implementations they check."""

from __future__ import annotations

import itertools
from fractions import Fraction

from mzvgraphs import Word


def shuffle_brute(u: str, v: str) -> dict[str, int]:
    """Count interleavings by choosing the positions of u among |u|+|v| slots."""
    counts: dict[str, int] = {}
    total = len(u) + len(v)
    for positions in itertools.combinations(range(total), len(u)):
        chosen = set(positions)
        shuffled = []
        ui = vi = 0
        for slot in range(total):
            if slot in chosen:
                shuffled.append(u[ui])
                ui += 1
            else:
                shuffled.append(v[vi])
                vi += 1
        key = "".join(shuffled)
        counts[key] = counts.get(key, 0) + 1
    return counts


def is_lyndon_by_rotations(w: str) -> bool:
    """A word is Lyndon iff it is strictly smaller than all proper rotations."""
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def lyndon_factorizations_brute(w: str) -> list[list[str]]:
    """All ways to split w into Lyndon factors in non-increasing order."""
    results: list[list[str]] = []

    def extend(rest: str, prefix: list[str]):
        if not rest:
            results.append(list(prefix))
            return
        for cut in range(1, len(rest) + 1):
            head = rest[:cut]
            if not is_lyndon_by_rotations(head):
                continue
            if prefix and not (prefix[-1] >= head):
                continue
            prefix.append(head)
            extend(rest[cut:], prefix)
            prefix.pop()

    extend(w, [])
    return results


def mzv_direct(parts: tuple[int, ...], terms: int) -> float:
    """Truncated nested summation of the defining series, innermost first."""
    prev = [1.0] * (terms + 1)
    for n in parts:
        cur = [0.0] * (terms + 1)
        acc = 0.0
        for k in range(1, terms + 1):
            acc += prev[k - 1] / float(k) ** n
            cur[k] = acc
        prev = cur
    return prev[terms]


def mzv_direct_tail_bound(parts: tuple[int, ...], terms: int) -> float:
    # Outer tail: sum_{k>K} (inner partial sums <= H_k^{d-1}) / k^{n_d}; crude
    # integral bound with the last harmonic factor frozen at 2 log K.
    import math

    d = len(parts)
    n = parts[-1]
    log_factor = (2.0 * math.log(terms)) ** (d - 1)
    return log_factor * terms ** (1 - n) / (n - 1)


def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    """B_n by the Akiyama-Tanigawa triangle (convention B_1 = -1/2)."""
    row = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
    return -row[0] if n == 1 else row[0]


def all_words(length: int) -> list[Word]:
    return [Word("".join(bits)) for bits in itertools.product("01", repeat=length)]
