"""Ordered perfect matchings of {1..2n} and their signs.

A matching is kept in its normal form: pairs (i_s, j_s) with i_s < j_s and
i_1 < i_2 < ... < i_n.  Flattening the pairs gives a permutation of {1..2n}
whose sign is the coefficient the matching contributes to the pfaffian.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .permutations import Permutation

HARD_CAP = 16


def matching_cap() -> int:
    """Enumeration cap on 2n; PF_CAP may lower it, never raise past 16."""
    raw = os.environ.get("PF_CAP")
    if raw is None:
        return HARD_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"PF_CAP must be an integer, got {raw!r}") from exc
    return min(cap, HARD_CAP)


def matching_count(two_n: int) -> int:
    """(2n-1)!! — the number of perfect matchings of {1..2n}."""
    count = 1
    for k in range(3, two_n, 2):
        count *= k
    return count if two_n >= 2 else 1


@dataclass(frozen=True)
class PfaffPermutation:
    """A perfect matching of {1..2n} in normal form."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        flat = [k for pair in self.pairs for k in pair]
        two_n = len(flat)
        if sorted(flat) != list(range(1, two_n + 1)):
            raise ValueError(f"pairs do not cover 1..{two_n} exactly once: {self.pairs!r}")
        firsts = [i for i, _ in self.pairs]
        if firsts != sorted(firsts):
            raise ValueError(f"first elements must increase: {self.pairs!r}")
        if any(i >= j for i, j in self.pairs):
            raise ValueError(f"each pair must be increasing: {self.pairs!r}")

    @property
    def size(self) -> int:
        return 2 * len(self.pairs)

    def flatten(self) -> tuple[int, ...]:
        return tuple(k for pair in self.pairs for k in pair)

    def to_json(self) -> list[list[int]]:
        return [list(pair) for pair in self.pairs]

    def __repr__(self) -> str:
        body = "".join(f"({i},{j})" for i, j in self.pairs)
        return f"PfaffPermutation[{body}]"


def matching_sign(m: PfaffPermutation) -> int:
    """Sign of the flattened matching, by a full inversion count.

    This is the slow, definitional route; the enumerator below tracks the
    same sign incrementally and is checked against this one in the tests.
    """
    return Permutation(m.flatten()).sign


def enumerate_pfaff(
    two_n: int, first_partner: int | None = None
) -> Iterator[tuple[PfaffPermutation, int]]:
    """All matchings of {1..2n} with signs, lexicographic on the flattening.

    Pairs the smallest free index with every larger free index in turn,
    which produces the normal form by construction.  Pairing the smallest
    free index with the k-th remaining candidate flips the sign by
    (-1)**(k-1), because exactly k-1 still-unmatched indices land strictly
    inside the new pair and each will cross it once or not at all.

    `first_partner` restricts the stream to matchings whose first pair is
    (1, first_partner), which splits the stream into 2n-1 disjoint blocks
    for parallel consumption.
    """
    cap = matching_cap()
    if two_n < 2 or two_n % 2 != 0:
        raise ValueError(f"two_n must be even and >= 2, got {two_n}")
    if two_n > cap:
        raise ValueError(f"two_n={two_n} exceeds the enumeration cap {cap}")
    if first_partner is not None and not 2 <= first_partner <= two_n:
        raise ValueError(f"first_partner must lie in 2..{two_n}")

    def rec(free: tuple[int, ...], acc: list[tuple[int, int]], sgn: int):
        if not free:
            yield PfaffPermutation(tuple(acc)), sgn
            return
        i = free[0]
        for k in range(1, len(free)):
            j = free[k]
            acc.append((i, j))
            rest = free[1:k] + free[k + 1 :]
            yield from rec(rest, acc, sgn if k % 2 == 1 else -sgn)
            acc.pop()

    full = tuple(range(1, two_n + 1))
    if first_partner is None:
        yield from rec(full, [], 1)
    else:
        k = first_partner - 1
        rest = full[1:k] + full[k + 1 :]
        yield from rec(rest, [(1, first_partner)], 1 if k % 2 == 1 else -1)
