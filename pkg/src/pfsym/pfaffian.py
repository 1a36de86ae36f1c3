"""Triangular arrays and their pfaffians.

A triangular array stores only the entries above the diagonal; the mode
says how lookups below the diagonal are completed (symmetrically, skewly,
or not at all).  The pfaffian itself never needs the completion — it is
the alternating sum over perfect matchings of products of upper entries —
but the hook expansions and the determinant do.

Scalars are pluggable: exact ints/Fractions, floats, or Poly values all
work, and the arithmetic never leaves the scalar domain.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

from . import backend
from .matchings import enumerate_pfaff, matching_cap
from .polyring import Poly, gen

SYMMETRIC = "symmetric"
SKEW = "skew"
PLAIN = "plain"
MODES = (SYMMETRIC, SKEW, PLAIN)


def heaviside(s: int) -> int:
    """1 for positive arguments, 0 otherwise."""
    return 1 if s > 0 else 0


def upper_pairs(size: int):
    for i in range(1, size + 1):
        for j in range(i + 1, size + 1):
            yield i, j


class TriangularArray:
    """Upper-triangular data (a_{i,j})_{1<=i<j<=two_n} plus a completion mode."""

    __slots__ = ("two_n", "mode", "entries")

    def __init__(self, two_n: int, mode: str, entries: Mapping[tuple[int, int], object]):
        if two_n < 0 or two_n % 2 != 0:
            raise ValueError(f"two_n must be even and >= 0, got {two_n}")
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
        expected = set(upper_pairs(two_n))
        got = set(entries)
        if got != expected:
            missing = sorted(expected - got)
            extra = sorted(got - expected)
            if missing:
                raise ValueError(f"missing entry {missing[0]}")
            raise ValueError(f"unexpected entry {extra[0]}")
        self.two_n = two_n
        self.mode = mode
        self.entries = dict(entries)

    @classmethod
    def from_function(cls, two_n: int, mode: str, fill: Callable[[int, int], object]) -> TriangularArray:
        return cls(two_n, mode, {(i, j): fill(i, j) for i, j in upper_pairs(two_n)})

    def lookup(self, i: int, j: int):
        """Entry (i, j) of the mode-completed square matrix."""
        if not (1 <= i <= self.two_n and 1 <= j <= self.two_n):
            raise IndexError(f"indices ({i},{j}) outside 1..{self.two_n}")
        if i == j:
            if self.mode == PLAIN:
                raise ValueError("plain arrays have no diagonal")
            return 0
        if i < j:
            return self.entries[(i, j)]
        if self.mode == SYMMETRIC:
            return self.entries[(j, i)]
        if self.mode == SKEW:
            return -self.entries[(j, i)]
        raise ValueError("plain arrays have no entries below the diagonal")

    def all_float(self) -> bool:
        return all(isinstance(v, float) for v in self.entries.values())

    def packed(self) -> list:
        """Entries in lexicographic (i, j) order."""
        return [self.entries[p] for p in upper_pairs(self.two_n)]

    def to_json_obj(self) -> dict:
        return {
            "two_n": self.two_n,
            "mode": self.mode,
            "entries": {f"{i},{j}": scalar_to_json(v) for (i, j), v in sorted(self.entries.items())},
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> TriangularArray:
        size, mode, entries = parse_square_json(obj)
        if size % 2 != 0:
            raise ValueError(f"two_n must be even, got {size}")
        return cls(size, mode, entries)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TriangularArray)
            and self.two_n == other.two_n
            and self.mode == other.mode
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"TriangularArray(two_n={self.two_n}, mode={self.mode!r})"


def scalar_to_json(v):
    if isinstance(v, Poly):
        return v.to_json_obj()
    if isinstance(v, float):
        return v
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    raise TypeError(f"cannot serialize scalar of type {type(v).__name__}")


def scalar_from_json(v):
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, bool):
        raise ValueError(f"bad scalar {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return v
    if isinstance(v, list):
        try:
            return Poly.from_json_obj(v)
        except (TypeError, KeyError, ValueError) as exc:
            raise ValueError(f"bad polynomial scalar: {exc}") from exc
    raise ValueError(f"bad scalar {v!r}")


def parse_square_json(obj: dict) -> tuple[int, str, dict]:
    """Parse the array file format; also accepts odd sizes (key "size")."""
    if not isinstance(obj, dict):
        raise ValueError("array file must be a JSON object")
    if "two_n" in obj:
        size = obj["two_n"]
    elif "size" in obj:
        size = obj["size"]
    else:
        raise ValueError("missing key 'two_n'")
    if not isinstance(size, int) or size < 0:
        raise ValueError(f"bad size {size!r}")
    mode = obj.get("mode")
    if mode not in MODES:
        raise ValueError(f"key 'mode' must be one of {MODES}, got {mode!r}")
    raw = obj.get("entries")
    if not isinstance(raw, dict):
        raise ValueError("missing key 'entries'")
    entries = {}
    for key, value in raw.items():
        try:
            i_text, j_text = key.split(",")
            i, j = int(i_text), int(j_text)
        except ValueError as exc:
            raise ValueError(f"entry key {key!r} is not of the form 'i,j'") from exc
        if not 1 <= i < j <= size:
            raise ValueError(f"entry key {key!r} outside the upper triangle of size {size}")
        try:
            entries[(i, j)] = scalar_from_json(value)
        except ValueError as exc:
            raise ValueError(f"entry {key!r}: {exc}") from exc
    for i, j in upper_pairs(size):
        if (i, j) not in entries:
            raise ValueError(f"missing entry key '{i},{j}'")
    return size, mode, entries


# -- pfaffians ---------------------------------------------------------------


def pfaffian_direct(arr: TriangularArray):
    """Alternating sum of signed products over all perfect matchings.

    Works in every mode since only upper entries appear.  Float arrays are
    routed through the selected kernel backend; exact and symbolic scalars
    take the generic path.
    """
    if arr.two_n == 0:
        return 1
    cap = matching_cap()
    if arr.two_n > cap:
        raise ValueError(f"two_n={arr.two_n} exceeds the enumeration cap {cap}")
    if arr.all_float():
        return backend.pf_double(arr.two_n, arr.packed())
    return _pfaffian_sum(arr)


def _pfaffian_sum(arr: TriangularArray):
    # definitional route, generic over the scalar domain
    if arr.two_n == 0:
        return 1
    entries = arr.entries
    total = None
    for m, s in enumerate_pfaff(arr.two_n):
        prod = None
        for pair in m.pairs:
            e = entries[pair]
            prod = e if prod is None else prod * e
        term = prod if s == 1 else -prod
        total = term if total is None else total + term
    return total


def generic_pfaffian(two_n: int) -> Poly:
    """The pfaffian with generator entries a(i,j), as a polynomial."""
    if two_n == 0:
        return Poly.const(1)
    terms = {}
    for m, s in enumerate_pfaff(two_n):
        mono = tuple((gen(i, j), 1) for i, j in m.pairs)
        terms[mono] = Fraction(s)
    return Poly(terms)


def _subset_pf(arr: TriangularArray, live: tuple[int, ...], memo: dict | None):
    """Pfaffian of the sub-array on the (sorted) index subset `live`.

    Expands along the first live hook; relative positions within `live`
    play the role of indices in the relabeled sub-array.  Uses only upper
    entries, so it is valid in every mode.
    """
    if not live:
        return 1
    if memo is not None and live in memo:
        return memo[live]
    entries = arr.entries
    i = live[0]
    total = None
    for t in range(1, len(live)):
        j = live[t]
        term = entries[(i, j)] * _subset_pf(arr, live[1:t] + live[t + 1 :], memo)
        if t % 2 == 0:
            term = -term
        total = term if total is None else total + term
    if memo is not None:
        memo[live] = total
    return total


def hook_expand_symmetric(arr: TriangularArray, s: int, memoize: bool = False):
    """Expansion along hook s for symmetric completion: no Heaviside sign."""
    if arr.mode != SYMMETRIC:
        raise ValueError(f"symmetric hook expansion needs a symmetric array, got mode {arr.mode!r}")
    if not 1 <= s <= arr.two_n:
        raise IndexError(f"hook {s} outside 1..{arr.two_n}")
    memo = {} if memoize else None
    live = tuple(range(1, arr.two_n + 1))
    total = None
    for j in live:
        if j == s:
            continue
        rest = tuple(k for k in live if k != s and k != j)
        term = arr.lookup(s, j) * _subset_pf(arr, rest, memo)
        if (s + j + 1) % 2 != 0:
            term = -term
        total = term if total is None else total + term
    return total


def hook_expand_skew(arr: TriangularArray, s: int, memoize: bool = False):
    """Expansion along hook s for skew completion, with the Heaviside sign."""
    if arr.mode != SKEW:
        raise ValueError(f"skew hook expansion needs a skew array, got mode {arr.mode!r}")
    if not 1 <= s <= arr.two_n:
        raise IndexError(f"hook {s} outside 1..{arr.two_n}")
    memo = {} if memoize else None
    live = tuple(range(1, arr.two_n + 1))
    total = None
    for j in live:
        if j == s:
            continue
        rest = tuple(k for k in live if k != s and k != j)
        term = arr.lookup(s, j) * _subset_pf(arr, rest, memo)
        if (s + j + 1 + heaviside(s - j)) % 2 != 0:
            term = -term
        total = term if total is None else total + term
    return total


# -- determinants -------------------------------------------------------------


def determinant(arr: TriangularArray):
    """Exact determinant of the mode-completed square matrix."""
    if arr.mode == PLAIN:
        raise ValueError("plain arrays have no completion rule, so no determinant")
    return completed_determinant(arr.two_n, arr.mode, arr.entries)


def completed_determinant(size: int, mode: str, entries: Mapping[tuple[int, int], object]):
    """Determinant of the size x size completion; `size` may be odd.

    This is the entry point for square matrices built from a triangular
    half by symmetry or skew-symmetry, with zero diagonal.
    """
    if mode not in (SYMMETRIC, SKEW):
        raise ValueError(f"mode must be symmetric or skew, got {mode!r}")
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    flip = -1 if mode == SKEW else 1
    rows = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            if i == j:
                row.append(0)
            elif i < j:
                row.append(entries[(i, j)])
            else:
                row.append(flip * entries[(j, i)])
        rows.append(row)
    if any(isinstance(v, Poly) for row in rows for v in row):
        rows = [[v if isinstance(v, Poly) else Poly.const(v) for v in row] for row in rows]
        return _cofactor_det(rows)
    if any(isinstance(v, float) for row in rows for v in row):
        exact = _bareiss_det([[Fraction(v) for v in row] for row in rows])
        return float(exact)
    return _bareiss_det([[Fraction(v) for v in row] for row in rows])


def _bareiss_det(rows: list[list[Fraction]]) -> Fraction:
    """Fraction-free Bareiss elimination with row pivoting."""
    n = len(rows)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) / prev
            rows[i][k] = Fraction(0)
        prev = pivot
    return sign * rows[-1][-1]


def _cofactor_det(rows: list[list[Poly]]) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Poly.zero()
    for j in range(n):
        if rows[0][j].is_zero():
            continue
        minor = [[row[c] for c in range(n) if c != j] for row in rows[1:]]
        term = rows[0][j] * _cofactor_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total
