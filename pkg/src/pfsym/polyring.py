"""Exact sparse multivariate polynomials over the rationals.

Two variable families: generators a(i,j) with i < j, and positions x(i).
A variable is a plain tuple, ("a", i, j) or ("x", i); a monomial is a
tuple of (variable, exponent) pairs sorted in the canonical variable
order (positions before generators, then by index); a polynomial maps
monomials to nonzero Fraction coefficients.  All arithmetic is exact and
all representations are canonical, so equality is plain dict equality.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Var = tuple
Monomial = tuple
Scalar = Union[int, Fraction]


def pos(i: int) -> Var:
    """The position variable x_i."""
    if i < 1:
        raise ValueError(f"position index must be >= 1, got {i}")
    return ("x", i)


def gen(i: int, j: int) -> Var:
    """The generator variable a(i,j); indices must already satisfy i < j."""
    if not 1 <= i < j:
        raise ValueError(f"generator indices must satisfy 1 <= i < j, got ({i}, {j})")
    return ("a", i, j)


def _var_key(v: Var) -> tuple:
    # positions sort before generators
    return (0, v[1], 0) if v[0] == "x" else (1, v[1], v[2])


def _check_var(v) -> Var:
    if isinstance(v, tuple):
        if len(v) == 2 and v[0] == "x":
            return pos(v[1])
        if len(v) == 3 and v[0] == "a":
            return gen(v[1], v[2])
    raise ValueError(f"not a variable: {v!r}")


def var_text(v: Var) -> str:
    return f"x{v[1]}" if v[0] == "x" else f"a({v[1]},{v[2]})"


def _mono_key(mono: Monomial) -> tuple:
    # graded, then lexicographic on the variable sequence
    return (sum(e for _, e in mono), tuple((_var_key(v), e) for v, e in mono))


class Poly:
    """Immutable polynomial with Fraction coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                mono = tuple(sorted(((_check_var(v), e) for v, e in mono), key=lambda p: _var_key(p[0])))
                if any(e < 1 for _, e in mono):
                    raise ValueError(f"exponents must be positive: {mono!r}")
                clean[mono] = clean.get(mono, Fraction(0)) + coeff
                if clean[mono] == 0:
                    del clean[mono]
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def const(cls, c: Scalar) -> Poly:
        return cls({(): c})

    @classmethod
    def variable(cls, v: Var) -> Poly:
        return cls({((v, 1),): 1})

    # -- inspection --------------------------------------------------------

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in the canonical graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: _mono_key(t[0]))

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self._terms:
            return -1
        return max(sum(e for _, e in mono) for mono in self._terms)

    def variables(self) -> set[Var]:
        return {v for mono in self._terms for v, _ in mono}

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    __hash__ = None  # mutable-looking container semantics; not hashable

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = out.get(mono, Fraction(0)) + coeff
            if acc == 0:
                out.pop(mono, None)
            else:
                out[mono] = acc
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return _raw({mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other) -> Poly:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return Poly.zero()
            return _raw({mono: coeff * c for mono, coeff in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                acc = out.get(mono, Fraction(0)) + c1 * c2
                if acc == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = acc
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")
        out = Poly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, mapping: Mapping[Var, "Poly | Scalar"]) -> Poly:
        """Replace variables by polynomials; unmapped variables stay put."""
        mapping = {_check_var(v): _coerce_poly(rep) for v, rep in mapping.items()}
        out = Poly.zero()
        for mono, coeff in self._terms.items():
            term = Poly.const(coeff)
            kept = []
            for v, e in mono:
                if v in mapping:
                    term = term * mapping[v] ** e
                else:
                    kept.append((v, e))
            if kept:
                term = term * _raw({tuple(kept): Fraction(1)})
            out = out + term
        return out

    def eval_rational(self, assignment: Mapping[Var, Scalar]) -> Fraction:
        """Exact value under a total assignment of rationals."""
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            value = coeff
            for v, e in mono:
                if v not in assignment:
                    raise ValueError(f"no value assigned to {var_text(v)}")
                value *= Fraction(assignment[v]) ** e
            total += value
        return total

    def eval_float(self, assignment: Mapping[Var, float]) -> float:
        """Double-precision value under a total assignment."""
        total = 0.0
        for mono, coeff in self._terms.items():
            value = float(coeff)
            for v, e in mono:
                if v not in assignment:
                    raise ValueError(f"no value assigned to {var_text(v)}")
                value *= float(assignment[v]) ** e
            total += value
        return total

    # -- rendering and serialization ----------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for mono, coeff in self.terms():
            factors = [var_text(v) if e == 1 else f"{var_text(v)}^{e}" for v, e in mono]
            mag = abs(coeff)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = " * ".join(factors)
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def to_json_obj(self) -> list[dict]:
        return [
            {
                "coeff": str(coeff),
                "vars": [[*v, e] for v, e in mono],
            }
            for mono, coeff in self.terms()
        ]

    @classmethod
    def from_json_obj(cls, obj: Iterable[dict]) -> Poly:
        terms: dict[Monomial, Fraction] = {}
        for record in obj:
            coeff = Fraction(record["coeff"])
            mono = []
            for entry in record["vars"]:
                family, *rest = entry
                if family == "x" and len(rest) == 2:
                    mono.append((pos(rest[0]), rest[1]))
                elif family == "a" and len(rest) == 3:
                    mono.append((gen(rest[0], rest[1]), rest[2]))
                else:
                    raise ValueError(f"bad variable record: {entry!r}")
            mono = tuple(sorted(mono, key=lambda p: _var_key(p[0])))
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return cls(terms)


def _raw(terms: dict[Monomial, Fraction]) -> Poly:
    # internal fast path: terms are already canonical
    p = Poly.__new__(Poly)
    p._terms = terms
    return p


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    return NotImplemented


def _coerce_poly(value) -> Poly:
    coerced = _as_poly(value)
    if coerced is NotImplemented:
        raise ValueError(f"cannot use {value!r} as a polynomial (exact scalars only)")
    return coerced


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    merged = dict(m1)
    for v, e in m2:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items(), key=lambda p: _var_key(p[0])))


def x(i: int) -> Poly:
    """The position variable x_i as a polynomial."""
    return Poly.variable(pos(i))


def a(i: int, j: int) -> Poly:
    """The generator variable a(i,j) as a polynomial."""
    return Poly.variable(gen(i, j))
