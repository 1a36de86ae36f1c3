"""The permutation action on generator polynomials, and brute-force
symmetry / skew-symmetry groups.

The action relabels a generator a(i,j) to a(p^{-1}(i), p^{-1}(j)) and a
position x_i to x_{p^{-1}(i)}, then normalizes generator indices back to
increasing order — silently for symmetric generators, with a sign for
skew ones.  Sym f collects the permutations fixing f; SSym f those fixing
f up to their own sign.
"""
from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass

from . import backend
from .models import g_poly
from .permutations import (
    Permutation,
    dihedral_generators,
    enumerate_sym,
    generate_subgroup,
    identity,
)
from .polyring import Poly, _raw, _var_key, pos, x

SYMMETRIC_GENS = "symmetric"
SKEW_GENS = "skew"
ACTION_MODES = (SYMMETRIC_GENS, SKEW_GENS)

BRUTE_FORCE_CAP = 8

_CLOSURE_FULL_LIMIT = 1000  # above this, closure is spot-checked


def act(p: Permutation, poly: Poly, mode: str) -> Poly:
    """Apply the generator action of p to poly.

    Note the composition direction: since indices travel through p^{-1},
    acting with p after q equals acting with compose(q, p) in one step.
    """
    if mode not in ACTION_MODES:
        raise ValueError(f"mode must be one of {ACTION_MODES}, got {mode!r}")
    inv = p.inverse().images
    size = p.size
    skew = mode == SKEW_GENS
    out = {}
    for mono, coeff in poly._terms.items():
        negate = False
        relabeled = []
        for v, e in mono:
            if v[0] == "x":
                i = v[1]
                if i > size:
                    raise ValueError(f"variable x{i} outside the action on 1..{size}")
                relabeled.append((("x", inv[i - 1]), e))
            else:
                i, j = v[1], v[2]
                if j > size:
                    raise ValueError(f"variable a({i},{j}) outside the action on 1..{size}")
                u, w = inv[i - 1], inv[j - 1]
                if u > w:
                    u, w = w, u
                    if skew and e % 2 == 1:
                        negate = not negate
                relabeled.append((("a", u, w), e))
        relabeled.sort(key=lambda t: _var_key(t[0]))
        key = tuple(relabeled)
        value = -coeff if negate else coeff
        acc = out.get(key)
        if acc is None:
            out[key] = value
        else:
            acc += value
            if acc == 0:
                del out[key]
            else:
                out[key] = acc
    return _raw(out)


@dataclass(frozen=True)
class GroupReport:
    """A computed symmetry set, with its dihedral comparison."""

    elements: tuple[Permutation, ...]
    order: int
    equals_dihedral: bool | None
    witness: Permutation | None

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "equals_dihedral": self.equals_dihedral,
            "witness": self.witness.to_json() if self.witness else None,
            "elements": [p.to_json() for p in self.elements],
        }


def make_group_report(members, m: int) -> GroupReport:
    """Build a report, verifying closure and comparing against <sigma, tau>."""
    elements = tuple(sorted(members))
    images = {p.images for p in elements}
    if identity(m).images not in images:
        raise RuntimeError("symmetry set does not contain the identity")
    _check_closure(images)
    equals_dihedral: bool | None = None
    witness = None
    if m % 2 == 0 and m >= 2:
        target = {p.images for p in generate_subgroup(list(dihedral_generators(m)))}
        equals_dihedral = images == target
        if not equals_dihedral:
            witness = Permutation(min(images.symmetric_difference(target)))
    return GroupReport(elements, len(elements), equals_dihedral, witness)


def _check_closure(images: set[tuple[int, ...]]) -> None:
    pool = sorted(images)
    if len(pool) <= _CLOSURE_FULL_LIMIT:
        pairs = ((a, b) for a in pool for b in pool)
    else:
        rng = random.Random(0)
        pairs = ((rng.choice(pool), rng.choice(pool)) for _ in range(100_000))
    for a, b in pairs:
        if tuple(a[v - 1] for v in b) not in images:
            raise RuntimeError(f"symmetry set is not closed: {a} o {b} escapes")


def _is_member(p: Permutation, poly: Poly, mode: str, signed: bool) -> bool:
    image = act(p, poly, mode)
    if signed and p.sign == -1:
        return image == -poly
    return image == poly


def _scan_chunk(payload):
    poly_obj, mode, signed, chunk = payload
    poly = Poly.from_json_obj(poly_obj)
    return [
        images
        for images in chunk
        if _is_member(Permutation(images), poly, mode, signed)
    ]


def symmetry_group(
    poly: Poly,
    m: int,
    mode: str,
    signed: bool = False,
    cap: int = BRUTE_FORCE_CAP,
    processes: int | None = None,
) -> GroupReport:
    """Brute-force Sym (signed=False) or SSym (signed=True) of poly in S_m.

    Every permutation of S_m is tested; `processes` > 1 splits the scan
    across worker processes.  A constant polynomial (zero included) is
    fixed by everything, so the full S_m comes back — that is the
    definition doing its job, not an error.
    """
    if mode not in ACTION_MODES:
        raise ValueError(f"mode must be one of {ACTION_MODES}, got {mode!r}")
    if m > cap:
        raise ValueError(f"m={m} exceeds the brute-force cap {cap}")
    perms = list(enumerate_sym(m, cap=max(cap, m)))
    if processes and processes > 1:
        chunks = _split([p.images for p in perms], processes * 4)
        payloads = [(poly.to_json_obj(), mode, signed, chunk) for chunk in chunks]
        with multiprocessing.Pool(processes) as pool_:
            kept = [im for part in pool_.map(_scan_chunk, payloads) for im in part]
        members = [Permutation(im) for im in kept]
    else:
        members = [p for p in perms if _is_member(p, poly, mode, signed)]
    return make_group_report(members, m)


def _split(items: list, parts: int) -> list[list]:
    parts = max(1, min(parts, len(items)))
    step = (len(items) + parts - 1) // parts
    return [items[k : k + step] for k in range(0, len(items), step)]


def pfaffian_symmetry_group(
    two_n: int,
    mode: str = SYMMETRIC_GENS,
    signed: bool = False,
    cap: int = BRUTE_FORCE_CAP,
) -> GroupReport:
    """Brute-force symmetry group of the generic pfaffian of order two_n.

    Same scan as symmetry_group(generic_pfaffian(two_n), ...) but the
    per-permutation test runs on the backend's matching-level classifier
    instead of polynomial arithmetic; the two routes are cross-checked
    exhaustively in the test suite.
    """
    if mode not in ACTION_MODES:
        raise ValueError(f"mode must be one of {ACTION_MODES}, got {mode!r}")
    if two_n > cap:
        raise ValueError(f"two_n={two_n} exceeds the brute-force cap {cap}")
    skew = mode == SKEW_GENS
    members = []
    for p in enumerate_sym(two_n, cap=max(cap, two_n)):
        t = backend.classify_pf_action(two_n, p, skew)
        if t == (p.sign if signed else 1):
            members.append(p)
    return make_group_report(members, two_n)


def is_dihedral(report: GroupReport, two_n: int) -> bool:
    """Whether the report's elements are exactly the subgroup <sigma, tau>."""
    if report.elements and report.elements[0].size != two_n:
        raise ValueError(
            f"report over S_{report.elements[0].size} cannot be compared at two_n={two_n}"
        )
    target = {p.images for p in generate_subgroup(list(dihedral_generators(two_n)))}
    return {p.images for p in report.elements} == target


def sym_of_g(two_n: int, cap: int = BRUTE_FORCE_CAP) -> GroupReport:
    """Brute-force symmetry group of the cycle product g.

    Uses the substitution x_i -> x_{sigma(i)}; the fixed set it produces
    is the same subgroup the a(i,j) action would give, since a subgroup
    contains an element iff it contains its inverse.
    """
    if two_n > cap:
        raise ValueError(f"two_n={two_n} exceeds the brute-force cap {cap}")
    g = g_poly(two_n)
    members = []
    for p in enumerate_sym(two_n, cap=max(cap, two_n)):
        substitution = {pos(k): x(p(k)) for k in range(1, two_n + 1)}
        if g.substitute(substitution) == g:
            members.append(p)
    return make_group_report(members, two_n)


def dihedral_group(two_n: int) -> list[Permutation]:
    """The concrete dihedral subgroup <sigma, tau> of S_{two_n}."""
    return generate_subgroup(list(dihedral_generators(two_n)))


__all__ = [
    "SYMMETRIC_GENS",
    "SKEW_GENS",
    "ACTION_MODES",
    "GroupReport",
    "act",
    "dihedral_group",
    "is_dihedral",
    "make_group_report",
    "pfaffian_symmetry_group",
    "sym_of_g",
    "symmetry_group",
]
