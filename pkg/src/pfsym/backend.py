"""Kernel backend selection, fixed at import time.

The hot kernels exist twice: compiled (pfsym._native, Cython) and pure
Python (pfsym._pure).  The compiled module is preferred when importable;
set PFSYM_BACKEND=python or =native to force a choice.
"""
from __future__ import annotations

import os

from . import _pure
from .permutations import Permutation

_choice = os.environ.get("PFSYM_BACKEND", "auto").strip().lower()
if _choice not in ("auto", "native", "python"):
    raise ImportError(f"PFSYM_BACKEND must be auto, native or python, got {_choice!r}")

_native = None
if _choice in ("auto", "native"):
    try:
        from . import _native as _native  # type: ignore[no-redef]
    except ImportError:
        if _choice == "native":
            raise ImportError("PFSYM_BACKEND=native but the compiled extension is not importable")
        _native = None

_impl = _native if _native is not None else _pure


def backend_name() -> str:
    return "python" if _impl is _pure else "native"


def pf_double(two_n: int, packed) -> float:
    """Pfaffian of the packed upper-triangular float entries."""
    return _impl.pf_double(two_n, [float(v) for v in packed])


def classify_pf_action(two_n: int, p: Permutation, skew: bool) -> int:
    """Effect of acting with p on the generic pfaffian of order two_n.

    +1 when the relabeled pfaffian equals the original, -1 when it equals
    its negative, 0 otherwise.
    """
    if p.size != two_n:
        raise ValueError(f"permutation of size {p.size} cannot act on 1..{two_n}")
    inv0 = [v - 1 for v in p.inverse().images]
    return _impl.classify_pf_action(two_n, inv0, bool(skew))
