"""Backend selection for the hot search kernels.

The numba backend is used when numba imports and ``HOMHOM_NO_NUMBA`` is unset
(or ``0``).  Setting ``HOMHOM_NO_NUMBA=1`` selects the pure numpy fallback.
Both backends return identical results; only speed differs.
"""

from __future__ import annotations

import contextlib
import os

from . import fallback

HOMO, MONO, ISO = fallback.HOMO, fallback.MONO, fallback.ISO
NONMEMBER, MEMBER, UNKNOWN = fallback.NONMEMBER, fallback.MEMBER, fallback.UNKNOWN

CACHE_SIZE = 64

try:
    from . import jit
except ImportError:  # numba missing
    jit = None

_BACKENDS = {"numpy": fallback}
if jit is not None:
    _BACKENDS["numba"] = jit


def _initial() -> str:
    if os.environ.get("HOMHOM_NO_NUMBA", "0") not in ("", "0") or jit is None:
        return "numpy"
    return "numba"


_active = _initial()


def available() -> list[str]:
    return sorted(_BACKENDS)


def backend() -> str:
    return _active


def set_backend(name: str) -> None:
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {available()}")
    _active = name


@contextlib.contextmanager
def using(name: str):
    prev = _active
    set_backend(name)
    try:
        yield
    finally:
        set_backend(prev)


def _mod():
    return _BACKENDS[_active]


def extend(leq, vc, ec, assign, kind):
    return _mod().extend(leq, vc, ec, assign, kind)


def decide(leq, vc, ec, src, tgt, budget=-1, cache_size=CACHE_SIZE):
    return _mod().decide(leq, vc, ec, src, tgt, budget, cache_size)


def canonical_mask(codes, posperms):
    return _mod().canonical_mask(codes, posperms)
