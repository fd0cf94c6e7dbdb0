"""Backend selection for the form-arithmetic kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is.  Inputs too large for 64-bit intermediates are always routed to
the Python backend, so a big discriminant is slow but never wrong.
"""
from __future__ import annotations

from kpq import _pykernels

try:
    from kpq import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

# All intermediates in the compiled composition stay below 2**63 under this bound.
C_LIMIT = 1 << 30


def _fast(*values: int) -> bool:
    return _ckernels is not None and all(-C_LIMIT < v < C_LIMIT for v in values)


def reduce_form(a: int, b: int, c: int) -> tuple[int, int, int]:
    if _fast(a, b, c, b * b - 4 * a * c):
        return _ckernels.reduce_form(a, b, c)
    return _pykernels.reduce_form(a, b, c)


def compose_forms(f: tuple[int, int, int], g: tuple[int, int, int]) -> tuple[int, int, int]:
    disc = f[1] * f[1] - 4 * f[0] * f[2]
    if _fast(*f, *g, disc):
        return _ckernels.compose_forms(*f, *g)
    return _pykernels.compose_forms(*f, *g)


def reduced_forms(disc: int) -> list[tuple[int, int, int]]:
    if _fast(disc):
        return _ckernels.reduced_forms(disc)
    return _pykernels.reduced_forms(disc)


def count_reduced_forms(disc: int) -> int:
    if _fast(disc):
        return _ckernels.count_reduced_forms(disc)
    return _pykernels.count_reduced_forms(disc)


def form_order(f: tuple[int, int, int], limit: int) -> int:
    a, b, c = f
    if _fast(a, b, c, b * b - 4 * a * c):
        return _ckernels.form_order(a, b, c, limit)
    return _pykernels.form_order(a, b, c, limit)
