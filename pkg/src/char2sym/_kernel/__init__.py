"""Arithmetic kernel with interchangeable backends.

The hot inner loops of the library (GF(2^m) scalar arithmetic and dense
polynomial arithmetic over GF(2^m)) live behind this module.  At import
time one of two implementations is selected:

* ``char2sym._kernel._native`` — Cython extension, used when available;
* ``char2sym._kernel.pure``    — pure Python, always available.

Set ``CHAR2SYM_BACKEND=pure`` or ``CHAR2SYM_BACKEND=native`` to force a
backend (``native`` raises ImportError when the extension is missing).
The packed GF(2)[Y] helpers (``gf2x_*``) always come from the pure
module: they operate on Python big ints, which are already C-speed.
"""

import os

from . import pure

_requested = os.environ.get("CHAR2SYM_BACKEND", "auto").lower()

if _requested in ("auto", "native"):
    try:
        from . import _native as _impl

        BACKEND = "native"
    except ImportError:
        if _requested == "native":
            raise
        _impl = pure
        BACKEND = "pure"
elif _requested == "pure":
    _impl = pure
    BACKEND = "pure"
else:
    raise ValueError(
        f"CHAR2SYM_BACKEND={_requested!r} not recognized "
        "(expected auto, native, or pure)"
    )

gf2x_mul = pure.gf2x_mul
gf2x_divmod = pure.gf2x_divmod
gf2x_gcd = pure.gf2x_gcd

gf_mul = _impl.gf_mul
gf_inv = _impl.gf_inv
gf_pow = _impl.gf_pow
gfp_mul = _impl.gfp_mul
gfp_divmod = _impl.gfp_divmod
gfp_rem = _impl.gfp_rem
gfp_gcd = _impl.gfp_gcd
gfp_pow_mod = _impl.gfp_pow_mod
