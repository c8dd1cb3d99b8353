"""Pure-Python arithmetic kernel.

Two layers of representation, both exact:

* ``gf2x_*`` — polynomials over GF(2) packed into Python ints, bit i
  holding the coefficient of Y^i.  Python's big-int XOR/shift already
  run in C, so these functions are shared by both kernel backends.
* ``gf_*`` / ``gfp_*`` — elements of GF(2^m) as ints below 2^m
  (coefficient vectors in the polynomial basis of an irreducible
  modulus, packed like gf2x), and dense polynomials over GF(2^m) as
  lists of such ints, constant term first, no trailing zeros.

The native kernel re-implements the ``gf_*`` / ``gfp_*`` functions with
the same signatures and normalization contract.
"""

from __future__ import annotations

NAME = "pure"


def gf2x_mul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[Y] polynomials."""
    if a == 0 or b == 0:
        return 0
    if a.bit_count() > b.bit_count():
        a, b = b, a
    r = 0
    while a:
        low = a & -a
        r ^= b * low
        a ^= low
    return r


def gf2x_divmod(a: int, b: int) -> tuple[int, int]:
    """Long division in GF(2)[Y]; returns (quotient, remainder)."""
    if b == 0:
        raise ZeroDivisionError("gf2x division by zero")
    db = b.bit_length() - 1
    q = 0
    da = a.bit_length() - 1
    while a and da >= db:
        shift = da - db
        q ^= 1 << shift
        a ^= b << shift
        da = a.bit_length() - 1
    return q, a


def gf2x_gcd(a: int, b: int) -> int:
    """Monic gcd in GF(2)[Y] (monic is automatic over GF(2))."""
    while b:
        a, b = b, gf2x_divmod(a, b)[1]
    return a


def gf_mul(a: int, b: int, mod: int, m: int) -> int:
    """Multiply in GF(2^m) with modulus ``mod`` (bit m set)."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> m) & 1:
            a ^= mod
    return r


def gf_inv(a: int, mod: int, m: int) -> int:
    """Invert a nonzero element of GF(2^m) by extended Euclid."""
    if a == 0:
        raise ZeroDivisionError("inverse of zero in GF(2^m)")
    r0, r1 = a, mod
    s0, s1 = 1, 0
    while r1:
        q, r = gf2x_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ gf2x_mul(q, s1)
    if r0 != 1:
        raise ValueError("modulus is not irreducible")
    return gf2x_divmod(s0, mod)[1]


def gf_pow(a: int, e: int, mod: int, m: int) -> int:
    """Raise a GF(2^m) element to a nonnegative power."""
    r = 1
    while e:
        if e & 1:
            r = gf_mul(r, a, mod, m)
        e >>= 1
        a = gf_mul(a, a, mod, m)
    return r


def _strip(v: list[int]) -> list[int]:
    while v and v[-1] == 0:
        v.pop()
    return v


def gfp_mul(a: list[int], b: list[int], mod: int, m: int) -> list[int]:
    """Dense polynomial product over GF(2^m)."""
    if not a or not b:
        return []
    if a is b:
        # Frobenius: squaring maps coefficients through x -> x^2.
        out = [0] * (2 * len(a) - 1)
        for i, c in enumerate(a):
            if c:
                out[2 * i] = gf_mul(c, c, mod, m)
        return out
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if not c:
            continue
        if c == 1:
            for j, d in enumerate(b):
                out[i + j] ^= d
        else:
            for j, d in enumerate(b):
                if d:
                    out[i + j] ^= gf_mul(c, d, mod, m)
    return out


def gfp_divmod(
    a: list[int], b: list[int], mod: int, m: int
) -> tuple[list[int], list[int]]:
    """Dense polynomial long division over GF(2^m)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    r = list(a)
    lead = b[-1]
    inv_lead = 1 if lead == 1 else gf_inv(lead, mod, m)
    q = [0] * (len(a) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i]
        if not c:
            continue
        f = c if inv_lead == 1 else gf_mul(c, inv_lead, mod, m)
        q[i - db] = f
        off = i - db
        if f == 1:
            for j, d in enumerate(b):
                if d:
                    r[off + j] ^= d
        else:
            for j, d in enumerate(b):
                if d:
                    r[off + j] ^= gf_mul(f, d, mod, m)
    del r[db:]
    return q, _strip(r)


def gfp_rem(a: list[int], b: list[int], mod: int, m: int) -> list[int]:
    """Remainder of dense polynomial division over GF(2^m)."""
    return gfp_divmod(a, b, mod, m)[1]


def gfp_gcd(a: list[int], b: list[int], mod: int, m: int) -> list[int]:
    """Monic gcd of dense polynomials over GF(2^m)."""
    a, b = list(a), list(b)
    while b:
        a, b = b, gfp_divmod(a, b, mod, m)[1]
    if not a:
        return a
    lead = a[-1]
    if lead != 1:
        il = gf_inv(lead, mod, m)
        a = [gf_mul(c, il, mod, m) if c else 0 for c in a]
    return a


def gfp_pow_mod(
    a: list[int], e: int, f: list[int], mod: int, m: int
) -> list[int]:
    """Compute a^e mod f over GF(2^m) by square-and-multiply."""
    if len(f) - 1 < 1:
        raise ValueError("modulus must have degree >= 1")
    r = [1]
    base = gfp_rem(list(a), f, mod, m)
    while e:
        if e & 1:
            r = gfp_rem(gfp_mul(r, base, mod, m), f, mod, m)
        e >>= 1
        if e:
            base = gfp_rem(gfp_mul(base, base, mod, m), f, mod, m)
    return r
