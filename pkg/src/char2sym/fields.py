"""Exact arithmetic for the base fields of characteristic two.

Two kinds of base field are supported:

* ``BinaryField`` — GF(2^m), elements packed into ints below 2^m
  (bit i = coefficient of the i-th power of the generator in the
  polynomial basis of an irreducible modulus over GF(2));
* ``RationalFunctionField`` — GF(2^m)(t), elements stored as reduced
  fractions of polynomials in t with monic denominator.

Field objects operate on raw payloads (ints, fractions, coefficient
tuples); the ``Scalar`` wrapper adds operator syntax on top and is what
the rest of the library passes around.  All values are immutable and
canonical, so ``==`` is exact field equality.
"""

from __future__ import annotations

import re
from typing import Any, NamedTuple

from . import _kernel as K
from .errors import (
    FieldMismatchError,
    NotASquareError,
    NotIrreducibleError,
    ParseError,
)

# Irreducible moduli over GF(2), one per degree (bit i = coeff of Y^i).
# Verified again at construction time; these are the usual low-weight
# choices (x^8+x^4+x^3+x+1 for m=8, etc.).
DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}

MAX_EXTENSION_DEGREE = 16


def _gf2_poly_irreducible(bits: int, m: int) -> bool:
    """Exhaustive trial division of a degree-m GF(2) polynomial."""
    if bits.bit_length() - 1 != m:
        return False
    if bits & 1 == 0:
        return m == 1  # divisible by Y unless it *is* Y
    for q in range(2, 1 << (m // 2 + 1)):
        if K.gf2x_divmod(bits, q)[1] == 0:
            return False
    return True


class Scalar:
    """A field element: a raw payload plus the field it lives in."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        self.field = field
        self.raw = raw

    def _coerced(self, other):
        if isinstance(other, Scalar):
            if other.field == self.field:
                return other.raw
            try:
                # e.g. base-field scalars embed into an extension
                return self.field.coerce(other)
            except (TypeError, ValueError) as exc:
                raise FieldMismatchError(
                    f"cannot mix {self.field} and {other.field}"
                ) from exc
        try:
            return self.field.coerce(other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        raw = self._coerced(other)
        if raw is None:
            return NotImplemented
        return Scalar(self.field, self.field.add(self.raw, raw))

    __radd__ = __add__
    __sub__ = __add__  # characteristic two
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        raw = self._coerced(other)
        if raw is None:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.raw, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._coerced(other)
        if raw is None:
            return NotImplemented
        return Scalar(self.field, self.field.div(self.raw, raw))

    def __rtruediv__(self, other):
        raw = self._coerced(other)
        if raw is None:
            return NotImplemented
        return Scalar(self.field, self.field.div(raw, self.raw))

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        f = self.field
        if e < 0:
            return Scalar(f, f.pow(f.inv(self.raw), -e))
        return Scalar(f, f.pow(self.raw, e))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.raw == other.raw
        raw = self._coerced(other)
        return self.raw == raw if raw is not None else NotImplemented

    def __hash__(self):
        return hash((self.field, self.raw))

    def __bool__(self):
        return self.raw != self.field.zero

    def inverse(self):
        return Scalar(self.field, self.field.inv(self.raw))

    def frobenius(self):
        """x -> x^2 (additive in characteristic two)."""
        return Scalar(self.field, self.field.mul(self.raw, self.raw))

    def is_square(self):
        return self.field.is_square(self.raw)

    def sqrt(self):
        return Scalar(self.field, self.field.sqrt(self.raw))

    def __str__(self):
        return self.field.render(self.raw)

    def __repr__(self):
        return f"<{self.field.render(self.raw)} in {self.field}>"


class Field:
    """Shared behaviour for the raw-payload field protocol.

    Concrete fields implement: ``zero``, ``one``, ``add``, ``mul``,
    ``inv``, ``is_square``, ``sqrt``, ``coerce``, ``render``,
    ``sort_key``, ``__eq__``, ``__hash__``.
    """

    zero: Any
    one: Any

    def sub(self, a, b):
        return self.add(a, b)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        r = self.one
        while e:
            if e & 1:
                r = self.mul(r, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return r

    def scalar(self, value) -> Scalar:
        return Scalar(self, self.coerce(value))

    def parse(self, text: str) -> Scalar:
        from .parsing import parse_scalar

        return parse_scalar(self, text)

    def __ne__(self, other):
        return not self.__eq__(other)


class BinaryField(Field):
    """GF(2^m) in the polynomial basis of an irreducible modulus."""

    is_finite = True

    def __init__(self, m: int, modulus: int | None = None):
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if m > MAX_EXTENSION_DEGREE:
            raise ValueError(
                f"extension degree {m} exceeds the supported bound "
                f"{MAX_EXTENSION_DEGREE}"
            )
        if modulus is None:
            modulus = DEFAULT_MODULI[m]
        if not _gf2_poly_irreducible(modulus, m):
            raise NotIrreducibleError(
                f"modulus {modulus:#b} is not an irreducible degree-{m} "
                "polynomial over GF(2)"
            )
        self.m = m
        self.modulus = modulus
        self.order = 1 << m
        self.zero = 0
        self.one = 1

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return K.gf_mul(a, b, self.modulus, self.m)

    def inv(self, a: int) -> int:
        return K.gf_inv(a, self.modulus, self.m)

    def pow(self, a: int, e: int) -> int:
        return K.gf_pow(a, e, self.modulus, self.m)

    def is_square(self, a: int) -> bool:
        return True  # finite fields of characteristic two are perfect

    def sqrt(self, a: int) -> int:
        # Frobenius is a bijection; its inverse is x -> x^(2^(m-1)).
        return self.pow(a, 1 << (self.m - 1))

    def coerce(self, value) -> int:
        if isinstance(value, Scalar):
            if value.field != self:
                raise ValueError("scalar from a different field")
            return value.raw
        if isinstance(value, int):
            if 0 <= value < self.order:
                return value
            raise ValueError(
                f"bit-packed value {value} out of range for GF(2^{self.m})"
            )
        raise TypeError(f"cannot interpret {value!r} as a GF(2^{self.m}) element")

    def elements(self):
        return (Scalar(self, v) for v in range(self.order))

    def render(self, a: int) -> str:
        return str(a)

    def sort_key(self, a: int):
        return (0, a)

    def spec_string(self) -> str:
        if self.m == 1:
            return "gf2"
        if self.modulus == DEFAULT_MODULI[self.m]:
            return f"gf(2^{self.m})"
        return f"gf(2^{self.m}):{self.modulus}"

    def __eq__(self, other):
        return (
            isinstance(other, BinaryField)
            and other.m == self.m
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("BinaryField", self.m, self.modulus))

    def __repr__(self):
        return f"GF(2^{self.m})" if self.m > 1 else "GF(2)"


class Frac(NamedTuple):
    """Reduced fraction of polynomials in t; denominator monic.

    Payload type depends on the base field: packed ints over GF(2),
    tuples of ints over larger GF(2^m).
    """

    num: Any
    den: Any


class RationalFunctionField(Field):
    """GF(2^m)(t): exact rational functions over a binary base field."""

    is_finite = False

    def __init__(self, base: BinaryField | None = None, var: str = "t"):
        self.base = base if base is not None else BinaryField(1)
        self.var = var
        self._packed = self.base.m == 1
        if self._packed:
            self._tzero, self._tone = 0, 1
        else:
            self._tzero, self._tone = (), (1,)
        self.zero = Frac(self._tzero, self._tone)
        self.one = Frac(self._tone, self._tone)

    # -- polynomial-in-t helpers on the underlying payloads ------------

    def _tdeg(self, p) -> int:
        if self._packed:
            return p.bit_length() - 1
        return len(p) - 1

    def _tmul(self, p, q):
        if self._packed:
            return K.gf2x_mul(p, q)
        b = self.base
        return tuple(K.gfp_mul(list(p), list(q), b.modulus, b.m))

    def _tdivmod(self, p, q):
        if self._packed:
            return K.gf2x_divmod(p, q)
        b = self.base
        quo, rem = K.gfp_divmod(list(p), list(q), b.modulus, b.m)
        return tuple(quo), tuple(rem)

    def _tgcd(self, p, q):
        if self._packed:
            return K.gf2x_gcd(p, q)
        b = self.base
        return tuple(K.gfp_gcd(list(p), list(q), b.modulus, b.m))

    def _texact_div(self, p, q):
        quo, rem = self._tdivmod(p, q)
        if rem != self._tzero:
            raise ValueError("inexact polynomial division in t")
        return quo

    def _tmonic(self, p):
        """Scale p to monic; returns (monic p, the leading coefficient)."""
        if self._packed:
            return p, 1
        lead = p[-1]
        if lead == 1:
            return p, 1
        b = self.base
        il = b.inv(lead)
        return tuple(b.mul(c, il) for c in p), lead

    def _treduce(self, num, den) -> Frac:
        if den == self._tzero:
            raise ZeroDivisionError("zero denominator in GF(2^m)(t)")
        if num == self._tzero:
            return Frac(self._tzero, self._tone)
        g = self._tgcd(num, den)
        if g != self._tone:
            num = self._texact_div(num, g)
            den = self._texact_div(den, g)
        den, lead = self._tmonic(den)
        if lead != 1:
            il = self.base.inv(lead)
            num = tuple(self.base.mul(c, il) for c in num)
        return Frac(num, den)

    def _tcoeffs(self, p):
        """Coefficients of a payload polynomial, constant term first."""
        if self._packed:
            return [(p >> i) & 1 for i in range(p.bit_length())]
        return list(p)

    def _tfrom_coeffs(self, coeffs) -> Any:
        if self._packed:
            v = 0
            for i, c in enumerate(coeffs):
                if c:
                    v |= 1 << i
            return v
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        return tuple(coeffs)

    # -- field protocol -------------------------------------------------

    def add(self, a: Frac, b: Frac) -> Frac:
        if self._packed:
            num = K.gf2x_mul(a.num, b.den) ^ K.gf2x_mul(b.num, a.den)
        else:
            x = K.gfp_mul(list(a.num), list(b.den), self.base.modulus, self.base.m)
            y = K.gfp_mul(list(b.num), list(a.den), self.base.modulus, self.base.m)
            n = max(len(x), len(y))
            x += [0] * (n - len(x))
            y += [0] * (n - len(y))
            num = self._tfrom_coeffs([u ^ v for u, v in zip(x, y)])
        return self._treduce(num, self._tmul(a.den, b.den))

    def mul(self, a: Frac, b: Frac) -> Frac:
        if a.num == self._tzero or b.num == self._tzero:
            return self.zero
        g1 = self._tgcd(a.num, b.den)
        g2 = self._tgcd(b.num, a.den)
        num = self._tmul(self._texact_div(a.num, g1), self._texact_div(b.num, g2))
        den = self._tmul(self._texact_div(a.den, g2), self._texact_div(b.den, g1))
        den, lead = self._tmonic(den)
        if lead != 1:
            il = self.base.inv(lead)
            num = tuple(self.base.mul(c, il) for c in num)
        return Frac(num, den)

    def inv(self, a: Frac) -> Frac:
        if a.num == self._tzero:
            raise ZeroDivisionError("inverse of zero in GF(2^m)(t)")
        num, den = a.den, a.num
        den, lead = self._tmonic(den)
        if lead != 1:
            il = self.base.inv(lead)
            num = tuple(self.base.mul(c, il) for c in num)
        elif not self._packed:
            num = tuple(num)
        return Frac(num, den)

    def is_square(self, a: Frac) -> bool:
        return self._tpoly_is_square(a.num) and self._tpoly_is_square(a.den)

    def _tpoly_is_square(self, p) -> bool:
        coeffs = self._tcoeffs(p)
        return all(
            c == 0 if i % 2 else self.base.is_square(c)
            for i, c in enumerate(coeffs)
        )

    def _tpoly_sqrt(self, p):
        coeffs = self._tcoeffs(p)
        halved = [self.base.sqrt(c) for c in coeffs[::2]]
        return self._tfrom_coeffs(halved)

    def sqrt(self, a: Frac) -> Frac:
        if not self.is_square(a):
            raise NotASquareError(f"{self.render(a)} is not a square")
        return Frac(self._tpoly_sqrt(a.num), self._tpoly_sqrt(a.den))

    def coerce(self, value) -> Frac:
        if isinstance(value, Scalar):
            if value.field != self:
                raise ValueError("scalar from a different field")
            return value.raw
        if isinstance(value, Frac):
            return value
        if isinstance(value, int):
            c = self.base.coerce(value)
            if c == 0:
                return self.zero
            if self._packed:
                return Frac(c, 1)
            return Frac((c,), (1,))
        raise TypeError(f"cannot interpret {value!r} as an element of {self}")

    def t(self) -> Scalar:
        """The indeterminate as a field element."""
        if self._packed:
            return Scalar(self, Frac(2, 1))
        return Scalar(self, Frac((0, 1), (1,)))

    def from_t_coeffs(self, coeffs) -> Scalar:
        """Polynomial in t from base-field coefficients (constant first)."""
        payload = self._tfrom_coeffs([self.base.coerce(c) for c in coeffs])
        if payload == self._tzero:
            return Scalar(self, self.zero)
        return Scalar(self, Frac(payload, self._tone))

    # -- text -----------------------------------------------------------

    def _render_tpoly(self, p) -> str:
        coeffs = self._tcoeffs(p)
        if not coeffs:
            return "0"
        terms = []
        for i in range(len(coeffs) - 1, -1, -1):
            c = coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(self.base.render(c))
            else:
                tpow = self.var if i == 1 else f"{self.var}^{i}"
                terms.append(tpow if c == 1 else f"{self.base.render(c)}*{tpow}")
        return "+".join(terms)

    def render(self, a: Frac) -> str:
        num = self._render_tpoly(a.num)
        if a.den == self._tone:
            return num
        return f"({num})/({self._render_tpoly(a.den)})"

    def sort_key(self, a: Frac):
        if self._packed:
            return (1, a.den, a.num)
        return (1, (len(a.den),) + a.den, (len(a.num),) + a.num)

    def spec_string(self) -> str:
        if self.base.m == 1:
            return "f2(t)"
        return f"{self.base.spec_string()}(t)"

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunctionField)
            and other.base == self.base
            and other.var == self.var
        )

    def __hash__(self):
        return hash(("RationalFunctionField", self.base, self.var))

    def __repr__(self):
        base = "F2" if self.base.m == 1 else f"GF(2^{self.base.m})"
        return f"{base}({self.var})"


GF2 = BinaryField(1)

_FIELD_SPEC = re.compile(
    r"""^(?:
        (?P<gf2>gf2) |
        (?P<f2t>f2\(t\)) |
        gf\(2\^(?P<m>\d+)\)(?::(?P<mod>\d+))?(?P<t>\(t\))?
    )$""",
    re.VERBOSE | re.IGNORECASE,
)


def field_from_spec(spec: str):
    """Build a field from a spec string.

    Grammar: ``gf2`` | ``gf(2^m)`` | ``gf(2^m):modulus-bits`` |
    ``f2(t)`` | ``gf(2^m)(t)`` (modulus variant allowed before ``(t)``).
    """
    text = spec.replace(" ", "").lower()
    match = _FIELD_SPEC.match(text)
    if not match:
        raise ParseError(f"cannot parse field spec {spec!r}")
    if match.group("gf2"):
        return BinaryField(1)
    if match.group("f2t"):
        return RationalFunctionField(BinaryField(1))
    m = int(match.group("m"))
    mod = match.group("mod")
    try:
        base = BinaryField(m, int(mod) if mod else None)
    except (ValueError, NotIrreducibleError, KeyError) as exc:
        raise ParseError(f"bad field spec {spec!r}: {exc}") from exc
    if match.group("t"):
        return RationalFunctionField(base)
    return base
