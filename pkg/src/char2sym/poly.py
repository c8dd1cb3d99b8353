"""Dense univariate polynomials over any of the library's fields.

Coefficients are stored as raw field payloads, constant term first,
with no trailing zeros; the zero polynomial has an empty coefficient
tuple and degree -1.  Polynomials are immutable and hashable.

Multiplication, division and powering over GF(2^m) route through the
arithmetic kernel; other coefficient fields use the generic schoolbook
paths below.
"""

from __future__ import annotations

from . import _kernel as K
from .errors import FieldMismatchError, NotIrreducibleError
from .fields import BinaryField, Scalar


def binom_parity(i: int, j: int) -> int:
    """C(i, j) mod 2 by the bitwise containment rule (Lucas)."""
    if i < 0 or j < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return 1 if (i & j) == j else 0


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        zero = field.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    # -- construction ----------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def x(cls, field):
        return cls(field, (field.zero, field.one))

    @classmethod
    def constant(cls, value: Scalar):
        return cls(value.field, (value.raw,))

    @classmethod
    def monomial(cls, field, k: int, coeff=None):
        raw = field.one if coeff is None else field.coerce(coeff)
        return cls(field, (field.zero,) * k + (raw,))

    @classmethod
    def from_scalars(cls, field, scalars):
        return cls(field, (field.coerce(s) for s in scalars))

    # -- structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def coeff(self, i: int) -> Scalar:
        raw = self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero
        return Scalar(self.field, raw)

    def leading(self) -> Scalar:
        if self.is_zero:
            return Scalar(self.field, self.field.zero)
        return Scalar(self.field, self.coeffs[-1])

    def scalars(self):
        return [Scalar(self.field, c) for c in self.coeffs]

    def _check(self, other) -> "Poly":
        if isinstance(other, Scalar):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            raise TypeError(f"expected a polynomial, got {other!r}")
        if other.field != self.field:
            raise FieldMismatchError("polynomials over different fields")
        return other

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    __sub__ = __add__  # characteristic two

    def __mul__(self, other):
        other = self._check(other)
        f = self.field
        if self.is_zero or other.is_zero:
            return Poly.zero(f)
        if isinstance(f, BinaryField):
            a = list(self.coeffs)
            b = a if other.coeffs == self.coeffs else list(other.coeffs)
            return Poly(f, K.gfp_mul(a, b, f.modulus, f.m))
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c == f.zero:
                continue
            for j, d in enumerate(other.coeffs):
                if d != f.zero:
                    out[i + j] = f.add(out[i + j], f.mul(c, d))
        return Poly(f, out)

    def scale(self, value) -> "Poly":
        f = self.field
        raw = f.coerce(value)
        if raw == f.zero:
            return Poly.zero(f)
        if raw == f.one:
            return self
        return Poly(f, (f.mul(c, raw) for c in self.coeffs))

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        r = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                r = r * base
            e >>= 1
            if e:
                base = base * base
        return r

    def __divmod__(self, other):
        other = self._check(other)
        f = self.field
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if isinstance(f, BinaryField):
            q, r = K.gfp_divmod(
                list(self.coeffs), list(other.coeffs), f.modulus, f.m
            )
            return Poly(f, q), Poly(f, r)
        db = other.degree
        if self.degree < db:
            return Poly.zero(f), self
        rem = list(self.coeffs)
        inv_lead = f.inv(other.coeffs[-1])
        quo = [f.zero] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == f.zero:
                continue
            factor = f.mul(c, inv_lead)
            quo[i - db] = factor
            off = i - db
            for j, d in enumerate(other.coeffs):
                if d != f.zero:
                    rem[off + j] = f.add(rem[off + j], f.mul(factor, d))
        return Poly(f, quo), Poly(f, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def eval(self, x: Scalar) -> Scalar:
        f = self.field
        raw_x = f.coerce(x)
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, raw_x), c)
        return Scalar(f, acc)

    def compose(self, other: "Poly") -> "Poly":
        """Substitute ``other`` for the variable."""
        other = self._check(other)
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * other + Poly(self.field, (c,))
        return acc

    def derivative(self) -> "Poly":
        f = self.field
        out = [f.zero] * max(len(self.coeffs) - 1, 0)
        for i in range(1, len(self.coeffs), 2):
            out[i - 1] = self.coeffs[i]  # even i: coefficient i*c vanishes
        return Poly(f, out)

    # -- characteristic-two structure --------------------------------------

    def even_exponents_only(self) -> bool:
        """True when the polynomial lies in k[X^2]."""
        return all(c == self.field.zero for c in self.coeffs[1::2])

    def inflate(self, k: int) -> "Poly":
        """p(X) -> p(X^k)."""
        if k < 1:
            raise ValueError("inflation factor must be >= 1")
        if k == 1 or self.is_zero:
            return self
        f = self.field
        out = [f.zero] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Poly(f, out)

    def deflate(self, k: int) -> "Poly":
        """p(X^k) -> p(X); requires support divisible by k."""
        f = self.field
        out = []
        for i, c in enumerate(self.coeffs):
            if i % k == 0:
                out.append(c)
            elif c != f.zero:
                raise ValueError(f"exponent {i} not divisible by {k}")
        return Poly(f, out)

    def sqrt(self) -> "Poly":
        """Exact square root: X-support halved, coefficient square roots."""
        f = self.field
        out = []
        for i, c in enumerate(self.coeffs):
            if i % 2 == 0:
                out.append(f.sqrt(c))
            elif c != f.zero:
                raise ValueError("polynomial has an odd-exponent term")
        return Poly(f, out)

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def sort_key(self):
        f = self.field
        return (
            self.degree,
            tuple(f.sort_key(c) for c in reversed(self.coeffs)),
        )

    # -- text ---------------------------------------------------------------

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"<poly {render_poly(self)} over {self.field}>"


def render_poly(p: Poly, var: str = "x") -> str:
    if p.is_zero:
        return "0"
    f = p.field
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == f.zero:
            continue
        text = f.render(c)
        if "+" in text or "/" in text or "*" in text:
            text = f"({text})"
        if i == 0:
            terms.append(text)
            continue
        xpow = var if i == 1 else f"{var}^{i}"
        terms.append(xpow if c == f.one else f"{text}*{xpow}")
    return "+".join(terms)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    if a.field != b.field:
        raise FieldMismatchError("gcd of polynomials over different fields")
    f = a.field
    if isinstance(f, BinaryField):
        g = K.gfp_gcd(list(a.coeffs), list(b.coeffs), f.modulus, f.m)
        return Poly(f, g)
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return Poly.zero(a.field)
    g = poly_gcd(a, b)
    return ((a * b) // g).monic()


def x_power_mod(i: int, f: Poly) -> Poly:
    """X^i reduced modulo f (f monic of degree >= 1)."""
    if f.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    if i < f.degree:
        return Poly.monomial(f.field, i)
    fld = f.field
    if isinstance(fld, BinaryField):
        out = K.gfp_pow_mod([0, 1], i, list(f.coeffs), fld.modulus, fld.m)
        return Poly(fld, out)
    return pow_mod(Poly.x(fld), i, f)


def pow_mod(a: Poly, e: int, f: Poly) -> Poly:
    """a^e mod f by square-and-multiply."""
    r = Poly.one(a.field)
    base = a % f
    while e:
        if e & 1:
            r = (r * base) % f
        e >>= 1
        if e:
            base = (base * base) % f
    return r


def is_separable(f: Poly) -> bool:
    """Nonzero derivative and gcd(f, f') = 1."""
    d = f.derivative()
    if d.is_zero:
        return f.degree == 0
    return poly_gcd(f, d).degree == 0


def inseparability_depth(rho: Poly) -> tuple[Poly, int]:
    """Write rho = pi(X^(2^n)) with pi separable; return (pi, n).

    Exponent halving transports coefficients unchanged; no square roots
    are taken.  ``rho`` is trusted to be irreducible: if the deflated
    core comes out inseparable, the input was not irreducible.
    """
    if rho.degree < 1:
        raise ValueError("expected degree >= 1")
    pi, n = rho, 0
    while pi.degree >= 2 and pi.even_exponents_only():
        pi = pi.deflate(2)
        n += 1
    if not is_separable(pi):
        raise NotIrreducibleError(
            f"{rho} is not irreducible (its deflated core is inseparable)"
        )
    return pi, n
