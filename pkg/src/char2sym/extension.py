"""Simple field extensions L = k[Y]/(pi) and the local quotient algebras
L[X]/((X^(2^n) - a)^m) used by the transfer constructions.

``SimpleExtension`` implements the same raw-payload field protocol as
the base fields, so polynomials and Gram matrices over L reuse all the
generic machinery.  Elements are coefficient tuples of length
d = deg(pi) in the power basis of the class of Y.
"""

from __future__ import annotations

from .bilinear import gauss_reduce
from .errors import (
    NotInvertibleError,
    NotIrreducibleError,
    ReductionFailedError,
    UnsupportedFieldError,
)
from .fields import BinaryField, Field, Scalar
from .poly import Poly, pow_mod, render_poly


class SimpleExtension(Field):
    """L = k[Y]/(pi) for monic irreducible pi over a library field."""

    is_finite = False

    def __init__(self, pi: Poly, check: bool = True):
        if not pi.is_monic or pi.degree < 1:
            raise ValueError("extension modulus must be monic of degree >= 1")
        base = pi.field
        if check and isinstance(base, BinaryField):
            from .factor import is_irreducible

            if not is_irreducible(pi):
                raise NotIrreducibleError(
                    f"{pi} is reducible over {base}"
                )
        self.base = base
        self.pi = pi
        self.degree = pi.degree
        self.is_finite = getattr(base, "is_finite", False)
        d = self.degree
        self.zero = (base.zero,) * d
        self.one = ((base.one,) + (base.zero,) * (d - 1)) if d else ()

    def _pad(self, coeffs) -> tuple:
        coeffs = tuple(coeffs)
        return coeffs + (self.base.zero,) * (self.degree - len(coeffs))

    def gen(self) -> Scalar:
        """The class of Y (a root of pi)."""
        if self.degree == 1:
            return Scalar(self, (self.pi.coeffs[0],))  # Y = -c = c
        return Scalar(self, self._pad((self.base.zero, self.base.one)))

    def embed(self, value) -> Scalar:
        """Embed a base-field element into L."""
        raw = self.base.coerce(value)
        return Scalar(self, self._pad((raw,)))

    def add(self, a, b):
        bf = self.base
        return tuple(bf.add(x, y) for x, y in zip(a, b))

    def mul(self, a, b):
        prod = Poly(self.base, a) * Poly(self.base, b)
        return self._pad((prod % self.pi).coeffs)

    def inv(self, a):
        ap = Poly(self.base, a)
        if ap.is_zero:
            raise ZeroDivisionError("inverse of zero in the extension")
        # extended Euclid: u*a + v*pi = g
        r0, r1 = self.pi, ap
        s0, s1 = Poly.zero(self.base), Poly.one(self.base)
        while not r1.is_zero:
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 + q * s1
        if r0.degree != 0:
            raise NotInvertibleError(
                f"{render_poly(ap, 'a')} shares the factor "
                f"{r0} with the modulus"
            )
        u = s0.scale(self.base.inv(r0.coeffs[0]))
        return self._pad((u % self.pi).coeffs)

    def is_square(self, a) -> bool:
        if self.is_finite:
            return True
        raise UnsupportedFieldError(
            "square testing in extensions of a function field is not supported"
        )

    def sqrt(self, a):
        if not self.is_finite:
            raise UnsupportedFieldError(
                "square roots in extensions of a function field are not supported"
            )
        # |L| = 2^(m*d); Frobenius inverse is x -> x^(|L|/2).
        md = self.base.m * self.degree
        return self.pow(a, 1 << (md - 1))

    def frobenius_power(self, a, k: int):
        """a^(q^k) where q is the base field order (finite base only)."""
        if not isinstance(self.base, BinaryField):
            raise UnsupportedFieldError("Frobenius orbits need a finite base")
        out = a
        for _ in range(k):
            out = self.pow(out, self.base.order)
        return out

    def trace(self, a):
        """Tr_{L/k} as the matrix trace of multiplication by ``a``."""
        bf = self.base
        v = Poly(bf, a)
        acc = v.coeffs[0] if v.coeffs else bf.zero
        for j in range(1, self.degree):
            v = (v * Poly.x(bf)) % self.pi
            c = v.coeffs[j] if j < len(v.coeffs) else bf.zero
            acc = bf.add(acc, c)
        return acc

    def trace_scalar(self, a: Scalar) -> Scalar:
        return Scalar(self.base, self.trace(self.coerce(a)))

    def coerce(self, value):
        if isinstance(value, Scalar):
            if value.field == self:
                return value.raw
            if value.field == self.base:
                return self._pad((value.raw,))
            raise ValueError("scalar from an unrelated field")
        if isinstance(value, tuple) and len(value) == self.degree:
            return value
        if isinstance(value, int):
            return self._pad((self.base.coerce(value),))
        raise TypeError(f"cannot interpret {value!r} as an element of {self}")

    def render(self, a) -> str:
        return render_poly(Poly(self.base, a), "a")

    def sort_key(self, a):
        return (2, tuple(self.base.sort_key(c) for c in a))

    def __eq__(self, other):
        return (
            isinstance(other, SimpleExtension)
            and other.base == self.base
            and other.pi.coeffs == self.pi.coeffs
        )

    def __hash__(self):
        return hash(("SimpleExtension", self.base, self.pi.coeffs))

    def __repr__(self):
        return f"{self.base}[a]/({self.pi})"


class LocalAlgebra:
    """Quotient F[X]/((X^(2^n) - a)^m) over a coefficient field F.

    Elements are polynomials of degree < 2^n * m over F; the class of X
    is written gamma.  Powers of gamma are reduced by square-and-multiply
    against the modulus and memoized.
    """

    def __init__(self, coeff_field, a, n: int, m: int):
        if n < 0 or m < 1:
            raise ValueError("need n >= 0 and m >= 1")
        self.field = coeff_field
        self.a = coeff_field.coerce(a)
        self.n = n
        self.m = m
        root = Poly(
            coeff_field,
            (self.a,) + (coeff_field.zero,) * ((1 << n) - 1) + (coeff_field.one,),
        )
        self.modulus = root**m
        self.dim = (1 << n) * m
        self._powers = {}

    def reduce_power(self, i: int) -> Poly:
        """gamma^i in the power basis (degree < 2^n * m)."""
        if i < 0:
            raise ValueError("power must be nonnegative")
        if i < self.dim:
            return Poly.monomial(self.field, i)
        cached = self._powers.get(i)
        if cached is None:
            cached = pow_mod(Poly.x(self.field), i, self.modulus)
            self._powers[i] = cached
        return cached

    def shifted_basis_matrix(self):
        """Columns express (X^(2^n) + a)^j, j < m... only meaningful for
        n = 0: columns are (X + a)^j in the power basis."""
        if self.n != 0:
            raise ValueError("shifted basis is defined for n = 0 only")
        f = self.field
        shift = Poly(f, (self.a, f.one))
        cols = []
        p = Poly.one(f)
        for _ in range(self.m):
            cols.append([p.coeff(i) for i in range(self.m)])
            p = p * shift
        return [[cols[j][i] for j in range(self.m)] for i in range(self.m)]


def local_reduce_power(i: int, alg: LocalAlgebra) -> Poly:
    return alg.reduce_power(i)


def trace_orthonormal_basis(pi: Poly) -> list[Scalar]:
    """Basis (g_1..g_d) of L = k[Y]/(pi) with Tr(g_i g_j) = delta_ij.

    Runs the Gauss reduction on the trace Gram matrix in the power
    basis; a separable pi always yields full rank.
    """
    ext = SimpleExtension(pi)
    d = ext.degree
    base = pi.field
    gen = ext.gen().raw
    powers = [ext.one]
    for _ in range(2 * d - 2):
        powers.append(ext.mul(powers[-1], gen))
    gram = [
        [Scalar(base, ext.trace(powers[i + j])) for j in range(d)]
        for i in range(d)
    ]
    red = gauss_reduce(gram)
    if red.rank != d:
        raise ReductionFailedError(
            f"trace form of {pi} is degenerate (inseparable modulus?)"
        )
    basis = []
    for col in range(d):
        coeffs = tuple(red.p[row][col].raw for row in range(d))
        basis.append(Scalar(ext, coeffs))
    return basis
