"""Linear forms on quotient algebras k[X]/(f) and their transfer Grams.

A ``TransferForm`` stores, per block k[X]/(f_i), the values of a linear
form s on the power basis 1, alpha, ..., alpha^(deg f_i - 1); the value
on any element is obtained by reducing modulo the block modulus first.
Cross-block products vanish (the product algebra multiplies
componentwise), so the Gram matrix of (x, y) -> s(xy) is block
diagonal.

The constructors build the specific forms whose transfer is hyperbolic
(``even_form``) or congruent to the identity (the others):

* ``even_form(g)``           g in k[X^2]:   s = dual of alpha^(deg-1)
* ``sep_local_form(a, m)``   on L[X]/((X-a)^m): s((gamma-a)^j) = 1
* ``sep_power_form(pi, m)``  on k[X]/(pi^m):   trace of the local form
* ``insep_local_form``       on L[X]/((X^(2^n)-a)^m), a not a square:
                             s = dual of gamma^(2^n) + dual of
                             gamma^(2^n m - 1)
* ``insep_power_form``       its trace composition on k[X]/(rho^m)
* ``square_block_form(g)``   g a square with g(0) != 0: s = dual of 1
* ``point_form``             evaluation at 0 on k[X]/(X)

``closed_form_value`` exposes the high-power value formulas (binomial
sums driven by parity) used as an independent cross-check of the
reduce-and-evaluate path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bilinear import classify, gauss_reduce, is_unit_certifiable
from .errors import (
    BadMultiplicityError,
    DescentFailureError,
    InvalidClaimError,
    InseparableCoreError,
    NotCoprimeError,
    NotEvenPolynomialError,
    NotMonicError,
    NotSquareShapeError,
    OutOfRangeError,
    ReductionFailedError,
    SquareParameterError,
    UnsupportedFieldError,
    ZeroConstantTermError,
)
from .extension import LocalAlgebra, SimpleExtension, trace_orthonormal_basis
from .fields import BinaryField, Scalar
from .linalg import Matrix, block_diagonal
from .poly import Poly, binom_parity, is_separable, poly_gcd

UNIT = "unit"
HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class FormBlock:
    """One block: a linear form on k[X]/(modulus) by power-basis values."""

    modulus: Poly
    values: tuple
    claim: str

    def __post_init__(self):
        if self.claim not in (UNIT, HYPERBOLIC):
            raise InvalidClaimError(f"unknown claim {self.claim!r}")
        if len(self.values) != self.modulus.degree:
            raise ValueError("values must cover the power basis")

    @property
    def field(self):
        return self.modulus.field

    @property
    def dimension(self) -> int:
        return self.modulus.degree

    def value_of(self, p: Poly) -> Scalar:
        """s applied to the class of p."""
        f = self.field
        r = p % self.modulus
        acc = f.zero
        for c, v in zip(r.coeffs, self.values):
            acc = f.add(acc, f.mul(c, v))
        return Scalar(f, acc)

    def power_values(self, count: int) -> list[Scalar]:
        """s(alpha^i) for i = 0..count-1."""
        f = self.field
        out = []
        p = Poly.one(f)
        x = Poly.x(f)
        for _ in range(count):
            acc = f.zero
            for c, v in zip(p.coeffs, self.values):
                acc = f.add(acc, f.mul(c, v))
            out.append(Scalar(f, acc))
            p = (p * x) % self.modulus
        return out

    def gram(self) -> Matrix:
        d = self.dimension
        s = self.power_values(2 * d - 1)
        return [[s[i + j] for j in range(d)] for i in range(d)]


@dataclass(frozen=True)
class TransferForm:
    blocks: tuple

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("a transfer form needs at least one block")
        f = self.blocks[0].field
        if any(b.field != f for b in self.blocks):
            raise ValueError("blocks over different fields")

    @property
    def field(self):
        return self.blocks[0].field

    @property
    def dimension(self) -> int:
        return sum(b.dimension for b in self.blocks)

    def moduli(self) -> list[Poly]:
        return [b.modulus for b in self.blocks]

    def gram(self) -> Matrix:
        return block_diagonal([b.gram() for b in self.blocks], self.field)

    @property
    def unit_claimed(self) -> bool:
        """Lemma-of-orthogonal-sums criterion on the block claims: at
        least one unit block, everything else unit or hyperbolic."""
        return any(b.claim == UNIT for b in self.blocks)

    def check_claims(self):
        """Verify every block's claim against its actual Gram matrix."""
        for b in self.blocks:
            g = b.gram()
            if b.claim == UNIT:
                if not is_unit_certifiable(g):
                    raise InvalidClaimError(
                        f"block {b.modulus} claims unit but is not"
                    )
            else:
                c = classify(g)
                if not (c.alternating and c.nondegenerate):
                    raise InvalidClaimError(
                        f"block {b.modulus} claims hyperbolic but is not"
                    )

    def to_json(self) -> dict:
        return {
            "blocks": [
                {
                    "modulus": str(b.modulus),
                    "values": [str(Scalar(b.field, v)) for v in b.values],
                    "claim": b.claim,
                }
                for b in self.blocks
            ]
        }

    @classmethod
    def from_json(cls, field, data: dict) -> "TransferForm":
        from .parsing import parse_poly, parse_scalar

        blocks = []
        for bd in data["blocks"]:
            modulus = parse_poly(field, bd["modulus"])
            values = tuple(
                parse_scalar(field, v).raw for v in bd["values"]
            )
            blocks.append(FormBlock(modulus, values, bd["claim"]))
        return cls(tuple(blocks))


def _single(modulus: Poly, values, claim: str) -> TransferForm:
    return TransferForm((FormBlock(modulus, tuple(values), claim),))


def point_form(field) -> TransferForm:
    """Evaluation at 0 on k[X]/(X); its transfer Gram is [1]."""
    return _single(Poly.x(field), (field.one,), UNIT)


def even_form(g: Poly) -> TransferForm:
    """Dual of the top power on k[X]/(g) for g in k[X^2]; hyperbolic."""
    field = g.field
    if not g.is_monic or g.degree < 2:
        raise NotMonicError("even_form needs a monic polynomial of degree >= 2")
    if not g.even_exponents_only():
        raise NotEvenPolynomialError(f"{g} has an odd-exponent term")
    values = [field.zero] * g.degree
    values[-1] = field.one
    return _single(g, values, HYPERBOLIC)


def square_block_form(g: Poly) -> TransferForm:
    """Dual of 1 on k[X]/(g) for g = h^2, h monic with h(0) != 0."""
    field = g.field
    if not g.is_monic or g.degree < 2:
        raise NotMonicError(
            "square_block_form needs a monic polynomial of degree >= 2"
        )
    if not g.even_exponents_only():
        raise NotSquareShapeError(f"{g} has an odd-exponent term")
    if not all(field.is_square(c) for c in g.coeffs[::2]):
        raise NotSquareShapeError(f"{g} has a non-square coefficient")
    if g.coeffs[0] == field.zero:
        raise ZeroConstantTermError("square_block_form needs g(0) != 0")
    values = [field.zero] * g.degree
    values[0] = field.one
    return _single(g, values, UNIT)


def sep_local_form(a: Scalar, m: int) -> TransferForm:
    """The all-ones form on L[X]/((X-a)^m) in the (gamma-a)^j basis.

    On the power basis the values are (1+a)^i: expanding gamma^i =
    (a + (gamma-a))^i and summing the shifted coefficients telescopes
    to a binomial sum.
    """
    if m < 1:
        raise BadMultiplicityError("multiplicity must be >= 1")
    field = a.field
    araw = field.coerce(a)
    one_plus_a = field.add(field.one, araw)
    values = []
    acc = field.one
    for _ in range(m):
        values.append(acc)
        acc = field.mul(acc, one_plus_a)
    modulus = Poly(field, (araw, field.one)) ** m
    return _single(modulus, values, UNIT)


def insep_local_form(a: Scalar, n: int, m: int) -> TransferForm:
    """Dual of gamma^(2^n) plus dual of gamma^(2^n m - 1) on
    L[X]/((X^(2^n)-a)^m); requires a to be a non-square."""
    if n < 1:
        raise ValueError("inseparability depth must be >= 1")
    if m < 2:
        raise BadMultiplicityError(
            "the inseparable local form needs multiplicity >= 2"
        )
    field = a.field
    araw = field.coerce(a)
    try:
        if field.is_square(araw):
            raise SquareParameterError(
                f"{field.render(araw)} is a square; the quotient is not local"
            )
    except UnsupportedFieldError:
        pass  # not decidable here; trusted (certified downstream)
    step = 1 << n
    dim = step * m
    values = [field.zero] * dim
    values[step] = field.one
    values[dim - 1] = field.one
    root = Poly(field, (araw,) + (field.zero,) * (step - 1) + (field.one,))
    return _single(root**m, values, UNIT)


def _power_form(pi: Poly, n: int, m: int) -> TransferForm:
    """Common trace-composition path for sep/insep power forms."""
    field = pi.field
    if not pi.is_monic or pi.degree < 1:
        raise NotMonicError("core polynomial must be monic of degree >= 1")
    if not is_separable(pi):
        raise InseparableCoreError(f"{pi} is not separable")
    d = pi.degree
    if d == 1:
        a = Scalar(field, pi.coeffs[0])
        trace = lambda raw: raw  # noqa: E731 — L = k
    else:
        ext = SimpleExtension(pi)
        a = ext.gen()
        trace = ext.trace
    if n == 0:
        local = sep_local_form(a, m)
    else:
        local = insep_local_form(a, n, m)
    block = local.blocks[0]
    dim = d * block.dimension
    values = [trace(s.raw) for s in block.power_values(dim)]
    modulus = pi.inflate(1 << n) ** m
    return _single(modulus, values, UNIT)


def sep_power_form(pi: Poly, m: int) -> TransferForm:
    """Trace composition of the local all-ones form on k[X]/(pi^m)."""
    if m < 1:
        raise BadMultiplicityError("multiplicity must be >= 1")
    return _power_form(pi, 0, m)


def insep_power_form(pi: Poly, n: int, m: int) -> TransferForm:
    """Trace composition of the inseparable local form on
    k[X]/(pi(X^(2^n))^m)."""
    if n < 1:
        raise ValueError("inseparability depth must be >= 1")
    if m < 2:
        raise BadMultiplicityError(
            "the inseparable construction needs multiplicity >= 2"
        )
    return _power_form(pi, n, m)


def direct_sum(forms) -> TransferForm:
    """Concatenate blocks; moduli must be pairwise coprime."""
    blocks = []
    for form in forms:
        blocks.extend(form.blocks)
    if not blocks:
        raise ValueError("empty direct sum")
    moduli = [b.modulus for b in blocks]
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            if poly_gcd(moduli[i], moduli[j]).degree > 0:
                raise NotCoprimeError(
                    f"block moduli {moduli[i]} and {moduli[j]} are not coprime"
                )
    return TransferForm(tuple(blocks))


# -- closed-form values -------------------------------------------------


def closed_form_value(kind: str, i: int, *, a=None, pi=None, n=0, m=1) -> Scalar:
    """High-power values s(alpha^i) by the binomial-parity formulas.

    Kinds: ``sep-local`` (a, m), ``insep-local`` (a, n, m),
    ``sep-power`` (pi, m), ``insep-power`` (pi, n, m).  Raises
    OutOfRangeError below the formula threshold (m, resp. 2^n * m).
    """
    if kind == "sep-local":
        field = a.field
        raw = _sep_value(field, field, field.coerce(a), m, i, lambda r: r)
        return Scalar(field, raw)
    if kind == "insep-local":
        field = a.field
        raw = _insep_value(field, field, field.coerce(a), n, m, i, lambda r: r)
        return Scalar(field, raw)
    if kind in ("sep-power", "insep-power"):
        field = pi.field
        if pi.degree == 1:
            coeff_field = field
            araw = pi.coeffs[0]
            trace = lambda r: r  # noqa: E731
        else:
            ext = SimpleExtension(pi)
            coeff_field = ext
            araw = ext.coerce(ext.gen())
            trace = ext.trace
        if kind == "sep-power":
            return Scalar(field, _sep_value(coeff_field, field, araw, m, i, trace))
        return Scalar(field, _insep_value(coeff_field, field, araw, n, m, i, trace))
    raise ValueError(f"unknown closed-form kind {kind!r}")


def _sep_value(field, out_field, a, m, i, trace):
    """Sum of C(i,j) * trace(a^(i-j)) over j < m; values land in out_field."""
    if m < 1:
        raise BadMultiplicityError("multiplicity must be >= 1")
    if i < m:
        raise OutOfRangeError(f"closed form needs i >= {m}")
    acc = out_field.zero
    power = field.pow(a, i - m + 1)
    for j in range(m - 1, -1, -1):
        # power = a^(i-j)
        if binom_parity(i, j):
            acc = out_field.add(acc, trace(power))
        if j:
            power = field.mul(power, a)
    return acc


def _insep_value(field, out_field, a, n, m, i, trace):
    if n < 1 or m < 2:
        raise BadMultiplicityError("need n >= 1 and m >= 2")
    step = 1 << n
    if i < step * m:
        raise OutOfRangeError(f"closed form needs i >= {step * m}")
    if (i + 1) % step == 0:
        u = (i + 1) // step  # u > m since i >= 2^n m
        if binom_parity(step * u - 1, step * m - 1):
            return trace(field.pow(a, u - m))
        return out_field.zero
    if i % step == 0 and (i // step) % 2 == 1:
        u = (i // step - 1) // 2
        eps = 0
        for j in range(step * (m - 1)):
            eps ^= binom_parity(2 * step * u, j)
        if eps:
            return trace(field.pow(a, 2 * u))
        return out_field.zero
    return out_field.zero


# -- CRT orthonormal basis (finite base fields) ---------------------------


def _poly_modular_inverse(u: Poly, modulus: Poly) -> Poly:
    r0, r1 = modulus, u % modulus
    s0, s1 = Poly.zero(u.field), Poly.one(u.field)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 + q * s1
    if r0.degree != 0:
        raise NotCoprimeError(f"{u} is not invertible modulo {modulus}")
    return (s0.scale(u.field.inv(r0.coeffs[0]))) % modulus


def crt_orthonormal_basis(pi: Poly, n: int, m: int) -> list[Poly]:
    """Orthonormal basis of k[X]/(pi(X^(2^n))^m) by conjugate lifting.

    Works over finite base fields, where the conjugates of a root are
    its Frobenius orbit: an orthonormal basis gamma_i of L = k[Y]/(pi)
    for the trace form and an orthonormal basis Q_j of the local
    algebra are combined, and each product gamma_i * Q_j is lifted by
    the Chinese Remainder Theorem to the unique polynomial congruent to
    its conjugates modulo every (X^(2^n) - sigma(a))^m.  The lift must
    descend to k (all coefficients Frobenius-fixed).
    """
    field = pi.field
    if not isinstance(field, BinaryField):
        raise UnsupportedFieldError(
            "conjugate lifting needs a finite base field; use the "
            "Gram reduction path over function fields"
        )
    if n < 0 or m < 1 or (n >= 1 and m < 2):
        raise BadMultiplicityError("need m >= 1, and m >= 2 when n >= 1")
    gammas = trace_orthonormal_basis(pi)
    ext: SimpleExtension = gammas[0].field
    d = ext.degree
    a = ext.gen()
    alg = LocalAlgebra(ext, a, n, m)
    if n == 0:
        local = sep_local_form(a, m)
    else:
        local = insep_local_form(a, n, m)
    lgram = local.blocks[0].gram()
    red = gauss_reduce(lgram)
    if red.rank != alg.dim:
        raise ReductionFailedError("local transfer form is degenerate")
    q_polys = [
        Poly(ext, tuple(red.p[row][col].raw for row in range(alg.dim)))
        for col in range(alg.dim)
    ]

    # CRT data over L[X]: moduli (X^(2^n) - a^(q^l))^m for l = 0..d-1.
    step = 1 << n
    moduli = []
    for l in range(d):
        conj = ext.frobenius_power(ext.coerce(a), l)
        root = Poly(ext, (conj,) + (ext.zero,) * (step - 1) + (ext.one,))
        moduli.append(root**m)
    total = Poly.one(ext)
    for mod_l in moduli:
        total = total * mod_l
    crt_terms = []
    for mod_l in moduli:
        cofactor = total // mod_l
        crt_terms.append(
            (cofactor * _poly_modular_inverse(cofactor, mod_l)) % total
        )

    out = []
    for q_poly in q_polys:
        for gamma in gammas:
            rep = q_poly.scale(gamma)
            lifted = Poly.zero(ext)
            for l, term in enumerate(crt_terms):
                conj_rep = Poly(
                    ext,
                    tuple(ext.frobenius_power(c, l) for c in rep.coeffs),
                )
                lifted = lifted + (conj_rep * term) % total
            base_coeffs = []
            for c in lifted.coeffs:
                if any(x != field.zero for x in c[1:]):
                    raise DescentFailureError(
                        "CRT lift has a coefficient outside the base field"
                    )
                base_coeffs.append(c[0])
            out.append(Poly(field, base_coeffs))
    return out
