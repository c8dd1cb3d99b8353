"""Polynomial factorization over GF(2^m) and factored-input validation.

Factorization runs in three stages: a characteristic-2 squarefree
decomposition (a vanishing derivative means the polynomial is a perfect
square, since the coefficient field is perfect), distinct-degree
splitting with iterated Frobenius powers, and equal-degree splitting by
the additive trace map T(u) = u + u^2 + ... + u^(2^(md-1)) (gcd(T(u), f)
separates the factors on which the trace of a random u vanishes).

Function-field inputs cannot be factored here; they arrive factored and
``validate_factored_input`` checks the claim structurally instead.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    NotCoprimeError,
    NotIrreducibleError,
    NotMonicError,
    ProductMismatchError,
    UnsupportedFieldError,
)
from .fields import BinaryField, Scalar
from .poly import Poly, inseparability_depth, poly_gcd, pow_mod

DEFAULT_SEED = 0xC2B2
EDF_RETRY_CAP = 64


@dataclass(frozen=True)
class FactorEntry:
    """One irreducible factor rho = pi(X^(2^depth)) with multiplicity."""

    pi: Poly
    depth: int
    multiplicity: int

    @property
    def rho(self) -> Poly:
        return self.pi.inflate(1 << self.depth)

    def __str__(self):
        return f"({self.rho})^{self.multiplicity}"


@dataclass(frozen=True)
class FactorDecomposition:
    field: object
    entries: tuple[FactorEntry, ...]
    unit: Scalar

    def product(self) -> Poly:
        out = Poly.constant(self.unit)
        for e in self.entries:
            out = out * e.rho ** e.multiplicity
        return out

    @property
    def degree(self) -> int:
        return sum(e.rho.degree * e.multiplicity for e in self.entries)

    def __str__(self):
        return " * ".join(str(e) for e in self.entries) or "1"


def _sorted_entries(entries) -> tuple[FactorEntry, ...]:
    return tuple(sorted(entries, key=lambda e: e.rho.sort_key()))


def squarefree_decomposition(f: Poly) -> dict[int, Poly]:
    """Map multiplicity -> monic squarefree part (perfect base field)."""
    out: dict[int, Poly] = {}
    _squarefree(f.monic(), 1, out)
    return out


def _squarefree(f: Poly, scale: int, out: dict[int, Poly]):
    if f.degree < 1:
        return
    d = f.derivative()
    if d.is_zero:
        _squarefree(f.sqrt(), 2 * scale, out)
        return
    c = poly_gcd(f, d)
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        z = w // y
        if z.degree > 0:
            out[i * scale] = z
        w = y
        c = c // y
        i += 1
    if c.degree > 0:
        _squarefree(c.sqrt(), 2 * scale, out)  # leftover multiplicities even


def _distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split monic squarefree f into (product of degree-d factors, d)."""
    field = f.field
    q = field.order
    out = []
    x = Poly.x(field)
    h = x
    v = f
    d = 0
    while v.degree > 2 * (d + 1) - 1:
        d += 1
        h = pow_mod(h, q, v)
        g = poly_gcd(h + x, v)
        if g.degree > 0:
            out.append((g, d))
            v = v // g
            h = h % v
    if v.degree > 0:
        out.append((v, v.degree))
    return out


def _equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Split a product of degree-d irreducibles via trace gcds."""
    if f.degree == d:
        return [f]
    field = f.field
    md = field.m * d
    for _ in range(EDF_RETRY_CAP):
        u = Poly(field, [rng.randrange(field.order) for _ in range(f.degree)])
        if u.degree < 1:
            continue
        acc = u
        s = u
        for _ in range(md - 1):
            s = (s * s) % f
            acc = acc + s
        g = poly_gcd(acc, f)
        if 0 < g.degree < f.degree:
            return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)
    raise NotIrreducibleError(
        f"equal-degree splitting of {f} failed after {EDF_RETRY_CAP} tries"
    )


def factor(f: Poly, seed: int = DEFAULT_SEED) -> FactorDecomposition:
    """Complete factorization of a monic polynomial over GF(2^m)."""
    field = f.field
    if not isinstance(field, BinaryField):
        raise UnsupportedFieldError(
            "factorization is only implemented over finite fields; "
            "pass the factorization explicitly instead"
        )
    if not f.is_monic or f.degree < 1:
        raise NotMonicError("factor() expects a monic polynomial of degree >= 1")
    rng = random.Random(seed)
    entries = []
    for mult, squarefree in sorted(squarefree_decomposition(f).items()):
        for part, d in _distinct_degree(squarefree):
            for irr in _equal_degree(part, d, rng):
                pi, depth = inseparability_depth(irr)
                entries.append(FactorEntry(pi, depth, mult))
    out = FactorDecomposition(field, _sorted_entries(entries), Scalar(field, field.one))
    if out.product() != f:
        raise AssertionError(f"factorization of {f} failed to verify")
    return out


def is_irreducible(f: Poly) -> bool:
    """Deterministic irreducibility test over GF(2^m)."""
    field = f.field
    if not isinstance(field, BinaryField):
        raise UnsupportedFieldError("irreducibility test needs a finite field")
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    if f.coeffs[0] == field.zero:  # divisible by X
        return False
    q = field.order
    x = Poly.x(field)
    frob = [x]  # frob[j] = X^(q^j) mod f
    for _ in range(n):
        frob.append(pow_mod(frob[-1], q, f))
    if frob[n] != x % f:
        return False
    for p in _prime_divisors(n):
        if poly_gcd(frob[n // p] + x, f).degree > 0:
            return False
    return True


def _prime_divisors(n: int):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def validate_factored_input(f: Poly, claimed) -> FactorDecomposition:
    """Check a claimed factorization of f and normalize it.

    ``claimed`` is a list of (polynomial, multiplicity) pairs.  Checks:
    monicity of f and all factors, pairwise coprimality, product equal
    to f, and separable-core extraction (depth and separability tags are
    re-derived rather than trusted).  Irreducibility of each factor is
    verified over finite fields and trusted over function fields.
    """
    field = f.field
    if isinstance(claimed, FactorDecomposition):
        claimed = [(e.rho, e.multiplicity) for e in claimed.entries]
    if not f.is_monic or f.degree < 1:
        raise NotMonicError(f"{f} is not monic of degree >= 1")
    pairs = []
    for rho, mult in claimed:
        if not rho.is_monic or rho.degree < 1:
            raise NotMonicError(f"claimed factor {rho} is not monic")
        if mult < 1:
            raise ValueError(f"multiplicity {mult} < 1 for factor {rho}")
        pairs.append((rho, mult))
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if poly_gcd(pairs[i][0], pairs[j][0]).degree > 0:
                raise NotCoprimeError(
                    f"claimed factors {pairs[i][0]} and {pairs[j][0]} "
                    "are not coprime"
                )
    product = Poly.one(field)
    for rho, mult in pairs:
        product = product * rho**mult
    if product != f:
        raise ProductMismatchError(
            f"claimed factors multiply to {product}, not {f}"
        )
    entries = []
    for rho, mult in pairs:
        pi, depth = inseparability_depth(rho)
        if isinstance(field, BinaryField) and not is_irreducible(rho):
            raise NotIrreducibleError(f"claimed factor {rho} is reducible")
        entries.append(FactorEntry(pi, depth, mult))
    return FactorDecomposition(
        field, _sorted_entries(entries), Scalar(field, field.one)
    )


def decomposition_for(f: Poly, factors_text: str | None = None, seed: int = DEFAULT_SEED) -> FactorDecomposition:
    """Factor f over a finite field or validate a supplied factorization."""
    if factors_text is not None:
        from .parsing import parse_factored

        return validate_factored_input(f, parse_factored(f.field, factors_text))
    if isinstance(f.field, BinaryField):
        return factor(f, seed=seed)
    raise UnsupportedFieldError(
        "function-field input requires an explicit factorization"
    )
