"""Top-level pipeline: from a factored monic polynomial to a symmetric
matrix with that minimal (and characteristic) polynomial.

Realizability: f fails exactly when it is a product of pairwise
distinct inseparable irreducibles.  Otherwise a block plan is drawn up:

* case ``separable-present``: separable factors with odd multiplicity
  host unit-form blocks; everything else (even-multiplicity separable
  factors and all inseparable ones) is multiplied into an even
  polynomial g carrying a hyperbolic block.  When every separable
  multiplicity is even, one separable factor is kept as the unit block
  (the construction needs at least one, and works for any multiplicity).
* case ``all-inseparable``: the first inseparable factor with
  multiplicity >= 2 hosts the unit block; the rest go into g.

The direct sum of the block forms has a Gram matrix congruent to the
identity; Gauss reduction yields Q with Q^t Q = S, and conjugating the
block companion matrix gives the symmetric result M = Q C Q^{-1}.
Every realization is verified before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .bilinear import gauss_reduce
from .errors import (
    CertificateFailureError,
    NotIrreducibleError,
    NotRealizableError,
    PlanInvariantError,
    ProductMismatchError,
)
from .factor import DEFAULT_SEED, FactorDecomposition, FactorEntry, decomposition_for
from .fields import Scalar
from .linalg import (
    Matrix,
    block_companion,
    block_diagonal,
    char_poly,
    is_symmetric,
    mat_inv,
    mat_mul,
    min_poly,
)
from .poly import Poly
from .transfer import (
    TransferForm,
    direct_sum,
    even_form,
    insep_power_form,
    point_form,
    sep_power_form,
    square_block_form,
)

CASE_SEPARABLE = "separable-present"
CASE_INSEPARABLE = "all-inseparable"


@dataclass(frozen=True)
class RealizationPlan:
    case: str
    unit_entries: tuple[FactorEntry, ...]
    even_poly: Poly | None
    use_square_block: bool = False

    def moduli(self) -> list[Poly]:
        out = [e.rho ** e.multiplicity for e in self.unit_entries]
        if self.even_poly is not None:
            out.append(self.even_poly)
        return out


@dataclass(frozen=True)
class Certificate:
    symmetric: bool
    min_poly_ok: bool
    char_poly_ok: bool

    @property
    def ok(self) -> bool:
        return self.symmetric and self.min_poly_ok and self.char_poly_ok


@dataclass
class Realization:
    f: Poly
    case: str
    plan: RealizationPlan | None
    form: TransferForm
    companion: Matrix
    q: Matrix
    matrix: Matrix
    min_polynomial: Poly
    char_polynomial: Poly
    certificate: Certificate
    eigen: bool = False
    eigen_needs_extra_dimension: bool = dc_field(default=False)

    @property
    def size(self) -> int:
        return len(self.matrix)

    def to_json(self) -> dict:
        from .linalg import render_matrix

        return {
            "field": self.f.field.spec_string(),
            "f": str(self.f),
            "case": self.case,
            "eigen": self.eigen,
            "eigen_needs_extra_dimension": self.eigen_needs_extra_dimension,
            "size": self.size,
            "blocks": self.form.to_json()["blocks"],
            "C": render_matrix(self.companion),
            "Q": render_matrix(self.q),
            "M": render_matrix(self.matrix),
            "min_poly": str(self.min_polynomial),
            "char_poly": str(self.char_polynomial),
            "certificate": {
                "symmetric": self.certificate.symmetric,
                "min_poly_ok": self.certificate.min_poly_ok,
                "char_poly_ok": self.certificate.char_poly_ok,
            },
        }


def decide(fd: FactorDecomposition) -> bool:
    """True when fd's polynomial is the minimal polynomial of some
    symmetric matrix: not all factors inseparable with multiplicity 1."""
    return not all(
        e.depth >= 1 and e.multiplicity == 1 for e in fd.entries
    )


def non_realizability_witness(fd: FactorDecomposition) -> str:
    parts = ", ".join(str(e.rho) for e in fd.entries)
    return (
        f"product of pairwise distinct inseparable irreducibles: {parts}"
    )


def plan(fd: FactorDecomposition, square_block: bool = False) -> RealizationPlan:
    if not decide(fd):
        raise NotRealizableError(non_realizability_witness(fd))
    separable = [e for e in fd.entries if e.depth == 0]
    inseparable = [e for e in fd.entries if e.depth >= 1]
    if separable:
        case = CASE_SEPARABLE
        units = [e for e in separable if e.multiplicity % 2 == 1]
        if units:
            rest = [e for e in separable if e.multiplicity % 2 == 0]
        else:
            # All separable multiplicities even: keep one unit block
            # anyway (the power form has no parity constraint).
            units = [separable[0]]
            rest = separable[1:]
        rest += inseparable
    else:
        case = CASE_INSEPARABLE
        host = next(e for e in inseparable if e.multiplicity >= 2)
        units = [host]
        rest = [e for e in inseparable if e is not host]
    g = Poly.one(fd.field)
    for e in rest:
        g = g * e.rho ** e.multiplicity
    even = None
    if g.degree > 0:
        if not g.even_exponents_only():
            raise PlanInvariantError(
                f"residual polynomial {g} is not in k[X^2]"
            )
        even = g
    use_square = False
    if square_block and even is not None:
        field = fd.field
        use_square = (
            even.coeffs[0] != field.zero
            and all(field.is_square(c) for c in even.coeffs[::2])
        )
    return RealizationPlan(case, tuple(units), even, use_square)


def _build_form(p: RealizationPlan) -> TransferForm:
    forms = []
    for e in p.unit_entries:
        if e.depth == 0:
            forms.append(sep_power_form(e.pi, e.multiplicity))
        else:
            forms.append(insep_power_form(e.pi, e.depth, e.multiplicity))
    if p.even_poly is not None:
        if p.use_square_block:
            forms.append(square_block_form(p.even_poly))
        else:
            forms.append(even_form(p.even_poly))
    return direct_sum(forms)


def _orthonormalize(form: TransferForm, paper_pairing: bool) -> Matrix:
    """Rows of the returned Q are the peeled forms; Q^t Q = gram."""
    field = form.field
    if not paper_pairing or len(form.blocks) == 1:
        red = gauss_reduce(form.gram())
        if red.rank != form.dimension:
            raise CertificateFailureError(
                "assembled transfer form is degenerate"
            )
        return red.q
    # Per-block reduction; a trailing hyperbolic block is paired with
    # the last unit block (a hyperbolic block alone has no orthonormal
    # basis).
    blocks = list(form.blocks)
    groups: list[tuple] = []
    if blocks[-1].claim == "hyperbolic":
        groups = [(b,) for b in blocks[:-2]] + [tuple(blocks[-2:])]
    else:
        groups = [(b,) for b in blocks]
    pieces = []
    for group in groups:
        sub = TransferForm(tuple(group))
        red = gauss_reduce(sub.gram())
        if red.rank != sub.dimension:
            raise CertificateFailureError("block group is degenerate")
        pieces.append(red.q)
    return block_diagonal(pieces, field)


def _assemble(
    f: Poly,
    case: str,
    the_plan: RealizationPlan | None,
    form: TransferForm,
    expected: Poly,
    paper_pairing: bool,
    eigen: bool,
    extra_dim: bool,
) -> Realization:
    form.check_claims()
    q = _orthonormalize(form, paper_pairing)
    c = block_companion(form.moduli())
    m = mat_mul(mat_mul(q, c), mat_inv(q))
    mu = min_poly(m)
    sym_ok = is_symmetric(m)
    mu_ok = mu == expected
    chi = char_poly(m)  # independent of the Krylov path
    chi_ok = chi == expected
    cert = Certificate(sym_ok, mu_ok, chi_ok)
    if not cert.ok:
        raise CertificateFailureError(
            f"verification failed for {f}: symmetric={sym_ok}, "
            f"min poly={mu}, char poly={chi}"
        )
    return Realization(
        f=f,
        case=case,
        plan=the_plan,
        form=form,
        companion=c,
        q=q,
        matrix=m,
        min_polynomial=mu,
        char_polynomial=chi,
        certificate=cert,
        eigen=eigen,
        eigen_needs_extra_dimension=extra_dim,
    )


def realize(
    f: Poly,
    fd: FactorDecomposition | None = None,
    *,
    paper_pairing: bool = False,
    square_block: bool = False,
    seed: int = DEFAULT_SEED,
) -> Realization:
    """Symmetric matrix M with minimal = characteristic polynomial f."""
    if fd is None:
        fd = decomposition_for(f, seed=seed)
    elif fd.product() != f:
        raise ProductMismatchError(
            "factor decomposition does not multiply back to f"
        )
    if not decide(fd):
        raise NotRealizableError(non_realizability_witness(fd))
    the_plan = plan(fd, square_block=square_block)
    form = _build_form(the_plan)
    return _assemble(
        f, the_plan.case, the_plan, form, f, paper_pairing, False, False
    )


def realize_eigen(
    f: Poly,
    fd: FactorDecomposition | None = None,
    *,
    paper_pairing: bool = False,
    seed: int = DEFAULT_SEED,
) -> Realization:
    """Symmetric matrix admitting a root of irreducible f as eigenvalue.

    Separable f: size deg(f) via ``realize``.  Inseparable f: size
    deg(f) + 1 with minimal and characteristic polynomial X*f; no
    symmetric matrix of size deg(f) works in that case, which the
    result records.
    """
    if fd is None:
        fd = decomposition_for(f, seed=seed)
    if len(fd.entries) != 1 or fd.entries[0].multiplicity != 1:
        raise NotIrreducibleError(
            "eigenvalue mode expects an irreducible polynomial"
        )
    if fd.product() != f:
        raise ProductMismatchError(
            "factor decomposition does not multiply back to f"
        )
    entry = fd.entries[0]
    if entry.depth == 0:
        out = realize(f, fd, paper_pairing=paper_pairing, seed=seed)
        out.eigen = True
        return out
    form = direct_sum([point_form(f.field), even_form(f)])
    expected = Poly.x(f.field) * f
    return _assemble(
        f, CASE_INSEPARABLE, None, form, expected, paper_pairing, True, True
    )


@dataclass(frozen=True)
class VerifyReport:
    mode: str
    symmetric: bool
    min_polynomial: Poly
    char_polynomial: Poly
    matches: bool

    @property
    def ok(self) -> bool:
        return self.symmetric and self.matches


def verify(matrix: Matrix, f: Poly, mode: str = "minpoly") -> VerifyReport:
    """Check a matrix against a target polynomial.

    Modes: ``minpoly`` (min poly equals f), ``charpoly`` (char poly
    equals f), ``eigen`` (f divides the char poly).
    """
    if any(len(row) != len(matrix) for row in matrix):
        raise ValueError("matrix is not square")
    sym = is_symmetric(matrix)
    mu = min_poly(matrix)
    chi = char_poly(matrix)
    if mode == "minpoly":
        matches = mu == f
    elif mode == "charpoly":
        matches = chi == f
    elif mode == "eigen":
        matches = not chi.is_zero and (chi % f).is_zero
    else:
        raise ValueError(f"unknown verify mode {mode!r}")
    return VerifyReport(mode, sym, mu, chi, matches)
