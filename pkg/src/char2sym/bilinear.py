"""Symmetric bilinear forms over characteristic-2 fields as Gram matrices.

The central routine is ``gauss_reduce``: a modified Gauss reduction
that writes a symmetric form b with square diagonal as a sum of squares
of independent linear forms, b = sum_i phi_i . phi_i.  Two peel steps
alternate:

* a square diagonal pivot u^2 at position i peels one form
  phi = u*x_i + (terms of row i)/u and replaces b by its Schur
  complement (which again has square diagonal);
* when the remainder turns alternating, a nonzero off-diagonal pair
  (i, j) is rewritten together with the most recently peeled form into
  three new square forms (the rank-1 + hyperbolic identity).

In characteristic two a *nonzero alternating* form is never a sum of
squares of independent forms (the forms would sum to zero), so hitting
the alternating step with nothing peeled yet is an error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AlternatingFormError,
    NonSquarePivotError,
    ReductionFailedError,
)
from .fields import Scalar
from .linalg import Matrix, det, mat_inv, mat_mul, identity, require_symmetric, transpose


@dataclass(frozen=True)
class Classification:
    alternating: bool
    nondegenerate: bool
    diagonal_all_squares: bool


def classify(s: Matrix) -> Classification:
    """Basis-level classification of a symmetric Gram matrix."""
    require_symmetric(s)
    f = s[0][0].field
    diag = [s[i][i] for i in range(len(s))]
    return Classification(
        alternating=all(d.raw == f.zero for d in diag),
        nondegenerate=det(s).raw != f.zero,
        diagonal_all_squares=all(d.is_square() for d in diag),
    )


def is_unit_certifiable(s: Matrix) -> bool:
    """True when the form is congruent to the identity matrix:
    nonzero, non-degenerate, non-alternating, square diagonal."""
    require_symmetric(s)
    f = s[0][0].field
    if all(c.raw == f.zero for row in s for c in row):
        return False
    c = classify(s)
    return not c.alternating and c.nondegenerate and c.diagonal_all_squares


@dataclass
class ReductionResult:
    """Certificate S = U^t U with independent rows.

    ``u`` is r x n with linearly independent rows (the peeled forms);
    ``q`` completes it to an invertible n x n matrix (``q = u`` when
    r = n); ``p = q^{-1}``, whose columns are an orthogonal basis with
    Gram matrix diag(I_r, 0).
    """

    u: Matrix
    q: Matrix
    p: Matrix
    rank: int


def gauss_reduce(s: Matrix) -> ReductionResult:
    if not s:
        raise ValueError("empty Gram matrix")
    require_symmetric(s)
    n = len(s)
    f = s[0][0].field
    b = [[c.raw for c in row] for row in s]
    zero = f.zero
    done: list[list] = []

    while True:
        pivot = next((i for i in range(n) if b[i][i] != zero), None)
        if pivot is not None:
            _peel_square_pivot(b, pivot, f, done)
            continue
        pair = next(
            (
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if b[i][j] != zero
            ),
            None,
        )
        if pair is None:
            break
        if not done:
            raise AlternatingFormError(
                "form is alternating: no decomposition into independent "
                "squares exists"
            )
        _peel_alternating_pair(b, pair, f, done)

    u = [[Scalar(f, c) for c in row] for row in done]
    q = _complete_rows(done, n, f)
    p = mat_inv(q)
    _certify(s, u, f)
    return ReductionResult(u=u, q=q, p=p, rank=len(done))


def _peel_square_pivot(b, i, f, done):
    """Step for a nonzero diagonal entry: peel one square form."""
    n = len(b)
    zero = f.zero
    d = b[i][i]
    if not f.is_square(d):
        raise NonSquarePivotError(
            f"diagonal pivot {f.render(d)} is not a square"
        )
    u = f.sqrt(d)
    uinv = f.inv(u)
    done.append([f.mul(c, uinv) for c in b[i]])
    dinv = f.inv(d)
    row_i = list(b[i])
    for r in range(n):
        if r == i:
            continue
        c = b[r][i]
        if c == zero:
            continue
        factor = f.mul(c, dinv)
        br = b[r]
        for j in range(n):
            if row_i[j] != zero:
                br[j] = f.add(br[j], f.mul(factor, row_i[j]))
    b[i] = [zero] * n
    for r in range(n):
        b[r][i] = zero


def _peel_alternating_pair(b, pair, f, done):
    """Alternating step: fold the pair (i, j) into the last peeled form,
    producing three square forms in its place."""
    n = len(b)
    zero = f.zero
    i, j = pair
    c = b[i][j]
    cinv = f.inv(c)
    phi1 = done.pop()
    psi2 = [zero] * n
    psi3 = [zero] * n
    psi2[i] = c
    psi3[j] = f.one
    for u in range(n):
        if u in (i, j):
            continue
        psi2[u] = b[u][j]
        psi3[u] = f.mul(cinv, b[u][i])
    sum23 = [f.add(x, y) for x, y in zip(psi2, psi3)]
    done.append([f.add(x, y) for x, y in zip(phi1, psi2)])
    done.append([f.add(x, y) for x, y in zip(phi1, psi3)])
    done.append([f.add(x, y) for x, y in zip(phi1, sum23)])
    col_i = [b[u][i] for u in range(n)]
    col_j = [b[u][j] for u in range(n)]
    for u in range(n):
        if u in (i, j):
            continue
        bu = b[u]
        for v in range(n):
            if v in (i, j):
                continue
            cross = f.add(
                f.mul(col_j[u], col_i[v]), f.mul(col_i[u], col_j[v])
            )
            if cross != zero:
                bu[v] = f.add(bu[v], f.mul(cinv, cross))
    for u in range(n):
        b[u][i] = b[u][j] = zero
    b[i] = [zero] * n
    b[j] = [zero] * n


def _complete_rows(rows, n, f) -> Matrix:
    """Complete independent rows to an invertible matrix by greedily
    appending standard basis vectors."""
    zero, one = f.zero, f.one
    echelon: list[tuple[list, int]] = []

    def reduce(vec):
        vec = list(vec)
        for evec, piv in echelon:
            c = vec[piv]
            if c != zero:
                vec = [f.add(x, f.mul(c, y)) for x, y in zip(vec, evec)]
        return vec

    def insert(vec) -> bool:
        red = reduce(vec)
        piv = next((k for k, c in enumerate(red) if c != zero), None)
        if piv is None:
            return False
        cinv = f.inv(red[piv])
        if cinv != one:
            red = [f.mul(c, cinv) for c in red]
        echelon.append((red, piv))
        return True

    for row in rows:
        if not insert(row):
            raise ReductionFailedError(
                "peeled forms are linearly dependent"
            )
    out = [list(row) for row in rows]
    for k in range(n):
        if len(out) == n:
            break
        e = [one if idx == k else zero for idx in range(n)]
        if insert(e):
            out.append(e)
    return [[Scalar(f, c) for c in row] for row in out]


def _certify(s, u, f):
    n = len(s)
    zero = f.zero
    for i in range(n):
        for j in range(i, n):
            acc = zero
            for row in u:
                acc = f.add(acc, f.mul(row[i].raw, row[j].raw))
            if acc != s[i][j].raw:
                raise ReductionFailedError(
                    "internal error: U^t U does not reproduce the input"
                )


def congruence_check(s: Matrix, q: Matrix, mode: str = "qtq") -> bool:
    """Two certificate modes: ``qtq`` tests Q^t Q = S, ``qtsq`` tests
    Q^t S Q = I."""
    if mode == "qtq":
        target = s
        product = mat_mul(transpose(q), q)
    elif mode == "qtsq":
        field = s[0][0].field
        target = identity(field, len(s))
        product = mat_mul(mat_mul(transpose(q), s), q)
    else:
        raise ValueError(f"unknown congruence mode {mode!r}")
    return len(product) == len(target) and all(
        ra == rb for ra, rb in zip(product, target)
    )
