"""Exact dense linear algebra over the library's fields.

Matrices are plain lists of rows of ``Scalar``.  Everything here is
division-light and exact: the characteristic polynomial uses a
division-free expansion (no fraction growth over function fields), the
minimal polynomial tracks Krylov recurrences per basis vector and takes
the lcm of the resulting annihilators.
"""

from __future__ import annotations

from .errors import NotInvertibleError, NotSymmetricError
from .fields import Scalar
from .poly import Poly, poly_lcm

Matrix = list  # list[list[Scalar]]


def identity(field, n: int) -> Matrix:
    one, zero = Scalar(field, field.one), Scalar(field, field.zero)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def zero_matrix(field, rows: int, cols: int) -> Matrix:
    z = Scalar(field, field.zero)
    return [[z for _ in range(cols)] for _ in range(rows)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[_dot(row, col) for col in bt] for row in a]


def _dot(u, v) -> Scalar:
    f = u[0].field
    acc = f.zero
    for x, y in zip(u, v):
        acc = f.add(acc, f.mul(x.raw, y.raw))
    return Scalar(f, acc)


def mat_vec(a: Matrix, v) -> list:
    return [_dot(row, v) for row in a]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(
        a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n)
    )


def require_symmetric(a: Matrix):
    if any(len(row) != len(a) for row in a):
        raise NotSymmetricError("matrix is not square")
    if not is_symmetric(a):
        raise NotSymmetricError("matrix is not symmetric")


def block_diagonal(blocks: list[Matrix], field) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zero_matrix(field, n, n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[off + i][off : off + len(row)] = row
        off += len(b)
    return out


def det(a: Matrix) -> Scalar:
    """Determinant by Gaussian elimination (row swaps are sign-free
    in characteristic two)."""
    n = len(a)
    f = a[0][0].field if n else None
    if n == 0:
        raise ValueError("empty matrix")
    rows = [[c.raw for c in row] for row in a]
    acc = f.one
    for col in range(n):
        pivot = next(
            (r for r in range(col, n) if rows[r][col] != f.zero), None
        )
        if pivot is None:
            return Scalar(f, f.zero)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        p = rows[col][col]
        acc = f.mul(acc, p)
        pinv = f.inv(p)
        for r in range(col + 1, n):
            c = rows[r][col]
            if c == f.zero:
                continue
            factor = f.mul(c, pinv)
            for j in range(col, n):
                rows[r][j] = f.add(rows[r][j], f.mul(factor, rows[col][j]))
    return Scalar(f, acc)


def mat_inv(a: Matrix) -> Matrix:
    """Inverse by Gauss-Jordan elimination; exact."""
    n = len(a)
    f = a[0][0].field
    rows = [[c.raw for c in row] + [f.one if i == j else f.zero for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        pivot = next(
            (r for r in range(col, n) if rows[r][col] != f.zero), None
        )
        if pivot is None:
            raise NotInvertibleError("matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pinv = f.inv(rows[col][col])
        if pinv != f.one:
            rows[col] = [f.mul(c, pinv) for c in rows[col]]
        for r in range(n):
            if r == col:
                continue
            c = rows[r][col]
            if c == f.zero:
                continue
            rows[r] = [
                f.add(x, f.mul(c, y)) for x, y in zip(rows[r], rows[col])
            ]
    return [[Scalar(f, c) for c in row[n:]] for row in rows]


def companion(f_poly: Poly) -> Matrix:
    """Companion matrix: multiplication by the class of X in k[X]/(f)."""
    if not f_poly.is_monic or f_poly.degree < 1:
        raise ValueError("companion matrix needs a monic polynomial of degree >= 1")
    fld = f_poly.field
    n = f_poly.degree
    out = zero_matrix(fld, n, n)
    one = Scalar(fld, fld.one)
    for i in range(n - 1):
        out[i + 1][i] = one
    for i in range(n):
        out[i][n - 1] = f_poly.coeff(i)  # -c = c in characteristic two
    return out


def block_companion(moduli: list[Poly]) -> Matrix:
    field = moduli[0].field
    return block_diagonal([companion(m) for m in moduli], field)


def char_poly(a: Matrix) -> Poly:
    """Characteristic polynomial det(XI - M), division-free."""
    n = len(a)
    f = a[0][0].field if n else None
    if n == 0:
        raise ValueError("empty matrix")
    coeffs_high_first = _berkowitz(
        [[c.raw for c in row] for row in a], f
    )
    return Poly(f, reversed(coeffs_high_first))


def _berkowitz(a, f):
    """Coefficient vector of the characteristic polynomial, degree-first."""
    n = len(a)
    if n == 0:
        return [f.one]
    pivot = a[0][0]
    row = a[0][1:]
    col = [r[0] for r in a[1:]]
    inner = [r[1:] for r in a[1:]]
    prev = _berkowitz(inner, f)
    items = [f.one, pivot]
    w = col
    for _ in range(n - 1):
        items.append(_raw_dot(row, w, f))
        w = [_raw_dot(r, w, f) for r in inner]
    out = []
    for i in range(n + 1):
        acc = f.zero
        for j in range(max(0, i - len(items) + 1), min(i + 1, n)):
            acc = f.add(acc, f.mul(items[i - j], prev[j]))
        out.append(acc)
    return out


def _raw_dot(u, v, f):
    acc = f.zero
    for x, y in zip(u, v):
        acc = f.add(acc, f.mul(x, y))
    return acc


def vector_annihilator(a: Matrix, start: list) -> Poly:
    """Monic minimal polynomial of the Krylov cycle of ``start``."""
    n = len(a)
    f = start[0].field
    araw = [[c.raw for c in row] for row in a]
    rows = []  # (vector, polynomial, pivot index); pivot entries are 1
    v = [c.raw for c in start]
    p = Poly.one(f)
    for _ in range(n + 1):
        w = list(v)
        q = p
        for rvec, rpoly, piv in rows:
            c = w[piv]
            if c == f.zero:
                continue
            w = [f.add(x, f.mul(c, y)) for x, y in zip(w, rvec)]
            q = q + rpoly.scale(c)
        piv = next((i for i, c in enumerate(w) if c != f.zero), None)
        if piv is None:
            return q.monic()
        cinv = f.inv(w[piv])
        if cinv != f.one:
            w = [f.mul(c, cinv) for c in w]
            q = q.scale(cinv)
        rows.append((w, q, piv))
        v = [_raw_dot(r, w, f) for r in araw]
        p = Poly(f, (f.zero,) + q.coeffs)  # multiply by X
    raise AssertionError("Krylov iteration failed to terminate")


def min_poly(a: Matrix) -> Poly:
    """Monic minimal polynomial: lcm of basis-vector annihilators."""
    n = len(a)
    f = a[0][0].field
    out = Poly.one(f)
    for i in range(n):
        e = [Scalar(f, f.one if j == i else f.zero) for j in range(n)]
        out = poly_lcm(out, vector_annihilator(a, e))
        if out.degree == n:
            break
    return out


def render_matrix(a: Matrix) -> list[list[str]]:
    return [[str(c) for c in row] for row in a]


def matrix_from_strings(field, rows) -> Matrix:
    from .parsing import parse_scalar

    return [[parse_scalar(field, cell) for cell in row] for row in rows]
