"""Exact dense linear algebra over Fraction or GaussianRational entries.

Everything is plain Gaussian elimination on lists of lists.  Entries
must support +, -, *, / and be falsy exactly when zero; both stdlib
``Fraction`` and :class:`~irrtypes.scalars.GaussianRational` qualify.
Matrices here are small (ambient ranks and connection sizes), so no
attempt at pivoting strategies or sparsity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, TypeVar

from .errors import NotAUnit

F = TypeVar("F")
Matrix = List[List[F]]


def mat_copy(rows: Sequence[Sequence[F]]) -> Matrix:
    return [list(r) for r in rows]


def rref(rows: Sequence[Sequence[F]]) -> tuple:
    """Reduced row echelon form; returns (rows, pivot column list)."""
    m = mat_copy(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = next((i for i in range(row, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = m[row][col]
        m[row] = [x / inv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col]:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return m, pivots


def mat_rank(rows: Sequence[Sequence[F]]) -> int:
    return len(rref(rows)[1])


def in_row_span(rows: Sequence[Sequence[F]], vector: Sequence[F]) -> bool:
    """Whether ``vector`` lies in the row span; ``rows`` should be an RREF."""
    v = list(vector)
    echelon, pivots = rows if isinstance(rows, tuple) else rref(rows)
    for r, col in zip(echelon, pivots):
        if v[col]:
            factor = v[col]
            v = [a - factor * b for a, b in zip(v, r)]
    return not any(v)


def kernel_basis(rows: Sequence[Sequence[F]], ncols: int, one: F, zero: F) -> Matrix:
    """Basis of the right kernel, one vector per free column, deterministic."""
    echelon, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in zip(echelon, pivots):
            v[pc] = -r[fc]
        basis.append(v)
    return basis


def mat_mul(a: Sequence[Sequence[F]], b: Sequence[Sequence[F]]) -> Matrix:
    n, mid, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = None
            for t in range(mid):
                prod = a[i][t] * b[t][j]
                acc = prod if acc is None else acc + prod
            row.append(acc)
        out.append(row)
    return out


def sum_(items) -> F:
    acc = None
    for x in items:
        acc = x if acc is None else acc + x
    return acc


def mat_vec(a: Sequence[Sequence[F]], v: Sequence[F]) -> List[F]:
    return [sum_(a[i][t] * v[t] for t in range(len(v))) for i in range(len(a))]


def mat_identity(n: int, one: F, zero: F) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_inverse(rows: Sequence[Sequence[F]], one: F, zero: F) -> Matrix:
    """Inverse via Gauss-Jordan; raises ``NotAUnit`` when singular."""
    n = len(rows)
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    row = 0
    for col in range(n):
        pivot = next((i for i in range(row, n) if aug[i][col]), None)
        if pivot is None:
            raise NotAUnit("matrix is singular")
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = aug[row][col]
        aug[row] = [x / inv for x in aug[row]]
        for i in range(n):
            if i != row and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[row])]
        row += 1
    return [r[n:] for r in aug]


def char_poly(matrix: Sequence[Sequence[F]], one: F, zero: F) -> List[F]:
    """Characteristic polynomial coefficients [1, c1, .., cn] via Faddeev-LeVerrier.

    P(t) = t^n + c1 t^{n-1} + .. + cn, computed with exact divisions by
    integers (valid in characteristic zero).
    """
    n = len(matrix)
    coeffs = [one]
    m = mat_identity(n, one, zero)
    for k in range(1, n + 1):
        m = mat_mul(matrix, m)
        trace = sum_(m[i][i] for i in range(n))
        ck = trace / Fraction(-k)
        coeffs.append(ck)
        for i in range(n):
            m[i][i] = m[i][i] + ck
    return coeffs


def clear_denominators(vector: Sequence[Fraction]) -> List[Fraction]:
    """Scale a rational vector to primitive integer entries, sign-normalized."""
    from math import gcd, lcm

    denoms = [f.denominator for f in vector]
    scale = lcm(*denoms) if denoms else 1
    ints = [int(f * scale) for f in vector]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return [Fraction(x) for x in ints]
