"""Linear algebra over F_q and F_{q^m}.

Matrices are nested lists (row-major).  Over F_q the entries are ints in
0..q-1; over F_{q^m} they are :class:`FieldElement` instances sharing one
context.  Vectors over F_{q^m} are sequences of elements.
"""

from __future__ import annotations

from typing import Sequence

from . import kernels
from .errors import LengthMismatchError, SingularMatrixError
from .field import FieldCtx, FieldElement

__all__ = [
    "rank_q",
    "rank_q_vector",
    "expand",
    "contract",
    "rank_distance",
    "moore_matrix",
    "solve",
    "det",
    "rank_qm",
    "nullspace_q",
    "span_basis",
    "is_independent",
]


def rank_q(M: Sequence[Sequence[int]], q: int) -> int:
    """Rank of an integer matrix over the prime field F_q."""
    return kernels.default.rank_rows([list(row) for row in M], q)


def _ctx_of(v: Sequence[FieldElement]) -> FieldCtx | None:
    for x in v:
        return x.ctx
    return None


def rank_q_vector(v: Sequence[FieldElement]) -> int:
    """rank_q(expand(v)) without materializing the matrix."""
    ctx = _ctx_of(v)
    if ctx is None:
        return 0
    return ctx.kernels.rank_elems(ctx._T, [ctx(x).value for x in v])


def expand(v: Sequence[FieldElement], ctx: FieldCtx | None = None) -> list[list[int]]:
    """m x n matrix over F_q whose column i is the digit vector of v_i."""
    ctx = ctx or _ctx_of(v)
    if ctx is None:
        return []
    cols = [ctx(x).digits for x in v]
    return [[col[i] for col in cols] for i in range(ctx.m)]


def contract(M: Sequence[Sequence[int]], ctx: FieldCtx) -> list[FieldElement]:
    """Inverse of :func:`expand`: read each column as an element."""
    if len(M) != ctx.m:
        raise LengthMismatchError(f"expected {ctx.m} rows, got {len(M)}")
    n = len(M[0]) if M else 0
    return [ctx.vec_to_elem([M[i][j] % ctx.q for i in range(ctx.m)]) for j in range(n)]


def rank_distance(x: Sequence[FieldElement], y: Sequence[FieldElement]) -> int:
    """d_R(x, y) = rank_q(expand(x - y))."""
    if len(x) != len(y):
        raise LengthMismatchError(f"vectors of length {len(x)} and {len(y)}")
    return rank_q_vector([a - b for a, b in zip(x, y)])


def is_independent(v: Sequence[FieldElement]) -> bool:
    """True when the entries of v are linearly independent over F_q."""
    return rank_q_vector(v) == len(v)


def span_basis(v: Sequence[FieldElement]) -> list[FieldElement]:
    """A subset of v forming an F_q-basis of its span (greedy, order kept)."""
    basis: list[FieldElement] = []
    for x in v:
        if rank_q_vector(basis + [x]) > len(basis):
            basis.append(x)
    return basis


def moore_matrix(v: Sequence[FieldElement], k: int) -> list[list[FieldElement]]:
    """k x n matrix with entry (i, j) = v_j^(q^i), i = 0..k-1."""
    if k < 1:
        raise ValueError("a Moore matrix needs at least one row")
    rows = [list(v)]
    for _ in range(k - 1):
        rows.append([x.frobenius(1) for x in rows[-1]])
    return rows


def _echelon(A: list[list[FieldElement]]) -> tuple[list[list[FieldElement]], list[int], int]:
    """Row-reduce A in place. Returns (A, pivot columns, number of row swaps)."""
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    pivots: list[int] = []
    swaps = 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            swaps += 1
        inv = A[r][c].inv()
        for i in range(r + 1, nrows):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A, pivots, swaps


def rank_qm(A: Sequence[Sequence[FieldElement]]) -> int:
    """Rank over F_{q^m} by Gaussian elimination."""
    if not A:
        return 0
    _, pivots, _ = _echelon([list(row) for row in A])
    return len(pivots)


def det(A: Sequence[Sequence[FieldElement]]) -> FieldElement:
    n = len(A)
    if any(len(row) != n for row in A):
        raise LengthMismatchError("determinant of a non-square matrix")
    M, pivots, swaps = _echelon([list(row) for row in A])
    ctx = M[0][0].ctx
    if len(pivots) < n:
        return ctx.zero
    d = ctx.one
    for i in range(n):
        d = d * M[i][i]
    return -d if swaps % 2 else d


def solve(A: Sequence[Sequence[FieldElement]], b: Sequence[FieldElement]) -> list[FieldElement]:
    """The unique x with A x = b for square invertible A."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise LengthMismatchError("solve needs a square matrix")
    if len(b) != n:
        raise LengthMismatchError(f"right-hand side has length {len(b)}, expected {n}")
    if n == 0:
        return []
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    M, pivots, _ = _echelon(aug)
    if len(pivots) < n or pivots[-1] >= n:
        raise SingularMatrixError("matrix is singular")
    x: list[FieldElement] = [M[0][0].ctx.zero] * n
    for i in range(n - 1, -1, -1):
        acc = M[i][n]
        for j in range(i + 1, n):
            acc = acc - M[i][j] * x[j]
        x[i] = acc / M[i][i]
    return x


def nullspace_q(M: Sequence[Sequence[int]], q: int) -> list[list[int]]:
    """Basis of {x in F_q^cols : M x = 0} (reduced row echelon form)."""
    rows = [[x % q for x in row] for row in M]
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], q - 2, q)
        rows[r] = [(x * inv) % q for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        x = [0] * ncols
        x[fcol] = 1
        for i, pc in enumerate(pivots):
            x[pc] = (-rows[i][fcol]) % q
        basis.append(x)
    return basis
