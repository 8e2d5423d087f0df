"""Small exact linear algebra over the rationals.

Vectors are tuples of Fractions, matrices are tuples of row vectors.
Everything here is elimination-based and exact; nothing ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def vec(entries: Iterable) -> Vec:
    return tuple(Fraction(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> Mat:
    return tuple(vec(r) for r in rows)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), ZERO)


def add(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    return tuple(a - b for a, b in zip(x, y))


def neg(x: Sequence[Fraction]) -> Vec:
    return tuple(-a for a in x)


def scale(c: Fraction, x: Sequence[Fraction]) -> Vec:
    return tuple(c * a for a in x)


def matvec(m: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Vec:
    return tuple(dot(row, x) for row in m)


def transpose(m: Sequence[Sequence[Fraction]]) -> Mat:
    return tuple(tuple(col) for col in zip(*m))


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Mat:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def identity(n: int) -> Mat:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of the listed row vectors, by fraction-free-enough Gaussian elimination."""
    work = [list(map(Fraction, r)) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = ONE / work[r][c]
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def invert(m: Sequence[Sequence[Fraction]]) -> Mat:
    """Inverse of a square matrix; raises ValueError when singular."""
    n = len(m)
    work = [list(map(Fraction, row)) + [ONE if i == j else ZERO for j in range(n)]
            for i, row in enumerate(m)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        work[c], work[pivot] = work[pivot], work[c]
        inv = ONE / work[c][c]
        work[c] = [inv * x for x in work[c]]
        for i in range(n):
            if i != c and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return tuple(tuple(row[n:]) for row in work)


def solve_columns(columns: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Vec | None:
    """Exact coefficients c with sum c_i * columns[i] = target, or None if inconsistent.

    The columns may be an overdetermined spanning set of a subspace; when the
    system is underdetermined the free coefficients are set to zero.
    """
    ncols = len(columns)
    nrows = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(nrows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = ONE / aug[r][c]
        aug[r] = [inv * x for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    out = [ZERO] * ncols
    for row, col in pivots:
        out[col] = aug[row][ncols]
    return tuple(out)


def extend_to_basis(vectors: Sequence[Vec], dim: int) -> Mat:
    """Complete an independent family to a basis of Q^dim with standard basis vectors."""
    basis = [vec(v) for v in vectors]
    for j in range(dim):
        candidate = tuple(ONE if i == j else ZERO for i in range(dim))
        if rank(basis + [candidate]) > len(basis):
            basis.append(candidate)
        if len(basis) == dim:
            break
    if len(basis) != dim:
        raise ValueError("family does not extend to a basis")
    return tuple(basis)
