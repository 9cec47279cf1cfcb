"""Small exact linear algebra toolkit over Fraction.

Matrices are lists of row lists.  Everything here is exact: Gaussian
elimination over Fraction, fraction-free Bareiss over the integers, and
an LDL^T split for positive definite rational matrices.  Nothing in this
module touches floating point; certification elsewhere depends on that.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "mat_fractions",
    "identity",
    "transpose",
    "mat_mul",
    "mat_vec",
    "vec_dot",
    "vec_add",
    "vec_sub",
    "vec_scale",
    "det",
    "bareiss_leading_minors",
    "rref",
    "nullspace",
    "solve",
    "invert",
    "gram_schmidt",
    "ldl",
    "solve_mod2",
]


def mat_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    bt = transpose(b)
    return [[vec_dot(row, col) for col in bt] for row in a]


def mat_vec(a, v):
    return [vec_dot(row, v) for row in a]


def vec_dot(u, v):
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def vec_add(u, v):
    return [x + y for x, y in zip(u, v)]


def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]


def vec_scale(c, u):
    return [c * x for x in u]


def det(a) -> Fraction:
    """Exact determinant by fraction Gaussian elimination with pivoting."""
    n = len(a)
    m = mat_fractions(a)
    result = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            result = -result
        pivot = m[col][col]
        result *= pivot
        for r in range(col + 1, n):
            factor = m[r][col] / pivot
            if factor:
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return result


def bareiss_leading_minors(a) -> list[int]:
    """Leading principal minors det(a[:k][:k]) for k = 1..n of an integer
    matrix, by fraction-free Bareiss elimination (no pivoting, so a zero
    leading minor stops with the remaining minors reported as computed;
    fine for definiteness checks, where a zero minor already decides).
    """
    n = len(a)
    m = [[int(x) for x in row] for row in a]
    minors = []
    prev = 1
    for k in range(n):
        pivot = m[k][k]
        minors.append(pivot)
        if pivot == 0:
            # definiteness is already refuted; report zeros for the rest
            minors.extend([0] * (n - k - 1))
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return minors


def rref(a):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    m = mat_fractions(a)
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][c]
        m[r] = [x / pivot for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def nullspace(a):
    """Basis of {x : a x = 0} as a list of vectors (empty if trivial)."""
    if not a:
        return []
    n_cols = len(a[0])
    reduced, pivots = rref(a)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -reduced[r][f]
        basis.append(v)
    return basis


def solve(a, b):
    """Unique solution of a square nonsingular system; ValueError otherwise."""
    n = len(a)
    aug = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(a, b)]
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [reduced[i][n] for i in range(n)]


def invert(a):
    n = len(a)
    aug = [list(map(Fraction, row)) + ident_row
           for row, ident_row in zip(a, identity(n))]
    reduced, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]


def gram_schmidt(vectors):
    """Orthogonalize (no normalization) with the standard inner product,
    dropping vectors that fall in the span of the previous ones.
    """
    basis = []
    for v in vectors:
        w = [Fraction(x) for x in v]
        for b in basis:
            coeff = vec_dot(w, b) / vec_dot(b, b)
            w = vec_sub(w, vec_scale(coeff, b))
        if any(w):
            basis.append(w)
    return basis


def ldl(a):
    """a = L D L^T for a symmetric positive definite rational matrix:
    returns (L unit lower triangular, d diagonal list).  Raises ValueError
    on a nonpositive pivot, which refutes positive definiteness.
    """
    n = len(a)
    L = identity(n)
    d = [Fraction(0)] * n
    for j in range(n):
        s = Fraction(a[j][j])
        for k in range(j):
            s -= d[k] * L[j][k] * L[j][k]
        if s <= 0:
            raise ValueError(f"pivot {j} is {s}; matrix is not positive definite")
        d[j] = s
        for i in range(j + 1, n):
            t = Fraction(a[i][j])
            for k in range(j):
                t -= d[k] * L[i][k] * L[j][k]
            L[i][j] = t / d[j]
    return L, d


def solve_mod2(a, b):
    """One solution of a x = b over GF(2), or None if inconsistent.

    Input entries are integers taken mod 2; free variables are set to 0.
    """
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    m = [[x & 1 for x in row] + [bi & 1] for row, bi in zip(a, b)]
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(n_rows):
            if i != r and m[i][c]:
                m[i] = [(x + y) & 1 for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n_rows):
        if m[i][n_cols]:
            return None
    x = [0] * n_cols
    for row_idx, c in enumerate(pivots):
        x[c] = m[row_idx][n_cols]
    return x
