"""Small exact integer linear algebra: Smith normal form and lattice kernels.

Matrices are lists of lists of ints (rows).  Everything here is sized for
Cartan matrices (rank <= 8), so no effort is spent on performance.
"""

from __future__ import annotations

from fractions import Fraction


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows, inner, cols = len(a), len(b), len(b[0])
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def smith_normal_form(mat):
    """Return (d, left, right) with left*mat*right = d in Smith normal form.

    `left` and `right` are unimodular; `d` is diagonal (as a rectangular
    matrix) with d[i][i] dividing d[i+1][i+1].
    """
    a = [row[:] for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    left = identity(rows)
    right = identity(cols)

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        left[i] = [x - q * y for x, y in zip(left[i], left[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(rows):
            a[r][i] -= q * a[r][j]
        for r in range(cols):
            right[r][i] -= q * right[r][j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def col_swap(i, j):
        for r in range(rows):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(cols):
            right[r][i], right[r][j] = right[r][j], right[r][i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    t = 0
    while t < min(rows, cols):
        # find pivot: smallest nonzero |entry| in the trailing block
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        row_swap(t, pi)
        col_swap(t, pj)
        if a[t][t] < 0:
            negate_row(t)

        dirty = False
        for i in range(t + 1, rows):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                row_op(i, t, q)
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, cols):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                col_op(j, t, q)
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue

        # divisibility: a[t][t] must divide every trailing entry
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    row_op(t, i, -1)  # add row i to row t, then restart block
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            t += 1

    return a, left, right


def elementary_divisors(mat) -> list[int]:
    """Nontrivial diagonal entries (> 1 excluded? no: all nonzero) of the SNF."""
    d, _, _ = smith_normal_form(mat)
    out = []
    for i in range(min(len(d), len(d[0]) if d else 0)):
        if d[i][i] != 0:
            out.append(d[i][i])
    return out


def integer_kernel_basis(mat) -> list[list[int]]:
    """Basis of {x in Z^cols : mat @ x = 0}, via the SNF right transform."""
    if not mat:
        return []
    d, _, right = smith_normal_form(mat)
    cols = len(mat[0])
    rank = sum(1 for i in range(min(len(d), cols)) if d[i][i] != 0)
    basis = []
    for j in range(rank, cols):
        basis.append([right[i][j] for i in range(cols)])
    return basis


def rational_inverse(mat) -> list[list[Fraction]]:
    """Exact inverse of a square integer matrix via Gauss-Jordan over Q."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def solve_integer_congruences(vectors, modulus):
    """All q in (Z/modulus)^n with vectors @ q = 0 mod modulus.

    Returns a sorted list of tuples.  Used for enumerating centres of simply
    connected groups, where `vectors` is a Cartan matrix and q/modulus are the
    exponents of a coroot word.  Solved through the Smith normal form, so the
    enumeration size is the order of the solution group, not modulus**n.
    """
    import math
    from itertools import product as iproduct

    n = len(vectors[0]) if vectors else 0
    if n == 0:
        return [()]
    d, _, right = smith_normal_form(vectors)
    rank = sum(1 for i in range(min(len(d), n)) if d[i][i] != 0)
    # vectors @ q = L^-1 D R^-1 q; with w = R^-1 q mod modulus the system is
    # d_i * w_i = 0 mod modulus for i < rank, w_i free otherwise.
    choices = []
    for i in range(n):
        if i < rank:
            g = math.gcd(d[i][i], modulus)
            step = modulus // g
            choices.append([k * step for k in range(g)])
        else:
            choices.append(list(range(modulus)))
    sols = set()
    for w in iproduct(*choices):
        q = tuple(
            sum(right[i][j] * w[j] for j in range(n)) % modulus
            for i in range(n)
        )
        sols.add(q)
    return sorted(sols)
