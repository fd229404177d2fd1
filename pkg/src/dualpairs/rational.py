"""Exact linear algebra over the rationals.

Matrices are lists of lists of Fraction, vectors are flat lists of Fraction.
All routines tolerate zero-sized operands so that empty blocks (trivial
kernels, zero multiplicity spaces) flow through block constructions.
"""

from __future__ import annotations

from fractions import Fraction

Mat = list
Vec = list


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def mat(rows) -> Mat:
    return [[frac(x) for x in row] for row in rows]


def zeros(m: int, n: int) -> Mat:
    return [[Fraction(0)] * n for _ in range(m)]


def eye(n: int) -> Mat:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def shape(a: Mat) -> tuple:
    return (len(a), len(a[0]) if a else 0)


def copy_mat(a: Mat) -> Mat:
    return [row[:] for row in a]


def transpose(a: Mat) -> Mat:
    m, n = shape(a)
    return [[a[i][j] for i in range(m)] for j in range(n)]


def add(a: Mat, b: Mat) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def neg(a: Mat) -> Mat:
    return [[-x for x in row] for row in a]


def scal(c, a: Mat) -> Mat:
    c = frac(c)
    return [[c * x for x in row] for row in a]


def mul(a: Mat, b: Mat) -> Mat:
    m, k = shape(a)
    k2, n = shape(b)
    if k != k2:
        raise ValueError(f"shape mismatch {shape(a)} x {shape(b)}")
    bt = transpose(b)
    out = zeros(m, n)
    for i in range(m):
        ai = a[i]
        oi = out[i]
        for j in range(n):
            bj = bt[j]
            s = Fraction(0)
            for t in range(k):
                x = ai[t]
                if x:
                    s += x * bj[t]
            oi[j] = s
    return out


def mat_vec(a: Mat, v: Vec) -> Vec:
    return [sum((x * y for x, y in zip(row, v) if x), Fraction(0)) for row in a]


def matpow(a: Mat, k: int) -> Mat:
    n = len(a)
    out = eye(n)
    for _ in range(k):
        out = mul(out, a)
    return out


def commutator(a: Mat, b: Mat) -> Mat:
    return sub(mul(a, b), mul(b, a))


def kron(a: Mat, b: Mat) -> Mat:
    ma, na = shape(a)
    mb, nb = shape(b)
    out = zeros(ma * mb, na * nb)
    for i in range(ma):
        for j in range(na):
            x = a[i][j]
            if not x:
                continue
            for k in range(mb):
                for l in range(nb):
                    out[i * mb + k][j * nb + l] = x * b[k][l]
    return out


def hstack(a: Mat, b: Mat) -> Mat:
    if not a:
        return copy_mat(b)
    if not b:
        return copy_mat(a)
    return [ra + rb for ra, rb in zip(a, b)]


def vstack(a: Mat, b: Mat) -> Mat:
    return copy_mat(a) + copy_mat(b)


def block_diag(*mats: Mat) -> Mat:
    ms = [shape(m)[0] for m in mats]
    ns = [shape(m)[1] for m in mats]
    out = zeros(sum(ms), sum(ns))
    ro, co = 0, 0
    for blk, m, n in zip(mats, ms, ns):
        for i in range(m):
            for j in range(n):
                out[ro + i][co + j] = blk[i][j]
        ro += m
        co += n
    return out


def is_zero_mat(a: Mat) -> bool:
    return all(not x for row in a for x in row)


def rref(a: Mat) -> tuple:
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    r = copy_mat(a)
    m, n = shape(r)
    pivots = []
    row = 0
    for col in range(n):
        if row >= m:
            break
        # pick the structurally simplest nonzero pivot in this column
        best = -1
        best_key = None
        for i in range(row, m):
            x = r[i][col]
            if x:
                key = (abs(x.numerator) != abs(x.denominator),
                       abs(x.numerator) + x.denominator)
                if best < 0 or key < best_key:
                    best, best_key = i, key
        if best < 0:
            continue
        r[row], r[best] = r[best], r[row]
        piv = r[row][col]
        if piv != 1:
            inv_p = Fraction(1) / piv
            r[row] = [x * inv_p for x in r[row]]
        rr = r[row]
        for i in range(m):
            if i != row and r[i][col]:
                f = r[i][col]
                ri = r[i]
                for j in range(col, n):
                    if rr[j]:
                        ri[j] -= f * rr[j]
        pivots.append(col)
        row += 1
    return r, pivots


def rank(a: Mat) -> int:
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a: Mat) -> list:
    """Basis of the right kernel, one vector per free column."""
    m, n = shape(a)
    if n == 0:
        return []
    if m == 0:
        return [[Fraction(1) if j == i else Fraction(0) for j in range(n)]
                for i in range(n)]
    r, pivots = rref(a)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(a: Mat, b: Vec):
    """One particular solution of a x = b, or None if inconsistent."""
    m, n = shape(a)
    aug = [row[:] + [bb] for row, bb in zip(a, b)]
    r, pivots = rref(aug)
    for i in range(m):
        if all(not x for x in r[i][:n]) and r[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, p in enumerate(pivots):
        if p == n:
            return None
        x[p] = r[i][n]
    return x


def inv(a: Mat) -> Mat:
    n = len(a)
    aug = hstack(a, eye(n))
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def sylvester_signature(b: Mat) -> tuple:
    """Inertia (pos, neg, zero) of a symmetric rational matrix.

    Symmetric congruence reduction; exact, no eigenvalues needed.
    """
    a = copy_mat(b)
    n = len(a)
    pos = negv = zero = 0
    idx = list(range(n))
    start = 0
    while start < n:
        # find a nonzero diagonal pivot
        dpiv = -1
        for i in range(start, n):
            if a[idx[i]][idx[i]]:
                dpiv = i
                break
        if dpiv < 0:
            # hyperbolic trick: a[j][k] != 0 off-diagonal makes a[j][j] nonzero
            found = False
            for i in range(start, n):
                for j in range(i + 1, n):
                    if a[idx[i]][idx[j]]:
                        ii, jj = idx[i], idx[j]
                        for t in range(n):
                            a[ii][t] += a[jj][t]
                        for t in range(n):
                            a[t][ii] += a[t][jj]
                        found = True
                        break
                if found:
                    break
            if not found:
                zero += n - start
                break
            continue
        idx[start], idx[dpiv] = idx[dpiv], idx[start]
        p = idx[start]
        d = a[p][p]
        if d > 0:
            pos += 1
        else:
            negv += 1
        for i in range(start + 1, n):
            q = idx[i]
            if a[q][p]:
                f = a[q][p] / d
                for t in range(n):
                    a[q][t] -= f * a[p][t]
                for t in range(n):
                    a[t][q] -= f * a[t][p]
        start += 1
    return pos, negv, zero
