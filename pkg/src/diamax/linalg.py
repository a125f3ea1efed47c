"""Small dense linear algebra that works on Fractions (exactly) or floats."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _is_zero(x, eps) -> bool:
    return x == 0 if eps == 0 else abs(x) <= eps


def rref(rows, eps=0):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        if eps == 0:
            p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        else:
            p = max(range(r, len(m)), key=lambda i: abs(m[i][c]))
            if abs(m[p][c]) <= eps:
                p = None
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and not _is_zero(m[i][c], 0):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, eps=0) -> int:
    return len(rref(rows, eps)[1])


def nullspace(rows, ncols, eps=0):
    """Basis of ``{x : r.x = 0 for r in rows}``."""
    red, pivots = rref(rows, eps) if rows else ([], [])
    zero = Fraction(0) if eps == 0 else 0.0
    one = Fraction(1) if eps == 0 else 1.0
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def solve(A, b, eps=0):
    """Solve the square system ``A x = b``; None when singular."""
    n = len(A)
    m = [list(A[i]) + [b[i]] for i in range(n)]
    for c in range(n):
        if eps == 0:
            p = next((i for i in range(c, n) if m[i][c] != 0), None)
        else:
            p = max(range(c, n), key=lambda i: abs(m[i][c]))
            if abs(m[p][c]) <= eps:
                p = None
        if p is None:
            return None
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        for i in range(c + 1, n):
            f = m[i][c]
            if f != 0:
                f = f / piv
                m[i] = [a - f * bb for a, bb in zip(m[i], m[c])]
    x = [None] * n
    for i in range(n - 1, -1, -1):
        s = m[i][n] - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / m[i][i]
    return tuple(x)


def integer_direction(v):
    """Scale a rational vector positively to coprime integers."""
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(Fraction(0) for _ in v), Fraction(0)
    return tuple(Fraction(x // g) for x in ints), Fraction(den, g)
