"""Dense two-phase simplex with Bland's rule.

The problems here are tiny (a handful of variables, tens to a few hundred
constraints), so a tableau over :class:`~fractions.Fraction` is fast enough
and gives exact optimal values. Float input is handled with the same code
and an absolute pivot tolerance.
"""
from __future__ import annotations

from fractions import Fraction

from .linalg import solve
from .scalar import TAU


class LPError(ArithmeticError):
    pass


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


def _pivot(T, basis, r, c):
    row = T[r]
    p = row[c]
    T[r] = row = [x / p for x in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f != 0:
                T[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _run(T, basis, allowed, eps):
    """Maximize the objective stored in the last row of ``T``.

    The last row holds reduced costs ``r_j`` (entering when ``r_j < 0``) and
    the current objective value in its last entry.
    """
    nrows = len(T) - 1
    while True:
        obj = T[-1]
        c = next((j for j in allowed if obj[j] < -eps), None)
        if c is None:
            return
        best = None
        for i in range(nrows):
            a = T[i][c]
            if a > eps:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] - eps or (
                    abs(ratio - best[0]) <= eps and basis[i] < basis[best[1]]
                ):
                    best = (ratio, i)
        if best is None:
            raise Unbounded("objective unbounded")
        _pivot(T, basis, best[1], c)


def maximize_standard(w, A, b, eps=0):
    """max ``w.u`` subject to ``A u = b``, ``u >= 0``. Returns the value."""
    return _solve_standard(w, A, b, eps)[0]


def _solve_standard(w, A, b, eps):
    n = len(A)
    m = len(w)
    zero = Fraction(0) if eps == 0 else 0.0
    one = Fraction(1) if eps == 0 else 1.0
    T = []
    for i in range(n):
        row = list(A[i]) + [zero] * n + [b[i]]
        if b[i] < 0:
            row = [-x for x in row]
        row[m + i] = one
        T.append(row)
    basis = [m + i for i in range(n)]

    # phase 1: maximize -(sum of artificials)
    obj = [zero] * (m + n + 1)
    for row in T:
        for j in range(m):
            obj[j] -= row[j]
        obj[-1] -= row[-1]
    T.append(obj)
    _run(T, basis, range(m + n), eps)
    if T[-1][-1] < -eps * max(1, n):
        raise Infeasible("no feasible point")
    T.pop()

    # drive remaining artificials out of the basis
    i = 0
    while i < len(T):
        if basis[i] >= m:
            c = next((j for j in range(m) if abs(T[i][j]) > eps), None)
            if c is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, c)
        i += 1

    T = [row[:m] + [row[-1]] for row in T]
    obj = [-x for x in w] + [zero]
    for i, bi in enumerate(basis):
        wb = w[bi]
        if wb != 0:
            obj = [o + wb * t for o, t in zip(obj, T[i])]
    T.append(obj)
    _run(T, basis, range(m), eps)
    return T[-1][-1], basis


def minimize(c, G, h, eps=None):
    """Optimal value of ``min c.z`` over ``G z <= h`` with ``z`` free.

    Solved through the dual ``max -h.u`` s.t. ``G^T u = -c``, ``u >= 0``,
    which has only ``len(c)`` equality rows.
    """
    if eps is None:
        exact = all(isinstance(x, Fraction) for x in c) and all(
            isinstance(x, Fraction) for row in G for x in row
        ) and all(isinstance(x, Fraction) for x in h)
        eps = 0 if exact else TAU
    if eps == 0:
        c = [Fraction(x) for x in c]
        G = [[Fraction(x) for x in row] for row in G]
        h = [Fraction(x) for x in h]
        value = _certified(c, G, h)
        if value is not None:
            return value
    return _dual_simplex(c, G, h, eps)


def _certified(c, G, h):
    """Exact optimum from a basis found in floating point, or None.

    The float solve proposes ``len(c)`` tight rows. Solving them exactly
    gives a primal point ``z`` and dual weights ``u``; if ``z`` is feasible
    and ``u >= 0`` the pair is optimal by weak duality, so the value is exact.
    Anything else falls back to the rational simplex.
    """
    n = len(c)
    try:
        _, basis = _solve_standard(
            [-float(x) for x in h],
            [[float(G[j][i]) for j in range(len(G))] for i in range(n)],
            [-float(x) for x in c], TAU)
    except LPError:
        return None
    if len(basis) != n:
        return None
    rows = [G[j] for j in basis]
    z = solve(rows, [h[j] for j in basis])
    if z is None or any(sum(a * x for a, x in zip(g, z)) > hj for g, hj in zip(G, h)):
        return None
    u = solve([list(col) for col in zip(*rows)], [-x for x in c])
    if u is None or any(x < 0 for x in u):
        return None
    return sum(a * x for a, x in zip(c, z))


def _dual_simplex(c, G, h, eps):
    n = len(c)
    A = [[G[j][i] for j in range(len(G))] for i in range(n)]
    w = [-x for x in h]
    b = [-x for x in c]
    try:
        return maximize_standard(w, A, b, eps)
    except Infeasible:
        raise Unbounded("primal unbounded or infeasible") from None
    except Unbounded:
        raise Infeasible("primal infeasible") from None
