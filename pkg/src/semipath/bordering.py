"""Matrix closure and Bellman solving for general square matrices.

Two routes:

* ``bordering_closure`` / ``bordering_solve`` grow the answer from the
  leading 1x1 corner, extending the closed submatrix by one row and column
  per step.  The running closure is kept and updated in place of being
  recomputed, which makes the total cost cubic in n.
* ``series_closure`` accumulates the partial sums I + A + A^2 + ... until
  they stop changing.  It is the brute-force oracle the structured solvers
  are verified against.

``enumerate_solutions`` exhaustively searches the Boolean carrier for every
solution of x = A x + b, which is the ground truth for least-solution
claims.
"""

import math

from .errors import (
    ClosureUndefined,
    EnumerationTooLarge,
    InstanceMismatch,
    NotStabilized,
    ShapeMismatch,
    UnsupportedInstance,
)
from .matrices import Matrix

#: relative-change threshold for detecting stabilization on float carriers
SERIES_REL_TOL = 1e-12

#: consecutive below-threshold terms required before a float series is
#: declared stable
SERIES_STABLE_RUN = 2

#: hard cap on exhaustive Boolean solution enumeration (2**n candidates)
ENUMERATION_MAX_N = 12


def _require_square(A):
    if not A.is_square:
        raise ShapeMismatch(f"need a square matrix, got {A.rows}x{A.cols}")


def _first_closure(sr, value):
    c = sr.closure(value)
    if c is None:
        raise ClosureUndefined(1, f"closure of the leading entry is undefined in {sr.name}")
    return c


def _border_extend(sr, C, g, h, a_next, k):
    """Extend the k-by-k closure C to cover one more row and column.

    The bordered matrix is [[A_k, g], [h^T, a_next]] and C is the closure of
    A_k (kept as a list of row lists).  Returns (C_next, p, u) where
    p = C g and u is the new corner entry; p and u are what the incremental
    Bellman solve needs.
    """
    sadd, smul = sr.add, sr.mul

    p = []
    for i in range(k):
        ci = C[i]
        acc = smul(ci[0], g[0])
        for j in range(1, k):
            acc = sadd(acc, smul(ci[j], g[j]))
        p.append(acc)

    q = []
    for j in range(k):
        acc = smul(h[0], C[0][j])
        for i in range(1, k):
            acc = sadd(acc, smul(h[i], C[i][j]))
        q.append(acc)

    s = smul(h[0], p[0])
    for i in range(1, k):
        s = sadd(s, smul(h[i], p[i]))

    u = sr.closure(sadd(s, a_next))
    if u is None:
        raise ClosureUndefined(
            k + 1, f"scalar closure undefined in {sr.name} while extending to size {k + 1}"
        )

    v = [smul(pi, u) for pi in p]
    w = [smul(u, qj) for qj in q]
    C_next = []
    for i in range(k):
        ci = C[i]
        vi = v[i]
        row = [sadd(ci[j], smul(vi, q[j])) for j in range(k)]
        row.append(vi)
        C_next.append(row)
    C_next.append(w + [u])
    return C_next, p, u


def bordering_closure(A):
    """Closure A* of a square matrix, built corner-outwards.

    Raises ClosureUndefined (with the failing subsystem size) when some step
    needs a scalar star that does not exist in the instance.  When it
    succeeds the result satisfies A* = I + A A* = I + A* A.
    """
    _require_square(A)
    sr = A.semiring
    rows = A.to_rows()
    n = A.rows
    C = [[_first_closure(sr, rows[0][0])]]
    for k in range(1, n):
        g = [rows[i][k] for i in range(k)]
        h = rows[k][:k]
        C, _, _ = _border_extend(sr, C, g, h, rows[k][k], k)
    return Matrix.from_rows(C, sr)


def bordering_solve(A, b):
    """Least-style solution x = A* b of x = A x + b, grown incrementally.

    ``b`` may be an n-by-1 matrix or a plain sequence; the result is an
    n-by-1 matrix over A's instance.  The closure of the leading submatrix
    is carried along, so the cost is the same cubic bound as
    ``bordering_closure``.
    """
    _require_square(A)
    sr = A.semiring
    if isinstance(b, Matrix):
        if b.semiring is not sr:
            raise InstanceMismatch("right-hand side belongs to a different instance")
        if b.cols != 1 or b.rows != A.rows:
            raise ShapeMismatch(f"right-hand side must be {A.rows}x1, got {b.rows}x{b.cols}")
        bs = b.to_flat()
    else:
        bs = list(b)
        if len(bs) != A.rows:
            raise ShapeMismatch(f"right-hand side must have length {A.rows}")

    sadd, smul = sr.add, sr.mul
    rows = A.to_rows()
    n = A.rows
    c = _first_closure(sr, rows[0][0])
    C = [[c]]
    x = [smul(c, bs[0])]
    for k in range(1, n):
        g = [rows[i][k] for i in range(k)]
        h = rows[k][:k]
        C, p, u = _border_extend(sr, C, g, h, rows[k][k], k)
        acc = smul(h[0], x[0])
        for i in range(1, k):
            acc = sadd(acc, smul(h[i], x[i]))
        x_next = smul(u, sadd(acc, bs[k]))
        x = [sadd(x[i], smul(p[i], x_next)) for i in range(k)]
        x.append(x_next)
    return Matrix.column(x, sr)


def _float_changed(old, new):
    if new == old:
        return False
    if math.isinf(new) or math.isnan(new):
        return True
    return abs(new - old) > SERIES_REL_TOL * abs(old)


def series_closure(A, max_terms=None):
    """Brute-force closure by truncated power sums.

    Partial sums S_m = I + A + ... + A^m are accumulated until they reach a
    fixed point (exact equality for exact carriers; for floating-point
    carriers, entrywise relative change below 1e-12 for two consecutive
    terms).  ``max_terms`` defaults to 4n + 50; exceeding it raises
    NotStabilized, the signal for a divergent star.
    """
    _require_square(A)
    sr = A.semiring
    n = A.rows
    if max_terms is None:
        max_terms = 4 * n + 50
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")

    S = Matrix.identity(n, sr)
    P = Matrix.identity(n, sr)
    stable_run = 0
    for _ in range(max_terms):
        P = P.mul(A)
        S_next = S.add(P)
        if sr.approximate:
            changed = any(
                _float_changed(S.data[i], S_next.data[i]) for i in range(n * n)
            )
            stable_run = 0 if changed else stable_run + 1
            if stable_run >= SERIES_STABLE_RUN:
                return S_next
        elif S_next.data == S.data:
            return S_next
        S = S_next
    raise NotStabilized(
        max_terms, f"partial closure sums still changing after {max_terms} terms"
    )


def enumerate_solutions(A, b):
    """All Boolean columns x with x = A x + b, by exhaustive search.

    Only defined over the Boolean instance and limited to n <= 12
    (2**n candidates).  Returns the solutions as n-by-1 matrices, in
    lexicographic order of their 0/1 entries.
    """
    _require_square(A)
    sr = A.semiring
    if sr.name != "boolean":
        raise UnsupportedInstance("exhaustive solution search needs the boolean instance")
    n = A.rows
    if n > ENUMERATION_MAX_N:
        raise EnumerationTooLarge(f"{n} > {ENUMERATION_MAX_N}: too many candidates")
    if isinstance(b, Matrix):
        bs = b.to_flat()
    else:
        bs = list(b)
    if len(bs) != n:
        raise ShapeMismatch(f"right-hand side must have length {n}")

    rows = A.to_rows()
    solutions = []
    for bits in range(1 << n):
        x = [(bits >> (n - 1 - i)) & 1 for i in range(n)]
        ok = True
        for i in range(n):
            ri = rows[i]
            acc = bs[i]
            for j in range(n):
                if ri[j] and x[j]:
                    acc = 1
                    break
            if acc != x[i]:
                ok = False
                break
        if ok:
            solutions.append(Matrix.column(x, sr))
    return solutions
