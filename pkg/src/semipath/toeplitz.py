"""Quadratic-cost solvers for Bellman systems with symmetric Toeplitz matrix.

``durbin`` solves the self-generated system y = T y + r where the
right-hand side r also supplies the matrix: T has diagonal r0 and first-row
tail r[0:n-1] (n = len(r)).  ``levinson`` solves x = T x + b for an
arbitrary right-hand side by interleaving the same recursion.  Both extend
the solution of the leading k-by-k system to k+1 using only dot products
and reversed-index traversals, so the total operation count is quadratic
in n rather than the cubic cost of the general bordering route.

The pivot-like scalar beta_k = r0 + r[0:k] . y[0:k] can be either
recomputed from that dot product every step or updated in constant time
through the closure inverse of the previous beta.  The three policies:

* ``recompute``  (default) always uses the dot product.
* ``recursive``  always uses the constant-time update; requires an
  instance with multiplicative inverses and aborts if one is missing.
* ``fallback``   tries the constant-time update, silently recomputing at
  steps where the closure or its inverse does not exist.
"""

from dataclasses import dataclass

from .errors import (
    ClosureUndefined,
    InverseUndefined,
    ShapeMismatch,
    UnsupportedInstance,
)

VARIANT_RECOMPUTE = "recompute"
VARIANT_RECURSIVE = "recursive"
VARIANT_FALLBACK = "fallback"
VARIANTS = (VARIANT_RECOMPUTE, VARIANT_RECURSIVE, VARIANT_FALLBACK)


@dataclass
class SolveState:
    """Snapshot after one extension step.

    ``k`` is the number of leading entries solved so far; ``y`` solves the
    self-generated system of size k and, for the arbitrary-rhs solver,
    ``x`` solves the size-k system for b.  ``alpha`` is the newest entry of
    y, ``mu`` the newest entry of x, ``beta`` the pivot scalar that was
    starred to produce them.
    """

    k: int
    y: list
    alpha: object
    beta: object
    variant: str
    x: list = None
    mu: object = None


def _check_variant(semiring, variant):
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    if variant == VARIANT_RECURSIVE and not semiring.has_inverses:
        raise UnsupportedInstance(
            f"variant 'recursive' needs multiplicative inverses, "
            f"which {semiring.name} lacks; use 'recompute' or 'fallback'"
        )


def beta_update(semiring, beta_prev, alpha_prev):
    """Constant-time pivot update: beta + (beta*)^-1 * alpha * alpha.

    Returns None when the closure of ``beta_prev`` or its inverse is
    undefined; the caller chooses between recomputing and aborting.
    """
    bstar = semiring.closure(beta_prev)
    if bstar is None:
        return None
    inv = semiring.mul_inverse(bstar)
    if inv is None:
        return None
    alpha_sq = semiring.mul(alpha_prev, alpha_prev)
    return semiring.add(beta_prev, semiring.mul(inv, alpha_sq))


def _next_beta(sr, variant, r0, r, y, beta_prev, alpha_prev, k):
    if variant != VARIANT_RECOMPUTE:
        nb = beta_update(sr, beta_prev, alpha_prev)
        if nb is not None:
            return nb
        if variant == VARIANT_RECURSIVE:
            # the previous pivot's closure exists (it was starred to build
            # the current state), so None can only mean a missing inverse
            raise InverseUndefined(
                k + 1,
                f"recursive pivot update impossible at size {k + 1}: "
                f"closure inverse undefined in {sr.name}",
            )
        # fallback: recompute this step the direct way
    sadd, smul = sr.add, sr.mul
    acc = smul(r[0], y[0])
    for i in range(1, k):
        acc = sadd(acc, smul(r[i], y[i]))
    return sadd(r0, acc)


def _star(sr, beta, k):
    bstar = sr.closure(beta)
    if bstar is None:
        raise ClosureUndefined(
            k, f"pivot closure undefined in {sr.name} at size {k}"
        )
    return bstar


def durbin_steps(semiring, r0, r, variant=VARIANT_RECOMPUTE):
    """Yield a SolveState after each extension of the self-generated system.

    The state with k == j satisfies y = T_j y + r[:j] where T_j is the
    symmetric Toeplitz matrix with diagonal r0 and tail r[:j-1]; it is
    exactly what a run on the truncated input (r0, r[:j]) would return.
    """
    _check_variant(semiring, variant)
    n = len(r)
    if n < 1:
        raise ShapeMismatch("need at least one right-hand-side entry")
    sadd, smul = semiring.add, semiring.mul

    c = _star(semiring, r0, 1)
    y = [smul(c, r[0])]
    beta = r0
    alpha = y[0]
    yield SolveState(k=1, y=list(y), alpha=alpha, beta=beta, variant=variant)

    for k in range(1, n):
        beta = _next_beta(semiring, variant, r0, r, y, beta, alpha, k)
        bstar = _star(semiring, beta, k + 1)
        acc = smul(r[k - 1], y[0])
        for j in range(1, k):
            acc = sadd(acc, smul(r[k - 1 - j], y[j]))
        alpha = smul(bstar, sadd(acc, r[k]))
        y = [sadd(y[j], smul(y[k - 1 - j], alpha)) for j in range(k)]
        y.append(alpha)
        yield SolveState(k=k + 1, y=list(y), alpha=alpha, beta=beta, variant=variant)


def durbin(semiring, r0, r, variant=VARIANT_RECOMPUTE):
    """Solve y = T y + r where T is generated by (r0, r[:-1]).

    Returns the solution as a list of length len(r).  Raises
    ClosureUndefined or InverseUndefined (with the failing subsystem size)
    when the recursion hits a scalar without the needed star or inverse.
    """
    state = None
    for state in durbin_steps(semiring, r0, r, variant):
        pass
    return state.y


def levinson_steps(semiring, r0, r, b, variant=VARIANT_RECOMPUTE):
    """Yield a SolveState per step of the arbitrary-rhs solver.

    Interleaves the self-generated recursion (y, alpha, beta) with the
    x/mu recursion for the actual right-hand side b; the final step skips
    the y extension since y is only needed to extend x further.
    """
    _check_variant(semiring, variant)
    n = len(b)
    if n < 1:
        raise ShapeMismatch("need at least one right-hand-side entry")
    if len(r) != n - 1:
        raise ShapeMismatch(
            f"generator tail must have length {n - 1} for a size-{n} system, got {len(r)}"
        )
    sadd, smul = semiring.add, semiring.mul

    c = _star(semiring, r0, 1)
    x = [smul(c, b[0])]
    if n == 1:
        yield SolveState(k=1, y=[], alpha=None, beta=r0, variant=variant, x=list(x), mu=x[0])
        return

    y = [smul(c, r[0])]
    beta = r0
    alpha = y[0]
    yield SolveState(k=1, y=list(y), alpha=alpha, beta=beta, variant=variant, x=list(x), mu=x[0])

    for k in range(1, n):
        beta = _next_beta(semiring, variant, r0, r, y, beta, alpha, k)
        bstar = _star(semiring, beta, k + 1)

        acc = smul(r[k - 1], x[0])
        for j in range(1, k):
            acc = sadd(acc, smul(r[k - 1 - j], x[j]))
        mu = smul(bstar, sadd(acc, b[k]))
        x = [sadd(x[j], smul(y[k - 1 - j], mu)) for j in range(k)]
        x.append(mu)

        if k < n - 1:
            acc = smul(r[k - 1], y[0])
            for j in range(1, k):
                acc = sadd(acc, smul(r[k - 1 - j], y[j]))
            alpha = smul(bstar, sadd(acc, r[k]))
            y = [sadd(y[j], smul(y[k - 1 - j], alpha)) for j in range(k)]
            y.append(alpha)

        yield SolveState(
            k=k + 1, y=list(y), alpha=alpha, beta=beta, variant=variant, x=list(x), mu=mu
        )


def levinson(semiring, r0, r, b, variant=VARIANT_RECOMPUTE):
    """Solve x = T x + b where T is generated by (r0, r); len(r) = len(b) - 1.

    Returns the solution as a list of length len(b); error behaviour
    matches ``durbin``.
    """
    state = None
    for state in levinson_steps(semiring, r0, r, b, variant):
        pass
    return state.x


def residual_check(toeplitz, sol, rhs):
    """Whether sol = T sol + rhs holds entrywise for the expanded matrix.

    Exact for exact carriers; floating-point carriers compare through the
    instance's relative tolerance.
    """
    n = toeplitz.n
    if len(sol) != n or len(rhs) != n:
        raise ShapeMismatch(f"solution and right-hand side must have length {n}")
    sr = toeplitz.semiring
    tx = toeplitz.matvec(sol)
    return all(sr.eq(sol[i], sr.add(tx[i], rhs[i])) for i in range(n))
