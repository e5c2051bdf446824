"""Symmetric-Toeplitz Bellman systems in quadratic time.

durbin solves the self-generated system y = T y + r (the right-hand side
also defines the matrix); levinson solves x = T x + b for arbitrary b.
Over nonneg-real the equations reduce to the classical (I - T) u = rhs,
which numpy solves independently for comparison.
"""

import numpy as np

import semipath as sp
from semipath import SymToeplitz

MP = sp.get_semiring("max-plus")
NN = sp.get_semiring("nonneg-real")

# -- max-plus ------------------------------------------------------------------

r0, r = -1, [-2, -3]
y = sp.durbin(MP, r0, r)
print(f"max-plus durbin: r0={r0}, r={r}  ->  y={y}")
print("  fixpoint y = T y + r holds:",
      sp.residual_check(SymToeplitz(r0, r[:-1], MP), y, r))

b = [0, -1]
x = sp.levinson(MP, -1, [-2], b)
print(f"max-plus levinson: b={b}  ->  x={x}")

# levinson on the self-generated right-hand side reduces to durbin:
assert sp.levinson(MP, r0, r[:-1], r) == y
print("  levinson(r0, r[:-1], b=r) == durbin(r0, r)")
print()

# -- nonneg-real vs the classical dense solve --------------------------------------

r0, r = 0.5, [0.25, 0.1]
y = sp.durbin(NN, r0, r)
print(f"nonneg-real durbin: r0={r0}, r={r}  ->  y={y}")

T = np.asarray(SymToeplitz(r0, r[:-1], NN).expand().to_rows())
u = np.linalg.solve(np.eye(2) - T, np.asarray(r))
print(f"  classical dense solve of (I - T) u = r: u={u.tolist()}")
print(f"  max relative difference: {max(abs(np.asarray(y) - u) / abs(u)):.2e}")
print()

# -- pivot-update variants -----------------------------------------------------------

# The pivot beta_k = r0 + r[:k].y[:k] can be recomputed (default) or updated
# in constant time through (beta*)^-1; both give the same solution when the
# inverses exist.
rng = np.random.default_rng(0)
raw = rng.uniform(0.01, 1.0, size=9)
scale = 0.8 / (raw[0] + 2 * raw[1:].sum())
r0, r = float(raw[0] * scale), [float(v * scale) for v in raw[1:]]
y2 = sp.durbin(NN, r0, r, variant="recompute")
y1 = sp.durbin(NN, r0, r, variant="recursive")
print("variant agreement on a random nonneg-real instance:",
      max(abs(a - b) for a, b in zip(y1, y2)))

# On max-plus-complete a positive pivot has star +inf, which has no inverse;
# the fallback policy recomputes only at those steps.
MPC = sp.get_semiring("max-plus-complete")
print("fallback == recompute on max-plus-complete:",
      sp.durbin(MPC, 1, [1, -2], variant="fallback")
      == sp.durbin(MPC, 1, [1, -2], variant="recompute"))

# Divergent instance: max-plus has no star for positive pivots at all.
try:
    sp.durbin(MP, -1, [5, -1])
except sp.ClosureUndefined as exc:
    print(f"max-plus pivot star undefined while building size {exc.step}")
