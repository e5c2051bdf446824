"""Bellman equations as path problems.

The closure A* accumulates path weights over all walk lengths, so solving
x = A x + b is reachability/optimal-path computation in disguise.  This
script runs the same small graph through the boolean and max-plus
instances and cross-checks the cubic bordering method against the
brute-force series oracle.
"""

import semipath as sp
from semipath import Matrix, NEG_INF

BOOL = sp.get_semiring("boolean")
MP = sp.get_semiring("max-plus")

# A 4-vertex graph given as an adjacency matrix (edge i -> j at A[i][j]).
edges = [(0, 1), (1, 2), (2, 1), (2, 3)]
adj = [[1 if (i, j) in edges else 0 for j in range(4)] for i in range(4)]
A = Matrix.from_rows(adj, BOOL)

# Boolean closure = reflexive-transitive reachability.
star = sp.bordering_closure(A)
print("reachability closure (row i: vertices reachable from i):")
for i, row in enumerate(star.to_rows()):
    print(f"  {i}: {row}")

# x = A x + b with b = indicator of vertex 3 marks every vertex that can
# reach vertex 3.  The solve returns the least such marking.
b = [0, 0, 0, 1]
x = sp.bordering_solve(A, b)
print("can reach vertex 3:", x.to_flat())

# Exhaustive enumeration confirms it is the least of all solutions:
solutions = sp.enumerate_solutions(A, b)
print(f"{len(solutions)} solution(s) exist; least one:",
      all(x.leq(s) for s in solutions))
print()

# The same skeleton with max-plus weights computes heaviest path weights.
# Nonpositive weights keep every pivot closure defined (no positive cycle).
w = {(0, 1): -1, (1, 2): -2, (2, 1): -3, (2, 3): 0}
W = Matrix.from_rows(
    [[w.get((i, j), NEG_INF) for j in range(4)] for i in range(4)], MP
)
wstar = sp.bordering_closure(W)
print("max-plus closure (best walk weight i -> j, 0 on the diagonal):")
for row in wstar.to_rows():
    print("  ", row)

# The series oracle computes the same closure by brute force:
assert wstar.to_flat() == sp.series_closure(W).to_flat()
print("series oracle agrees with the bordering method")

# A positive cycle makes the closure diverge; the series signals it.
W_bad = Matrix.from_rows([[1]], MP)
try:
    sp.series_closure(W_bad)
except sp.NotStabilized as exc:
    print(f"positive self-loop: still changing after {exc.terms} terms (divergent star)")
try:
    sp.bordering_closure(W_bad)
except sp.ClosureUndefined as exc:
    print(f"bordering reports the undefined scalar star at size {exc.step}")
