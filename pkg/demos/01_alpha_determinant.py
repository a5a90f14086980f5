"""The alpha-determinant and its symmetrized products D(M).

Run:  python3 demos/01_alpha_determinant.py
"""
from alphadet.matalg import D_of, D_rows, alpha_det, gl_action

# The alpha-determinant interpolates between det (alpha = -1) and per (alpha = 1).
f = alpha_det(3)
for a in (-1, 0, 1):
    g = f.specialize(a)
    print(f"alpha = {a:>2}: {len(g.terms)} monomials, coefficients",
          sorted({str(c) for _, c in g.sorted_terms()}))

# Row-selection alpha-determinants: row k_j of X placed in position j.
print("D(1,1) =", [(k, str(c)) for k, c in D_rows((1, 1)).sorted_terms()])
print("D(2,1) =", [(k, str(c)) for k, c in D_rows((2, 1)).sorted_terms()])

# D(M) for a matrix M with column sums l symmetrizes over every way of
# peeling M into l unit-column matrices.  For M = l I it is det^(alpha)^l.
M = [[2, 1], [1, 2]]
d = D_of(M)
print(f"D{M} has {len(d.terms)} monomials")
assert D_of([[3, 0], [0, 3]]) == alpha_det(2) ** 3

# gl_n acts by polarization operators; D(M) transforms like the basis vector
# e^M of the tensor module.  E_11 and E_22 act by the row sums of M.
assert gl_action(1, 1, d) == d * 3
rhs = D_of([[3, 1], [0, 2]]) + D_of([[2, 2], [1, 1]]) * 2
print("E_12 . D(M) == D(3,1;0,2) + 2 D(2,2;1,1):", gl_action(1, 2, d) == rhs)
