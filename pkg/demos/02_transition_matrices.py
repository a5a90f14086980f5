"""Transition matrices F^lam and multiplicities for (n, l) = (3, 2).

The multiplicity of the irreducible of highest weight lam inside the cyclic
module generated by det^(alpha)(X)^l is the rank of F^lam at that alpha.

Run:  python3 demos/02_transition_matrices.py
"""
from fractions import Fraction

from alphadet.exactalg import char_poly, critical_alphas, generic_rank
from alphadet.tensormod import decompose, dominant_weights, transition_matrix

n, l = 3, 2
for lam in dominant_weights(n, l):
    F = transition_matrix(lam, n, l)
    print(f"{str(lam):<10} size {F.rows}  generic rank {generic_rank(F)}")
    print(f"{'':<10} trace    {F.trace()}")
    print(f"{'':<10} det      {F.det()}")
    print(f"{'':<10} critical {critical_alphas(F)}")

# (4,2) is the one non-scalar case here; its characteristic polynomial in t
F = transition_matrix((4, 2), n, l)
print("char poly of F^(4,2), coefficients of t^0..t^3:")
for k, c in enumerate(char_poly(F).coeffs):
    print(f"  t^{k}: {c}")

# At alpha = 1 (the permanent) only two components survive.
for alpha in (Fraction(1), Fraction(-1, 2), Fraction(1, 7)):
    report = decompose(n, l, alpha)
    print(f"alpha = {alpha}: {report.multiplicities()}")
