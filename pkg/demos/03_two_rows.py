"""n = 2: closed forms through terminating hypergeometric polynomials.

Every F^(2l-s,s) is 1x1 and equals (1+alpha)^(l-s) G_s^l(alpha).  The roots
of G_s^l lie on the unit circle, which is why real alpha other than +-1 never
drops a multiplicity.

Run:  python3 demos/03_two_rows.py
"""
import numpy as np

from alphadet.jacobi import G, hahn_identity_check, heun_residual, transition_closed_form, unit_circle_roots
from alphadet.tensormod import transition_matrix

l = 4
for s in range(l + 1):
    F = transition_matrix((2 * l - s, s), 2, l)
    same = F[0, 0] == transition_closed_form(l, s)
    print(f"s={s}: G = {G(s, l)}   matches F: {same}")

# root moduli, computed in floating point
rep = unit_circle_roots(G(3, 6))
print("roots of G_3^6:", np.round(rep.roots, 6))
print("moduli:", np.round(np.abs(rep.roots), 12), " max deviation", rep.max_deviation)

# f(x) = F(-x) solves a confluent Heun equation; the residual is exactly zero
print("Heun residuals for l = 5:", [str(heun_residual(5, s)) for s in range(6)])

# the same scalars as generating functions of Hahn polynomials
rep = hahn_identity_check(5)
print("Hahn convention reproducing every p:", rep.winner)
for p in range(6):
    print(f"  p={p}: {rep.matching(p)}")
