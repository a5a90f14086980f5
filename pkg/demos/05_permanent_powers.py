"""Powers of the permanent versus Sym^l(Sym^n(C^n)).

At alpha = 1 the cyclic module generated by per(X)^l appears to decompose
exactly like the plethysm Sym^l(Sym^n).  Both sides are computed from
scratch: the left by ranks of transition matrices, the right by building
Sym^l(Sym^n) with the Leibniz rule and counting highest weight vectors.

Run:  python3 demos/05_permanent_powers.py
"""
from alphadet.tensormod import conjecture_check

for n, l in [(2, 2), (2, 3), (2, 4), (3, 1), (3, 2)]:
    res = conjecture_check(n, l)
    print(f"n={n} l={l}  agree: {res.holds}")
    print(f"   per^l    {res.permanent}")
    print(f"   Sym Sym  {res.sym_sym}")
