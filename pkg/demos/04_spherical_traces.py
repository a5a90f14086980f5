"""Traces of transition matrices from characters alone.

tr F^lam = sum_{h in H} alpha^nu(h) omega^lam(h), where omega^lam is the zonal
spherical function for the row group K = (S_l)^n.  Nothing here touches the
tensor module, so agreement is a genuine cross-check.

Run:  python3 demos/04_spherical_traces.py
"""
from alphadet.exactalg import AlphaPoly
from alphadet.spherical import full_trace, gcp, hook_scalar_check, trace_crosscheck
from alphadet.symgrp import partitions, weyl_dimension

for n, l in [(2, 2), (2, 3), (3, 2)]:
    print(f"(n, l) = ({n}, {l})")
    for lam in partitions(n * l, max_length=n):
        rep = trace_crosscheck(n, l, lam)
        print(f"  {str(lam):<10} gcp = {rep.gcp}   agrees: {rep.match}")

# weighting by gl_n dimensions recovers the trace on the whole tensor space
n, l = 3, 2
total = sum((gcp(n, l, lam) * weyl_dimension(lam, n) for lam in partitions(n * l, max_length=n)), AlphaPoly())
print("sum_lam dim(lam) gcp == full trace:", total == full_trace(n, l))

# hook shapes give scalar transition matrices
print("hook scalars at (3,2):", [hook_scalar_check(3, 2, r) for r in range(3)])
