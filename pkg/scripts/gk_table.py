#!/usr/bin/env python3
"""pc(G_k) next to k+1 and the edge threshold C(n-k-1,2)+k+2, for small n and k."""

from properconn.errors import PreconditionError
from properconn.families import f_lower_bound, gen_gk
from properconn.solver import pc_exact

print(f"{'n':>3} {'k':>3} {'m':>4} {'pc':>4} {'k+1':>4} {'f>=':>5}")
for k in (1, 2, 3):
    for n in range(k + 4, 11):
        try:
            g = gen_gk(n, k)
        except PreconditionError:
            continue
        pc = pc_exact(g).value
        mark = "" if pc == k + 1 else "  <- differs"
        print(f"{n:>3} {k:>3} {g.m:>4} {pc:>4} {k + 1:>4} {f_lower_bound(n, k):>5}{mark}")
