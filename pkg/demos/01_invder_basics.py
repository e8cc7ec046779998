"""Inv-derivations on the Heisenberg algebra.

Run with ``python3 demos/01_invder_basics.py``.
"""
from invder import qlinalg as ql
from invder.fixtures import H3_DELTA, heisenberg, sl2
from invder.lie import (InvDerStructure, check_cyclic_identity, delta_derivation_space,
                        derivation_space, inverse_is_derivation, is_invder, twist)


def show(m):
    return "[" + ", ".join("[" + ", ".join(ql.frac_str(x) for x in row) + "]" for row in m) + "]"


L = heisenberg()
print("h3: [e1, e2] = e3")
print("dim Der(h3) =", len(derivation_space(L)))

# delta rotates the plane spanned by e1, e2 (order 6) and fixes e3.
print("\ndelta =", show(H3_DELTA))
print(is_invder(L, H3_DELTA))

# A diagonal derivation scales e3 by the trace of the plane block, but
# [delta x, delta y] = delta^2 [x, y] would need det = trace^2.
diag = ql.qarray([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
print("\ndiag(1, 1, 2):")
print(is_invder(L, diag))
print("same verdict from the inverse:", inverse_is_derivation(L, diag).ok)

S = InvDerStructure.checked(L, H3_DELTA)
T = twist(S)
print("\ntwisted bracket [e1, e2]_delta has coordinates",
      [ql.frac_str(x) for x in T.c[0, 1]])
print(check_cyclic_identity(S))
print("delta-derivations of (h3, delta):", len(delta_derivation_space(S)))

# sl2 is perfect, so all its derivations are inner and none is invertible.
dets = [ql.det(D) for D in derivation_space(sl2())]
print("\nsl2 derivations:", len(dets), "determinants:", [ql.frac_str(d) for d in dets])
