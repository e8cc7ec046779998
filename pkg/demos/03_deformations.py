"""First-order deformations and their infinitesimals.

Run with ``python3 demos/03_deformations.py``.
"""
from invder import qlinalg as ql
from invder.cohomology import is_coboundary
from invder.deformation import (Deformation, apply_order1_equivalence, check_deformation,
                                deformation_cocycles, from_cochain, infinitesimal)
from invder.fixtures import abelian_invder, h3_invder
from invder.representation import adjoint_rep

S = h3_invder()

# Scaling the bracket, [x, y]_t = (1 + t)[x, y], is a deformation.
scaling = Deformation.first_order(S, S.c, ql.zeros(3, 3))
print("scaling:", check_deformation(scaling))

# Putting a bracket on abelian 3-space breaks the Leibniz rule for delta = id.
A = abelian_invder(3)
mu1 = ql.zeros(3, 3, 3)
mu1[0, 1, 2], mu1[1, 0, 2] = 1, -1
print("\nabelian 3-space with [e1, e2] = t e3:")
print(check_deformation(Deformation.first_order(A, mu1, ql.zeros(3, 3))))

# Every adjoint 2-cocycle of the form (f, g, g) is the infinitesimal of a deformation.
cocycles = deformation_cocycles(S)
r = adjoint_rep(S)
print(f"\n{len(cocycles)} independent cocycles (f, g, g) on h3")
for k, w in enumerate(cocycles):
    d = from_cochain(S, w)
    print(f"  #{k}: deformation ok = {check_deformation(d).ok}, "
          f"trivial class = {is_coboundary(r, w)}")

# An equivalence id + t psi changes the infinitesimal by a coboundary.
psi = ql.qarray([[1, 0, 0], [0, 0, 0], [0, 2, 0]])
moved = apply_order1_equivalence(scaling, psi)
diff = infinitesimal(moved) - infinitesimal(scaling)
print("\nafter id + t psi the infinitesimal moved by a coboundary:", is_coboundary(r, diff))
