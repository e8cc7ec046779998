"""The degree-1 and degree-2 cohomology of the InvDer complex.

Run with ``python3 demos/02_cohomology.py``.
"""
from invder import qlinalg as ql
from invder.cohomology import d1_matrix, d2_matrix, h1, h2
from invder.fixtures import abelian_invder, h3_invder
from invder.representation import adjoint_rep, check_representation, trivial_rep


def report(label, r):
    M1, M2 = d1_matrix(r), d2_matrix(r)
    H = h2(r)
    print(f"{label}:")
    print(f"  d1 is {M1.shape[0]}x{M1.shape[1]}, d2 is {M2.shape[0]}x{M2.shape[1]}, "
          f"d2 d1 = 0: {ql.is_zero(M2 @ M1)}")
    print(f"  dim H^1 = {h1(r)[0]}, dim Z^2 = {H.z2_dim}, dim B^2 = {H.b2_dim}, "
          f"dim H^2 = {H.dim}")


# With delta = delta_V = id on the line, the 2-cochain part is zero and the
# two 1-cochain slots are unconstrained: H^2 has dimension 2.
report("abelian line, trivial coefficients", trivial_rep(abelian_invder(1), 1))
report("abelian plane, trivial coefficients", trivial_rep(abelian_invder(2), 1))

S = h3_invder()
r = adjoint_rep(S)
print("\nadjoint representation of h3:", check_representation(r))
report("h3, adjoint coefficients", r)
report("h3, trivial coefficients", trivial_rep(S, 1))
