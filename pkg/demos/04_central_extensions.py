"""Central extensions: the Heisenberg algebra from the abelian plane.

Run with ``python3 demos/04_central_extensions.py``.
"""
from invder import qlinalg as ql
from invder.extension import (ExtensionCocycle, build_extension, check_extension_cocycle,
                              extension_cocycles, extension_isomorphism, extract_cocycle,
                              same_class)
from invder.fixtures import h3_invder, plane_invder

P = plane_invder()  # abelian plane, delta = [[0, -1], [1, 1]]
one = ql.qarray([[1]])

# With chi = 0, gamma(e1, e2) = 1 needs delta_V = trace(delta) and
# delta_V^2 = det(delta); both hold for delta_V = 1.
sym = ExtensionCocycle(one, ql.qarray([[0, 0]]), one)
print(check_extension_cocycle(P, sym))
ext = build_extension(P, sym)
print("extension equals the h3 fixture:", ext.total.same_as(h3_invder()))

# With delta_V = 2 both equations fail.
print(check_extension_cocycle(P, ExtensionCocycle(one, ql.qarray([[0, 0]]), ql.qarray([[2]]))))

print("\nextension cocycles with V = Q, delta_V = 1:", len(extension_cocycles(P, one)))

# A different section of the projection h3 -> plane gives a cohomologous cocycle.
s = ql.qarray([[1, 0], [0, 1], [1, 0]])
shifted = extract_cocycle(ext, s)
print("cocycle from the section e1 -> e1 + e3:",
      "gamma =", [ql.frac_str(x) for x in shifted.gamma[0]],
      "chi =", [ql.frac_str(x) for x in shifted.chi[0]])
phi = same_class(P, sym, shifted)
print("same class, witness Phi =", [ql.frac_str(x) for x in phi[0]])
xi = extension_isomorphism(P, sym, shifted, phi)
print("isomorphism of extensions:")
for row in xi:
    print("  ", [ql.frac_str(x) for x in row])
