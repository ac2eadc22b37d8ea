"""Coproducts, counits and antipodes on presented Hopf algebras.

The catalog family B(lam) is the smallest example here whose antipode
has infinite order: S^2 shifts Z by a multiple of Y.
"""

from hopfalg import make_A, make_B

h = make_A(1, 0, 0)
p = h.algebra
X, Y, Z = p.gen("X"), p.gen("Y"), p.gen("Z")

print("Delta(Z)      =", h.coproduct(Z))
print("delta(Z)      =", h.reduced_coproduct(Z), "   (the reduced part)")
print("delta(X*Y^2)  =", h.reduced_coproduct(X * Y * Y))
print("counit(3 + Z) =", h.counit(p.one().scale(3) + Z))

print("\nantipodes by the degree recursion:")
print("   S(X) =", h.antipode(X))
print("   S(Z) =", h.antipode(Z))
print("   S(Z*X) =", h.antipode(Z * X))

b = make_B(1)
Zb, Yb = b.algebra.gen("Z"), b.algebra.gen("Y")
print("\nin B(1):  S(Z) =", b.antipode(Zb), "  S(S(Z)) =",
      b.antipode(b.antipode(Zb)))
assert b.antipode(b.antipode(Zb)) == Zb - Yb.scale(2)

print("\nfull verification battery for B(1):")
print(b.algebra.verify_pbw_consistency())
print(b.verify_coassociativity())
print(b.verify_compatibility())
print(b.verify_antipode(4))
