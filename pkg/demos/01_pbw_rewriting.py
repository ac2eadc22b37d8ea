"""Normal forms in iterated Ore extensions, and why they are trustworthy.

An algebra is presented by weighted generators and a commutator table;
products are computed by straightening words against the table.  The
diamond-style overlap check then certifies that the sorted monomials
really are a basis.
"""

from hopfalg import OrePresentation, bracket

# Four generators X < Y < Z < W with weights 1, 1, 2, 3 and the relations
# [Z,X] = X, [W,X] = -Z, [W,Z] = W - X*Y^2 (everything else commutes).
p = OrePresentation(
    [("X", 1), ("Y", 1), ("Z", 2), ("W", 3)],
    {"Z,X": [(1, {"X": 1})],
     "W,X": [(-1, {"Z": 1})],
     "W,Z": [(1, {"W": 1}), (-1, {"X": 1, "Y": 2})]})

print("straightening the word W*Z:")
print("   W*Z =", p.normal_form(["W", "Z"]))
print("a longer word, W*Z*X:")
print("   W*Z*X =", p.normal_form(["W", "Z", "X"]))

W, X, Y, Z = p.gen("W"), p.gen("X"), p.gen("Y"), p.gen("Z")
print("\ncommutators recompute the table:  [W,X] =", bracket(W, X))

# The element W' = W - (1/2) X Y^2 satisfies [W', Z] = W', which is how
# one sees that this algebra is an enveloping algebra in disguise.
Wp = W - (X * Y * Y).scale("1/2")
print("with W' = W - 1/2*X*Y^2:          [W',Z] =", bracket(Wp, Z))
assert bracket(Wp, Z) == Wp

print("\noverlap certification (all words x_k x_j x_i resolve consistently):")
print(p.verify_pbw_consistency())

print("\nmonomial counts of weighted degree <= n grow like n^4:")
for n in (4, 8, 16, 32):
    print(f"   n = {n:3d}: {p.pbw_count(n)} monomials")
