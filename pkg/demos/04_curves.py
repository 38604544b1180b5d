# %% [markdown]
# # Curves behind the S_0 / S_3 counts
#
# The residue pattern counts reduce to point counts on two quadric
# intersections J_0 and J_3, which match y^2 = x^3 + 1 and its twist.

# %%
from twozero import build_code_params, build_field
from twozero.curves import (JacobiIntersection, WeierstrassCurve, aux_curves, count_quadric_pair,
                            count_S0_S3_direct, count_weierstrass, explore_family6,
                            jacobi_to_weierstrass, legendre_form, quadratic_twist,
                            weierstrass_to_jacobi)

t = build_field(7, 1, 2)
code = build_code_params(t, 3, 3)
j0, j3 = aux_curves(code)
n0, n3 = count_quadric_pair(t, j0), count_quadric_pair(t, j3)
print("J0", n0, "\nJ3", n3)
print("sum", n0.total + n3.total, "= 2(r+1) =", 2 * (t.r + 1))

# %%
E = WeierstrassCurve.over(t, 0, 0, 1)
Et = quadratic_twist(t, E, t.alpha)
print(E.describe(), count_weierstrass(t, E).total)
print(Et.describe(), count_weierstrass(t, Et).total)

# %%
s0, s3 = count_S0_S3_direct(code)
print("S0 =", s0, "from J0:", (n0.total - 16) / 8)
print("S3 =", s3, "from J3:", (n3.total - 4) / 8)

# %%
# Jacobi intersection <-> Legendre cubic, round trip
J = JacobiIntersection.over(t, 3, 5)
L = legendre_form(t, 3, 5)
pts = J.affine_points(t)
P = next(p for p in pts if p[1] != 1)
Q = jacobi_to_weierstrass(t, J, P)
print(P, "->", Q, "on E:", L.contains(t, *Q), "back:", weierstrass_to_jacobi(t, J, Q))

# %%
# general family: e shifted copies of x, each an f-th power times a unit
b = code.beta
print(explore_family6(t, 3, 2, [1, b, t.mul(b, b)], [1, 1, 1]), 8 * s0 + 12)
print(explore_family6(t, 3, 2, [1, b, t.mul(b, b)], [t.alpha] * 3), 8 * s3)
print(explore_family6(t, 2, 4, [1, b], [1, t.alpha]))
