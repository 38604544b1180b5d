# %% [markdown]
# # Field towers GF(p) < GF(q) < GF(r)
#
# Elements are plain ints: the base-p digits are the polynomial coefficients,
# so 0 is zero, 1 is one and the codes 0..p-1 are the prime field.

# %%
import numpy as np

from twozero import build_field
from twozero.ffield import cyclotomic_class, discrete_log, format_poly

t = build_field(7, 1, 2)
print("q =", t.q, " r =", t.r, " modulus (constant term first):", format_poly(t.params.modulus))

# %%
# alpha is the class of x; its powers fill GF(49)*
print("alpha =", t.alpha, "coeffs", t.coeffs(t.alpha))
print("first powers:", t.exp(np.arange(10)).tolist())
print("log(17) =", discrete_log(t, 17), " check:", t.exp(discrete_log(t, 17)))

# %%
# the subfield is the fixed set of x -> x^q
x = t.elements()
print("fixed by Frobenius:", x[t.power(x, t.q) == x].tolist())

# %%
# trace to GF(7): every value is hit exactly r/q = 7 times
tr = t.trace_q(x)
print(np.bincount(tr, minlength=7)[:7])

# %%
# squares are the even-log class C_0^(2)
c0 = cyclotomic_class(t, 2, 0)
print(len(c0), "squares;", bool(np.all(t.is_square(c0))))

# %%
# char 2 works the same way; addition is XOR of the codes
t2 = build_field(2, 2, 3)
print(t2.q, t2.r, t2.add(5, 3), 5 ^ 3)
