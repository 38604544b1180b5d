# %% [markdown]
# # Exact Gaussian periods
#
# A character sum over GF(r) is stored as the histogram of absolute traces,
# i.e. an element of Z[zeta_p] in the basis 1, zeta, ..., zeta^(p-1).
# No floating point is involved until `to_complex()`.

# %%
from twozero import build_field
from twozero.charsum import gaussian_period, gaussian_period_closed_form_N2

t = build_field(7, 1, 2)
eta = [gaussian_period(t, 2, i) for i in range(2)]
for i, v in enumerate(eta):
    print(f"eta_{i}: coeffs={v.coeffs}  rational={v.is_rational()}  value={v.rational_value()}")
print("closed form:", gaussian_period_closed_form_N2(7, 1, 2))

# %%
# order 3 over GF(49): histogram only, still exact
for i in range(3):
    v = gaussian_period(t, 3, i)
    print(i, v, v.to_complex())

# %%
# odd extension degree with p = 3 mod 4 gives a non-real pair
t7 = build_field(7, 1, 1)
v = gaussian_period(t7, 2, 0)
print(v.is_rational(), v.to_complex())
try:
    gaussian_period_closed_form_N2(7, 1, 1)
except ValueError as exc:
    print("closed form refused:", exc)

# %%
rows = []
for p, s, m in [(3, 1, 2), (3, 1, 4), (5, 1, 2), (5, 2, 1), (11, 1, 2), (13, 1, 2)]:
    tw = build_field(p, s, m)
    exact = gaussian_period(tw, 2, 0).rational_value()
    rows.append((p, s, m, exact, gaussian_period_closed_form_N2(p, s, m)[0]))
for row in rows:
    print(row)
