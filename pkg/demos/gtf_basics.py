# coding: utf-8

# # Generalized sine and cosine
#
# sin_pq is the inverse of the integral of (1 - t^q)^(-1/p). At p = q = 2
# it is the ordinary sine. This walk-through evaluates a few pairs and
# checks the identities that hold for all of them.

# %%

import numpy as np

from gtfkit import ParamPair, asin_pq, cos_pq, pi_pq, sin_cos, sin_pq

classical = ParamPair(2.0, 2.0)
print("pi_22 =", pi_pq(classical))
print("sin_22(pi/6) =", sin_pq(np.pi / 6, classical))

# %% [markdown]
# The half period pi_pq shrinks or grows with the exponents. Below is a
# small table; the diagonal p = q gives the "p-sine" of the p-Laplacian.

# %%

exponents = [1.5, 2.0, 3.0, 6.0]
print("      " + "".join(f"q={q:<9}" for q in exponents))
for p in exponents:
    row = "".join(f"{pi_pq(ParamPair(p, q)):<11.6f}" for q in exponents)
    print(f"p={p:<4}" + row)

# %% [markdown]
# The lemniscate constant shows up at (p, q) = (2, 4).

# %%

print("pi_24 =", pi_pq(ParamPair(2.0, 4.0)))

# %% [markdown]
# Every pair satisfies |cos|^p + |sin|^q = 1. sin_cos returns both from a
# single inversion, so the check is cheap even on a fine grid.

# %%

pp = ParamPair(3.0, 1.5)
x = np.linspace(0, pi_pq(pp), 2001)
s, c = sin_cos(x, pp)
print("max |c^p + s^q - 1| =", np.max(np.abs(c**pp.p + s**pp.q - 1)))

# %% [markdown]
# The inverse really is an inverse, including right next to 1 where the
# derivative of sin_pq vanishes.

# %%

y = np.array([0.0, 0.3, 0.9, 0.999999, 1.0])
print("sin(asin(y)) - y =", np.asarray(sin_pq(asin_pq(y, pp), pp)) - y)
print("cos_pq at the quarter period:", cos_pq(pi_pq(pp) / 2, pp))
