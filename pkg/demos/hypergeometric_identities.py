# coding: utf-8

# # Hypergeometric closed forms
#
# Two Gauss hypergeometric functions with parameters tied to (p, q) have
# closed forms in asin_pq. Here we compare the 2F1 series to those forms
# and then check the integral identities for powers of sin_pq and cos_pq.

# %%

import numpy as np

from gtfkit import ParamPair, pi_pq
from gtfkit.hyper import integral_cos_power, integral_sin_power, hyp_first_identity, hyp_second_identity

rng = np.random.default_rng(0)
for _ in range(5):
    p, q = rng.uniform(1.1, 10, 2)
    x = rng.uniform(0.01, 0.95)
    pp = ParamPair(p, q)
    a, b = hyp_first_identity(pp, x), hyp_second_identity(pp, x)
    print(f"p={p:5.2f} q={q:5.2f} x={x:.3f}  first {a.residual:.1e}  second {b.residual:.1e}")

# %% [markdown]
# Integrals of cos^p and sin^q over [0, x], by tanh-sinh quadrature, against
# their closed forms. Over the whole quarter period they split the length
# in the ratio q : p*.

# %%

pp = ParamPair(3.0, 2.0)
half = pi_pq(pp) / 2
for frac in (0.25, 0.5, 1.0):
    ci, si = integral_cos_power(frac * half, pp), integral_sin_power(frac * half, pp)
    print(f"x = {frac:.2f} * pi/2: cos^p {ci.lhs:.12f} ({ci.residual:.0e})  sin^q {si.lhs:.12f} ({si.residual:.0e})")
print("expected split at pi/2:", pp.q * half / (pp.p_star + pp.q), pp.p_star * half / (pp.p_star + pp.q))
