# coding: utf-8

# # Best Lyapunov constants
#
# If -(|u'|^(p-2) u')' = a |u|^(p-2) u has a nontrivial solution vanishing
# at 0 and L, the weight a can't be too small in L^q. The sharp bound m_q
# is attained by a power of sin_{p,pq*}.

# %%

import numpy as np

from gtfkit import INF, LyapunovInput, SampledFunction, best_constant, extremal_solution, rayleigh_J
from gtfkit.lyapunov import first_eigenvalue, random_trial_function, weight_norm

for p in (1.5, 2.0, 3.0):
    row = [best_constant(LyapunovInput(p, q)).best_constant for q in (1.001, 1.5, 2.0, 10.0, 1000.0, INF)]
    print(f"p={p}: " + "  ".join(f"{m:9.4f}" for m in row))

# %% [markdown]
# The two ends of each row: as q -> 1 the constant tends to 2^p / L^(p-1),
# and as q -> inf to the first Dirichlet eigenvalue of the p-Laplacian.

# %%

for p in (1.5, 2.0, 3.0):
    print(f"p={p}: 2^p = {2**p:.4f}, lambda_1 = {first_eigenvalue(p, 1.0):.4f}")

# %% [markdown]
# The extremal weight has exactly the predicted L^q norm, and random
# competitors never beat the extremal solution's Rayleigh quotient.

# %%

inp = LyapunovInput(2.0, 3.0)
m = best_constant(inp).best_constant
print("||a_q||_q / m_q =", weight_norm(inp) / m)

nodes = np.linspace(0, 1, 10_001)
u = SampledFunction.from_callable(lambda x: extremal_solution(x, inp), nodes)
print("J(u_q) / m_q =", rayleigh_J(u, 2.0, 3.0) / m)

rng = np.random.default_rng(1)
ratios = [rayleigh_J(random_trial_function(rng), 2.0, 3.0) / m for _ in range(200)]
print(f"random trials: min J/m_q = {min(ratios):.4f}")
