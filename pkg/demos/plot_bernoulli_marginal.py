"""
A stationary process with Bernoulli innovations
===============================================

Start from the simplest innovation, a coin flip with success probability p,
and ask what stationary law the thinned process settles into. The marginal
pgf is an infinite product; here we look at it three ways: the closed-form
alternating series, a brute-force product truncated at a fixed depth, and
its moments.
"""

import numpy as np

import inar1
from inar1 import marginal as mg
from inar1.validation import oracle_marginal

model = inar1.StationaryModel(inar1.Bernoulli(0.2), alpha=0.5)
dist = inar1.marginal_pmf(model, tol=1e-12)
print(model.label(), "->", dist.method)

###############################################################################
# The first few probabilities. P(X = 0) = prod_i (1 - p alpha^i).
for k in range(6):
    print(f"P(X={k}) = {dist[k]:.12f}")
print("P(X=0) by direct product:", np.prod(1 - 0.2 * 0.5 ** np.arange(60)))

###############################################################################
# Truncating the product at a fixed depth converges geometrically in alpha.
for depth in (5, 10, 20, 40):
    oracle = oracle_marginal(model, depth, tol=1e-15)
    n = min(oracle.probs.size, dist.probs.size)
    print(f"depth {depth:2d}: max |series - product| = {np.abs(oracle.probs[:n] - dist.probs[:n]).max():.2e}")

###############################################################################
# The alternating series cancels badly when p and alpha are both close to 1.
# The library carries a rounding-error bound and switches to the product
# whenever that bound exceeds the requested tolerance.
for p, a in [(0.2, 0.5), (0.45, 0.9), (0.9, 0.95)]:
    _, bound = mg.bernoulli_series_probs(p, a)
    used = mg.marginal_pmf_bernoulli(p, a, 1e-10).method
    print(f"p={p}, alpha={a}: series error bound {bound:.1e} -> {used}")

###############################################################################
# Moments: the innovation is underdispersed (index 1 - p), so is the marginal.
rep = inar1.marginal_moments(model, 4)
print("mean", rep.mean, "= p/(1-alpha) =", 0.2 / 0.5)
print("dispersion index", rep.dispersion_index)
print("factorial cumulants", np.round(rep.factorial_cumulants.values, 10))
