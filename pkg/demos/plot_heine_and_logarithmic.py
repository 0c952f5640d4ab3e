"""
Infinite-support innovations: Heine and logarithmic
===================================================

A Heine innovation is itself an infinite convolution of Bernoulli laws, so
its stationary marginal is again a convolution of Bernoulli marginals. The
logarithmic family is different: its marginal is dispersed on either side
of 1 depending on whether p is below or above 1 - 1/e.
"""

import math

import inar1
from inar1 import innovations as inn

###############################################################################
# Heine(lambda, q): the marginal pmf and how it compares with the innovation.
model = inar1.StationaryModel(inar1.Heine(1.0, 0.5), alpha=0.5)
dist = inar1.marginal_pmf(model, 1e-12)
innov = inn.pmf(model.innovation, 1e-12)
print("Heine innovation: mean %.6f, dispersion %.6f" % (innov.mean(), innov.dispersion_index()))
print("marginal:          mean %.6f, dispersion %.6f" % (dist.mean(), dist.pmf.dispersion_index()))
print("first probabilities:", [round(float(x), 8) for x in dist.probs[:6]])

###############################################################################
# Logarithmic(p): the dispersion threshold sits at 1 - 1/e.
print("threshold 1 - 1/e =", 1 - 1 / math.e)
for p in (0.3, 0.55, 0.7, 0.9):
    m = inar1.StationaryModel(inar1.Logarithmic(p), alpha=0.6)
    rep = inar1.marginal_moments(m, 2)
    side = "under" if rep.dispersion_index < 1 else "over"
    print(f"p={p}: marginal dispersion {rep.dispersion_index:.4f} ({side}dispersed)")

###############################################################################
# Mixtures of families are built by convolution; the marginal factorises.
conv = inar1.Convolution((inar1.Poisson(0.5), inar1.Heine(1.0, 0.5)))
whole = inar1.marginal_pmf(inar1.StationaryModel(conv, 0.5), 1e-12)
print("Poisson * Heine marginal mean %.6f, expected %.6f" % (whole.mean(), 0.5 / 0.5 + dist.mean()))
