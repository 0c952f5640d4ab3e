"""
Moments, cumulants and the pseudo compound Poisson form
=======================================================

Factorial cumulants transfer from the innovation to the marginal with a
factor 1 / (1 - alpha^r). Exponentiating the cumulant series gives a
compound-Poisson-like pgf whose weights may be negative.
"""

import numpy as np

import inar1
from inar1 import innovations as inn
from inar1.combinatorics import stirling_second

###############################################################################
# Stirling numbers of the second kind turn factorial moments into moments.
print("S(5, k):", [stirling_second(5, k) for k in range(6)])

###############################################################################
# Innovation vs marginal factorial cumulants for a binomial innovation.
alpha = 0.6
model = inar1.StationaryModel(inar1.Binomial(3, 0.3), alpha)
rep = inar1.marginal_moments(model, 5)
inn_fc = inar1.convert(inn.factorial_moments(model.innovation, 5), "factorial_cumulants").values
for r, (a, b) in enumerate(zip(inn_fc, rep.factorial_cumulants.values), start=1):
    print(f"r={r}: innovation {a: .6f} / (1 - alpha^r) = {a / (1 - alpha**r): .6f}, marginal {b: .6f}")

###############################################################################
# The pseudo compound Poisson representation. Weights sum to one; for an
# underdispersed law some of them are negative.
pc = inar1.pcpd_representation(model)
print("rate %.6f, weights sum %.12f" % (pc.lam, pc.weights.sum()))
print("first weights:", np.round(pc.weights[:6], 6))
for z in (0.0, 0.5):
    print(f"pgf at z={z}: {pc.pgf(z):.12f} vs {inar1.marginal_pgf(model, z):.12f}")
