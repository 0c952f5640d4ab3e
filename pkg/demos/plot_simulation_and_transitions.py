"""
Simulating paths and reading off transition laws
================================================

The one-step transition from state l is a binomial thinning of l convolved
with the innovation. We simulate a long path, compare its histogram with
the stationary pmf, and check the two-step law against a matrix product.
"""

import numpy as np

import inar1
from inar1.process import transition_matrix

model = inar1.StationaryModel(inar1.Binomial(3, 0.3), alpha=0.5)

###############################################################################
# A path of a million steps takes about a second.
path = inar1.simulate(model, 1_000_000, seed=7)
x = path.values
target = inar1.marginal_pmf(model, 1e-12).probs
emp = np.bincount(x, minlength=target.size)[: target.size] / x.size
print("sample mean %.4f, analytic %.4f" % (x.mean(), inar1.marginal_moments(model, 2).mean))
print("total variation distance %.5f" % (0.5 * np.abs(emp - target).sum()))

###############################################################################
# The lag-1 autocorrelation of a stationary INAR(1) path is alpha.
print("lag-1 autocorrelation %.4f (alpha = %.1f)" % (np.corrcoef(x[:-1], x[1:])[0, 1], model.alpha))

###############################################################################
# Transition rows, and the two-step law from state 4.
P = transition_matrix(model, 40)
print("P(X_t+1 = k | X_t = 4):", np.round(P[4, :8], 5))
two = inar1.k_step_conditional(model, 4, 2, 1e-14).probs
print("max |two-step - P @ P| = %.2e" % np.abs(two - (P @ P)[4, : two.size]).max())
