# %% [markdown]
# # Exact 1D Wasserstein distances
#
# On the line the optimal plan matches quantiles, so W_p is computed exactly
# from sorted atoms, even when the two measures have different sizes.

# %%
import numpy as np

from eldist import Measure1D, wasserstein_1d

a = Measure1D([0.0, 1.0])
b = Measure1D([0.5])
print("W1({0,1}, {0.5}) =", wasserstein_1d(a, b))
print("W1({0,2}, {1,3}) =", wasserstein_1d([0.0, 2.0], [1.0, 3.0]))

# %% [markdown]
# Translation leaves W_p unchanged; scaling multiplies it by |c|.

# %%
rng = np.random.default_rng(1)
x, y = rng.normal(size=40), rng.exponential(size=65)
for p in (1, 2, 3):
    base = wasserstein_1d(x, y, p)
    print(f"p={p}: {base:.6f}  shifted {wasserstein_1d(x + 7, y + 7, p):.6f}  x(-3) {wasserstein_1d(-3 * x, -3 * y, p):.6f}")

# %% [markdown]
# Cross-check against a linear program over all couplings.

# %%
from scipy.optimize import linprog

xs, ys = rng.normal(size=4), rng.normal(size=6)
cost = np.abs(xs[:, None] - ys[None, :]).ravel()
A = np.vstack([np.kron(np.eye(4), np.ones(6)), np.kron(np.ones(4), np.eye(6))])
rhs = np.r_[np.full(4, 1 / 4), np.full(6, 1 / 6)]
lp = linprog(cost, A_eq=A, b_eq=rhs, method="highs").fun
print(f"quantile formula {wasserstein_1d(xs, ys):.10f}, LP {lp:.10f}")
