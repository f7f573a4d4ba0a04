"""Tour of the spectral building blocks on a 33-point grid.

Shows the transform pair, spectral differentiation, the discrete inner
product identities, and the interpolation aliasing bound, then runs the
packaged self-checks.
"""

import numpy as np

from boussinesq.spectral import (
    Grid,
    derivative,
    evaluate_interpolant,
    forward,
    inner_product,
    inverse,
    sobolev_norm,
)
from boussinesq.verification import run_checks

grid = Grid(half_modes=16, length=2 * np.pi)
f = np.exp(np.sin(grid.nodes))

# round trip and exact differentiation of an analytic periodic function
coeffs = forward(grid, f)
print("round trip error:", np.max(np.abs(inverse(grid, coeffs) - f)))
df_exact = np.cos(grid.nodes) * f
print("derivative error:", np.max(np.abs(derivative(grid, f, 1) - df_exact)))

# summation by parts: <f, g'> = -<f', g>
g = np.sin(2 * grid.nodes)
lhs = inner_product(grid, f, derivative(grid, g, 1))
rhs = -inner_product(grid, derivative(grid, f, 1), g)
print("summation by parts residual:", abs(lhs - rhs))

# interpolating fine-grid data onto a coarse grid inflates Sobolev norms
# by at most sqrt(p); sample the bound with random data
rng = np.random.default_rng(3)
p = 2
fine = Grid(half_modes=p * 16, length=2 * np.pi)
phi = rng.standard_normal(fine.num_points)
coarse_vals = evaluate_interpolant(fine, phi, grid.nodes)
for k in range(3):
    ratio = sobolev_norm(grid, coarse_vals, k) / sobolev_norm(fine, phi, k)
    print(f"H^{k} norm ratio {ratio:.4f} (bound sqrt({p}) = {np.sqrt(p):.4f})")

print()
for name, ok in run_checks():
    print(f"{'PASS' if ok else 'FAIL'}  {name}")
