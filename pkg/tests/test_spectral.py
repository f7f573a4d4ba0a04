"""Transform, differentiation and inner-product identities.

The independent oracle throughout is a direct O(N^2) DFT summation,
kept deliberately separate from the FFT-backed library path.
"""

import numpy as np
import pytest

from boussinesq.spectral import (
    Grid,
    SymmetryError,
    derivative,
    evaluate_interpolant,
    forward,
    inner_product,
    inverse,
    norm2,
    project,
    sobolev_norm,
)


def dft_forward(grid, values):
    """Direct O(N^2) collocation coefficients, same normalization as forward."""
    n = grid.num_points
    i = np.arange(n)
    out = np.empty(n, dtype=complex)
    for idx, l in enumerate(grid.modes):
        out[idx] = np.sum(values * np.exp(-2j * np.pi * l * i / n)) / n
    return out


def dft_inverse(grid, coeffs):
    n = grid.num_points
    i = np.arange(n)
    out = np.empty(n, dtype=complex)
    for j in range(n):
        out[j] = np.sum(coeffs * np.exp(2j * np.pi * grid.modes * i[j] / n))
    return out


class TestGrid:
    def test_odd_point_count(self):
        grid = Grid(half_modes=8, length=2 * np.pi)
        assert grid.num_points == 17
        assert grid.num_points == 2 * grid.half_modes + 1

    def test_nodes_equispaced_excluding_right_endpoint(self):
        grid = Grid(half_modes=10, length=80.0, x_left=-40.0)
        assert np.allclose(np.diff(grid.nodes), grid.spacing)
        assert grid.nodes[0] == -40.0
        assert grid.nodes[-1] < 40.0

    def test_wavenumber_symmetry(self):
        grid = Grid(half_modes=6, length=5.0)
        k = grid.wavenumbers
        assert k[0] == 0.0
        for l in range(1, 7):
            assert k[l] == -k[-l]

    def test_invalid_construction(self):
        with pytest.raises(ValueError):
            Grid(half_modes=0, length=1.0)
        with pytest.raises(ValueError):
            Grid(half_modes=4, length=-1.0)


class TestForwardInverse:
    def test_constant_is_mode_zero(self):
        grid = Grid(half_modes=8, length=3.0)
        coeffs = forward(grid, np.ones(grid.num_points))
        assert coeffs[0] == pytest.approx(1.0, abs=1e-14)
        assert np.max(np.abs(coeffs[1:])) < 1e-14

    def test_single_cosine_splits_into_two_half_modes(self):
        grid = Grid(half_modes=8, length=4.0)
        coeffs = forward(grid, np.cos(2 * np.pi * grid.nodes / 4.0))
        assert coeffs[1] == pytest.approx(0.5, abs=1e-14)
        assert coeffs[-1] == pytest.approx(0.5, abs=1e-14)
        mask = np.ones(grid.num_points, dtype=bool)
        mask[[1, -1]] = False
        assert np.max(np.abs(coeffs[mask])) < 1e-14

    def test_round_trip_matches_direct_dft(self, rng):
        grid = Grid(half_modes=16, length=7.0, x_left=-2.0)
        f = rng.standard_normal(grid.num_points)
        coeffs = forward(grid, f)
        assert np.allclose(coeffs, dft_forward(grid, f), atol=1e-13)
        back = inverse(grid, coeffs)
        assert np.max(np.abs(back - f)) < 1e-12 * np.max(np.abs(f))
        assert np.allclose(dft_inverse(grid, coeffs).real, f, atol=1e-12)

    def test_hermitian_symmetry_of_real_input(self, rng):
        grid = Grid(half_modes=12, length=1.0)
        coeffs = forward(grid, rng.standard_normal(grid.num_points))
        for l in range(1, 13):
            assert coeffs[l] == pytest.approx(np.conj(coeffs[-l]), abs=1e-13)
        assert abs(coeffs[0].imag) < 1e-14

    def test_inverse_of_zero_and_constant(self):
        grid = Grid(half_modes=5, length=1.0)
        assert np.all(inverse(grid, np.zeros(grid.num_points, dtype=complex)) == 0.0)
        coeffs = np.zeros(grid.num_points, dtype=complex)
        coeffs[0] = 2.5
        assert np.allclose(inverse(grid, coeffs), 2.5)

    def test_non_finite_input_rejected(self):
        grid = Grid(half_modes=4, length=1.0)
        bad = np.ones(grid.num_points)
        bad[3] = np.nan
        with pytest.raises(ValueError):
            forward(grid, bad)

    def test_symmetry_violation_raises(self):
        grid = Grid(half_modes=4, length=1.0)
        coeffs = np.zeros(grid.num_points, dtype=complex)
        coeffs[1] = 1.0  # no conjugate partner
        with pytest.raises(SymmetryError):
            inverse(grid, coeffs)
        # complex output can still be requested
        vals = inverse(grid, coeffs, real=False)
        assert vals.dtype == complex


class TestDerivative:
    def test_constant_derivative_vanishes(self):
        grid = Grid(half_modes=16, length=3.0)
        k_max = float(np.max(np.abs(grid.wavenumbers)))
        for order in (1, 2, 3, 4):
            d = derivative(grid, np.full(grid.num_points, 4.2), order)
            # fft round-off in the nonzero modes gets amplified by k^order
            tol = 4.2 * max(k_max**order, 1.0) * 20 * np.finfo(float).eps
            assert np.max(np.abs(d)) < tol

    def test_resolved_sine_differentiates_exactly(self):
        grid = Grid(half_modes=16, length=2 * np.pi)
        d = derivative(grid, np.sin(grid.nodes), 1)
        assert np.max(np.abs(d - np.cos(grid.nodes))) < 1e-12

    def test_sech_profile_self_convergence(self):
        # second derivative of sech^2 at two resolutions, compared through
        # the finer grid's interpolant (the odd-sized grids share no nodes)
        shape = 0.5773502691896257
        coarse = Grid(half_modes=128, length=80.0, x_left=-40.0)
        fine = Grid(half_modes=256, length=80.0, x_left=-40.0)
        d_coarse = derivative(coarse, 1.0 / np.cosh(0.5 * shape * coarse.nodes) ** 2, 2)
        d_fine = derivative(fine, 1.0 / np.cosh(0.5 * shape * fine.nodes) ** 2, 2)
        at_coarse_nodes = evaluate_interpolant(fine, d_fine, coarse.nodes)
        assert np.max(np.abs(d_coarse - at_coarse_nodes)) <= 1e-8

    def test_second_derivative_twice_equals_fourth(self, rng):
        grid = Grid(half_modes=64, length=80.0, x_left=-40.0)
        f = np.exp(np.sin(2 * np.pi * (grid.nodes + 40.0) / 80.0))
        twice = derivative(grid, derivative(grid, f, 2), 2)
        assert np.max(np.abs(twice - derivative(grid, f, 4))) < 1e-10


class TestProject:
    def test_resolved_mode_unchanged(self):
        grid = Grid(half_modes=8, length=1.0)
        f = np.cos(2 * np.pi * grid.nodes)
        assert np.allclose(project(grid, f, 1), f, atol=1e-13)

    def test_mode_above_cutoff_removed(self):
        grid = Grid(half_modes=8, length=1.0)
        f = np.cos(2 * np.pi * 5 * grid.nodes)
        assert np.max(np.abs(project(grid, f, 4))) < 1e-13

    def test_cutoff_below_n_strips_top_modes(self, rng):
        grid = Grid(half_modes=8, length=1.0)
        f = rng.standard_normal(grid.num_points)
        # oracle: direct coefficient surgery
        coeffs = dft_forward(grid, f)
        coeffs[np.abs(grid.modes) > 7] = 0.0
        expected = dft_inverse(grid, coeffs).real
        assert np.allclose(project(grid, f, 7), expected, atol=1e-12)

    def test_cutoff_at_or_above_n_warns(self, rng):
        grid = Grid(half_modes=8, length=1.0)
        f = rng.standard_normal(grid.num_points)
        with pytest.warns(UserWarning):
            out = project(grid, f, 8)
        assert np.array_equal(out, f)


class TestInnerProduct:
    def test_constant(self):
        grid = Grid(half_modes=9, length=1.0)
        ones = np.ones(grid.num_points)
        assert inner_product(grid, ones, ones) == pytest.approx(1.0, abs=1e-15)

    def test_orthogonality_with_cosine(self):
        grid = Grid(half_modes=9, length=2.0)
        assert inner_product(
            grid, np.ones(grid.num_points), np.cos(2 * np.pi * grid.nodes / 2.0)
        ) == pytest.approx(0.0, abs=1e-14)

    def test_matches_naive_loop(self, rng):
        grid = Grid(half_modes=11, length=3.0)
        f = rng.standard_normal(grid.num_points)
        g = rng.standard_normal(grid.num_points)
        expected = sum(f[i] * g[i] for i in range(grid.num_points)) / grid.num_points
        assert inner_product(grid, f, g) == pytest.approx(expected, abs=1e-15)

    def test_grid_mismatch(self, rng):
        grid = Grid(half_modes=4, length=1.0)
        with pytest.raises(ValueError):
            inner_product(grid, np.ones(grid.num_points), np.ones(grid.num_points + 2))


class TestSobolevNorm:
    def test_constant_any_order(self):
        grid = Grid(half_modes=6, length=5.0)
        for k in range(4):
            assert sobolev_norm(grid, np.ones(grid.num_points), k) == pytest.approx(
                1.0, abs=1e-13
            )

    def test_single_mode_parseval(self):
        grid = Grid(half_modes=8, length=2 * np.pi)
        f = np.cos(3 * grid.nodes)
        expected = np.sqrt(
            norm2(grid, f) ** 2 + norm2(grid, derivative(grid, f, 1)) ** 2
        )
        assert sobolev_norm(grid, f, 1) == pytest.approx(expected, abs=1e-12)

    def test_order_zero_is_l2(self, rng):
        grid = Grid(half_modes=20, length=3.0)
        f = rng.standard_normal(grid.num_points)
        assert sobolev_norm(grid, f, 0) == pytest.approx(norm2(grid, f), abs=1e-12)

    def test_order_two_matches_derivative_route(self, rng):
        grid = Grid(half_modes=20, length=3.0)
        f = rng.standard_normal(grid.num_points)
        expected = np.sqrt(
            norm2(grid, f) ** 2
            + norm2(grid, derivative(grid, f, 1)) ** 2
            + norm2(grid, derivative(grid, f, 2)) ** 2
        )
        assert sobolev_norm(grid, f, 2) == pytest.approx(expected, abs=1e-12)


class TestIdentities:
    @pytest.mark.parametrize("n", [16, 64, 256])
    def test_parseval(self, rng, n):
        grid = Grid(half_modes=n, length=80.0, x_left=-40.0)
        f = rng.standard_normal(grid.num_points)
        coeffs = forward(grid, f)
        assert inner_product(grid, f, f) == pytest.approx(
            float(np.sum(np.abs(coeffs) ** 2)), abs=1e-12
        )

    @pytest.mark.parametrize("n", [16, 64, 256])
    def test_summation_by_parts(self, rng, n):
        grid = Grid(half_modes=n, length=80.0, x_left=-40.0)
        f = rng.standard_normal(grid.num_points)
        g = rng.standard_normal(grid.num_points)
        assert inner_product(grid, f, derivative(grid, g, 1)) == pytest.approx(
            -inner_product(grid, derivative(grid, f, 1), g), abs=1e-12
        )
        assert inner_product(grid, f, derivative(grid, g, 2)) == pytest.approx(
            -inner_product(grid, derivative(grid, f, 1), derivative(grid, g, 1)),
            abs=1e-12,
        )
        assert inner_product(grid, f, derivative(grid, g, 4)) == pytest.approx(
            inner_product(grid, derivative(grid, f, 2), derivative(grid, g, 2)),
            abs=1e-12,
        )

    @pytest.mark.parametrize("p", [2, 3])
    def test_aliasing_bound(self, rng, p):
        # phi in B^{pN} drawn as random nodal data on the matching fine grid;
        # its interpolant onto the 2N+1 grid must obey the sqrt(p) bound
        n = 16
        fine = Grid(half_modes=p * n, length=80.0, x_left=-40.0)
        coarse = Grid(half_modes=n, length=80.0, x_left=-40.0)
        for _ in range(20):
            phi = rng.standard_normal(fine.num_points)
            coarse_vals = evaluate_interpolant(fine, phi, coarse.nodes)
            for k in range(3):
                assert (
                    sobolev_norm(coarse, coarse_vals, k)
                    <= np.sqrt(p) * sobolev_norm(fine, phi, k) + 1e-10
                )

    def test_spectral_accuracy_of_interpolation(self):
        # analytic periodic target: interpolation error collapses by far
        # more than 100x per doubling of N until the round-off floor
        reference = Grid(half_modes=512, length=2 * np.pi)
        target = np.exp(np.sin(reference.nodes))
        prev = None
        for n in (4, 8, 16, 32):
            grid = Grid(half_modes=n, length=2 * np.pi)
            interp = evaluate_interpolant(grid, np.exp(np.sin(grid.nodes)), reference.nodes)
            err = float(np.max(np.abs(interp - target)))
            if prev is not None and prev > 1e-13:
                assert prev / max(err, 1e-16) > 100
            prev = err
        assert prev < 1e-13
