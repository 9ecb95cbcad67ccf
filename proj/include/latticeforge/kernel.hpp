#pragma once

namespace lf {

/// Riemann zeta for alpha > 1, accurate to ~1e-14 and cached per alpha.
double riemann_zeta(double alpha);

/// True when fourier_kernel has an exact closed form for this alpha.
bool kernel_has_closed_form(double alpha);

/// sum_{l != 0} e^{2 pi i l x} / |l|^alpha = 2 sum_{l>=1} cos(2 pi l x) / l^alpha.
///
/// Even alpha in {2, 4} uses the exact Bernoulli-polynomial form; other alpha
/// falls through to fourier_kernel_series. Rejects alpha <= 1.
double fourier_kernel(double x, double alpha, double tol = 1e-10);

/// Truncated cosine series with the omitted tail rigorously below tol. The
/// truncation length combines the monotone bound 2 L^{1-alpha}/(alpha-1) with
/// a partial-summation bound for the oscillating terms, so moderate
/// tolerances stay affordable away from x = 0. At x = 0 returns 2 zeta(alpha).
double fourier_kernel_series(double x, double alpha, double tol);

} // namespace lf
