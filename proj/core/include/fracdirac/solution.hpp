#pragma once

// Fundamental solution Φ_α(x,t;θ) of ∂_t Φ = -(-Δ)^{α/2} exp(iπθ/2 H) Φ,
// Φ(x,0) = δ(x), with Fourier data
//   F Φ(ξ,t) = χ₋(ξ) exp(-t e^{iπθ/2}|ξ|^α) + χ₊(ξ) exp(-t e^{-iπθ/2}|ξ|^α).

#include <vector>

#include "fracdirac/clifford.hpp"
#include "fracdirac/kernel.hpp"
#include "fracdirac/spectral.hpp"

namespace fracdirac {

// Order α, skewness θ and the band index m with 2m <= α < 2m+2.
struct SkewSetup {
  double alpha;
  double theta;
  int m;

  // t e^{iπθ/2}, paired with χ₋.
  cplx tau(double t) const;
};

// Accepts (α, θ) inside the window 2m <= α < 2m+2, |θ| <= min{α-2m, 2m+2-α},
// with m >= 1, or m >= 0 when allow_m_zero is set. Window edges are compared
// with a relative slack of a few ulps of α.
SkewSetup validate_params(double alpha, double theta, bool allow_m_zero = false);

// Scalar kernel at one point: K_{α,n}(r, t e^{iπθ/2}). Its real part is the
// scalar part of Φ; its imaginary part feeds the Hilbert convolution.
struct PointwiseValue {
  double real_part;
  double imag_part;
  KernelMethod method;
  double est_error;
};

PointwiseValue solution_pointwise(const SkewSetup& s, int n, double r, double t,
                                  const KernelOptions& opts = {});

// Grade split of Φ at one grid point.
struct SolutionSample {
  double real_part;          // Re of the scalar coefficient
  Multivector hilbert_part;  // grade-1 part
  Multivector total;
};

SolutionSample solution_sample(const MultivectorField& phi, std::size_t point);

// Mode-wise spectral multiplier of Φ(·,t).
Paravector solution_symbol(const SkewSetup& s, double t, std::span<const double> xi);

MultivectorField solution_spectral_data(const SkewSetup& s, const GridSpec& grid, double t);

// Production path: inverse transform of the spectral data.
MultivectorField solution_field_spectral(const SkewSetup& s, const GridSpec& grid, double t);

// K(·, t e^{±iπθ/2}) sampled pointwise with the Wright kernel, then
// ½(I+H)K₊ + ½(I-H)K₋ with H applied spectrally.
MultivectorField solution_field_projected(const SkewSetup& s, const GridSpec& grid, double t,
                                         const KernelOptions& opts = {});

enum class HilbertPath { spectral, singular };

// Re K + i H(Im K), K = K(·, t e^{iπθ/2}). The singular path applies H by
// principal-value quadrature (n <= 2) with the given tolerance.
MultivectorField solution_field_hilbert(const SkewSetup& s, const GridSpec& grid, double t,
                                         HilbertPath path, double quad_tol = 1e-3,
                                         const KernelOptions& opts = {});

// Grid extent heuristic L = 8 t^{1/α} + margin.
double suggested_half_width(double alpha, double t, double margin = 4.0);

// (2π)^{-1} ∫ exp(-sign·i t |ξ|^α) e^{ixξ} dξ for odd α = 2m+1, from the
// contour-rotated form e^{∓iπ/(2α)}/π ∫_0^∞ e^{-t v^α} cos(x v e^{∓iπ/(2α)}) dv.
cplx airy_oracle(int m, double x, double t, int sign, double abs_tol = 1e-14);

struct AiryReport {
  int m;
  double t;
  int sign;
  double x_max;
  std::size_t points;
  double max_abs_dev;       // Re Φ vs oracle
  double max_oracle_abs;
  double symmetry_dev;      // Re Φ(x,t;+1) vs Re Φ(-x,t;-1)
  double scaling_dev;       // Re Φ(x,t) vs t^{-1/α} Re Φ(x t^{-1/α}, 1)
};

// Compares Re Φ_{2m+1}(x,t;±1) at the grid points with |x| <= x_max against
// airy_oracle. Throws Errc::invalid_argument unless the grid is 1-D.
AiryReport airy_reference_check(int m, const GridSpec& grid1d, double t, int sign,
                                double x_max = 5.0);

}  // namespace fracdirac
