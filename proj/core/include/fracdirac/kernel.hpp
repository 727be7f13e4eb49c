#pragma once

// Scalar Lévy kernel K_{α,n}(x, τ) = (2π)^{-n} ∫ exp(-τ|ξ|^α) e^{i<x,ξ>} dξ,
// radial in r = |x|, for Re τ >= 0. Three independent evaluations:
//   - Wright series 1Ψ1[(n/α, 2/α); (n/2, 1); -r² τ^{-2/α} / 4]  (production)
//   - Bessel radial integral over ρ^{n/2} J_{n/2-1}(ρ)           (oracle)
//   - Mellin-Barnes line integral of Γ(n/2+s/2)Γ(-s/α)/Γ(-s/2)   (validation)
// All fractional powers of τ use the principal branch.

#include <complex>
#include <memory>
#include <string_view>
#include <vector>

#include "fracdirac/wide_series.hpp"

namespace fracdirac {

using cplx = std::complex<double>;

struct KernelQuery {
  double alpha;
  int n;
  double r;
  cplx tau;
};

// Vertical line Re s = c, truncated to |Im s| <= half_length and sampled with
// `nodes` equispaced points (an even number of trapezoid intervals).
struct ContourSpec {
  double c;
  double half_length;
  int nodes;

  // Strip midpoint, a truncation length from the Gamma-ratio decay rate
  // (π/2 - |arg τ|)/α, and a step of 0.05.
  static ContourSpec defaults(double alpha, int n, cplx tau);
};

enum class KernelMethod { wright, quadrature, mellin_barnes, automatic };

std::string_view to_string(KernelMethod m) noexcept;
KernelMethod parse_kernel_method(std::string_view name);

struct KernelValue {
  cplx value;
  KernelMethod method;
  double est_error = 0.0;  // absolute
};

struct KernelOptions {
  double tol = 1e-12;            // target relative accuracy
  double lambda_guard = 700.0;   // |λ| above this leaves the series path
  double cancellation_rel = 1e-10;  // max est. relative error accepted from the series
};

// Wright argument λ = -r² τ^{-2/α} / 4.
cplx wright_argument(double alpha, double r, cplx tau);

// Series evaluator for one (α, n); holds the coefficient table so repeated
// evaluations (grids, tables) share it. Immutable after construction.
class WrightKernel {
 public:
  WrightKernel(double alpha, int n, double lambda_max = 64.0, KernelOptions opts = {});

  double alpha() const noexcept { return alpha_; }
  int dimension() const noexcept { return n_; }

  // Series only. Throws Errc::refused when |λ| exceeds the guard or the
  // estimated cancellation error exceeds opts.cancellation_rel.
  KernelValue series(double r, cplx tau) const;

  // Series, delegating to the quadrature path when the series refuses.
  KernelValue operator()(double r, cplx tau) const;

 private:
  double alpha_;
  int n_;
  KernelOptions opts_;
  WrightSeriesWide series_;
};

void validate_query(const KernelQuery& q);

KernelValue kernel_wright(const KernelQuery& q, const KernelOptions& opts = {});

// Requires Re τ > 0. r = 0 uses the k = 0 Wright term.
KernelValue kernel_quadrature(const KernelQuery& q, const KernelOptions& opts = {});

KernelValue kernel_mellin_barnes(const KernelQuery& q, const ContourSpec& spec);
KernelValue kernel_mellin_barnes(const KernelQuery& q);

// wright if α > 1 and |λ| within guard, else mellin_barnes if the strip is
// usable (α > 1, r > 0, |arg τ| < π/2), else quadrature if Re τ > 0.
KernelValue kernel_auto(const KernelQuery& q, const KernelOptions& opts = {});

KernelValue kernel_evaluate(const KernelQuery& q, KernelMethod method,
                            const KernelOptions& opts = {});

// (4πt)^{-n/2} exp(-r²/4t)
double heat_kernel(int n, double r, double t);

struct ResidueSeries {
  std::vector<cplx> terms;         // residues at s = -n - 2k, k = 0..k_max-1
  std::vector<cplx> partial_sums;  // accumulated in binary128, then rounded
};

ResidueSeries kernel_residue_series(const KernelQuery& q, int k_max);
std::vector<cplx> kernel_residue_series_terms(const KernelQuery& q, int k_max);

}  // namespace fracdirac
