#pragma once

#include <complex>

namespace fracdirac {

using cplx = std::complex<double>;

// log Γ(z), continued analytically from the positive real axis (the branch
// satisfying logΓ(z+1) = logΓ(z) + log z for Re z > 0). Throws Errc::pole at
// nonpositive integers.
cplx log_gamma(cplx z);
cplx gamma(cplx z);

/// Bessel function of the first kind J_ν(x) for ν ≥ -1/2, x ≥ 0.
double bessel_j(double nu, double x);

/// Parameters (a1, α1; b1, β1) of the Wright series
///   1Ψ1(λ) = Σ_k Γ(a1 + α1 k) / Γ(b1 + β1 k) · λ^k / k!.
struct WrightParams {
  cplx a1;
  double alpha1;
  cplx b1;
  double beta1;
};

struct SeriesConfig {
  double rel_tol = 1e-15;
  int max_terms = 10000;
};

/// Partial sum of a series plus an estimate of what was left out.
/// tail_bound covers the truncated tail and the accumulated rounding of the
/// terms that were summed.
struct SeriesResult {
  cplx value;
  int terms_used = 0;
  double tail_bound = 0.0;
};

// Sums in double precision with each term formed in log space, so Gamma
// ratios never overflow. Throws Errc::pole if Γ(a1 + α1 k) hits a pole and
// Errc::no_convergence if the terms keep growing or the cap is reached.
SeriesResult wright_1psi1(const WrightParams& p, cplx lambda, const SeriesConfig& cfg = {});

// Mellin transform of f(ρ) = exp(-ρ^{-α}): (1/α) Γ(-s/α), Re s < 0.
cplx mellin_f(cplx s, double alpha);

// Mellin transform of g(ρ) = ρ^{n/2+1} J_{n/2-1}(ρ) (Weber integral):
// 2^{n/2+s} Γ(n/2 + s/2) / Γ(-s/2), valid for -n < Re s < (1-n)/2.
cplx mellin_g(cplx s, int n);

}  // namespace fracdirac
