#pragma once

// Wright series with real parameters summed in binary128.
//
// For the Lévy kernel the series is alternating-like and the largest term can
// exceed the value by 20 or more orders of magnitude (α = 2, λ = -25 already
// peaks at ~6e9 against e^{-25}). Coefficients are formed once per parameter
// set with a 113-bit lgamma; every evaluation then reuses the table.

#include <complex>
#include <memory>

namespace fracdirac {

using cplx = std::complex<double>;

struct WideSeriesResult {
  cplx value;
  int terms_used = 0;
  double est_error = 0.0;     // absolute: truncation + binary128 rounding
  double cancellation = 1.0;  // Σ|term| / |Σ term|
};

class WrightSeriesWide {
 public:
  // Requires a1, b1 > 0 and alpha1, beta1 > 0 with 1 + beta1 - alpha1 > 0
  // (entire series). Coefficients are tabulated for |λ| <= lambda_max.
  WrightSeriesWide(double a1, double alpha1, double b1, double beta1, double lambda_max);

  WideSeriesResult sum(cplx lambda, double rel_tol = 1e-18) const;

  double lambda_max() const noexcept { return lambda_max_; }
  int table_size() const noexcept;

 private:
  struct Table;
  std::shared_ptr<const Table> table_;
  double lambda_max_;
};

}  // namespace fracdirac
