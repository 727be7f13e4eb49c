#include <quadmath.h>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fracdirac/error.hpp"
#include "fracdirac/wide_series.hpp"
#include "wide_detail.hpp"

namespace fracdirac {

using f128 = __float128;

struct WrightSeriesWide::Table {
  std::vector<f128> coeff;  // Γ(a1 + α1 k) / Γ(b1 + β1 k) / k!
};

namespace {

struct c128 {
  f128 re = 0;
  f128 im = 0;
};

inline c128 mul(c128 a, c128 b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline double mag(c128 a) { return static_cast<double>(hypotq(a.re, a.im)); }

}  // namespace

WrightSeriesWide::WrightSeriesWide(double a1, double alpha1, double b1, double beta1,
                                   double lambda_max)
    : lambda_max_(lambda_max) {
  if (!(a1 > 0 && b1 > 0 && alpha1 > 0 && beta1 > 0 && 1.0 + beta1 - alpha1 > 0)) {
    throw Error(Errc::invalid_argument,
                "WrightSeriesWide: needs positive parameters and 1 + beta1 - alpha1 > 0");
  }
  if (!(lambda_max > 0)) {
    throw Error(Errc::invalid_argument, "WrightSeriesWide: lambda_max must be positive");
  }
  auto table = std::make_shared<Table>();
  const f128 log_lmax = logq(static_cast<f128>(lambda_max));
  f128 peak = -std::numeric_limits<double>::max();
  constexpr int kCap = 20000;
  // 1/k! by recurrence keeps the coefficient error near one ulp; exp of a
  // large lgamma would carry ulp(|lgamma|) instead.
  f128 inv_factorial = 1;
  for (int k = 0; k < kCap; ++k) {
    if (k > 0) inv_factorial /= k;
    const f128 ratio_log = lgammaq(static_cast<f128>(a1) + static_cast<f128>(alpha1) * k) -
                           lgammaq(static_cast<f128>(b1) + static_cast<f128>(beta1) * k);
    const f128 c = ratio_log == 0 ? inv_factorial : expq(ratio_log) * inv_factorial;
    table->coeff.push_back(c);
    const f128 lc = logq(c);
    // log of the k-th term at the largest admissible |λ|
    const f128 lt = lc + k * log_lmax;
    if (lt > peak) peak = lt;
    // 100 nats below the peak and falling: far beyond binary128 resolution.
    if (k > 8 && lt < peak - 100) break;
  }
  if (static_cast<int>(table->coeff.size()) >= kCap) {
    throw Error(Errc::no_convergence, "WrightSeriesWide: coefficient table did not close");
  }
  table_ = std::move(table);
}

int WrightSeriesWide::table_size() const noexcept {
  return static_cast<int>(table_->coeff.size());
}

WideSeriesResult WrightSeriesWide::sum(cplx lambda, double rel_tol) const {
  if (std::abs(lambda) > lambda_max_) {
    throw Error(Errc::invalid_argument, "WrightSeriesWide: |lambda| exceeds tabulated range");
  }
  const auto& coeff = table_->coeff;
  const c128 lam{lambda.real(), lambda.imag()};
  c128 power{1, 0};
  c128 acc{};
  f128 abs_acc = 0;
  int used = 0;
  int small_run = 0;
  double last = 0.0;
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    const c128 t{coeff[k] * power.re, coeff[k] * power.im};
    acc.re += t.re;
    acc.im += t.im;
    const f128 tm = hypotq(t.re, t.im);
    abs_acc += tm;
    used = static_cast<int>(k) + 1;
    last = static_cast<double>(tm);
    const f128 am = hypotq(acc.re, acc.im);
    small_run = (k > 2 && tm <= static_cast<f128>(rel_tol) * am) ? small_run + 1 : 0;
    if (small_run >= 3) break;
    power = mul(power, lam);
  }
  WideSeriesResult out;
  out.value = {static_cast<double>(acc.re), static_cast<double>(acc.im)};
  out.terms_used = used;
  const double sum_mag = mag(acc);
  const double abs_sum = static_cast<double>(abs_acc);
  out.cancellation = sum_mag > 0 ? abs_sum / sum_mag : INFINITY;
  // binary128 unit roundoff 2^-113; rounding in coefficients and powers
  // accumulates like a random walk over the terms that matter.
  constexpr double u128 = 9.63e-35;
  out.est_error = 4.0 * std::sqrt(static_cast<double>(used)) * u128 * abs_sum + last;
  return out;
}

namespace detail {

ResidueSeries residue_terms_wide(double alpha, int n, double r, cplx tau, int k_max) {
  ResidueSeries out;
  out.terms.reserve(k_max);
  out.partial_sums.reserve(k_max);
  const f128 a = alpha;
  const f128 half_n = static_cast<f128>(n) / 2;
  // log w with w = r^2 tau^{-2/alpha} / 4, principal branches
  const f128 tau_abs = hypotq(tau.real(), tau.imag());
  const f128 tau_arg = atan2q(tau.imag(), tau.real());
  const f128 log_w_im = -(2 / a) * tau_arg;
  const f128 log_pi = logq(acosq(static_cast<f128>(-1)));
  const f128 ln2 = logq(static_cast<f128>(2));
  c128 acc{};
  for (int k = 0; k < k_max; ++k) {
    const f128 order = half_n + k;
    // r^{-n} w^{n/2+k} = r^{2k} 2^{-n-2k} tau^{-(n+2k)/alpha}; r = 0 keeps only k = 0.
    f128 log_mag = lgammaq((n + 2 * static_cast<f128>(k)) / a) - lgammaq(order) -
                   lgammaq(static_cast<f128>(k + 1)) + logq(static_cast<f128>(2)) -
                   logq(a) - half_n * log_pi - (n + 2 * static_cast<f128>(k)) * ln2 -
                   order * (2 / a) * logq(tau_abs);
    if (k > 0) {
      if (r == 0.0) {
        out.terms.push_back(0.0);
        out.partial_sums.push_back(out.partial_sums.back());
        continue;
      }
      log_mag += 2 * static_cast<f128>(k) * logq(static_cast<f128>(r));
    }
    const f128 phase = order * log_w_im;
    f128 m = expq(log_mag);
    if (k % 2 == 1) m = -m;
    const c128 t{m * cosq(phase), m * sinq(phase)};
    acc.re += t.re;
    acc.im += t.im;
    out.terms.emplace_back(static_cast<double>(t.re), static_cast<double>(t.im));
    out.partial_sums.emplace_back(static_cast<double>(acc.re), static_cast<double>(acc.im));
  }
  return out;
}

}  // namespace detail

}  // namespace fracdirac
