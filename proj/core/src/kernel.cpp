#include "fracdirac/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fracdirac/error.hpp"
#include "fracdirac/quadrature.hpp"
#include "fracdirac/special_functions.hpp"
#include "wide_detail.hpp"

namespace fracdirac {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// 2^{1-n} / (α π^{n/2}) · τ^{-n/α}
cplx wright_prefactor(double alpha, int n, cplx tau) {
  const double c = std::pow(2.0, 1.0 - n) / (alpha * std::pow(kPi, 0.5 * n));
  return c * std::exp(-(n / alpha) * std::log(tau));
}

// K(0, τ): only the k = 0 series term survives.
cplx kernel_at_origin(double alpha, int n, cplx tau) {
  return wright_prefactor(alpha, n, tau) *
         std::exp(std::lgamma(n / alpha) - std::lgamma(0.5 * n));
}

void require_series_regime(double alpha) {
  if (!(alpha > 1.0)) {
    throw Error(Errc::invalid_argument,
                "Wright series needs alpha > 1 for uniform convergence (got alpha = " +
                    std::to_string(alpha) + ")");
  }
}

WrightSeriesWide make_kernel_series(double alpha, int n, double lambda_max, double guard) {
  require_series_regime(alpha);
  if (n < 1) throw Error(Errc::invalid_argument, "kernel: dimension n must be >= 1");
  return WrightSeriesWide(n / alpha, 2.0 / alpha, 0.5 * n, 1.0,
                          std::max(1.0, std::min(lambda_max, guard)));
}

}  // namespace

std::string_view to_string(KernelMethod m) noexcept {
  switch (m) {
    case KernelMethod::wright: return "wright";
    case KernelMethod::quadrature: return "quadrature";
    case KernelMethod::mellin_barnes: return "mellin";
    case KernelMethod::automatic: return "auto";
  }
  return "unknown";
}

KernelMethod parse_kernel_method(std::string_view name) {
  if (name == "wright") return KernelMethod::wright;
  if (name == "quadrature") return KernelMethod::quadrature;
  if (name == "mellin") return KernelMethod::mellin_barnes;
  if (name == "auto") return KernelMethod::automatic;
  throw Error(Errc::invalid_argument, "unknown kernel method '" + std::string(name) +
                                          "' (expected wright|quadrature|mellin|auto)");
}

void validate_query(const KernelQuery& q) {
  if (!(q.alpha > 0.0) || !std::isfinite(q.alpha)) {
    throw Error(Errc::invalid_argument, "kernel: alpha must be positive");
  }
  if (q.n < 1) throw Error(Errc::invalid_argument, "kernel: dimension n must be >= 1");
  if (!(q.r >= 0.0) || !std::isfinite(q.r)) {
    throw Error(Errc::invalid_argument, "kernel: r = |x| must be finite and >= 0");
  }
  if (q.tau == cplx{}) throw Error(Errc::invalid_argument, "kernel: tau must be nonzero");
  if (q.tau.real() < 0.0) {
    throw Error(Errc::invalid_argument,
                "kernel: Re(tau) must be >= 0 (tau = t e^{i pi theta/2} with |theta| <= 1)");
  }
}

cplx wright_argument(double alpha, double r, cplx tau) {
  return -0.25 * r * r * std::exp(-(2.0 / alpha) * std::log(tau));
}

WrightKernel::WrightKernel(double alpha, int n, double lambda_max, KernelOptions opts)
    : alpha_(alpha),
      n_(n),
      opts_(opts),
      series_(make_kernel_series(alpha, n, lambda_max, opts.lambda_guard)) {}

KernelValue WrightKernel::series(double r, cplx tau) const {
  validate_query({alpha_, n_, r, tau});
  const cplx lambda = wright_argument(alpha_, r, tau);
  if (std::abs(lambda) > opts_.lambda_guard) {
    throw Error(Errc::refused, "Wright argument |lambda| = " + std::to_string(std::abs(lambda)) +
                                   " beyond the cancellation guard " +
                                   std::to_string(opts_.lambda_guard));
  }
  if (std::abs(lambda) > series_.lambda_max()) {
    throw Error(Errc::refused, "Wright argument beyond the tabulated coefficient range");
  }
  const WideSeriesResult s = series_.sum(lambda);
  if (!(s.est_error <= opts_.cancellation_rel * std::abs(s.value))) {
    throw Error(Errc::refused, "Wright series cancellation (sum of |terms| / |sum| = " +
                                   std::to_string(s.cancellation) + ") exceeds the guard");
  }
  const cplx pre = wright_prefactor(alpha_, n_, tau);
  const cplx value = pre * s.value;
  return {value, KernelMethod::wright, std::abs(pre) * s.est_error + 4 * kEps * std::abs(value)};
}

KernelValue WrightKernel::operator()(double r, cplx tau) const {
  try {
    return series(r, tau);
  } catch (const Error& e) {
    if (e.code() != Errc::refused || !(tau.real() > 0.0)) throw;
  }
  KernelOptions qopts = opts_;
  return kernel_quadrature({alpha_, n_, r, tau}, qopts);
}

KernelValue kernel_wright(const KernelQuery& q, const KernelOptions& opts) {
  validate_query(q);
  require_series_regime(q.alpha);
  const double lam = std::abs(wright_argument(q.alpha, q.r, q.tau));
  if (lam > opts.lambda_guard) {
    if (q.tau.real() > 0.0) return kernel_quadrature(q, opts);
    throw Error(Errc::refused, "Wright argument beyond guard and Re(tau) = 0 leaves no "
                               "damped quadrature to delegate to");
  }
  const WrightKernel kernel(q.alpha, q.n, lam, opts);
  return kernel(q.r, q.tau);
}

KernelValue kernel_quadrature(const KernelQuery& q, const KernelOptions& opts) {
  validate_query(q);
  if (!(q.tau.real() > 0.0)) {
    throw Error(Errc::refused,
                "kernel_quadrature: Re(tau) = 0 leaves the Bessel integral undamped");
  }
  if (q.r == 0.0) {
    const cplx v = kernel_at_origin(q.alpha, q.n, q.tau);
    return {v, KernelMethod::quadrature, 4 * kEps * std::abs(v)};
  }
  const double alpha = q.alpha;
  const double r = q.r;
  const cplx tau = q.tau;
  const double half_n = 0.5 * q.n;
  const double nu = half_n - 1.0;

  auto integrand = [&](double rho) -> cplx {
    const double damp_arg = std::pow(rho / r, alpha);
    return std::exp(-tau * damp_arg) * std::pow(rho, half_n) * bessel_j(nu, rho);
  };

  // Cut where exp(-Re τ (ρ/r)^α) times the Bessel envelope drops below e^{-50}.
  double rho_max = r * std::pow(50.0 / tau.real(), 1.0 / alpha);
  for (int it = 0; it < 3; ++it) {
    const double envelope = std::max(0.0, 0.5 * (q.n - 1) * std::log(std::max(rho_max, 1.0)));
    rho_max = r * std::pow((50.0 + envelope) / tau.real(), 1.0 / alpha);
  }

  // Panels between consecutive (McMahon-approximated) zeros of J_ν.
  std::vector<double> edges{0.0};
  for (int k = 1;; ++k) {
    const double z = (k + 0.5 * nu - 0.25) * kPi;
    if (z >= rho_max) break;
    if (z > edges.back()) edges.push_back(z);
  }
  edges.push_back(rho_max);
  const std::size_t panels = edges.size() - 1;

  std::vector<cplx> coarse(panels);
  double abs_scale = 0.0;
  cplx coarse_total = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    coarse[i] = gauss_integrate(integrand, edges[i], edges[i + 1], 40);
    coarse_total += coarse[i];
    abs_scale += std::abs(coarse[i]);
  }
  // Below the roundoff of the panel sum no refinement can help.
  const double target =
      std::max(opts.tol * 0.1 * std::abs(coarse_total), 4 * kEps * abs_scale) / panels;

  cplx total = 0.0;
  double err = 0.0;
  bool converged = true;
  for (std::size_t i = 0; i < panels; ++i) {
    const auto res = adaptive_gauss(integrand, edges[i], edges[i + 1], target, 12);
    total += res.value;
    err += res.error;
    converged = converged && res.converged;
  }
  // alternating-series style bound: one half-period of the damped envelope
  const double tail = std::exp(-tau.real() * std::pow(rho_max / r, alpha)) *
                      std::pow(rho_max, 0.5 * (q.n - 1)) * kPi;
  const double scale = std::pow(2.0 * kPi, -half_n) * std::pow(r, -q.n);
  const cplx value = scale * total;
  const double est = scale * (err + tail + 4 * kEps * abs_scale);
  const double floor = 64 * kEps * scale * abs_scale;
  if (!converged && est > std::max(100.0 * opts.tol * std::abs(value), floor)) {
    throw Error(Errc::no_convergence, "kernel_quadrature: requested tolerance unreachable (est " +
                                          std::to_string(est) + ")");
  }
  return {value, KernelMethod::quadrature, est};
}

ContourSpec ContourSpec::defaults(double alpha, int n, cplx tau) {
  ContourSpec spec;
  spec.c = 0.25 * (1.0 - 3.0 * n);
  const double rate = (0.5 * kPi - std::abs(std::arg(tau))) / alpha;
  // exp(-rate T) ~ e^{-40}; capped for near-imaginary τ where the decay vanishes
  spec.half_length = rate > 0.0 ? std::min(40.0 / rate, 400.0) : 400.0;
  spec.half_length = std::max(spec.half_length, 20.0);
  const double step = 0.05;
  int intervals = static_cast<int>(std::ceil(2.0 * spec.half_length / step));
  if (intervals % 2) ++intervals;
  spec.nodes = intervals + 1;
  return spec;
}

KernelValue kernel_mellin_barnes(const KernelQuery& q, const ContourSpec& spec) {
  validate_query(q);
  if (!(q.alpha > 1.0)) {
    throw Error(Errc::invalid_argument, "kernel_mellin_barnes: needs alpha > 1");
  }
  if (!(q.r > 0.0)) throw Error(Errc::invalid_argument, "kernel_mellin_barnes: needs r > 0");
  const double lo = -static_cast<double>(q.n);
  const double hi = 0.5 * (1.0 - q.n);
  if (!(spec.c > lo && spec.c < hi)) {
    throw Error(Errc::invalid_argument, "kernel_mellin_barnes: abscissa c must lie in the strip "
                                        "-n < c < (1-n)/2");
  }
  if (!(spec.half_length > 0.0) || spec.nodes < 3 || (spec.nodes - 1) % 2 != 0) {
    throw Error(Errc::invalid_argument, "kernel_mellin_barnes: need half_length > 0 and an odd "
                                        "node count (even number of intervals)");
  }
  const double alpha = q.alpha;
  const double half_n = 0.5 * q.n;
  const cplx log_z = std::log(0.5 * q.r) - std::log(q.tau) / alpha;

  auto integrand = [&](double y) -> cplx {
    const cplx s{spec.c, y};
    const cplx lg = log_gamma(half_n + 0.5 * s) + log_gamma(-s / alpha) - log_gamma(-0.5 * s) -
                    s * log_z;
    return std::exp(lg);
  };

  const int intervals = spec.nodes - 1;
  const double h = 2.0 * spec.half_length / intervals;
  cplx fine = 0.0;
  cplx coarse = 0.0;
  double abs_sum = 0.0;
  for (int i = 0; i <= intervals; ++i) {
    const double y = -spec.half_length + i * h;
    const double w = (i == 0 || i == intervals) ? 0.5 : 1.0;
    const cplx f = integrand(y);
    fine += w * f;
    abs_sum += std::abs(f);
    if (i % 2 == 0) coarse += w * f;
  }
  // (1/2πi) ∫ ds with ds = i dy
  const cplx i_fine = fine * h / (2.0 * kPi);
  const cplx i_coarse = coarse * (2.0 * h) / (2.0 * kPi);
  const double end_mag = std::max(std::abs(integrand(spec.half_length)),
                                  std::abs(integrand(-spec.half_length)));
  const double rate = (0.5 * kPi - std::abs(std::arg(q.tau))) / alpha;
  const double tail = rate > 0.0 ? end_mag / (rate * 2.0 * kPi) : end_mag * spec.half_length;

  const double scale = 1.0 / (alpha * std::pow(kPi, half_n) * std::pow(q.r, q.n));
  const cplx value = scale * i_fine;
  const double est = scale * (std::abs(i_fine - i_coarse) + 2.0 * tail +
                              4 * kEps * abs_sum * h / (2.0 * kPi));
  return {value, KernelMethod::mellin_barnes, est};
}

KernelValue kernel_mellin_barnes(const KernelQuery& q) {
  return kernel_mellin_barnes(q, ContourSpec::defaults(q.alpha, q.n, q.tau));
}

KernelValue kernel_auto(const KernelQuery& q, const KernelOptions& opts) {
  validate_query(q);
  std::string why;
  if (q.alpha > 1.0) {
    const double lam = std::abs(wright_argument(q.alpha, q.r, q.tau));
    if (lam <= opts.lambda_guard) {
      try {
        return WrightKernel(q.alpha, q.n, lam, opts).series(q.r, q.tau);
      } catch (const Error& e) {
        if (e.code() != Errc::refused) throw;
        why = e.what();
      }
    } else {
      why = "Wright argument beyond guard";
    }
    const bool strip_ok = q.r > 0.0 && std::abs(std::arg(q.tau)) < 0.5 * kPi - 1e-12;
    if (strip_ok) {
      const KernelValue mb = kernel_mellin_barnes(q);
      if (mb.est_error <= std::max(1e-8, opts.tol) * std::abs(mb.value) || !(q.tau.real() > 0.0)) {
        return mb;
      }
    }
  } else {
    why = "alpha <= 1 is outside the series/contour regime";
  }
  if (q.tau.real() > 0.0) return kernel_quadrature(q, opts);
  throw Error(Errc::refused, "no kernel method applies: " + why + "; Re(tau) = 0 rules out "
                             "the damped quadrature");
}

KernelValue kernel_evaluate(const KernelQuery& q, KernelMethod method, const KernelOptions& opts) {
  switch (method) {
    case KernelMethod::wright: return kernel_wright(q, opts);
    case KernelMethod::quadrature: return kernel_quadrature(q, opts);
    case KernelMethod::mellin_barnes: return kernel_mellin_barnes(q);
    case KernelMethod::automatic: return kernel_auto(q, opts);
  }
  throw Error(Errc::invalid_argument, "unknown kernel method");
}

double heat_kernel(int n, double r, double t) {
  if (!(t > 0.0)) throw Error(Errc::invalid_argument, "heat_kernel: t must be positive");
  if (n < 1) throw Error(Errc::invalid_argument, "heat_kernel: n must be >= 1");
  return std::pow(4.0 * kPi * t, -0.5 * n) * std::exp(-r * r / (4.0 * t));
}

ResidueSeries kernel_residue_series(const KernelQuery& q, int k_max) {
  validate_query(q);
  require_series_regime(q.alpha);
  if (k_max < 1) throw Error(Errc::invalid_argument, "kernel_residue_series: k_max must be >= 1");
  // poles of Γ(n/2 + s/2) at s = -n-2k must not meet those of Γ(-s/α) at s = αk
  for (int k = 0; k < k_max; ++k) {
    const double x = (q.n + 2.0 * k) / q.alpha;
    if (x <= 0.0 && std::floor(x) == x) {
      throw Error(Errc::pole, "kernel_residue_series: pole collision at k = " + std::to_string(k));
    }
  }
  return detail::residue_terms_wide(q.alpha, q.n, q.r, q.tau, k_max);
}

std::vector<cplx> kernel_residue_series_terms(const KernelQuery& q, int k_max) {
  return kernel_residue_series(q, k_max).terms;
}

}  // namespace fracdirac
