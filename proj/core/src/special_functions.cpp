#include "fracdirac/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fracdirac/error.hpp"

namespace fracdirac {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr double kStirling[] = {
    1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,       -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,   1.0 / 156.0,        -3617.0 / 122400.0,
    43867.0 / 244188.0,  -174611.0 / 125400.0,
};

// Stirling series, accurate to well below 1e-16 for |z| >= 15.
cplx log_gamma_stirling(cplx z) {
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx corr = 0.0;
  cplx p = inv;
  for (double c : kStirling) {
    corr += c * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + corr;
}

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

cplx log_gamma_right(cplx z) {
  // Re z >= 0.5: shift up until |z| is large enough for Stirling.
  cplx shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return log_gamma_stirling(z) - shift;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    throw Error(Errc::pole, "log_gamma: pole at z = " + std::to_string(z.real()));
  }
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Reflection: Γ(z)Γ(1-z) = π / sin(πz). Only exp() of this branch is used
  // away from the right half-plane.
  return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

double bessel_j(double nu, double x) {
  if (nu < -0.5) {
    throw Error(Errc::invalid_argument, "bessel_j: order must be >= -1/2");
  }
  if (x < 0.0) throw Error(Errc::invalid_argument, "bessel_j: argument must be >= 0");
  if (nu >= 0.0) return std::cyl_bessel_j(nu, x);
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  if (nu == -0.5) return std::sqrt(2.0 / (kPi * x)) * std::cos(x);
  // -1/2 < ν < 0: downward recurrence from ν+1, ν+2 (stable for J).
  return 2.0 * (nu + 1.0) / x * std::cyl_bessel_j(nu + 1.0, x) - std::cyl_bessel_j(nu + 2.0, x);
}

SeriesResult wright_1psi1(const WrightParams& p, cplx lambda, const SeriesConfig& cfg) {
  if (p.alpha1 == 0.0 || p.beta1 == 0.0) {
    throw Error(Errc::invalid_argument, "wright_1psi1: alpha1 and beta1 must be nonzero");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();

  // log|term_k| and arg(term_k), with 1/Γ at a pole giving an exact zero.
  auto term = [&](int k, bool& zero) -> cplx {
    const cplx num_arg = p.a1 + p.alpha1 * k;
    if (is_nonpositive_integer(num_arg)) {
      throw Error(Errc::pole, "wright_1psi1: Gamma pole in numerator at k = " + std::to_string(k));
    }
    const cplx den_arg = p.b1 + p.beta1 * k;
    zero = is_nonpositive_integer(den_arg);
    if (zero) return 0.0;
    cplx lt = log_gamma(num_arg) - log_gamma(den_arg) - std::lgamma(k + 1.0);
    if (k > 0) lt += static_cast<double>(k) * std::log(lambda);
    return lt;
  };

  SeriesResult out;
  if (lambda == cplx{}) {
    bool zero = false;
    const cplx lt = term(0, zero);
    out.value = zero ? 0.0 : std::exp(lt);
    out.terms_used = 1;
    out.tail_bound = eps * std::abs(out.value);
    return out;
  }

  cplx sum = 0.0;
  double abs_sum = 0.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  int small_run = 0;
  for (int k = 0; k < cfg.max_terms; ++k) {
    bool zero = false;
    const cplx lt = term(k, zero);
    if (zero) continue;
    if (lt.real() > 700.0) {
      throw Error(Errc::no_convergence,
                  "wright_1psi1: term growth beyond double range at k = " + std::to_string(k));
    }
    const cplx t = std::exp(lt);
    const double mag = std::abs(t);
    sum += t;
    abs_sum += mag;
    out.terms_used = k + 1;

    const bool decreasing = mag <= prev_mag;
    prev_mag = mag;
    small_run = (decreasing && mag <= cfg.rel_tol * std::abs(sum)) ? small_run + 1 : 0;
    if (small_run >= 2) {
      // Geometric bound on the tail from the next term's ratio.
      bool next_zero = false;
      const cplx next_lt = term(k + 1, next_zero);
      const double next = next_zero ? 0.0 : std::exp(next_lt.real());
      const double q = mag > 0.0 ? next / mag : 0.0;
      const double tail = q < 1.0 ? next / (1.0 - q) : next;
      out.value = sum;
      out.tail_bound = tail + 4.0 * eps * out.terms_used * abs_sum;
      return out;
    }
  }
  throw Error(Errc::no_convergence, "wright_1psi1: no convergence within " +
                                        std::to_string(cfg.max_terms) + " terms");
}

cplx mellin_f(cplx s, double alpha) {
  if (!(alpha > 1.0)) throw Error(Errc::invalid_argument, "mellin_f: alpha must exceed 1");
  if (!(s.real() < 0.0)) throw Error(Errc::invalid_argument, "mellin_f: requires Re(s) < 0");
  return gamma(-s / alpha) / alpha;
}

cplx mellin_g(cplx s, int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "mellin_g: dimension must be >= 1");
  const double lo = -static_cast<double>(n);
  const double hi = (1.0 - n) / 2.0;
  if (!(s.real() > lo && s.real() < hi)) {
    throw Error(Errc::invalid_argument,
                "mellin_g: Re(s) outside the Weber strip (-n, (1-n)/2)");
  }
  const double half_n = 0.5 * n;
  return std::pow(2.0, half_n + s) * std::exp(log_gamma(half_n + 0.5 * s) - log_gamma(-0.5 * s));
}

}  // namespace fracdirac
