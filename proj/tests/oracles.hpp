#pragma once

// Independent reference implementations. Each one takes a different route
// from the library code it checks.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

// e_a e_b by writing out generator words, bubble-sorting and contracting
// e_j e_j = -1. Returns {sign, mask}.
inline std::pair<int, std::uint32_t> blade_product(std::uint32_t a, std::uint32_t b) {
  std::vector<int> word;
  for (int j = 0; j < 32; ++j) {
    if (a & (1u << j)) word.push_back(j);
  }
  for (int j = 0; j < 32; ++j) {
    if (b & (1u << j)) word.push_back(j);
  }
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  std::uint32_t mask = 0;
  for (int j : word) mask |= 1u << j;
  return {sign, mask};
}

// Ascending series Σ (-1)^k (x/2)^{2k+ν} / (k! Γ(k+ν+1)), long double.
inline double bessel_series(double nu, double x, int terms = 30) {
  long double sum = 0.0L;
  const long double h = 0.5L * x;
  for (int k = 0; k < terms; ++k) {
    const long double lg = std::lgamma(static_cast<long double>(k + 1)) +
                           std::lgamma(static_cast<long double>(k + nu + 1));
    const long double mag = std::exp((2 * k + nu) * std::log(h) - lg);
    // Γ(k+ν+1) < 0 only for k+ν+1 in (-1, 0), impossible for ν >= -1/2.
    sum += (k % 2 ? -mag : mag);
  }
  return static_cast<double>(sum);
}

// Composite 5-point Gauss-Legendre with textbook nodes, long double.
template <class F>
lcplx composite_gauss(F&& f, long double a, long double b, int panels) {
  static constexpr std::array<long double, 5> x{0.0L, 0.5384693101056830910363144L,
                                                -0.5384693101056830910363144L,
                                                0.9061798459386639927976269L,
                                                -0.9061798459386639927976269L};
  static constexpr std::array<long double, 5> w{0.5688888888888888888888889L,
                                                0.4786286704993664680412915L,
                                                0.4786286704993664680412915L,
                                                0.2369268850561890875144638L,
                                                0.2369268850561890875144638L};
  const long double h = (b - a) / panels;
  lcplx acc = 0.0L;
  for (int p = 0; p < panels; ++p) {
    const long double mid = a + (p + 0.5L) * h;
    for (int i = 0; i < 5; ++i) acc += w[i] * f(mid + 0.5L * h * x[i]);
  }
  return acc * (0.5L * h);
}

// Upper limit where Re τ u^α has grown past 60.
inline long double damping_cutoff(double alpha, double re_tau) {
  return std::pow(60.0L / re_tau, 1.0L / alpha);
}

// n = 1 kernel as a cosine transform: (1/π) ∫_0^∞ e^{-τu^α} cos(ru) du.
inline cplx kernel_1d(double alpha, double r, cplx tau) {
  const long double U = damping_cutoff(alpha, tau.real());
  const lcplx lt(tau.real(), tau.imag());
  auto f = [&](long double u) { return std::exp(-lt * std::pow(u, (long double)alpha)) * std::cos(r * u); };
  const lcplx v = composite_gauss(f, 0.0L, U, 4000) / static_cast<long double>(M_PI);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// n = 3 kernel from the radial sine transform: (1/(2π² r)) ∫ e^{-τu^α} u sin(ru) du.
inline cplx kernel_3d(double alpha, double r, cplx tau) {
  const long double U = damping_cutoff(alpha, tau.real());
  const lcplx lt(tau.real(), tau.imag());
  auto f = [&](long double u) {
    return std::exp(-lt * std::pow(u, (long double)alpha)) * u * std::sin(r * u);
  };
  const long double pi = M_PI;
  const lcplx v = composite_gauss(f, 0.0L, U, 4000) / (2.0L * pi * pi * r);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// Γ(-s/α)/α = ∫_0^∞ ρ^{-s-1} e^{-ρ^α} dρ for real s < 0, via ρ = e^y.
inline double mellin_f_integral(double s, double alpha) {
  auto f = [&](long double y) {
    const long double rho = std::exp(y);
    return lcplx(std::pow(rho, -s) * std::exp(-std::pow(rho, (long double)alpha)), 0.0L);
  };
  // the integrand behaves like e^{-s y} as y -> -∞
  const long double lower = 45.0L / s;
  return static_cast<double>(composite_gauss(f, lower, 5.0L, 20000).real());
}

// (2π)^{-1} ∫ exp(-sign·i t |ξ|^α) e^{ixξ} dξ along the ray u = v e^{-i sign π/(3α)}
// (a different rotation from the library's π/(2α)).
inline cplx airy_ray(double alpha, double x, double t, int sign) {
  const long double psi = M_PI / (3.0 * alpha);
  const lcplx w = std::polar(1.0L, -sign * psi);
  const lcplx wa = std::polar(1.0L, -sign * alpha * psi);  // w^α
  const long double damp = t * std::sin(alpha * psi);
  long double U = 1.0L;
  while (damp * std::pow(U, (long double)alpha) - std::abs(x) * U < 60.0L) U *= 1.2L;
  auto f = [&](long double v) {
    const lcplx u = v * w;
    const lcplx phase = lcplx(0.0L, -sign * t) * std::pow(v, (long double)alpha) * wa;
    return std::exp(phase) * std::cos(static_cast<long double>(x) * u);
  };
  const lcplx val = w * composite_gauss(f, 0.0L, U, 4000) / static_cast<long double>(M_PI);
  return {static_cast<double>(val.real()), static_cast<double>(val.imag())};
}

inline double heat(int n, double r, double t) {
  return std::pow(4.0 * M_PI * t, -0.5 * n) * std::exp(-r * r / (4.0 * t));
}

}  // namespace oracle
