#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace fracdirac {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Gauss-Legendre rule of the given order; computed once and cached.
const GaussRule& gauss_legendre(int order);

template <class F>
auto gauss_integrate(F&& f, double a, double b, int order = 20) {
  const GaussRule& rule = gauss_legendre(order);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  decltype(f(mid)) acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return acc * half;
}

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  bool converged = true;
};

namespace detail {

template <class F, class T>
void adaptive_step(F& f, double a, double b, T whole, double tol, int depth,
                   QuadResult<T>& out) {
  const double m = 0.5 * (a + b);
  const T left = gauss_integrate(f, a, m);
  const T right = gauss_integrate(f, m, b);
  const double diff = std::abs(left + right - whole);
  if (diff <= tol || depth == 0) {
    out.value += left + right;
    out.error += diff;
    if (diff > tol) out.converged = false;
    return;
  }
  adaptive_step(f, a, m, left, 0.5 * tol, depth - 1, out);
  adaptive_step(f, m, b, right, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

// Bisection on 20-point Gauss panels until each panel agrees with its two
// halves within its share of abs_tol.
template <class F>
auto adaptive_gauss(F&& f, double a, double b, double abs_tol, int max_depth = 30) {
  using T = decltype(f(a));
  QuadResult<T> out;
  const T whole = gauss_integrate(f, a, b);
  detail::adaptive_step(f, a, b, whole, abs_tol, max_depth, out);
  return out;
}

}  // namespace fracdirac
