#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "fracdirac/error.hpp"
#include "fracdirac/parallel.hpp"
#include "fracdirac/spectral.hpp"

namespace fracdirac {

namespace {

constexpr double kPi = std::numbers::pi;

struct Tap {
  std::array<int, kMaxFieldDimension> offset{};
  std::array<double, kMaxFieldDimension> weight{};  // coefficient of e_j
};

// One representative of every ± pair of offsets; the kernel is odd, so the
// partner carries the negated weight. Offsets on the -N/2 face coincide with
// their own mirror image and cancel.
std::vector<Tap> half_taps(const GridSpec& g) {
  const int N = g.points_per_axis;
  const int h = N / 2;
  std::vector<Tap> taps;
  if (g.n == 1) {
    // Periodized line kernel (1/2L) cot(πy/2L) on odd offsets, weight 2Δ.
    for (int m = 1; m < h; m += 2) {
      Tap t;
      t.offset[0] = m;
      t.weight[0] = (2.0 / N) / std::tan(kPi * m / N);
      taps.push_back(t);
    }
    return taps;
  }
  if (g.n != 2) {
    throw Error(Errc::invalid_argument,
                "singular-integral Hilbert transform is implemented for n = 1, 2");
  }
  // Γ(3/2) π^{-3/2} Δ^2 y/|y|^3 on the minimum-image lattice.
  const double c2 = 1.0 / (2.0 * kPi);
  // The excluded cell contributes -c2 (∫_cell y y^T/|y|^3) ∇f = -c2 · 2Δ ln(1+√2) ∇f;
  // with a central-difference gradient this adds ln(1+√2)/(2π) to the ±e_j taps.
  const double cell = std::log(1.0 + std::sqrt(2.0)) / (2.0 * kPi);
  for (int a = -h + 1; a < h; ++a) {
    for (int b = -h + 1; b < h; ++b) {
      if (a < 0 || (a == 0 && b <= 0)) continue;
      const double r = std::hypot(static_cast<double>(a), static_cast<double>(b));
      Tap t;
      t.offset[0] = a;
      t.offset[1] = b;
      t.weight[0] = c2 * a / (r * r * r);
      t.weight[1] = c2 * b / (r * r * r);
      if (a == 1 && b == 0) t.weight[0] += cell;
      if (a == 0 && b == 1) t.weight[1] += cell;
      taps.push_back(t);
    }
  }
  return taps;
}

MultivectorField singular_rule(const MultivectorField& f) {
  const GridSpec& g = f.grid();
  const auto taps = half_taps(g);
  const std::uint32_t nb = f.blades();
  std::array<std::vector<int>, kMaxFieldDimension> sign;
  for (int j = 0; j < g.n; ++j) {
    sign[j].resize(nb);
    for (std::uint32_t m = 0; m < nb; ++m) {
      sign[j][m] = blade_product(Blade{1u << j}, Blade{m}, g.n).sign;
    }
  }
  MultivectorField out(g, Space::physical);
  parallel_for(f.points(), [&](std::size_t p) {
    const auto base = g.axis_indices(p);
    std::vector<cplx> acc(nb, cplx{});
    std::array<int, kMaxFieldDimension> lo{}, hi{};
    for (const Tap& t : taps) {
      for (int a = 0; a < g.n; ++a) {
        lo[a] = base[a] - t.offset[a];
        hi[a] = base[a] + t.offset[a];
      }
      const std::size_t pm = g.flat_index(lo);  // x - y
      const std::size_t pp = g.flat_index(hi);  // x + y
      for (std::uint32_t b = 0; b < nb; ++b) {
        const cplx d = f.coeff(pm, b) - f.coeff(pp, b);
        if (d == cplx{}) continue;
        for (int j = 0; j < g.n; ++j) {
          if (t.weight[j] == 0.0) continue;
          acc[b ^ (1u << j)] += (sign[j][b] * t.weight[j]) * d;
        }
      }
    }
    for (std::uint32_t b = 0; b < nb; ++b) out.coeff(p, b) = acc[b];
  });
  return out;
}

}  // namespace

MultivectorField apply_hilbert_singular(const MultivectorField& f, double quad_tol) {
  if (f.space() != Space::physical) {
    throw Error(Errc::space_mismatch, "apply_hilbert_singular: field must be physical");
  }
  if (!(quad_tol > 0.0)) throw Error(Errc::invalid_argument, "quad_tol must be positive");
  const GridSpec& g = f.grid();
  if (g.points_per_axis % 4 != 0) {
    throw Error(Errc::invalid_argument,
                "singular quadrature needs N divisible by 4 for its resolution estimate");
  }
  MultivectorField fine = singular_rule(f);

  GridSpec cg = g;
  cg.points_per_axis = g.points_per_axis / 2;
  MultivectorField coarse_in(cg, Space::physical);
  std::array<int, kMaxFieldDimension> idx{};
  for (std::size_t p = 0; p < coarse_in.points(); ++p) {
    const auto ci = cg.axis_indices(p);
    for (int a = 0; a < g.n; ++a) idx[a] = 2 * ci[a];
    const std::size_t fp = g.flat_index(idx);
    for (std::uint32_t b = 0; b < f.blades(); ++b) coarse_in.coeff(p, b) = f.coeff(fp, b);
  }
  const MultivectorField coarse = singular_rule(coarse_in);
  double diff = 0.0;
  for (std::size_t p = 0; p < coarse.points(); ++p) {
    const auto ci = cg.axis_indices(p);
    for (int a = 0; a < g.n; ++a) idx[a] = 2 * ci[a];
    const std::size_t fp = g.flat_index(idx);
    for (std::uint32_t b = 0; b < f.blades(); ++b) {
      diff = std::max(diff, std::abs(fine.coeff(fp, b) - coarse.coeff(p, b)));
    }
  }
  const double scale = std::max(f.max_abs(), std::numeric_limits<double>::min());
  if (diff > quad_tol * scale) {
    throw Error(Errc::no_convergence,
                "singular quadrature: resolution estimate " + std::to_string(diff / scale) +
                    " exceeds quad_tol " + std::to_string(quad_tol) + " at N = " +
                    std::to_string(g.points_per_axis));
  }
  return fine;
}

MultivectorField riesz_kernel_weights(const GridSpec& grid, int j) {
  grid.validate();
  if (j < 1 || j > grid.n) throw Error(Errc::invalid_argument, "Riesz component index out of range");
  MultivectorField w(grid, Space::physical);
  const int h = grid.points_per_axis / 2;
  std::array<int, kMaxFieldDimension> idx{};
  for (const Tap& t : half_taps(grid)) {
    // Position y = mΔ sits at grid index m + N/2.
    for (int a = 0; a < grid.n; ++a) idx[a] = t.offset[a] + h;
    w.coeff(grid.flat_index(idx), 0) += t.weight[j - 1];
    for (int a = 0; a < grid.n; ++a) idx[a] = -t.offset[a] + h;
    w.coeff(grid.flat_index(idx), 0) -= t.weight[j - 1];
  }
  return w;
}

MultivectorField riesz_discrete_symbol(const GridSpec& grid, int j) {
  MultivectorField s = fft_forward(riesz_kernel_weights(grid, j));
  s *= 1.0 / grid.cell_volume();
  return s;
}

}  // namespace fracdirac
