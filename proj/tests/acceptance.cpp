// Acceptance criteria 1-11. One PASS/FAIL line per criterion; the exit status
// is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fracdirac/clifford.hpp"
#include "fracdirac/error.hpp"
#include "fracdirac/kernel.hpp"
#include "fracdirac/solution.hpp"
#include "fracdirac/spectral.hpp"
#include "fracdirac/verification.hpp"

#include <random>

using namespace fracdirac;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

const std::vector<std::pair<double, double>> kSkewSetups = {
    {2.0, 0.0}, {2.5, 0.5}, {3.0, 1.0}, {4.0, 0.0}, {5.0, 1.0}};

Outcome heat_collapse() {
  double worst = 0.0;
  for (int n : {1, 2, 3}) {
    for (double t : {0.5, 1.0, 2.0}) {
      const double r_max = std::sqrt(100.0 * t);  // r²/4t <= 25
      for (int i = 0; i <= 50; ++i) {
        const double r = r_max * i / 50.0;
        const KernelValue v = kernel_wright({2.0, n, r, t});
        const double exact = heat_kernel(n, r, t);
        worst = std::max(worst, std::abs(v.value - exact) / exact);
      }
    }
  }
  return {worst <= 1e-10, "max rel err " + sci(worst) + " (tol 1e-10)"};
}

Outcome three_way() {
  CrosscheckSpec spec;  // {2,2.5,3,4,5} x {1,2,3} x {0.25,1,2,4}, tau = 1
  double worst = 0.0;
  int missing = 0;
  for (const CrosscheckRow& row : crosscheck_methods(spec)) {
    if (!row.wright || !row.quadrature || !row.mellin) {
      ++missing;
      continue;
    }
    worst = std::max(worst, row.max_pairwise_rel);
  }
  return {missing == 0 && worst <= 1e-6,
          "max pairwise rel err " + sci(worst) + " over 60 rows (tol 1e-6), missing " +
              std::to_string(missing)};
}

Outcome residue_consistency() {
  double worst = 0.0;
  for (double alpha : {2.0, 2.5, 3.0, 4.0, 5.0}) {
    for (int n : {1, 2, 3}) {
      for (double r : {0.5, 2.0, 6.3}) {  // |λ| = r²/4 <= 10
        const KernelQuery q{alpha, n, r, 1.0};
        const ResidueSeries s = kernel_residue_series(q, 200);
        worst = std::max(worst, rel(s.partial_sums.back(), kernel_wright(q).value));
      }
    }
  }
  return {worst <= 1e-12, "max rel err at 200 terms " + sci(worst) + " (tol 1e-12)"};
}

Outcome clifford_laws() {
  std::mt19937_64 rng(1000);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto random_mv = [&](int n) {
    Multivector m(n);
    for (std::uint32_t b = 0; b < (1u << n); ++b) m[b] = {u(rng), u(rng)};
    return m;
  };
  double assoc = 0.0, dagger = 0.0;
  int anti_failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 6;
    const Multivector a = random_mv(n), b = random_mv(n), c = random_mv(n);
    const Multivector abc = (a * b) * c;
    double scale = 0.0;
    for (auto v : abc.coeffs()) scale = std::max(scale, std::abs(v));
    assoc = std::max(assoc, max_abs_diff(abc, a * (b * c)) / scale);
    const Multivector lhs = mv_dagger(a * b);
    double ls = 0.0;
    for (auto v : lhs.coeffs()) ls = std::max(ls, std::abs(v));
    dagger = std::max(dagger, max_abs_diff(lhs, mv_dagger(b) * mv_dagger(a)) / ls);
  }
  for (int n = 1; n <= 6; ++n) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Multivector ej = Multivector::basis(n, Blade{1u << j});
        const Multivector ek = Multivector::basis(n, Blade{1u << k});
        const Multivector s = ej * ek + ek * ej;
        Multivector expected(n);
        if (j == k) expected[0] = -2.0;
        if (max_abs_diff(s, expected) != 0.0) ++anti_failures;
      }
    }
  }
  return {assoc <= 1e-12 && dagger <= 1e-12 && anti_failures == 0,
          "assoc " + sci(assoc) + ", dagger " + sci(dagger) + " (tol 1e-12), anticommutator misses " +
              std::to_string(anti_failures) + " (exact)"};
}

Outcome operator_algebra() {
  // mode-wise symbol identities on a 3-D grid
  const GridSpec g3{3, 16, 6.0};
  double h2 = 0.0, resolution = 0.0, idem = 0.0, annih = 0.0;
  for (std::size_t p = 0; p < g3.total_points(); ++p) {
    const auto xi_arr = g3.frequency(p);
    const std::span<const double> xi(xi_arr.data(), 3);
    const Multivector plus = to_multivector(symbol_chi(xi, 1), 3);
    const Multivector minus = to_multivector(symbol_chi(xi, -1), 3);
    resolution = std::max(resolution, max_abs_diff(plus + minus, Multivector::scalar(3, 1.0)));
    if (g3.is_zero_mode(p)) continue;
    const Multivector h = multiplier_h(xi);
    h2 = std::max(h2, max_abs_diff(h * h, Multivector::scalar(3, 1.0)));
    idem = std::max(idem, std::max(max_abs_diff(plus * plus, plus), max_abs_diff(minus * minus, minus)));
    annih = std::max(annih, std::max(mv_norm(plus * minus), mv_norm(minus * plus)));
  }
  const double sym = std::max({h2, resolution, idem, annih});

  // exp(iπθ/2 H) on a zero-mean field
  const GridSpec g{1, 256, 20.0};
  MultivectorField f(g);
  for (std::size_t p = 0; p < f.points(); ++p) {
    const double x = g.position(p)[0];
    f.coeff(p, 0) = cplx{x, 0.3 * (1.0 - x * x)} * std::exp(-0.5 * x * x);
    f.coeff(p, 1) = -0.5 * x * std::exp(-0.5 * x * x);
  }
  const double identity = max_abs_diff(apply_frac_hilbert(f, 0.0), f);
  const double addition =
      max_abs_diff(apply_frac_hilbert(apply_frac_hilbert(f, 0.3), 0.45), apply_frac_hilbert(f, 0.75));
  double norm = 0.0;
  for (double th : {-1.0, -0.4, 0.25, 0.8, 1.0}) {
    norm = std::max(norm, std::abs(apply_frac_hilbert(f, th).l2_norm() - f.l2_norm()) / f.l2_norm());
  }
  return {sym <= 1e-15 && identity <= 1e-10 && addition <= 1e-10 && norm <= 1e-10,
          "symbols " + sci(sym) + " (machine), theta=0 " + sci(identity) + ", addition " +
              sci(addition) + ", norm " + sci(norm) + " (tol 1e-10)"};
}

Outcome two_paths() {
  const GridSpec g{1, 1024, 20.0};
  bool ok = true;
  std::ostringstream os;
  for (const auto& [a, th] : kSkewSetups) {
    const SkewSetup s = validate_params(a, th);
    const double e = relative_l2_diff(solution_field_projected(s, g, 1.0),
                                      solution_field_spectral(s, g, 1.0));
    ok = ok && e <= 1e-4;
    os << "(" << a << "," << th << ") " << sci(e) << (e <= 1e-4 ? "" : " FAIL") << "; ";
  }
  return {ok, os.str() + "tol 1e-4"};
}

Outcome pde_residuals() {
  const GridSpec g{1, 64, 48.0};
  double ode = 0.0, pde = 0.0, ratio_dev = 0.0;
  for (const auto& [a, th] : kSkewSetups) {
    const SkewSetup s = validate_params(a, th);
    for (double t : {0.0, 0.5, 1.0}) ode = std::max(ode, spectral_ode_residual(s, g, t).residual_linf);
    const ResidualReport r1 = pde_residual(s, g, 1.0, 1e-4);
    const ResidualReport r2 = pde_residual(s, g, 1.0, 5e-5);
    pde = std::max(pde, r1.relative());
    ratio_dev = std::max(ratio_dev, std::abs(r1.residual_l2 / r2.residual_l2 - 4.0));
  }
  return {ode <= 1e-12 && pde <= 1e-5 && ratio_dev <= 0.5,
          "spectral " + sci(ode) + " (tol 1e-12), physical rel " + sci(pde) +
              " at dt=1e-4 (tol 1e-5), |ratio-4| " + sci(ratio_dev) + " (tol 0.5)"};
}

Outcome initial_condition() {
  double delta = 0.0, semi = 0.0;
  for (const auto& [a, th] : kSkewSetups) {
    const SkewSetup s = validate_params(a, th);
    for (const GridSpec& g : {GridSpec{1, 1024, 20.0}, GridSpec{2, 64, 20.0}}) {
      delta = std::max(delta, delta_ic_check(s, g).max_error);
      semi = std::max(semi, semigroup_check(s, g, 0.5, 0.5).max_error);
    }
  }
  return {delta == 0.0 && semi <= 1e-12,
          "max|F(Phi)(.,0)-1| " + sci(delta) + " (exact), semigroup " + sci(semi) + " (tol 1e-12)"};
}

Outcome airy() {
  const AiryReport r = airy_reference_check(1, GridSpec{1, 1024, 20.0}, 1.0, 1);
  return {r.max_abs_dev <= 1e-5, "max abs dev " + sci(r.max_abs_dev) + " over " +
                                     std::to_string(r.points) + " points (tol 1e-5)"};
}

Outcome singular_hilbert() {
  const GridSpec g{1, 256, 20.0};
  // a trigonometric polynomial below the Nyquist frequency, in two blades
  MultivectorField f(g);
  for (std::size_t p = 0; p < f.points(); ++p) {
    const double x = g.position(p)[0];
    cplx v0 = 0.0, v1 = 0.0;
    for (int k = 1; k <= 40; ++k) {
      const double w = k * M_PI / g.half_width;
      v0 += std::exp(-0.05 * k) * cplx{std::cos(w * x + 0.3 * k), 0.5 * std::sin(w * x)};
      v1 += (1.0 / k) * std::cos(w * x - 1.0);
    }
    f.coeff(p, 0) = v0;
    f.coeff(p, 1) = v1;
  }
  const double e = relative_l2_diff(apply_hilbert_singular(f, 1e-3), apply_hilbert(f));
  const MultivectorField sym = riesz_discrete_symbol(g, 1);
  double sym_err = 0.0;
  for (std::size_t p = 0; p < sym.points(); ++p) {
    const double xi = g.frequency(p)[0];
    if (xi == 0.0 || g.axis_indices(p)[0] == g.points_per_axis / 2) continue;
    sym_err = std::max(sym_err, std::abs(sym.coeff(p, 0) - cplx{0.0, xi > 0 ? -1.0 : 1.0}));
  }
  return {e <= 1e-3 && sym_err <= 1e-2, "PV vs spectral rel " + sci(e) + " (tol 1e-3), kernel symbol " +
                                            sci(sym_err) + " off Nyquist (tol 1e-2)"};
}

Outcome parameter_gate() {
  struct Case {
    double alpha, theta;
    bool accept;
    int m;
  };
  const Case cases[] = {{3.0, 1.0, true, 1},   {2.0, 0.0, true, 1},   {2.0, 0.1, false, 0},
                        {2.5, 0.7, false, 0},  {2.5, 0.5, true, 1},   {2.5, -0.5, true, 1},
                        {1.5, 0.0, false, 0},  {4.0, 0.0, true, 2},   {5.0, 1.0, true, 2},
                        {5.0, -1.0, true, 2},  {3.0, 1.001, false, 0}, {2.0, -1e-9, false, 0}};
  int wrong = 0;
  for (const Case& c : cases) {
    try {
      const SkewSetup s = validate_params(c.alpha, c.theta);
      if (!c.accept || s.m != c.m) ++wrong;
    } catch (const Error&) {
      if (c.accept) ++wrong;
    }
  }
  return {wrong == 0, std::to_string(std::size(cases) - wrong) + "/" + std::to_string(std::size(cases)) +
                          " window decisions correct"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double time_limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "heat-kernel collapse", 5.0, heat_collapse},
      {2, "three-way kernel agreement", 60.0, three_way},
      {3, "Wright vs residue partial sums", 0.0, residue_consistency},
      {4, "Clifford algebra laws", 0.0, clifford_laws},
      {5, "grid operator algebra", 0.0, operator_algebra},
      {6, "two-path solution assembly", 30.0, two_paths},
      {7, "PDE residual", 0.0, pde_residuals},
      {8, "initial condition and semigroup", 0.0, initial_condition},
      {9, "Airy-regime oracle", 0.0, airy},
      {10, "singular-integral Hilbert transform", 0.0, singular_hilbert},
      {11, "parameter gate", 0.0, parameter_gate},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = sci(secs) + " s";
    if (c.time_limit > 0.0) {
      timing += " (limit " + sci(c.time_limit) + " s)";
      if (secs > c.time_limit) {
        o.pass = false;
        timing += " too slow";
      }
    }
    if (!o.pass) ++failures;
    std::printf("%s  %2d  %-36s %s; %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
