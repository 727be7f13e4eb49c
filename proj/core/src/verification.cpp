#include "fracdirac/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "fracdirac/error.hpp"
#include "fracdirac/parallel.hpp"

namespace fracdirac {

namespace {

constexpr double kPi = std::numbers::pi;

std::span<const double> xi_span(const std::array<double, kMaxFieldDimension>& xi, int n) {
  return {xi.data(), static_cast<std::size_t>(n)};
}

double radial_power(std::span<const double> xi, double alpha) {
  double r2 = 0.0;
  for (double v : xi) r2 += v * v;
  return r2 == 0.0 ? 0.0 : std::pow(std::sqrt(r2), alpha);
}

// e^{iφ} χ₋ + e^{-iφ} χ₊ with χ₋ = (1 + h)/2, χ₊ = (1 - h)/2.
Multivector rotation_symbol(std::span<const double> xi, double phi) {
  const cplx a = std::polar(1.0, phi);
  const cplx b = std::conj(a);
  const Paravector h = symbol_h(xi);
  Paravector g;
  g.scalar = 0.5 * (a + b);
  for (std::size_t j = 0; j < xi.size(); ++j) g.vector[j] = h.vector[j] * (0.5 * (a - b));
  return to_multivector(g, static_cast<int>(xi.size()));
}

double max_coeff_diff(const Multivector& a, const Multivector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void fill_norms(const MultivectorField& res, const MultivectorField& rhs, ResidualReport& rep) {
  rep.residual_linf = res.max_abs();
  rep.residual_l2 = res.l2_norm();
  rep.reference_norm = rhs.l2_norm();
}

nlohmann::json setup_json(const SkewSetup& s) {
  return {{"alpha", s.alpha}, {"theta", s.theta}, {"m", s.m}};
}

nlohmann::json grid_json(const GridSpec& g) {
  return {{"n", g.n}, {"N", g.points_per_axis}, {"L", g.half_width}};
}

nlohmann::json cplx_json(const std::optional<cplx>& v) {
  if (!v) return nullptr;
  return {{"re", v->real()}, {"im", v->imag()}};
}

}  // namespace

ResidualReport pde_residual(const SkewSetup& s, const GridSpec& grid, double t, double dt) {
  if (!(dt > 0.0) || !(t > dt)) {
    throw Error(Errc::invalid_argument, "pde_residual needs 0 < dt < t");
  }
  const MultivectorField before = solution_field_spectral(s, grid, t - dt);
  const MultivectorField after = solution_field_spectral(s, grid, t + dt);
  const MultivectorField now = solution_field_spectral(s, grid, t);

  MultivectorField lhs = after - before;
  lhs *= 1.0 / (2.0 * dt);
  MultivectorField rhs = apply_frac_laplacian(apply_frac_hilbert(now, s.theta), s.alpha);
  rhs *= -1.0;

  ResidualReport rep{s, grid, t, dt, 0.0, 0.0, 0.0};
  fill_norms(lhs - rhs, rhs, rep);
  return rep;
}

ResidualReport spectral_ode_residual(const SkewSetup& s, const GridSpec& grid, double t) {
  grid.validate();
  const int n = grid.n;
  const cplx rot = std::polar(1.0, 0.5 * kPi * s.theta);
  const cplx tau = s.tau(t);
  MultivectorField res(grid, Space::spectral);
  MultivectorField rhs_field(grid, Space::spectral);
  parallel_for(res.points(), [&](std::size_t p) {
    const auto xi_arr = grid.frequency(p);
    const auto xi = xi_span(xi_arr, n);
    const double power = radial_power(xi, s.alpha);
    const Paravector h = symbol_h(xi);

    // d/dt of χ₋ e^{-τP} + χ₊ e^{-τ̄P}
    const cplx d_minus = -rot * power * std::exp(-tau * power);
    const cplx d_plus = -std::conj(rot) * power * std::exp(-std::conj(tau) * power);
    Paravector deriv;
    deriv.scalar = 0.5 * (d_minus + d_plus);
    for (int j = 0; j < n; ++j) deriv.vector[j] = h.vector[j] * (0.5 * (d_minus - d_plus));

    const Multivector data = to_multivector(solution_symbol(s, t, xi), n);
    const Multivector rhs = mv_mul(rotation_symbol(xi, 0.5 * kPi * s.theta), data) * cplx{-power};
    const Multivector diff = to_multivector(deriv, n) - rhs;
    res.set(p, diff);
    rhs_field.set(p, rhs);
  });
  ResidualReport rep{s, grid, t, 0.0, 0.0, 0.0, 0.0};
  fill_norms(res, rhs_field, rep);
  return rep;
}

double projector_power_error(double theta, const GridSpec& grid, int k_max) {
  grid.validate();
  if (k_max < 0) throw Error(Errc::invalid_argument, "k_max must be nonnegative");
  const double phi = 0.5 * kPi * theta;
  std::vector<double> worst(grid.total_points(), 0.0);
  parallel_for(worst.size(), [&](std::size_t p) {
    if (grid.is_zero_mode(p)) return;
    const auto xi_arr = grid.frequency(p);
    const auto xi = xi_span(xi_arr, grid.n);
    const Multivector g = rotation_symbol(xi, phi);
    Multivector power = Multivector::scalar(grid.n, 1.0);
    for (int k = 0; k <= k_max; ++k) {
      if (k > 0) power = mv_mul(power, g);
      worst[p] = std::max(worst[p], max_coeff_diff(power, rotation_symbol(xi, k * phi)));
    }
  });
  return *std::max_element(worst.begin(), worst.end());
}

ScalarCheck delta_ic_check(const SkewSetup& s, const GridSpec& grid) {
  const MultivectorField data = solution_spectral_data(s, grid, 0.0);
  double m = 0.0;
  for (std::size_t p = 0; p < data.points(); ++p) {
    for (std::uint32_t b = 0; b < data.blades(); ++b) {
      const cplx expected = b == 0 ? cplx{1.0} : cplx{0.0};
      m = std::max(m, std::abs(data.coeff(p, b) - expected));
    }
  }
  return ScalarCheck{m, data.points()};
}

ScalarCheck semigroup_check(const SkewSetup& s, const GridSpec& grid, double t1, double t2) {
  const MultivectorField a = solution_spectral_data(s, grid, t1);
  const MultivectorField b = solution_spectral_data(s, grid, t2);
  const MultivectorField ab = solution_spectral_data(s, grid, t1 + t2);
  std::vector<double> worst(a.points(), 0.0);
  parallel_for(a.points(), [&](std::size_t p) {
    worst[p] = max_coeff_diff(mv_mul(a.at(p), b.at(p)), ab.at(p));
  });
  return ScalarCheck{*std::max_element(worst.begin(), worst.end()), a.points()};
}

ScalarCheck mass_check(const SkewSetup& s, const GridSpec& grid, const std::vector<double>& times) {
  double m = 0.0;
  const std::array<double, kMaxFieldDimension> zero{};
  for (double t : times) {
    const Paravector v = solution_symbol(s, t, xi_span(zero, grid.n));
    m = std::max(m, std::abs(v.scalar - 1.0));
    for (int j = 0; j < grid.n; ++j) m = std::max(m, std::abs(v.vector[j]));
  }
  return ScalarCheck{m, times.size()};
}

std::vector<CrosscheckRow> crosscheck_methods(const CrosscheckSpec& spec) {
  struct Item {
    double alpha;
    int n;
    double r;
  };
  std::vector<Item> items;
  for (double a : spec.alphas) {
    for (int n : spec.dims) {
      for (double r : spec.radii) items.push_back({a, n, r});
    }
  }
  std::vector<CrosscheckRow> rows(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    const KernelQuery q{items[i].alpha, items[i].n, items[i].r, spec.tau};
    CrosscheckRow row{q.alpha, q.n, q.r, std::nullopt, std::nullopt, std::nullopt, 0.0, ""};
    const auto attempt = [&](const char* name, auto&& fn, std::optional<cplx>& slot) {
      try {
        slot = fn().value;
      } catch (const Error& e) {
        if (!row.note.empty()) row.note += "; ";
        row.note += std::string(name) + ": " + e.what();
      }
    };
    attempt("wright", [&] { return kernel_wright(q, spec.options); }, row.wright);
    attempt("quadrature", [&] { return kernel_quadrature(q, spec.options); }, row.quadrature);
    attempt("mellin", [&] { return kernel_mellin_barnes(q); }, row.mellin);
    const std::optional<cplx> vals[] = {row.wright, row.quadrature, row.mellin};
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (!vals[a] || !vals[b]) continue;
        const double scale = std::max(std::abs(*vals[a]), std::abs(*vals[b]));
        if (scale > 0.0) {
          row.max_pairwise_rel = std::max(row.max_pairwise_rel, std::abs(*vals[a] - *vals[b]) / scale);
        }
      }
    }
    rows[i] = row;
  });
  return rows;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

CheckRecord to_record(const ResidualReport& r, const std::string& name, double tolerance,
                      bool relative) {
  CheckRecord rec;
  rec.name = name;
  rec.setup = r.setup;
  rec.grid = r.grid;
  rec.metrics = {{"t", r.t},
                 {"dt", r.dt},
                 {"residual_linf", r.residual_linf},
                 {"residual_l2", r.residual_l2},
                 {"reference_norm", r.reference_norm},
                 {"relative_residual", r.relative()}};
  rec.tolerance = tolerance;
  rec.passed = (relative ? r.relative() : r.residual_linf) <= tolerance;
  return rec;
}

std::string to_json(const VerificationReport& report, int indent) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json j;
    j["name"] = c.name;
    j["setup"] = c.setup ? setup_json(*c.setup) : nlohmann::json(nullptr);
    j["grid"] = c.grid ? grid_json(*c.grid) : nlohmann::json(nullptr);
    j["metrics"] = c.metrics;
    j["tolerance"] = c.tolerance;
    j["passed"] = c.passed;
    checks.push_back(std::move(j));
  }
  const nlohmann::json doc{{"suite", report.suite}, {"passed", report.passed()}, {"checks", checks}};
  return doc.dump(indent);
}

std::string to_json(const std::vector<CrosscheckRow>& rows, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"alpha", r.alpha},
                   {"n", r.n},
                   {"r", r.r},
                   {"wright", cplx_json(r.wright)},
                   {"quadrature", cplx_json(r.quadrature)},
                   {"mellin", cplx_json(r.mellin)},
                   {"max_pairwise_rel", r.max_pairwise_rel},
                   {"note", r.note}});
  }
  return arr.dump(indent);
}

}  // namespace fracdirac
