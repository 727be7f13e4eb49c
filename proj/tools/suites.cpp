#include "suites.hpp"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "fracdirac/error.hpp"

namespace fracdirac::cli {

namespace {

const std::vector<std::pair<double, double>> kSetups = {
    {2.0, 0.0}, {2.5, 0.5}, {3.0, 1.0}, {4.0, 0.0}, {5.0, 1.0}};

// Coarse enough that dt·|ξ|^α stays small for every α sampled, so the
// central difference rather than stiffness sets the residual.
const GridSpec kResidualGrid{1, 64, 48.0};

std::string label(const std::string& what, const SkewSetup& s) {
  std::ostringstream os;
  os << what << " alpha=" << s.alpha << " theta=" << s.theta;
  return os.str();
}

double pick(std::optional<double> override_tol, double tol) { return override_tol.value_or(tol); }

CheckRecord scalar_record(const std::string& name, const SkewSetup& s, const GridSpec& g,
                          double value, double tol) {
  CheckRecord rec;
  rec.name = name;
  rec.setup = s;
  rec.grid = g;
  rec.metrics = {{"max_error", value}};
  rec.tolerance = tol;
  rec.passed = value <= tol;
  return rec;
}

}  // namespace

VerificationReport suite_residual(std::optional<double> tol) {
  VerificationReport rep{"residual", {}};
  const double dt = 1e-4;
  for (const auto& [a, th] : kSetups) {
    const SkewSetup s = validate_params(a, th);
    for (double t : {0.0, 1.0}) {
      rep.checks.push_back(to_record(spectral_ode_residual(s, kResidualGrid, t),
                                     label(t == 0.0 ? "spectral_ode t=0" : "spectral_ode t=1", s),
                                     pick(tol, 1e-12), false));
    }
    const ResidualReport coarse = pde_residual(s, kResidualGrid, 1.0, dt);
    rep.checks.push_back(to_record(coarse, label("pde_residual", s),
                                   pick(tol, a == 2.0 ? 1e-6 : 1e-5), true));

    const ResidualReport fine = pde_residual(s, kResidualGrid, 1.0, 0.5 * dt);
    const double ratio = coarse.residual_l2 / fine.residual_l2;
    CheckRecord order;
    order.name = label("pde_residual_order", s);
    order.setup = s;
    order.grid = kResidualGrid;
    order.metrics = {{"ratio_dt_over_half_dt", ratio},
                     {"observed_order", std::log2(ratio)},
                     {"ratio_deviation_from_4", std::abs(ratio - 4.0)}};
    order.tolerance = pick(tol, 0.5);
    order.passed = std::abs(ratio - 4.0) <= order.tolerance;
    rep.checks.push_back(std::move(order));
  }
  return rep;
}

VerificationReport suite_semigroup(std::optional<double> tol) {
  VerificationReport rep{"semigroup", {}};
  const GridSpec grids[] = {{1, 1024, 20.0}, {2, 64, 20.0}};
  for (const auto& [a, th] : kSetups) {
    const SkewSetup s = validate_params(a, th);
    for (const GridSpec& g : grids) {
      const std::string dim = " n=" + std::to_string(g.n);
      rep.checks.push_back(scalar_record(label("delta_ic", s) + dim, s, g,
                                         delta_ic_check(s, g).max_error, pick(tol, 0.0)));
      rep.checks.push_back(scalar_record(label("semigroup t1=t2=0.5", s) + dim, s, g,
                                         semigroup_check(s, g, 0.5, 0.5).max_error,
                                         pick(tol, 1e-12)));
      rep.checks.push_back(scalar_record(label("mass", s) + dim, s, g,
                                         mass_check(s, g, {0.0, 0.5, 1.0, 2.0, 10.0}).max_error,
                                         pick(tol, 0.0)));
      rep.checks.push_back(scalar_record(label("projector_power k<=6", s) + dim, s, g,
                                         projector_power_error(s.theta, g, 6), pick(tol, 1e-12)));
    }
  }
  return rep;
}

VerificationReport suite_crosscheck(std::optional<double> tol) {
  VerificationReport rep{"crosscheck", {}};
  for (const CrosscheckRow& row : crosscheck_methods(CrosscheckSpec{})) {
    CheckRecord rec;
    std::ostringstream name;
    name << "kernel alpha=" << row.alpha << " n=" << row.n << " r=" << row.r;
    rec.name = name.str();
    const auto put = [&](const char* key, const std::optional<cplx>& v) {
      if (!v) return;
      rec.metrics[std::string(key) + "_re"] = v->real();
      rec.metrics[std::string(key) + "_im"] = v->imag();
    };
    put("wright", row.wright);
    put("quadrature", row.quadrature);
    put("mellin", row.mellin);
    rec.metrics["max_pairwise_rel"] = row.max_pairwise_rel;
    rec.tolerance = pick(tol, 1e-6);
    rec.passed = row.wright && row.quadrature && row.mellin && row.max_pairwise_rel <= rec.tolerance;
    rep.checks.push_back(std::move(rec));
  }
  return rep;
}

VerificationReport suite_airy(std::optional<double> tol) {
  VerificationReport rep{"airy", {}};
  const GridSpec g{1, 256, 20.0};
  for (int m : {1, 2}) {
    for (int sign : {1, -1}) {
      for (double t : {1.0, 2.0}) {
        const AiryReport a = airy_reference_check(m, g, t, sign);
        CheckRecord rec;
        std::ostringstream name;
        name << "airy m=" << m << " sign=" << sign << " t=" << t;
        rec.name = name.str();
        rec.setup = validate_params(2.0 * m + 1.0, sign);
        rec.grid = g;
        rec.metrics = {{"max_abs_dev", a.max_abs_dev},
                       {"max_oracle_abs", a.max_oracle_abs},
                       {"symmetry_dev", a.symmetry_dev},
                       {"scaling_dev", a.scaling_dev},
                       {"points", static_cast<double>(a.points)},
                       {"x_max", a.x_max}};
        rec.tolerance = pick(tol, 1e-5);
        rec.passed = a.max_abs_dev <= rec.tolerance && a.symmetry_dev <= rec.tolerance &&
                     a.scaling_dev <= rec.tolerance;
        rep.checks.push_back(std::move(rec));
      }
    }
  }
  return rep;
}

VerificationReport run_suite(const std::string& name, std::optional<double> tol) {
  if (name == "residual") return suite_residual(tol);
  if (name == "semigroup") return suite_semigroup(tol);
  if (name == "crosscheck") return suite_crosscheck(tol);
  if (name == "airy") return suite_airy(tol);
  if (name == "all") {
    VerificationReport all{"all", {}};
    for (const char* s : {"residual", "semigroup", "crosscheck", "airy"}) {
      VerificationReport part = run_suite(s, tol);
      for (auto& c : part.checks) {
        c.name = std::string(s) + ": " + c.name;
        all.checks.push_back(std::move(c));
      }
    }
    return all;
  }
  throw Error(Errc::invalid_argument, "unknown suite '" + name + "'");
}

}  // namespace fracdirac::cli
