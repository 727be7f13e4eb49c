#pragma once

// Checks that the assembled Φ solves the Cauchy problem, plus cross-method
// kernel tables. Reports are plain data; to_json renders them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fracdirac/kernel.hpp"
#include "fracdirac/solution.hpp"
#include "fracdirac/spectral.hpp"

namespace fracdirac {

struct ResidualReport {
  SkewSetup setup;
  GridSpec grid;
  double t;
  double dt;  // 0 for analytic derivatives
  double residual_linf;
  double residual_l2;
  double reference_norm;  // ℓ² norm of the right-hand side

  double relative() const { return reference_norm > 0.0 ? residual_l2 / reference_norm : residual_l2; }
};

// (Φ(t+dt) - Φ(t-dt))/(2dt) + (-Δ)^{α/2} exp(iπθ/2 H) Φ(t), all fields from
// the spectral path and the right-hand side through the FFT.
ResidualReport pde_residual(const SkewSetup& s, const GridSpec& grid, double t, double dt);

// Mode-wise analytic d/dt of the spectral data against
// -|ξ|^α (e^{iπθ/2} χ₋ + e^{-iπθ/2} χ₊) · data.
ResidualReport spectral_ode_residual(const SkewSetup& s, const GridSpec& grid, double t);

// max over modes of |(e^{iπθ/2}χ₋ + e^{-iπθ/2}χ₊)^k - (e^{iπθk/2}χ₋ + e^{-iπθk/2}χ₊)|, k = 0..k_max.
// The zero mode is skipped: χ±(0) = 1/2 are not projections there.
double projector_power_error(double theta, const GridSpec& grid, int k_max = 6);

struct ScalarCheck {
  double max_error;
  std::size_t modes;
};

// max |F Φ(ξ, 0) - 1| over all modes and blades.
ScalarCheck delta_ic_check(const SkewSetup& s, const GridSpec& grid);
// max |data(t1) · data(t2) - data(t1 + t2)| (mode-wise Clifford product).
ScalarCheck semigroup_check(const SkewSetup& s, const GridSpec& grid, double t1, double t2);
// max |F Φ(0, t) - 1| over the given times.
ScalarCheck mass_check(const SkewSetup& s, const GridSpec& grid, const std::vector<double>& times);

struct CrosscheckSpec {
  std::vector<double> alphas{2.0, 2.5, 3.0, 4.0, 5.0};
  std::vector<int> dims{1, 2, 3};
  std::vector<double> radii{0.25, 1.0, 2.0, 4.0};
  cplx tau{1.0, 0.0};
  KernelOptions options{};
};

struct CrosscheckRow {
  double alpha;
  int n;
  double r;
  std::optional<cplx> wright;
  std::optional<cplx> quadrature;
  std::optional<cplx> mellin;
  double max_pairwise_rel;  // over the methods that produced a value
  std::string note;         // why a method is missing, if one is
};

std::vector<CrosscheckRow> crosscheck_methods(const CrosscheckSpec& spec);

// Generic pass/fail record for the CLI and the acceptance runner.
struct CheckRecord {
  std::string name;
  std::optional<SkewSetup> setup;
  std::optional<GridSpec> grid;
  std::map<std::string, double> metrics;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool passed() const;
};

CheckRecord to_record(const ResidualReport& r, const std::string& name, double tolerance,
                      bool relative);

std::string to_json(const VerificationReport& report, int indent = 2);
std::string to_json(const std::vector<CrosscheckRow>& rows, int indent = 2);

}  // namespace fracdirac
