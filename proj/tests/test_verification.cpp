#include <doctest.h>

#include <json.hpp>

#include "fracdirac/verification.hpp"

using namespace fracdirac;

namespace {
const GridSpec kGrid{1, 64, 48.0};
}

TEST_SUITE("verification") {

TEST_CASE("spectral ODE residual is at roundoff") {
  for (auto [a, th] : {std::pair{2.0, 0.0}, std::pair{3.0, 1.0}, std::pair{5.0, -1.0}}) {
    const SkewSetup s = validate_params(a, th);
    for (double t : {0.0, 0.5, 1.0}) {
      CHECK(spectral_ode_residual(s, kGrid, t).residual_linf <= 1e-12);
    }
    CHECK(spectral_ode_residual(s, GridSpec{2, 16, 6.0}, 1.0).residual_linf <= 1e-12);
  }
}

TEST_CASE("physical residual and its second-order decay") {
  const SkewSetup heat = validate_params(2.0, 0.0);
  const ResidualReport r = pde_residual(heat, kGrid, 1.0, 1e-4);
  CHECK(r.relative() <= 1e-6);
  CHECK(r.residual_linf >= 0.0);

  const SkewSetup airy = validate_params(3.0, 1.0);
  const ResidualReport a1 = pde_residual(airy, kGrid, 1.0, 1e-4);
  const ResidualReport a2 = pde_residual(airy, kGrid, 1.0, 5e-5);
  CHECK(a1.relative() <= 1e-5);
  CHECK(a1.residual_l2 / a2.residual_l2 == doctest::Approx(4.0).epsilon(0.05));
  CHECK_THROWS(pde_residual(airy, kGrid, 1e-5, 1e-4));
}

TEST_CASE("residual is settled under grid refinement when the spectrum decays") {
  const SkewSetup s = validate_params(2.5, 0.5);
  const double coarse = pde_residual(s, GridSpec{1, 64, 48.0}, 1.0, 1e-4).relative();
  const double fine = pde_residual(s, GridSpec{1, 256, 48.0}, 1.0, 1e-4).relative();
  CHECK(fine == doctest::Approx(coarse).epsilon(0.1));
}

TEST_CASE("initial condition, semigroup, mass and projector powers") {
  for (auto [a, th] : {std::pair{2.5, 0.5}, std::pair{4.0, 0.0}, std::pair{5.0, 1.0}}) {
    const SkewSetup s = validate_params(a, th);
    for (const GridSpec& g : {GridSpec{1, 256, 20.0}, GridSpec{3, 16, 6.0}}) {
      CHECK(delta_ic_check(s, g).max_error == 0.0);
      CHECK(semigroup_check(s, g, 0.5, 0.5).max_error <= 1e-12);
      // Non-dyadic times: the phase t|ξ|^α is only known to eps · t ξ_max^α.
      const double xi_max = g.frequency_step() * (g.points_per_axis / 2) * std::sqrt(double(g.n));
      const double cond = 1.5 * std::pow(xi_max, s.alpha);
      CHECK(semigroup_check(s, g, 0.2, 1.3).max_error <= 8e-16 * (1.0 + cond));
      CHECK(mass_check(s, g, {0.0, 1.0, 7.0}).max_error == 0.0);
      CHECK(projector_power_error(s.theta, g, 6) <= 1e-12);
    }
  }
}

TEST_CASE("cross-method table row") {
  CrosscheckSpec spec;
  spec.alphas = {4.0};
  spec.dims = {2};
  spec.radii = {1.0};
  const auto rows = crosscheck_methods(spec);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].wright.has_value());
  CHECK(rows[0].quadrature.has_value());
  CHECK(rows[0].mellin.has_value());
  CHECK(rows[0].max_pairwise_rel <= 1e-6);
  CHECK(rows[0].note.empty());

  spec.radii = {0.0};
  const auto origin = crosscheck_methods(spec);
  CHECK_FALSE(origin[0].mellin.has_value());
  CHECK(origin[0].note.find("mellin") != std::string::npos);
}

TEST_CASE("JSON reports carry setup, grid and metrics") {
  const SkewSetup s = validate_params(3.0, 1.0);
  VerificationReport rep{"demo", {to_record(spectral_ode_residual(s, kGrid, 1.0), "ode", 1e-12, false)}};
  const auto doc = nlohmann::json::parse(to_json(rep));
  CHECK(doc["suite"] == "demo");
  CHECK(doc["passed"] == true);
  CHECK(doc["checks"][0]["setup"]["alpha"] == 3.0);
  CHECK(doc["checks"][0]["grid"]["N"] == 64);
  CHECK(doc["checks"][0]["metrics"].contains("residual_linf"));
  CHECK(to_json(rep) == to_json(rep));

  CrosscheckSpec spec;
  spec.alphas = {3.0};
  spec.dims = {1};
  spec.radii = {1.0};
  const auto table = nlohmann::json::parse(to_json(crosscheck_methods(spec)));
  CHECK(table[0]["wright"]["re"].get<double>() > 0.0);
}

}  // TEST_SUITE
