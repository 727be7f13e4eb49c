#include <doctest.h>

#include "fracdirac/error.hpp"
#include "fracdirac/solution.hpp"
#include "fracdirac/special_functions.hpp"
#include "frozen.hpp"
#include "oracles.hpp"

using namespace fracdirac;

namespace {

bool accepted(double alpha, double theta, bool m0 = false) {
  try {
    (void)validate_params(alpha, theta, m0);
    return true;
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
    return false;
  }
}

double max_imag(const MultivectorField& f) {
  double m = 0.0;
  for (auto c : f.data()) m = std::max(m, std::abs(c.imag()));
  return m;
}

}  // namespace

TEST_SUITE("solution") {

TEST_CASE("parameter window") {
  CHECK(validate_params(3.0, 1.0).m == 1);
  CHECK(validate_params(2.0, 0.0).m == 1);
  CHECK(validate_params(5.5, -0.5).m == 2);
  CHECK_FALSE(accepted(2.0, 0.1));
  CHECK_FALSE(accepted(2.5, 0.7));
  CHECK_FALSE(accepted(1.5, 0.0));
  CHECK(accepted(2.3, 0.3));  // α - 2m rounds below 0.3
  CHECK(accepted(1.5, 0.5, true));
  CHECK_FALSE(accepted(1.5, 0.6, true));
  CHECK_FALSE(accepted(std::nan(""), 0.0));
  try {
    (void)validate_params(2.5, 0.7);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("min{alpha-2m, 2m+2-alpha}") != std::string::npos);
  }
}

TEST_CASE("pointwise values") {
  const SkewSetup s0 = validate_params(3.0, 0.0);
  const PointwiseValue v = solution_pointwise(s0, 1, 2.0, 1.0);
  CHECK(v.real_part == doctest::Approx(frozen::kKernel[0].value).epsilon(1e-13));
  CHECK(v.imag_part == 0.0);

  const SkewSetup heat = validate_params(2.0, 0.0);
  CHECK(solution_pointwise(heat, 3, 1.0, 1.0).real_part ==
        doctest::Approx(frozen::kHeat3d).epsilon(1e-13));

  const PointwiseValue p = solution_pointwise(validate_params(2.5, 0.4), 2, 1.2, 0.8);
  const PointwiseValue m = solution_pointwise(validate_params(2.5, -0.4), 2, 1.2, 0.8);
  CHECK(p.real_part == doctest::Approx(m.real_part).epsilon(1e-14));
  CHECK(p.imag_part == doctest::Approx(-m.imag_part).epsilon(1e-14));
  CHECK(p.imag_part != 0.0);
  CHECK_THROWS_AS(solution_pointwise(s0, 1, 1.0, 0.0), Error);
}

TEST_CASE("spectral data at t = 0 and mass") {
  const SkewSetup s = validate_params(3.0, 1.0);
  const GridSpec g{2, 16, 5.0};
  const MultivectorField d = solution_spectral_data(s, g, 0.0);
  for (std::size_t p = 0; p < d.points(); ++p) {
    CHECK(d.coeff(p, 0) == cplx{1.0});
    for (std::uint32_t b = 1; b < d.blades(); ++b) CHECK(d.coeff(p, b) == cplx{});
  }
  const MultivectorField later = solution_spectral_data(s, g, 3.0);
  CHECK(later.coeff(0, 0) == cplx{1.0});
}

TEST_CASE("theta = 0 field is real and matches the heat kernel") {
  const SkewSetup s = validate_params(2.0, 0.0);
  const GridSpec g{1, 1024, 20.0};
  const MultivectorField f = solution_field_spectral(s, g, 1.0);
  CHECK(max_imag(f) <= 1e-12);
  double err = 0.0;
  for (std::size_t p = 0; p < f.points(); ++p) {
    const double x = g.position(p)[0];
    err = std::max(err, std::abs(f.coeff(p, 0).real() - oracle::heat(1, std::abs(x), 1.0)));
  }
  CHECK(err <= 1e-6 * oracle::heat(1, 0.0, 1.0));
}

TEST_CASE("theta = 0 grid values match the pointwise Wright series") {
  const SkewSetup s = validate_params(4.0, 0.0);
  const GridSpec g{2, 96, 16.0};
  const double t = 0.7;
  const MultivectorField f = solution_field_spectral(s, g, t);
  CHECK(max_imag(f) <= 1e-10);
  const int n = 2;
  const double pre = std::pow(2.0, 1.0 - n) / (4.0 * M_PI * std::pow(t, n / 4.0));
  // K oscillates in sign for α = 4, so compare against the peak value.
  const double peak = f.coeff(g.flat_index(std::array<int, 2>{48, 48}), 0).real();
  double worst = 0.0;
  for (std::size_t p = 0; p < f.points(); ++p) {
    const auto x = g.position(p);
    const double r2 = x[0] * x[0] + x[1] * x[1];
    if (r2 > 25.0) continue;
    const cplx lam = -0.25 * r2 * std::pow(t, -0.5);
    const cplx psi = wright_1psi1({n / 4.0, 0.5, 0.5 * n, 1.0}, lam).value;
    const double expected = pre * psi.real();
    worst = std::max(worst, std::abs(f.coeff(p, 0).real() - expected) / peak);
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("projected assembly against the spectral path") {
  const GridSpec g{1, 512, 20.0};
  for (auto [a, th] : {std::pair{2.0, 0.0}, std::pair{2.5, 0.5}, std::pair{4.0, 0.0}}) {
    CAPTURE(a);
    const SkewSetup s = validate_params(a, th);
    const MultivectorField spectral = solution_field_spectral(s, g, 1.0);
    const MultivectorField t1 = solution_field_projected(s, g, 1.0);
    CHECK(relative_l2_diff(t1, spectral) <= 1e-4);
    // the split Re K + i H(Im K)
    CHECK(relative_l2_diff(solution_field_hilbert(s, g, 1.0, HilbertPath::spectral), t1) <= 1e-14);
  }
}

TEST_CASE("theta = 0 projected assembly collapses to the pointwise kernel") {
  const SkewSetup s = validate_params(3.0, 0.0);
  const GridSpec g{1, 64, 10.0};
  const MultivectorField t1 = solution_field_projected(s, g, 1.0);
  for (std::size_t p = 0; p < t1.points(); ++p) {
    const double r = std::abs(g.position(p)[0]);
    CHECK(std::abs(t1.coeff(p, 0) - solution_pointwise(s, 1, r, 1.0).real_part) <= 1e-15);
    CHECK(std::abs(t1.coeff(p, 1)) <= 1e-15);
  }
}

TEST_CASE("principal-value path matches the spectral split") {
  const SkewSetup s = validate_params(2.5, 0.5);
  const GridSpec g{1, 512, 20.0};
  const MultivectorField pv = solution_field_hilbert(s, g, 1.0, HilbertPath::singular, 1e-6);
  const MultivectorField sp = solution_field_hilbert(s, g, 1.0, HilbertPath::spectral);
  CHECK(relative_l2_diff(pv, sp) <= 1e-8);
}

TEST_CASE("sample grade split") {
  const SkewSetup s = validate_params(2.5, 0.5);
  const GridSpec g{1, 128, 16.0};
  const MultivectorField f = solution_field_spectral(s, g, 1.0);
  const SolutionSample smp = solution_sample(f, 70);
  CHECK(smp.real_part == f.coeff(70, 0).real());
  CHECK(smp.hilbert_part.is_vector());
  CHECK(max_abs_diff(smp.total, f.at(70)) == 0.0);
  CHECK_THROWS_AS(solution_sample(fft_forward(f), 0), Error);
}

TEST_CASE("Airy oracle") {
  for (const auto& c : frozen::kAiry) {
    CAPTURE(c.x);
    CHECK(std::abs(airy_oracle(1, c.x, 1.0, 1).real() - c.value) <= 1e-13);
    CHECK(std::abs(oracle::airy_ray(3.0, c.x, 1.0, 1).real() - c.value) <= 1e-12);
  }
  for (double x : {-3.0, 0.5, 4.0}) {
    CHECK(std::abs(airy_oracle(2, x, 1.3, -1) - oracle::airy_ray(5.0, x, 1.3, -1)) <= 1e-12);
  }
  CHECK_THROWS_AS(airy_oracle(0, 1.0, 1.0, 1), Error);
}

TEST_CASE("Airy reference check") {
  const GridSpec g{1, 256, 20.0};
  const AiryReport r = airy_reference_check(1, g, 1.0, 1);
  CHECK(r.points == 65);
  CHECK(r.max_abs_dev <= 1e-5);
  CHECK(r.symmetry_dev <= 1e-14);
  const AiryReport r2 = airy_reference_check(2, g, 2.0, -1);
  CHECK(r2.max_abs_dev <= 1e-5);
  CHECK(r2.scaling_dev <= 1e-12);
  CHECK_THROWS_AS(airy_reference_check(1, GridSpec{2, 16, 4.0}, 1.0, 1), Error);
}

TEST_CASE("grid extent heuristic") {
  CHECK(suggested_half_width(2.0, 1.0) == 12.0);
  CHECK(suggested_half_width(3.0, 8.0, 0.0) == doctest::Approx(16.0));
}

}  // TEST_SUITE
