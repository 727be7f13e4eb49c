#include "fracdirac/solution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "fracdirac/error.hpp"
#include "fracdirac/parallel.hpp"
#include "fracdirac/quadrature.hpp"

namespace fracdirac {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double radius(const GridSpec& g, std::size_t p) {
  const auto x = g.position(p);
  double s = 0.0;
  for (int a = 0; a < g.n; ++a) s += x[a] * x[a];
  return std::sqrt(s);
}

double max_radius(const GridSpec& g) { return g.half_width * std::sqrt(static_cast<double>(g.n)); }

// K(|x|, τ) at every grid point as a scalar field.
MultivectorField sample_kernel(const WrightKernel& kern, const GridSpec& g, cplx tau) {
  MultivectorField f(g, Space::physical);
  parallel_for(f.points(), [&](std::size_t p) { f.coeff(p, 0) = kern(radius(g, p), tau).value; });
  return f;
}

WrightKernel grid_kernel(const SkewSetup& s, const GridSpec& g, double t, const KernelOptions& opts) {
  const double rm = max_radius(g);
  const double lambda_max = 0.25 * rm * rm * std::pow(t, -2.0 / s.alpha);
  return WrightKernel(s.alpha, g.n, lambda_max + 1.0, opts);
}

void require_positive_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(Errc::invalid_argument, "time t must be positive (got " + fmt(t) + ")");
  }
}

}  // namespace

cplx SkewSetup::tau(double t) const { return t * std::polar(1.0, 0.5 * kPi * theta); }

SkewSetup validate_params(double alpha, double theta, bool allow_m_zero) {
  if (!std::isfinite(alpha) || !std::isfinite(theta)) {
    throw Error(Errc::invalid_argument, "alpha and theta must be finite");
  }
  if (!(alpha > 0.0)) {
    throw Error(Errc::invalid_argument, "alpha must be positive (got " + fmt(alpha) + ")");
  }
  const int m = static_cast<int>(std::floor(0.5 * alpha));
  if (m < 1 && !allow_m_zero) {
    throw Error(Errc::invalid_argument,
                "alpha = " + fmt(alpha) +
                    " violates the window 2m <= alpha < 2m+2 with m >= 1 (alpha must be >= 2)");
  }
  const double width = std::min(alpha - 2.0 * m, 2.0 * m + 2.0 - alpha);
  const double slack = 4.0 * kEps * alpha;
  if (std::abs(theta) > width + slack) {
    throw Error(Errc::invalid_argument,
                "theta = " + fmt(theta) + " violates |theta| <= min{alpha-2m, 2m+2-alpha} = " +
                    fmt(width) + " for alpha = " + fmt(alpha) + ", m = " + std::to_string(m));
  }
  return SkewSetup{alpha, theta, m};
}

PointwiseValue solution_pointwise(const SkewSetup& s, int n, double r, double t,
                                  const KernelOptions& opts) {
  require_positive_time(t);
  const KernelValue k = kernel_wright(KernelQuery{s.alpha, n, r, s.tau(t)}, opts);
  return PointwiseValue{k.value.real(), k.value.imag(), k.method, k.est_error};
}

SolutionSample solution_sample(const MultivectorField& phi, std::size_t point) {
  if (phi.space() != Space::physical) {
    throw Error(Errc::space_mismatch, "solution_sample: field must be physical");
  }
  const Multivector total = phi.at(point);
  Multivector vec(phi.dimension());
  for (int j = 0; j < phi.dimension(); ++j) vec[1u << j] = total[1u << j];
  return SolutionSample{total.scalar_part().real(), vec, total};
}

Paravector solution_symbol(const SkewSetup& s, double t, std::span<const double> xi) {
  double r2 = 0.0;
  for (double v : xi) r2 += v * v;
  const double power = r2 == 0.0 ? 0.0 : std::pow(std::sqrt(r2), s.alpha);
  const cplx tau = s.tau(t);
  const cplx e_minus = std::exp(-tau * power);             // paired with χ₋ = (1 + h)/2
  const cplx e_plus = std::exp(-std::conj(tau) * power);   // paired with χ₊ = (1 - h)/2
  const Paravector h = symbol_h(xi);
  Paravector out;
  out.scalar = 0.5 * (e_minus + e_plus);
  const cplx diff = 0.5 * (e_minus - e_plus);
  for (std::size_t j = 0; j < xi.size(); ++j) out.vector[j] = h.vector[j] * diff;
  return out;
}

MultivectorField solution_spectral_data(const SkewSetup& s, const GridSpec& grid, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(Errc::invalid_argument, "time t must be nonnegative (got " + fmt(t) + ")");
  }
  MultivectorField data(grid, Space::spectral);
  const GridSpec& g = data.grid();
  parallel_for(data.points(), [&](std::size_t p) {
    const auto xi = g.frequency(p);
    const Paravector v = solution_symbol(s, t, std::span<const double>(xi.data(), g.n));
    data.coeff(p, 0) = v.scalar;
    for (int j = 0; j < g.n; ++j) data.coeff(p, 1u << j) = v.vector[j];
  });
  return data;
}

MultivectorField solution_field_spectral(const SkewSetup& s, const GridSpec& grid, double t) {
  return fft_inverse(solution_spectral_data(s, grid, t));
}

MultivectorField solution_field_projected(const SkewSetup& s, const GridSpec& grid, double t,
                                         const KernelOptions& opts) {
  require_positive_time(t);
  grid.validate();
  const WrightKernel kern = grid_kernel(s, grid, t, opts);
  const cplx tau = s.tau(t);
  const MultivectorField k_minus = sample_kernel(kern, grid, tau);            // with ½(I+H)
  const MultivectorField k_plus = sample_kernel(kern, grid, std::conj(tau));  // with ½(I-H)
  MultivectorField out = k_minus + k_plus;
  out += apply_hilbert(k_minus - k_plus);
  out *= 0.5;
  return out;
}

MultivectorField solution_field_hilbert(const SkewSetup& s, const GridSpec& grid, double t,
                                         HilbertPath path, double quad_tol,
                                         const KernelOptions& opts) {
  require_positive_time(t);
  grid.validate();
  const WrightKernel kern = grid_kernel(s, grid, t, opts);
  const MultivectorField k = sample_kernel(kern, grid, s.tau(t));
  MultivectorField re(grid, Space::physical);
  MultivectorField im(grid, Space::physical);
  for (std::size_t p = 0; p < k.points(); ++p) {
    re.coeff(p, 0) = k.coeff(p, 0).real();
    im.coeff(p, 0) = k.coeff(p, 0).imag();
  }
  MultivectorField h = path == HilbertPath::spectral ? apply_hilbert(im)
                                                     : apply_hilbert_singular(im, quad_tol);
  h *= cplx{0.0, 1.0};
  re += h;
  return re;
}

double suggested_half_width(double alpha, double t, double margin) {
  return 8.0 * std::pow(t, 1.0 / alpha) + margin;
}

cplx airy_oracle(int m, double x, double t, int sign, double abs_tol) {
  if (m < 1) throw Error(Errc::invalid_argument, "Airy oracle needs m >= 1");
  if (sign != 1 && sign != -1) throw Error(Errc::invalid_argument, "Airy oracle sign must be ±1");
  require_positive_time(t);
  const double alpha = 2.0 * m + 1.0;
  const double phi = kPi / (2.0 * alpha);
  const cplx w = std::polar(1.0, -sign * phi);
  // Past V the damped integrand is below e^{-50} relative to its size at 0.
  const double growth = std::abs(x) * std::sin(phi);
  double upper = 1.0;
  while (t * std::pow(upper, alpha) - growth * upper < 50.0) upper *= 1.25;
  const auto integrand = [&](double v) { return std::exp(-t * std::pow(v, alpha)) * std::cos(x * v * w); };
  const auto q = adaptive_gauss(integrand, 0.0, upper, abs_tol);
  if (!q.converged) {
    throw Error(Errc::no_convergence,
                "Airy oracle: quadrature tolerance " + fmt(abs_tol) + " unreachable at x = " + fmt(x));
  }
  return w * q.value / kPi;
}

AiryReport airy_reference_check(int m, const GridSpec& grid1d, double t, int sign, double x_max) {
  grid1d.validate();
  if (grid1d.n != 1) throw Error(Errc::invalid_argument, "Airy check runs on a 1-D grid");
  if (sign != 1 && sign != -1) throw Error(Errc::invalid_argument, "Airy check sign must be ±1");
  const double alpha = 2.0 * m + 1.0;
  const SkewSetup s = validate_params(alpha, sign * 1.0);
  const SkewSetup mirror = validate_params(alpha, -sign * 1.0);
  const double scale = std::pow(t, -1.0 / alpha);

  std::vector<double> xs;
  for (std::size_t p = 0; p < grid1d.total_points(); ++p) {
    const double x = grid1d.position(p)[0];
    if (std::abs(x) <= x_max) xs.push_back(x);
  }
  AiryReport rep{m, t, sign, x_max, xs.size(), 0.0, 0.0, 0.0, 0.0};
  std::vector<double> dev(xs.size()), oracle(xs.size()), sym(xs.size()), scl(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double x = xs[i];
    const double phi = solution_pointwise(s, 1, std::abs(x), t).real_part;
    const double ref = airy_oracle(m, x, t, sign).real();
    const double phi_mirror = solution_pointwise(mirror, 1, std::abs(-x), t).real_part;
    const double phi_unit = solution_pointwise(s, 1, std::abs(x) * scale, 1.0).real_part;
    dev[i] = std::abs(phi - ref);
    oracle[i] = std::abs(ref);
    sym[i] = std::abs(phi - phi_mirror);
    scl[i] = std::abs(phi - scale * phi_unit);
  });
  for (std::size_t i = 0; i < xs.size(); ++i) {
    rep.max_abs_dev = std::max(rep.max_abs_dev, dev[i]);
    rep.max_oracle_abs = std::max(rep.max_oracle_abs, oracle[i]);
    rep.symmetry_dev = std::max(rep.symmetry_dev, sym[i]);
    rep.scaling_dev = std::max(rep.scaling_dev, scl[i]);
  }
  return rep;
}

}  // namespace fracdirac
