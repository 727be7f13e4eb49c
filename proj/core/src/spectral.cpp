#include "fracdirac/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "fracdirac/error.hpp"

namespace fracdirac {

namespace {

constexpr double kPi = std::numbers::pi;

// The FFTW planner is not re-entrant; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void require_space(const MultivectorField& f, Space expected, const char* op) {
  if (f.space() != expected) {
    throw Error(Errc::space_mismatch,
                std::string(op) + ": field is tagged " +
                    (f.space() == Space::physical ? "physical" : "spectral"));
  }
}

void require_same_grid(const MultivectorField& a, const MultivectorField& b) {
  if (!(a.grid() == b.grid())) {
    throw Error(Errc::dimension_mismatch, "fields live on different grids");
  }
  if (a.space() != b.space()) {
    throw Error(Errc::space_mismatch, "fields are tagged with different spaces");
  }
}

int axis_parity(const GridSpec& g, std::size_t flat) {
  const auto idx = g.axis_indices(flat);
  int s = 0;
  for (int a = 0; a < g.n; ++a) s += idx[a];
  return s & 1;
}

void run_fft(MultivectorField& f, int sign) {
  const GridSpec& g = f.grid();
  std::array<int, kMaxFieldDimension> dims{};
  for (int a = 0; a < g.n; ++a) dims[a] = g.points_per_axis;
  auto* buf = reinterpret_cast<fftw_complex*>(f.data().data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_many_dft(g.n, dims.data(), static_cast<int>(f.blades()), buf, nullptr, 1,
                              static_cast<int>(f.points()), buf, nullptr, 1,
                              static_cast<int>(f.points()), sign, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw Error(Errc::invalid_argument, "FFTW could not plan the transform");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

// e_j e_J sign for every generator j and blade J of Cl(0,n).
struct GeneratorTable {
  int n;
  std::array<std::vector<int>, kMaxFieldDimension> sign;

  explicit GeneratorTable(int dim) : n(dim) {
    for (int j = 0; j < n; ++j) {
      sign[j].resize(std::size_t{1} << n);
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        sign[j][m] = blade_product(Blade{1u << j}, Blade{m}, n).sign;
      }
    }
  }
};

}  // namespace

void GridSpec::validate() const {
  if (n < 1 || n > kMaxFieldDimension) {
    throw Error(Errc::invalid_argument,
                "grid dimension must be 1..3 (got " + std::to_string(n) + ")");
  }
  if (points_per_axis < 2 || points_per_axis % 2 != 0) {
    throw Error(Errc::invalid_argument,
                "points per axis must be even and >= 2 (got " + std::to_string(points_per_axis) +
                    ")");
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw Error(Errc::invalid_argument, "grid half width must be positive");
  }
}

std::size_t GridSpec::total_points() const {
  std::size_t t = 1;
  for (int a = 0; a < n; ++a) t *= static_cast<std::size_t>(points_per_axis);
  return t;
}

double GridSpec::cell_volume() const { return std::pow(spacing(), n); }

double GridSpec::frequency_step() const { return kPi / half_width; }

std::array<int, kMaxFieldDimension> GridSpec::axis_indices(std::size_t flat) const {
  std::array<int, kMaxFieldDimension> idx{};
  for (int a = n - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % points_per_axis);
    flat /= points_per_axis;
  }
  return idx;
}

std::size_t GridSpec::flat_index(std::span<const int> idx) const {
  std::size_t flat = 0;
  for (int a = 0; a < n; ++a) {
    int i = idx[a] % points_per_axis;
    if (i < 0) i += points_per_axis;
    flat = flat * points_per_axis + static_cast<std::size_t>(i);
  }
  return flat;
}

std::array<double, kMaxFieldDimension> GridSpec::position(std::size_t flat) const {
  const auto idx = axis_indices(flat);
  std::array<double, kMaxFieldDimension> x{};
  for (int a = 0; a < n; ++a) x[a] = -half_width + idx[a] * spacing();
  return x;
}

std::array<double, kMaxFieldDimension> GridSpec::frequency(std::size_t flat) const {
  const auto idx = axis_indices(flat);
  std::array<double, kMaxFieldDimension> xi{};
  for (int a = 0; a < n; ++a) {
    const int k = idx[a] < points_per_axis / 2 ? idx[a] : idx[a] - points_per_axis;
    xi[a] = k * frequency_step();
  }
  return xi;
}

bool GridSpec::is_zero_mode(std::size_t flat) const {
  const auto idx = axis_indices(flat);
  for (int a = 0; a < n; ++a) {
    if (idx[a] != 0) return false;
  }
  return true;
}

MultivectorField::MultivectorField(GridSpec grid, Space space)
    : grid_(grid), space_(space) {
  grid_.validate();
  points_ = grid_.total_points();
  data_.assign(points_ << grid_.n, cplx{0.0, 0.0});
}

MultivectorField MultivectorField::from_scalar(
    GridSpec grid, const std::function<cplx(std::span<const double>)>& fn, Space space) {
  MultivectorField f(grid, space);
  const auto& g = f.grid();
  for (std::size_t p = 0; p < f.points(); ++p) {
    const auto c = space == Space::physical ? g.position(p) : g.frequency(p);
    f.data_[p] = fn(std::span<const double>(c.data(), static_cast<std::size_t>(g.n)));
  }
  return f;
}

Multivector MultivectorField::at(std::size_t point) const {
  Multivector m(grid_.n);
  for (std::uint32_t b = 0; b < blades(); ++b) m[b] = coeff(point, b);
  return m;
}

void MultivectorField::set(std::size_t point, const Multivector& value) {
  if (value.dimension() != grid_.n) {
    throw Error(Errc::dimension_mismatch, "multivector dimension does not match the field");
  }
  for (std::uint32_t b = 0; b < blades(); ++b) coeff(point, b) = value[b];
}

MultivectorField& MultivectorField::operator+=(const MultivectorField& rhs) {
  require_same_grid(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

MultivectorField& MultivectorField::operator-=(const MultivectorField& rhs) {
  require_same_grid(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

MultivectorField& MultivectorField::operator*=(cplx s) noexcept {
  for (auto& c : data_) c *= s;
  return *this;
}

double MultivectorField::l2_norm() const {
  // mv_norm^2 is the plain sum of |c|^2 over blades.
  double s = 0.0;
  for (const auto& c : data_) s += std::norm(c);
  return std::sqrt(s);
}

double MultivectorField::max_abs() const {
  double m = 0.0;
  for (const auto& c : data_) m = std::max(m, std::abs(c));
  return m;
}

MultivectorField operator+(MultivectorField a, const MultivectorField& b) { return a += b; }
MultivectorField operator-(MultivectorField a, const MultivectorField& b) { return a -= b; }
MultivectorField operator*(cplx s, MultivectorField a) { return a *= s; }

double max_abs_diff(const MultivectorField& a, const MultivectorField& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

double relative_l2_diff(const MultivectorField& a, const MultivectorField& b) {
  const double denom = b.l2_norm();
  const double num = (a - b).l2_norm();
  return denom > 0.0 ? num / denom : num;
}

MultivectorField fft_forward(const MultivectorField& f) {
  require_space(f, Space::physical, "fft_forward");
  MultivectorField out = f;
  run_fft(out, FFTW_FORWARD);
  const GridSpec& g = out.grid();
  const double dv = g.cell_volume();
  // x_0 = -L contributes e^{iπk} = (-1)^k per axis.
  for (std::size_t p = 0; p < out.points(); ++p) {
    const double s = axis_parity(g, p) ? -dv : dv;
    for (std::uint32_t b = 0; b < out.blades(); ++b) out.coeff(p, b) *= s;
  }
  out.set_space(Space::spectral);
  return out;
}

MultivectorField fft_inverse(const MultivectorField& f) {
  require_space(f, Space::spectral, "fft_inverse");
  MultivectorField out = f;
  const GridSpec& g = out.grid();
  const double scale = std::pow(0.5 / g.half_width, g.n);
  for (std::size_t p = 0; p < out.points(); ++p) {
    const double s = axis_parity(g, p) ? -scale : scale;
    for (std::uint32_t b = 0; b < out.blades(); ++b) out.coeff(p, b) *= s;
  }
  run_fft(out, FFTW_BACKWARD);
  out.set_space(Space::physical);
  return out;
}

Multivector to_multivector(const Paravector& p, int n) {
  Multivector m(n);
  m[0] = p.scalar;
  for (int j = 0; j < n; ++j) m[1u << j] = p.vector[j];
  return m;
}

MultivectorField apply_symbol(const MultivectorField& spectral, const Symbol& symbol) {
  require_space(spectral, Space::spectral, "apply_symbol");
  const GridSpec& g = spectral.grid();
  const GeneratorTable table(g.n);
  MultivectorField out(g, Space::spectral);
  const std::uint32_t nb = spectral.blades();
  for (std::size_t p = 0; p < spectral.points(); ++p) {
    const auto xi = g.frequency(p);
    const Paravector s = symbol(std::span<const double>(xi.data(), static_cast<std::size_t>(g.n)));
    for (std::uint32_t b = 0; b < nb; ++b) {
      const cplx c = spectral.coeff(p, b);
      if (c == cplx{}) continue;
      out.coeff(p, b) += s.scalar * c;
      for (int j = 0; j < g.n; ++j) {
        if (s.vector[j] == cplx{}) continue;
        out.coeff(p, b ^ (1u << j)) += static_cast<double>(table.sign[j][b]) * s.vector[j] * c;
      }
    }
  }
  return out;
}

MultivectorField apply_fourier_multiplier(const MultivectorField& f, const Symbol& symbol) {
  require_space(f, Space::physical, "apply_fourier_multiplier");
  return fft_inverse(apply_symbol(fft_forward(f), symbol));
}

namespace {

double norm_of(std::span<const double> xi) {
  double s = 0.0;
  for (double v : xi) s += v * v;
  return std::sqrt(s);
}

}  // namespace

Paravector symbol_h(std::span<const double> xi) {
  Paravector p;
  const double r = norm_of(xi);
  if (r == 0.0) return p;
  for (std::size_t j = 0; j < xi.size(); ++j) p.vector[j] = cplx{0.0, -xi[j] / r};
  return p;
}

Multivector multiplier_h(std::span<const double> xi) {
  if (xi.empty() || xi.size() > static_cast<std::size_t>(kMaxFieldDimension)) {
    throw Error(Errc::invalid_argument, "multiplier_h: frequency must have 1..3 components");
  }
  return to_multivector(symbol_h(xi), static_cast<int>(xi.size()));
}

Paravector symbol_chi(std::span<const double> xi, int sign) {
  if (sign != 1 && sign != -1) throw Error(Errc::invalid_argument, "projection sign must be +1 or -1");
  // i ξ/|ξ| = -h, so χ± = (1 ∓ h)/2.
  Paravector h = symbol_h(xi);
  Paravector p;
  p.scalar = 0.5;
  for (std::size_t j = 0; j < xi.size(); ++j) p.vector[j] = -0.5 * sign * h.vector[j];
  return p;
}

MultivectorField apply_hilbert(const MultivectorField& f) {
  return apply_fourier_multiplier(f, symbol_h);
}

MultivectorField apply_frac_hilbert(const MultivectorField& f, double theta) {
  const double c = std::cos(0.5 * kPi * theta);
  const double s = std::sin(0.5 * kPi * theta);
  MultivectorField hf = apply_hilbert(f);
  hf *= cplx{0.0, s};
  MultivectorField out = f;
  out *= c;
  out += hf;
  return out;
}

MultivectorField project_pm(const MultivectorField& f, int sign) {
  if (sign != 1 && sign != -1) throw Error(Errc::invalid_argument, "projection sign must be +1 or -1");
  return apply_fourier_multiplier(f, [sign](std::span<const double> xi) { return symbol_chi(xi, sign); });
}

MultivectorField apply_frac_laplacian(const MultivectorField& f, double alpha) {
  if (!(alpha > 0.0)) throw Error(Errc::invalid_argument, "fractional Laplacian needs alpha > 0");
  return apply_fourier_multiplier(f, [alpha](std::span<const double> xi) {
    Paravector p;
    const double r = norm_of(xi);
    p.scalar = r == 0.0 ? 0.0 : std::pow(r, alpha);
    return p;
  });
}

MultivectorField apply_riesz(const MultivectorField& f, int j) {
  if (j < 1 || j > f.dimension()) {
    throw Error(Errc::invalid_argument, "Riesz component index out of range");
  }
  return apply_fourier_multiplier(f, [j](std::span<const double> xi) {
    Paravector p;
    const double r = norm_of(xi);
    if (r != 0.0) p.scalar = cplx{0.0, -xi[j - 1] / r};
    return p;
  });
}

MultivectorField apply_dirac(const MultivectorField& f, int power) {
  if (power < 0) throw Error(Errc::invalid_argument, "Dirac power must be nonnegative");
  // (-iξ)^2 = |ξ|^2, so even powers are scalar and odd powers are vectors.
  return apply_fourier_multiplier(f, [power](std::span<const double> xi) {
    Paravector p;
    const double r2 = norm_of(xi) * norm_of(xi);
    const double even = std::pow(r2, power / 2);
    if (power % 2 == 0) {
      p.scalar = even;
    } else {
      for (std::size_t j = 0; j < xi.size(); ++j) p.vector[j] = cplx{0.0, -xi[j]} * even;
    }
    return p;
  });
}

}  // namespace fracdirac
