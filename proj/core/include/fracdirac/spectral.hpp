#pragma once

// Clifford-valued fields on the periodic grid [-L, L)^n and their Fourier
// calculus. Transforms follow the non-unitary convention
//   F f(ξ) = ∫ f(x) e^{-i<x,ξ>} dx,   f(x) = (2π)^{-n} ∫ F f(ξ) e^{i<x,ξ>} dξ
// discretized as Riemann sums, so grid operators approximate the continuum
// ones. Frequencies live on ξ_k = πk/L, k in [-N/2, N/2), stored in FFT order.

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fracdirac/clifford.hpp"

namespace fracdirac {

using cplx = std::complex<double>;

inline constexpr int kMaxFieldDimension = 3;

struct GridSpec {
  int n = 1;                    // spatial dimension, 1..3
  int points_per_axis = 256;    // N, even
  double half_width = 20.0;     // L

  void validate() const;
  std::size_t total_points() const;
  double spacing() const { return 2.0 * half_width / points_per_axis; }
  double cell_volume() const;
  double frequency_step() const;  // π / L

  // Axis indices of a flat (row-major, last axis fastest) index.
  std::array<int, kMaxFieldDimension> axis_indices(std::size_t flat) const;
  std::size_t flat_index(std::span<const int> idx) const;
  std::array<double, kMaxFieldDimension> position(std::size_t flat) const;
  std::array<double, kMaxFieldDimension> frequency(std::size_t flat) const;
  bool is_zero_mode(std::size_t flat) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

enum class Space { physical, spectral };

// Values of a C ⊗ Cl(0,n)-valued function at every grid point (or mode).
// Stored blade-major: one contiguous plane of N^n coefficients per blade.
class MultivectorField {
 public:
  explicit MultivectorField(GridSpec grid, Space space = Space::physical);

  // Scalar field from a function of position (physical) or frequency (spectral).
  static MultivectorField from_scalar(
      GridSpec grid, const std::function<cplx(std::span<const double>)>& fn,
      Space space = Space::physical);

  const GridSpec& grid() const noexcept { return grid_; }
  Space space() const noexcept { return space_; }
  void set_space(Space s) noexcept { space_ = s; }
  int dimension() const noexcept { return grid_.n; }
  std::uint32_t blades() const noexcept { return 1u << grid_.n; }
  std::size_t points() const noexcept { return points_; }

  cplx coeff(std::size_t point, std::uint32_t blade) const { return data_[blade * points_ + point]; }
  cplx& coeff(std::size_t point, std::uint32_t blade) { return data_[blade * points_ + point]; }
  std::span<cplx> plane(std::uint32_t blade) { return {data_.data() + blade * points_, points_}; }
  std::span<const cplx> plane(std::uint32_t blade) const {
    return {data_.data() + blade * points_, points_};
  }
  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }

  Multivector at(std::size_t point) const;
  void set(std::size_t point, const Multivector& value);

  MultivectorField& operator+=(const MultivectorField& rhs);
  MultivectorField& operator-=(const MultivectorField& rhs);
  MultivectorField& operator*=(cplx s) noexcept;

  // sqrt(Σ_points mv_norm(value)^2)
  double l2_norm() const;
  double max_abs() const;

 private:
  GridSpec grid_;
  Space space_;
  std::size_t points_;
  std::vector<cplx> data_;
};

MultivectorField operator+(MultivectorField a, const MultivectorField& b);
MultivectorField operator-(MultivectorField a, const MultivectorField& b);
MultivectorField operator*(cplx s, MultivectorField a);

// Largest coefficient difference, and relative ℓ² difference ‖a-b‖/‖b‖.
double max_abs_diff(const MultivectorField& a, const MultivectorField& b);
double relative_l2_diff(const MultivectorField& a, const MultivectorField& b);

MultivectorField fft_forward(const MultivectorField& f);
MultivectorField fft_inverse(const MultivectorField& f);

// Symbol of the form s(ξ) + Σ_j v_j(ξ) e_j. Every multiplier used here (h, χ±,
// fractional Laplacian, Dirac powers, the solution data) has this shape.
struct Paravector {
  cplx scalar = 0.0;
  std::array<cplx, kMaxFieldDimension> vector{};
};

using Symbol = std::function<Paravector(std::span<const double> xi)>;

// Mode-wise left Clifford multiplication of a spectral field.
MultivectorField apply_symbol(const MultivectorField& spectral, const Symbol& symbol);
// F^{-1} symbol F on a physical field.
MultivectorField apply_fourier_multiplier(const MultivectorField& f, const Symbol& symbol);

Multivector to_multivector(const Paravector& p, int n);

// h(ξ) = -i ξ/|ξ| as a Clifford vector; zero at ξ = 0.
Multivector multiplier_h(std::span<const double> xi);
Paravector symbol_h(std::span<const double> xi);
// χ±(ξ) = (1 ± i ξ/|ξ|)/2; 1/2 at ξ = 0 so that χ₊ + χ₋ = 1 on every mode.
Paravector symbol_chi(std::span<const double> xi, int sign);

MultivectorField apply_hilbert(const MultivectorField& f);
// cos(πθ/2) f + i sin(πθ/2) H f
MultivectorField apply_frac_hilbert(const MultivectorField& f, double theta);
MultivectorField project_pm(const MultivectorField& f, int sign);
// (-Δ)^{α/2}: multiplier |ξ|^α
MultivectorField apply_frac_laplacian(const MultivectorField& f, double alpha);
// Riesz component R_j (multiplier -i ξ_j/|ξ|), j = 1..n
MultivectorField apply_riesz(const MultivectorField& f, int j);
// D^power with D = F^{-1}(-iξ)F
MultivectorField apply_dirac(const MultivectorField& f, int power);

// Principal-value quadrature of
//   H f(x) = Γ((n+1)/2) π^{-(n+1)/2} P.V. ∫ y/|y|^{n+1} f(x-y) dy,
// left-multiplying by the Clifford vector y as the Fourier form does.
// n = 1 folds the line integral onto one period (cot kernel) and samples the
// odd offsets; n = 2 sums minimum-image lattice pairs with a correction for the
// excluded cell. Throws Errc::no_convergence when the resolution estimate
// (comparison with the half-resolution sublattice) exceeds quad_tol.
MultivectorField apply_hilbert_singular(const MultivectorField& f, double quad_tol);

// Quadrature weights of the Riesz kernel E_j used by apply_hilbert_singular,
// as a scalar physical field: the value at position y is the weight of f(x-y).
MultivectorField riesz_kernel_weights(const GridSpec& grid, int j);
// Discrete symbol Σ_y w_j(y) e^{-i<y,ξ>} of those weights (spectral field).
MultivectorField riesz_discrete_symbol(const GridSpec& grid, int j);

}  // namespace fracdirac
