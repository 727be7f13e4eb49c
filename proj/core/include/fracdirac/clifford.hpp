#pragma once

// Complexified Clifford algebra C ⊗ Cl(0,n): generators e_1..e_n with
// e_j e_k + e_k e_j = -2 δ_jk. Basis blades are bit masks, bit (j-1) <-> e_j.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace fracdirac {

using cplx = std::complex<double>;

inline constexpr int kMaxCliffordDimension = 12;

struct Blade {
  std::uint32_t mask = 0;

  int grade() const noexcept;

  friend bool operator==(Blade, Blade) = default;
};

struct SignedBlade {
  int sign;
  Blade blade;
};

// e_a e_b = sign * e_{a xor b}. Throws Errc::invalid_argument if a mask is not
// below 2^n or n is outside [1, kMaxCliffordDimension].
SignedBlade blade_product(Blade a, Blade b, int n);

// Sign picked up by e_J under dagger conjugation: (-1)^{r(r+1)/2}, r = grade.
int dagger_sign(Blade b) noexcept;

class Multivector {
 public:
  // Zero multivector of Cl(0,n).
  explicit Multivector(int n);

  static Multivector scalar(int n, cplx value);
  static Multivector basis(int n, Blade blade, cplx coeff = 1.0);
  // Clifford vector sum_j x_j e_j; coords.size() must equal n.
  static Multivector vector(int n, std::span<const double> coords);
  static Multivector vector(int n, std::span<const cplx> coords);

  int dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  cplx operator[](std::uint32_t mask) const { return coeffs_[mask]; }
  cplx& operator[](std::uint32_t mask) { return coeffs_[mask]; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  std::span<cplx> coeffs() noexcept { return coeffs_; }

  cplx scalar_part() const noexcept { return coeffs_[0]; }

  // Support checks with an absolute tolerance on the off-grade coefficients.
  bool is_scalar(double tol = 0.0) const noexcept;
  bool is_vector(double tol = 0.0) const noexcept;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(cplx s) noexcept;

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, cplx s) { return a *= s; }
  friend Multivector operator*(cplx s, Multivector a) { return a *= s; }

 private:
  int n_;
  std::vector<cplx> coeffs_;
};

// Geometric product, bilinear extension of blade_product.
Multivector mv_mul(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) { return mv_mul(a, b); }

// Anti-automorphism: conj on coefficients, reversal, e_j -> -e_j.
Multivector mv_dagger(const Multivector& a);

// sqrt(Re scalar_part(a^dagger a)).
double mv_norm(const Multivector& a);

double max_abs_diff(const Multivector& a, const Multivector& b);

}  // namespace fracdirac
