#include "fracdirac/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "fracdirac/error.hpp"

namespace fracdirac {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxCliffordDimension) {
    throw Error(Errc::invalid_argument,
                "Clifford dimension must lie in [1, 12], got " + std::to_string(n));
  }
}

// Number of transpositions needed to bring e_a e_b into ascending order:
// for each generator of b, count the generators of a with a larger index.
int reorder_parity(std::uint32_t a, std::uint32_t b) noexcept {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return swaps & 1;
}

}  // namespace

int Blade::grade() const noexcept { return std::popcount(mask); }

SignedBlade blade_product(Blade a, Blade b, int n) {
  check_dimension(n);
  const std::uint32_t limit = 1u << n;
  if (a.mask >= limit || b.mask >= limit) {
    throw Error(Errc::invalid_argument, "blade mask out of range for Cl(0," +
                                            std::to_string(n) + ")");
  }
  // each shared generator contributes e_j^2 = -1
  const int parity = reorder_parity(a.mask, b.mask) + std::popcount(a.mask & b.mask);
  return {(parity & 1) ? -1 : 1, Blade{a.mask ^ b.mask}};
}

int dagger_sign(Blade b) noexcept {
  const int r = b.grade();
  return ((r * (r + 1) / 2) & 1) ? -1 : 1;
}

Multivector::Multivector(int n) : n_(n) {
  check_dimension(n);
  coeffs_.assign(std::size_t{1} << n, cplx{});
}

Multivector Multivector::scalar(int n, cplx value) {
  Multivector m(n);
  m.coeffs_[0] = value;
  return m;
}

Multivector Multivector::basis(int n, Blade blade, cplx coeff) {
  Multivector m(n);
  if (blade.mask >= m.size()) {
    throw Error(Errc::invalid_argument, "blade mask out of range");
  }
  m.coeffs_[blade.mask] = coeff;
  return m;
}

Multivector Multivector::vector(int n, std::span<const double> coords) {
  Multivector m(n);
  if (coords.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::dimension_mismatch, "vector coordinate count differs from n");
  }
  for (int j = 0; j < n; ++j) m.coeffs_[1u << j] = coords[j];
  return m;
}

Multivector Multivector::vector(int n, std::span<const cplx> coords) {
  Multivector m(n);
  if (coords.size() != static_cast<std::size_t>(n)) {
    throw Error(Errc::dimension_mismatch, "vector coordinate count differs from n");
  }
  for (int j = 0; j < n; ++j) m.coeffs_[1u << j] = coords[j];
  return m;
}

bool Multivector::is_scalar(double tol) const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [tol](cplx c) { return std::abs(c) <= tol; });
}

bool Multivector::is_vector(double tol) const noexcept {
  for (std::uint32_t m = 0; m < coeffs_.size(); ++m) {
    if (std::popcount(m) != 1 && std::abs(coeffs_[m]) > tol) return false;
  }
  return true;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  if (rhs.n_ != n_) throw Error(Errc::dimension_mismatch, "multivector dimension mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  if (rhs.n_ != n_) throw Error(Errc::dimension_mismatch, "multivector dimension mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(cplx s) noexcept {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Multivector mv_mul(const Multivector& a, const Multivector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(Errc::dimension_mismatch, "multivector dimension mismatch in product");
  }
  const int n = a.dimension();
  Multivector out(n);
  const auto size = static_cast<std::uint32_t>(a.size());
  for (std::uint32_t i = 0; i < size; ++i) {
    const cplx ai = a[i];
    if (ai == cplx{}) continue;
    for (std::uint32_t j = 0; j < size; ++j) {
      const cplx bj = b[j];
      if (bj == cplx{}) continue;
      const int parity = reorder_parity(i, j) + std::popcount(i & j);
      const cplx term = ai * bj;
      out[i ^ j] += (parity & 1) ? -term : term;
    }
  }
  return out;
}

Multivector mv_dagger(const Multivector& a) {
  Multivector out(a.dimension());
  const auto size = static_cast<std::uint32_t>(a.size());
  for (std::uint32_t m = 0; m < size; ++m) {
    out[m] = static_cast<double>(dagger_sign(Blade{m})) * std::conj(a[m]);
  }
  return out;
}

double mv_norm(const Multivector& a) {
  // Scalar part of a^dagger a: only the diagonal pairs (J, J) reach mask 0.
  double acc = 0.0;
  const int n = a.dimension();
  const auto size = static_cast<std::uint32_t>(a.size());
  for (std::uint32_t m = 0; m < size; ++m) {
    const cplx c = a[m];
    if (c == cplx{}) continue;
    const int sign = dagger_sign(Blade{m}) * blade_product(Blade{m}, Blade{m}, n).sign;
    acc += sign * std::norm(c);
  }
  return std::sqrt(std::max(acc, 0.0));
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(Errc::dimension_mismatch, "multivector dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.coeffs()[i] - b.coeffs()[i]));
  }
  return worst;
}

}  // namespace fracdirac
