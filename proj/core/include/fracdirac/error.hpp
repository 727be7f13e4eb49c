#pragma once

#include <stdexcept>
#include <string>

namespace fracdirac {

enum class Errc {
  invalid_argument,   // precondition on inputs (window, strip, mask range)
  dimension_mismatch,
  pole,               // Gamma pole hit
  no_convergence,     // series growth, quadrature tolerance unreachable
  refused,            // method cannot handle the query (e.g. Re(tau) = 0 on the quadrature path)
  space_mismatch,     // physical/spectral tag
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fracdirac
