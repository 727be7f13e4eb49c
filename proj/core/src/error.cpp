#include "fracdirac/error.hpp"

namespace fracdirac {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::pole: return "pole";
    case Errc::no_convergence: return "no_convergence";
    case Errc::refused: return "refused";
    case Errc::space_mismatch: return "space_mismatch";
  }
  return "unknown";
}

}  // namespace fracdirac
