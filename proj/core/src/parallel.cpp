#include "fracdirac/parallel.hpp"

#include <cstdlib>
#include <string>

namespace fracdirac {

unsigned thread_count() {
  if (const char* env = std::getenv("FRACDIRAC_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace fracdirac
