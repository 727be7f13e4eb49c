#pragma once

#include "fracdirac/kernel.hpp"

namespace fracdirac::detail {

// Residue terms at s = -n - 2k of the Mellin-Barnes integrand, formed and
// accumulated in binary128.
ResidueSeries residue_terms_wide(double alpha, int n, double r, cplx tau, int k_max);

}  // namespace fracdirac::detail
