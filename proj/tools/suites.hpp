#pragma once

#include <optional>
#include <string>

#include "fracdirac/verification.hpp"

namespace fracdirac::cli {

// Verification suites behind `fracdirac verify`. A set tol_override replaces
// every check's tolerance.
VerificationReport suite_residual(std::optional<double> tol_override);
VerificationReport suite_semigroup(std::optional<double> tol_override);
VerificationReport suite_crosscheck(std::optional<double> tol_override);
VerificationReport suite_airy(std::optional<double> tol_override);
VerificationReport run_suite(const std::string& name, std::optional<double> tol_override);

}  // namespace fracdirac::cli
