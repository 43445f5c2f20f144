#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wallkit {

struct Check {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const;
};

VerificationReport verify_generic();
VerificationReport verify_one_curve();
VerificationReport verify_two_curves();
VerificationReport verify_elliptic();
VerificationReport verify_involution_obstruction();

// "generic", "one-curve", "two-curves", "elliptic", "involution".
std::vector<std::string> suite_names();
// A single suite by name, or every suite for "all". Throws InvalidArgument on
// an unknown name.
std::vector<VerificationReport> run_suites(std::string_view name);

}  // namespace wallkit
