#pragma once

#include <string>
#include <vector>

namespace cw {

// One certified quantity.  `rule` is a stable kebab-case identifier of the
// identity or bound being checked, e.g. "code-anticode-product".
struct Check {
  std::string name;
  std::string rule;
  std::string expected;
  std::string measured;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool pass() const;
  void add(std::string name, std::string rule, std::string expected,
           std::string measured, bool ok);
  // One line per check:
  //   CHECK <name> <rule> expected=<v> measured=<v> <PASS|FAIL>
  std::string to_text() const;
};

}  // namespace cw
