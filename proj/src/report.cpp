#include "cw/report.hpp"

namespace cw {

bool VerificationReport::pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerificationReport::add(std::string name, std::string rule,
                             std::string expected, std::string measured,
                             bool ok) {
  checks.push_back({std::move(name), std::move(rule), std::move(expected),
                    std::move(measured), ok});
}

std::string VerificationReport::to_text() const {
  std::string out;
  for (const Check& c : checks) {
    out += "CHECK " + c.name + " " + c.rule + " expected=" + c.expected +
           " measured=" + c.measured + (c.pass ? " PASS" : " FAIL") + "\n";
  }
  return out;
}

}  // namespace cw
