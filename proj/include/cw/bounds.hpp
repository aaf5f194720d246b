#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cw/ortharray.hpp"
#include "cw/space.hpp"

namespace cw {

struct BoundCheck {
  std::string rule;    // stable kebab-case id
  std::string detail;  // the instantiated inequality
  bool holds = true;
};

// Necessary conditions for a diameter-perfect code with 1 <= d < w, whose
// per-support projections must form orthogonal arrays.  Empty when d >= w:
// these conditions say nothing there.
std::vector<BoundCheck> moa_bounds(int n, int d, int w, std::uint32_t q);

// Alphabet-size range for a distance-(w+1) code with one word per support.
struct AlphabetBounds {
  mpz_class lower = 0;
  mpz_class upper = 0;                // alphabet reached by construction
  std::optional<mpz_class> exact;     // known smallest alphabet
};

AlphabetBounds q0_bounds(int w, int n);

// One family's verdict on whether it could yield a diameter-perfect code
// with the requested parameters.
struct FamilyAssessment {
  std::string family;
  Feasibility status = Feasibility::unknown;
  std::vector<BoundCheck> checks;
  std::string note;
};

struct FeasibilityReport {
  int n = 0;
  int d = 0;
  int w = 0;
  std::uint32_t q = 0;
  std::vector<FamilyAssessment> assessments;
  std::optional<std::string> external_note;  // curated fact, when one applies

  // 0 while any family remains open or feasible; otherwise the number of
  // failed bound checks that together close every route.
  int violations() const;
  std::string to_text() const;
};

FeasibilityReport feasibility_report(int n, int d, int w, std::uint32_t q);

// Curated results established outside this library (existence and
// nonexistence that no closed-form rule here decides).
struct KnownFact {
  int n = 0;
  int d = 0;
  int w = 0;
  std::uint32_t q = 0;
  bool exists = false;
  std::string note;
};

const std::vector<KnownFact>& known_facts();
std::optional<KnownFact> lookup_fact(int n, int d, int w, std::uint32_t q);

}  // namespace cw
