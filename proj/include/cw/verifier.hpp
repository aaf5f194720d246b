#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cw/anticodes.hpp"
#include "cw/report.hpp"
#include "cw/space.hpp"

namespace cw {

// Every w-subset of coordinates must support exactly `expected` codewords;
// with oa_strength set, the nonzero symbols of each support class (mapped to
// 0..q-2) must further verify as an orthogonal array of that strength.
VerificationReport support_regularity(const Code& c, const mpz_class& expected,
                                      std::optional<int> oa_strength = {});

// |C| * |A| against the full space plus min_distance(C) = diameter(A) + 1.
// Throws PreconditionViolated when min_distance(C) <= diameter(A), i.e. the
// pairing does not meet the code-anticode hypothesis at all.
VerificationReport diameter_perfect_check(const Code& c, const Anticode& a);

// Every word of the ambient constant-weight space is within distance e of
// exactly one codeword.
VerificationReport perfect_check(const Code& c, int e);

struct FamilyMatch {
  std::string label;  // F1..F6
  std::string name;
  AnticodeSpec anticode;  // certifying anticode shape
};

// All families whose size/shape formulas the parameters satisfy, in label
// order.  Throws Unclassifiable when none match.
std::vector<FamilyMatch> classify_family(int n, int d, int w, std::uint32_t q,
                                         const mpz_class& size);

}  // namespace cw
