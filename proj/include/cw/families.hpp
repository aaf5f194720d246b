#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cw/anticodes.hpp"
#include "cw/report.hpp"
#include "cw/space.hpp"

namespace cw {

// A constructed constant-weight code together with the evidence that it is
// diameter perfect: the anticode used for the size product, the measured
// distance parameters, the verification report, and a deterministic
// key=value manifest describing how it was built.
struct FamilyCode {
  Code code;
  std::string family;
  int min_dist = 0;
  int anticode_diameter = 0;
  AnticodeSpec anticode;
  VerificationReport certificate;
  std::vector<std::pair<std::string, std::string>> manifest;
};

std::string manifest_text(const FamilyCode& fc);

// Full-weight words are Hamming-space words over one fewer symbol, shifted
// away from zero.  lift adds 1 to every symbol; project undoes it and
// requires every word to have full weight.
Code f1_lift(const Code& base);
Code f1_project(const Code& full);

// All supports, all nonzero scalar multiples of the one weight-w codeword an
// MDS parity-check matrix admits per support: distance w, size C(n,w)(q-1).
FamilyCode mds_cw_construct(int n, int w, std::uint32_t q);

// Merge two distance-w codes over disjoint nonzero alphabets into one code
// over the combined alphabet; cross pairs differ on their whole support
// union, so distance w survives.
FamilyCode mds_cw_union(const Code& a, const Code& b);

// One codeword per support with per-coordinate distinct symbols: distance
// w+1 using 1 + C(n-1,w-1) symbols.
FamilyCode f5_construct(int n, int w);

// Weight-3 specialisation reaching the smallest possible alphabet: symbols
// come from a (near-)one-factorization of the complete graph on the other
// n-1 coordinates.
FamilyCode f5_construct_w3(int n);

// Round-robin (near-)one-factorization of the complete graph on m points
// (0-based).  Even m: m-1 perfect matchings.  Odd m: m near-perfect
// matchings, factor r leaving point r unmatched.
using Factor = std::vector<std::pair<int, int>>;
std::vector<Factor> one_factorization(int m);

// Orthogonal-array route: strength-t array over q symbols, rows grouped by
// last column, one support-subset of zeros per group, last column dropped.
// Yields length n-1, weight n-1-l, distance n-t-l+1 over q+1 symbols.
FamilyCode moa_cw_construct(int n, int t, int l, std::uint32_t q);

enum class Reduction { puncture, shorten };

// puncture: keep words with first coordinate zero, delete it (same w, d).
// shorten: keep words with first coordinate nonzero, delete it (w-1, d-1).
FamilyCode moa_reduce(const Code& c, Reduction mode);

// Weight-3 strength-2 covering family over q+1 points (distance 3).
FamilyCode gs23_family(std::uint32_t q);

}  // namespace cw
