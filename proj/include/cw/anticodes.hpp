#pragma once

#include <cstdint>
#include <string>

#include "cw/report.hpp"
#include "cw/space.hpp"

namespace cw {

// Binary anticode: t fixed ones, then weight w-t spread over the remaining
// n-t coordinates; with complement=true every word is complemented (weight
// n-w).  Needs 0 <= t <= w <= n/2.
Anticode anticode_binary(int n, int w, int t, bool complement = false);

// Ones on the first t coordinates, then any weight-(w-t) word over 0..q-1 on
// the rest.  Size C(n-t, w-t) * (q-1)^(w-t).
Anticode anticode_s(int n, int w, int t, std::uint32_t q);

// Arbitrary nonzero symbols on the first delta coordinates, ones on the next
// w-delta, zeros after.  Size (q-1)^delta, diameter delta.
Anticode anticode_m(int n, int w, int delta, std::uint32_t q);

// Radius-e ball around the canonical word (1,..,1,0,..,0), inside the
// constant-weight space.
Anticode ball_anticode(int n, int w, std::uint32_t q, int e);

// 's' = anticode_s, 'm' = anticode_m, 'b' = ball, 'a' = binary,
// 'c' = binary complement, 'h' = Hamming-derived (classification label only,
// not constructible here).
struct AnticodeSpec {
  char kind = 'm';
  int n = 0;
  int w = 0;
  int p = 0;  // t, delta, or radius depending on kind
};

Anticode make_anticode(const AnticodeSpec& spec, std::uint32_t q);

// Shorthand grammar: "s:n,w,t"  "m:n,w,delta"  "ball:n,w,e"  "a:n,w,t"
// "c:n,w,t".
AnticodeSpec parse_anticode_spec(const std::string& text);
std::string to_string(const AnticodeSpec& spec);

// Recomputes size and diameter by scan and compares with the expectations.
VerificationReport anticode_verify(const Anticode& a, const mpz_class& expected_size,
                                   int expected_diameter);

}  // namespace cw
