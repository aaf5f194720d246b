#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cw/report.hpp"
#include "cw/space.hpp"

namespace cw {

// Block design on points 1..n; every block has w points, every t-subset of
// points lies in exactly one block.
struct SteinerSystem {
  int n = 0;
  int t = 0;
  int w = 0;
  std::vector<std::vector<int>> blocks;  // each block sorted, blocks sorted
};

// S(2,3,7), generated from the translates of the difference set {1,2,4} mod 7.
SteinerSystem fano_plane();

// S(2,3,9): the 3-subsets of the nine points of AG(2,3) summing to zero.
SteinerSystem affine_plane_order3();

// The trivial S(w,w,n): all w-subsets.
SteinerSystem trivial_steiner(int w, int n);

// Coverage of every t-subset, block count, and minimum Johnson distance of
// the characteristic vectors.
VerificationReport steiner_verify(const SteinerSystem& s);

struct Divisibility {
  bool pass = false;
  int first_failed_level = -1;  // i with non-integral C(n-i,t-i)/C(w-i,t-i)
  std::vector<mpq_class> levels;
};

// The t nested integrality conditions a Steiner system S(t,w,n) must satisfy.
Divisibility steiner_divisibility(int t, int w, int n);

// Blocks through `point`, point removed, remaining points relabelled 1..n-1
// preserving order.  DerivationUndefined when t = 1.
SteinerSystem steiner_derive(const SteinerSystem& s, int point);

// Constant-weight code over 0..q-1 covering every weight-t word exactly once:
// supp(x) inside supp(c) with matching symbols, for exactly one codeword c.
struct GeneralizedSteiner {
  Code code;
  int t = 0;
};

// Weight-3 codewords of the [q+1, q-1, 3] code; a generalized Steiner system
// with t = 2, w = 3, n = q+1.
GeneralizedSteiner gs_construct_2_3(std::uint32_t q);

VerificationReport gs_verify(const Code& c, int t);

// Keep codewords with `symbol` at 0-based `coordinate`, delete the
// coordinate; drops (t, w, n) by one each.
GeneralizedSteiner gs_derive(const GeneralizedSteiner& g, int coordinate,
                             std::uint32_t symbol);

// C(n,t)/C(w,t) * (q-1)^t as an exact rational.
mpq_class gs_size(int t, int w, int n, std::uint32_t q);
bool gs_size_integral(int t, int w, int n, std::uint32_t q);

}  // namespace cw
