#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cw/galois.hpp"
#include "cw/space.hpp"

namespace cw {

struct OrthogonalArray {
  int n = 0;               // columns
  std::uint32_t q = 0;     // symbols 0..q-1
  int strength = 0;
  long long index = 0;     // lambda
  std::vector<Word> rows;
};

// Checks that every t-column projection holds every t-tuple equally often;
// returns that common count (lambda).  Throws NotOA with the first violating
// column set and tuple.
long long oa_verify(const std::vector<Word>& rows, int t, std::uint32_t q);

// Index-unity OA(t,n,q) whose rows evaluate all q^t polynomials of degree < t
// over GF(q) at the points 0,1,...  For n = q+1 the extra column carries the
// leading coefficient.  t = 1 works for every n (constant rows).  Rows are
// ordered so the last column is constant on consecutive blocks of q^(t-1)
// rows, with block symbols ascending.
OrthogonalArray rs_oa(int t, int n, std::uint32_t q);

// Parity-check matrix of an [n, n-w+1, w] MDS code: rows are the powers
// 0..w-2 of n distinct column points (one extended column when n = q+1).
// Every (w-1)-subset of columns is linearly independent.
struct ParityCheck {
  int n = 0;
  int w = 0;
  std::uint32_t q = 0;
  std::vector<std::vector<std::uint32_t>> rows;  // (w-1) x n
};

ParityCheck mds_parity_check(int n, int w, std::uint32_t q);

// All codewords of minimum weight w: per w-support the q-1 nonzero multiples
// of the one-dimensional kernel of the corresponding column submatrix.
Code mds_min_weight_codewords(const ParityCheck& h);

// Every codeword of the [n, n-w+1] code with parity check h.
std::vector<Word> linear_code_words(const ParityCheck& h);

enum class Feasibility { feasible, infeasible, unknown };

struct FeasibilityVerdict {
  Feasibility status = Feasibility::unknown;
  std::string rule;    // bound or construction that decided
  std::string detail;  // instantiated inequality
};

// Three-valued existence test for an index-unity OA(t,n,q) from the closed
// bounds and constructions this library knows.
FeasibilityVerdict oa_feasible(int t, int n, std::uint32_t q);

}  // namespace cw
