#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cw/space.hpp"

namespace cw {

// Limits for the exhaustive searches.  Node and space limits keep results
// deterministic; the wall-clock limit is a safety net for unattended runs.
struct SearchBudget {
  long long max_nodes = 20'000'000;
  double time_limit_seconds = 300.0;
  long long max_space = 1'000'000;  // most ambient words we will materialize
};

enum class SearchStatus { exact, inconclusive };

struct SearchResult {
  SearchStatus status = SearchStatus::inconclusive;
  mpz_class value = 0;        // best size found; exact optimum when exact
  std::vector<Word> witness;  // a set attaining value (may be omitted: note)
  bool proof_of_optimality = false;
  long long nodes = 0;
  std::string note;
};

// Exact maximum size of a code in the weight-w space with minimum distance
// >= d, by branch and bound with a greedy colouring bound.  The first word of
// the space is fixed into the solution (the symmetry group is transitive).
SearchResult max_code_search(int n, int d, int w, std::uint32_t q,
                             const SearchBudget& budget = {});

// Exact maximum size of a set with diameter <= D.
SearchResult max_anticode_search(int n, int D, int w, std::uint32_t q,
                                 const SearchBudget& budget = {});

struct ExistenceResult {
  SearchStatus status = SearchStatus::inconclusive;
  bool exists = false;        // meaningful only when status is exact
  std::vector<Word> witness;  // the object, when one was found
  long long nodes = 0;
  std::string note;
};

// Does a radius-e perfect code exist in the weight-w space?  Radius 1
// decomposes by support: a counting prescreen, then one per-support cover
// whose solution replicates to every support.  Larger radii run a global
// exact cover.
ExistenceResult perfect_code_search(int n, int w, std::uint32_t q, int e,
                                    const SearchBudget& budget = {});

// Does a weight-w code exist covering every weight-t word exactly once with
// pairwise distance >= 2(w-t)+1?
ExistenceResult gs_search(int t, int w, int n, std::uint32_t q,
                          const SearchBudget& budget = {});

}  // namespace cw
