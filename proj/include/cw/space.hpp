#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cw/errors.hpp"

namespace cw {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

int weight(const Word& u);
std::vector<int> support(const Word& u);  // 0-based coordinates, ascending
int hamming_distance(const Word& u, const Word& v);  // LengthMismatch

mpz_class binomial(int n, int k);

// |{ words of length n over 0..q-1 with exactly w nonzero coordinates }|
//   = C(n,w) * (q-1)^w
mpz_class space_size(int n, int w, std::uint32_t q);

// Visits every word of the space exactly once: supports advance in
// colexicographic order and, within a support, nonzero symbol patterns in
// lexicographic order (last support position fastest).
void for_each_word(int n, int w, std::uint32_t q,
                   const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_space(int n, int w, std::uint32_t q);

// Visits w-subsets of {0..n-1} in colexicographic order.
void for_each_subset(int n, int w,
                     const std::function<void(const std::vector<int>&)>& visit);

// All words within Hamming distance e of center.  With restrict_weight the
// result is intersected with the constant-weight space of center's weight.
// Result is in canonical (sorted) order.
std::vector<Word> ball(const Word& center, std::uint32_t q, int e,
                       bool restrict_weight);

// Sort lexicographically and drop duplicates.
void canonicalize(std::vector<Word>& words);

int min_distance(const std::vector<Word>& words);  // TooFewWords on size < 2
int diameter(const std::vector<Word>& words);      // EmptySet; 0 for singletons

struct Code {
  int n = 0;
  std::uint32_t q = 0;
  std::optional<int> weight;  // set iff every word has this weight
  std::vector<Word> words;    // canonical order
  std::optional<int> min_dist;  // cache filled by constructors/measurement
};

struct Anticode {
  int n = 0;
  std::uint32_t q = 0;
  int weight = 0;
  std::vector<Word> words;  // canonical order
  std::optional<int> diam;  // cache
};

// Validates symbol ranges and lengths, canonicalizes, detects constant weight.
Code make_code(int n, std::uint32_t q, std::vector<Word> words);

int min_distance(const Code& c);
int diameter(const Anticode& a);

// Code file format:
//   line 1:  q n w count        (w is "-" when the set is not constant weight)
//   then count lines of n space-separated symbols.
// Lines starting with '#' are comments.  A trailing newline is required.
Code parse_code_text(const std::string& text);
Code parse_code_file(const std::string& path);
std::string code_to_text(const Code& c);
// Atomic: writes a sibling temp file, then renames over the target.
void write_code_file(const Code& c, const std::string& path);

}  // namespace cw
