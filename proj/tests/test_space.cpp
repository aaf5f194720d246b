#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cw/errors.hpp"
#include "cw/space.hpp"

using namespace cw;

TEST_CASE("weight support and distance basics") {
  const Word u = {0, 2, 0, 1, 3};
  CHECK(weight(u) == 3);
  CHECK(support(u) == std::vector<int>{1, 3, 4});
  CHECK(weight(Word{0, 0}) == 0);
  CHECK(support(Word{0, 0}).empty());
  CHECK(hamming_distance({1, 2, 3}, {1, 0, 3}) == 1);
  CHECK(hamming_distance({1, 2, 3}, {1, 2, 3}) == 0);
  CHECK(hamming_distance({1, 2}, {2, 1}) == 2);
  CHECK_THROWS_AS(hamming_distance({1, 2}, {1, 2, 3}), LengthMismatch);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(4, 4) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(52, 5) == 2598960);
}

TEST_CASE("space size formula") {
  CHECK(space_size(4, 3, 3) == 32);           // C(4,3) * 2^3
  CHECK(space_size(5, 3, 4) == 270);          // C(5,3) * 27
  CHECK(space_size(6, 5, 3) == 192);          // C(6,5) * 32
  CHECK(space_size(3, 0, 5) == 1);            // the zero word
  CHECK(space_size(20, 10, 16) == mpz_class("106539619570312500"));
}

TEST_CASE("subset visitor runs in colexicographic order") {
  std::vector<std::vector<int>> subs;
  for_each_subset(4, 2, [&](const std::vector<int>& s) { subs.push_back(s); });
  const std::vector<std::vector<int>> expect = {
      {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(subs == expect);

  int count = 0;
  for_each_subset(7, 3, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 35);

  // Degenerate widths.
  subs.clear();
  for_each_subset(3, 0, [&](const std::vector<int>& s) { subs.push_back(s); });
  CHECK(subs == std::vector<std::vector<int>>{{}});
}

TEST_CASE("word enumeration covers the space exactly once") {
  std::vector<Word> seen;
  for_each_word(3, 2, 3, [&](const Word& u) { seen.push_back(u); });
  CHECK(seen.size() == 12);  // C(3,2) * 2^2
  // First support {0,1}, symbol patterns lex with the last position fastest.
  const std::vector<Word> head = {
      {1, 1, 0}, {1, 2, 0}, {2, 1, 0}, {2, 2, 0}};
  CHECK(std::vector<Word>(seen.begin(), seen.begin() + 4) == head);
  for (const Word& u : seen) CHECK(weight(u) == 2);
  std::set<Word> dedup(seen.begin(), seen.end());
  CHECK(dedup.size() == seen.size());

  CHECK(enumerate_space(3, 2, 3) == seen);
  CHECK(enumerate_space(5, 4, 3).size() == 80);
}

TEST_CASE("balls in the constant-weight metric have the right sizes") {
  const Word center = {1, 1, 1, 0};
  // Radius 1 inside the weight-3 space: only same-support symbol changes.
  auto b1 = ball(center, 3, 1, true);
  CHECK(b1.size() == 4);  // 1 + w(q-2)
  // Radius 2 adds support moves and double symbol changes.
  auto b2 = ball(center, 3, 2, true);
  CHECK(b2.size() == 13);
  for (const Word& u : b2) {
    CHECK(weight(u) == 3);
    CHECK(hamming_distance(u, center) <= 2);
  }
  CHECK(std::is_sorted(b2.begin(), b2.end()));

  // Independent recount by scanning the whole space.
  int hits = 0;
  for_each_word(4, 3, 3, [&](const Word& u) {
    if (hamming_distance(u, center) <= 2) ++hits;
  });
  CHECK(hits == 13);

  // Unrestricted Hamming ball of radius 1 over q=3, n=4: 1 + n(q-1).
  CHECK(ball(center, 3, 1, false).size() == 9);
}

TEST_CASE("min distance and diameter of explicit sets") {
  const std::vector<Word> pair = {{1, 1, 0}, {2, 2, 0}};
  CHECK(min_distance(pair) == 2);
  CHECK(diameter(pair) == 2);
  const std::vector<Word> three = {{1, 1, 0}, {1, 2, 0}, {0, 1, 1}};
  CHECK(min_distance(three) == 1);
  CHECK(diameter(three) == 3);
  CHECK(diameter(std::vector<Word>{{1, 0}}) == 0);
  CHECK_THROWS_AS(min_distance(std::vector<Word>{{1, 0}}), TooFewWords);
  CHECK_THROWS_AS(diameter(std::vector<Word>{}), EmptySet);
}

TEST_CASE("make_code canonicalizes and validates") {
  Code c = make_code(3, 3, {{2, 1, 0}, {1, 1, 0}, {2, 1, 0}});
  CHECK(c.words.size() == 2);  // duplicate dropped
  CHECK(c.words[0] == Word{1, 1, 0});
  CHECK(c.weight.has_value());
  CHECK(*c.weight == 2);

  Code mixed = make_code(3, 3, {{1, 0, 0}, {1, 1, 0}});
  CHECK_FALSE(mixed.weight.has_value());

  CHECK_THROWS_AS(make_code(3, 3, {{1, 3, 0}}), InvariantViolation);
  CHECK_THROWS_AS(make_code(3, 3, {{1, 1}}), InvariantViolation);
}

TEST_CASE("code text round trip") {
  Code c = make_code(4, 3, {{1, 1, 1, 0}, {0, 2, 2, 2}});
  const std::string text = code_to_text(c);
  CHECK(text.back() == '\n');
  Code back = parse_code_text(text);
  CHECK(back.n == 4);
  CHECK(back.q == 3);
  CHECK(back.weight == c.weight);
  CHECK(back.words == c.words);

  // Comments and blank lines are tolerated.
  Code commented = parse_code_text(
      "# sample file\n3 3 2 1\n# body next\n1 1 0\n");
  CHECK(commented.words.size() == 1);

  // Mixed-weight files use '-' in the weight column.
  Code mixed = make_code(3, 3, {{1, 0, 0}, {1, 1, 0}});
  const std::string mtext = code_to_text(mixed);
  CHECK(mtext.find(" - ") != std::string::npos);
  CHECK(parse_code_text(mtext).words == mixed.words);
}

TEST_CASE("parser reports malformed inputs with line numbers") {
  // Missing trailing newline.
  CHECK_THROWS_AS(parse_code_text("3 3 2 1\n1 1 0"), ParseError);
  // Wrong word count.
  CHECK_THROWS_AS(parse_code_text("3 3 2 2\n1 1 0\n"), ParseError);
  // Extra words.
  CHECK_THROWS_AS(parse_code_text("3 3 2 1\n1 1 0\n2 2 0\n"), ParseError);
  // Bad header.
  CHECK_THROWS_AS(parse_code_text("3 3\n"), ParseError);
  // Symbol out of range surfaces as a parse-level failure.
  CHECK_THROWS(parse_code_text("3 3 2 1\n1 5 0\n"));
  // Wrong per-line coordinate count.
  CHECK_THROWS_AS(parse_code_text("3 3 2 1\n1 1\n"), ParseError);
  // Header weight that the body contradicts.
  CHECK_THROWS(parse_code_text("3 3 1 1\n1 1 0\n"));
  try {
    parse_code_text("3 3 2 1\n1 1\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);  // line no.
  }
}

TEST_CASE("file round trip through the filesystem") {
  Code c = make_code(4, 5, {{1, 4, 1, 0}, {0, 2, 3, 4}});
  const std::string path = "roundtrip_tmp.code";
  write_code_file(c, path);
  Code back = parse_code_file(path);
  CHECK(back.words == c.words);
  CHECK(back.q == 5);
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_code_file("definitely_missing.code"), ParseError);
}
