#include "cw/designs.hpp"

#include <algorithm>
#include <map>

#include "cw/ortharray.hpp"

namespace cw {

SteinerSystem fano_plane() {
  SteinerSystem s;
  s.n = 7;
  s.t = 2;
  s.w = 3;
  const int base[3] = {1, 2, 4};
  for (int i = 0; i < 7; ++i) {
    std::vector<int> block;
    for (int b : base) block.push_back((b + i) % 7 + 1);
    std::sort(block.begin(), block.end());
    s.blocks.push_back(std::move(block));
  }
  std::sort(s.blocks.begin(), s.blocks.end());
  return s;
}

SteinerSystem affine_plane_order3() {
  SteinerSystem s;
  s.n = 9;
  s.t = 2;
  s.w = 3;
  // Point 3r+c+1 is the cell (r,c); three cells are collinear in AG(2,3)
  // exactly when they sum to zero componentwise.
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      for (int c = b + 1; c < 9; ++c) {
        const int r = (a / 3 + b / 3 + c / 3) % 3;
        const int col = (a % 3 + b % 3 + c % 3) % 3;
        if (r == 0 && col == 0) s.blocks.push_back({a + 1, b + 1, c + 1});
      }
  std::sort(s.blocks.begin(), s.blocks.end());
  return s;
}

SteinerSystem trivial_steiner(int w, int n) {
  if (!(1 <= w && w <= n))
    throw ParamsOutOfRange("trivial system needs 1 <= w <= n");
  SteinerSystem s;
  s.n = n;
  s.t = w;
  s.w = w;
  for_each_subset(n, w, [&](const std::vector<int>& sub) {
    std::vector<int> block;
    for (int c : sub) block.push_back(c + 1);
    s.blocks.push_back(std::move(block));
  });
  std::sort(s.blocks.begin(), s.blocks.end());
  return s;
}

VerificationReport steiner_verify(const SteinerSystem& s) {
  VerificationReport rep;
  bool structure = s.n >= 1 && 1 <= s.t && s.t <= s.w && s.w <= s.n;
  for (const auto& block : s.blocks) {
    if (static_cast<int>(block.size()) != s.w) structure = false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] < 1 || block[i] > s.n) structure = false;
      if (i > 0 && block[i - 1] >= block[i]) structure = false;
    }
  }
  rep.add("block-structure", "sorted-w-subsets-of-points", "ok",
          structure ? "ok" : "bad", structure);
  if (!structure) return rep;

  std::map<std::vector<int>, long long> cover;
  for (const auto& block : s.blocks) {
    for_each_subset(s.w, s.t, [&](const std::vector<int>& idx) {
      std::vector<int> sub;
      for (int i : idx) sub.push_back(block[i]);
      ++cover[sub];
    });
  }
  long long bad = 0;
  for_each_subset(s.n, s.t, [&](const std::vector<int>& idx) {
    std::vector<int> sub;
    for (int i : idx) sub.push_back(i + 1);
    const auto it = cover.find(sub);
    if (it == cover.end() || it->second != 1) ++bad;
  });
  rep.add("t-subset-coverage", "each-t-subset-in-one-block", "0",
          std::to_string(bad), bad == 0);

  mpq_class expected_blocks(binomial(s.n, s.t), binomial(s.w, s.t));
  expected_blocks.canonicalize();
  mpq_class measured_blocks(static_cast<long>(s.blocks.size()));
  rep.add("block-count", "choose(n,t)/choose(w,t)", expected_blocks.get_str(),
          measured_blocks.get_str(), measured_blocks == expected_blocks);

  if (s.blocks.size() >= 2) {
    int min_johnson = s.w + 1;
    for (std::size_t i = 0; i < s.blocks.size(); ++i)
      for (std::size_t j = i + 1; j < s.blocks.size(); ++j) {
        std::vector<int> inter;
        std::set_intersection(s.blocks[i].begin(), s.blocks[i].end(),
                              s.blocks[j].begin(), s.blocks[j].end(),
                              std::back_inserter(inter));
        min_johnson =
            std::min(min_johnson, s.w - static_cast<int>(inter.size()));
      }
    rep.add("johnson-min-distance", "w-t+1", std::to_string(s.w - s.t + 1),
            std::to_string(min_johnson), min_johnson == s.w - s.t + 1);
  }
  return rep;
}

Divisibility steiner_divisibility(int t, int w, int n) {
  if (!(1 <= t && t <= w && w <= n))
    throw ParamsOutOfRange("divisibility needs 1 <= t <= w <= n");
  Divisibility d;
  d.pass = true;
  for (int i = 0; i < t; ++i) {
    mpq_class level(binomial(n - i, t - i), binomial(w - i, t - i));
    level.canonicalize();
    if (d.pass && level.get_den() != 1) {
      d.pass = false;
      d.first_failed_level = i;
    }
    d.levels.push_back(level);
  }
  return d;
}

SteinerSystem steiner_derive(const SteinerSystem& s, int point) {
  if (s.t < 2)
    throw DerivationUndefined("cannot derive below t = 1");
  if (point < 1 || point > s.n)
    throw ParamsOutOfRange("derivation point outside 1..n");
  SteinerSystem out;
  out.n = s.n - 1;
  out.t = s.t - 1;
  out.w = s.w - 1;
  for (const auto& block : s.blocks) {
    if (!std::binary_search(block.begin(), block.end(), point)) continue;
    std::vector<int> nb;
    for (int p : block)
      if (p != point) nb.push_back(p > point ? p - 1 : p);
    out.blocks.push_back(std::move(nb));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

namespace {

// supp(x) inside supp(c) with equal symbols there.
bool covers(const Word& c, const Word& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && c[i] != x[i]) return false;
  return true;
}

}  // namespace

GeneralizedSteiner gs_construct_2_3(std::uint32_t q) {
  if (q < 3)
    throw ParamsOutOfRange("generalized Steiner construction needs q >= 3");
  GeneralizedSteiner g;
  g.t = 2;
  g.code = mds_min_weight_codewords(mds_parity_check(q + 1, 3, q));
  return g;
}

VerificationReport gs_verify(const Code& c, int t) {
  VerificationReport rep;
  if (!c.weight) {
    rep.add("constant-weight", "single-weight-codebook", "yes", "no", false);
    return rep;
  }
  const int w = *c.weight;
  if (!(1 <= t && t <= w))
    throw ParamsOutOfRange("gs_verify needs 1 <= t <= w");

  if (c.words.size() >= 2) {
    const int expected_d = 2 * (w - t) + 1;
    const int measured_d = min_distance(c.words);
    rep.add("min-distance", "2(w-t)+1", std::to_string(expected_d),
            std::to_string(measured_d), measured_d == expected_d);
  }

  long long bad = 0;
  for_each_word(c.n, t, c.q, [&](const Word& x) {
    long long hits = 0;
    for (const Word& cw : c.words)
      if (covers(cw, x)) ++hits;
    if (hits != 1) ++bad;
  });
  rep.add("t-word-coverage", "unique-covering-codeword", "0",
          std::to_string(bad), bad == 0);

  const mpq_class expected = gs_size(t, w, c.n, c.q);
  const mpq_class measured(static_cast<long>(c.words.size()));
  rep.add("code-size", "choose(n,t)/choose(w,t)*(q-1)^t", expected.get_str(),
          measured.get_str(), measured == expected);
  return rep;
}

GeneralizedSteiner gs_derive(const GeneralizedSteiner& g, int coordinate,
                             std::uint32_t symbol) {
  if (g.t < 2) throw DerivationUndefined("cannot derive below t = 1");
  if (coordinate < 0 || coordinate >= g.code.n)
    throw ParamsOutOfRange("derivation coordinate outside the code length");
  if (symbol == 0 || symbol >= g.code.q)
    throw ParamsOutOfRange("derivation symbol must be nonzero and < q");
  std::vector<Word> words;
  for (const Word& u : g.code.words) {
    if (u[coordinate] != symbol) continue;
    Word v;
    v.reserve(u.size() - 1);
    for (int i = 0; i < g.code.n; ++i)
      if (i != coordinate) v.push_back(u[i]);
    words.push_back(std::move(v));
  }
  GeneralizedSteiner out;
  out.t = g.t - 1;
  out.code = make_code(g.code.n - 1, g.code.q, std::move(words));
  return out;
}

mpq_class gs_size(int t, int w, int n, std::uint32_t q) {
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), q - 1, t);
  mpq_class r(binomial(n, t) * power, binomial(w, t));
  r.canonicalize();
  return r;
}

bool gs_size_integral(int t, int w, int n, std::uint32_t q) {
  return gs_size(t, w, n, q).get_den() == 1;
}

}  // namespace cw
