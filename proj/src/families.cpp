#include "cw/families.hpp"

#include <algorithm>
#include <utility>

#include "cw/designs.hpp"
#include "cw/errors.hpp"
#include "cw/ortharray.hpp"
#include "cw/verifier.hpp"

namespace cw {

namespace {

// Attach the diameter-perfect certificate: anticode size product,
// distance/diameter gap, and per-support regularity (with an orthogonal-array
// strength check on the nonzero projections when one is expected).
FamilyCode certify(Code code, std::string label, AnticodeSpec spec,
                   std::optional<int> oa_strength,
                   std::vector<std::pair<std::string, std::string>> params) {
  FamilyCode fc;
  fc.code = std::move(code);
  fc.family = std::move(label);
  fc.anticode = spec;

  const Anticode a = make_anticode(spec, fc.code.q);
  fc.anticode_diameter = a.diam ? *a.diam : diameter(a.words);
  fc.min_dist = min_distance(fc.code);
  fc.code.min_dist = fc.min_dist;
  fc.certificate = diameter_perfect_check(fc.code, a);

  mpz_class per = 0;
  if (fc.code.weight) {
    const mpz_class supports = binomial(fc.code.n, *fc.code.weight);
    per = mpz_class(static_cast<unsigned long>(fc.code.words.size())) /
          supports;
  }
  VerificationReport sr = support_regularity(fc.code, per, oa_strength);
  for (const Check& ck : sr.checks) fc.certificate.checks.push_back(ck);

  fc.manifest.emplace_back("family", fc.family);
  for (auto& kv : params) fc.manifest.push_back(std::move(kv));
  fc.manifest.emplace_back("n", std::to_string(fc.code.n));
  fc.manifest.emplace_back("q", std::to_string(fc.code.q));
  fc.manifest.emplace_back(
      "w", fc.code.weight ? std::to_string(*fc.code.weight) : "-");
  fc.manifest.emplace_back("size", std::to_string(fc.code.words.size()));
  fc.manifest.emplace_back("min_distance", std::to_string(fc.min_dist));
  fc.manifest.emplace_back("anticode", to_string(fc.anticode));
  fc.manifest.emplace_back("anticode_diameter",
                           std::to_string(fc.anticode_diameter));
  fc.manifest.emplace_back("support_multiplicity", per.get_str());
  fc.manifest.emplace_back("certified",
                           fc.certificate.pass() ? "true" : "false");
  return fc;
}

// Classify a finished code by its measured parameters and certify it against
// the first matching anticode shape that is directly constructible.
FamilyCode classified_certify(
    Code code, std::vector<std::pair<std::string, std::string>> params) {
  if (!code.weight)
    throw InvariantViolation("construction produced mixed weights");
  const int d = min_distance(code);
  const int w = *code.weight;
  const mpz_class size(static_cast<unsigned long>(code.words.size()));
  const auto matches = classify_family(code.n, d, w, code.q, size);
  const FamilyMatch* pick = nullptr;
  for (const FamilyMatch& m : matches)
    if (m.anticode.kind != 'h') {
      pick = &m;
      break;
    }
  std::string label = pick ? pick->label : matches.front().label;
  AnticodeSpec spec =
      pick ? pick->anticode : AnticodeSpec{'m', code.n, w, d - 1};
  std::optional<int> strength;
  if (label == "F6")
    strength = w - d + 1;
  else if (label == "F4" || label == "F3")
    strength = 1;
  return certify(std::move(code), std::move(label), spec, strength,
                 std::move(params));
}

}  // namespace

std::string manifest_text(const FamilyCode& fc) {
  std::string out;
  for (const auto& [k, v] : fc.manifest) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

Code f1_lift(const Code& base) {
  std::vector<Word> words;
  words.reserve(base.words.size());
  for (const Word& u : base.words) {
    Word v = u;
    for (Symbol& s : v) ++s;
    words.push_back(std::move(v));
  }
  return make_code(base.n, base.q + 1, std::move(words));
}

Code f1_project(const Code& full) {
  if (full.q < 2) throw ParamsOutOfRange("alphabet too small to project");
  std::vector<Word> words;
  words.reserve(full.words.size());
  for (const Word& u : full.words) {
    if (static_cast<int>(weight(u)) != full.n)
      throw NotFullWeight("word with a zero coordinate cannot be projected");
    Word v = u;
    for (Symbol& s : v) --s;
    words.push_back(std::move(v));
  }
  return make_code(full.n, full.q - 1, std::move(words));
}

FamilyCode mds_cw_construct(int n, int w, std::uint32_t q) {
  if (q < 3)
    throw ParamsInfeasible(
        "alphabet needs at least two nonzero symbols: with a single nonzero "
        "symbol the certifying anticode collapses to one word and the "
        "distance-diameter gap cannot close");
  Code c = mds_min_weight_codewords(mds_parity_check(n, w, q));
  return certify(std::move(c), "F4", AnticodeSpec{'m', n, w, w - 1}, 1,
                 {{"construction", "mdscw"}, {"field", std::to_string(q)}});
}

FamilyCode mds_cw_union(const Code& a, const Code& b) {
  if (a.n != b.n) throw ShapeMismatch("union needs equal lengths");
  if (!a.weight || !b.weight || *a.weight != *b.weight)
    throw ShapeMismatch("union needs equal constant weights");
  const std::uint32_t q = a.q + b.q - 1;
  std::vector<Word> words = a.words;
  for (const Word& u : b.words) {
    Word v = u;
    for (Symbol& s : v)
      if (s != 0) s += a.q - 1;
    words.push_back(std::move(v));
  }
  Code c = make_code(a.n, q, std::move(words));
  return certify(std::move(c), "F4",
                 AnticodeSpec{'m', a.n, *a.weight, *a.weight - 1}, 1,
                 {{"construction", "union"},
                  {"left_q", std::to_string(a.q)},
                  {"right_q", std::to_string(b.q)}});
}

FamilyCode f5_construct(int n, int w) {
  if (!(1 <= w && w < n))
    throw ParamsOutOfRange("one-per-support family needs 1 <= w < n");
  const mpz_class qz = binomial(n - 1, w - 1) + 1;
  if (!qz.fits_ulong_p() || qz.get_ui() > (1u << 20))
    throw ParamsOutOfRange("alphabet for these parameters is impractically large");
  const std::uint32_t q = static_cast<std::uint32_t>(qz.get_ui());

  std::vector<Word> words;
  std::vector<std::uint32_t> counter(n, 0);
  for_each_subset(n, w, [&](const std::vector<int>& s) {
    Word u(n, 0);
    for (int i : s) u[i] = ++counter[i];
    words.push_back(std::move(u));
  });
  Code c = make_code(n, q, std::move(words));
  return certify(std::move(c), "F5", AnticodeSpec{'m', n, w, w}, std::nullopt,
                 {{"construction", "f5"}});
}

std::vector<Factor> one_factorization(int m) {
  if (m < 2) throw ParamsOutOfRange("factorization needs at least two points");
  std::vector<Factor> factors;
  if (m % 2 == 0) {
    const int c = m - 1;  // cycle points 0..m-2, hub m-1
    for (int r = 0; r < c; ++r) {
      Factor f;
      f.emplace_back(std::min(r, m - 1), std::max(r, m - 1));
      for (int i = 1; i <= (m - 2) / 2; ++i) {
        const int x = (r + i) % c;
        const int y = (r - i + c) % c;
        f.emplace_back(std::min(x, y), std::max(x, y));
      }
      std::sort(f.begin(), f.end());
      factors.push_back(std::move(f));
    }
  } else {
    for (int r = 0; r < m; ++r) {  // point r rests in round r
      Factor f;
      for (int i = 1; i <= (m - 1) / 2; ++i) {
        const int x = (r + i) % m;
        const int y = (r - i + m) % m;
        f.emplace_back(std::min(x, y), std::max(x, y));
      }
      std::sort(f.begin(), f.end());
      factors.push_back(std::move(f));
    }
  }
  return factors;
}

FamilyCode f5_construct_w3(int n) {
  if (n < 4)
    throw ParamsOutOfRange("weight-3 family needs length at least 4");
  const int m = n - 1;
  const std::vector<Factor> factors = one_factorization(m);
  std::vector<std::vector<int>> factor_of(m, std::vector<int>(m, -1));
  for (std::size_t fi = 0; fi < factors.size(); ++fi)
    for (const auto& [x, y] : factors[fi])
      factor_of[x][y] = factor_of[y][x] = static_cast<int>(fi);
  const std::uint32_t q = static_cast<std::uint32_t>(factors.size()) + 1;

  std::vector<Word> words;
  for_each_subset(n, 3, [&](const std::vector<int>& s) {
    Word u(n, 0);
    for (int pos = 0; pos < 3; ++pos) {
      const int i = s[pos];
      const int a = s[(pos + 1) % 3];
      const int b = s[(pos + 2) % 3];
      const int ra = a < i ? a : a - 1;  // relabel around the fixed coordinate
      const int rb = b < i ? b : b - 1;
      u[i] = static_cast<Symbol>(factor_of[ra][rb] + 1);
    }
    words.push_back(std::move(u));
  });
  Code c = make_code(n, q, std::move(words));
  return certify(std::move(c), "F5", AnticodeSpec{'m', n, 3, 3}, std::nullopt,
                 {{"construction", "f5w3"}});
}

FamilyCode moa_cw_construct(int n, int t, int l, std::uint32_t q) {
  if (t < 1) throw ParamsOutOfRange("strength must be at least 1");
  if (!(1 <= l && l <= n - 2))
    throw ParamsOutOfRange("zero-block size must satisfy 1 <= l <= n-2");
  if (n - t - l + 1 < 2)
    throw ParamsOutOfRange("parameters leave no distance margin");
  const mpz_class rz = binomial(n - 1, l);
  if (!rz.fits_ulong_p() || rz > q)
    throw ParamsInfeasible("alphabet too small for one block per subset");
  const long long r = static_cast<long long>(rz.get_ui());

  const OrthogonalArray oa = rs_oa(t, n, q);
  long long block = 1;
  for (int i = 0; i < t - 1; ++i) block *= q;

  std::vector<std::vector<int>> subsets;
  subsets.reserve(r);
  for_each_subset(n - 1, l,
                  [&](const std::vector<int>& s) { subsets.push_back(s); });

  std::vector<Word> words;
  words.reserve(r * block);
  for (long long b = 0; b < r; ++b) {
    for (long long row = b * block; row < (b + 1) * block; ++row) {
      Word u(n - 1);
      for (int c = 0; c < n - 1; ++c) u[c] = oa.rows[row][c] + 1;
      for (int z : subsets[b]) u[z] = 0;
      words.push_back(std::move(u));
    }
  }
  Code c = make_code(n - 1, q + 1, std::move(words));
  return classified_certify(std::move(c),
                            {{"construction", "moacw"},
                             {"oa_strength", std::to_string(t)},
                             {"zero_block_size", std::to_string(l)},
                             {"field", std::to_string(q)}});
}

FamilyCode moa_reduce(const Code& c, Reduction mode) {
  if (c.n < 2) throw ParamsOutOfRange("nothing left after deleting a coordinate");
  if (!c.weight) throw ParamsOutOfRange("reduction needs a constant-weight code");
  if (mode == Reduction::shorten) {
    if (*c.weight < 2) throw ParamsOutOfRange("shortening needs weight >= 2");
    if (min_distance(c) < 2)
      throw ParamsOutOfRange("shortening needs distance >= 2");
  }
  std::vector<Word> words;
  for (const Word& u : c.words) {
    const bool zero = u[0] == 0;
    if (zero != (mode == Reduction::puncture)) continue;
    words.emplace_back(u.begin() + 1, u.end());
  }
  if (words.size() < 2)
    throw TooFewWords("reduction left fewer than two words");
  Code out = make_code(c.n - 1, c.q, std::move(words));
  return classified_certify(
      std::move(out),
      {{"construction",
        mode == Reduction::puncture ? "puncture" : "shorten"}});
}

FamilyCode gs23_family(std::uint32_t q) {
  GeneralizedSteiner g = gs_construct_2_3(q);
  const int n = g.code.n;
  return certify(std::move(g.code), "F3", AnticodeSpec{'s', n, 3, 2}, 1,
                 {{"construction", "gs23"}, {"field", std::to_string(q)}});
}

}  // namespace cw
