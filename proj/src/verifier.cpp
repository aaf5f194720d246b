#include "cw/verifier.hpp"

#include <algorithm>
#include <map>

#include "cw/designs.hpp"
#include "cw/ortharray.hpp"

namespace cw {

VerificationReport support_regularity(const Code& c, const mpz_class& expected,
                                      std::optional<int> oa_strength) {
  VerificationReport rep;
  if (!c.weight) {
    rep.add("constant-weight", "single-weight-codebook", "yes", "no", false);
    return rep;
  }
  const int w = *c.weight;
  std::map<std::vector<int>, std::vector<const Word*>> by_support;
  for (const Word& u : c.words) by_support[support(u)].push_back(&u);

  long long deviating = 0;
  for_each_subset(c.n, w, [&](const std::vector<int>& s) {
    const auto it = by_support.find(s);
    const long long have = it == by_support.end()
                               ? 0
                               : static_cast<long long>(it->second.size());
    if (mpz_class(static_cast<long>(have)) != expected) ++deviating;
  });
  rep.add("per-support-count", "equal-on-every-support", expected.get_str(),
          deviating == 0 ? expected.get_str()
                         : "deviating-supports=" + std::to_string(deviating),
          deviating == 0);

  if (oa_strength && *oa_strength >= 1) {
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), c.q - 1, *oa_strength);
    mpq_class lambda_expected(expected, denom);
    lambda_expected.canonicalize();
    long long bad = 0;
    long long lambda_seen = -1;
    bool lambda_uniform = true;
    for (const auto& [supp, group] : by_support) {
      std::vector<Word> projected;
      projected.reserve(group.size());
      for (const Word* u : group) {
        Word row;
        row.reserve(w);
        for (int coord : supp) row.push_back((*u)[coord] - 1);
        projected.push_back(std::move(row));
      }
      try {
        const long long lambda = oa_verify(projected, *oa_strength, c.q - 1);
        if (lambda_seen < 0) lambda_seen = lambda;
        if (lambda != lambda_seen) lambda_uniform = false;
      } catch (const NotOA&) {
        ++bad;
      }
    }
    const bool ok = bad == 0 && lambda_uniform && lambda_seen >= 0 &&
                    lambda_expected == mpq_class(static_cast<long>(lambda_seen));
    rep.add("support-oa-strength", "nonzero-projection-index",
            lambda_expected.get_str(),
            bad ? "not-an-oa-on-" + std::to_string(bad) + "-supports"
                : std::to_string(lambda_seen),
            ok);
  }
  return rep;
}

VerificationReport diameter_perfect_check(const Code& c, const Anticode& a) {
  if (c.n != a.n || c.q != a.q)
    throw ShapeMismatch("code and anticode live in different spaces");
  if (!c.weight || *c.weight != a.weight)
    throw ShapeMismatch("code and anticode weights differ");
  const int d = min_distance(c);
  const int diam = a.diam ? *a.diam : diameter(a);
  if (d <= diam)
    throw PreconditionViolated(
        "minimum distance " + std::to_string(d) +
        " does not exceed the anticode diameter " + std::to_string(diam));

  VerificationReport rep;
  const mpz_class space = space_size(c.n, *c.weight, c.q);
  const mpz_class product =
      mpz_class(static_cast<unsigned long>(c.words.size())) *
      mpz_class(static_cast<unsigned long>(a.words.size()));
  rep.add("code-anticode-product", "size-product-fills-space",
          space.get_str(), product.get_str(), product == space);
  rep.add("distance-diameter-gap", "min-distance-equals-diameter-plus-1",
          std::to_string(diam + 1), std::to_string(d), d == diam + 1);
  return rep;
}

VerificationReport perfect_check(const Code& c, int e) {
  VerificationReport rep;
  if (!c.weight) {
    rep.add("constant-weight", "single-weight-codebook", "yes", "no", false);
    return rep;
  }
  if (e < 0) throw ParamsOutOfRange("radius must be nonnegative");
  long long bad = 0;
  for_each_word(c.n, *c.weight, c.q, [&](const Word& x) {
    long long hits = 0;
    for (const Word& u : c.words)
      if (hamming_distance(u, x) <= e) ++hits;
    if (hits != 1) ++bad;
  });
  rep.add("exact-coverage", "one-codeword-ball-per-word", "0",
          std::to_string(bad), bad == 0);

  const Anticode b = ball_anticode(c.n, *c.weight, c.q, e);
  const mpz_class space = space_size(c.n, *c.weight, c.q);
  const mpz_class product =
      mpz_class(static_cast<unsigned long>(c.words.size())) *
      mpz_class(static_cast<unsigned long>(b.words.size()));
  rep.add("sphere-packing-equality", "balls-partition-space", space.get_str(),
          product.get_str(), product == space);
  return rep;
}

std::vector<FamilyMatch> classify_family(int n, int d, int w, std::uint32_t q,
                                         const mpz_class& size) {
  if (!(1 <= w && w <= n) || q < 2 || d < 1)
    throw ParamsOutOfRange("classification needs 1 <= w <= n, q >= 2, d >= 1");
  std::vector<FamilyMatch> out;
  const mpz_class space = space_size(n, w, q);

  if (w == n)
    out.push_back({"F1", "full-weight-hamming", {'h', n, w, d - 1}});

  const std::uint32_t qm1 = q - 1;
  const bool q_is_2k_plus_1 = q >= 3 && (qm1 & (qm1 - 1)) == 0;
  if (w == n - 1 && q_is_2k_plus_1 && d % 2 == 1) {
    const int e = (d - 1) / 2;
    const Anticode b = ball_anticode(n, w, q, e);
    if (size * static_cast<unsigned long>(b.words.size()) == space)
      out.push_back({"F2", "perfect-code", {'b', n, w, e}});
  }

  if (d % 2 == 1) {
    const int t = w - (d - 1) / 2;
    if (1 <= t && t <= w) {
      const mpq_class expected = gs_size(t, w, n, q);
      if (expected.get_den() == 1 && mpq_class(size) == expected)
        out.push_back({"F3", "generalized-steiner", {'s', n, w, t}});
    }
  }

  if (d == w && size == binomial(n, w) * qm1)
    out.push_back({"F4", "mds-constant-weight", {'m', n, w, w - 1}});

  if (d == w + 1 && size == binomial(n, w))
    out.push_back({"F5", "one-per-support", {'m', n, w, w}});

  if (d < w) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), qm1, w - d + 1);
    if (size == binomial(n, w) * pw)
      out.push_back({"F6", "moa-constant-weight", {'m', n, w, d - 1}});
  }

  if (out.empty())
    throw Unclassifiable("no family matches n=" + std::to_string(n) +
                         " d=" + std::to_string(d) + " w=" + std::to_string(w) +
                         " q=" + std::to_string(q) + " size=" + size.get_str());
  return out;
}

}  // namespace cw
