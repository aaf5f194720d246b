#include "cw/anticodes.hpp"

#include <algorithm>

namespace cw {
namespace {

Anticode finish(int n, std::uint32_t q, std::vector<Word> words) {
  Anticode a;
  a.n = n;
  a.q = q;
  a.weight = words.empty() ? 0 : weight(words.front());
  canonicalize(words);
  a.words = std::move(words);
  a.diam = diameter(a.words);
  return a;
}

}  // namespace

Anticode anticode_binary(int n, int w, int t, bool complement) {
  if (!(0 <= t && t <= w && 2 * w <= n))
    throw ParamsOutOfRange("binary anticode needs 0 <= t <= w <= n/2");
  std::vector<Word> words;
  for_each_subset(n - t, w - t, [&](const std::vector<int>& s) {
    Word u(n, 0);
    for (int i = 0; i < t; ++i) u[i] = 1;
    for (int c : s) u[t + c] = 1;
    if (complement)
      for (int i = 0; i < n; ++i) u[i] = 1 - u[i];
    words.push_back(std::move(u));
  });
  return finish(n, 2, std::move(words));
}

Anticode anticode_s(int n, int w, int t, std::uint32_t q) {
  if (!(0 <= t && t <= w && w <= n) || q < 2)
    throw ParamsOutOfRange("anticode_s needs 0 <= t <= w <= n and q >= 2");
  std::vector<Word> words;
  for_each_word(n - t, w - t, q, [&](const Word& suffix) {
    Word u(n, 0);
    for (int i = 0; i < t; ++i) u[i] = 1;
    std::copy(suffix.begin(), suffix.end(), u.begin() + t);
    words.push_back(std::move(u));
  });
  return finish(n, q, std::move(words));
}

Anticode anticode_m(int n, int w, int delta, std::uint32_t q) {
  if (!(1 <= delta && delta <= w && w <= n) || q < 2)
    throw ParamsOutOfRange("anticode_m needs 1 <= delta <= w <= n and q >= 2");
  std::vector<Word> words;
  Word head(delta, 1);
  for (;;) {
    Word u(n, 0);
    std::copy(head.begin(), head.end(), u.begin());
    for (int i = delta; i < w; ++i) u[i] = 1;
    words.push_back(std::move(u));
    int i = delta - 1;
    while (i >= 0 && head[i] == q - 1) {
      head[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++head[i];
  }
  return finish(n, q, std::move(words));
}

Anticode ball_anticode(int n, int w, std::uint32_t q, int e) {
  if (!(0 <= w && w <= n) || q < 2 || e < 0)
    throw ParamsOutOfRange("ball anticode needs 0 <= w <= n, q >= 2, e >= 0");
  Word center(n, 0);
  for (int i = 0; i < w; ++i) center[i] = 1;
  Anticode a;
  a.n = n;
  a.q = q;
  a.weight = w;
  a.words = ball(center, q, e, true);
  a.diam = diameter(a.words);
  return a;
}

Anticode make_anticode(const AnticodeSpec& spec, std::uint32_t q) {
  switch (spec.kind) {
    case 's':
      return anticode_s(spec.n, spec.w, spec.p, q);
    case 'm':
      return anticode_m(spec.n, spec.w, spec.p, q);
    case 'b':
      return ball_anticode(spec.n, spec.w, q, spec.p);
    case 'a':
      return anticode_binary(spec.n, spec.w, spec.p, false);
    case 'c':
      return anticode_binary(spec.n, spec.w, spec.p, true);
    default:
      throw ParamsOutOfRange(std::string("anticode kind '") + spec.kind +
                             "' is not constructible");
  }
}

AnticodeSpec parse_anticode_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("anticode spec needs 'kind:n,w,param'", 1);
  const std::string kind = text.substr(0, colon);
  char k;
  if (kind == "s" || kind == "m" || kind == "a" || kind == "c")
    k = kind[0];
  else if (kind == "ball")
    k = 'b';
  else
    throw ParseError("unknown anticode kind '" + kind + "'", 1);
  AnticodeSpec spec;
  spec.kind = k;
  int fields[3];
  std::size_t pos = colon + 1;
  for (int i = 0; i < 3; ++i) {
    std::size_t next = text.find(',', pos);
    if (i < 2 && next == std::string::npos)
      throw ParseError("anticode spec needs three comma-separated numbers", 1);
    if (i == 2) next = text.size();
    try {
      std::size_t used = 0;
      const std::string tok = text.substr(pos, next - pos);
      fields[i] = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (...) {
      throw ParseError("bad number in anticode spec '" + text + "'", 1);
    }
    pos = next + 1;
  }
  spec.n = fields[0];
  spec.w = fields[1];
  spec.p = fields[2];
  return spec;
}

std::string to_string(const AnticodeSpec& spec) {
  const std::string kind = spec.kind == 'b' ? "ball" : std::string(1, spec.kind);
  return kind + ":" + std::to_string(spec.n) + "," + std::to_string(spec.w) +
         "," + std::to_string(spec.p);
}

VerificationReport anticode_verify(const Anticode& a,
                                   const mpz_class& expected_size,
                                   int expected_diameter) {
  VerificationReport rep;
  const mpz_class measured_size = static_cast<long>(a.words.size());
  rep.add("anticode-size", "word-count", expected_size.get_str(),
          measured_size.get_str(), measured_size == expected_size);
  const int measured_diam = diameter(a.words);
  rep.add("anticode-diameter", "max-pairwise-distance",
          std::to_string(expected_diameter), std::to_string(measured_diam),
          measured_diam == expected_diameter);
  return rep;
}

}  // namespace cw
