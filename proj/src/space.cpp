#include "cw/space.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cw {

int weight(const Word& u) {
  int w = 0;
  for (Symbol s : u)
    if (s != 0) ++w;
  return w;
}

std::vector<int> support(const Word& u) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(u.size()); ++i)
    if (u[i] != 0) s.push_back(i);
  return s;
}

int hamming_distance(const Word& u, const Word& v) {
  if (u.size() != v.size())
    throw LengthMismatch("distance between words of length " +
                         std::to_string(u.size()) + " and " +
                         std::to_string(v.size()));
  int d = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) ++d;
  return d;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class space_size(int n, int w, std::uint32_t q) {
  if (w < 0 || w > n || q < 2) return 0;
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), q - 1, w);
  return binomial(n, w) * p;
}

void for_each_subset(int n, int w,
                     const std::function<void(const std::vector<int>&)>& visit) {
  if (w < 0 || w > n) return;
  if (w == 0) {
    visit({});
    return;
  }
  std::vector<int> s(w);
  for (int i = 0; i < w; ++i) s[i] = i;
  for (;;) {
    visit(s);
    // Colex successor: bump the lowest slot with headroom, reset those below.
    int i = 0;
    while (i < w) {
      const int limit = (i + 1 < w) ? s[i + 1] : n;
      if (s[i] + 1 < limit) break;
      ++i;
    }
    if (i == w) return;
    ++s[i];
    for (int j = 0; j < i; ++j) s[j] = j;
  }
}

void for_each_word(int n, int w, std::uint32_t q,
                   const std::function<void(const Word&)>& visit) {
  if (q < 2 || w < 0 || w > n) return;
  Word word(n, 0);
  for_each_subset(n, w, [&](const std::vector<int>& s) {
    std::vector<Symbol> pattern(w, 1);
    for (;;) {
      for (int i = 0; i < w; ++i) word[s[i]] = pattern[i];
      visit(word);
      // Lexicographic successor over symbols 1..q-1, last position fastest.
      int i = w - 1;
      while (i >= 0 && pattern[i] == q - 1) {
        pattern[i] = 1;
        --i;
      }
      if (i < 0) break;
      ++pattern[i];
    }
    for (int i = 0; i < w; ++i) word[s[i]] = 0;
  });
}

std::vector<Word> enumerate_space(int n, int w, std::uint32_t q) {
  std::vector<Word> out;
  for_each_word(n, w, q, [&](const Word& u) { out.push_back(u); });
  return out;
}

std::vector<Word> ball(const Word& center, std::uint32_t q, int e,
                       bool restrict_weight) {
  const int n = static_cast<int>(center.size());
  const int w = weight(center);
  std::vector<Word> out;
  out.push_back(center);
  // A word at distance exactly k is reached by one choice of k coordinates
  // plus symbols differing from center there, so no deduplication is needed.
  for (int k = 1; k <= std::min(e, n); ++k) {
    for_each_subset(n, k, [&](const std::vector<int>& s) {
      Word u = center;
      std::vector<Symbol> fill(k, 0);
      for (int i = 0; i < k; ++i)
        if (center[s[i]] == 0) fill[i] = 1;  // skip past center's symbol
      for (;;) {
        for (int i = 0; i < k; ++i) u[s[i]] = fill[i];
        if (!restrict_weight || weight(u) == w) out.push_back(u);
        int i = k - 1;
        for (;;) {
          if (i < 0) break;
          Symbol next = fill[i] + 1;
          if (next == center[s[i]]) ++next;
          if (next <= q - 1) {
            fill[i] = next;
            break;
          }
          fill[i] = center[s[i]] == 0 ? 1 : 0;
          --i;
        }
        if (i < 0) break;
      }
    });
  }
  canonicalize(out);
  return out;
}

void canonicalize(std::vector<Word>& words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
}

int min_distance(const std::vector<Word>& words) {
  if (words.size() < 2)
    throw TooFewWords("minimum distance needs at least two words, have " +
                      std::to_string(words.size()));
  int best = static_cast<int>(words[0].size());
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, hamming_distance(words[i], words[j]));
  return best;
}

int diameter(const std::vector<Word>& words) {
  if (words.empty()) throw EmptySet("diameter of an empty set");
  int best = 0;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      best = std::max(best, hamming_distance(words[i], words[j]));
  return best;
}

namespace {

std::string word_to_string(const Word& u) {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(u[i]);
  }
  return s;
}

}  // namespace

Code make_code(int n, std::uint32_t q, std::vector<Word> words) {
  if (n < 1 || q < 2)
    throw ParamsOutOfRange("code space needs n >= 1 and q >= 2");
  for (const Word& u : words) {
    if (static_cast<int>(u.size()) != n)
      throw InvariantViolation("word [" + word_to_string(u) + "] has length " +
                               std::to_string(u.size()) + ", expected " +
                               std::to_string(n));
    for (Symbol s : u)
      if (s >= q)
        throw InvariantViolation("word [" + word_to_string(u) +
                                 "] has a symbol >= q = " + std::to_string(q));
  }
  canonicalize(words);
  Code c;
  c.n = n;
  c.q = q;
  c.words = std::move(words);
  if (!c.words.empty()) {
    const int w0 = weight(c.words.front());
    bool constant = true;
    for (const Word& u : c.words)
      if (weight(u) != w0) {
        constant = false;
        break;
      }
    if (constant) c.weight = w0;
  }
  return c;
}

int min_distance(const Code& c) { return min_distance(c.words); }

int diameter(const Anticode& a) { return diameter(a.words); }

Code parse_code_text(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    throw ParseError("missing trailing newline", 1);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  std::uint32_t q = 0;
  int n = 0;
  long long count = 0;
  bool constant_weight = false;
  int w = 0;
  std::vector<Word> words;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string wtok;
      long long qv, nv;
      if (!(ls >> qv >> nv >> wtok >> count))
        throw ParseError("bad header, expected 'q n w count'", line_no);
      std::string rest;
      if (ls >> rest) throw ParseError("trailing tokens after header", line_no);
      if (qv < 2 || nv < 1 || count < 0)
        throw ParseError("header values out of range", line_no);
      q = static_cast<std::uint32_t>(qv);
      n = static_cast<int>(nv);
      if (wtok != "-") {
        try {
          w = std::stoi(wtok);
        } catch (...) {
          throw ParseError("bad weight field '" + wtok + "'", line_no);
        }
        if (w < 0 || w > n) throw ParseError("weight out of range", line_no);
        constant_weight = true;
      }
      have_header = true;
      continue;
    }
    Word u;
    long long s;
    while (ls >> s) {
      if (s < 0) throw ParseError("negative symbol", line_no);
      u.push_back(static_cast<Symbol>(s));
    }
    if (!ls.eof()) throw ParseError("non-numeric symbol", line_no);
    if (u.empty()) continue;  // blank line
    if (static_cast<int>(u.size()) != n)
      throw ParseError("word has " + std::to_string(u.size()) +
                           " symbols, expected " + std::to_string(n),
                       line_no);
    for (Symbol sym : u)
      if (sym >= q)
        throw InvariantViolation("line " + std::to_string(line_no) + ": word [" +
                                 word_to_string(u) + "] has a symbol >= q");
    if (constant_weight && weight(u) != w)
      throw InvariantViolation("line " + std::to_string(line_no) + ": word [" +
                               word_to_string(u) + "] has weight " +
                               std::to_string(weight(u)) + ", expected " +
                               std::to_string(w));
    words.push_back(std::move(u));
  }
  if (!have_header) throw ParseError("empty file", 1);
  if (static_cast<long long>(words.size()) != count)
    throw ParseError("header count " + std::to_string(count) + " but " +
                         std::to_string(words.size()) + " words",
                     line_no);
  Code c = make_code(n, q, std::move(words));
  if (constant_weight && !c.weight && c.words.empty()) c.weight = w;
  return c;
}

Code parse_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_text(buf.str());
}

std::string code_to_text(const Code& c) {
  std::string out = std::to_string(c.q) + " " + std::to_string(c.n) + " " +
                    (c.weight ? std::to_string(*c.weight) : std::string("-")) +
                    " " + std::to_string(c.words.size()) + "\n";
  for (const Word& u : c.words) out += word_to_string(u) + "\n";
  return out;
}

void write_code_file(const Code& c, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp);
    out << code_to_text(c);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cw
