#include "cw/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <utility>

#include "cw/designs.hpp"
#include "cw/errors.hpp"
#include "cw/verifier.hpp"

namespace cw {
namespace {

using Clock = std::chrono::steady_clock;

Clock::time_point deadline_from(const SearchBudget& budget) {
  return Clock::now() +
         std::chrono::duration_cast<Clock::duration>(
             std::chrono::duration<double>(budget.time_limit_seconds));
}

bool exceeds(const mpz_class& v, long long cap) {
  return v > mpz_class(static_cast<unsigned long>(std::max(0ll, cap)));
}

struct BitRow {
  std::vector<std::uint64_t> blocks;
  explicit BitRow(std::size_t bits = 0) : blocks((bits + 63) / 64, 0) {}
  void set(std::size_t i) { blocks[i >> 6] |= 1ull << (i & 63); }
  void reset(std::size_t i) { blocks[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return (blocks[i >> 6] >> (i & 63)) & 1; }
  int first() const {
    for (std::size_t k = 0; k < blocks.size(); ++k)
      if (blocks[k])
        return static_cast<int>(k * 64 + std::countr_zero(blocks[k]));
    return -1;
  }
  void operator&=(const BitRow& o) {
    for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] &= o.blocks[k];
  }
  void and_not(const BitRow& o) {
    for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] &= ~o.blocks[k];
  }
};

// Maximum clique containing vertex 0, by branch and bound with a greedy
// colouring bound (vertices processed in descending colour).
struct CliqueSearch {
  const std::vector<BitRow>& adj;
  long long max_nodes;
  Clock::time_point deadline;
  long long nodes = 0;
  bool aborted = false;
  std::vector<int> cur, best;

  explicit CliqueSearch(const std::vector<BitRow>& a, const SearchBudget& b)
      : adj(a), max_nodes(b.max_nodes), deadline(deadline_from(b)) {}

  void expand(const BitRow& candidates) {
    if (aborted) return;
    if (++nodes > max_nodes || Clock::now() > deadline) {
      aborted = true;
      return;
    }
    std::vector<int> order, bound;
    BitRow uncoloured = candidates;
    int colour = 0;
    while (uncoloured.first() >= 0) {
      ++colour;
      BitRow cls = uncoloured;
      for (int v = cls.first(); v >= 0; v = cls.first()) {
        cls.reset(v);
        uncoloured.reset(v);
        cls.and_not(adj[v]);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    BitRow rem = candidates;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<long long>(cur.size()) + bound[i] <=
          static_cast<long long>(best.size()))
        return;
      const int v = order[i];
      cur.push_back(v);
      BitRow next = rem;
      next &= adj[v];
      if (next.first() < 0) {
        if (cur.size() > best.size()) best = cur;
      } else {
        expand(next);
      }
      cur.pop_back();
      rem.reset(v);
      if (aborted) return;
    }
  }
};

// Exact cover of a universe by disjoint center "balls", scanning for the
// first uncovered element and branching on its covering centers.
struct CoverEngine {
  const std::vector<std::vector<int>>& ball;      // center -> universe idxs
  const std::vector<std::vector<int>>& cover_of;  // universe idx -> centers
  std::function<bool(int, const std::vector<int>&)> compatible;  // optional
  long long max_nodes;
  Clock::time_point deadline;
  long long nodes = 0;
  bool aborted = false;
  bool found = false;
  std::vector<char> covered;
  std::vector<int> chosen;

  CoverEngine(const std::vector<std::vector<int>>& b,
              const std::vector<std::vector<int>>& c, std::size_t universe,
              const SearchBudget& budget)
      : ball(b),
        cover_of(c),
        max_nodes(budget.max_nodes),
        deadline(deadline_from(budget)),
        covered(universe, 0) {}

  bool overlaps(int c) const {
    for (int i : ball[c])
      if (covered[i]) return true;
    return false;
  }
  void place(int c) {
    chosen.push_back(c);
    for (int i : ball[c]) covered[i] = 1;
  }
  void unplace(int c) {
    chosen.pop_back();
    for (int i : ball[c]) covered[i] = 0;
  }

  void rec(std::size_t scan_from) {
    if (aborted || found) return;
    if (++nodes > max_nodes || Clock::now() > deadline) {
      aborted = true;
      return;
    }
    std::size_t x = scan_from;
    while (x < covered.size() && covered[x]) ++x;
    if (x == covered.size()) {
      found = true;
      return;
    }
    for (int c : cover_of[x]) {
      if (overlaps(c)) continue;
      if (compatible && !compatible(c, chosen)) continue;
      place(c);
      rec(x);
      if (found) return;
      unplace(c);
    }
  }
};

Word first_word(int n, int w) {
  Word u(n, 0);
  for (int i = 0; i < w; ++i) u[i] = 1;
  return u;
}

// Shared branch-and-bound core: maximum set of words whose pairwise
// distances satisfy the mode (>= thr for codes, <= thr for anticodes).
SearchResult max_set_search(int n, int thr, int w, std::uint32_t q,
                            bool need_at_least, const SearchBudget& budget) {
  SearchResult res;
  const mpz_class total = space_size(n, w, q);
  if (exceeds(total, budget.max_space)) {
    res.note = "ambient space larger than the enumeration budget";
    res.value = 0;
    return res;
  }
  const std::vector<Word> words = enumerate_space(n, w, q);
  const std::size_t N = words.size();
  if (N > 30000) {
    res.note = "conflict graph would exceed the memory budget";
    res.value = 0;
    return res;
  }
  std::vector<BitRow> adj(N, BitRow(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      const int dist = hamming_distance(words[i], words[j]);
      const bool ok = need_at_least ? dist >= thr : dist <= thr;
      if (ok) {
        adj[i].set(j);
        adj[j].set(i);
      }
    }

  CliqueSearch cs(adj, budget);
  cs.cur = {0};  // the symmetry group is transitive: fix the first word
  cs.best = {0};
  cs.expand(adj[0]);

  res.nodes = cs.nodes;
  res.value = static_cast<unsigned long>(cs.best.size());
  for (int v : cs.best) res.witness.push_back(words[v]);
  std::sort(res.witness.begin(), res.witness.end());
  if (res.witness.size() >= 2) {
    const int check = need_at_least ? min_distance(res.witness)
                                    : diameter(res.witness);
    const bool ok = need_at_least ? check >= thr : check <= thr;
    if (!ok) throw InvariantViolation("search produced an invalid witness");
  }
  if (cs.aborted) {
    res.status = SearchStatus::inconclusive;
    res.note = "node or time budget exhausted; value is a lower bound";
  } else {
    res.status = SearchStatus::exact;
    res.proof_of_optimality = true;
  }
  return res;
}

void fill_full_space(SearchResult& res, int n, int w, std::uint32_t q,
                     const SearchBudget& budget) {
  res.status = SearchStatus::exact;
  res.proof_of_optimality = true;
  res.value = space_size(n, w, q);
  if (!exceeds(res.value, budget.max_space))
    res.witness = enumerate_space(n, w, q);
  else
    res.note = "witness omitted: space larger than the enumeration budget";
}

}  // namespace

SearchResult max_code_search(int n, int d, int w, std::uint32_t q,
                             const SearchBudget& budget) {
  if (d < 0) throw ParamsOutOfRange("distance must be nonnegative");
  SearchResult res;
  if (d <= 1) {
    fill_full_space(res, n, w, q, budget);
    return res;
  }
  if (d > std::min(2 * w, n)) {
    res.status = SearchStatus::exact;
    res.proof_of_optimality = true;
    res.value = 1;
    res.witness = {first_word(n, w)};
    res.note = "no two words of the space are this far apart";
    return res;
  }
  return max_set_search(n, d, w, q, true, budget);
}

SearchResult max_anticode_search(int n, int D, int w, std::uint32_t q,
                                 const SearchBudget& budget) {
  if (D < 0) throw ParamsOutOfRange("diameter must be nonnegative");
  SearchResult res;
  if (D >= std::min(2 * w, n)) {
    fill_full_space(res, n, w, q, budget);
    return res;
  }
  if (D == 0) {
    res.status = SearchStatus::exact;
    res.proof_of_optimality = true;
    res.value = 1;
    res.witness = {first_word(n, w)};
    return res;
  }
  return max_set_search(n, D, w, q, false, budget);
}

ExistenceResult perfect_code_search(int n, int w, std::uint32_t q, int e,
                                    const SearchBudget& budget) {
  if (e < 0) throw ParamsOutOfRange("radius must be nonnegative");
  if (!(1 <= w && w <= n))
    throw ParamsOutOfRange("weight must satisfy 1 <= w <= n");
  ExistenceResult res;
  if (e == 0) {
    res.status = SearchStatus::exact;
    res.exists = true;
    const mpz_class total = space_size(n, w, q);
    if (!exceeds(total, budget.max_space))
      res.witness = enumerate_space(n, w, q);
    else
      res.note = "witness omitted: space larger than the enumeration budget";
    return res;
  }

  if (e == 1) {
    // Distance-1 balls never leave their support, so a radius-1 perfect code
    // is exactly one perfect cover of the per-support component, replicated.
    const std::uint32_t qq = q - 1;  // nonzero symbols per support coordinate
    mpz_class component;
    mpz_ui_pow_ui(component.get_mpz_t(), qq, w);
    const mpz_class ball_size = 1 + mpz_class(w) * (qq - 1);
    if (component % ball_size != 0) {
      res.status = SearchStatus::exact;
      res.exists = false;
      res.note = "ball size " + ball_size.get_str() +
                 " does not divide the per-support component size " +
                 component.get_str();
      return res;
    }
    if (exceeds(component, budget.max_space)) {
      res.note = "per-support component larger than the enumeration budget";
      return res;
    }
    std::vector<Word> pats;  // length-w patterns over symbols 1..q-1
    {
      Word cur(w, 1);
      while (true) {
        pats.push_back(cur);
        int i = w - 1;
        while (i >= 0 && cur[i] == qq) cur[i--] = 1;
        if (i < 0) break;
        ++cur[i];
      }
    }
    const std::size_t M = pats.size();
    std::vector<std::vector<int>> balls(M), cover_of(M);
    for (std::size_t i = 0; i < M; ++i) {
      balls[i].push_back(static_cast<int>(i));
      for (std::size_t j = 0; j < M; ++j)
        if (i != j && hamming_distance(pats[i], pats[j]) == 1)
          balls[i].push_back(static_cast<int>(j));
      std::sort(balls[i].begin(), balls[i].end());
    }
    for (std::size_t c = 0; c < M; ++c)
      for (int x : balls[c]) cover_of[x].push_back(static_cast<int>(c));

    CoverEngine eng(balls, cover_of, M, budget);
    eng.place(0);  // translations act transitively: fix the all-ones pattern
    eng.rec(0);
    res.nodes = eng.nodes;
    if (eng.aborted) {
      res.note = "node or time budget exhausted";
      return res;
    }
    res.status = SearchStatus::exact;
    res.exists = eng.found;
    if (!eng.found) {
      res.note = "per-support cover search exhausted without a solution";
      return res;
    }
    std::vector<char> hits(M, 0);
    for (int c : eng.chosen)
      for (int x : balls[c]) {
        if (hits[x]) throw InvariantViolation("component cover overlaps");
        hits[x] = 1;
      }
    for (char h : hits)
      if (!h) throw InvariantViolation("component cover misses a word");

    const mpz_class total = space_size(n, w, q);
    const mpz_class code_size =
        binomial(n, w) * (component / ball_size);
    if (!exceeds(code_size, budget.max_space)) {
      for_each_subset(n, w, [&](const std::vector<int>& s) {
        for (int c : eng.chosen) {
          Word u(n, 0);
          for (int j = 0; j < w; ++j) u[s[j]] = pats[c][j];
          res.witness.push_back(std::move(u));
        }
      });
      std::sort(res.witness.begin(), res.witness.end());
      if (total <= 50000) {
        Code full = make_code(n, q, res.witness);
        if (!perfect_check(full, 1).pass())
          throw InvariantViolation("replicated witness failed verification");
      } else {
        res.note = "verified per component; full-space scan skipped";
      }
    } else {
      res.note = "witness omitted: code larger than the enumeration budget";
    }
    return res;
  }

  // Radius >= 2: balls cross supports, so cover the whole space at once.
  const mpz_class total = space_size(n, w, q);
  if (exceeds(total, budget.max_space)) {
    res.note = "ambient space larger than the enumeration budget";
    return res;
  }
  const std::vector<Word> words = enumerate_space(n, w, q);
  const std::size_t N = words.size();
  std::vector<std::vector<int>> balls(N), cover_of(N);
  for (std::size_t i = 0; i < N; ++i) {
    balls[i].push_back(static_cast<int>(i));
    for (std::size_t j = 0; j < N; ++j)
      if (i != j && hamming_distance(words[i], words[j]) <= e)
        balls[i].push_back(static_cast<int>(j));
    std::sort(balls[i].begin(), balls[i].end());
  }
  for (std::size_t c = 0; c < N; ++c)
    for (int x : balls[c]) cover_of[x].push_back(static_cast<int>(c));

  CoverEngine eng(balls, cover_of, N, budget);
  eng.place(0);  // transitivity: some perfect code has the first word as center
  eng.rec(0);
  res.nodes = eng.nodes;
  if (eng.aborted) {
    res.note = "node or time budget exhausted";
    return res;
  }
  res.status = SearchStatus::exact;
  res.exists = eng.found;
  if (eng.found) {
    for (int c : eng.chosen) res.witness.push_back(words[c]);
    std::sort(res.witness.begin(), res.witness.end());
    Code full = make_code(n, q, res.witness);
    if (!perfect_check(full, e).pass())
      throw InvariantViolation("cover witness failed verification");
  } else {
    res.note = "cover search exhausted without a solution";
  }
  return res;
}

ExistenceResult gs_search(int t, int w, int n, std::uint32_t q,
                          const SearchBudget& budget) {
  if (!(1 <= t && t <= w && w <= n))
    throw ParamsOutOfRange("need 1 <= t <= w <= n");
  ExistenceResult res;
  if (!gs_size_integral(t, w, n, q)) {
    res.status = SearchStatus::exact;
    res.exists = false;
    res.note = "counting obstruction: required size " +
               gs_size(t, w, n, q).get_str() + " is not an integer";
    return res;
  }
  const mpz_class n_univ = space_size(n, t, q);
  const mpz_class n_cand = space_size(n, w, q);
  if (exceeds(n_univ, budget.max_space) || exceeds(n_cand, budget.max_space)) {
    res.note = "enumeration budget exceeded";
    return res;
  }
  const std::vector<Word> univ = enumerate_space(n, t, q);
  const std::vector<Word> cand = enumerate_space(n, w, q);
  std::map<Word, int> univ_index;
  for (std::size_t i = 0; i < univ.size(); ++i)
    univ_index[univ[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> balls(cand.size()),
      cover_of(univ.size());
  for (std::size_t c = 0; c < cand.size(); ++c) {
    const std::vector<int> supp = support(cand[c]);
    for_each_subset(w, t, [&](const std::vector<int>& pick) {
      Word x(n, 0);
      for (int j : pick) x[supp[j]] = cand[c][supp[j]];
      balls[c].push_back(univ_index.at(x));
    });
    std::sort(balls[c].begin(), balls[c].end());
  }
  for (std::size_t c = 0; c < cand.size(); ++c)
    for (int x : balls[c]) cover_of[x].push_back(static_cast<int>(c));

  const int dmin = 2 * (w - t) + 1;
  CoverEngine eng(balls, cover_of, univ.size(), budget);
  eng.compatible = [&](int c, const std::vector<int>& chosen) {
    for (int o : chosen)
      if (hamming_distance(cand[c], cand[o]) < dmin) return false;
    return true;
  };
  eng.place(0);  // transitivity: fix the first weight-w word
  eng.rec(0);
  res.nodes = eng.nodes;
  if (eng.aborted) {
    res.note = "node or time budget exhausted";
    return res;
  }
  res.status = SearchStatus::exact;
  res.exists = eng.found;
  if (eng.found) {
    for (int c : eng.chosen) res.witness.push_back(cand[c]);
    std::sort(res.witness.begin(), res.witness.end());
    if (!gs_verify(make_code(n, q, res.witness), t).pass())
      throw InvariantViolation("covering witness failed verification");
  } else {
    res.note = "cover search exhausted without a solution";
  }
  return res;
}

}  // namespace cw
