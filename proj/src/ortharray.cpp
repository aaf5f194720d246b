#include "cw/ortharray.hpp"

#include <algorithm>
#include <cassert>

namespace cw {
namespace {

// lambda * q^t == rows is checked by the caller; counts fit in long long.
std::uint64_t pow_u64_checked(std::uint32_t q, int t, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (int i = 0; i < t; ++i) {
    if (v > limit / q) return 0;  // would exceed limit
    v *= q;
  }
  return v;
}

}  // namespace

long long oa_verify(const std::vector<Word>& rows, int t, std::uint32_t q) {
  if (t < 1) throw ParamsOutOfRange("strength must be at least 1");
  if (q < 2) throw ParamsOutOfRange("alphabet must have at least 2 symbols");
  if (rows.empty()) throw EmptySet("orthogonal array with no rows");
  const int n = static_cast<int>(rows[0].size());
  if (t > n)
    throw ParamsOutOfRange("strength " + std::to_string(t) + " exceeds " +
                           std::to_string(n) + " columns");
  for (const Word& r : rows) {
    if (static_cast<int>(r.size()) != n)
      throw LengthMismatch("ragged rows in orthogonal array");
    for (Symbol s : r)
      if (s >= q) throw InvariantViolation("row symbol >= q");
  }
  const std::uint64_t cells = pow_u64_checked(q, t, rows.size());
  if (cells == 0 || rows.size() % cells != 0)
    throw NotOA("row count " + std::to_string(rows.size()) +
                    " is not a multiple of q^t",
                {}, {});
  const long long lambda = static_cast<long long>(rows.size() / cells);
  std::vector<long long> counts(cells);
  bool bad = false;
  std::vector<int> bad_cols;
  std::vector<unsigned> bad_tuple;
  for_each_subset(n, t, [&](const std::vector<int>& cols) {
    if (bad) return;
    std::fill(counts.begin(), counts.end(), 0);
    for (const Word& r : rows) {
      std::uint64_t idx = 0;
      for (int i = t - 1; i >= 0; --i) idx = idx * q + r[cols[i]];
      ++counts[idx];
    }
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
      if (counts[idx] != lambda) {
        bad = true;
        bad_cols = cols;
        std::uint64_t v = idx;
        for (int i = 0; i < t; ++i) {
          bad_tuple.push_back(static_cast<unsigned>(v % q));
          v /= q;
        }
        return;
      }
    }
  });
  if (bad) {
    std::string msg = "tuple count differs from lambda at columns";
    for (int c : bad_cols) msg += " " + std::to_string(c);
    throw NotOA(msg, bad_cols, bad_tuple);
  }
  return lambda;
}

OrthogonalArray rs_oa(int t, int n, std::uint32_t q) {
  if (t < 1 || n < 1) throw ParamsOutOfRange("rs_oa needs t >= 1, n >= 1");
  if (t > n)
    throw ParamsOutOfRange("strength " + std::to_string(t) +
                           " exceeds column count " + std::to_string(n));
  OrthogonalArray oa;
  oa.n = n;
  oa.q = q;
  oa.strength = t;
  oa.index = 1;
  if (t == 1) {
    // Constant rows work at any length.
    Field f(q);  // still require a prime power, for uniform preconditions
    for (std::uint32_t c = 0; c < q; ++c) oa.rows.emplace_back(n, c);
    return oa;
  }
  if (static_cast<long long>(n) > static_cast<long long>(q) + 1)
    throw ParamsInfeasible("rs_oa needs n <= q+1 for t >= 2, got n = " +
                           std::to_string(n) + ", q = " + std::to_string(q));
  Field f(q);
  const int finite = std::min<long long>(n, q);
  std::uint64_t total = 1;
  for (int i = 0; i < t; ++i) total *= q;
  oa.rows.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) {
    // Coefficient vector (a_0 .. a_{t-1}), constant term slowest.
    std::vector<std::uint32_t> a(t);
    std::uint64_t v = r;
    for (int i = t - 1; i >= 0; --i) {
      a[i] = static_cast<std::uint32_t>(v % q);
      v /= q;
    }
    Word row(n);
    for (int j = 0; j < finite; ++j) {
      const std::uint32_t x = static_cast<std::uint32_t>(j);
      std::uint32_t acc = 0;
      for (int i = t - 1; i >= 0; --i) acc = f.add(f.mul(acc, x), a[i]);
      row[j] = acc;
    }
    if (n == static_cast<int>(q) + 1) row[n - 1] = a[t - 1];
    oa.rows.push_back(std::move(row));
  }
  // The block construction downstream needs the last column constant on
  // blocks of q^(t-1) consecutive rows; a stable sort on it delivers that
  // for every point order.
  std::stable_sort(oa.rows.begin(), oa.rows.end(),
                   [n](const Word& x, const Word& y) {
                     return x[n - 1] < y[n - 1];
                   });
  return oa;
}

ParityCheck mds_parity_check(int n, int w, std::uint32_t q) {
  if (w < 2 || w > n)
    throw ParamsOutOfRange("mds parity check needs 2 <= w <= n");
  if (static_cast<long long>(n) > static_cast<long long>(q) + 1)
    throw ParamsInfeasible("mds parity check needs n <= q+1, got n = " +
                           std::to_string(n) + ", q = " + std::to_string(q));
  Field f(q);
  ParityCheck h;
  h.n = n;
  h.w = w;
  h.q = q;
  h.rows.assign(w - 1, std::vector<std::uint32_t>(n, 0));
  const int finite = std::min<long long>(n, q);
  for (int j = 0; j < finite; ++j)
    for (int i = 0; i < w - 1; ++i)
      h.rows[i][j] = f.pow(static_cast<std::uint32_t>(j), i);
  if (n == static_cast<int>(q) + 1) h.rows[w - 2][n - 1] = 1;
  return h;
}

namespace {

// Reduced row echelon form over GF(q); returns pivot column per row.
std::vector<int> rref(std::vector<std::vector<std::uint32_t>>& m,
                      const Field& f) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    const std::uint32_t s = f.inv(m[r][c]);
    for (int j = 0; j < cols; ++j) m[r][j] = f.mul(m[r][j], s);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint32_t factor = m[i][c];
      for (int j = 0; j < cols; ++j)
        m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Code mds_min_weight_codewords(const ParityCheck& h) {
  Field f(h.q);
  std::vector<Word> words;
  for_each_subset(h.n, h.w, [&](const std::vector<int>& s) {
    std::vector<std::vector<std::uint32_t>> sub(h.w - 1,
                                                std::vector<std::uint32_t>(h.w));
    for (int i = 0; i < h.w - 1; ++i)
      for (int j = 0; j < h.w; ++j) sub[i][j] = h.rows[i][s[j]];
    const std::vector<int> pivots = rref(sub, f);
    if (static_cast<int>(pivots.size()) != h.w - 1)
      throw KernelDimensionError(
          "column submatrix has kernel dimension != 1; parity check is not MDS");
    // One free column; kernel vector with that coordinate set to 1.
    std::vector<std::uint32_t> k(h.w, 0);
    int free_col = 0;
    for (int c = 0, pi = 0; c < h.w; ++c) {
      if (pi < static_cast<int>(pivots.size()) && pivots[pi] == c)
        ++pi;
      else
        free_col = c;
    }
    k[free_col] = 1;
    for (int i = 0; i < h.w - 1; ++i)
      k[pivots[i]] = f.neg(sub[i][free_col]);
    for (std::uint32_t v : k)
      if (v == 0)
        throw KernelDimensionError(
            "kernel vector has a zero coordinate; parity check is not MDS");
    for (std::uint32_t c = 1; c < h.q; ++c) {
      Word u(h.n, 0);
      for (int j = 0; j < h.w; ++j) u[s[j]] = f.mul(c, k[j]);
      words.push_back(std::move(u));
    }
  });
  return make_code(h.n, h.q, std::move(words));
}

std::vector<Word> linear_code_words(const ParityCheck& h) {
  Field f(h.q);
  std::vector<std::vector<std::uint32_t>> m = h.rows;
  const std::vector<int> pivots = rref(m, f);
  std::vector<int> free_cols;
  for (int c = 0, pi = 0; c < h.n; ++c) {
    if (pi < static_cast<int>(pivots.size()) && pivots[pi] == c)
      ++pi;
    else
      free_cols.push_back(c);
  }
  const int k = static_cast<int>(free_cols.size());
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > (1ull << 20) / h.q)
      throw ParamsOutOfRange("linear code too large to enumerate");
    total *= h.q;
  }
  std::vector<Word> words;
  words.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) {
    std::uint64_t v = r;
    Word u(h.n, 0);
    for (int i = 0; i < k; ++i) {
      u[free_cols[i]] = static_cast<Symbol>(v % h.q);
      v /= h.q;
    }
    for (std::size_t row = 0; row < pivots.size(); ++row) {
      std::uint32_t acc = 0;
      for (int i = 0; i < k; ++i)
        acc = f.add(acc, f.mul(m[row][free_cols[i]], u[free_cols[i]]));
      u[pivots[row]] = f.neg(acc);
    }
    words.push_back(std::move(u));
  }
  canonicalize(words);
  return words;
}

FeasibilityVerdict oa_feasible(int t, int n, std::uint32_t q) {
  if (t < 1 || n < t || q < 2)
    throw ParamsOutOfRange("oa_feasible needs 1 <= t <= n and q >= 2");
  const long long N = n, Q = q, T = t;
  auto yes = [](std::string rule, std::string detail) {
    return FeasibilityVerdict{Feasibility::feasible, std::move(rule),
                              std::move(detail)};
  };
  auto no = [](std::string rule, std::string detail) {
    return FeasibilityVerdict{Feasibility::infeasible, std::move(rule),
                              std::move(detail)};
  };
  if (t == 1) return yes("constant-rows-construction", "strength 1, any n");
  if (t == n) return yes("full-space-construction", "t = n");
  if (t == n - 1) return yes("zero-sum-construction", "t = n-1");
  if (t == 2 && N > Q + 1)
    return no("pairwise-balance-bound",
              "n <= q+1 fails: " + std::to_string(N) + " > " +
                  std::to_string(Q + 1));
  if (t >= 3 && Q >= T) {
    if (q % 2 == 0 && N > Q + T - 1)
      return no("even-alphabet-length-bound",
                "n <= q+t-1 fails: " + std::to_string(N) + " > " +
                    std::to_string(Q + T - 1));
    if (q % 2 == 1 && N > Q + T - 2)
      return no("odd-alphabet-length-bound",
                "n <= q+t-2 fails: " + std::to_string(N) + " > " +
                    std::to_string(Q + T - 2));
  }
  if (Q <= T && N > T + 1)
    return no("small-alphabet-length-bound",
              "q <= t forces n <= t+1: " + std::to_string(N) + " > " +
                  std::to_string(T + 1));
  if (is_prime_power(q) && 2 <= T && T <= Q - 1) {
    const bool extended = q % 2 == 0 && (T == 3 || T == Q - 1);
    if (N <= Q + 1)
      return yes("polynomial-evaluation-construction",
                 "n <= q+1: " + std::to_string(N) + " <= " +
                     std::to_string(Q + 1));
    if (extended && N <= Q + 2)
      return yes("even-alphabet-extended-construction",
                 "q even, t in {3, q-1}, n <= q+2");
    return no("prime-power-alphabet-classification",
              "prime power q, 2 <= t <= q-1: no OA beyond the classified "
              "lengths");
  }
  return FeasibilityVerdict{Feasibility::unknown, "no-deciding-rule",
                            "outside every closed bound and construction"};
}

}  // namespace cw
