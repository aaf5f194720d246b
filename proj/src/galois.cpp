#include "cw/galois.hpp"

#include <cassert>

namespace cw {
namespace {

// Digits of a in base p, least significant first, padded to len.
void to_digits(std::uint32_t a, std::uint32_t p, int len, std::uint32_t* out) {
  for (int i = 0; i < len; ++i) {
    out[i] = a % p;
    a /= p;
  }
}

std::uint32_t from_digits(const std::uint32_t* d, std::uint32_t p, int len) {
  std::uint32_t v = 0;
  for (int i = len - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

// Remainder of a(x) mod g(x) over GF(p), in place; returns degree bound of a.
void poly_mod(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& g,
              std::uint32_t p) {
  const int dg = static_cast<int>(g.size()) - 1;  // g monic of degree dg
  for (int i = static_cast<int>(a.size()) - 1; i >= dg; --i) {
    const std::uint32_t c = a[i];
    if (c == 0) continue;
    a[i] = 0;
    for (int j = 0; j < dg; ++j) {
      a[i - dg + j] = (a[i - dg + j] + (p - c) * g[j] % p) % p;
    }
  }
}

bool is_zero(const std::vector<std::uint32_t>& a) {
  for (std::uint32_t c : a)
    if (c != 0) return false;
  return true;
}

// f monic of degree m over GF(p); trial division by every monic polynomial of
// degree 1..m/2.
bool poly_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const int m = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    std::vector<std::uint32_t> g(d + 1);
    for (std::uint64_t r = 0; r < count; ++r) {
      std::uint64_t v = r;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      std::vector<std::uint32_t> rem = f;
      poly_mod(rem, g, p);
      if (is_zero(rem)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime_power(std::uint32_t q, std::uint32_t* p_out, int* m_out) {
  if (q < 2) return false;
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself prime
  int m = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return false;
  if (p_out) *p_out = p;
  if (m_out) *m_out = m;
  return true;
}

Field::Field(std::uint32_t q) : q_(q) {
  if (q > 65536)
    throw ParamsOutOfRange("field order " + std::to_string(q) +
                           " exceeds the supported maximum 65536");
  if (!is_prime_power(q, &p_, &m_))
    throw NotPrimePower(std::to_string(q) + " is not a prime power");
  // First monic irreducible of degree m in the integer encoding of the
  // non-leading coefficients.  Degree-1 candidates start at x itself.
  std::uint64_t count = 1;
  for (int i = 0; i < m_; ++i) count *= p_;
  std::vector<std::uint32_t> f(m_ + 1);
  for (std::uint64_t r = 0;; ++r) {
    assert(r < count);
    std::uint64_t v = r;
    for (int i = 0; i < m_; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p_);
      v /= p_;
    }
    f[m_] = 1;
    if (poly_irreducible(f, p_)) break;
  }
  reduction_ = f;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return (a + b) % p_;
  std::uint32_t da[17], db[17];
  to_digits(a, p_, m_, da);
  to_digits(b, p_, m_, db);
  for (int i = 0; i < m_; ++i) da[i] = (da[i] + db[i]) % p_;
  return from_digits(da, p_, m_);
}

std::uint32_t Field::neg(std::uint32_t a) const {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  std::uint32_t da[17];
  to_digits(a, p_, m_, da);
  for (int i = 0; i < m_; ++i) da[i] = da[i] == 0 ? 0 : p_ - da[i];
  return from_digits(da, p_, m_);
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const {
  return add(a, neg(b));
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1)
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
  std::uint32_t da[17], db[17];
  to_digits(a, p_, m_, da);
  to_digits(b, p_, m_, db);
  std::uint32_t prod[33] = {0};
  for (int i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < m_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // x^m == -(reduction_ mod x^m)
  for (int i = 2 * m_ - 2; i >= m_; --i) {
    const std::uint32_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < m_; ++j)
      prod[i - m_ + j] = (prod[i - m_ + j] + (p_ - c) * reduction_[j] % p_) % p_;
  }
  return from_digits(prod, p_, m_);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  return pow(a, q_ - 2);
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const {
  return mul(a, inv(b));
}

}  // namespace cw
