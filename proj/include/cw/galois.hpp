#pragma once

#include <cstdint>
#include <vector>

#include "cw/errors.hpp"

namespace cw {

// Tests whether q = p^m for a prime p; on success optionally reports p and m.
bool is_prime_power(std::uint32_t q, std::uint32_t* p_out = nullptr,
                    int* m_out = nullptr);

// Arithmetic in GF(q) for prime powers q <= 2^16.
//
// Elements are the integers 0..q-1, read as base-p coefficient vectors of
// polynomials over GF(p) (least significant digit = constant term).  The
// reduction polynomial is the first monic irreducible polynomial of degree m
// in that integer encoding, so two Field objects for the same q are
// interchangeable and element encodings are stable across runs.
class Field {
 public:
  explicit Field(std::uint32_t q);  // NotPrimePower / ParamsOutOfRange

  std::uint32_t q() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  int extension_degree() const { return m_; }
  // Coefficient i of x^i, i = 0..m; leading coefficient is 1.
  const std::vector<std::uint32_t>& reduction_poly() const { return reduction_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // DivisionByZero on a = 0
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

 private:
  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  int m_ = 1;
  std::vector<std::uint32_t> reduction_;
};

}  // namespace cw
