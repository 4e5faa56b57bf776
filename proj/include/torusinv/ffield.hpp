#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

// Small finite fields F_{p^m} for the brute-force oracle layer.  Elements are
// encoded as integers in [0, p^m): the base-p digit vector of the polynomial
// representative modulo the chosen irreducible modulus.

namespace torusinv {

class FieldTable {
 public:
  // Deterministic: lexicographically smallest monic irreducible modulus and
  // smallest primitive element.  Log/antilog tables are built when the field
  // fits the table guard (p^m <= 2^20); larger fields (up to 2^27, used only
  // by the oracle on big nonsplit blocks) fall back to direct polynomial
  // arithmetic.
  static FieldTable build(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  int64_t q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  int64_t generator() const { return generator_; }
  bool has_tables() const { return !log_.empty(); }

  int64_t add(int64_t a, int64_t b) const;
  int64_t sub(int64_t a, int64_t b) const;
  int64_t neg(int64_t a) const;
  int64_t mul(int64_t a, int64_t b) const;
  int64_t inv(int64_t a) const;
  // exp may be negative; a must be nonzero in that case.
  int64_t pow(int64_t a, int64_t exp) const;
  int64_t frobenius(int64_t a) const { return pow(a, p_); }

  // Multiplicative order (a nonzero).
  int64_t element_order(int64_t a) const;

  int64_t log(int64_t a) const;      // discrete log w.r.t. the generator
  int64_t antilog(int64_t e) const;  // generator^e

 private:
  int p_ = 0, m_ = 0;
  int64_t q_ = 0;
  std::vector<int> modulus_;  // monic, degree m; coefficient of x^i at index i
  int64_t generator_ = 0;
  std::vector<int32_t> log_;      // size q, log_[0] unused
  std::vector<int64_t> antilog_;  // size q-1

  int64_t mul_poly(int64_t a, int64_t b) const;
};

}  // namespace torusinv
