#include "torusinv/ffield.hpp"

#include <algorithm>

namespace torusinv {

namespace {

constexpr int64_t kTableGuard = 1 << 20;
constexpr int64_t kFieldGuard = 1 << 27;

bool is_prime(int64_t v) {
  if (v < 2) return false;
  for (int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

void decode(int64_t a, int p, int m, int* out) {
  for (int i = 0; i < m; ++i) {
    out[i] = int(a % p);
    a /= p;
  }
}

int64_t encode(const int* digits, int p, int m) {
  int64_t v = 0;
  for (int i = m - 1; i >= 0; --i) v = v * p + digits[i];
  return v;
}

// Remainder of polynomial division over F_p; a has degree < 2m-1.
void poly_mod(std::vector<int>& a, const std::vector<int>& modulus, int p) {
  int m = int(modulus.size()) - 1;
  for (int d = int(a.size()) - 1; d >= m; --d) {
    int c = a[size_t(d)];
    if (c == 0) continue;
    for (int i = 0; i <= m; ++i) {
      int& t = a[size_t(d - m + i)];
      t = int(((int64_t)t - (int64_t)c * modulus[size_t(i)]) % p);
      if (t < 0) t += p;
    }
  }
  a.resize(size_t(m));
}

// Irreducibility by trial division by all monic polynomials of degree <= m/2.
bool is_irreducible(const std::vector<int>& f, int p) {
  int m = int(f.size()) - 1;
  for (int d = 1; 2 * d <= m; ++d) {
    int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int64_t lo = 0; lo < count; ++lo) {
      std::vector<int> g(size_t(d + 1), 0);
      g[size_t(d)] = 1;
      int64_t v = lo;
      for (int i = 0; i < d; ++i) {
        g[size_t(i)] = int(v % p);
        v /= p;
      }
      std::vector<int> r = f;
      // r mod g
      for (int dd = int(r.size()) - 1; dd >= d; --dd) {
        int c = r[size_t(dd)];
        if (c == 0) continue;
        for (int i = 0; i <= d; ++i) {
          int& t = r[size_t(dd - d + i)];
          t = int(((int64_t)t - (int64_t)c * g[size_t(i)]) % p);
          if (t < 0) t += p;
        }
      }
      bool zero = true;
      for (int i = 0; i < d; ++i)
        if (r[size_t(i)] != 0) { zero = false; break; }
      if (zero) return false;
    }
  }
  return true;
}

std::vector<int64_t> prime_factors(int64_t v) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

int64_t FieldTable::mul_poly(int64_t a, int64_t b) const {
  if (a == 0 || b == 0) return 0;
  int da[64], db[64];
  decode(a, p_, m_, da);
  decode(b, p_, m_, db);
  std::vector<int> prod(size_t(2 * m_ - 1), 0);
  for (int i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < m_; ++j)
      prod[size_t(i + j)] = int((prod[size_t(i + j)] + (int64_t)da[i] * db[j]) % p_);
  }
  poly_mod(prod, modulus_, p_);
  return encode(prod.data(), p_, m_);
}

FieldTable FieldTable::build(int p, int m) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (m < 1) throw std::invalid_argument("m must be positive");
  int64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kFieldGuard) throw std::invalid_argument("field size guard exceeded");
  }

  FieldTable f;
  f.p_ = p;
  f.m_ = m;
  f.q_ = q;

  // Lexicographically smallest monic irreducible modulus, scanning the low
  // coefficients as a base-p counter.
  f.modulus_.assign(size_t(m + 1), 0);
  f.modulus_[size_t(m)] = 1;
  if (m == 1) {
    // x itself is irreducible but we want arithmetic mod p; use x (the root
    // is 0, i.e. plain Z/p arithmetic).
    f.modulus_[0] = 0;
  } else {
    int64_t lowcount = q;  // p^m combinations of the low coefficients
    bool found = false;
    for (int64_t lo = 0; lo < lowcount; ++lo) {
      int64_t v = lo;
      for (int i = 0; i < m; ++i) {
        f.modulus_[size_t(i)] = int(v % p);
        v /= p;
      }
      if (f.modulus_[0] != 0 && is_irreducible(f.modulus_, p)) {
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
  }

  // Smallest primitive element.
  auto factors = prime_factors(q - 1);
  for (int64_t a = 1; a < q; ++a) {
    bool primitive = true;
    for (int64_t r : factors) {
      if (f.pow(a, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive && f.pow(a, q - 1) == 1) {
      f.generator_ = a;
      break;
    }
  }
  if (f.generator_ == 0 && q > 2) throw std::logic_error("no primitive element found");
  if (q == 2) f.generator_ = 1;

  if (q <= kTableGuard) {
    f.log_.assign(size_t(q), 0);
    f.antilog_.assign(size_t(q - 1), 0);
    int64_t x = 1;
    for (int64_t e = 0; e < q - 1; ++e) {
      f.antilog_[size_t(e)] = x;
      f.log_[size_t(x)] = int32_t(e);
      x = f.mul_poly(x, f.generator_);
    }
  }
  return f;
}

int64_t FieldTable::add(int64_t a, int64_t b) const {
  if (m_ == 1) return (a + b) % p_;
  int da[64], db[64], dr[64];
  decode(a, p_, m_, da);
  decode(b, p_, m_, db);
  for (int i = 0; i < m_; ++i) dr[i] = (da[i] + db[i]) % p_;
  return encode(dr, p_, m_);
}

int64_t FieldTable::neg(int64_t a) const {
  if (m_ == 1) return (p_ - a) % p_;
  int da[64], dr[64];
  decode(a, p_, m_, da);
  for (int i = 0; i < m_; ++i) dr[i] = (p_ - da[i]) % p_;
  return encode(dr, p_, m_);
}

int64_t FieldTable::sub(int64_t a, int64_t b) const { return add(a, neg(b)); }

int64_t FieldTable::mul(int64_t a, int64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (has_tables()) {
    int64_t e = (int64_t)log_[size_t(a)] + log_[size_t(b)];
    if (e >= q_ - 1) e -= q_ - 1;
    return antilog_[size_t(e)];
  }
  return mul_poly(a, b);
}

int64_t FieldTable::inv(int64_t a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  if (has_tables()) {
    int64_t e = (q_ - 1 - log_[size_t(a)]) % (q_ - 1);
    return antilog_[size_t(e)];
  }
  return pow(a, q_ - 2);
}

int64_t FieldTable::pow(int64_t a, int64_t exp) const {
  if (a == 0) {
    if (exp <= 0) throw std::domain_error("0 to a non-positive power");
    return 0;
  }
  exp %= (q_ - 1);
  if (exp < 0) exp += q_ - 1;
  if (has_tables()) {
    int64_t e = ((int64_t)log_[size_t(a)] * exp) % (q_ - 1);
    return antilog_[size_t(e)];
  }
  int64_t result = 1, base = a;
  while (exp > 0) {
    if (exp & 1) result = mul_poly(result, base);
    base = mul_poly(base, base);
    exp >>= 1;
  }
  return result;
}

int64_t FieldTable::element_order(int64_t a) const {
  if (a == 0) throw std::domain_error("order of zero");
  int64_t ord = q_ - 1;
  for (int64_t r : prime_factors(q_ - 1)) {
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  }
  return ord;
}

int64_t FieldTable::log(int64_t a) const {
  if (a == 0) throw std::domain_error("log of zero");
  if (has_tables()) return log_[size_t(a)];
  // Only needed for table-backed fields in practice.
  int64_t x = 1;
  for (int64_t e = 0; e < q_ - 1; ++e) {
    if (x == a) return e;
    x = mul_poly(x, generator_);
  }
  throw std::logic_error("log: element not reached");
}

int64_t FieldTable::antilog(int64_t e) const {
  if (has_tables()) return antilog_[size_t(((e % (q_ - 1)) + (q_ - 1)) % (q_ - 1))];
  return pow(generator_, e);
}

}  // namespace torusinv
