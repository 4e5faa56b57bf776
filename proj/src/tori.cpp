#include "torusinv/tori.hpp"

#include <numeric>

namespace torusinv {

namespace {

BigInt ipow(long long base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt mod_nonneg(const BigInt& a, const BigInt& mod) {
  BigInt r = a % mod;
  if (r < 0) r += mod;
  return r;
}

}  // namespace

BigInt TorusBlock::order(long long q) const {
  return split ? ipow(q, length) - 1 : ipow(q, length) + 1;
}

BigInt CanonicalTorus::order() const {
  BigInt r = 1;
  for (auto& b : blocks) r *= b.order(spec.q);
  if (det_one_constraint) r /= spec.q - 1;
  return r;
}

CanonicalTorus build_canonical_torus(const GroupSpec& spec, const WeylClassLabel& label) {
  if (!label_valid_for(spec, label))
    throw std::invalid_argument("label not valid for spec");
  CanonicalTorus torus{spec, {}, spec.family == Family::SL};
  int pos = 0;
  for (int len : label.positive_parts) {
    torus.blocks.push_back({pos, len, true, false});
    pos += len;
  }
  for (int len : label.negative_parts) {
    torus.blocks.push_back({pos, len, false, false});
    pos += len;
  }
  if (label.exceptional) torus.blocks[0].inverted_first = true;
  return torus;
}

BigInt block_exponent(const Weight& mu, const CanonicalTorus& torus, int block_index) {
  if (block_index < 0 || block_index >= int(torus.blocks.size()))
    throw std::invalid_argument("block index out of range");
  const TorusBlock& b = torus.blocks[size_t(block_index)];
  BigInt e = 0, qpow = 1;
  for (int t = 0; t < b.length; ++t) {
    long long z = mu[size_t(b.start + t)];
    e += qpow * (t == 0 && b.inverted_first ? -z : z);
    qpow *= torus.spec.q;
  }
  return e;
}

namespace {

// Shared core: tests (factor * mu)|_T = 1_T via the exponent lattice.
bool trivial_power_test(const Weight& mu, const CanonicalTorus& torus, long long factor) {
  long long q = torus.spec.q;
  if (!torus.det_one_constraint) {
    for (size_t i = 0; i < torus.blocks.size(); ++i) {
      BigInt o = torus.blocks[i].order(q);
      if (mod_nonneg(factor * block_exponent(mu, torus, int(i)), o) != 0) return false;
    }
    return true;
  }
  // SL: block generators a_i = alpha^{c_i} for one primitive alpha of
  // F_{q^L}; the determinant-one exponent lattice is generated by
  // (q-1)e_i and e_i - e_j.
  int L = 1;
  for (auto& b : torus.blocks) L = std::lcm(L, b.length);
  BigInt M = ipow(q, L) - 1;
  std::vector<BigInt> ec(torus.blocks.size());
  for (size_t i = 0; i < torus.blocks.size(); ++i) {
    BigInt c = M / (ipow(q, torus.blocks[i].length) - 1);
    ec[i] = block_exponent(mu, torus, int(i)) * c;
  }
  for (size_t i = 0; i < ec.size(); ++i)
    if (mod_nonneg(factor * (q - 1) * ec[i], M) != 0) return false;
  for (size_t i = 0; i < ec.size(); ++i)
    for (size_t j = i + 1; j < ec.size(); ++j)
      if (mod_nonneg(factor * (ec[i] - ec[j]), M) != 0) return false;
  return true;
}

}  // namespace

bool is_q_character(const Weight& mu, const CanonicalTorus& torus) {
  return trivial_power_test(mu, torus, torus.spec.q - 1);
}

bool is_trivial_on_torus(const Weight& mu, const CanonicalTorus& torus) {
  return trivial_power_test(mu, torus, 1);
}

bool is_q_character_subgroup_test(const Weight& mu, const CanonicalTorus& torus) {
  long long q = torus.spec.q;
  if (!torus.det_one_constraint) return is_q_character(mu, torus);
  for (size_t i = 0; i < torus.blocks.size(); ++i) {
    BigInt o = torus.blocks[i].order(q);
    if (mod_nonneg(BigInt(q - 1) * (q - 1) * block_exponent(mu, torus, int(i)), o) != 0)
      return false;
  }
  return true;
}

long long orbit_char_multiplicity(const GroupSpec& spec, const WeylClassLabel& label, int j) {
  CanonicalTorus torus = build_canonical_torus(spec, label);
  long long count = 0;
  for (auto& mu : weight_orbit(spec, j))
    if (is_q_character(mu, torus)) ++count;
  return count;
}

bool nondivisibility_check(int n, long long q, long long r, const std::vector<int>& indices) {
  int k = int(indices.size());
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (r <= 0 || r >= q) throw std::invalid_argument("need 0 < r < q");
  for (int i = 0; i < k; ++i) {
    if (indices[i] < 0 || indices[i] >= n) throw std::invalid_argument("index out of range");
    if (i && indices[i] <= indices[i - 1])
      throw std::invalid_argument("indices must be strictly increasing");
  }
  BigInt sum = 0;
  for (int l : indices) sum += ipow(q, l);
  BigInt value = r * (q - 1) * sum;
  return value % (ipow(q, n) - 1) != 0;
}

}  // namespace torusinv
