#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "torusinv/weyl.hpp"

// Canonical maximal tori as products of cyclic blocks and the q-character
// test by exponent arithmetic.  No torus element is ever materialized here.

namespace torusinv {

using BigInt = boost::multiprecision::cpp_int;

struct TorusBlock {
  int start;   // 0-based first eps-coordinate
  int length;  // n_i
  bool split;  // order q^{n_i}-1 (else q^{n_i}+1)
  bool inverted_first = false;

  BigInt order(long long q) const;
};

struct CanonicalTorus {
  GroupSpec spec;
  std::vector<TorusBlock> blocks;
  bool det_one_constraint = false;  // SL only

  BigInt order() const;
};

// A weight sum(z_i eps_i); for SL weights are taken modulo the all-ones vector.
using Weight = std::vector<long long>;

CanonicalTorus build_canonical_torus(const GroupSpec& spec, const WeylClassLabel& label);

// E_i = sum_t z_{start+t} q^t with the t=0 term negated on an inverted block.
BigInt block_exponent(const Weight& mu, const CanonicalTorus& torus, int block_index);

// mu(t)^{q-1} = 1 for every torus element t.
bool is_q_character(const Weight& mu, const CanonicalTorus& torus);

// mu(t) = 1 for every torus element t (used by the truncated-polynomial counts).
bool is_trivial_on_torus(const Weight& mu, const CanonicalTorus& torus);

// The weaker subgroup test from the generator-only argument (SL: tests only
// the (q-1)-th powers of the block generators).  Kept as a cross-check.
bool is_q_character_subgroup_test(const Weight& mu, const CanonicalTorus& torus);

// Number of weights in the W-orbit of omega_j that restrict to q-characters.
long long orbit_char_multiplicity(const GroupSpec& spec, const WeylClassLabel& label, int j);

// r(q-1)(q^{l_1}+...+q^{l_k}) not divisible by q^n-1.
bool nondivisibility_check(int n, long long q, long long r, const std::vector<int>& indices);

}  // namespace torusinv
