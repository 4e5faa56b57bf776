#pragma once

#include <optional>

#include "torusinv/tori.hpp"
#include "torusinv/weyl.hpp"

// The truncated polynomial ring in n variables modulo p-th powers: monomial
// weights in the SL_n lambda-basis, weight multiplicities and the zero-weight
// multiplicity d0 criteria.

namespace torusinv {

struct Monomial {
  std::vector<int> exps;  // each in [0, p-1]
};

struct LambdaWeight {
  std::vector<long long> coords;  // a_1..a_{n-1}

  bool operator==(const LambdaWeight&) const = default;
  auto operator<=>(const LambdaWeight&) const = default;
  bool dominant() const;
  bool is_zero() const;
};

// a_i = c_i - c_{i+1}.
LambdaWeight monomial_weight(const Monomial& mono);

// Multiplicity of nu among the monomials of the rank-n truncated ring;
// p - e for realized weights (e the exponent spread), 0 otherwise.
long long weight_multiplicity_rn(const LambdaWeight& nu, int p, int n);

bool is_strongly_p_restricted(const LambdaWeight& nu, int p);
bool is_strongly_q_restricted(const LambdaWeight& nu, int p, int m);

// Base-p digit weights of nu (length m), or nullopt when some coordinate
// falls outside [0, q).
std::optional<std::vector<LambdaWeight>> steinberg_digits(const LambdaWeight& nu, int p, int m);

// All decompositions nu = mu_0 + p mu_1 + ... + p^{m-1} mu_{m-1} with every
// digit realized in the rank-n ring.  For nu = 0 or (q-1)lambda_k exactly one
// exists.
std::vector<std::vector<LambdaWeight>> steinberg_expansions(const LambdaWeight& nu, int p,
                                                            int m, int n);

// 1 iff n divides i(p-1): the zero-weight multiplicity of the irreducible
// with highest weight (q-1)lambda_i.
int d0_for_special_weight(int n, int p, int i);

// Monomials of the rank-mn ring whose weight restricts trivially to the
// canonical torus of the label; GL/SL only.
long long count_trivial_monomial_weights(const GroupSpec& spec, const WeylClassLabel& label);

// (q-1)lambda_k as a LambdaWeight of SL_n, or the index k when nu matches.
LambdaWeight special_weight(int n, long long q, int k);
std::optional<int> match_special_weight(const LambdaWeight& nu, int n, long long q);

}  // namespace torusinv
