#pragma once

#include <functional>

#include "torusinv/ffield.hpp"
#include "torusinv/tori.hpp"
#include "torusinv/weyl.hpp"

// Brute-force recomputation of the closed-form quantities from explicit
// vectors, field elements and group elements.  Shares only the field
// arithmetic with the formula layer.

namespace torusinv {

// Orbits of the canonical torus on F_q^n minus zero, by breadth-first
// closure; GL counts orbits of the full torus, SL of its determinant-one
// subgroup.  Requires q^n <= 1e6.
long long torus_orbit_count(const GroupSpec& spec, const WeylClassLabel& label);

// Same but counting orbits on all of F_q^n (the zero vector adds one orbit).
long long torus_orbit_count_with_zero(const GroupSpec& spec, const WeylClassLabel& label);

// Enumerates the torus elements as exponent tuples, evaluates every weight
// of the omega_j orbit at every element inside F_{q^L}, and counts the
// weights mu with mu(t)^{q-1} = 1 throughout.  Requires torus order <= 1e6.
long long torus_element_qchar_count(const GroupSpec& spec, const WeylClassLabel& label, int j);

// Dimension over F_2 of the fixed space of the canonical torus of GL_n(2)
// acting on the j-th exterior power of F_2^n.  Requires C(n,j) <= 1e4.
long long exterior_power_fixed_dim(int n, int j, const WeylClassLabel& label);

using GroupElements = std::vector<SignedPermutation>;
using Twist = std::function<SignedPermutation(const SignedPermutation&)>;

// Number of cosets gA with a . twist(g) in gA, by explicit enumeration.
long long coset_fixing_oracle(const GroupElements& group, const GroupElements& subgroup,
                              const SignedPermutation& a, const Twist& twist = nullptr);

// The same count through the twisted-centralizer formula:
// |C| * #(twisted class of a meeting A) / |A|.
long long coset_fixing_by_centralizers(const GroupElements& group,
                                       const GroupElements& subgroup,
                                       const SignedPermutation& a, const Twist& twist = nullptr);

// Zero-weight monomials of the rank-n truncated ring in the homogeneous
// component of the given degree.
long long zero_weight_monomial_count(int n, int p, long long degree);

}  // namespace torusinv
