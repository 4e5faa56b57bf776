#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>

#include "torusinv/truncpoly.hpp"
#include "torusinv/weyl.hpp"

// Rational bookkeeping over the formal R_{T,1} basis: Steinberg vectors,
// unipotent parts, L-controlled tests and the SL decomposition reports.

namespace torusinv {

using Rational = boost::multiprecision::cpp_rational;

// Values (phi|_{T_w}, 1_{T_w}) per torus class.
struct ClassFunctionOnTori {
  GroupSpec spec;
  std::map<WeylClassLabel, long long> values;
};

// Coefficients over the R_{T,1} basis; inner products use the Gram matrix
// diag(|W(T_w)|).
struct VirtualUnipotentVector {
  GroupSpec spec;
  std::map<WeylClassLabel, Rational> coeffs;

  bool is_zero() const;
  bool operator==(const VirtualUnipotentVector& other) const { return coeffs == other.coeffs; }
};

Rational inner_product(const VirtualUnipotentVector& u, const VirtualUnipotentVector& v);

VirtualUnipotentVector scaled(const VirtualUnipotentVector& v, const Rational& c);
VirtualUnipotentVector sum(const VirtualUnipotentVector& a, const VirtualUnipotentVector& b);

// epsilon_G * epsilon_{T_w} = (-1)^(n - m(w)), m(w) the eigenvalue-1
// multiplicity of the acting signed permutation on Q^n.
int epsilon_sign(const GroupSpec& spec, const WeylClassLabel& label);

VirtualUnipotentVector steinberg_vector(const GroupSpec& spec);
VirtualUnipotentVector unipotent_part(const ClassFunctionOnTori& phi);
Rational steinberg_inner(const ClassFunctionOnTori& phi);

bool is_l_controlled(const ClassFunctionOnTori& phi, int levi_stabilizer_index);

// Coefficient vector of the Harish-Chandra induced Steinberg character of
// the Levi with Weyl group W_j.
VirtualUnipotentVector hc_steinberg_vector(const GroupSpec& spec, int levi_stabilizer_index);

// The torus-restriction values 1_{W_j}^W(w) as a class function.
ClassFunctionOnTori induced_trivial_values(const GroupSpec& spec, int j);

struct Th5Report {
  bool special = false;
  int special_index = 0;  // i with nu = (q-1)lambda_i, when special
  long long d0 = 0;
  ClassFunctionOnTori per_torus_values;
  VirtualUnipotentVector vector;
};

// Decomposition of u(beta_nu . St) for SL and strongly q-restricted nu.
// d0 must be supplied unless nu is 0 or (q-1)lambda_i.
Th5Report theorem_th5_report(const GroupSpec& spec, const LambdaWeight& nu,
                             std::optional<long long> d0 = std::nullopt);

}  // namespace torusinv
