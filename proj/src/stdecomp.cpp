#include "torusinv/stdecomp.hpp"

namespace torusinv {

bool VirtualUnipotentVector::is_zero() const {
  for (const auto& [label, c] : coeffs)
    if (c != 0) return false;
  return true;
}

Rational inner_product(const VirtualUnipotentVector& u, const VirtualUnipotentVector& v) {
  Rational total = 0;
  for (const auto& [label, cu] : u.coeffs) {
    auto it = v.coeffs.find(label);
    if (it == v.coeffs.end()) continue;
    total += cu * it->second * centralizer_order(u.spec, label);
  }
  return total;
}

VirtualUnipotentVector scaled(const VirtualUnipotentVector& v, const Rational& c) {
  VirtualUnipotentVector out = v;
  for (auto& [label, coeff] : out.coeffs) coeff *= c;
  return out;
}

VirtualUnipotentVector sum(const VirtualUnipotentVector& a, const VirtualUnipotentVector& b) {
  VirtualUnipotentVector out = a;
  for (const auto& [label, coeff] : b.coeffs) out.coeffs[label] += coeff;
  return out;
}

int epsilon_sign(const GroupSpec& spec, const WeylClassLabel& label) {
  SignedPermutation w = canonical_representative(spec, label);
  int m = w.eigenvalue_one_multiplicity();
  return (spec.n - m) % 2 == 0 ? 1 : -1;
}

VirtualUnipotentVector steinberg_vector(const GroupSpec& spec) {
  VirtualUnipotentVector v;
  v.spec = spec;
  for (const auto& label : enumerate_classes(spec))
    v.coeffs[label] = Rational(epsilon_sign(spec, label), centralizer_order(spec, label));
  return v;
}

VirtualUnipotentVector unipotent_part(const ClassFunctionOnTori& phi) {
  VirtualUnipotentVector v;
  v.spec = phi.spec;
  for (const auto& label : enumerate_classes(phi.spec)) {
    auto it = phi.values.find(label);
    if (it == phi.values.end()) throw std::invalid_argument("missing torus class value");
    v.coeffs[label] = Rational(it->second * epsilon_sign(phi.spec, label),
                               centralizer_order(phi.spec, label));
  }
  return v;
}

Rational steinberg_inner(const ClassFunctionOnTori& phi) {
  Rational total = 0;
  for (const auto& label : enumerate_classes(phi.spec)) {
    auto it = phi.values.find(label);
    if (it == phi.values.end()) throw std::invalid_argument("missing torus class value");
    total += Rational(it->second, centralizer_order(phi.spec, label));
  }
  return total;
}

ClassFunctionOnTori induced_trivial_values(const GroupSpec& spec, int j) {
  ClassFunctionOnTori phi;
  phi.spec = spec;
  for (const auto& label : enumerate_classes(spec)) {
    SignedPermutation w = canonical_representative(spec, label);
    phi.values[label] = fixed_weight_count(w, spec, j);
  }
  return phi;
}

bool is_l_controlled(const ClassFunctionOnTori& phi, int levi_stabilizer_index) {
  ClassFunctionOnTori target = induced_trivial_values(phi.spec, levi_stabilizer_index);
  return phi.values == target.values;
}

VirtualUnipotentVector hc_steinberg_vector(const GroupSpec& spec, int levi_stabilizer_index) {
  VirtualUnipotentVector v;
  v.spec = spec;
  for (const auto& label : enumerate_classes(spec)) {
    SignedPermutation w = canonical_representative(spec, label);
    long long ind = fixed_weight_count(w, spec, levi_stabilizer_index);
    v.coeffs[label] =
        Rational(ind * epsilon_sign(spec, label), centralizer_order(spec, label));
  }
  return v;
}

Th5Report theorem_th5_report(const GroupSpec& spec, const LambdaWeight& nu,
                             std::optional<long long> d0) {
  if (spec.family != Family::SL) throw std::invalid_argument("SL type required");
  if (int(nu.coords.size()) != spec.n - 1)
    throw std::invalid_argument("weight has wrong rank");
  if (!is_strongly_q_restricted(nu, spec.p, spec.m))
    throw std::invalid_argument("weight not strongly q-restricted");

  Th5Report report;
  report.per_torus_values.spec = spec;
  report.vector.spec = spec;

  auto special = match_special_weight(nu, spec.n, spec.q);
  if (special) {
    report.special = true;
    report.special_index = *special;
    report.d0 = d0_for_special_weight(spec.n, spec.p, *special);
    if (d0 && *d0 != report.d0) throw std::invalid_argument("supplied d0 contradicts the weight");
  } else if (nu.is_zero()) {
    report.d0 = 1;
    if (d0 && *d0 != 1) throw std::invalid_argument("supplied d0 contradicts the zero weight");
  } else {
    if (!d0) throw std::invalid_argument("d0 required for this weight");
    if (*d0 < 0) throw std::invalid_argument("d0 must be nonnegative");
    report.d0 = *d0;
  }

  for (const auto& label : enumerate_classes(spec)) {
    long long value = report.d0;
    if (report.special) {
      SignedPermutation w = canonical_representative(spec, label);
      value += fixed_weight_count(w, spec, report.special_index);
    }
    report.per_torus_values.values[label] = value;
  }

  report.vector = scaled(steinberg_vector(spec), report.d0);
  if (report.special)
    report.vector = sum(report.vector, hc_steinberg_vector(spec, report.special_index));
  return report;
}

}  // namespace torusinv
