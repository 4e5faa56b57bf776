#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Classical Weyl groups as signed permutation groups: class labels,
// canonical representatives, centralizer orders and induced-trivial values.

namespace torusinv {

enum class Family { GL, SL, Sp, SOodd, SOplus, SOminus, SpinPlus, SpinMinus };

// Coxeter type of the Weyl group acting on the eps-weight lattice.
enum class WeylType { A, BC, Dplus, Dminus };

const char* family_name(Family f);
Family family_from_string(const std::string& s);

struct GroupSpec {
  Family family;
  int n;  // rank: matrix size for GL/SL, Lie rank for the others
  int p;  // defining characteristic
  int m;  // q = p^m
  long long q;

  WeylType weyl_type() const;
  bool twisted() const { return weyl_type() == WeylType::Dminus; }
};

// Validates primality of p, parity constraints and rank bounds.
GroupSpec make_spec(Family family, int n, long long q);

struct WeylClassLabel {
  std::vector<int> positive_parts;  // weakly decreasing
  std::vector<int> negative_parts;  // weakly decreasing
  bool exceptional = false;

  auto operator<=>(const WeylClassLabel&) const = default;

  int total() const;
  int num_parts() const { return int(positive_parts.size() + negative_parts.size()); }
};

bool label_valid_for(const GroupSpec& spec, const WeylClassLabel& label);

// eps_j -> signs[j] * eps_{images[j]}, 0-based.
struct SignedPermutation {
  std::vector<int> images;
  std::vector<int8_t> signs;

  explicit SignedPermutation(int n = 0);
  int size() const { return int(images.size()); }

  static SignedPermutation identity(int n);
  SignedPermutation compose(const SignedPermutation& other) const;  // this after other
  SignedPermutation inverse() const;
  auto operator<=>(const SignedPermutation&) const = default;

  // Image of a weight sum(z_i eps_i).
  std::vector<long long> apply(const std::vector<long long>& z) const;

  int minus_count() const;
  // Multiplicity of eigenvalue 1 on Q^n (= number of cycles with sign product +1).
  int eigenvalue_one_multiplicity() const;
};

std::vector<WeylClassLabel> enumerate_classes(const GroupSpec& spec);

// Block-cyclic canonical element; for twisted families this is the ambient
// type-B element v = wr attached to the odd-l double partition.
SignedPermutation canonical_representative(const GroupSpec& spec, const WeylClassLabel& label);

// |C_W(w)| (F-centralizer order for the twisted families).
long long centralizer_order(const GroupSpec& spec, const WeylClassLabel& label);

// The W-orbit of omega_j = eps_1+...+eps_j as explicit integer vectors.
std::vector<std::vector<long long>> weight_orbit(const GroupSpec& spec, int j);

// Number of orbit weights mu with w(mu) = mu; equals 1_{W_j}^W(w).
long long fixed_weight_count(const SignedPermutation& w, const GroupSpec& spec, int j);

// Same value recomputed by explicit coset enumeration (independent route).
long long induced_trivial_by_cosets(const SignedPermutation& w, const GroupSpec& spec, int j);

// Full element lists, guarded at 1e7 elements.
std::vector<SignedPermutation> enumerate_symmetric_group(int n);
std::vector<SignedPermutation> enumerate_hyperoctahedral_group(int n);
std::vector<SignedPermutation> enumerate_type_d_group(int n);

// Partition helpers (weakly decreasing, positive parts).
std::vector<std::vector<int>> partitions_of(int n);
long long symmetric_centralizer_order(const std::vector<int>& parts);

}  // namespace torusinv
