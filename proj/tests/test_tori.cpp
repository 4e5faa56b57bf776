#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "torusinv/tori.hpp"

using namespace torusinv;

namespace {

WeylClassLabel lab(std::vector<int> pos, std::vector<int> neg = {}, bool exc = false) {
  return WeylClassLabel{std::move(pos), std::move(neg), exc};
}

}  // namespace

TEST_CASE("torus orders Sp rank two") {
  GroupSpec sp = make_spec(Family::Sp, 2, 3);
  std::multiset<BigInt> orders;
  for (const auto& label : enumerate_classes(sp))
    orders.insert(build_canonical_torus(sp, label).order());
  CHECK(orders == std::multiset<BigInt>{4, 8, 8, 10, 16});
}

TEST_CASE("torus orders GL and SL") {
  GroupSpec gl = make_spec(Family::GL, 2, 2);
  CHECK(build_canonical_torus(gl, lab({2})).order() == 3);
  GroupSpec sl = make_spec(Family::SL, 2, 5);
  CHECK(build_canonical_torus(sl, lab({2})).order() == 6);
  CHECK(build_canonical_torus(sl, lab({1, 1})).order() == 4);
}

TEST_CASE("block exponent with inverted first coordinate") {
  GroupSpec so = make_spec(Family::SOplus, 2, 5);
  CanonicalTorus plain = build_canonical_torus(so, lab({2}));
  CanonicalTorus exc = build_canonical_torus(so, lab({2}, {}, true));
  Weight mu{1, 1};
  CHECK(block_exponent(mu, plain, 0) == 1 + 5);
  CHECK(block_exponent(mu, exc, 0) == -1 + 5);
}

TEST_CASE("exceptional classes get different invariants") {
  GroupSpec so = make_spec(Family::SOplus, 2, 5);
  CHECK(orbit_char_multiplicity(so, lab({2}), 2) == 2);
  CHECK(orbit_char_multiplicity(so, lab({2}, {}, true), 2) == 0);
  SignedPermutation w = canonical_representative(so, lab({2}));
  SignedPermutation wx = canonical_representative(so, lab({2}, {}, true));
  CHECK(fixed_weight_count(w, so, 2) == 2);
  CHECK(fixed_weight_count(wx, so, 2) == 0);
}

TEST_CASE("orbit character multiplicities match induced values") {
  std::vector<GroupSpec> specs = {make_spec(Family::GL, 3, 4), make_spec(Family::SL, 3, 3),
                                  make_spec(Family::Sp, 2, 4), make_spec(Family::SOodd, 2, 5),
                                  make_spec(Family::SOminus, 2, 3)};
  for (const GroupSpec& spec : specs) {
    int jmax = spec.twisted() ? spec.n - 1 : spec.n;
    for (const auto& label : enumerate_classes(spec)) {
      SignedPermutation w = canonical_representative(spec, label);
      for (int j = 1; j <= jmax; ++j)
        CHECK(orbit_char_multiplicity(spec, label, j) == fixed_weight_count(w, spec, j));
    }
  }
}

TEST_CASE("SL determinant lattice") {
  // On the Coxeter torus of SL_2(2) the eps_1 weight already fails, so the
  // multiplicity is the induced value 0, not the orbit size.
  GroupSpec sl = make_spec(Family::SL, 2, 2);
  CHECK(orbit_char_multiplicity(sl, lab({2}), 1) == 0);
  // GL: the determinant weight is trivial on the norm-one part.
  GroupSpec gl = make_spec(Family::GL, 2, 2);
  CHECK(orbit_char_multiplicity(gl, lab({2}), 2) == 1);
}

TEST_CASE("q-characters are invariant modulo the all-ones weight for SL") {
  GroupSpec sl = make_spec(Family::SL, 3, 4);
  for (const auto& label : enumerate_classes(sl)) {
    CanonicalTorus torus = build_canonical_torus(sl, label);
    for (Weight mu : {Weight{1, 0, 0}, Weight{2, 1, 0}, Weight{0, 3, 1}, Weight{1, 1, 1}}) {
      Weight shifted = mu;
      for (auto& z : shifted) z += 1;
      CHECK(is_q_character(mu, torus) == is_q_character(shifted, torus));
      CHECK(is_trivial_on_torus(mu, torus) == is_trivial_on_torus(shifted, torus));
    }
  }
}

TEST_CASE("lattice q-character test implies the subgroup test") {
  for (long long q : {2LL, 3LL, 5LL}) {
    GroupSpec sl = make_spec(Family::SL, 3, q);
    for (const auto& label : enumerate_classes(sl)) {
      CanonicalTorus torus = build_canonical_torus(sl, label);
      for (int j = 1; j <= 3; ++j) {
        for (const auto& mu : weight_orbit(sl, j)) {
          if (is_q_character(mu, torus)) CHECK(is_q_character_subgroup_test(mu, torus));
        }
      }
    }
  }
}

TEST_CASE("trivial weight is always a q-character") {
  for (const GroupSpec& spec :
       {make_spec(Family::Sp, 3, 3), make_spec(Family::SL, 3, 9), make_spec(Family::SOminus, 3, 5)}) {
    for (const auto& label : enumerate_classes(spec)) {
      CanonicalTorus torus = build_canonical_torus(spec, label);
      Weight zero(size_t(spec.n), 0);
      CHECK(is_trivial_on_torus(zero, torus));
      CHECK(is_q_character(zero, torus));
    }
  }
}

TEST_CASE("nondivisibility check") {
  CHECK(nondivisibility_check(2, 2, 1, {0}));
  CHECK_FALSE(nondivisibility_check(2, 3, 1, {0, 1}));
  CHECK_FALSE(nondivisibility_check(3, 5, 2, {0, 1, 2}));
  CHECK(nondivisibility_check(3, 5, 2, {0, 2}));
  CHECK_THROWS_AS(nondivisibility_check(2, 3, 3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(nondivisibility_check(2, 3, 1, {1, 0}), std::invalid_argument);
}
