#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "torusinv/weyl.hpp"

using namespace torusinv;

namespace {

WeylClassLabel lab(std::vector<int> pos, std::vector<int> neg = {}, bool exc = false) {
  return WeylClassLabel{std::move(pos), std::move(neg), exc};
}

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f : {Family::GL, Family::SL, Family::Sp, Family::SOodd, Family::SOplus,
                   Family::SOminus, Family::SpinPlus, Family::SpinMinus})
    CHECK(family_from_string(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_string("so"), std::invalid_argument);
}

TEST_CASE("make_spec validates parity and rank") {
  CHECK_THROWS_AS(make_spec(Family::GL, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Family::SOodd, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Family::SpinPlus, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_spec(Family::Sp, 1, 3), std::invalid_argument);
  GroupSpec s = make_spec(Family::SL, 3, 9);
  CHECK(s.p == 3);
  CHECK(s.m == 2);
  CHECK(s.weyl_type() == WeylType::A);
  CHECK(make_spec(Family::SOminus, 3, 3).twisted());
}

TEST_CASE("partitions and symmetric centralizers") {
  CHECK(partitions_of(6).size() == 11);
  CHECK(symmetric_centralizer_order({1, 1, 1}) == 6);
  CHECK(symmetric_centralizer_order({2, 1}) == 2);
  CHECK(symmetric_centralizer_order({3}) == 3);
}

TEST_CASE("class enumeration counts") {
  CHECK(enumerate_classes(make_spec(Family::GL, 3, 2)).size() == 3);
  CHECK(enumerate_classes(make_spec(Family::Sp, 2, 3)).size() == 5);
  CHECK(enumerate_classes(make_spec(Family::SOplus, 2, 3)).size() == 4);
  CHECK(enumerate_classes(make_spec(Family::SOplus, 4, 3)).size() == 13);
  // Twisted labels carry an odd number of negative parts.
  for (const auto& label : enumerate_classes(make_spec(Family::SOminus, 3, 3)))
    CHECK(label.negative_parts.size() % 2 == 1);
}

TEST_CASE("canonical representative block cycles") {
  GroupSpec sp = make_spec(Family::Sp, 2, 3);
  SignedPermutation w = canonical_representative(sp, lab({}, {2}));
  CHECK(w.images == std::vector<int>{1, 0});
  CHECK(w.signs == std::vector<int8_t>{1, -1});
  CHECK(w.eigenvalue_one_multiplicity() == 0);

  // Exceptional variant flips the signs at positions 1 and n_1.
  GroupSpec so = make_spec(Family::SOplus, 2, 3);
  SignedPermutation wx = canonical_representative(so, lab({2}, {}, true));
  CHECK(wx.images == std::vector<int>{1, 0});
  CHECK(wx.signs == std::vector<int8_t>{-1, -1});

  // Type D representatives stay inside the even-sign subgroup.
  for (const auto& label : enumerate_classes(make_spec(Family::SOplus, 4, 3)))
    CHECK(canonical_representative(make_spec(Family::SOplus, 4, 3), label).minus_count() % 2 ==
          0);
  // Twisted representatives are the ambient odd-sign elements.
  for (const auto& label : enumerate_classes(make_spec(Family::SOminus, 4, 3)))
    CHECK(canonical_representative(make_spec(Family::SOminus, 4, 3), label).minus_count() % 2 ==
          1);
}

TEST_CASE("signed permutation algebra") {
  GroupSpec sp = make_spec(Family::Sp, 3, 3);
  SignedPermutation w = canonical_representative(sp, lab({2}, {1}));
  SignedPermutation i = w.compose(w.inverse());
  CHECK(i == SignedPermutation::identity(3));
  std::vector<long long> z{1, 0, -1};
  auto back = w.inverse().apply(w.apply(z));
  CHECK(back == z);
}

TEST_CASE("class equation for each type") {
  for (int n = 2; n <= 4; ++n) {
    long long bn = 1;
    for (int i = 1; i <= n; ++i) bn *= i;
    bn <<= n;

    GroupSpec a = make_spec(Family::GL, n, 2);
    long long suma = 0, fact = bn >> n;
    for (const auto& label : enumerate_classes(a)) suma += fact / centralizer_order(a, label);
    CHECK(suma == fact);

    GroupSpec bc = make_spec(Family::Sp, n, 3);
    long long sumb = 0;
    for (const auto& label : enumerate_classes(bc)) sumb += bn / centralizer_order(bc, label);
    CHECK(sumb == bn);

    GroupSpec d = make_spec(Family::SOplus, n, 3);
    long long sumd = 0;
    for (const auto& label : enumerate_classes(d)) sumd += (bn / 2) / centralizer_order(d, label);
    CHECK(sumd == bn / 2);

    // The F-classes partition the nontrivial coset of W(D) in W(B).
    GroupSpec dm = make_spec(Family::SOminus, n, 3);
    long long sumt = 0;
    for (const auto& label : enumerate_classes(dm))
      sumt += (bn / 2) / centralizer_order(dm, label);
    CHECK(sumt == bn / 2);
  }
}

TEST_CASE("centralizer orders against brute force") {
  for (int n = 2; n <= 3; ++n) {
    GroupSpec a = make_spec(Family::GL, n, 2);
    auto sym = enumerate_symmetric_group(n);
    for (const auto& label : enumerate_classes(a)) {
      SignedPermutation w = canonical_representative(a, label);
      long long c = 0;
      for (const auto& g : sym)
        if (g.compose(w) == w.compose(g)) ++c;
      CHECK(c == centralizer_order(a, label));
    }

    GroupSpec bc = make_spec(Family::Sp, n, 3);
    auto hyp = enumerate_hyperoctahedral_group(n);
    for (const auto& label : enumerate_classes(bc)) {
      SignedPermutation w = canonical_representative(bc, label);
      long long c = 0;
      for (const auto& g : hyp)
        if (g.compose(w) == w.compose(g)) ++c;
      CHECK(c == centralizer_order(bc, label));
    }
  }
  for (int n = 2; n <= 4; ++n) {
    GroupSpec d = make_spec(Family::SOplus, n, 3);
    auto dn = enumerate_type_d_group(n);
    for (const auto& label : enumerate_classes(d)) {
      SignedPermutation w = canonical_representative(d, label);
      long long c = 0;
      for (const auto& g : dn)
        if (g.compose(w) == w.compose(g)) ++c;
      CHECK(c == centralizer_order(d, label));
    }
    GroupSpec dm = make_spec(Family::SOminus, n, 3);
    for (const auto& label : enumerate_classes(dm)) {
      SignedPermutation v = canonical_representative(dm, label);
      long long c = 0;
      for (const auto& g : dn)
        if (g.compose(v) == v.compose(g)) ++c;
      CHECK(c == centralizer_order(dm, label));
    }
  }
}

TEST_CASE("type D classes really split or fuse") {
  // Conjugacy inside W(D_4): the exceptional labels name distinct classes
  // and the canonical pair is not D-conjugate.
  GroupSpec d = make_spec(Family::SOplus, 4, 3);
  auto dn = enumerate_type_d_group(4);
  SignedPermutation w = canonical_representative(d, lab({2, 2}));
  SignedPermutation wx = canonical_representative(d, lab({2, 2}, {}, true));
  bool conjugate = false;
  for (const auto& g : dn)
    if (g.compose(w).compose(g.inverse()) == wx) conjugate = true;
  CHECK_FALSE(conjugate);
  // Both halves of the split W(B_4) class keep the full 32-element
  // centralizer inside W(D_4).
  long long cent_w = 0, cent_wx = 0;
  for (const auto& g : dn) {
    if (g.compose(w) == w.compose(g)) ++cent_w;
    if (g.compose(wx) == wx.compose(g)) ++cent_wx;
  }
  CHECK(cent_w == 32);
  CHECK(cent_wx == 32);
  CHECK(centralizer_order(d, lab({2, 2})) == 32);
  CHECK(centralizer_order(d, lab({2, 2}, {}, true)) == 32);
}

TEST_CASE("weight orbit sizes") {
  CHECK(weight_orbit(make_spec(Family::GL, 4, 2), 2).size() == 6);
  CHECK(weight_orbit(make_spec(Family::Sp, 3, 3), 2).size() == 12);
  CHECK(weight_orbit(make_spec(Family::SOplus, 3, 3), 3).size() == 4);
  CHECK(weight_orbit(make_spec(Family::SOminus, 3, 3), 2).size() == 12);
  CHECK_THROWS_AS(weight_orbit(make_spec(Family::SOminus, 3, 3), 3), std::invalid_argument);
}

TEST_CASE("induced trivial agreement across families") {
  std::vector<GroupSpec> specs = {
      make_spec(Family::GL, 3, 2),   make_spec(Family::SL, 3, 4),
      make_spec(Family::Sp, 3, 3),   make_spec(Family::SOodd, 3, 5),
      make_spec(Family::SOplus, 3, 3), make_spec(Family::SOminus, 3, 3),
      make_spec(Family::SpinPlus, 3, 2), make_spec(Family::SpinMinus, 3, 4)};
  for (const GroupSpec& spec : specs) {
    int jmax = spec.twisted() ? spec.n - 1 : spec.n;
    for (const auto& label : enumerate_classes(spec)) {
      SignedPermutation w = canonical_representative(spec, label);
      for (int j = 1; j <= jmax; ++j)
        CHECK(fixed_weight_count(w, spec, j) == induced_trivial_by_cosets(w, spec, j));
    }
  }
}

TEST_CASE("twisted rank two values") {
  GroupSpec dm = make_spec(Family::SOminus, 2, 3);
  SignedPermutation v1 = canonical_representative(dm, lab({1}, {1}));
  SignedPermutation v2 = canonical_representative(dm, lab({}, {2}));
  CHECK(fixed_weight_count(v1, dm, 1) == 2);
  CHECK(fixed_weight_count(v2, dm, 1) == 0);
  CHECK(induced_trivial_by_cosets(v1, dm, 1) == 2);
  CHECK(induced_trivial_by_cosets(v2, dm, 1) == 0);
}

TEST_CASE("label validity") {
  GroupSpec d = make_spec(Family::SOplus, 4, 3);
  CHECK(label_valid_for(d, lab({2, 2}, {}, true)));
  CHECK_FALSE(label_valid_for(d, lab({3, 1}, {}, true)));
  CHECK_FALSE(label_valid_for(d, lab({3}, {1})));
  CHECK(label_valid_for(d, lab({2}, {1, 1})));
  GroupSpec a = make_spec(Family::GL, 3, 2);
  CHECK_FALSE(label_valid_for(a, lab({2}, {1})));
  CHECK_FALSE(label_valid_for(a, lab({1, 2})));
}
