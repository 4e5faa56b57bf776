#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "torusinv/truncpoly.hpp"

using namespace torusinv;

namespace {

LambdaWeight weight(std::vector<long long> coords) { return LambdaWeight{std::move(coords)}; }

}  // namespace

TEST_CASE("monomial weights") {
  CHECK(monomial_weight(Monomial{{2, 1, 0}}) == weight({1, 1}));
  CHECK(monomial_weight(Monomial{{0, 2}}) == weight({-2}));
  CHECK(monomial_weight(Monomial{{1, 1}}) == weight({0}));
}

TEST_CASE("weight multiplicity formula matches enumeration") {
  for (int n = 2; n <= 4; ++n) {
    for (int p : {2, 3, 5}) {
      std::map<LambdaWeight, long long> counts;
      std::vector<int> c(size_t(n), 0);
      bool done = false;
      while (!done) {
        ++counts[monomial_weight(Monomial{c})];
        int i = 0;
        for (; i < n; ++i) {
          if (++c[size_t(i)] < p) break;
          c[size_t(i)] = 0;
        }
        done = (i == n);
      }
      for (const auto& [w, cnt] : counts) CHECK(weight_multiplicity_rn(w, p, n) == cnt);
      // An unrealizable dominant weight.
      std::vector<long long> big(size_t(n - 1), 0);
      big[0] = p;
      CHECK(weight_multiplicity_rn(weight(big), p, n) == 0);
    }
  }
}

TEST_CASE("restricted weight predicates") {
  CHECK(is_strongly_p_restricted(weight({1, 1}), 3));
  CHECK_FALSE(is_strongly_p_restricted(weight({2, 1}), 3));
  CHECK_FALSE(is_strongly_p_restricted(weight({-1, 3}), 3));
  CHECK(is_strongly_q_restricted(weight({4}), 3, 2));        // digits 1, 1
  CHECK(is_strongly_q_restricted(weight({8}), 3, 2));        // digits 2, 2
  CHECK_FALSE(is_strongly_q_restricted(weight({9}), 3, 2));  // out of range
  CHECK_FALSE(is_strongly_q_restricted(weight({5, 5}), 3, 2));  // digit (2,2) too heavy
  CHECK(is_strongly_q_restricted(weight({0, 0}), 2, 1));
}

TEST_CASE("steinberg digits") {
  auto d = steinberg_digits(weight({7, 1}), 3, 2);
  REQUIRE(d.has_value());
  CHECK((*d)[0] == weight({1, 1}));
  CHECK((*d)[1] == weight({2, 0}));
  CHECK_FALSE(steinberg_digits(weight({9}), 3, 2).has_value());
  CHECK_FALSE(steinberg_digits(weight({-1}), 3, 2).has_value());
}

TEST_CASE("steinberg expansion uniqueness at the special weights") {
  auto exps = steinberg_expansions(weight({0}), 2, 2, 2);
  REQUIRE(exps.size() == 1);
  CHECK(exps[0][0] == weight({0}));
  CHECK(exps[0][1] == weight({0}));

  exps = steinberg_expansions(weight({3}), 2, 2, 2);  // (q-1)lambda_1, q = 4
  REQUIRE(exps.size() == 1);
  CHECK(exps[0][0] == weight({1}));
  CHECK(exps[0][1] == weight({1}));

  // A non-special strongly q-restricted weight can decompose in several ways.
  CHECK(steinberg_expansions(weight({2}), 3, 2, 2).size() == 2);
}

TEST_CASE("d0 criterion") {
  CHECK(d0_for_special_weight(2, 3, 1) == 1);
  CHECK(d0_for_special_weight(3, 2, 1) == 0);
  CHECK(d0_for_special_weight(3, 2, 2) == 0);
  CHECK(d0_for_special_weight(3, 7, 1) == 1);
  CHECK(d0_for_special_weight(4, 5, 1) == 1);
  CHECK_THROWS_AS(d0_for_special_weight(3, 2, 3), std::invalid_argument);
}

TEST_CASE("special weight helpers") {
  CHECK(special_weight(3, 4, 2) == weight({0, 3}));
  CHECK(match_special_weight(weight({0, 3}), 3, 4) == 2);
  CHECK_FALSE(match_special_weight(weight({1, 3}), 3, 4).has_value());
  CHECK_FALSE(match_special_weight(weight({0, 0}), 3, 4).has_value());
}

TEST_CASE("trivial monomial weight counts") {
  GroupSpec gl = make_spec(Family::GL, 2, 3);
  CHECK(count_trivial_monomial_weights(gl, WeylClassLabel{{2}, {}, false}) == 2);
  CHECK(count_trivial_monomial_weights(gl, WeylClassLabel{{1, 1}, {}, false}) == 4);
  GroupSpec sl = make_spec(Family::SL, 2, 3);
  CHECK(count_trivial_monomial_weights(sl, WeylClassLabel{{1, 1}, {}, false}) == 5);
  CHECK(count_trivial_monomial_weights(sl, WeylClassLabel{{2}, {}, false}) == 3);
}
