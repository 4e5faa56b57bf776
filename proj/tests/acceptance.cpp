#include <cstdio>
#include <string>
#include <vector>

#include "torusinv/verify.hpp"

// One line per acceptance criterion; exit status 0 only when all pass.

using namespace torusinv;

namespace {

int failures_total = 0;

void report(int index, const std::string& name, const std::vector<VerifyReport>& parts) {
  long long cells = 0, fails = 0;
  for (const auto& r : parts) {
    cells += (long long)r.cells.size();
    fails += r.fail_count();
  }
  std::printf("%s criterion-%02d %s: %lld cells, %lld failures\n",
              fails == 0 ? "PASS" : "FAIL", index, name.c_str(), cells, fails);
  if (fails != 0) {
    ++failures_total;
    long long shown = 0;
    for (const auto& r : parts) {
      for (const auto& c : r.cells) {
        if (c.pass || shown >= 10) continue;
        std::printf("    %s expected=%s actual=%s\n", c.key.c_str(), c.expected.c_str(),
                    c.actual.c_str());
        ++shown;
      }
    }
  }
  std::fflush(stdout);
}

}  // namespace

int main() {
  const std::vector<long long> all_q = {2, 3, 4, 5, 7, 8, 9};
  const std::vector<long long> small_q = {2, 3, 4, 5};
  const std::vector<long long> pm_q = {2, 4, 3, 9, 5, 25};  // p in {2,3,5}, m <= 2
  const std::vector<Family> all_fams = {Family::GL,      Family::SL,      Family::Sp,
                                        Family::SOodd,   Family::SOplus,  Family::SOminus,
                                        Family::SpinPlus, Family::SpinMinus};
  const std::vector<Family> type_a = {Family::GL, Family::SL};

  report(1, "induced-trivial identity",
         {verify_th1(4, all_q, all_fams), verify_th1(5, all_q, type_a)});

  report(2, "element-level oracle",
         {verify_th1_element_oracle(4, all_q, all_fams, 1'000'000),
          verify_th1_element_oracle(5, all_q, type_a, 1'000'000)});

  report(3, "unipotent part vs induced steinberg",
         {verify_th2(4, all_q, all_fams), verify_th2(5, all_q, type_a)});

  report(4, "torus orbit counts", {verify_pm1(3, small_q, 1'000'000), verify_pm1(4, {2, 3}, 1'000'000)});

  report(5, "steinberg inner products", {verify_pp3(6, all_q)});

  report(6, "subset sum identity", {verify_pm2(8)});

  report(7, "nondivisibility", {verify_au1(6, all_q)});

  report(8, "monomial weight multiplicities",
         {verify_monomial_weights(4, pm_q, 10'000'000),
          verify_digit_uniqueness(4, pm_q, 10'000'000)});

  report(9, "trivial weight counts", {verify_m1m(4, pm_q, 10'000'000)});

  report(10, "decomposition d0 and per-torus values", {verify_th5(5, pm_q)});

  report(11, "exterior power fixed spaces", {verify_ext_power(6)});

  report(12, "steinberg consistency",
         {verify_steinberg_consistency(4, all_q, all_fams),
          verify_steinberg_consistency(5, all_q, type_a)});

  return failures_total == 0 ? 0 : 1;
}
