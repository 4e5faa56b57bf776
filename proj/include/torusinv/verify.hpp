#pragma once

#include <functional>
#include <string>
#include <vector>

#include "torusinv/weyl.hpp"

// Verification sweeps: each theorem identity expands into a grid of cells,
// every cell compares a closed-form value with an independent recomputation.
// Cells run on a worker pool (TORUSINV_THREADS overrides the size) and are
// reported in sorted key order.

namespace torusinv {

struct VerifyCell {
  std::string key;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::string theorem;
  std::vector<VerifyCell> cells;

  bool all_pass() const;
  long long fail_count() const;
};

using CellJob = std::function<VerifyCell()>;

// Runs the jobs concurrently and returns the cells sorted by key.  A job
// that throws becomes a FAIL cell carrying the exception message.
std::vector<VerifyCell> run_cells(std::vector<CellJob> jobs);

// All families valid for the given rank and field size.
std::vector<GroupSpec> specs_for(int n, long long q);

const std::vector<std::string>& known_theorems();

// Dispatch by theorem id ("th1", "th2", "th5", "dd3", "pm1", "pm2", "pp3",
// "au1", "zw1", "d1d", "zz1", "m1m", "in8", "ext-power").  max_enum bounds
// the brute-force enumerations (element counts); larger cells are skipped.
VerifyReport verify_theorem(const std::string& id, int max_n,
                            const std::vector<long long>& q_list,
                            long long max_enum = 1'000'000);

VerifyReport verify_th1(int max_n, const std::vector<long long>& q_list,
                        const std::vector<Family>& families);
VerifyReport verify_th1_element_oracle(int max_n, const std::vector<long long>& q_list,
                                       const std::vector<Family>& families,
                                       long long max_enum);
VerifyReport verify_th2(int max_n, const std::vector<long long>& q_list,
                        const std::vector<Family>& families);
VerifyReport verify_th5(int max_n, const std::vector<long long>& q_list);
VerifyReport verify_pm1(int max_n, const std::vector<long long>& q_list, long long max_enum);
VerifyReport verify_pm2(int max_n);
VerifyReport verify_pp3(int max_n, const std::vector<long long>& q_list);
VerifyReport verify_au1(int max_n, const std::vector<long long>& q_list);
VerifyReport verify_monomial_weights(int max_n, const std::vector<long long>& q_list,
                                     long long max_enum);
VerifyReport verify_digit_uniqueness(int max_n, const std::vector<long long>& q_list,
                                     long long max_enum);
VerifyReport verify_m1m(int max_n, const std::vector<long long>& q_list, long long max_enum);
VerifyReport verify_in8(int max_n, const std::vector<long long>& q_list);
VerifyReport verify_ext_power(int max_n);
VerifyReport verify_steinberg_consistency(int max_n, const std::vector<long long>& q_list,
                                          const std::vector<Family>& families);

}  // namespace torusinv
