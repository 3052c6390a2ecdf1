#ifndef KREWERAS_VERIFY_HPP
#define KREWERAS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kreweras {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

using CheckList = std::vector<CheckResult>;

// Each check is exhaustive over all Kreweras words up to the stated n, with
// optional random sampling beyond.  All comparisons are exact.

CheckResult check_counting(int max_n);
CheckResult check_connected_counting(int max_n);
CheckResult check_theorem_main(int exhaustive_n, const std::vector<int>& sample_ns, int samples,
                               std::uint64_t seed);
CheckResult check_promotion_tau(int exhaustive_n);
CheckResult check_perm_props(int exhaustive_n);
CheckResult check_lemma_key(int exhaustive_n);
CheckResult check_oracle_equivalence(int exhaustive_n, int sample_n, int samples,
                                     std::uint64_t seed);
CheckResult check_evacuation(int exhaustive_n);
CheckResult check_growth_symmetries(int small_n, int big_n);
CheckResult check_web_trips(int exhaustive_n);
CheckResult check_web_rotation_flip(int exhaustive_n);
CheckResult check_web_census(int max_n);
CheckResult check_web_recovery(int max_n);
CheckResult check_worked_example();
CheckResult check_csp(int max_orbit_n, int max_poly_n);
CheckResult check_conj_evac(int max_n);
CheckResult check_order_polynomial(int max_n, int max_m);
CheckResult check_series_identities(int n_max);

struct VerifyOptions {
  int max_n = 3;
  int samples = 1000;
  std::uint64_t seed = 20260809;
};

CheckList verify_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace kreweras

#endif
