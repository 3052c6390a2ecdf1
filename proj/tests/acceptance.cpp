// Acceptance suite: one test case per criterion, each printing a pass/fail
// line with its runtime.  Everything is exact; the depths (exhaustive n,
// sample counts) are fixed here and not configurable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "kreweras/verify.hpp"

using namespace kreweras;

namespace {

constexpr std::uint64_t kSeed = 20260809;

void report(int criterion, const char* label, const CheckList& results, double seconds) {
  bool pass = true;
  for (const CheckResult& r : results) pass = pass && r.pass;
  std::printf("[criterion %2d] %-18s %s (%.2fs)\n", criterion, label, pass ? "PASS" : "FAIL",
              seconds);
  for (const CheckResult& r : results) {
    if (!r.pass) std::printf("    failed: %s -- %s\n", r.name.c_str(), r.detail.c_str());
    CHECK(r.pass);
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

}  // namespace

TEST_CASE("criterion 1: counting") {
  Timer t;
  CheckList r{check_counting(5), check_connected_counting(5)};
  report(1, "counting", r, t.seconds());
}

TEST_CASE("criterion 2: order of promotion") {
  Timer t;
  CheckList r{check_theorem_main(4, {5, 6}, 1000, kSeed)};
  report(2, "promotion order", r, t.seconds());
}

TEST_CASE("criterion 3: rotation of the trip permutation") {
  Timer t;
  CheckList r{check_lemma_key(4)};
  report(3, "sigma rotation", r, t.seconds());
}

TEST_CASE("criterion 4: oracle equivalence") {
  Timer t;
  CheckList r{check_oracle_equivalence(3, 5, 1000, kSeed)};
  report(4, "oracle agreement", r, t.seconds());
}

TEST_CASE("criterion 5: evacuation") {
  Timer t;
  CheckList r{check_evacuation(3)};
  report(5, "evacuation", r, t.seconds());
}

TEST_CASE("criterion 6: webs") {
  Timer t;
  CheckList r{check_web_trips(4), check_web_rotation_flip(3), check_web_census(4),
              check_web_recovery(4)};
  report(6, "webs", r, t.seconds());
}

TEST_CASE("criterion 7: worked example") {
  Timer t;
  CheckList r{check_worked_example()};
  report(7, "worked example", r, t.seconds());
}

TEST_CASE("criterion 8: cyclic sieving") {
  Timer t;
  CheckList r{check_csp(4, 6)};
  report(8, "cyclic sieving", r, t.seconds());
}

TEST_CASE("criterion 9: evacuation fixed points") {
  Timer t;
  CheckList r{check_conj_evac(5)};
  report(9, "evac fixed points", r, t.seconds());
}

TEST_CASE("criterion 10: order polynomial") {
  Timer t;
  CheckList r{check_order_polynomial(3, 6)};
  report(10, "order polynomial", r, t.seconds());
}
