#include <doctest.h>

#include <map>
#include <set>

#include "kreweras/bump.hpp"
#include "kreweras/errors.hpp"
#include "kreweras/growth.hpp"
#include "kreweras/word.hpp"

using namespace kreweras;

namespace {

std::set<std::pair<int, int>> arc_pairs(const Matching& m) {
  std::set<std::pair<int, int>> s;
  for (const Arc& a : m.arcs) s.insert({a.opener, a.closer});
  return s;
}

std::string eps_str(const SignVector& e) {
  std::string s;
  for (Letter l : e) s.push_back(to_char(l));
  return s;
}

}  // namespace

TEST_CASE("matchings of the running example") {
  auto [mb, mc] = matchings(KrewerasWord::parse("AABBCACCB"));
  CHECK(arc_pairs(mb) == std::set<std::pair<int, int>>{{1, 4}, {2, 3}, {6, 9}});
  CHECK(arc_pairs(mc) == std::set<std::pair<int, int>>{{1, 8}, {2, 5}, {6, 7}});
  CHECK(mb.support() == std::vector<int>{1, 2, 3, 4, 6, 9});
}

TEST_CASE("matchings of small words") {
  auto [mb, mc] = matchings(KrewerasWord::parse("ABC"));
  CHECK(arc_pairs(mb) == std::set<std::pair<int, int>>{{1, 2}});
  CHECK(arc_pairs(mc) == std::set<std::pair<int, int>>{{1, 3}});
  auto [eb, ec] = matchings(KrewerasWord{});
  CHECK(eb.arcs.empty());
  CHECK(ec.arcs.empty());
}

TEST_CASE("crossings of the running example") {
  BumpDiagram d = bump_diagram(KrewerasWord::parse("AABBCACCB"));
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> interior, boundary;
  for (const Crossing& c : d.crossings) {
    auto key = std::make_pair(std::make_pair(d.arcs[c.outer].opener, d.arcs[c.outer].closer),
                              std::make_pair(d.arcs[c.inner].opener, d.arcs[c.inner].closer));
    (c.kind == CrossingKind::interior ? interior : boundary).insert(key);
  }
  CHECK(interior ==
        std::set<std::pair<std::pair<int, int>, std::pair<int, int>>>{{{1, 4}, {2, 5}},
                                                                      {{1, 8}, {6, 9}}});
  CHECK(boundary ==
        std::set<std::pair<std::pair<int, int>, std::pair<int, int>>>{
            {{2, 3}, {2, 5}}, {{1, 4}, {1, 8}}, {{6, 7}, {6, 9}}});
}

TEST_CASE("crossing coordinates are exact") {
  BumpDiagram d = bump_diagram(KrewerasWord::parse("AABBCACCB"));
  for (const Crossing& c : d.crossings) {
    if (c.kind == CrossingKind::boundary) {
      CHECK(c.x == Rational(d.arcs[c.outer].opener));
      CHECK(c.y_sq == Rational(0));
    } else {
      CHECK(Rational(d.arcs[c.inner].opener) < c.x);
      CHECK(c.x < Rational(d.arcs[c.outer].closer));
      CHECK(Rational(0) < c.y_sq);
    }
  }
  // {(1,4),(2,5)} crosses at x = (2*5-1*4)/(7-5) = 3
  bool found = false;
  for (const Crossing& c : d.crossings)
    if (c.kind == CrossingKind::interior && d.arcs[c.outer].closer == 4) {
      CHECK(c.x == Rational(3));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("bump diagrams of tiny words") {
  BumpDiagram d = bump_diagram(KrewerasWord::parse("ABC"));
  REQUIRE(d.crossings.size() == 1);
  CHECK(d.crossings[0].kind == CrossingKind::boundary);

  BumpDiagram d2 = bump_diagram(KrewerasWord::parse("ABCABC"));
  int boundary = 0;
  for (const Crossing& c : d2.crossings)
    if (c.kind == CrossingKind::boundary) ++boundary;
  CHECK(boundary == 2);  // one per opener, at positions 1 and 4
  for (const Crossing& c : d2.crossings)
    if (c.kind == CrossingKind::boundary)
      CHECK((d2.arcs[c.outer].opener == 1 || d2.arcs[c.outer].opener == 4));
}

TEST_CASE("every opener has exactly one boundary crossing") {
  for (const KrewerasWord& w : enumerate_words(3)) {
    BumpDiagram d = bump_diagram(w);
    std::map<int, int> per_opener;
    for (const Crossing& c : d.crossings)
      if (c.kind == CrossingKind::boundary) ++per_opener[d.arcs[c.outer].opener];
    for (int i = 1; i <= w.size(); ++i)
      if (w.letter(i) == Letter::A) CHECK(per_opener[i] == 1);
  }
}

TEST_CASE("trip walk-throughs from the running example") {
  BumpDiagram d = bump_diagram(KrewerasWord::parse("AABBCACCB"));
  CHECK(trip(d, 1) == 4);
  CHECK(trip(d, 4) == 5);
  CHECK(trip(d, 3) == 8);
  CHECK(trip(d, 7) == 1);
  CHECK_THROWS_AS(trip(d, 0), index_out_of_range_error);
  CHECK_THROWS_AS(trip(d, 10), index_out_of_range_error);
}

TEST_CASE("trip permutation and sign vector of the running example") {
  TripData td = trip_permutation(KrewerasWord::parse("AABBCACCB"));
  CHECK(td.sigma.one_line() == std::vector<int>{4, 3, 8, 5, 2, 7, 1, 9, 6});
  CHECK(eps_str(td.epsilon) == "BBCCBCBBC");

  TripData tp = trip_permutation(KrewerasWord::parse("ABACACCBB"));
  CHECK(tp.sigma.one_line() == std::vector<int>{2, 7, 4, 1, 6, 9, 8, 5, 3});
  CHECK(eps_str(tp.epsilon) == "BCCBCBBCC");
}

TEST_CASE("the two oracles agree on ABC") {
  TripData td = trip_permutation(KrewerasWord::parse("ABC"));
  CHECK(td.sigma.one_line() == std::vector<int>{2, 3, 1});
  TripData tg = sigma_eps_from_growth(KrewerasWord::parse("ABC"));
  CHECK(td == tg);
  CHECK(eps_str(td.epsilon) == "BCB");
}

TEST_CASE("sigma rotates and epsilon shifts under promotion, small n") {
  for (int n = 1; n <= 3; ++n)
    for (const KrewerasWord& w : enumerate_words(n)) {
      TripData td = trip_permutation(w);
      TripData tp = trip_permutation(promote(w));
      CHECK(tp.sigma == rot(td.sigma));
      CHECK(tp.epsilon == shift_negate(td.epsilon));
    }
}

TEST_CASE("reconstruction from sigma and epsilon") {
  SignVector eps{Letter::B, Letter::B, Letter::C, Letter::C, Letter::B,
                 Letter::C, Letter::B, Letter::B, Letter::C};
  KrewerasWord w =
      word_from_sigma_epsilon(Permutation(std::vector<int>{4, 3, 8, 5, 2, 7, 1, 9, 6}), eps);
  CHECK(w.str() == "AABBCACCB");

  for (const KrewerasWord& v : enumerate_words(3)) {
    TripData td = trip_permutation(v);
    CHECK(word_from_sigma_epsilon(td.sigma, td.epsilon) == v);
  }

  CHECK_THROWS_AS((void)word_from_sigma_epsilon(Permutation(std::vector<int>{2, 1}),
                                                SignVector{Letter::B, Letter::B}),
                  invalid_reconstruction_error);
}

TEST_CASE("basic trip permutation properties, small n") {
  for (int n = 1; n <= 3; ++n)
    for (const KrewerasWord& w : enumerate_words(n)) {
      TripData td = trip_permutation(w);
      Permutation inv = td.sigma.inverse();
      for (int i = 1; i <= w.size(); ++i) {
        CHECK(td.sigma(i) != i);
        CHECK((inv(i) > i) == (w.letter(i) == Letter::A));
        if (w.letter(i) == Letter::A) {
          CHECK(w.letter(td.sigma(i)) != Letter::A);
        } else {
          Letter ls = w.letter(td.sigma(i));
          bool ok = ls == negate(w.letter(i)) ||
                    (ls == Letter::A && w.letter(td.sigma(td.sigma(i))) == negate(w.letter(i)));
          CHECK(ok);
        }
      }
    }
}

TEST_CASE("evacuation acts on sigma by reverse-complemented inversion, small n") {
  for (int n = 1; n <= 2; ++n)
    for (const KrewerasWord& w : enumerate_words(n)) {
      TripData td = trip_permutation(w);
      TripData te = trip_permutation(evacuate(w));
      CHECK(te.sigma == rc(td.sigma.inverse()));
      SignVector expected(td.epsilon.rbegin(), td.epsilon.rend());
      for (Letter& l : expected) l = negate(l);
      CHECK(te.epsilon == expected);
      // the evacuation formula reads the word along sigma in reverse
      std::string formula;
      for (int i = w.size(); i >= 1; --i) formula.push_back(to_char(w.letter(td.sigma(i))));
      CHECK(formula == evacuate(w).str());
    }
}
