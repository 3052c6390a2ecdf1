#include <doctest.h>

#include <map>

#include "kreweras/errors.hpp"
#include "kreweras/growth.hpp"
#include "kreweras/word.hpp"

using namespace kreweras;

TEST_CASE("local rule cases") {
  // (0,1,0) leaves the lattice, so the square is filled with B
  auto [r1, f1] = local_rule({0, 0, 0}, {1, 0, 0}, {1, 1, 0}, 3);
  CHECK(r1 == IdealTriple{1, 0, 0});
  REQUIRE(f1.has_value());
  CHECK(*f1 == Letter::B);

  auto [r2, f2] = local_rule({1, 0, 0}, {1, 1, 0}, {2, 1, 0}, 3);
  CHECK(r2 == IdealTriple{2, 0, 0});
  CHECK_FALSE(f2.has_value());

  auto [r3, f3] = local_rule({1, 1, 1}, {2, 1, 1}, {2, 2, 1}, 3);
  CHECK(r3 == IdealTriple{2, 1, 1});
  REQUIRE(f3.has_value());
  CHECK(*f3 == Letter::B);

  CHECK_THROWS_AS((void)local_rule({0, 0, 0}, {2, 0, 0}, {2, 1, 0}, 3), malformed_cell_error);
}

TEST_CASE("rows of the window are the promotion iterates") {
  KrewerasWord w = KrewerasWord::parse("AABBCACCB");
  GrowthWindow g = growth_window(w, 9);
  KrewerasWord v = w;
  for (int r = 0; r <= 9; ++r) {
    CHECK(g.row_word(r) == v);
    if (r < 9) v = promote(v);
  }

  GrowthWindow g2 = growth_window(KrewerasWord::parse("ABC"), 2);
  CHECK(g2.row_word(1).str() == "ACB");
  CHECK(g2.row_word(2).str() == "ABC");
}

TEST_CASE("boundary labels of the window") {
  KrewerasWord w = KrewerasWord::parse("ABCACB");
  GrowthWindow g = growth_window(w, 4);
  for (int r = 0; r <= 4; ++r) {
    CHECK(g.labels[r].front() == IdealTriple{0, 0, 0});
    CHECK(g.labels[r].back() == IdealTriple{2, 2, 2});
  }
  CHECK(g.label_at(-6, 0) == IdealTriple{0, 0, 0});
  CHECK(g.label_at(0, 0) == IdealTriple{2, 2, 2});
  CHECK_THROWS_AS((void)g.label_at(1, 0), index_out_of_range_error);
}

TEST_CASE("sigma and epsilon read off the growth diagram") {
  TripData td = sigma_eps_from_growth(KrewerasWord::parse("AABBCACCB"));
  CHECK(td.sigma.one_line() == std::vector<int>{4, 3, 8, 5, 2, 7, 1, 9, 6});
  std::string eps;
  for (Letter l : td.epsilon) eps.push_back(to_char(l));
  CHECK(eps == "BBCCBCBBC");

  TripData tp = sigma_eps_from_growth(KrewerasWord::parse("ABACACCBB"));
  CHECK(tp.sigma.one_line() == std::vector<int>{2, 7, 4, 1, 6, 9, 8, 5, 3});
}

TEST_CASE("growth oracle equals the bump oracle, small n") {
  for (int n = 1; n <= 3; ++n)
    for (const KrewerasWord& w : enumerate_words(n))
      CHECK(sigma_eps_from_growth(w) == trip_permutation(w));
}

TEST_CASE("evacuation read off the column") {
  CHECK(evac_from_growth(KrewerasWord::parse("AABBCACCB")).str() == "ABACACCBB");
  CHECK(evac_from_growth(KrewerasWord::parse("ABC")).str() == "ACB");
  for (int n = 1; n <= 3; ++n)
    for (const KrewerasWord& w : enumerate_words(n)) CHECK(evac_from_growth(w) == evacuate(w));
}

TEST_CASE("translation symmetry under promotion, small n") {
  for (int n = 1; n <= 2; ++n)
    for (const KrewerasWord& w : enumerate_words(n)) {
      GrowthWindow gw = growth_window(w, 3 * n + 1);
      GrowthWindow gp = growth_window(promote(w), 3 * n);
      for (int r = 0; r <= 3 * n; ++r) CHECK(gp.labels[r] == gw.labels[r + 1]);
      for (int r = 1; r <= 3 * n; ++r) {
        CHECK(gp.fill_in_row(r).column == gw.fill_in_row(r + 1).column - 1);
        CHECK(gp.fill_in_row(r).letter == gw.fill_in_row(r + 1).letter);
      }
    }
}

TEST_CASE("reflection symmetry under evacuation, small n") {
  for (int n = 1; n <= 2; ++n)
    for (const KrewerasWord& w : enumerate_words(n)) {
      GrowthWindow gw = growth_window(w, 3 * n);
      GrowthWindow ge = growth_window(evacuate(w), 3 * n);
      for (int y = -3 * n; y <= 0; ++y)
        for (int x = -y - 3 * n; x <= -y; ++x)
          if (ge.has_label(x, y) && gw.has_label(y, x)) CHECK(ge.label_at(x, y) == gw.label_at(y, x));
    }
}

TEST_CASE("fill periodicity and row/column letter flips, small n") {
  for (int n = 1; n <= 2; ++n)
    for (const KrewerasWord& w : enumerate_words(n)) {
      int len = 3 * n;
      GrowthWindow g = growth_window(w, 2 * len);
      for (int i = 1; i <= len; ++i) {
        CHECK(g.fill_in_row(i + len).column == g.fill_in_row(i).column + len);
        CHECK(g.fill_in_row(i + len).letter == negate(g.fill_in_row(i).letter));
      }
      std::map<int, Letter> by_column;
      for (const GrowthFill& f : g.fills) by_column.emplace(f.column, f.letter);
      for (int i = len + 1; i <= 2 * len; ++i) {
        REQUIRE(by_column.count(i) == 1);
        CHECK(by_column[i] == negate(g.fill_in_row(i).letter));
      }
    }
}

TEST_CASE("the filled square of each row sits at iota") {
  for (const KrewerasWord& w : enumerate_words(2)) {
    GrowthWindow g = growth_window(w, 6);
    KrewerasWord v = w;
    for (int i = 1; i <= 6; ++i) {
      CHECK(g.fill_in_row(i).column == iota(v) + i - 1);
      CHECK(g.fill_in_row(i).letter == v.letter(iota(v)));
      v = promote(v);
    }
  }
}

TEST_CASE("fill_at answers by square position") {
  GrowthWindow g = growth_window(KrewerasWord::parse("ABC"), 3);
  const GrowthFill& f = g.fill_in_row(1);
  CHECK(f.column == 2);
  CHECK(f.letter == Letter::B);
  auto hit = g.fill_at(f.column - 3 * g.n - 1, -1);
  REQUIRE(hit.has_value());
  CHECK(hit->column == f.column);
  CHECK_FALSE(g.fill_at(0, -1).has_value());
}
