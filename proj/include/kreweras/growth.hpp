#ifndef KREWERAS_GROWTH_HPP
#define KREWERAS_GROWTH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "kreweras/bump.hpp"
#include "kreweras/word.hpp"

namespace kreweras {

/// An order ideal of V(n) encoded by how far it reaches up each of the three
/// chains.  Membership requires 0 <= b <= a <= n and 0 <= c <= a.
struct IdealTriple {
  int a = 0;
  int b = 0;
  int c = 0;

  bool in_lattice(int n) const { return 0 <= b && b <= a && 0 <= c && c <= a && a <= n; }
  IdealTriple plus(Letter l) const;
  int total() const { return a + b + c; }

  friend bool operator==(const IdealTriple& x, const IdealTriple& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

/// One local-rule application.  Given the corner I, I+e_i above it and
/// I+e_i+e_j diagonally, the fourth corner is I+e_j when that stays in the
/// lattice, and otherwise I+e_i with the square filled by j.
/// Throws malformed_cell_error when the inputs do not differ by unit steps.
std::pair<IdealTriple, std::optional<Letter>> local_rule(const IdealTriple& corner,
                                                         const IdealTriple& up,
                                                         const IdealTriple& diag, int n);

struct GrowthFill {
  int row = 0;     // squares between chain rows row-1 and row
  int column = 0;  // column j; the square's lower-left x is j - 3n - 1
  Letter letter = Letter::B;
};

/// A finite window of the infinite growth diagram: chain rows 0..rows, where
/// chain row r lists the ideals along y = -r and reads as promote^r(w).
/// Coordinates follow the band -y-3n <= x <= -y; labels[r][t] sits at
/// (x, y) = (r - 3n + t, -r).
struct GrowthWindow {
  int n = 0;
  int rows = 0;
  KrewerasWord word;
  std::vector<std::vector<IdealTriple>> labels;
  std::vector<GrowthFill> fills;  // exactly one per row 1..rows

  KrewerasWord row_word(int r) const;
  const IdealTriple& label_at(int x, int y) const;
  bool has_label(int x, int y) const;
  const GrowthFill& fill_in_row(int r) const;
  std::optional<GrowthFill> fill_at(int x, int y) const;  // square position
};

GrowthWindow growth_window(const KrewerasWord& w, int k);

/// Reads (sigma, epsilon) off the window: the fill of row i in column j gives
/// sigma(i) = j reduced into {1..3n} and epsilon(i) = the fill letter.
/// Independent of the bump-diagram trip simulation.
TripData sigma_eps_from_growth(const KrewerasWord& w);

/// Reads evacuation off the chain up the column x = 0.
KrewerasWord evac_from_growth(const KrewerasWord& w);

}  // namespace kreweras

#endif
