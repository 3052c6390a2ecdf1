#include "kreweras/growth.hpp"

#include <cassert>

#include "kreweras/errors.hpp"

namespace kreweras {

IdealTriple IdealTriple::plus(Letter l) const {
  IdealTriple t = *this;
  switch (l) {
    case Letter::A: ++t.a; break;
    case Letter::B: ++t.b; break;
    case Letter::C: ++t.c; break;
  }
  return t;
}

namespace {

// The unit step from x to y, if there is one.
std::optional<Letter> step_letter(const IdealTriple& x, const IdealTriple& y) {
  int da = y.a - x.a, db = y.b - x.b, dc = y.c - x.c;
  if (da == 1 && db == 0 && dc == 0) return Letter::A;
  if (da == 0 && db == 1 && dc == 0) return Letter::B;
  if (da == 0 && db == 0 && dc == 1) return Letter::C;
  return std::nullopt;
}

}  // namespace

std::pair<IdealTriple, std::optional<Letter>> local_rule(const IdealTriple& corner,
                                                         const IdealTriple& up,
                                                         const IdealTriple& diag, int n) {
  auto ei = step_letter(corner, up);
  auto ej = step_letter(up, diag);
  if (!ei || !ej) throw malformed_cell_error("cell labels do not differ by unit steps");
  IdealTriple candidate = corner.plus(*ej);
  if (candidate.in_lattice(n)) return {candidate, std::nullopt};
  if (*ej == Letter::A) throw malformed_cell_error("filled square with an A step");
  return {corner.plus(*ei), *ej};
}

KrewerasWord GrowthWindow::row_word(int r) const {
  const auto& row = labels[r];
  std::string s;
  s.reserve(3 * n);
  for (size_t t = 0; t + 1 < row.size(); ++t) {
    auto l = step_letter(row[t], row[t + 1]);
    assert(l);
    s.push_back(to_char(*l));
  }
  return KrewerasWord::unchecked(std::move(s));
}

bool GrowthWindow::has_label(int x, int y) const {
  int r = -y;
  if (r < 0 || r > rows) return false;
  int t = x - r + 3 * n;
  return t >= 0 && t <= 3 * n;
}

const IdealTriple& GrowthWindow::label_at(int x, int y) const {
  if (!has_label(x, y)) throw index_out_of_range_error("growth label outside the window");
  int r = -y;
  return labels[r][x - r + 3 * n];
}

const GrowthFill& GrowthWindow::fill_in_row(int r) const {
  if (r < 1 || r > rows) throw index_out_of_range_error("growth row outside the window");
  return fills[r - 1];
}

std::optional<GrowthFill> GrowthWindow::fill_at(int x, int y) const {
  int r = -y;
  if (r < 1 || r > rows) return std::nullopt;
  const GrowthFill& f = fills[r - 1];
  if (f.column == x + 3 * n + 1) return f;
  return std::nullopt;
}

GrowthWindow growth_window(const KrewerasWord& w, int k) {
  if (k < 1) throw std::invalid_argument("growth window needs at least one row");
  GrowthWindow g;
  g.n = w.n();
  g.rows = k;
  g.word = w;
  int len = w.size();

  std::vector<IdealTriple> row(len + 1);
  for (int t = 1; t <= len; ++t) row[t] = row[t - 1].plus(w.letter(t));
  g.labels.push_back(row);

  for (int r = 1; r <= k; ++r) {
    const auto& prev = g.labels.back();
    std::vector<IdealTriple> next(len + 1);
    std::optional<GrowthFill> fill;
    for (int t = 0; t + 2 <= len; ++t) {
      auto [right, f] = local_rule(next[t], prev[t + 1], prev[t + 2], g.n);
      next[t + 1] = right;
      if (f) {
        // square position (x, -r) with x = r - 3n + t; column = x + 3n + 1
        if (fill) throw std::logic_error("two filled squares in one growth row");
        fill = GrowthFill{r, r + t + 1, *f};
      }
    }
    next[len] = IdealTriple{g.n, g.n, g.n};
    if (len > 0 && !fill) throw std::logic_error("no filled square in a growth row");
    if (len > 0) g.fills.push_back(*fill);
    g.labels.push_back(std::move(next));
  }
  return g;
}

TripData sigma_eps_from_growth(const KrewerasWord& w) {
  if (w.empty()) throw empty_word_error("sigma_eps_from_growth of the empty word");
  int len = w.size();
  GrowthWindow g = growth_window(w, len);
  std::vector<int> img(len);
  SignVector eps(len);
  for (int i = 1; i <= len; ++i) {
    const GrowthFill& f = g.fill_in_row(i);
    img[i - 1] = (f.column - 1) % len + 1;
    eps[i - 1] = f.letter;
  }
  return {Permutation(std::move(img)), std::move(eps)};
}

KrewerasWord evac_from_growth(const KrewerasWord& w) {
  if (w.empty()) return w;
  int len = w.size();
  GrowthWindow g = growth_window(w, len);
  std::string s;
  s.reserve(len);
  for (int t = 0; t < len; ++t) {
    auto l = step_letter(g.label_at(0, -len + t), g.label_at(0, -len + t + 1));
    if (!l) throw std::logic_error("evacuation column is not a chain");
    s.push_back(to_char(*l));
  }
  return KrewerasWord::unchecked(std::move(s));
}

}  // namespace kreweras
