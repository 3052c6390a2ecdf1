#include "kreweras/bump.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "kreweras/errors.hpp"

namespace kreweras {

std::vector<int> Matching::support() const {
  std::vector<int> s;
  s.reserve(2 * arcs.size());
  for (const Arc& a : arcs) {
    s.push_back(a.opener);
    s.push_back(a.closer);
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::pair<Matching, Matching> matchings(const KrewerasWord& w) {
  Matching blue, crimson;
  std::vector<int> stack_b, stack_c;
  for (int i = 1; i <= w.size(); ++i) {
    switch (w.letter(i)) {
      case Letter::A:
        stack_b.push_back(i);
        stack_c.push_back(i);
        break;
      case Letter::B:
        blue.arcs.push_back({stack_b.back(), i, ArcColor::blue});
        stack_b.pop_back();
        break;
      case Letter::C:
        crimson.arcs.push_back({stack_c.back(), i, ArcColor::crimson});
        stack_c.pop_back();
        break;
    }
  }
  assert(stack_b.empty() && stack_c.empty());
  auto by_opener = [](const Arc& x, const Arc& y) { return x.opener < y.opener; };
  std::sort(blue.arcs.begin(), blue.arcs.end(), by_opener);
  std::sort(crimson.arcs.begin(), crimson.arcs.end(), by_opener);
  return {std::move(blue), std::move(crimson)};
}

namespace {

// Arc (i,j) is realized as the semicircle centered at (i+j)/2 with radius
// (j-i)/2; two crossing arcs meet at x = (cd-ab)/((c+d)-(a+b)), which
// degenerates to the shared opener for boundary crossings.
Crossing make_crossing(const std::vector<Arc>& arcs, int outer, int inner) {
  const Arc& o = arcs[outer];
  const Arc& in = arcs[inner];
  Crossing cr;
  cr.outer = outer;
  cr.inner = inner;
  cr.kind = o.opener == in.opener ? CrossingKind::boundary : CrossingKind::interior;
  std::int64_t a = o.opener, b = o.closer, c = in.opener, d = in.closer;
  cr.x = Rational(c * d - a * b, (c + d) - (a + b));
  Rational m(a + b, 2), r(b - a, 2);
  Rational dx = cr.x - m;
  cr.y_sq = r * r - dx * dx;
  return cr;
}

}  // namespace

int BumpDiagram::arc_at_closer(int i) const {
  for (int k = 0; k < static_cast<int>(arcs.size()); ++k)
    if (arcs[k].closer == i) return k;
  throw index_out_of_range_error("position " + std::to_string(i) + " is not a closer");
}

std::pair<int, int> BumpDiagram::arcs_at_opener(int i) const {
  int blue = -1, crimson = -1;
  for (int k = 0; k < static_cast<int>(arcs.size()); ++k) {
    if (arcs[k].opener != i) continue;
    (arcs[k].color == ArcColor::blue ? blue : crimson) = k;
  }
  if (blue < 0 || crimson < 0)
    throw index_out_of_range_error("position " + std::to_string(i) + " is not an opener");
  return {blue, crimson};
}

BumpDiagram bump_diagram(const KrewerasWord& w) {
  BumpDiagram d;
  d.word = w;
  auto [blue, crimson] = matchings(w);
  d.arcs = std::move(blue.arcs);
  d.arcs.insert(d.arcs.end(), crimson.arcs.begin(), crimson.arcs.end());

  int na = static_cast<int>(d.arcs.size());
  for (int p = 0; p < na; ++p) {
    for (int q = 0; q < na; ++q) {
      const Arc& x = d.arcs[p];
      const Arc& y = d.arcs[q];
      // crossing with (x) in the outer role: x.opener <= y.opener < x.closer < y.closer
      bool crosses = x.opener <= y.opener && y.opener < x.closer && x.closer < y.closer;
      if (!crosses) continue;
      d.crossings.push_back(make_crossing(d.arcs, p, q));
    }
  }

  d.arc_order.assign(na, {});
  for (int ci = 0; ci < static_cast<int>(d.crossings.size()); ++ci) {
    d.arc_order[d.crossings[ci].outer].push_back(ci);
    d.arc_order[d.crossings[ci].inner].push_back(ci);
  }
  for (int k = 0; k < na; ++k) {
    auto& order = d.arc_order[k];
    std::sort(order.begin(), order.end(),
              [&](int u, int v) { return d.crossings[u].x < d.crossings[v].x; });
    for (size_t pos = 0; pos + 1 < order.size(); ++pos)
      if (d.crossings[order[pos]].x == d.crossings[order[pos + 1]].x)
        throw std::logic_error("coincident crossings along one arc");
    for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
      Crossing& cr = d.crossings[order[pos]];
      (cr.outer == k ? cr.pos_in_outer : cr.pos_in_inner) = pos;
    }
  }
  return d;
}

int trip(const BumpDiagram& d, int i) {
  if (i < 1 || i > d.word.size())
    throw index_out_of_range_error("trip start " + std::to_string(i) + " outside the word");

  // State: on arc `a`, moving right (toward the closer) or left, with `k` the
  // index in arc_order[a] of the next crossing ahead.
  int a, k;
  bool right;
  if (d.word.letter(i) == Letter::A) {
    auto [blue, crimson] = d.arcs_at_opener(i);
    a = d.arcs[blue].closer < d.arcs[crimson].closer ? blue : crimson;
    right = true;
    k = 0;
  } else {
    a = d.arc_at_closer(i);
    right = false;
    k = static_cast<int>(d.arc_order[a].size()) - 1;
  }

  std::set<std::tuple<int, int, bool>> seen;
  for (;;) {
    if (!seen.insert({a, k, right}).second)
      throw non_terminating_trip_error("trip revisited a state; rules of the road broken");
    if (k < 0) return d.arcs[a].opener;
    if (k >= static_cast<int>(d.arc_order[a].size())) return d.arcs[a].closer;

    const Crossing& cr = d.crossings[d.arc_order[a][k]];
    if (a == cr.outer) {
      if (right) {
        ++k;  // from a: continue toward b
      } else {
        a = cr.inner;  // from b: right turn toward d
        right = true;
        k = cr.pos_in_inner + 1;
      }
    } else {
      if (right) {
        a = cr.outer;  // from c: left turn toward a
        right = false;
        k = cr.pos_in_outer - 1;
      } else {
        --k;  // from d: continue toward c
      }
    }
  }
}

TripData trip_permutation(const KrewerasWord& w) {
  if (w.empty()) throw empty_word_error("trip_permutation of the empty word");
  BumpDiagram d = bump_diagram(w);
  int len = w.size();
  std::vector<int> img(len);
  for (int i = 1; i <= len; ++i) img[i - 1] = trip(d, i);
  Permutation sigma(std::move(img));

  SignVector eps(len);
  for (int i = 1; i <= len; ++i) {
    Letter l = w.letter(sigma(i));
    eps[i - 1] = l != Letter::A ? l : w.letter(sigma(sigma(i)));
    if (eps[i - 1] == Letter::A) throw std::logic_error("epsilon produced an A");
  }

  Permutation inv = sigma.inverse();
  for (int i = 1; i <= len; ++i) {
    if (sigma(i) == i) throw std::logic_error("trip permutation has a fixed point");
    if ((inv(i) > i) != (w.letter(i) == Letter::A))
      throw std::logic_error("anti-exceedances of sigma do not match the A positions");
  }
  return {std::move(sigma), std::move(eps)};
}

KrewerasWord word_from_sigma_epsilon(const Permutation& sigma, const SignVector& epsilon) {
  int m = sigma.size();
  if (static_cast<int>(epsilon.size()) != m)
    throw invalid_reconstruction_error("sigma and epsilon lengths differ");
  Permutation inv = sigma.inverse();
  std::string s(m, 'A');
  for (int i = 1; i <= m; ++i)
    if (inv(i) <= i) s[i - 1] = to_char(epsilon[inv(i) - 1]);
  try {
    return KrewerasWord::parse(s);
  } catch (const error& e) {
    throw invalid_reconstruction_error(std::string("reconstruction is not a Kreweras word: ") +
                                       e.what());
  }
}

}  // namespace kreweras
