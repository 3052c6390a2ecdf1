#include "kreweras/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "kreweras/bump.hpp"
#include "kreweras/enumeration.hpp"
#include "kreweras/errors.hpp"
#include "kreweras/growth.hpp"
#include "kreweras/web.hpp"
#include "kreweras/word.hpp"

namespace kreweras {

namespace {

struct Failure {
  bool failed = false;
  std::string what;
  void note(const std::string& msg) {
    if (!failed) what = msg;
    failed = true;
  }
};

CheckResult result(const std::string& name, const Failure& f, const std::string& ok_detail) {
  return {name, !f.failed, f.failed ? f.what : ok_detail};
}

KrewerasWord promote_steps(KrewerasWord w, int k) {
  for (int i = 0; i < k; ++i) w = promote(w);
  return w;
}

KrewerasWord tau_sweep_promotion(const KrewerasWord& w) {
  KrewerasWord v = w;
  for (int i = 1; i <= w.size() - 1; ++i) v = tau(v, i);
  return v;
}

}  // namespace

CheckResult check_counting(int max_n) {
  static const long long table[] = {1, 2, 16, 192, 2816, 46592, 835584};
  Failure f;
  long long seen = 0;
  for (int n = 0; n <= max_n && !f.failed; ++n) {
    long long count = 0;
    std::string prev;
    bool ordered = true;
    for_each_word(n, [&](const KrewerasWord& w) {
      ++count;
      if (!prev.empty() && !(prev < w.str())) ordered = false;
      prev = w.str();
    });
    seen += count;
    if (!ordered) f.note("enumeration out of lexicographic order at n=" + std::to_string(n));
    if (BigInt(count) != kreweras_count(n))
      f.note("count mismatch with formula at n=" + std::to_string(n));
    if (n < static_cast<int>(std::size(table)) && count != table[n])
      f.note("count mismatch with paper coefficients at n=" + std::to_string(n));
  }
  return result("word counts 2,16,192,... up to n=" + std::to_string(max_n), f,
                std::to_string(seen) + " words enumerated");
}

CheckResult check_connected_counting(int max_n) {
  static const long long table[] = {0, 2, 4, 24, 208, 2176};
  Failure f;
  for (int n = 1; n <= max_n && !f.failed; ++n) {
    long long count = 0;
    for_each_word(n, [&](const KrewerasWord& w) {
      if (is_connected(w)) ++count;
    });
    if (BigInt(count) != connected_count(n))
      f.note("connected count mismatch with formula at n=" + std::to_string(n));
    if (n < static_cast<int>(std::size(table)) && count != table[n])
      f.note("connected count mismatch with paper coefficients at n=" + std::to_string(n));
  }
  return result("connected word counts 2,4,24,... up to n=" + std::to_string(max_n), f, "match");
}

CheckResult check_theorem_main(int exhaustive_n, const std::vector<int>& sample_ns, int samples,
                               std::uint64_t seed) {
  Failure f;
  long long tested = 0;
  auto test_word = [&](const KrewerasWord& w) {
    int len = w.size();
    KrewerasWord first = promote(w);
    try {
      KrewerasWord::parse(first.str());
    } catch (const error&) {
      f.note("promotion left the set of Kreweras words at " + w.str());
      return;
    }
    KrewerasWord v = first;
    for (int i = 1; i < len; ++i) v = promote(v);
    if (!(v == swap_bc(w))) f.note("pro^{3n} is not the B/C swap at " + w.str());
    for (int i = 0; i < len; ++i) v = promote(v);
    if (!(v == w)) f.note("pro^{6n} is not the identity at " + w.str());
    ++tested;
  };
  for (int n = 1; n <= exhaustive_n && !f.failed; ++n) for_each_word(n, test_word);
  std::mt19937_64 rng(seed);
  for (int n : sample_ns)
    for (int s = 0; s < samples && !f.failed; ++s) test_word(random_word(n, rng));
  return result("pro^{3n} = swap_bc and pro^{6n} = id", f,
                std::to_string(tested) + " words tested");
}

CheckResult check_promotion_tau(int exhaustive_n) {
  Failure f;
  for (int n = 1; n <= exhaustive_n && !f.failed; ++n) {
    for_each_word(n, [&](const KrewerasWord& w) {
      if (!(promote(w) == tau_sweep_promotion(w)))
        f.note("promotion differs from the tau sweep at " + w.str());
      if (!(promote_inverse(promote(w)) == w) || !(promote(promote_inverse(w)) == w))
        f.note("promote_inverse is not inverse at " + w.str());
      int len = static_cast<int>(orbit(w).size());
      if ((6 * n) % len != 0) f.note("orbit size does not divide 6n at " + w.str());
    });
  }
  return result("promotion as tau composition, inverse, orbit sizes", f, "exhaustive n <= " +
                std::to_string(exhaustive_n));
}

CheckResult check_perm_props(int exhaustive_n) {
  Failure f;
  for (int n = 1; n <= exhaustive_n && !f.failed; ++n) {
    for_each_word(n, [&](const KrewerasWord& w) {
      TripData td = trip_permutation(w);
      const Permutation& s = td.sigma;
      Permutation inv = s.inverse();
      for (int i = 1; i <= w.size(); ++i) {
        if (s(i) == i) f.note("fixed point in sigma at " + w.str());
        Letter li = w.letter(i);
        Letter ls = w.letter(s(i));
        if (li == Letter::A && ls == Letter::A) f.note("sigma maps an A to an A at " + w.str());
        if (li != Letter::A) {
          bool direct = ls == negate(li);
          bool via_a = ls == Letter::A && w.letter(s(s(i))) == negate(li);
          if (!direct && !via_a) f.note("sign-flip property fails at " + w.str());
        }
        if ((inv(i) > i) != (li == Letter::A))
          f.note("anti-exceedance set is not the A set at " + w.str());
      }
      if (!(word_from_sigma_epsilon(td.sigma, td.epsilon) == w))
        f.note("(sigma, epsilon) does not determine the word at " + w.str());
    });
  }
  return result("trip permutation basic properties and reconstruction", f,
                "exhaustive n <= " + std::to_string(exhaustive_n));
}

CheckResult check_lemma_key(int exhaustive_n) {
  Failure f;
  long long tested = 0;
  for (int n = 1; n <= exhaustive_n && !f.failed; ++n) {
    for_each_word(n, [&](const KrewerasWord& w) {
      TripData td = trip_permutation(w);
      TripData tp = trip_permutation(promote(w));
      if (!(tp.sigma == rot(td.sigma))) f.note("sigma does not rotate under promotion at " + w.str());
      if (!(tp.epsilon == shift_negate(td.epsilon)))
        f.note("epsilon does not shift-negate under promotion at " + w.str());
      ++tested;
    });
  }
  return result("sigma rotates and epsilon shifts under promotion", f,
                std::to_string(tested) + " words tested");
}

CheckResult check_oracle_equivalence(int exhaustive_n, int sample_n, int samples,
                                     std::uint64_t seed) {
  Failure f;
  long long tested = 0;
  auto test_word = [&](const KrewerasWord& w) {
    TripData bump = trip_permutation(w);
    TripData growth = sigma_eps_from_growth(w);
    if (!(bump == growth)) f.note("bump and growth disagree at " + w.str());
    ++tested;
  };
  for (int n = 1; n <= exhaustive_n && !f.failed; ++n) for_each_word(n, test_word);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples && !f.failed; ++s) test_word(random_word(sample_n, rng));
  return result("bump-diagram and growth-diagram (sigma, epsilon) agree", f,
                std::to_string(tested) + " words tested");
}

CheckResult check_evacuation(int exhaustive_n) {
  Failure f;
  for (int n = 1; n <= exhaustive_n && !f.failed; ++n) {
    for_each_word(n, [&](const KrewerasWord& w) {
      KrewerasWord ev = evacuate(w);
      if (!(evac_from_growth(w) == ev)) f.note("growth-column evacuation differs at " + w.str());
      TripData td = trip_permutation(w);
      std::string formula;
      for (int i = w.size(); i >= 1; --i) formula.push_back(to_char(w.letter(td.sigma(i))));
      if (formula != ev.str()) f.note("evacuation formula w(sigma(3n..1)) differs at " + w.str());
      if (!(evacuate(ev) == w)) f.note("evacuation is not an involution at " + w.str());
      if (!(dual_evacuate(dual_evacuate(w)) == w))
        f.note("dual evacuation is not an involution at " + w.str());
      if (!(evacuate(promote(w)) == promote_inverse(ev)))
        f.note("evac after pro differs from pro^{-1} after evac at " + w.str());
      if (!(promote_steps(w, w.size()) == dual_evacuate(ev)))
        f.note("pro^{3n} differs from evac* after evac at " + w.str());
      TripData te = trip_permutation(ev);
      if (!(te.sigma == rc(td.sigma.inverse())))
        f.note("sigma of the evacuation is not rc of the inverse at " + w.str());
      SignVector expected(td.epsilon.rbegin(), td.epsilon.rend());
      for (Letter& l : expected) l = negate(l);
      if (te.epsilon != expected) f.note("epsilon of the evacuation differs at " + w.str());
    });
  }
  return result("evacuation identities (tau, growth, trip formula)", f,
                "exhaustive n <= " + std::to_string(exhaustive_n));
}

CheckResult check_growth_symmetries(int small_n, int big_n) {
  Failure f;
  for (int n = 1; n <= small_n && !f.failed; ++n) {
    for_each_word(n, [&](const KrewerasWord& w) {
      int len = w.size();
      // translation: the window of pro(w) is the window of w shifted by (-1, 1)
      GrowthWindow gw = growth_window(w, len + 1);
      GrowthWindow gp = growth_window(promote(w), len);
      for (int r = 0; r <= len && !f.failed; ++r)
        if (gp.labels[r] != gw.labels[r + 1]) f.note("translation symmetry fails at " + w.str());
      for (int r = 1; r <= len && !f.failed; ++r) {
        const GrowthFill& a = gp.fill_in_row(r);
        const GrowthFill& b = gw.fill_in_row(r + 1);
        if (a.column != b.column - 1 || a.letter != b.letter)
          f.note("translation symmetry fails on fills at " + w.str());
      }
      // reflection across y = x maps the window of w to the window of evac(w)
      GrowthWindow ge = growth_window(evacuate(w), len);
      for (int y = -len; y <= 0; ++y)
        for (int x = -y - len; x <= -y; ++x)
          if (ge.has_label(x, y) && gw.has_label(y, x) &&
              !(ge.label_at(x, y) == gw.label_at(y, x)))
            f.note("reflection symmetry fails at " + w.str());
    });
  }
  for (int n = 1; n <= big_n && !f.failed; ++n) {
    for_each_word(n, [&](const KrewerasWord& w) {
      int len = w.size();
      GrowthWindow g = growth_window(w, 2 * len);
      // fills repeat with the opposite letter one period later
      for (int i = 1; i <= len && !f.failed; ++i) {
        const GrowthFill& a = g.fill_in_row(i);
        const GrowthFill& b = g.fill_in_row(i + len);
        if (b.column != a.column + len || b.letter != negate(a.letter))
          f.note("fill periodicity fails at " + w.str());
      }
      // the fill of column i carries the letter opposite to the fill of row i
      std::map<int, GrowthFill> by_column;
      for (const GrowthFill& fill : g.fills) by_column[fill.column] = fill;
      for (int i = len + 1; i <= 2 * len && !f.failed; ++i) {
        auto it = by_column.find(i);
        if (it == by_column.end()) {
          f.note("column without a fill at " + w.str());
          break;
        }
        if (it->second.letter != negate(g.fill_in_row(i).letter))
          f.note("row/column fill letters are not opposite at " + w.str());
      }
      // the fill of row i sits at column iota(pro^{i-1}(w)) + i - 1
      KrewerasWord v = w;
      for (int i = 1; i <= len && !f.failed; ++i) {
        const GrowthFill& a = g.fill_in_row(i);
        if (a.column != iota(v) + i - 1 || a.letter != v.letter(iota(v)))
          f.note("filled square is not at iota at " + w.str());
        v = promote(v);
      }
    });
  }
  return result("growth-diagram symmetries (translation, reflection, periodicity)", f,
                "exhaustive n <= " + std::to_string(big_n));
}

CheckResult check_web_trips(int exhaustive_n) {
  Failure f;
  long long tested = 0;
  for (int n = 1; n <= exhaustive_n && !f.failed; ++n) {
    for_each_word(n, [&](const KrewerasWord& w) {
      auto [web, coloring] = web_from_word(w);
      if (!(trip_permutation_web(web) == trip_permutation(w).sigma))
        f.note("web trips disagree with bump trips at " + w.str());
      // boundary letters read back from the edge colors
      for (int b = 0; b < web.boundary_count; ++b) {
        EdgeColor c = coloring.color[web.rotation[b][0] >> 1];
        Letter want = w.letter(b + 1);
        Letter got = c == EdgeColor::avocado ? Letter::A
                     : c == EdgeColor::blue  ? Letter::B
                                             : Letter::C;
        if (want != got) f.note("boundary letter read-back fails at " + w.str());
      }
      if (!is_kreweras_web(web)) f.note("word web is not a Kreweras web at " + w.str());
      ++tested;
    });
  }
  return result("web trip permutations equal sigma_w", f, std::to_string(tested) + " words tested");
}

CheckResult check_web_rotation_flip(int exhaustive_n) {
  Failure f;
  for (int n = 1; n <= exhaustive_n && !f.failed; ++n) {
    for_each_word(n, [&](const KrewerasWord& w) {
      Web web = web_from_word(w).first;
      if (canonical_form(rotate_web(web)) != canonical_form(web_from_word(promote(w)).first))
        f.note("rotation does not track promotion at " + w.str());
      if (canonical_form(flip_web(web)) != canonical_form(web_from_word(evacuate(w)).first))
        f.note("flip does not track evacuation at " + w.str());
      // rotating 3n times restores the original labeled web
      Web r = web;
      for (int i = 0; i < w.size(); ++i) r = rotate_web(r);
      if (canonical_form(r) != canonical_form(web)) f.note("rot^{3n} is not the identity at " + w.str());
    });
  }
  return result("web rotation/flip realize promotion/evacuation", f,
                "exhaustive n <= " + std::to_string(exhaustive_n));
}

CheckResult check_web_census(int max_n) {
  static const long long distinct_table[] = {1, 1, 5, 42, 459, 5871};
  Failure f;
  std::ostringstream detail;
  SeriesIdentityReport series = series_identity_check(std::max(max_n, 1));
  for (int n = 1; n <= max_n && !f.failed; ++n) {
    std::map<std::string, int> census;  // canonical form -> components
    std::map<std::vector<int>, std::set<std::string>> by_trip;
    for_each_word(n, [&](const KrewerasWord& w) {
      Web web = web_from_word(w).first;
      std::string form = canonical_form(web);
      by_trip[trip_permutation_web(web).one_line()].insert(form);
      census.emplace(std::move(form), components(web));
    });
    // within the census, a trip permutation belongs to a single web
    for (const auto& [perm, forms] : by_trip)
      if (forms.size() != 1)
        f.note("distinct webs share a trip permutation at n=" + std::to_string(n));
    long long distinct = static_cast<long long>(census.size());
    long long connected = 0;
    BigInt weighted = 0;
    for (const auto& [form, kappa] : census) {
      if (kappa == 1) ++connected;
      weighted += BigInt(1) << kappa;
    }
    if (BigInt(distinct) != series.web_counts[n])
      f.note("distinct web count differs from the series at n=" + std::to_string(n));
    if (n < static_cast<int>(std::size(distinct_table)) && distinct != distinct_table[n])
      f.note("distinct web count differs from expected at n=" + std::to_string(n));
    if (BigInt(connected) != connected_web_count(n))
      f.note("connected web count differs from the formula at n=" + std::to_string(n));
    if (weighted != kreweras_count(n))
      f.note("sum of 2^kappa differs from the word count at n=" + std::to_string(n));
    detail << (n > 1 ? ", " : "") << "n=" << n << ": " << distinct;
  }
  return result("web census (distinct, connected, weighted)", f, detail.str());
}

CheckResult check_web_recovery(int max_n) {
  Failure f;
  long long recovered = 0;
  for (int n = 1; n <= max_n && !f.failed; ++n) {
    std::map<std::string, KrewerasWord> reps;
    for_each_word(n, [&](const KrewerasWord& w) {
      reps.emplace(canonical_form(web_from_word(w).first), w);
    });
    // every word is among the preimages of its own web
    for_each_word(n, [&](const KrewerasWord& w) {
      if (f.failed) return;
      std::vector<KrewerasWord> words = recover_words(web_from_word(w).first);
      if (!std::binary_search(words.begin(), words.end(), w))
        f.note("word is not recovered from its own web: " + w.str());
    });
    for (const auto& [form, rep] : reps) {
      if (f.failed) break;
      Web web = web_from_word(rep).first;
      int kappa = components(web);
      std::vector<KrewerasWord> words;
      try {
        words = recover_words(web);
      } catch (const error& e) {
        f.note(std::string("recovery failed at ") + rep.str() + ": " + e.what());
        break;
      }
      recovered += static_cast<long long>(words.size());
      if (words.size() != (1u << kappa)) f.note("recovery count is not 2^kappa at " + rep.str());
      for (const KrewerasWord& u : words)
        if (canonical_form(web_from_word(u).first) != form)
          f.note("recovered word does not round-trip at " + rep.str());
      // the two orientation choices of a connected web give B/C-swapped colorings
      if (kappa == 1) {
        EdgeColoring cb = color_web(web, {Letter::B});
        EdgeColoring cc = color_web(web, {Letter::C});
        for (size_t e = 0; e < cb.color.size(); ++e) {
          EdgeColor x = cb.color[e], y = cc.color[e];
          bool swapped = (x == EdgeColor::avocado && y == EdgeColor::avocado) ||
                         (x == EdgeColor::blue && y == EdgeColor::crimson) ||
                         (x == EdgeColor::crimson && y == EdgeColor::blue);
          if (!swapped) f.note("colorings of the two choices are not B/C swaps at " + rep.str());
        }
      }
    }
  }
  return result("web recovery returns exactly 2^kappa round-tripping words", f,
                std::to_string(recovered) + " preimages checked");
}

CheckResult check_worked_example() {
  Failure f;
  KrewerasWord w = KrewerasWord::parse("AABBCACCB");

  static const char* iterates[] = {"ABACACCBB", "AACACCBBB", "ACACABBBC", "AACABBBCC",
                                   "ACABBACCB", "AABBACCBC", "ABAACCBCB", "AAACCBCBB",
                                   "AACCBABBC"};
  KrewerasWord v = w;
  for (int i = 0; i < 9; ++i) {
    v = promote(v);
    if (v.str() != iterates[i]) f.note("promotion iterate " + std::to_string(i + 1) + " differs");
  }
  if (!(v == swap_bc(w))) f.note("pro^9 is not the B/C swap");
  if (iota(w) != 4 || iota(promote(w)) != 2) f.note("iota values differ");

  auto [mb, mc] = matchings(w);
  auto arcs_equal = [](const std::vector<Arc>& got, std::vector<std::pair<int, int>> want) {
    if (got.size() != want.size()) return false;
    for (size_t i = 0; i < want.size(); ++i)
      if (got[i].opener != want[i].first || got[i].closer != want[i].second) return false;
    return true;
  };
  if (!arcs_equal(mb.arcs, {{1, 4}, {2, 3}, {6, 9}})) f.note("blue matching differs");
  if (!arcs_equal(mc.arcs, {{1, 8}, {2, 5}, {6, 7}})) f.note("crimson matching differs");

  BumpDiagram d = bump_diagram(w);
  int interior = 0, boundary = 0;
  for (const Crossing& c : d.crossings)
    (c.kind == CrossingKind::interior ? interior : boundary)++;
  if (interior != 2 || boundary != 3) f.note("crossing census differs (want 2 interior, 3 boundary)");
  if (trip(d, 1) != 4 || trip(d, 3) != 8 || trip(d, 7) != 1) f.note("trip walk-throughs differ");

  TripData td = trip_permutation(w);
  if (td.sigma.one_line() != std::vector<int>{4, 3, 8, 5, 2, 7, 1, 9, 6}) f.note("sigma differs");
  auto eps_str = [](const SignVector& e) {
    std::string s;
    for (Letter l : e) s.push_back(to_char(l));
    return s;
  };
  if (eps_str(td.epsilon) != "BBCCBCBBC") f.note("epsilon differs");

  TripData tp = trip_permutation(promote(w));
  if (tp.sigma.one_line() != std::vector<int>{2, 7, 4, 1, 6, 9, 8, 5, 3})
    f.note("sigma of pro(w) differs");
  if (eps_str(tp.epsilon) != "BCCBCBBCC") f.note("epsilon of pro(w) differs");

  TripData tg = sigma_eps_from_growth(w);
  if (!(tg == td)) f.note("growth read-off differs");

  if (evacuate(w).str() != "ABACACCBB") f.note("evacuation differs");
  if (evac_from_growth(w).str() != "ABACACCBB") f.note("growth evacuation differs");

  auto [web, coloring] = web_from_word(w);
  int black = 0, white = 0;
  for (int u = web.boundary_count; u < web.vertex_count(); ++u)
    (web.vertex_color[u] == VertexColor::black ? black : white)++;
  if (web.boundary_count != 9 || black != 5 || white != 2)
    f.note("web vertex census differs (want 9 boundary, 5 black + 2 white internal)");
  if (components(web) != 1) f.note("web component count differs");
  if (!(trip_permutation_web(web) == td.sigma)) f.note("web trips differ");

  std::vector<KrewerasWord> words = recover_words(web);
  if (words.size() != 2 || words[0].str() != "AABBCACCB" || words[1].str() != "AACCBABBC")
    f.note("recovered word set differs");

  return result("worked example AABBCACCB end to end", f, "all published values reproduced");
}

CheckResult check_csp(int max_orbit_n, int max_poly_n) {
  Failure f;
  std::ostringstream detail;
  for (int n = 1; n <= max_poly_n && !f.failed; ++n) {
    try {
      csp_polynomial(n);
    } catch (const error& e) {
      f.note("sieving polynomial fails at n=" + std::to_string(n) + ": " + e.what());
    }
  }
  for (int n = 1; n <= max_orbit_n && !f.failed; ++n) {
    try {
      CspReport rep = csp_check(n);
      if (!rep.pass) f.note("orbit-sum congruence fails at n=" + std::to_string(n));
      for (const auto& [size, cnt] : rep.orbit_histogram)
        if ((3 * n) % size == 0)
          f.note("an orbit size divides 3n (pro^{3n} would have fixed words) at n=" +
                 std::to_string(n));
      detail << (n > 1 ? "; " : "") << "n=" << n << ": ";
      bool first = true;
      for (const auto& [size, cnt] : rep.orbit_histogram) {
        detail << (first ? "" : ",") << cnt << "x" << size;
        first = false;
      }
    } catch (const error& e) {
      f.note(std::string("csp check failed: ") + e.what());
    }
  }
  return result("cyclic sieving (congruence mod q^{6n}-1, polynomial checks)", f, detail.str());
}

CheckResult check_conj_evac(int max_n) {
  Failure f;
  std::ostringstream detail;
  for (int n = 1; n <= max_n && !f.failed; ++n) {
    EvacFixedReport rep = evac_fixed_check(n);
    if (!rep.pass)
      f.note("evacuation fixed-point counts differ at n=" + std::to_string(n) + " (formula " +
             rep.formula.str() + ", evac* " + rep.dual_evac_fixed.str() + ", evac " +
             rep.evac_fixed.str() + ")");
    detail << (n > 1 ? ", " : "") << "n=" << n << ": " << rep.dual_evac_fixed.str();
  }
  return result("evacuation fixed-point product formula", f, detail.str());
}

CheckResult check_order_polynomial(int max_n, int max_m) {
  Failure f;
  for (int n = 1; n <= max_n && !f.failed; ++n) {
    for (int m = 0; m <= max_m && !f.failed; ++m) {
      if (order_polynomial(n, m) != ppartition_count(n, m))
        f.note("product formula and P-partition DP disagree at n=" + std::to_string(n) +
               ", m=" + std::to_string(m));
    }
    // (3n)! times the leading coefficient, via finite differences, counts words
    BigInt lead = 0;
    for (int k = 0; k <= 3 * n; ++k) {
      BigInt binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (3 * n - i) / (i + 1);
      BigInt term = binom * order_polynomial(n, k);
      lead += (3 * n - k) % 2 == 0 ? term : -term;
    }
    if (lead != kreweras_count(n))
      f.note("leading coefficient of the order polynomial is off at n=" + std::to_string(n));
  }
  return result("order polynomial formula equals the P-partition count", f,
                "n <= " + std::to_string(max_n) + ", m <= " + std::to_string(max_m));
}

CheckResult check_series_identities(int n_max) {
  Failure f;
  SeriesIdentityReport rep = series_identity_check(n_max);
  if (!rep.k_identity_holds) f.note("K(x) = 1 + K^c(x K(x)) fails");
  static const long long expected_w[] = {1, 1, 5, 42, 459, 5871};
  for (int n = 0; n <= std::min(n_max, 5); ++n)
    if (rep.web_counts[n] != expected_w[n])
      f.note("solved web series coefficient differs at n=" + std::to_string(n));
  std::ostringstream detail;
  detail << "W: ";
  for (int n = 0; n <= n_max; ++n) detail << (n ? "," : "") << rep.web_counts[n].str();
  return result("generating function composition identities", f, detail.str());
}

CheckList verify_suite(const std::string& suite, const VerifyOptions& opt) {
  CheckList out;
  auto add = [&](CheckResult r) { out.push_back(std::move(r)); };
  bool all = suite == "all";
  if (all || suite == "promotion") {
    add(check_theorem_main(opt.max_n, {opt.max_n + 1, opt.max_n + 2}, opt.samples, opt.seed));
    add(check_promotion_tau(opt.max_n));
  }
  if (all || suite == "trips") {
    add(check_perm_props(opt.max_n));
    add(check_lemma_key(opt.max_n));
  }
  if (all || suite == "growth") {
    add(check_oracle_equivalence(opt.max_n, opt.max_n + 2, opt.samples, opt.seed));
    add(check_growth_symmetries(std::min(opt.max_n, 2), opt.max_n));
  }
  if (all || suite == "webs") {
    add(check_web_trips(opt.max_n));
    add(check_web_rotation_flip(opt.max_n));
    add(check_web_census(opt.max_n));
    add(check_web_recovery(opt.max_n));
  }
  if (all || suite == "enumeration") {
    add(check_counting(opt.max_n + 1));
    add(check_connected_counting(opt.max_n + 1));
    add(check_series_identities(std::max(opt.max_n, 5)));
    add(check_order_polynomial(3, 6));
  }
  if (all || suite == "csp") {
    add(check_csp(std::min(opt.max_n + 1, 4), 6));
  }
  if (all || suite == "evac") {
    add(check_evacuation(opt.max_n));
    add(check_conj_evac(opt.max_n + 1));
  }
  if (all) add(check_worked_example());
  if (out.empty()) throw std::invalid_argument("unknown verify suite: " + suite);
  return out;
}

}  // namespace kreweras
