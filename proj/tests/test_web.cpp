#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "kreweras/errors.hpp"
#include "kreweras/web.hpp"
#include "kreweras/word.hpp"

using namespace kreweras;

namespace {

// A k-cycle of internal vertices (k even, alternating colors), each carrying a
// pendant edge to its own boundary vertex.  The cycle bounds a k-sided
// internal face.
Web cycle_fixture(int k) {
  Web w;
  w.boundary_count = k;
  w.vertex_color.resize(2 * k);
  for (int i = 0; i < k; ++i) {
    w.vertex_color[k + i] = i % 2 == 0 ? VertexColor::black : VertexColor::white;
    w.vertex_color[i] = i % 2 == 0 ? VertexColor::white : VertexColor::black;
  }
  for (int i = 0; i < k; ++i) w.edges.push_back({k + i, k + (i + 1) % k});  // edge i
  for (int i = 0; i < k; ++i) w.edges.push_back({k + i, i});               // edge k+i
  w.rotation.assign(2 * k, {});
  for (int i = 0; i < k; ++i) {
    int prev_edge = (i + k - 1) % k;
    w.rotation[k + i] = {2 * (k + i), 2 * i, 2 * prev_edge + 1};  // pendant, next, previous
    w.rotation[i] = {2 * (k + i) + 1};
  }
  return w;
}

int internal_count(const Web& w, VertexColor c) {
  int count = 0;
  for (int v = w.boundary_count; v < w.vertex_count(); ++v)
    if (w.vertex_color[v] == c) ++count;
  return count;
}

}  // namespace

TEST_CASE("web of the running example has the published vertex census") {
  auto [w, col] = web_from_word(KrewerasWord::parse("AABBCACCB"));
  CHECK(w.boundary_count == 9);
  CHECK(internal_count(w, VertexColor::black) == 5);
  CHECK(internal_count(w, VertexColor::white) == 2);
  CHECK(components(w) == 1);
  for (int b = 0; b < 9; ++b) CHECK(w.vertex_color[b] == VertexColor::white);
}

TEST_CASE("web of ABC is a claw") {
  auto [w, col] = web_from_word(KrewerasWord::parse("ABC"));
  CHECK(w.boundary_count == 3);
  CHECK(w.vertex_count() == 4);
  CHECK(w.edge_count() == 3);
  CHECK(w.vertex_color[3] == VertexColor::black);
  std::vector<Face> fs = faces(w);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].outer);
}

TEST_CASE("boundary letters read back from the edge coloring") {
  for (const KrewerasWord& w : enumerate_words(2)) {
    auto [web, col] = web_from_word(w);
    for (int b = 0; b < web.boundary_count; ++b) {
      EdgeColor c = col.color[web.rotation[b][0] >> 1];
      Letter expected = w.letter(b + 1);
      if (expected == Letter::A) CHECK(c == EdgeColor::avocado);
      if (expected == Letter::B) CHECK(c == EdgeColor::blue);
      if (expected == Letter::C) CHECK(c == EdgeColor::crimson);
    }
  }
}

TEST_CASE("face side counts avoid small and 4k sizes on word webs") {
  for (int n = 1; n <= 3; ++n)
    for (const KrewerasWord& w : enumerate_words(n)) {
      Web web = web_from_word(w).first;
      for (const Face& f : faces(web))
        if (!f.outer) {
          CHECK(f.sides() >= 6);
          CHECK(f.sides() % 2 == 0);
          CHECK(f.sides() % 4 != 0);
        }
      CHECK(is_irreducible(web));
      CHECK(is_kreweras_web(web));
    }
}

TEST_CASE("Euler consistency on random webs") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    Web web = web_from_word(random_word(4, rng)).first;
    std::vector<Face> fs = faces(web);
    int internal = 0;
    for (const Face& f : fs)
      if (!f.outer) ++internal;
    // V - E + (internal faces + one outer) = 1 + number of components
    CHECK(web.vertex_count() - web.edge_count() + internal + 1 == 1 + components(web));
  }
}

TEST_CASE("cycle fixtures separate irreducible from Kreweras") {
  Web square = cycle_fixture(4);
  CHECK_FALSE(is_irreducible(square));
  CHECK_FALSE(is_kreweras_web(square));

  Web octagon = cycle_fixture(8);
  std::vector<Face> fs = faces(octagon);
  int internal_sides = 0;
  for (const Face& f : fs)
    if (!f.outer) internal_sides = f.sides();
  CHECK(internal_sides == 8);
  CHECK(is_irreducible(octagon));
  CHECK_FALSE(is_kreweras_web(octagon));  // 8 = 4k sides (and mixed boundary colors)

  Web hexagon = cycle_fixture(6);
  CHECK(is_irreducible(hexagon));
  CHECK_FALSE(is_kreweras_web(hexagon));  // boundary vertices are not all white
}

TEST_CASE("malformed rotation systems are rejected") {
  Web w = cycle_fixture(4);
  std::swap(w.rotation[4][0], w.rotation[4][1]);
  // still a valid dart partition, but no longer a disk embedding
  CHECK_THROWS_AS((void)faces(w), malformed_embedding_error);

  Web bad = cycle_fixture(4);
  bad.rotation[4][0] = bad.rotation[5][0];
  CHECK_THROWS_AS(validate_web(bad), malformed_embedding_error);
}

TEST_CASE("web trips match bump trips") {
  KrewerasWord w = KrewerasWord::parse("AABBCACCB");
  CHECK(trip_permutation_web(web_from_word(w).first).one_line() ==
        std::vector<int>{4, 3, 8, 5, 2, 7, 1, 9, 6});
  KrewerasWord p = KrewerasWord::parse("ABACACCBB");
  CHECK(trip_permutation_web(web_from_word(p).first).one_line() ==
        std::vector<int>{2, 7, 4, 1, 6, 9, 8, 5, 3});
  for (const KrewerasWord& v : enumerate_words(3))
    CHECK(trip_permutation_web(web_from_word(v).first) == trip_permutation(v).sigma);
}

TEST_CASE("rotation and flip of webs track promotion and evacuation") {
  for (int n = 1; n <= 2; ++n)
    for (const KrewerasWord& w : enumerate_words(n)) {
      Web web = web_from_word(w).first;
      CHECK(canonical_form(rotate_web(web)) ==
            canonical_form(web_from_word(promote(w)).first));
      CHECK(canonical_form(flip_web(web)) == canonical_form(web_from_word(evacuate(w)).first));
      Web r = web;
      for (int i = 0; i < w.size(); ++i) r = rotate_web(r);
      CHECK(canonical_form(r) == canonical_form(web));
      CHECK(canonical_form(flip_web(flip_web(web))) == canonical_form(web));
    }
}

TEST_CASE("component counts") {
  CHECK(components(web_from_word(KrewerasWord::parse("AABBCACCB")).first) == 1);
  CHECK(components(web_from_word(KrewerasWord::parse("ABCABC")).first) == 2);
}

TEST_CASE("canonical form ignores internal vertex numbering") {
  KrewerasWord word = KrewerasWord::parse("AABBCACCB");
  Web w = web_from_word(word).first;
  std::string form = canonical_form(w);
  CHECK(form == canonical_form(web_from_word(word).first));

  // renumber the internal vertices in reverse
  int V = w.vertex_count(), m = w.boundary_count;
  std::vector<int> perm(V);
  for (int v = 0; v < V; ++v) perm[v] = v < m ? v : V - 1 - (v - m) + 0;
  Web g;
  g.boundary_count = m;
  g.vertex_color.resize(V);
  g.rotation.resize(V);
  for (int v = 0; v < V; ++v) g.vertex_color[perm[v]] = w.vertex_color[v];
  for (const auto& e : w.edges) g.edges.push_back({perm[e[0]], perm[e[1]]});
  for (int v = 0; v < V; ++v) g.rotation[perm[v]] = w.rotation[v];
  CHECK(canonical_form(g) == form);

  // different words of one orbit position give different labeled webs
  CHECK(canonical_form(web_from_word(KrewerasWord::parse("AACACCBBB")).first) != form);
}

TEST_CASE("recovery returns the swap pair of the running example") {
  Web w = web_from_word(KrewerasWord::parse("AABBCACCB")).first;
  std::vector<KrewerasWord> words = recover_words(w);
  REQUIRE(words.size() == 2);
  CHECK(words[0].str() == "AABBCACCB");
  CHECK(words[1].str() == "AACCBABBC");

  std::vector<KrewerasWord> claw = recover_words(web_from_word(KrewerasWord::parse("ABC")).first);
  REQUIRE(claw.size() == 2);
  CHECK(claw[0].str() == "ABC");
  CHECK(claw[1].str() == "ACB");
}

TEST_CASE("recovery counts 2^kappa and the census matches the word count") {
  for (int n = 1; n <= 3; ++n) {
    std::map<std::string, std::pair<KrewerasWord, int>> census;
    for (const KrewerasWord& w : enumerate_words(n)) {
      Web web = web_from_word(w).first;
      census.emplace(canonical_form(web), std::make_pair(w, components(web)));
    }
    long long total = 0;
    for (const auto& [form, entry] : census) {
      std::vector<KrewerasWord> words = recover_words(web_from_word(entry.first).first);
      CHECK(words.size() == (1u << entry.second));
      total += static_cast<long long>(words.size());
      CHECK(std::binary_search(words.begin(), words.end(), entry.first));
    }
    long long expected[] = {0, 2, 16, 192};
    CHECK(total == expected[n]);
  }
}

TEST_CASE("colorings are proper and the two choices swap blue and crimson") {
  Web w = web_from_word(KrewerasWord::parse("AABBCACCB")).first;
  EdgeColoring cb = color_web(w, {Letter::B});
  EdgeColoring cc = color_web(w, {Letter::C});
  for (int v = 0; v < w.vertex_count(); ++v) {
    std::set<EdgeColor> incident;
    for (int d : w.rotation[v]) incident.insert(cb.color[d >> 1]);
    CHECK(incident.size() == w.rotation[v].size());  // proper at every vertex
  }
  for (int e = 0; e < w.edge_count(); ++e) {
    if (cb.color[e] == EdgeColor::avocado)
      CHECK(cc.color[e] == EdgeColor::avocado);
    else
      CHECK(cc.color[e] != cb.color[e]);
  }
  // matching the word's own orientation reproduces its construction coloring
  auto [w2, col2] = web_from_word(KrewerasWord::parse("AABBCACCB"));
  CHECK(cb.color == col2.color);  // first non-A letter of the word is B
}

TEST_CASE("recover_words rejects non-Kreweras webs") {
  CHECK_THROWS_AS((void)recover_words(cycle_fixture(4)), std::invalid_argument);
}
