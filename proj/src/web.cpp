#include "kreweras/web.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <sstream>

#include "kreweras/errors.hpp"

namespace kreweras {

namespace {

int dart_from(const Web& w, int edge, int vertex) {
  if (w.edges[edge][0] == vertex) return 2 * edge;
  assert(w.edges[edge][1] == vertex);
  return 2 * edge + 1;
}

// dart id -> position in the rotation list of its tail
std::vector<int> dart_positions(const Web& w) {
  std::vector<int> pos(2 * w.edge_count(), -1);
  for (int v = 0; v < w.vertex_count(); ++v)
    for (int p = 0; p < static_cast<int>(w.rotation[v].size()); ++p)
      pos[w.rotation[v][p]] = p;
  return pos;
}

std::vector<int> component_of(const Web& w) {
  int V = w.vertex_count();
  std::vector<std::vector<int>> adj(V);
  for (const auto& e : w.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<int> comp(V, -1);
  int k = 0;
  for (int s = 0; s < V; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = k;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (comp[v] < 0) {
          comp[v] = k;
          stack.push_back(v);
        }
    }
    ++k;
  }
  return comp;
}

}  // namespace

void validate_web(const Web& w) {
  int V = w.vertex_count();
  if (static_cast<int>(w.rotation.size()) != V)
    throw malformed_embedding_error("rotation table size does not match vertex count");
  if (w.boundary_count < 1 || w.boundary_count > V)
    throw malformed_embedding_error("bad boundary vertex count");

  std::vector<int> degree(V, 0);
  for (const auto& e : w.edges) {
    if (e[0] < 0 || e[0] >= V || e[1] < 0 || e[1] >= V || e[0] == e[1])
      throw malformed_embedding_error("edge endpoints out of range");
    if (w.vertex_color[e[0]] == w.vertex_color[e[1]])
      throw malformed_embedding_error("edge joins two vertices of the same color");
    ++degree[e[0]];
    ++degree[e[1]];
  }
  for (int v = 0; v < V; ++v) {
    int want = w.is_boundary(v) ? 1 : 3;
    if (degree[v] != want)
      throw malformed_embedding_error("vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(degree[v]));
  }

  std::vector<bool> seen(2 * w.edge_count(), false);
  for (int v = 0; v < V; ++v) {
    if (static_cast<int>(w.rotation[v].size()) != degree[v])
      throw malformed_embedding_error("rotation list length disagrees with degree");
    for (int d : w.rotation[v]) {
      if (d < 0 || d >= 2 * w.edge_count() || w.dart_tail(d) != v || seen[d])
        throw malformed_embedding_error("rotation lists are not a partition of the darts");
      seen[d] = true;
    }
  }

  std::vector<int> comp = component_of(w);
  int k = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<bool> touches(k, false);
  for (int b = 0; b < w.boundary_count; ++b) touches[comp[b]] = true;
  for (bool t : touches)
    if (!t) throw malformed_embedding_error("component without a boundary vertex");
}

std::pair<Web, EdgeColoring> web_from_word(const KrewerasWord& word) {
  if (word.empty()) throw empty_word_error("web of the empty word");
  BumpDiagram d = bump_diagram(word);
  int m = word.size();

  Web w;
  EdgeColoring col;
  w.boundary_count = m;
  w.vertex_color.assign(m, VertexColor::white);

  auto new_vertex = [&](VertexColor c) {
    w.vertex_color.push_back(c);
    return static_cast<int>(w.vertex_color.size()) - 1;
  };
  auto new_edge = [&](int u, int v, EdgeColor c) {
    w.edges.push_back({u, v});
    col.color.push_back(c);
    return static_cast<int>(w.edges.size()) - 1;
  };

  int nc = static_cast<int>(d.crossings.size());
  // one black vertex per boundary crossing; a white/black pair per interior one
  std::vector<int> black_of(nc, -1), white_of(nc, -1);
  for (int ci = 0; ci < nc; ++ci) {
    if (d.crossings[ci].kind == CrossingKind::interior)
      white_of[ci] = new_vertex(VertexColor::white);
    black_of[ci] = new_vertex(VertexColor::black);
  }

  // per crossing, the arc-segment edges on each side, indexed by role
  // (0 = outer arc, 1 = inner arc); boundary crossings have no left edges
  std::vector<std::array<int, 2>> left_edge(nc, {-1, -1}), right_edge(nc, {-1, -1});
  std::vector<int> avocado_edge(nc, -1);

  for (int ci = 0; ci < nc; ++ci) {
    const Crossing& cr = d.crossings[ci];
    if (cr.kind == CrossingKind::boundary) {
      int opener = d.arcs[cr.outer].opener;
      avocado_edge[ci] = new_edge(opener - 1, black_of[ci], EdgeColor::avocado);
    } else {
      avocado_edge[ci] = new_edge(white_of[ci], black_of[ci], EdgeColor::avocado);
    }
  }

  for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
    const auto& order = d.arc_order[a];
    assert(!order.empty() && d.crossings[order[0]].kind == CrossingKind::boundary);
    EdgeColor ec = d.arcs[a].color == ArcColor::blue ? EdgeColor::blue : EdgeColor::crimson;
    int prev_vertex = black_of[order[0]];
    int prev_ci = order[0];
    for (size_t k = 1; k < order.size(); ++k) {
      int ci = order[k];
      int e = new_edge(prev_vertex, white_of[ci], ec);
      right_edge[prev_ci][d.crossings[prev_ci].outer == a ? 0 : 1] = e;
      left_edge[ci][d.crossings[ci].outer == a ? 0 : 1] = e;
      prev_vertex = black_of[ci];
      prev_ci = ci;
    }
    int e = new_edge(prev_vertex, d.arcs[a].closer - 1, ec);
    right_edge[prev_ci][d.crossings[prev_ci].outer == a ? 0 : 1] = e;
  }

  // rotation lists, counterclockwise in the upper-half-plane drawing
  w.rotation.assign(w.vertex_count(), {});
  for (int ci = 0; ci < nc; ++ci) {
    const Crossing& cr = d.crossings[ci];
    int b = black_of[ci];
    w.rotation[b] = {dart_from(w, right_edge[ci][0], b), dart_from(w, right_edge[ci][1], b),
                     dart_from(w, avocado_edge[ci], b)};
    if (cr.kind == CrossingKind::interior) {
      int wh = white_of[ci];
      w.rotation[wh] = {dart_from(w, avocado_edge[ci], wh), dart_from(w, left_edge[ci][0], wh),
                        dart_from(w, left_edge[ci][1], wh)};
    }
  }
  for (int e = 0; e < w.edge_count(); ++e)
    for (int side = 0; side < 2; ++side) {
      int v = w.edges[e][side];
      if (w.is_boundary(v)) w.rotation[v] = {dart_from(w, e, v)};
    }

  validate_web(w);
  return {std::move(w), std::move(col)};
}

std::vector<Face> faces(const Web& w) {
  validate_web(w);
  std::vector<int> pos = dart_positions(w);
  int nd = 2 * w.edge_count();

  auto next_in_face = [&](int d) {
    int v = w.dart_head(d);
    int t = Web::twin(d);
    const auto& r = w.rotation[v];
    return r[(pos[t] + 1) % r.size()];
  };

  std::vector<int> face_of(nd, -1);
  std::vector<std::vector<int>> orbits;
  for (int d0 = 0; d0 < nd; ++d0) {
    if (face_of[d0] >= 0) continue;
    std::vector<int> orbit;
    int d = d0;
    do {
      face_of[d] = static_cast<int>(orbits.size());
      orbit.push_back(d);
      d = next_in_face(d);
    } while (d != d0);
    orbits.push_back(std::move(orbit));
  }

  // sphere Euler check per component, then exactly one rim orbit per component
  std::vector<int> comp = component_of(w);
  int k = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> vcount(k, 0), ecount(k, 0), fcount(k, 0), rim(k, 0);
  for (int v = 0; v < w.vertex_count(); ++v) ++vcount[comp[v]];
  for (const auto& e : w.edges) ++ecount[comp[e[0]]];
  std::vector<bool> is_outer(orbits.size(), false);
  for (size_t f = 0; f < orbits.size(); ++f) {
    ++fcount[comp[w.dart_tail(orbits[f][0])]];
    for (int d : orbits[f])
      if (w.is_boundary(w.dart_tail(d)) || w.is_boundary(w.dart_head(d))) {
        is_outer[f] = true;
        break;
      }
    if (is_outer[f]) ++rim[comp[w.dart_tail(orbits[f][0])]];
  }
  for (int c = 0; c < k; ++c) {
    if (vcount[c] - ecount[c] + fcount[c] != 2)
      throw malformed_embedding_error("rotation system is not planar (Euler check failed)");
    if (rim[c] != 1)
      throw malformed_embedding_error("boundary vertices do not lie on a single face");
  }

  std::vector<Face> out;
  Face outer;
  outer.outer = true;
  for (size_t f = 0; f < orbits.size(); ++f) {
    if (is_outer[f]) {
      outer.darts.insert(outer.darts.end(), orbits[f].begin(), orbits[f].end());
    } else {
      out.push_back(Face{std::move(orbits[f]), false});
    }
  }
  out.push_back(std::move(outer));
  return out;
}

bool is_irreducible(const Web& w) {
  for (const Face& f : faces(w))
    if (!f.outer && f.sides() < 6) return false;
  return true;
}

bool is_kreweras_web(const Web& w) {
  for (int b = 0; b < w.boundary_count; ++b)
    if (w.vertex_color[b] != VertexColor::white) return false;
  for (const Face& f : faces(w))
    if (!f.outer && (f.sides() < 6 || f.sides() % 4 == 0)) return false;
  return true;
}

Permutation trip_permutation_web(const Web& w) {
  validate_web(w);
  std::vector<int> pos = dart_positions(w);
  int m = w.boundary_count;
  std::vector<int> img(m);
  for (int b = 0; b < m; ++b) {
    int d = w.rotation[b][0];
    int steps = 0;
    for (;;) {
      int v = w.dart_head(d);
      if (w.is_boundary(v)) {
        img[b] = v + 1;
        break;
      }
      if (++steps > 2 * w.edge_count() + 2)
        throw non_terminating_trip_error("trip in web did not reach the boundary");
      int p = pos[Web::twin(d)];
      int turn = w.vertex_color[v] == VertexColor::black ? 1 : 2;  // right : left
      d = w.rotation[v][(p + turn) % 3];
    }
  }
  return Permutation(std::move(img));
}

namespace {

Web relabel_boundary(const Web& w, const std::vector<int>& new_id, bool reverse_rotations) {
  Web out;
  out.boundary_count = w.boundary_count;
  out.vertex_color.resize(w.vertex_count());
  out.rotation.resize(w.vertex_count());
  out.edges.resize(w.edge_count());
  for (int v = 0; v < w.vertex_count(); ++v) {
    out.vertex_color[new_id[v]] = w.vertex_color[v];
    out.rotation[new_id[v]] = w.rotation[v];
    if (reverse_rotations)
      std::reverse(out.rotation[new_id[v]].begin(), out.rotation[new_id[v]].end());
  }
  for (int e = 0; e < w.edge_count(); ++e)
    out.edges[e] = {new_id[w.edges[e][0]], new_id[w.edges[e][1]]};
  return out;
}

}  // namespace

Web rotate_web(const Web& w) {
  int m = w.boundary_count;
  std::vector<int> new_id(w.vertex_count());
  for (int v = 0; v < w.vertex_count(); ++v)
    new_id[v] = v < m ? (v + m - 1) % m : v;  // label i becomes i-1, label 1 becomes m
  return relabel_boundary(w, new_id, false);
}

Web flip_web(const Web& w) {
  int m = w.boundary_count;
  std::vector<int> new_id(w.vertex_count());
  for (int v = 0; v < w.vertex_count(); ++v) new_id[v] = v < m ? m - 1 - v : v;
  return relabel_boundary(w, new_id, true);
}

int components(const Web& w) {
  std::vector<int> comp = component_of(w);
  return *std::max_element(comp.begin(), comp.end()) + 1;
}

namespace {

struct CanonicalTraversal {
  std::vector<int> order;                  // canon index -> vertex
  std::vector<int> canon_of;               // vertex -> canon index
  std::vector<std::vector<int>> anchored;  // vertex -> darts, entry twin first
  std::vector<int> edge_canon;             // edge -> first-visit index
};

// Breadth-first over darts, seeded by the boundary vertices in label order.
// Every choice is dictated by the rotation system, so the result does not
// depend on how internal vertices happen to be numbered.
CanonicalTraversal canonical_traversal(const Web& w) {
  CanonicalTraversal t;
  t.canon_of.assign(w.vertex_count(), -1);
  t.anchored.assign(w.vertex_count(), {});
  t.edge_canon.assign(w.edge_count(), -1);
  std::queue<int> pending;

  for (int b = 0; b < w.boundary_count; ++b) {
    t.canon_of[b] = b;
    t.order.push_back(b);
    t.anchored[b] = w.rotation[b];
  }
  for (int b = 0; b < w.boundary_count; ++b) pending.push(w.rotation[b][0]);

  int next_edge = 0;
  while (!pending.empty()) {
    int d = pending.front();
    pending.pop();
    if (t.edge_canon[d >> 1] < 0) t.edge_canon[d >> 1] = next_edge++;
    int v = w.dart_head(d);
    if (t.canon_of[v] >= 0) continue;
    t.canon_of[v] = static_cast<int>(t.order.size());
    t.order.push_back(v);
    const auto& r = w.rotation[v];
    int anchor = 0;
    while (r[anchor] != Web::twin(d)) ++anchor;
    for (int k = 0; k < static_cast<int>(r.size()); ++k)
      t.anchored[v].push_back(r[(anchor + k) % r.size()]);
    for (size_t k = 1; k < t.anchored[v].size(); ++k) pending.push(t.anchored[v][k]);
  }
  return t;
}

}  // namespace

std::string canonical_form(const Web& w) {
  validate_web(w);
  CanonicalTraversal t = canonical_traversal(w);
  std::ostringstream os;
  os << "m" << w.boundary_count << ";V" << w.vertex_count() << ";E" << w.edge_count() << ";";
  for (int v : t.order) {
    os << (w.vertex_color[v] == VertexColor::white ? 'w' : 'b') << '[';
    for (size_t k = 0; k < t.anchored[v].size(); ++k) {
      if (k) os << ',';
      os << t.canon_of[w.dart_head(t.anchored[v][k])];
    }
    os << ']';
  }
  return os.str();
}

std::vector<KrewerasWord> recover_words(const Web& w) {
  if (!is_kreweras_web(w)) throw std::invalid_argument("recover_words needs a Kreweras web");
  int m = w.boundary_count;
  Permutation sigma = trip_permutation_web(w);
  Permutation inv = sigma.inverse();

  std::vector<bool> is_a(m + 1, false);
  for (int i = 1; i <= m; ++i) is_a[i] = inv(i) > i;

  // chain map on the non-A positions: follow sigma, skipping over A's
  std::vector<int> next(m + 1, 0);
  for (int i = 1; i <= m; ++i) {
    if (is_a[i]) continue;
    int j = sigma(i);
    if (is_a[j]) j = sigma(j);
    if (is_a[j]) throw recovery_mismatch_error("sign chain leads to an A position twice");
    next[i] = j;
  }

  std::vector<std::vector<int>> cycles;
  std::vector<bool> used(m + 1, false);
  for (int i = 1; i <= m; ++i) {
    if (is_a[i] || used[i]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      used[j] = true;
      cyc.push_back(j);
      j = next[j];
    } while (j != i);
    cycles.push_back(std::move(cyc));
  }

  std::string target = canonical_form(w);
  std::vector<KrewerasWord> survivors;
  int nc = static_cast<int>(cycles.size());
  if (nc > 24) throw recovery_mismatch_error("sign chain has too many cycles");
  for (unsigned mask = 0; mask < (1u << nc); ++mask) {
    std::string s(m, 'A');
    bool consistent = true;
    for (int c = 0; c < nc && consistent; ++c) {
      Letter cur = (mask >> c) & 1 ? Letter::C : Letter::B;
      for (int j : cycles[c]) {
        s[j - 1] = to_char(cur);
        cur = negate(cur);
      }
      // letters alternate around the cycle, so odd cycles are inconsistent
      consistent = cycles[c].size() % 2 == 0;
    }
    if (!consistent) continue;
    KrewerasWord cand;
    try {
      cand = KrewerasWord::parse(s);
    } catch (const error&) {
      continue;
    }
    if (canonical_form(web_from_word(cand).first) == target) survivors.push_back(cand);
  }

  std::sort(survivors.begin(), survivors.end());
  unsigned expected = 1u << components(w);
  if (survivors.size() != expected)
    throw recovery_mismatch_error("recovered " + std::to_string(survivors.size()) +
                                  " words, expected " + std::to_string(expected));
  return survivors;
}

EdgeColoring color_web(const Web& w, const std::vector<Letter>& choice) {
  std::vector<int> comp = component_of(w);
  int kappa = *std::max_element(comp.begin(), comp.end()) + 1;
  if (static_cast<int>(choice.size()) != kappa)
    throw std::invalid_argument("need one letter choice per component");
  for (Letter l : choice)
    if (l == Letter::A) throw std::invalid_argument("component choices must be B or C");

  // components in order of smallest boundary label
  std::vector<int> comp_rank(kappa, -1);
  int seen = 0;
  for (int b = 0; b < w.boundary_count && seen < kappa; ++b)
    if (comp_rank[comp[b]] < 0) comp_rank[comp[b]] = seen++;

  std::vector<KrewerasWord> words = recover_words(w);
  const KrewerasWord* selected = nullptr;
  for (const KrewerasWord& cand : words) {
    bool ok = true;
    std::vector<bool> fixed(kappa, false);
    for (int b = 0; b < w.boundary_count && ok; ++b) {
      Letter l = cand.letter(b + 1);
      if (l == Letter::A) continue;
      int r = comp_rank[comp[b]];
      if (fixed[r]) continue;
      fixed[r] = true;
      ok = l == choice[r];
    }
    if (ok) {
      if (selected) throw recovery_mismatch_error("component choice is ambiguous");
      selected = &cand;
    }
  }
  if (!selected) throw recovery_mismatch_error("no recovered word matches the choice");

  auto [w2, col2] = web_from_word(*selected);
  CanonicalTraversal t1 = canonical_traversal(w);
  CanonicalTraversal t2 = canonical_traversal(w2);

  EdgeColoring out;
  out.color.assign(w.edge_count(), EdgeColor::avocado);
  std::vector<int> canon_to_edge2(w2.edge_count(), -1);
  for (int e = 0; e < w2.edge_count(); ++e) canon_to_edge2[t2.edge_canon[e]] = e;
  for (int e = 0; e < w.edge_count(); ++e)
    out.color[e] = col2.color[canon_to_edge2[t1.edge_canon[e]]];
  return out;
}

}  // namespace kreweras
