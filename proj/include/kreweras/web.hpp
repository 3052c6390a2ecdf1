#ifndef KREWERAS_WEB_HPP
#define KREWERAS_WEB_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kreweras/bump.hpp"
#include "kreweras/word.hpp"

namespace kreweras {

enum class VertexColor : std::uint8_t { white, black };
enum class EdgeColor : std::uint8_t { avocado, blue, crimson };

/// A planar bicolored trivalent graph in a disk, represented by its rotation
/// system.  Vertices 0..boundary_count-1 are the boundary vertices, vertex
/// b carrying label b+1; the labels run counterclockwise around the rim.
/// Darts: edge e yields dart 2e (edges[e][0] -> edges[e][1]) and its twin
/// 2e+1.  rotation[v] lists the darts leaving v in counterclockwise order.
struct Web {
  int boundary_count = 0;
  std::vector<VertexColor> vertex_color;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> rotation;

  int vertex_count() const { return static_cast<int>(vertex_color.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int dart_tail(int d) const { return edges[d >> 1][d & 1]; }
  int dart_head(int d) const { return edges[d >> 1][1 - (d & 1)]; }
  static int twin(int d) { return d ^ 1; }
  bool is_boundary(int v) const { return v < boundary_count; }
};

struct EdgeColoring {
  std::vector<EdgeColor> color;  // one entry per edge
};

struct Face {
  std::vector<int> darts;  // boundary walk; for the outer face, all rim-side darts
  bool outer = false;
  int sides() const { return static_cast<int>(darts.size()); }
};

/// Checks degrees, the 2-coloring, rotation consistency and that every
/// component reaches the boundary.  Throws malformed_embedding_error.
void validate_web(const Web& w);

/// Breaks apart the crossings of the bump diagram: interior crossings become
/// a white-black pair joined by an avocado edge (white toward the openers),
/// boundary crossings become a single black vertex carrying both arcs, tied
/// to the opener's boundary vertex by an avocado edge.
std::pair<Web, EdgeColoring> web_from_word(const KrewerasWord& w);

/// All faces from the rotation system.  The outer face (the one carrying the
/// boundary vertices) is merged across components and reported once.
/// Throws malformed_embedding_error when the rotation system is not a valid
/// disk embedding.
std::vector<Face> faces(const Web& w);

/// No internal face with fewer than 6 sides.
bool is_irreducible(const Web& w);

/// Irreducible, all boundary vertices white, and no internal face with a
/// multiple of four sides.
bool is_kreweras_web(const Web& w);

/// Trips in the web: walk in from each boundary vertex, turning right (next
/// dart counterclockwise) at black vertices and left at white ones.
Permutation trip_permutation_web(const Web& w);

/// Relabels boundary vertices by the inverse long cycle (label 1 becomes 3n).
Web rotate_web(const Web& w);

/// Reflects the disk: reverses every rotation and relabels i -> 3n+1-i.
Web flip_web(const Web& w);

int components(const Web& w);

/// Deterministic serialization from a boundary-anchored traversal of the
/// rotation system; two webs are equal as embedded labeled graphs iff their
/// canonical forms are byte-equal.
std::string canonical_form(const Web& w);

/// All Kreweras words whose web equals w.  Requires is_kreweras_web(w);
/// throws recovery_mismatch_error when the number of surviving candidates is
/// not 2^components(w).  Result is sorted.
std::vector<KrewerasWord> recover_words(const Web& w);

/// The edge 3-coloring of the unique preimage word whose per-component B/C
/// orientation matches `choice` (one letter, B or C, per component; components
/// ordered by smallest boundary label; the letter is the one the word takes at
/// the component's smallest non-A position).
EdgeColoring color_web(const Web& w, const std::vector<Letter>& choice);

}  // namespace kreweras

#endif
