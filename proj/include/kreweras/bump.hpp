#ifndef KREWERAS_BUMP_HPP
#define KREWERAS_BUMP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "kreweras/permutation.hpp"
#include "kreweras/rational.hpp"
#include "kreweras/word.hpp"

namespace kreweras {

/// Blue arcs pair an A with a B, crimson arcs pair an A with a C.
enum class ArcColor : std::uint8_t { blue, crimson };

struct Arc {
  int opener = 0;
  int closer = 0;
  ArcColor color = ArcColor::blue;

  friend bool operator==(const Arc& a, const Arc& b) {
    return a.opener == b.opener && a.closer == b.closer && a.color == b.color;
  }
};

/// A noncrossing matching, arcs sorted by opener.
struct Matching {
  std::vector<Arc> arcs;
  std::vector<int> support() const;
};

/// (M^B_w, M^C_w): the noncrossing matchings whose openers are the A's of w
/// and whose closers are the B's (resp. C's).
std::pair<Matching, Matching> matchings(const KrewerasWord& w);

enum class CrossingKind : std::uint8_t { interior, boundary };

/// Two arcs (a,b), (c,d) with a <= c < b < d cross; boundary crossings share
/// the opener (a = c).  In the semicircle realization the crossing point is
/// (x, y) with x = (cd - ab)/((c+d) - (a+b)); boundary crossings sit at the
/// opener itself.
struct Crossing {
  int outer = 0;  // arc index of the (a,b) role
  int inner = 0;  // arc index of the (c,d) role
  CrossingKind kind = CrossingKind::interior;
  Rational x;
  Rational y_sq;
  // positions of this crossing in the per-arc orderings, filled by bump_diagram
  int pos_in_outer = -1;
  int pos_in_inner = -1;
};

/// The two matchings drawn together as semicircles, with every crossing
/// realized at exact coordinates and ordered along each arc.
struct BumpDiagram {
  KrewerasWord word;
  std::vector<Arc> arcs;  // blue arcs first, then crimson, each sorted by opener
  std::vector<Crossing> crossings;
  std::vector<std::vector<int>> arc_order;  // per arc, crossing indices by increasing x

  int arc_at_closer(int i) const;                 // closers lie on a unique arc
  std::pair<int, int> arcs_at_opener(int i) const;  // (blue, crimson) arc indices
};

BumpDiagram bump_diagram(const KrewerasWord& w);

/// Terminal vertex of the trip starting at boundary position i, following the
/// rules of the road at each crossing of arcs (a,b),(c,d) with a <= c < b < d:
/// continue to b from a, to a from c, to d from b, and to c from d.
int trip(const BumpDiagram& d, int i);

struct TripData {
  Permutation sigma;
  SignVector epsilon;

  friend bool operator==(const TripData& a, const TripData& b) {
    return a.sigma == b.sigma && a.epsilon == b.epsilon;
  }
};

/// The trip permutation together with its sign vector:
/// epsilon(i) = w(sigma(i)) when that letter is not A, else w(sigma(sigma(i))).
TripData trip_permutation(const KrewerasWord& w);

/// Rebuilds the word from (sigma, epsilon): position i holds A when
/// sigma^{-1}(i) > i and epsilon(sigma^{-1}(i)) otherwise.  Throws
/// invalid_reconstruction_error when the result is not a Kreweras word.
KrewerasWord word_from_sigma_epsilon(const Permutation& sigma, const SignVector& epsilon);

}  // namespace kreweras

#endif
