#ifndef KREWERAS_PERMUTATION_HPP
#define KREWERAS_PERMUTATION_HPP

#include <stdexcept>
#include <vector>

#include "kreweras/letters.hpp"

namespace kreweras {

/// A permutation of {1..m} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int m);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& one_line() const { return img_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }

 private:
  std::vector<int> img_;
};

/// Conjugation by the long cycle (1,2,...,m): rot(s)(i) follows the
/// functional digraph of s rotated one step.
Permutation rot(const Permutation& s);

/// Conjugation by the longest element [m,m-1,...,1].
Permutation rc(const Permutation& s);

/// A map {1..3n} -> {B,C}, stored densely.
using SignVector = std::vector<Letter>;

/// Shifts epsilon one step and negates the wrapped entry, matching how the
/// sign vector evolves under promotion.
SignVector shift_negate(const SignVector& eps);

}  // namespace kreweras

#endif
