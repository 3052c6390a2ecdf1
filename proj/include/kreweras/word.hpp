#ifndef KREWERAS_WORD_HPP
#define KREWERAS_WORD_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kreweras/letters.hpp"

namespace kreweras {

/// A word over {A,B,C} with equal letter counts in which every prefix has at
/// least as many A's as B's and at least as many A's as C's.  The empty word
/// (n = 0) is allowed.  Positions are 1-based throughout the API.
class KrewerasWord {
 public:
  KrewerasWord() = default;

  /// Validates and wraps a string of 'A','B','C' characters.
  /// Throws prefix_violation_error (with the 1-based index of the first bad
  /// prefix) or not_balanced_error.
  static KrewerasWord parse(std::string_view letters);

  /// Wraps a string that is already known to be a Kreweras word.
  static KrewerasWord unchecked(std::string letters);

  int n() const { return static_cast<int>(letters_.size()) / 3; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  Letter letter(int i) const { return static_cast<Letter>(letters_[i - 1]); }
  const std::string& str() const { return letters_; }

  friend bool operator==(const KrewerasWord& a, const KrewerasWord& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator<(const KrewerasWord& a, const KrewerasWord& b) {
    return a.letters_ < b.letters_;
  }

 private:
  explicit KrewerasWord(std::string s) : letters_(std::move(s)) {}
  std::string letters_;
};

/// The smallest index i >= 1 such that the prefix of length i has as many A's
/// as B's or as many A's as C's.  Throws empty_word_error on the empty word.
int iota(const KrewerasWord& w);

/// Sch\"utzenberger promotion: remove the leading A, shift the prefix up to
/// iota(w) left, insert an A before position iota(w), and cycle the letter at
/// iota(w) to the end.
KrewerasWord promote(const KrewerasWord& w);

/// Inverse of promote, realized as the reverse sweep of adjacent swaps.
KrewerasWord promote_inverse(const KrewerasWord& w);

/// Swaps letters i and i+1 when the result is still a Kreweras word, and
/// returns w unchanged otherwise.  Involution.  1 <= i <= 3n-1.
KrewerasWord tau(const KrewerasWord& w, int i);

/// Evacuation: the nested composition (tau_1)(tau_2 tau_1)...(tau_{3n-1}...tau_1).
KrewerasWord evacuate(const KrewerasWord& w);

/// Dual evacuation: (tau_{3n-1}...tau_1)(tau_{3n-1}...tau_2)...(tau_{3n-1}).
KrewerasWord dual_evacuate(const KrewerasWord& w);

/// Letterwise A->A, B->C, C->B.
KrewerasWord swap_bc(const KrewerasWord& w);

/// True iff no proper nonempty consecutive substring of w is itself a
/// Kreweras word.  Throws empty_word_error on the empty word.
bool is_connected(const KrewerasWord& w);

/// Calls fn for every Kreweras word of length 3n, in lexicographic order
/// (A < B < C).
void for_each_word(int n, const std::function<void(const KrewerasWord&)>& fn);

/// All Kreweras words of length 3n in lexicographic order.
std::vector<KrewerasWord> enumerate_words(int n);

/// The promotion orbit of w, starting at w.
std::vector<KrewerasWord> orbit(const KrewerasWord& w);

/// Uniformly random Kreweras word of length 3n (rejection from random
/// arrangements of the letter multiset).
KrewerasWord random_word(int n, std::mt19937_64& rng);

}  // namespace kreweras

#endif
