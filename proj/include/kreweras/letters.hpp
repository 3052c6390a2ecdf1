#ifndef KREWERAS_LETTERS_HPP
#define KREWERAS_LETTERS_HPP

#include <stdexcept>

namespace kreweras {

enum class Letter : char { A = 'A', B = 'B', C = 'C' };

constexpr char to_char(Letter x) { return static_cast<char>(x); }

constexpr bool is_letter_char(char c) { return c == 'A' || c == 'B' || c == 'C'; }

inline Letter letter_from_char(char c) {
  if (!is_letter_char(c)) throw std::invalid_argument("letter must be one of A, B, C");
  return static_cast<Letter>(c);
}

// -B = C and -C = B; negation is not defined on A.
inline Letter negate(Letter x) {
  switch (x) {
    case Letter::B: return Letter::C;
    case Letter::C: return Letter::B;
    default: throw std::logic_error("negate is defined only on B and C");
  }
}

}  // namespace kreweras

#endif
