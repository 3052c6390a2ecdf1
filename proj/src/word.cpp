#include "kreweras/word.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "kreweras/errors.hpp"

namespace kreweras {

namespace {

struct Counts {
  int a = 0, b = 0, c = 0;
  void add(char l) {
    if (l == 'A')
      ++a;
    else if (l == 'B')
      ++b;
    else
      ++c;
  }
  bool ballot() const { return a >= b && a >= c; }
};

// Whether appending `next` to a prefix with counts `cnt` keeps the ballot
// condition.
bool extends(const Counts& cnt, char next) {
  if (next == 'A') return true;
  if (next == 'B') return cnt.a >= cnt.b + 1;
  return cnt.a >= cnt.c + 1;
}

}  // namespace

KrewerasWord KrewerasWord::parse(std::string_view letters) {
  Counts cnt;
  for (int i = 0; i < static_cast<int>(letters.size()); ++i) {
    char l = letters[i];
    if (!is_letter_char(l)) throw std::invalid_argument("word may contain only A, B, C");
    cnt.add(l);
    if (!cnt.ballot())
      throw prefix_violation_error(
          "prefix of length " + std::to_string(i + 1) + " has more B's or C's than A's", i + 1);
  }
  if (cnt.a != cnt.b || cnt.a != cnt.c)
    throw not_balanced_error("letter counts differ: " + std::to_string(cnt.a) + " A, " +
                             std::to_string(cnt.b) + " B, " + std::to_string(cnt.c) + " C");
  return KrewerasWord(std::string(letters));
}

KrewerasWord KrewerasWord::unchecked(std::string letters) {
  return KrewerasWord(std::move(letters));
}

int iota(const KrewerasWord& w) {
  if (w.empty()) throw empty_word_error("iota of the empty word");
  Counts cnt;
  for (int i = 1; i <= w.size(); ++i) {
    cnt.add(to_char(w.letter(i)));
    if (cnt.a == cnt.b || cnt.a == cnt.c) return i;
  }
  // unreachable: the full word is balanced
  throw std::logic_error("no balanced prefix found in a Kreweras word");
}

KrewerasWord promote(const KrewerasWord& w) {
  if (w.empty()) throw empty_word_error("promote of the empty word");
  const std::string& s = w.str();
  int io = iota(w);
  std::string out;
  out.reserve(s.size());
  out.append(s, 1, io - 2);  // w_2 .. w_{iota-1}
  out.push_back('A');
  out.append(s, io, std::string::npos);  // w_{iota+1} .. w_{3n}
  out.push_back(s[io - 1]);
  assert(out.size() == s.size());
  return KrewerasWord::unchecked(std::move(out));
}

namespace {

// tau_i applied in place, given the counts of the prefix of length i-1.
// Returns whether a swap happened.  0-based p = i-1 addresses the left slot.
bool tau_at(std::string& s, int p, const Counts& before) {
  char left = s[p], right = s[p + 1];
  if (left == right) return false;
  if (!extends(before, right)) return false;
  std::swap(s[p], s[p + 1]);
  return true;
}

// Applies tau_lo, tau_{lo+1}, ..., tau_hi (1-based) in place.
void tau_sweep_up(std::string& s, int lo, int hi) {
  Counts cnt;
  for (int q = 0; q < lo - 1; ++q) cnt.add(s[q]);
  for (int i = lo; i <= hi; ++i) {
    tau_at(s, i - 1, cnt);
    cnt.add(s[i - 1]);
  }
}

// Applies tau_hi, tau_{hi-1}, ..., tau_lo (1-based) in place.  Prefix counts
// are taken once up front; a swap at position i only perturbs the prefix of
// length i, which later (smaller) steps never consult.
void tau_sweep_down(std::string& s, int hi, int lo) {
  std::vector<Counts> pc(s.size() + 1);
  for (int q = 1; q <= static_cast<int>(s.size()); ++q) {
    pc[q] = pc[q - 1];
    pc[q].add(s[q - 1]);
  }
  for (int i = hi; i >= lo; --i) tau_at(s, i - 1, pc[i - 1]);
}

}  // namespace

KrewerasWord promote_inverse(const KrewerasWord& w) {
  if (w.empty()) throw empty_word_error("promote_inverse of the empty word");
  std::string s = w.str();
  tau_sweep_down(s, w.size() - 1, 1);
  return KrewerasWord::unchecked(std::move(s));
}

KrewerasWord tau(const KrewerasWord& w, int i) {
  if (i < 1 || i > w.size() - 1)
    throw index_out_of_range_error("tau index " + std::to_string(i) + " outside 1.." +
                                   std::to_string(w.size() - 1));
  std::string s = w.str();
  Counts cnt;
  for (int q = 0; q < i - 1; ++q) cnt.add(s[q]);
  tau_at(s, i - 1, cnt);
  return KrewerasWord::unchecked(std::move(s));
}

KrewerasWord evacuate(const KrewerasWord& w) {
  std::string s = w.str();
  for (int top = w.size() - 1; top >= 1; --top) tau_sweep_up(s, 1, top);
  return KrewerasWord::unchecked(std::move(s));
}

KrewerasWord dual_evacuate(const KrewerasWord& w) {
  std::string s = w.str();
  for (int bottom = w.size() - 1; bottom >= 1; --bottom) tau_sweep_up(s, bottom, w.size() - 1);
  return KrewerasWord::unchecked(std::move(s));
}

KrewerasWord swap_bc(const KrewerasWord& w) {
  std::string s = w.str();
  for (char& l : s) {
    if (l == 'B')
      l = 'C';
    else if (l == 'C')
      l = 'B';
  }
  return KrewerasWord::unchecked(std::move(s));
}

bool is_connected(const KrewerasWord& w) {
  if (w.empty()) throw empty_word_error("is_connected of the empty word");
  const std::string& s = w.str();
  int len = w.size();
  for (int start = 0; start < len; ++start) {
    Counts cnt;
    bool ok = true;
    for (int end = start; end < len && ok; ++end) {
      cnt.add(s[end]);
      if (!cnt.ballot()) break;
      int sub = end - start + 1;
      if (sub == len) break;  // the whole word is not a proper substring
      if (cnt.a == cnt.b && cnt.a == cnt.c) return false;
    }
  }
  return true;
}

namespace {

void enumerate_rec(int n, std::string& prefix, Counts& cnt,
                   const std::function<void(const KrewerasWord&)>& fn) {
  if (static_cast<int>(prefix.size()) == 3 * n) {
    fn(KrewerasWord::unchecked(prefix));
    return;
  }
  for (char l : {'A', 'B', 'C'}) {
    int used = l == 'A' ? cnt.a : (l == 'B' ? cnt.b : cnt.c);
    if (used == n) continue;
    if (!extends(cnt, l)) continue;
    prefix.push_back(l);
    cnt.add(l);
    enumerate_rec(n, prefix, cnt, fn);
    prefix.pop_back();
    if (l == 'A')
      --cnt.a;
    else if (l == 'B')
      --cnt.b;
    else
      --cnt.c;
  }
}

}  // namespace

void for_each_word(int n, const std::function<void(const KrewerasWord&)>& fn) {
  if (n < 0) throw std::invalid_argument("negative n");
  std::string prefix;
  prefix.reserve(3 * n);
  Counts cnt;
  enumerate_rec(n, prefix, cnt, fn);
}

std::vector<KrewerasWord> enumerate_words(int n) {
  std::vector<KrewerasWord> out;
  for_each_word(n, [&](const KrewerasWord& w) { out.push_back(w); });
  return out;
}

std::vector<KrewerasWord> orbit(const KrewerasWord& w) {
  std::vector<KrewerasWord> out{w};
  if (w.empty()) return out;
  KrewerasWord cur = promote(w);
  while (!(cur == w)) {
    out.push_back(cur);
    cur = promote(cur);
  }
  return out;
}

KrewerasWord random_word(int n, std::mt19937_64& rng) {
  if (n < 0) throw std::invalid_argument("negative n");
  std::string s(3 * n, 'A');
  std::fill(s.begin() + n, s.begin() + 2 * n, 'B');
  std::fill(s.begin() + 2 * n, s.end(), 'C');
  for (;;) {
    std::shuffle(s.begin(), s.end(), rng);
    Counts cnt;
    bool ok = true;
    for (char l : s) {
      cnt.add(l);
      if (!cnt.ballot()) {
        ok = false;
        break;
      }
    }
    if (ok) return KrewerasWord::unchecked(s);
  }
}

}  // namespace kreweras
