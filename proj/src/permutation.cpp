#include "kreweras/permutation.hpp"

#include <numeric>

namespace kreweras {

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  int m = static_cast<int>(img_.size());
  std::vector<bool> seen(m, false);
  for (int v : img_) {
    if (v < 1 || v > m || seen[v - 1])
      throw std::invalid_argument("one-line notation is not a bijection on {1..m}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 1; i <= size(); ++i) inv[img_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

Permutation rot(const Permutation& s) {
  int m = s.size();
  std::vector<int> img(m);
  for (int i = 1; i <= m; ++i) {
    int j = s(i % m + 1);          // sigma(c(i))
    img[i - 1] = (j + m - 2) % m + 1;  // c^{-1}(j)
  }
  return Permutation(std::move(img));
}

Permutation rc(const Permutation& s) {
  int m = s.size();
  std::vector<int> img(m);
  for (int i = 1; i <= m; ++i) img[i - 1] = m + 1 - s(m + 1 - i);
  return Permutation(std::move(img));
}

SignVector shift_negate(const SignVector& eps) {
  SignVector out;
  out.reserve(eps.size());
  for (size_t i = 1; i < eps.size(); ++i) out.push_back(eps[i]);
  if (!eps.empty()) out.push_back(negate(eps[0]));
  return out;
}

}  // namespace kreweras
