#include "kreweras/enumeration.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "kreweras/errors.hpp"
#include "kreweras/word.hpp"

namespace kreweras {

namespace {

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt pow2(int k) { return BigInt(1) << k; }

// The closed formulas are integers by theorem; an inexact division here means
// a bug, not bad input.
BigInt divide_checked(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q = num / den;
  if (q * den != num) throw error(std::string("inexact division in ") + what);
  return q;
}

}  // namespace

BigInt kreweras_count(int n) {
  if (n < 0) throw domain_error("kreweras_count needs n >= 0");
  BigInt binom = divide_checked(factorial(3 * n), factorial(n) * factorial(2 * n), "binomial");
  BigInt num = BigInt(1) << (2 * n);
  num *= binom;
  return divide_checked(num, BigInt(n + 1) * (2 * n + 1), "kreweras_count");
}

BigInt connected_count(int n) {
  if (n < 1) throw domain_error("connected_count needs n >= 1");
  return divide_checked(pow2(n + 1) * factorial(4 * n - 3), factorial(3 * n - 1) * factorial(n),
                        "connected_count");
}

BigInt connected_web_count(int n) {
  if (n < 1) throw domain_error("connected_web_count needs n >= 1");
  return divide_checked(pow2(n) * factorial(4 * n - 3), factorial(3 * n - 1) * factorial(n),
                        "connected_web_count");
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPolynomial::coeff(int d) const {
  static const BigInt zero = 0;
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[d];
}

BigInt IntPolynomial::eval_at_one() const {
  BigInt s = 0;
  for (const BigInt& c : coeffs_) s += c;
  return s;
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.coeffs_.empty() || q.coeffs_.empty()) return IntPolynomial{};
  std::vector<BigInt> out(p.coeffs_.size() + q.coeffs_.size() - 1, BigInt(0));
  for (size_t i = 0; i < p.coeffs_.size(); ++i)
    for (size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<BigInt> out(std::max(p.coeffs_.size(), q.coeffs_.size()), BigInt(0));
  for (size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(static_cast<int>(i)) - q.coeff(static_cast<int>(i));
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.coeffs_.empty()) throw not_polynomial_error("division by the zero polynomial");
  if (coeffs_.empty()) return IntPolynomial{};
  if (degree() < divisor.degree()) throw not_polynomial_error("degree too small for exact division");
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(degree() - divisor.degree() + 1, BigInt(0));
  const BigInt& lead = divisor.coeffs_.back();
  for (int d = degree(); d >= divisor.degree(); --d) {
    BigInt& top = rem[d];
    if (top == 0) continue;
    BigInt q = top / lead;
    if (q * lead != top) throw not_polynomial_error("leading coefficient does not divide");
    quot[d - divisor.degree()] = q;
    for (int j = 0; j <= divisor.degree(); ++j)
      rem[d - divisor.degree() + j] -= q * divisor.coeffs_[j];
  }
  for (const BigInt& r : rem)
    if (r != 0) throw not_polynomial_error("nonzero remainder in exact division");
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= degree(); ++d) {
    if (coeffs_[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0)
      os << coeffs_[d];
    else if (coeffs_[d] == 1)
      os << "q^" << d;
    else
      os << coeffs_[d] << "*q^" << d;
  }
  return os.str();
}

IntPolynomial one_minus_q_pow(int d) {
  std::vector<BigInt> c(d + 1, BigInt(0));
  c[0] = 1;
  c[d] = -1;
  return IntPolynomial(std::move(c));
}

PowerSeries::PowerSeries(int order, std::vector<BigInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order_ + 1, BigInt(0));
}

PowerSeries PowerSeries::one(int order) {
  std::vector<BigInt> c(order + 1, BigInt(0));
  c[0] = 1;
  return PowerSeries(order, std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  int order = std::min(a.order_, b.order_);
  std::vector<BigInt> c(order + 1);
  for (int k = 0; k <= order; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
  return PowerSeries(order, std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  int order = std::min(a.order_, b.order_);
  std::vector<BigInt> c(order + 1, BigInt(0));
  for (int i = 0; i <= order; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PowerSeries(order, std::move(c));
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
  if (inner.coeffs_[0] != 0)
    throw std::invalid_argument("composition needs positive valuation");
  PowerSeries acc(order_, {});
  for (int k = order_; k >= 0; --k) {
    acc = acc * inner;
    std::vector<BigInt> c = acc.coeffs();
    c[0] += coeffs_[k];
    acc = PowerSeries(order_, std::move(c));
  }
  return acc;
}

namespace {

// t * s(t)^3, the substitution argument for both composition identities once
// everything is written in t = x^3.
PowerSeries shift_cube(const PowerSeries& s) {
  PowerSeries cube = s * s * s;
  std::vector<BigInt> c(s.order() + 1, BigInt(0));
  for (int k = 1; k <= s.order(); ++k) c[k] = cube.coeff(k - 1);
  return PowerSeries(s.order(), std::move(c));
}

}  // namespace

SeriesIdentityReport series_identity_check(int n_max) {
  if (n_max < 1) throw domain_error("series_identity_check needs n_max >= 1");
  SeriesIdentityReport rep;
  rep.n_max = n_max;

  std::vector<BigInt> k_c(n_max + 1, BigInt(0)), w_c(n_max + 1, BigInt(0));
  for (int n = 0; n <= n_max; ++n) {
    rep.word_counts.push_back(kreweras_count(n));
    if (n >= 1) {
      k_c[n] = connected_count(n);
      w_c[n] = connected_web_count(n);
      rep.connected_word_counts.push_back(k_c[n]);
      rep.connected_web_counts.push_back(w_c[n]);
    }
  }
  PowerSeries K(n_max, rep.word_counts);
  PowerSeries Kc(n_max, k_c);
  PowerSeries Wc(n_max, w_c);

  rep.k_identity_holds = K == PowerSeries::one(n_max) + Kc.compose(shift_cube(K));

  PowerSeries W = PowerSeries::one(n_max);
  for (int pass = 0; pass <= n_max; ++pass)
    W = PowerSeries::one(n_max) + Wc.compose(shift_cube(W));
  if (!(W == PowerSeries::one(n_max) + Wc.compose(shift_cube(W))))
    throw error("web series iteration did not converge");
  rep.web_counts = W.coeffs();
  return rep;
}

IntPolynomial csp_polynomial(int n) {
  if (n < 1) throw domain_error("csp_polynomial needs n >= 1");
  IntPolynomial num(std::vector<BigInt>{1});
  for (int j = 1; j <= 3 * n; ++j) num = num * one_minus_q_pow(2 * j);
  IntPolynomial den(std::vector<BigInt>{1});
  for (int j = 2; j <= 2 * n + 1; ++j) den = den * one_minus_q_pow(j);
  for (int j = 2; j <= n + 1; ++j) den = den * one_minus_q_pow(2 * j);

  IntPolynomial f = num.divide_exact(den);
  for (int d = 0; d <= f.degree(); ++d)
    if (f.coeff(d) < 0)
      throw negative_coefficient_error("negative coefficient at q^" + std::to_string(d));
  if (f.eval_at_one() != kreweras_count(n)) throw error("f(1) does not equal the word count");
  return f;
}

CspReport csp_check(int n) {
  if (n < 1) throw domain_error("csp_check needs n >= 1");
  if (n > 7) throw domain_error("csp_check is exhaustive; n > 7 is not supported");
  CspReport rep;
  rep.n = n;
  rep.f = csp_polynomial(n);

  int ell = 6 * n;
  std::vector<BigInt> orbit_sum(ell, BigInt(0));
  std::unordered_map<std::string, bool> visited;
  long long total = 0;
  for_each_word(n, [&](const KrewerasWord& w) {
    if (visited.count(w.str())) return;
    std::vector<KrewerasWord> orb = orbit(w);
    for (const KrewerasWord& u : orb) visited.emplace(u.str(), true);
    int size = static_cast<int>(orb.size());
    total += size;
    if (ell % size != 0)
      throw orbit_size_error("orbit size " + std::to_string(size) + " does not divide " +
                             std::to_string(ell));
    ++rep.orbit_histogram[size];
    int stride = ell / size;
    for (int t = 0; t < size; ++t) orbit_sum[t * stride] += 1;
  });
  if (BigInt(total) != kreweras_count(n)) throw error("orbit decomposition lost words");

  std::vector<BigInt> f_mod(ell, BigInt(0));
  for (int d = 0; d <= rep.f.degree(); ++d) f_mod[d % ell] += rep.f.coeff(d);

  rep.orbit_sum_mod = orbit_sum;
  rep.pass = f_mod == orbit_sum;
  return rep;
}

BigInt evac_fixed_formula(int n) {
  if (n < 1) throw domain_error("evac_fixed_formula needs n >= 1");
  int half_down = n / 2, half_up = (n + 1) / 2;
  BigInt num = 1;
  for (int i = 0; i < half_down; ++i) num *= 3;
  for (int i = 0; i < half_up; ++i) num *= 4;
  for (int j = 1; j <= half_down; ++j) num *= 3 * j - 1;
  for (int j = 1; j <= half_up; ++j) num *= 3 * j - 2;
  return divide_checked(num, factorial(n + 1), "evac_fixed_formula");
}

EvacFixedReport evac_fixed_check(int n) {
  EvacFixedReport rep;
  rep.n = n;
  rep.formula = evac_fixed_formula(n);
  long long dual_fixed = 0, fixed = 0;
  for_each_word(n, [&](const KrewerasWord& w) {
    if (dual_evacuate(w) == w) ++dual_fixed;
    if (evacuate(w) == w) ++fixed;
  });
  rep.dual_evac_fixed = dual_fixed;
  rep.evac_fixed = fixed;
  BigInt evac_expected = n % 2 == 0 ? rep.formula : BigInt(0);
  rep.pass = rep.dual_evac_fixed == rep.formula && rep.evac_fixed == evac_expected;
  return rep;
}

BigInt order_polynomial(int n, long long m) {
  if (n < 1) throw domain_error("order_polynomial needs n >= 1");
  if (m < 0) throw domain_error("order_polynomial needs m >= 0");
  BigInt num = 1;
  for (int i = 1; i <= n; ++i) num *= BigInt(m + 1 + i);
  for (int i = 1; i <= 2 * n; ++i) num *= BigInt(2 * m + i + 1);
  return divide_checked(num, factorial(n + 1) * factorial(2 * n + 1), "order_polynomial");
}

BigInt ppartition_count(int n, long long m) {
  if (n < 1) throw domain_error("ppartition_count needs n >= 1");
  if (m < 0) throw domain_error("ppartition_count needs m >= 0");
  int s = static_cast<int>(m) + 1;
  auto at = [s](std::vector<BigInt>& v, int a, int b, int c) -> BigInt& {
    return v[(a * s + b) * s + c];
  };

  // profile (a,b,c) = values at rank i of the three chains, a <= min(b,c)
  std::vector<BigInt> cur(s * s * s, BigInt(0));
  for (int a = 0; a < s; ++a)
    for (int b = a; b < s; ++b)
      for (int c = a; c < s; ++c) at(cur, a, b, c) = 1;

  for (int rank = 2; rank <= n; ++rank) {
    // 3-dimensional prefix sums of the previous layer
    std::vector<BigInt> pre = cur;
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        for (int c = 1; c < s; ++c) at(pre, a, b, c) += at(pre, a, b, c - 1);
    for (int a = 0; a < s; ++a)
      for (int b = 1; b < s; ++b)
        for (int c = 0; c < s; ++c) at(pre, a, b, c) += at(pre, a, b - 1, c);
    for (int a = 1; a < s; ++a)
      for (int b = 0; b < s; ++b)
        for (int c = 0; c < s; ++c) at(pre, a, b, c) += at(pre, a - 1, b, c);

    std::vector<BigInt> next(s * s * s, BigInt(0));
    for (int a = 0; a < s; ++a)
      for (int b = a; b < s; ++b)
        for (int c = a; c < s; ++c) at(next, a, b, c) = at(pre, a, b, c);
    cur = std::move(next);
  }

  BigInt total = 0;
  for (const BigInt& v : cur) total += v;
  return total;
}

}  // namespace kreweras
