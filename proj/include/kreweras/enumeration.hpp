#ifndef KREWERAS_ENUMERATION_HPP
#define KREWERAS_ENUMERATION_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace kreweras {

using BigInt = boost::multiprecision::cpp_int;

/// K_n = 4^n / ((n+1)(2n+1)) * binomial(3n, n), exactly.
BigInt kreweras_count(int n);

/// K^c_n = 2^{n+1} (4n-3)! / ((3n-1)! n!).  Throws domain_error for n < 1.
BigInt connected_count(int n);

/// W^c_n = 2^n (4n-3)! / ((3n-1)! n!).  Throws domain_error for n < 1.
BigInt connected_web_count(int n);

/// Dense polynomial in q with arbitrary-precision integer coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const BigInt& coeff(int d) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt eval_at_one() const;

  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
  friend bool operator==(const IntPolynomial& p, const IntPolynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }

  /// Exact division; throws not_polynomial_error when a remainder is left.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  /// Sparse "c*q^d" rendering.
  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;  // coeffs_[d] is the coefficient of q^d, trimmed
};

/// 1 - q^d.
IntPolynomial one_minus_q_pow(int d);

/// Truncated power series with exact integer coefficients, indexed so that
/// coefficient k multiplies t^k where t = x^3 (every series in play is
/// supported on powers of x^3).
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(int order, std::vector<BigInt> coeffs);
  static PowerSeries one(int order);

  int order() const { return order_; }
  const BigInt& coeff(int k) const { return coeffs_[k]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Composition a(b) for b with zero constant term.
  PowerSeries compose(const PowerSeries& inner) const;

 private:
  int order_ = 0;
  std::vector<BigInt> coeffs_;  // size order_ + 1
};

struct SeriesIdentityReport {
  int n_max = 0;
  bool k_identity_holds = false;      // K(x) = 1 + K^c(x K(x))
  std::vector<BigInt> web_counts;     // W_n solved from W(x) = 1 + W^c(x W(x))
  std::vector<BigInt> word_counts;    // K_n for reference
  std::vector<BigInt> connected_word_counts;
  std::vector<BigInt> connected_web_counts;
};

/// Builds K, K^c, W^c from the closed formulas, checks the K composition
/// identity exactly, and solves the W identity coefficient-by-coefficient.
SeriesIdentityReport series_identity_check(int n_max);

/// The sieving polynomial
///   f(q) = prod_{j=1}^{3n} (1-q^{2j})
///        / ( prod_{j=2}^{2n+1} (1-q^j) * prod_{j=2}^{n+1} (1-q^{2j}) ),
/// computed by exact division.  Throws not_polynomial_error or
/// negative_coefficient_error; asserts f(1) equals kreweras_count(n).
IntPolynomial csp_polynomial(int n);

struct CspReport {
  int n = 0;
  bool pass = false;
  std::map<int, long long> orbit_histogram;  // orbit size -> number of orbits
  IntPolynomial f;
  std::vector<BigInt> orbit_sum_mod;  // sum over orbits of q-powers, mod q^{6n}-1
};

/// Verifies the orbit-sum congruence f(q) == sum_orbits sum_t q^{t (6n/|O|)}
/// modulo q^{6n}-1 by exhaustive orbit decomposition.
CspReport csp_check(int n);

/// 3^{floor(n/2)} 4^{ceil(n/2)} prod (3j-1) prod (3j-2) / (n+1)!.
BigInt evac_fixed_formula(int n);

struct EvacFixedReport {
  int n = 0;
  BigInt formula;
  BigInt dual_evac_fixed;  // brute-force count of words with evac*(w) = w
  BigInt evac_fixed;       // brute-force count of words with evac(w) = w
  bool pass = false;
};

EvacFixedReport evac_fixed_check(int n);

/// Order polynomial of V(n) by the product formula
/// prod_{i=1}^{n} (m+1+i) * prod_{i=1}^{2n} (2m+i+1) / ((n+1)!(2n+1)!).
BigInt order_polynomial(int n, long long m);

/// Number of weakly order-preserving maps V(n) -> {0..m}, by dynamic
/// programming over the value profile at each rank.
BigInt ppartition_count(int n, long long m);

}  // namespace kreweras

#endif
