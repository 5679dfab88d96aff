#pragma once

#include <string>
#include <utility>
#include <vector>

#include "composet/integer.hpp"
#include "composet/ncseries.hpp"
#include "composet/poset.hpp"

namespace composet {

/// Univariate polynomial with exact integer coefficients, stored in
/// ascending powers with no trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> ascending);
  static Polynomial constant(const Int& c);
  static Polynomial monomial(const Int& c, int power);
  static Polynomial variable() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Int coefficient(int power) const;
  const std::vector<Int>& coefficients() const { return coeffs_; }
  Int leading() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Int& c) const;
  Polynomial compose(const Polynomial& inner) const;

  /// gcd of all coefficients (nonnegative); 0 for the zero polynomial.
  Int content() const;
  Polynomial primitive_part() const;
  /// Exact division; throws std::domain_error when the remainder is not 0.
  Polynomial divide_exact(const Polynomial& divisor) const;
  /// Full integer gcd (content gcd times primitive gcd), positive leading
  /// coefficient.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial& other) const = default;

  /// Ascending human form, e.g. "1 - t + 2*t^2".
  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Quotient of integer polynomials in canonical reduced form: coprime over
/// the rationals, contents coprime over the integers, denominator with
/// positive nonzero constant term (everything here expands at 0).
class RationalFn {
 public:
  RationalFn() : num_(), den_(Polynomial::constant(1)) {}
  RationalFn(Polynomial numerator, Polynomial denominator);
  static RationalFn constant(const Int& c);
  static RationalFn variable() { return RationalFn(Polynomial::variable(), Polynomial::constant(1)); }
  static RationalFn from(const Polynomial& p) { return RationalFn(p, Polynomial::constant(1)); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator+(const RationalFn& other) const;
  RationalFn operator-(const RationalFn& other) const;
  RationalFn operator-() const;
  RationalFn operator*(const RationalFn& other) const;
  /// Throws std::domain_error on a zero divisor.
  RationalFn operator/(const RationalFn& other) const;
  RationalFn pow(int exponent) const;

  /// The first degree+1 power-series coefficients at 0. Every function in
  /// this library has an integer expansion; a non-integer coefficient is
  /// reported as a domain error rather than rounded.
  std::vector<Int> taylor(int degree) const;

  bool operator==(const RationalFn& other) const = default;

  /// "num" when the denominator is 1, "(num) / (den)" otherwise.
  std::string to_string(const std::string& var) const;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

/// Binomial coefficient under the conventions used throughout: 0 for k < 0
/// or k > n, and 1 for k = 0 whatever n is (negative included).
Int binomial(int64_t n, int64_t k);

int64_t floor_div(int64_t a, int64_t b);
int64_t ceil_div(int64_t a, int64_t b);

/// Letter multiplicities (l_1, ..., l_n); index 0 counts the letter 1.
using TypeVector = std::vector<int64_t>;

int64_t type_length(const TypeVector& t);
int64_t type_norm(const TypeVector& t);

/// Norm generating function of zeta over [n]*:
/// (1-x)/(1-2x+x^{n+1}) * prod_k ((x^k - x^{n+1})/(1-2x+x^k))^{l_k}.
RationalFn Z_norm(const TypeVector& type, int n);

/// Norm generating function of mu over [n]*:
/// x^{|u|}(1-x)^{2 len(u)+1}/(1-x)^{l_1+l_n} * prod_{k=2..n} (1-x^k)^{-(l_{k-1}+l_k)}.
RationalFn M_norm(const TypeVector& type, int n);

/// Length generating function of zeta over [n]*:
/// 1/(1-nt) * prod_k ((n-k+1)t/(1-(k-1)t))^{l_k}.
RationalFn Z_len(const TypeVector& type, int n);

/// Length generating function of mu over all compositions: 1 - t when u is
/// empty and 0 otherwise. (Restricted to [n]* the sums differ; see
/// M_len_general for finite alphabets.)
RationalFn M_len(const TypeVector& type, int n);

/// Norm generating function of zeta over all compositions.
RationalFn Z_P_norm(const TypeVector& type);

/// Norm generating function of mu over all compositions.
RationalFn M_P_norm(const TypeVector& type);

/// Length generating function of zeta over P* for any finite poset;
/// type is indexed by element id. 1/(1-|P|t) * prod_a (|I_a|t/(1-|J_a|t))^{l_a}.
RationalFn Z_len_general(const Poset& p, const std::vector<int64_t>& type);

/// Length generating function of mu over P* for a rooted forest, derived
/// from the series builders: with q = |O_P|,
///   S(t) = (1-t)/(1+(q-1)t),  m(a; t) = (1-|C_a|) t / (1+(q-1)t),
///   M(u; t) = S(t) * prod_a m(a; t)^{l_a}.
/// Zero whenever u contains a letter covered by exactly one element.
RationalFn M_len_general(const Poset& p, const std::vector<int64_t>& type);

/// The tuple (f^m(x_1), ..., f^m(x_n)) after the grading substitution
/// (x_k -> x^k for norm, x_k -> t for length), computed by the univariate
/// recurrence A_k <- (A_k + ... + A_n)/(1 - A_1 - ... - A_{k-1}).
std::vector<RationalFn> f_iterate(int n, Grading g, int m);

/// Generating function of zeta^m over [n]* in the chosen grading:
/// prod_{i=0..m-1} 1/(1 - f^i(x_1) - ... - f^i(x_n)) * prod_k (f^m(x_k))^{l_k}.
RationalFn zeta_power_genfun(const TypeVector& type, int n, int m, Grading g);

/// Closed forms for n = 2 under the norm substitution:
/// a_m = x*abar_m/d_m and b_m = x^2/(d_m d_{m+1}).
Polynomial abar_norm(int m);
Polynomial d_norm(int m);
std::pair<RationalFn, RationalFn> closed_am_bm_norm(int m);

/// Closed forms for n = 2 under the length substitution:
/// a_m = t*abar_m/d_m and b_m = t/(d_m d_{m+1}).
Polynomial abar_len(int m);
Polynomial d_len(int m);
std::pair<RationalFn, RationalFn> closed_am_bm_len(int m);

/// Both sides of the double binomial-sum identity behind the closed norm
/// forms, evaluated exactly; they agree for k != 1 and differ by exactly 1
/// (left = right + 1) for k = 1.
std::pair<Int, Int> verify_sum_identity(int m, int k);

}  // namespace composet
