#include "composet/genfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace composet {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Int> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Int& c) {
  return Polynomial(std::vector<Int>{c});
}

Polynomial Polynomial::monomial(const Int& c, int power) {
  if (power < 0) throw std::domain_error("negative power");
  std::vector<Int> coeffs(power + 1, 0);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

Int Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[power];
}

Int Polynomial::leading() const { return is_zero() ? Int(0) : coeffs_.back(); }

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator-() const {
  std::vector<Int> out = coeffs_;
  for (Int& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  std::vector<Int> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Int& c) const {
  std::vector<Int> out = coeffs_;
  for (Int& v : out) v *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial result;
  for (int i = degree(); i >= 0; --i)
    result = result * inner + Polynomial::constant(coeffs_[i]);
  return result;
}

Int Polynomial::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) g = int_gcd(g, c);
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  Int g = content();
  std::vector<Int> out = coeffs_;
  for (Int& c : out) c /= g;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return Polynomial();
  if (degree() < divisor.degree())
    throw std::domain_error("inexact polynomial division");
  std::vector<Int> rem = coeffs_;
  std::vector<Int> quot(degree() - divisor.degree() + 1, 0);
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    Int top = rem[i + divisor.degree()];
    if (top == 0) continue;
    if (top % divisor.leading() != 0)
      throw std::domain_error("inexact polynomial division");
    Int q = top / divisor.leading();
    quot[i] = q;
    for (int j = 0; j <= divisor.degree(); ++j)
      rem[i + j] -= q * divisor.coefficient(j);
  }
  for (const Int& c : rem)
    if (c != 0) throw std::domain_error("inexact polynomial division");
  return Polynomial(std::move(quot));
}

namespace {

// Pseudo-remainder of a by b (deg a >= deg b > ...), standard prem.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b) {
  const Int lead = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const int shift = a.degree() - b.degree();
    Polynomial subtrahend =
        b * Polynomial::monomial(a.leading(), shift);
    a = a.scaled(lead) - subtrahend;
  }
  return a;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return Polynomial();
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  const Int content_gcd = int_gcd(a.content(), b.content());
  Polynomial p = a.primitive_part();
  Polynomial q = b.primitive_part();
  if (p.degree() < q.degree()) std::swap(p, q);
  while (!q.is_zero()) {
    Polynomial r = pseudo_rem(p, q).primitive_part();
    p = std::move(q);
    q = std::move(r);
  }
  Polynomial g = p.scaled(content_gcd);
  return g.leading() < 0 ? -g : g;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    const Int magnitude = int_abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (i == 0) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) out += magnitude.str() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------- RationalFn

RationalFn::RationalFn(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  canonicalize();
}

RationalFn RationalFn::constant(const Int& c) {
  return RationalFn(Polynomial::constant(c), Polynomial::constant(1));
}

void RationalFn::canonicalize() {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = Polynomial::gcd(num_, den_);
  num_ = num_.divide_exact(g);
  den_ = den_.divide_exact(g);
  if (den_.coefficient(0) == 0)
    throw std::domain_error("function has no power-series expansion at 0");
  if (den_.coefficient(0) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFn RationalFn::operator+(const RationalFn& other) const {
  return RationalFn(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFn RationalFn::operator-(const RationalFn& other) const {
  return RationalFn(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn RationalFn::operator*(const RationalFn& other) const {
  return RationalFn(num_ * other.num_, den_ * other.den_);
}

RationalFn RationalFn::operator/(const RationalFn& other) const {
  if (other.is_zero()) throw std::domain_error("division by zero function");
  return RationalFn(num_ * other.den_, den_ * other.num_);
}

RationalFn RationalFn::pow(int exponent) const {
  if (exponent < 0) throw std::domain_error("negative exponent");
  RationalFn result = constant(1);
  for (int i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

std::vector<Int> RationalFn::taylor(int degree) const {
  if (degree < 0) throw std::domain_error("taylor degree must be >= 0");
  const Int q0 = den_.coefficient(0);
  std::vector<Int> out(degree + 1, 0);
  for (int k = 0; k <= degree; ++k) {
    Int acc = num_.coefficient(k);
    for (int j = 1; j <= std::min(k, den_.degree()); ++j)
      acc -= den_.coefficient(j) * out[k - j];
    if (acc % q0 != 0)
      throw std::domain_error("non-integer power-series coefficient");
    out[k] = acc / q0;
  }
  return out;
}

std::string RationalFn::to_string(const std::string& var) const {
  if (den_ == Polynomial::constant(1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

// ------------------------------------------------------------------ helpers

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

Int binomial(int64_t n, int64_t k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < k) return 0;
  Int result = 1;
  for (int64_t j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;  // exact at every step
  }
  return result;
}

int64_t type_length(const TypeVector& t) {
  int64_t total = 0;
  for (int64_t l : t) total += l;
  return total;
}

int64_t type_norm(const TypeVector& t) {
  int64_t total = 0;
  for (size_t k = 0; k < t.size(); ++k) total += static_cast<int64_t>(k + 1) * t[k];
  return total;
}

namespace {

Polynomial one_minus_monomial(const Int& c, int power) {
  return Polynomial::constant(1) - Polynomial::monomial(c, power);
}

void check_type(const TypeVector& type, int n) {
  if (static_cast<int>(type.size()) != n)
    throw std::invalid_argument("type vector length must equal n");
  for (int64_t l : type)
    if (l < 0) throw std::invalid_argument("type multiplicities must be >= 0");
}

}  // namespace

// ---------------------------------------------------- generating functions

RationalFn Z_norm(const TypeVector& type, int n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  check_type(type, n);
  RationalFn result(one_minus_monomial(1, 1),
                    Polynomial::constant(1) - Polynomial::monomial(2, 1) +
                        Polynomial::monomial(1, n + 1));
  for (int k = 1; k <= n; ++k) {
    if (type[k - 1] == 0) continue;
    RationalFn factor(
        Polynomial::monomial(1, k) - Polynomial::monomial(1, n + 1),
        Polynomial::constant(1) - Polynomial::monomial(2, 1) +
            Polynomial::monomial(1, k));
    result = result * factor.pow(static_cast<int>(type[k - 1]));
  }
  return result;
}

RationalFn M_norm(const TypeVector& type, int n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  check_type(type, n);
  const int64_t len = type_length(type);
  const int64_t nrm = type_norm(type);
  Polynomial numerator = Polynomial::monomial(1, static_cast<int>(nrm));
  for (int64_t i = 0; i < 2 * len + 1; ++i)
    numerator = numerator * one_minus_monomial(1, 1);
  Polynomial denominator = Polynomial::constant(1);
  const int64_t first_last = type[0] + type[n - 1];  // 2*l_1 when n = 1
  for (int64_t i = 0; i < first_last; ++i)
    denominator = denominator * one_minus_monomial(1, 1);
  for (int k = 2; k <= n; ++k)
    for (int64_t i = 0; i < type[k - 2] + type[k - 1]; ++i)
      denominator = denominator * one_minus_monomial(1, k);
  return RationalFn(std::move(numerator), std::move(denominator));
}

RationalFn Z_len(const TypeVector& type, int n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  check_type(type, n);
  RationalFn result(Polynomial::constant(1), one_minus_monomial(n, 1));
  for (int k = 1; k <= n; ++k) {
    if (type[k - 1] == 0) continue;
    RationalFn factor(Polynomial::monomial(n - k + 1, 1),
                      one_minus_monomial(k - 1, 1));
    result = result * factor.pow(static_cast<int>(type[k - 1]));
  }
  return result;
}

RationalFn M_len(const TypeVector& type, int n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  check_type(type, n);
  if (type_length(type) == 0)
    return RationalFn(one_minus_monomial(1, 1), Polynomial::constant(1));
  return RationalFn();
}

RationalFn Z_P_norm(const TypeVector& type) {
  for (int64_t l : type)
    if (l < 0) throw std::invalid_argument("type multiplicities must be >= 0");
  RationalFn result(one_minus_monomial(1, 1), one_minus_monomial(2, 1));
  for (size_t idx = 0; idx < type.size(); ++idx) {
    if (type[idx] == 0) continue;
    const int k = static_cast<int>(idx) + 1;
    RationalFn factor(Polynomial::monomial(1, k),
                      Polynomial::constant(1) - Polynomial::monomial(2, 1) +
                          Polynomial::monomial(1, k));
    result = result * factor.pow(static_cast<int>(type[idx]));
  }
  return result;
}

RationalFn M_P_norm(const TypeVector& type) {
  for (int64_t l : type)
    if (l < 0) throw std::invalid_argument("type multiplicities must be >= 0");
  const int64_t len = type_length(type);
  const int64_t nrm = type_norm(type);
  auto multiplicity = [&](int k) -> int64_t {
    return k >= 1 && k <= static_cast<int>(type.size()) ? type[k - 1] : 0;
  };
  Polynomial numerator = Polynomial::monomial(1, static_cast<int>(nrm));
  for (int64_t i = 0; i < 2 * len + 1; ++i)
    numerator = numerator * one_minus_monomial(1, 1);
  Polynomial denominator = Polynomial::constant(1);
  for (int64_t i = 0; i < multiplicity(1); ++i)
    denominator = denominator * one_minus_monomial(1, 1);
  for (int k = 2; k <= static_cast<int>(type.size()) + 1; ++k)
    for (int64_t i = 0; i < multiplicity(k - 1) + multiplicity(k); ++i)
      denominator = denominator * one_minus_monomial(1, k);
  return RationalFn(std::move(numerator), std::move(denominator));
}

RationalFn Z_len_general(const Poset& p, const std::vector<int64_t>& type) {
  if (static_cast<int>(type.size()) != p.size())
    throw std::invalid_argument("type vector length must equal poset size");
  RationalFn result(Polynomial::constant(1), one_minus_monomial(p.size(), 1));
  for (Letter a : p.elements()) {
    if (type[a] == 0) continue;
    RationalFn factor(
        Polynomial::monomial(static_cast<int64_t>(p.upper_ideal(a).size()), 1),
        one_minus_monomial(static_cast<int64_t>(p.ideal_complement(a).size()),
                           1));
    result = result * factor.pow(static_cast<int>(type[a]));
  }
  return result;
}

RationalFn M_len_general(const Poset& p, const std::vector<int64_t>& type) {
  if (!p.rooted_forest())
    throw std::domain_error("mu generating function requires a rooted forest");
  if (static_cast<int>(type.size()) != p.size())
    throw std::invalid_argument("type vector length must equal poset size");
  const int64_t q = static_cast<int64_t>(p.minimal_elements().size());
  const Polynomial smirnov_den =
      Polynomial::constant(1) + Polynomial::monomial(q - 1, 1);
  RationalFn result(one_minus_monomial(1, 1), smirnov_den);
  for (Letter a : p.elements()) {
    if (type[a] == 0) continue;
    const int64_t covers = static_cast<int64_t>(p.cover_set(a).size());
    RationalFn factor(Polynomial::monomial(1 - covers, 1), smirnov_den);
    result = result * factor.pow(static_cast<int>(type[a]));
  }
  return result;
}

std::vector<RationalFn> f_iterate(int n, Grading g, int m) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  if (m < 0) throw std::domain_error("m must be >= 0");
  std::vector<RationalFn> tuple;
  tuple.reserve(n);
  for (int k = 1; k <= n; ++k)
    tuple.push_back(RationalFn(
        Polynomial::monomial(1, g == Grading::norm ? k : 1),
        Polynomial::constant(1)));
  for (int step = 0; step < m; ++step) {
    std::vector<RationalFn> next(n);
    RationalFn tail;  // A_k + ... + A_n, built from the right
    RationalFn head = RationalFn::constant(1);  // 1 - A_1 - ... - A_{k-1}
    std::vector<RationalFn> heads(n);
    for (int k = 0; k < n; ++k) {
      heads[k] = head;
      head = head - tuple[k];
    }
    for (int k = n - 1; k >= 0; --k) {
      tail = tail + tuple[k];
      next[k] = tail / heads[k];
    }
    tuple = std::move(next);
  }
  return tuple;
}

RationalFn zeta_power_genfun(const TypeVector& type, int n, int m, Grading g) {
  if (m < 0) throw std::domain_error("m must be >= 0");
  check_type(type, n);
  RationalFn result = RationalFn::constant(1);
  std::vector<RationalFn> tuple = f_iterate(n, g, 0);
  for (int i = 0; i < m; ++i) {
    if (i > 0) tuple = f_iterate(n, g, i);
    RationalFn denom = RationalFn::constant(1);
    for (const RationalFn& a : tuple) denom = denom - a;
    result = result * (RationalFn::constant(1) / denom);
  }
  tuple = f_iterate(n, g, m);
  for (int k = 0; k < n; ++k)
    result = result * tuple[k].pow(static_cast<int>(type[k]));
  return result;
}

// ------------------------------------------------------------- closed forms

Polynomial abar_norm(int m) {
  std::vector<Int> coeffs;
  for (int i = 0; i <= m; ++i) {
    Int c = binomial(floor_div(m + i, 2), i);
    if (floor_div(i, 2) % 2 != 0) c = -c;
    coeffs.push_back(c);
  }
  return Polynomial(std::move(coeffs));
}

Polynomial d_norm(int m) {
  std::vector<Int> coeffs;
  for (int i = 0; i <= std::max(0, m - 1); ++i) {
    Int c = binomial(floor_div(m + i - 1, 2), i);
    if (ceil_div(i, 2) % 2 != 0) c = -c;
    coeffs.push_back(c);
  }
  return Polynomial(std::move(coeffs));
}

std::pair<RationalFn, RationalFn> closed_am_bm_norm(int m) {
  if (m < 0) throw std::domain_error("m must be >= 0");
  RationalFn a(Polynomial::monomial(1, 1) * abar_norm(m), d_norm(m));
  RationalFn b(Polynomial::monomial(1, 2), d_norm(m) * d_norm(m + 1));
  return {a, b};
}

namespace {

Int exact_quotient(const Int& numerator, const Int& denominator) {
  if (denominator == 0 || numerator % denominator != 0)
    throw std::domain_error("coefficient formula is not an integer");
  return numerator / denominator;
}

Int pow2(int64_t e) {
  Int r = 1;
  for (int64_t i = 0; i < e; ++i) r *= 2;
  return r;
}

}  // namespace

Polynomial abar_len(int m) {
  std::vector<Int> coeffs;
  if (m % 2 == 0) {
    for (int i = 0; 2 * i <= m; ++i) {
      Int c = exact_quotient(Int(m + 1) * pow2(i) * binomial((m + 2 * i) / 2, (m - 2 * i) / 2),
                             2 * i + 1);
      coeffs.push_back(i % 2 == 0 ? c : -c);
    }
  } else {
    for (int i = 0; 2 * i + 1 <= m; ++i) {
      Int c = pow2(i + 1) * binomial((m + 2 * i + 1) / 2, (m - 2 * i - 1) / 2);
      coeffs.push_back(i % 2 == 0 ? c : -c);
    }
  }
  return Polynomial(std::move(coeffs));
}

Polynomial d_len(int m) {
  // The m = 0, i = 0 coefficient formula is 0/0; the boundary value
  // consistent with a_0 = t is d_0 = 1.
  if (m == 0) return Polynomial::constant(1);
  std::vector<Int> coeffs;
  if (m % 2 == 0) {
    for (int i = 0; 2 * i <= m; ++i) {
      Int c = exact_quotient(Int(m) * pow2(i) * binomial((m + 2 * i) / 2, (m - 2 * i) / 2),
                             m + 2 * i);
      coeffs.push_back(i % 2 == 0 ? c : -c);
    }
  } else {
    for (int i = 0; 2 * i + 1 <= m; ++i) {
      Int c = pow2(i) * binomial((m + 2 * i - 1) / 2, (m - 2 * i - 1) / 2);
      coeffs.push_back(i % 2 == 0 ? c : -c);
    }
  }
  return Polynomial(std::move(coeffs));
}

std::pair<RationalFn, RationalFn> closed_am_bm_len(int m) {
  if (m < 0) throw std::domain_error("m must be >= 0");
  RationalFn a(Polynomial::monomial(1, 1) * abar_len(m), d_len(m));
  RationalFn b(Polynomial::monomial(1, 1), d_len(m) * d_len(m + 1));
  return {a, b};
}

std::pair<Int, Int> verify_sum_identity(int m, int k) {
  if (m < 0 || k < 0) throw std::domain_error("m and k must be >= 0");
  Int lhs = 0, rhs = 0;
  for (int i = 0; i <= k; ++i) {
    const bool negative = (floor_div(i, 2) + ceil_div(k - i, 2)) % 2 != 0;
    Int left_term = binomial(floor_div(m + i, 2), i) *
                    binomial(floor_div(m + k - i - 2, 2), k - i);
    Int right_term = binomial(floor_div(m + i - 1, 2), i) *
                     binomial(floor_div(m + k - i - 1, 2), k - i);
    lhs += negative ? -left_term : left_term;
    rhs += negative ? -right_term : right_term;
  }
  return {lhs, rhs};
}

}  // namespace composet
