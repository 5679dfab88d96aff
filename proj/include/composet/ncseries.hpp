#pragma once

#include <map>
#include <string>
#include <vector>

#include "composet/integer.hpp"
#include "composet/poset.hpp"
#include "composet/words.hpp"

namespace composet {

/// Words are graded either by length or by norm (sum of chain values);
/// truncation, star termination and printing all follow the grading.
enum class Grading { length, norm };

int64_t grade(const Word& w, Grading g);

/// A formal power series in noncommuting poset letters with exact integer
/// coefficients, truncated to a fixed grade bound. Two series interoperate
/// only when grading and bound agree. Values are immutable in use: all
/// operations return fresh series.
class NCSeries {
 public:
  NCSeries(Grading g, int bound);

  static NCSeries zero(Grading g, int bound) { return NCSeries(g, bound); }
  /// The empty word with coefficient 1.
  static NCSeries one(Grading g, int bound);
  static NCSeries monomial(const Word& w, Grading g, int bound,
                           const Int& coefficient = 1);

  Grading grading() const { return grading_; }
  int bound() const { return bound_; }
  const std::map<Word, Int>& terms() const { return terms_; }
  Int coefficient(const Word& w) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * w, dropping the term if its grade exceeds the bound.
  void add_term(const Word& w, const Int& c);

  NCSeries operator+(const NCSeries& other) const;
  NCSeries operator-(const NCSeries& other) const;
  NCSeries operator*(const NCSeries& other) const;
  NCSeries scaled(const Int& c) const;

  /// f* = eps + f + f^2 + ... ; requires zero constant term.
  NCSeries star() const;
  /// f+ = f* - eps.
  NCSeries plus() const;

  bool operator==(const NCSeries& other) const = default;

  /// "coef*word" lines sorted by grade then lexicographically.
  std::string to_string(const Poset& p) const;

 private:
  void require_compatible(const NCSeries& other) const;

  Grading grading_;
  int bound_;
  std::map<Word, Int> terms_;
};

/// Sum of the given letters as length-one monomials.
NCSeries letter_sum(const std::vector<Letter>& letters, Grading g, int bound);

/// Signed Smirnov series over O_P: all words in the minimal letters with no
/// two equal adjacent letters, each with coefficient (-1)^length. When
/// forbidden_first is a letter, words starting with it are excluded. For a
/// single minimal element this is eps - o.
NCSeries smirnov_series(const Poset& p, Grading g, int bound,
                        Letter forbidden_first = kBottom);

/// z(a) = I_a * (J_a)^* ; valid over any poset.
NCSeries z_builder(Letter a, const Poset& p, Grading g, int bound);

/// The Mobius building block for rooted forests. For minimal a,
///   m(a) = a * S(!=a) - (sum over covers c of a of c+) * S,
/// and otherwise
///   m(a) = (a+ - sum over covers c of a of c+) * S,
/// where S is the signed Smirnov series over the minimal letters and
/// S(!=a) the variant whose words avoid starting with a. Over a chain both
/// reduce to the classical displays with S = eps - 1.
NCSeries m_builder(Letter a, const Poset& p, Grading g, int bound);

/// Z(u) = P^* z(u(1)) ... z(u(l)); coefficients are zeta(u, .).
NCSeries series_Z(const Word& u, const Poset& p, Grading g, int bound);

/// M(u) = S m(u(1)) ... m(u(l)); coefficients are mu(u, .). Requires a
/// rooted forest.
NCSeries series_M(const Word& u, const Poset& p, Grading g, int bound);

/// Extends m multiplicatively over words and linearly over f.
NCSeries apply_m(const NCSeries& f, const Poset& p);

struct IdentityCheck {
  std::string name;
  bool pass;
  std::string detail;  // first offending coefficient when failing
};

struct TelescopingReport {
  std::vector<IdentityCheck> identities;
  bool all_pass;
};

/// Checks (eps - 1) * m([n])^* = eps and m(z(k)) = k for k = 1..min(n,3)
/// over the chain [n], truncated to the bound. Under norm grading with
/// n >= bound the truncation is exact.
TelescopingReport verify_telescoping(int n, Grading g, int bound);

}  // namespace composet
