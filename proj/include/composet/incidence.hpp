#pragma once

#include <map>
#include <utility>
#include <vector>

#include "composet/integer.hpp"
#include "composet/poset.hpp"
#include "composet/words.hpp"

namespace composet {

enum class MobiusMethod { oracle, normal };

/// Memoized incidence-algebra computations on intervals of P*. This is the
/// ground truth the formula-based routes are checked against: mobius() is
/// the plain recursive definition and never consults normal embeddings.
///
/// Single-writer: use one cache per thread or synchronize externally.
class IntervalCache {
 public:
  explicit IntervalCache(Poset p) : poset_(std::move(p)) {}

  const Poset& poset() const { return poset_; }

  /// All v with u <= v <= w, each once, in a fixed (lexicographic) order.
  /// Empty when u is not below w.
  const std::vector<Word>& interval(const Word& u, const Word& w);

  /// zeta(u, w): 1 if u <= w else 0.
  Int zeta(const Word& u, const Word& w);

  /// mu by the defining recursion: mu(u,u) = 1,
  /// mu(u,w) = -sum,  u <= v < w, of mu(u,v); 0 for incomparable pairs.
  Int mobius(const Word& u, const Word& w);

  /// Number of multichains u = v_0 <= v_1 <= ... <= v_m = w; zeta^0 is the
  /// Kronecker delta.
  Int zeta_power(const Word& u, const Word& w, int m);

  /// True iff sum over u <= v <= w of zeta(u,v) * mu(v,w) is 1 for u = w
  /// and 0 otherwise, with mu computed by the chosen method.
  bool convolution_check(const Word& u, const Word& w,
                         MobiusMethod method = MobiusMethod::oracle);

 private:
  Poset poset_;
  std::map<std::pair<Word, Word>, std::vector<Word>> intervals_;
  std::map<std::pair<Word, Word>, Int> mobius_;
};

/// mu via the normal-embedding formula: sum of (-1)^defect over the normal
/// embeddings of u into w. Requires a rooted forest; throws
/// std::domain_error otherwise rather than ever returning a wrong number.
Int mobius_normal(const Word& u, const Word& w, const Poset& p);

}  // namespace composet
