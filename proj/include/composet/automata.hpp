#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "composet/integer.hpp"
#include "composet/words.hpp"

namespace composet {

/// One signed monomial x (tensor) y on an automaton arc; kEpsilonPart marks
/// an epsilon component. Letters are chain element ids (value k has id k-1).
inline constexpr Letter kEpsilonPart = -1;

struct ArcMonomial {
  Int coefficient;
  Letter u_part;
  Letter w_part;
};

struct Arc {
  int src;
  int dst;
  std::vector<ArcMonomial> label;
};

/// A weighted finite-state automaton over the pair alphabet of a chain [n].
/// Vertices: 0 = alpha, 1..n = b_1..b_n, n+1 = omega. Labels are stored
/// pre-expanded into signed monomial lists, merged to one arc per ordered
/// vertex pair. Structural invariants: every arc into omega is labeled
/// eps(x)eps, and every other arc consumes exactly one target letter per
/// monomial (which is what makes evaluation terminate).
class Automaton {
 public:
  Automaton(int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  int vertex_count() const { return n_ + 2; }
  int alpha() const { return 0; }
  int omega() const { return n_ + 1; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::string vertex_name(int v) const;
  /// One line per arc: "src -> dst : x@y + ...", with "@" the tensor mark
  /// spelled as a UTF-8 circled times.
  std::string dump() const;

 private:
  int n_;
  std::vector<Arc> arcs_;
};

/// The pair series accepted up to a bound on the length of the target word.
class PairSeries {
 public:
  explicit PairSeries(int bound) : bound_(bound) {}

  int bound() const { return bound_; }
  const std::map<std::pair<Word, Word>, Int>& terms() const { return terms_; }
  Int coefficient(const Word& u, const Word& w) const;
  void add_term(const Word& u, const Word& w, const Int& c);

 private:
  int bound_;
  std::map<std::pair<Word, Word>, Int> terms_;
};

/// The automaton whose accepted series has coefficient zeta(u, w) at
/// u (tensor) w over the chain [n].
Automaton build_Z_automaton(int n);

/// The automaton whose accepted series has coefficient mu(u, w).
Automaton build_M_automaton(int n);

/// Exact coefficients of every pair with len(w) <= bound, by dynamic
/// programming over (vertex, consumed target length); the epsilon arcs into
/// omega transfer every layer into the result.
PairSeries accept_series(const Automaton& d, int bound);

}  // namespace composet
