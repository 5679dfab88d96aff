#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace composet {

/// Dense element identifier within a Poset. The adjoined bottom element
/// (0-hat) is kBottom; it is never a member of any Poset.
using Letter = int;
inline constexpr Letter kBottom = -1;

/// A finite poset given by a list of named elements and order-generating
/// pairs. All order-theoretic caches (reflexive-transitive closure, upper
/// ideals, cover sets, forest structure) are built at construction; the
/// value is immutable afterwards and safe to share across threads.
class Poset {
 public:
  /// `relations` are (lower, upper) pairs of element ids. They are closed
  /// transitively; redundant pairs are harmless. Throws
  /// std::invalid_argument on duplicate/empty names, out-of-range ids or
  /// a cycle.
  Poset(std::vector<std::string> names,
        std::vector<std::pair<Letter, Letter>> relations);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Letter a) const;
  std::optional<Letter> find(std::string_view name) const;

  /// Reflexive order test.
  bool leq(Letter a, Letter b) const;
  bool less(Letter a, Letter b) const { return a != b && leq(a, b); }
  /// Order test in the poset with 0-hat adjoined below every element.
  bool leq_hat(Letter a, Letter b) const;

  const std::vector<Letter>& elements() const { return elements_; }
  /// O_P, the minimal elements.
  const std::vector<Letter>& minimal_elements() const { return minimal_; }
  /// I_a = { c : c >= a }.
  const std::vector<Letter>& upper_ideal(Letter a) const;
  /// J_a, the complement of I_a.
  const std::vector<Letter>& ideal_complement(Letter a) const;
  /// C_a, the elements covering a.
  const std::vector<Letter>& cover_set(Letter a) const;
  const std::vector<Letter>& lower_covers(Letter a) const;

  bool is_minimal(Letter a) const;
  /// True when every element has at most one lower cover, i.e. adjoining
  /// 0-hat below the minimal elements yields a tree.
  bool rooted_forest() const { return rooted_forest_; }
  /// a-minus: the unique lower cover of a, or kBottom when a is minimal.
  /// Throws std::domain_error unless rooted_forest().
  Letter parent(Letter a) const;

 private:
  int checked(Letter a) const;

  std::vector<std::string> names_;
  std::vector<Letter> elements_;
  std::vector<bool> leq_;  // row-major size x size
  std::vector<Letter> minimal_;
  std::vector<std::vector<Letter>> upper_ideal_;
  std::vector<std::vector<Letter>> ideal_complement_;
  std::vector<std::vector<Letter>> cover_set_;
  std::vector<std::vector<Letter>> lower_covers_;
  std::vector<Letter> parent_;
  bool rooted_forest_ = false;
};

/// The chain 1 < 2 < ... < n with element names "1".."n". Words over it are
/// integer compositions. Throws std::domain_error for n < 1.
Poset make_chain(int n);

/// q pairwise incomparable elements named "a", "b", ... ("e1", "e2", ...
/// beyond 26). Throws std::domain_error for q < 1.
Poset make_antichain(int q);

/// Three elements a, b, c with a < c and b < c; the smallest poset that is
/// not a rooted forest.
Poset make_lambda();

/// Parses a JSON document {"elements": ["a", ...], "covers": [["a","c"], ...]}.
Poset parse_poset(const std::string& text);

}  // namespace composet
