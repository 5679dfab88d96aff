#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "composet/poset.hpp"

namespace composet {

/// A word is a finite sequence of poset element ids; the empty vector is
/// the empty word. Words compare and hash as plain sequences.
using Word = std::vector<Letter>;

/// Sum of the letters read as chain values (id + 1). Only meaningful over
/// chain posets, where letter k has id k-1.
int64_t norm(const Word& w);

/// Occurrence counts (l_1, ..., l_n) indexed by element id.
std::vector<int64_t> word_type(const Word& w, int alphabet_size);

/// Maximal constant interval of a word; positions are 0-based, inclusive.
struct Run {
  Letter letter;
  int first;
  int last;
};

/// The runs of w in left-to-right order; they partition [0, len(w)).
std::vector<Run> runs(const Word& w);

/// An expansion of some word u over P union {0-hat}, pinned to a target
/// word w of the same length: entries(i) <= w(i) in the poset with bottom
/// adjoined, and reading off the non-bottom entries gives u.
struct Embedding {
  Word target;
  std::vector<Letter> entries;  // kBottom marks empty positions

  std::vector<int> support() const;
  Word restriction() const;
  bool operator==(const Embedding& other) const = default;
};

/// Generalized subword order: true iff some subsequence of w dominates u
/// letterwise in P. Greedy right-to-left scan.
bool leq_words(const Word& u, const Word& w, const Poset& p);

/// The embedding whose support dominates the support of every embedding of
/// u into w componentwise, or nullopt when u is not below w.
std::optional<Embedding> rightmost_embedding(const Word& u, const Word& w,
                                             const Poset& p);

/// Every embedding of u into w; empty exactly when u is not below w.
std::vector<Embedding> all_embeddings(const Word& u, const Word& w,
                                      const Poset& p);

/// The normal embeddings of u into w, i.e. those with every entry in
/// {w(i), parent(w(i)), 0-hat} and, for every run [r,t] of a letter a,
/// (r,t] inside the support when a is minimal and r in the support
/// otherwise (singleton runs included). Requires a rooted forest.
std::vector<Embedding> normal_embeddings(const Word& u, const Word& w,
                                         const Poset& p);

/// Number of positions i (support or not) with entries(i) = parent(w(i));
/// at positions where w(i) is minimal this counts entries(i) = 0-hat.
/// Requires a rooted forest.
int defect(const Embedding& e, const Poset& p);

/// Comma-separated letter names; "" and "eps" both denote the empty word.
Word parse_word(const std::string& text, const Poset& p);
std::string format_word(const Word& w, const Poset& p);
/// Entries with "0" for bottom, e.g. "2,1,0,1,1,3,0".
std::string format_embedding(const Embedding& e, const Poset& p);

}  // namespace composet
