#include "composet/words.hpp"

#include <stdexcept>

namespace composet {

int64_t norm(const Word& w) {
  int64_t total = 0;
  for (Letter a : w) total += a + 1;
  return total;
}

std::vector<int64_t> word_type(const Word& w, int alphabet_size) {
  std::vector<int64_t> counts(alphabet_size, 0);
  for (Letter a : w) counts.at(a) += 1;
  return counts;
}

std::vector<Run> runs(const Word& w) {
  std::vector<Run> result;
  int i = 0;
  const int len = static_cast<int>(w.size());
  while (i < len) {
    int j = i;
    while (j + 1 < len && w[j + 1] == w[i]) ++j;
    result.push_back({w[i], i, j});
    i = j + 1;
  }
  return result;
}

std::vector<int> Embedding::support() const {
  std::vector<int> positions;
  for (int i = 0; i < static_cast<int>(entries.size()); ++i)
    if (entries[i] != kBottom) positions.push_back(i);
  return positions;
}

Word Embedding::restriction() const {
  Word u;
  for (Letter a : entries)
    if (a != kBottom) u.push_back(a);
  return u;
}

bool leq_words(const Word& u, const Word& w, const Poset& p) {
  return rightmost_embedding(u, w, p).has_value();
}

std::optional<Embedding> rightmost_embedding(const Word& u, const Word& w,
                                             const Poset& p) {
  Embedding e{w, std::vector<Letter>(w.size(), kBottom)};
  int pos = static_cast<int>(w.size()) - 1;
  for (int j = static_cast<int>(u.size()) - 1; j >= 0; --j) {
    while (pos >= 0 && !p.leq(u[j], w[pos])) --pos;
    if (pos < 0) return std::nullopt;
    e.entries[pos] = u[j];
    --pos;
  }
  return e;
}

namespace {

void collect_embeddings(const Word& u, const Word& w, const Poset& p, size_t i,
                        size_t j, std::vector<Letter>& entries,
                        std::vector<Embedding>& out) {
  if (u.size() - j > w.size() - i) return;  // not enough positions left
  if (i == w.size()) {
    out.push_back({w, entries});
    return;
  }
  entries[i] = kBottom;
  collect_embeddings(u, w, p, i + 1, j, entries, out);
  if (j < u.size() && p.leq(u[j], w[i])) {
    entries[i] = u[j];
    collect_embeddings(u, w, p, i + 1, j + 1, entries, out);
    entries[i] = kBottom;
  }
}

}  // namespace

std::vector<Embedding> all_embeddings(const Word& u, const Word& w,
                                      const Poset& p) {
  std::vector<Embedding> out;
  std::vector<Letter> entries(w.size(), kBottom);
  collect_embeddings(u, w, p, 0, 0, entries, out);
  return out;
}

std::vector<Embedding> normal_embeddings(const Word& u, const Word& w,
                                         const Poset& p) {
  if (!p.rooted_forest())
    throw std::domain_error(
        "normal embeddings are only defined over rooted forests");
  const int len = static_cast<int>(w.size());
  // run_start[i]: position i opens a run of w.
  std::vector<bool> run_start(len, false);
  for (const Run& r : runs(w)) run_start[r.first] = true;

  std::vector<Embedding> out;
  std::vector<Letter> entries(len, kBottom);
  // Position i may stay empty iff it opens a run of a minimal letter or is
  // a non-opening position of a non-minimal letter's run.
  auto may_skip = [&](int i) {
    return p.is_minimal(w[i]) ? run_start[i] : !run_start[i];
  };
  auto rec = [&](auto&& self, int i, size_t j) -> void {
    if (u.size() - j > static_cast<size_t>(len - i)) return;
    if (i == len) {
      if (j == u.size()) out.push_back({w, entries});
      return;
    }
    if (may_skip(i)) self(self, i + 1, j);
    if (j < u.size() && (u[j] == w[i] || u[j] == p.parent(w[i]))) {
      entries[i] = u[j];
      self(self, i + 1, j + 1);
      entries[i] = kBottom;
    }
  };
  rec(rec, 0, 0);
  return out;
}

int defect(const Embedding& e, const Poset& p) {
  if (!p.rooted_forest())
    throw std::domain_error("defect is only defined over rooted forests");
  int count = 0;
  for (size_t i = 0; i < e.entries.size(); ++i)
    if (e.entries[i] == p.parent(e.target[i])) ++count;
  return count;
}

Word parse_word(const std::string& text, const Poset& p) {
  if (text.empty() || text == "eps") return {};
  Word w;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string piece = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    auto id = p.find(piece);
    if (!id)
      throw std::invalid_argument("unknown letter '" + piece + "' in word '" +
                                  text + "'");
    w.push_back(*id);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return w;
}

std::string format_word(const Word& w, const Poset& p) {
  if (w.empty()) return "eps";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += p.name(w[i]);
  }
  return out;
}

std::string format_embedding(const Embedding& e, const Poset& p) {
  if (e.entries.empty()) return "eps";
  std::string out;
  for (size_t i = 0; i < e.entries.size(); ++i) {
    if (i) out += ',';
    out += e.entries[i] == kBottom ? "0" : p.name(e.entries[i]);
  }
  return out;
}

}  // namespace composet
