#include "composet/incidence.hpp"

#include <set>
#include <stdexcept>

namespace composet {

namespace {

// Every v <= w arises by keeping a subset of positions of w and lowering
// each kept letter within the poset.
void collect_dominated(const Word& w, const Poset& p, size_t i, Word& prefix,
                       std::set<Word>& out) {
  if (i == w.size()) {
    out.insert(prefix);
    return;
  }
  collect_dominated(w, p, i + 1, prefix, out);
  for (Letter below : p.elements()) {
    if (!p.leq(below, w[i])) continue;
    prefix.push_back(below);
    collect_dominated(w, p, i + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

const std::vector<Word>& IntervalCache::interval(const Word& u,
                                                 const Word& w) {
  auto key = std::make_pair(u, w);
  auto it = intervals_.find(key);
  if (it != intervals_.end()) return it->second;

  std::vector<Word> members;
  if (leq_words(u, w, poset_)) {
    std::set<Word> dominated;
    Word prefix;
    collect_dominated(w, poset_, 0, prefix, dominated);
    for (const Word& v : dominated)
      if (leq_words(u, v, poset_)) members.push_back(v);
  }
  return intervals_.emplace(std::move(key), std::move(members)).first->second;
}

Int IntervalCache::zeta(const Word& u, const Word& w) {
  return leq_words(u, w, poset_) ? 1 : 0;
}

Int IntervalCache::mobius(const Word& u, const Word& w) {
  if (u == w) return 1;
  if (!leq_words(u, w, poset_)) return 0;
  auto key = std::make_pair(u, w);
  auto it = mobius_.find(key);
  if (it != mobius_.end()) return it->second;

  Int total = 0;
  for (const Word& v : interval(u, w))
    if (v != w) total += mobius(u, v);
  Int value = -total;
  mobius_.emplace(std::move(key), value);
  return value;
}

Int IntervalCache::zeta_power(const Word& u, const Word& w, int m) {
  if (m < 0) throw std::domain_error("zeta power needs m >= 0");
  if (m == 0) return u == w ? 1 : 0;
  const std::vector<Word>& members = interval(u, w);
  if (members.empty()) return 0;

  const size_t count = members.size();
  std::vector<std::vector<bool>> below(count, std::vector<bool>(count));
  for (size_t i = 0; i < count; ++i)
    for (size_t j = 0; j < count; ++j)
      below[i][j] = leq_words(members[i], members[j], poset_);

  size_t u_at = 0, w_at = 0;
  for (size_t i = 0; i < count; ++i) {
    if (members[i] == u) u_at = i;
    if (members[i] == w) w_at = i;
  }
  std::vector<Int> chains(count, 0);
  chains[u_at] = 1;  // zeta^0
  for (int step = 0; step < m; ++step) {
    std::vector<Int> next(count, 0);
    for (size_t i = 0; i < count; ++i) {
      if (chains[i] == 0) continue;
      for (size_t j = 0; j < count; ++j)
        if (below[i][j]) next[j] += chains[i];
    }
    chains = std::move(next);
  }
  return chains[w_at];
}

bool IntervalCache::convolution_check(const Word& u, const Word& w,
                                      MobiusMethod method) {
  Int total = 0;
  for (const Word& v : interval(u, w))
    total += method == MobiusMethod::normal ? mobius_normal(v, w, poset_)
                                            : mobius(v, w);
  return total == (u == w ? 1 : 0);
}

Int mobius_normal(const Word& u, const Word& w, const Poset& p) {
  if (!p.rooted_forest())
    throw std::domain_error(
        "mobius via normal embeddings requires a rooted forest");
  if (!leq_words(u, w, p)) return 0;
  Int total = 0;
  for (const Embedding& e : normal_embeddings(u, w, p))
    total += defect(e, p) % 2 == 0 ? 1 : -1;
  return total;
}

}  // namespace composet
