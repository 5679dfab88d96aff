#include "composet/automata.hpp"

#include <algorithm>
#include <stdexcept>

namespace composet {

namespace {

std::string part_name(Letter x) {
  return x == kEpsilonPart ? "eps" : std::to_string(x + 1);
}

std::string monomial_text(const ArcMonomial& m, bool first) {
  std::string out;
  Int magnitude = m.coefficient < 0 ? Int(-m.coefficient) : m.coefficient;
  if (first)
    out += m.coefficient < 0 ? "-" : "";
  else
    out += m.coefficient < 0 ? " - " : " + ";
  if (magnitude != 1) out += magnitude.str() + "*";
  out += part_name(m.u_part) + "\xE2\x8A\x97" + part_name(m.w_part);
  return out;
}

}  // namespace

Automaton::Automaton(int n, std::vector<Arc> arcs) : n_(n) {
  if (n < 1) throw std::domain_error("automaton needs n >= 1");
  // Merge labels so there is at most one arc per ordered vertex pair.
  std::map<std::pair<int, int>, std::vector<ArcMonomial>> merged;
  for (auto& arc : arcs) {
    if (arc.src < 0 || arc.src >= vertex_count() || arc.dst < 0 ||
        arc.dst >= vertex_count())
      throw std::invalid_argument("arc endpoint out of range");
    auto& label = merged[{arc.src, arc.dst}];
    label.insert(label.end(), arc.label.begin(), arc.label.end());
  }
  for (auto& [key, label] : merged) {
    std::sort(label.begin(), label.end(), [](const auto& a, const auto& b) {
      return std::pair(a.u_part, a.w_part) < std::pair(b.u_part, b.w_part);
    });
    std::vector<ArcMonomial> combined;
    for (const auto& m : label) {
      if (!combined.empty() && combined.back().u_part == m.u_part &&
          combined.back().w_part == m.w_part)
        combined.back().coefficient += m.coefficient;
      else
        combined.push_back(m);
    }
    std::erase_if(combined, [](const auto& m) { return m.coefficient == 0; });
    if (!combined.empty()) arcs_.push_back({key.first, key.second, combined});
  }
}

std::string Automaton::vertex_name(int v) const {
  if (v == alpha()) return "alpha";
  if (v == omega()) return "omega";
  return "b" + std::to_string(v);
}

std::string Automaton::dump() const {
  std::string out;
  for (const Arc& arc : arcs_) {
    if (!out.empty()) out += '\n';
    out += vertex_name(arc.src) + " -> " + vertex_name(arc.dst) + " : ";
    for (size_t i = 0; i < arc.label.size(); ++i)
      out += monomial_text(arc.label[i], i == 0);
  }
  return out;
}

Int PairSeries::coefficient(const Word& u, const Word& w) const {
  auto it = terms_.find({u, w});
  return it == terms_.end() ? Int(0) : it->second;
}

void PairSeries::add_term(const Word& u, const Word& w, const Int& c) {
  if (c == 0 || static_cast<int>(w.size()) > bound_) return;
  auto [it, inserted] = terms_.emplace(std::make_pair(u, w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Automaton build_Z_automaton(int n) {
  if (n < 1) throw std::domain_error("automaton needs n >= 1");
  std::vector<Arc> arcs;
  const int omega = n + 1;

  // Loop at alpha: eps (x) [n].
  {
    std::vector<ArcMonomial> label;
    for (Letter j = 0; j < n; ++j) label.push_back({1, kEpsilonPart, j});
    arcs.push_back({0, 0, label});
  }
  // Into b_k from every vertex but omega; self-loops pick up eps (x) [k-1].
  for (int k = 1; k <= n; ++k) {
    for (int src = 0; src <= n; ++src) {
      std::vector<ArcMonomial> label;
      if (src == k)
        for (Letter j = 0; j < k - 1; ++j) label.push_back({1, kEpsilonPart, j});
      for (Letter j = k - 1; j < n; ++j) label.push_back({1, k - 1, j});
      arcs.push_back({src, k, label});
    }
  }
  for (int src = 0; src <= n; ++src)
    arcs.push_back({src, omega, {{1, kEpsilonPart, kEpsilonPart}}});
  return Automaton(n, std::move(arcs));
}

Automaton build_M_automaton(int n) {
  if (n < 1) throw std::domain_error("automaton needs n >= 1");
  std::vector<Arc> arcs;
  const int omega = n + 1;

  // Into b_1: (1 - eps) (x) 1, except the self-loop which is 1 (x) 1.
  for (int src = 0; src <= n; ++src) {
    std::vector<ArcMonomial> label{{1, 0, 0}};
    if (src != 1) label.push_back({-1, kEpsilonPart, 0});
    arcs.push_back({src, 1, label});
  }
  // Into b_k, k >= 2: (k - (k-1)) (x) k, self-loop (k - (k-1) + eps) (x) k.
  // A run of k's may open with the defect entry k-1, so the entering arcs
  // carry the -(k-1) monomial too; without it the series loses every pair
  // whose rightmost normal structure starts a high run lowered (already
  // mu(1,2) = -1 is unreachable with plain k (x) k entering labels).
  for (int k = 2; k <= n; ++k) {
    for (int src = 0; src <= n; ++src) {
      std::vector<ArcMonomial> label{{1, k - 1, k - 1}, {-1, k - 2, k - 1}};
      if (src == k) label.push_back({1, kEpsilonPart, k - 1});
      arcs.push_back({src, k, label});
    }
  }
  for (int src = 0; src <= n; ++src)
    arcs.push_back({src, omega, {{1, kEpsilonPart, kEpsilonPart}}});
  return Automaton(n, std::move(arcs));
}

PairSeries accept_series(const Automaton& d, int bound) {
  if (bound < 0) throw std::domain_error("bound must be >= 0");
  const int omega = d.omega();
  for (const Arc& arc : d.arcs()) {
    if (arc.dst == omega) {
      if (arc.label.size() != 1 || arc.label[0].u_part != kEpsilonPart ||
          arc.label[0].w_part != kEpsilonPart || arc.label[0].coefficient != 1)
        throw std::invalid_argument("arcs into omega must be labeled eps@eps");
    } else {
      for (const ArcMonomial& m : arc.label)
        if (m.w_part == kEpsilonPart)
          throw std::invalid_argument(
              "non-final arcs must consume one target letter per monomial");
    }
  }

  using Layer = std::map<std::pair<Word, Word>, Int>;
  std::vector<Layer> weight(d.vertex_count());
  weight[d.alpha()][{Word{}, Word{}}] = 1;

  PairSeries result(bound);
  auto drain_to_omega = [&]() {
    for (const Arc& arc : d.arcs()) {
      if (arc.dst != omega) continue;
      for (const auto& [pair, c] : weight[arc.src])
        result.add_term(pair.first, pair.second, c);
    }
  };

  drain_to_omega();
  for (int step = 0; step < bound; ++step) {
    std::vector<Layer> next(d.vertex_count());
    for (const Arc& arc : d.arcs()) {
      if (arc.dst == omega) continue;
      const Layer& src_layer = weight[arc.src];
      if (src_layer.empty()) continue;
      for (const auto& [pair, c] : src_layer) {
        for (const ArcMonomial& m : arc.label) {
          Word u = pair.first;
          Word w = pair.second;
          if (m.u_part != kEpsilonPart) u.push_back(m.u_part);
          w.push_back(m.w_part);
          auto [it, inserted] =
              next[arc.dst].emplace(std::make_pair(std::move(u), std::move(w)),
                                    c * m.coefficient);
          if (!inserted) {
            it->second += c * m.coefficient;
            if (it->second == 0) next[arc.dst].erase(it);
          }
        }
      }
    }
    weight = std::move(next);
    drain_to_omega();
  }
  return result;
}

}  // namespace composet
