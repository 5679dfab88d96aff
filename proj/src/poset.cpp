#include "composet/poset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace composet {

Poset::Poset(std::vector<std::string> names,
             std::vector<std::pair<Letter, Letter>> relations)
    : names_(std::move(names)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("poset needs at least one element");
  {
    std::unordered_set<std::string> seen;
    for (const auto& nm : names_) {
      if (nm.empty()) throw std::invalid_argument("empty element name");
      if (!seen.insert(nm).second)
        throw std::invalid_argument("duplicate element name: " + nm);
    }
  }
  elements_.resize(n);
  for (int i = 0; i < n; ++i) elements_[i] = i;

  leq_.assign(static_cast<size_t>(n) * n, false);
  auto at = [&](Letter a, Letter b) -> std::vector<bool>::reference {
    return leq_[static_cast<size_t>(a) * n + b];
  };
  for (int i = 0; i < n; ++i) at(i, i) = true;
  for (const auto& [lo, hi] : relations) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw std::invalid_argument("relation endpoint out of range");
    if (lo == hi) throw std::invalid_argument("self-relation in cover list");
    at(lo, hi) = true;
  }
  // Warshall closure; fine at this scale.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (at(i, k))
        for (int j = 0; j < n; ++j)
          if (at(k, j)) at(i, j) = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) && at(j, i))
        throw std::invalid_argument("cycle in cover relations");

  upper_ideal_.resize(n);
  ideal_complement_.resize(n);
  cover_set_.resize(n);
  lower_covers_.resize(n);
  parent_.assign(n, kBottom);
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) (at(a, c) ? upper_ideal_ : ideal_complement_)[a].push_back(c);
    for (int c = 0; c < n; ++c) {
      if (!(a != c && at(a, c))) continue;
      bool is_cover = true;
      for (int b = 0; b < n && is_cover; ++b)
        if (b != a && b != c && at(a, b) && at(b, c)) is_cover = false;
      if (is_cover) {
        cover_set_[a].push_back(c);
        lower_covers_[c].push_back(a);
      }
    }
  }
  rooted_forest_ = true;
  for (int a = 0; a < n; ++a) {
    if (lower_covers_[a].empty()) {
      minimal_.push_back(a);
    } else if (lower_covers_[a].size() == 1) {
      parent_[a] = lower_covers_[a][0];
    } else {
      rooted_forest_ = false;
    }
  }
}

int Poset::checked(Letter a) const {
  if (a < 0 || a >= size()) throw std::out_of_range("element id out of range");
  return a;
}

const std::string& Poset::name(Letter a) const { return names_[checked(a)]; }

std::optional<Letter> Poset::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool Poset::leq(Letter a, Letter b) const {
  return leq_[static_cast<size_t>(checked(a)) * size() + checked(b)];
}

bool Poset::leq_hat(Letter a, Letter b) const {
  if (a == kBottom) return true;
  if (b == kBottom) return false;
  return leq(a, b);
}

const std::vector<Letter>& Poset::upper_ideal(Letter a) const {
  return upper_ideal_[checked(a)];
}
const std::vector<Letter>& Poset::ideal_complement(Letter a) const {
  return ideal_complement_[checked(a)];
}
const std::vector<Letter>& Poset::cover_set(Letter a) const {
  return cover_set_[checked(a)];
}
const std::vector<Letter>& Poset::lower_covers(Letter a) const {
  return lower_covers_[checked(a)];
}

bool Poset::is_minimal(Letter a) const { return lower_covers_[checked(a)].empty(); }

Letter Poset::parent(Letter a) const {
  if (!rooted_forest_)
    throw std::domain_error("parent is only defined on rooted forests");
  return parent_[checked(a)];
}

Poset make_chain(int n) {
  if (n < 1) throw std::domain_error("chain size must be positive");
  std::vector<std::string> names;
  std::vector<std::pair<Letter, Letter>> covers;
  names.reserve(n);
  for (int k = 1; k <= n; ++k) names.push_back(std::to_string(k));
  for (int k = 0; k + 1 < n; ++k) covers.emplace_back(k, k + 1);
  return Poset(std::move(names), std::move(covers));
}

Poset make_antichain(int q) {
  if (q < 1) throw std::domain_error("antichain size must be positive");
  std::vector<std::string> names;
  names.reserve(q);
  for (int i = 0; i < q; ++i) {
    if (q <= 26)
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      names.push_back("e" + std::to_string(i + 1));
  }
  return Poset(std::move(names), {});
}

Poset make_lambda() {
  return Poset({"a", "b", "c"}, {{0, 2}, {1, 2}});
}

Poset parse_poset(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("poset document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("covers"))
    throw std::invalid_argument("poset document needs 'elements' and 'covers' arrays");
  std::vector<std::string> names;
  for (const auto& e : doc.at("elements")) {
    if (!e.is_string()) throw std::invalid_argument("'elements' must hold strings");
    names.push_back(e.get<std::string>());
  }
  std::unordered_map<std::string, Letter> ids;
  for (size_t i = 0; i < names.size(); ++i) ids[names[i]] = static_cast<Letter>(i);
  std::vector<std::pair<Letter, Letter>> covers;
  for (const auto& pair : doc.at("covers")) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw std::invalid_argument("'covers' must hold [lower, upper] name pairs");
    for (int side = 0; side < 2; ++side)
      if (!ids.count(pair[side].get<std::string>()))
        throw std::invalid_argument("unknown element in cover pair: " +
                                    pair[side].get<std::string>());
    covers.emplace_back(ids[pair[0].get<std::string>()], ids[pair[1].get<std::string>()]);
  }
  return Poset(std::move(names), std::move(covers));
}

}  // namespace composet
