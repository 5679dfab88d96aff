#include "composet/ncseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace composet {

int64_t grade(const Word& w, Grading g) {
  return g == Grading::length ? static_cast<int64_t>(w.size()) : norm(w);
}

NCSeries::NCSeries(Grading g, int bound) : grading_(g), bound_(bound) {
  if (bound < 0) throw std::domain_error("series bound must be >= 0");
}

NCSeries NCSeries::one(Grading g, int bound) {
  return monomial({}, g, bound);
}

NCSeries NCSeries::monomial(const Word& w, Grading g, int bound,
                            const Int& coefficient) {
  NCSeries s(g, bound);
  s.add_term(w, coefficient);
  return s;
}

Int NCSeries::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

void NCSeries::add_term(const Word& w, const Int& c) {
  if (c == 0 || grade(w, grading_) > bound_) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void NCSeries::require_compatible(const NCSeries& other) const {
  if (grading_ != other.grading_ || bound_ != other.bound_)
    throw std::invalid_argument("series grading/bound mismatch");
}

NCSeries NCSeries::operator+(const NCSeries& other) const {
  require_compatible(other);
  NCSeries result = *this;
  for (const auto& [w, c] : other.terms_) result.add_term(w, c);
  return result;
}

NCSeries NCSeries::operator-(const NCSeries& other) const {
  require_compatible(other);
  NCSeries result = *this;
  for (const auto& [w, c] : other.terms_) result.add_term(w, -c);
  return result;
}

NCSeries NCSeries::operator*(const NCSeries& other) const {
  require_compatible(other);
  NCSeries result(grading_, bound_);
  for (const auto& [w1, c1] : terms_) {
    const int64_t g1 = grade(w1, grading_);
    for (const auto& [w2, c2] : other.terms_) {
      if (g1 + grade(w2, grading_) > bound_) continue;
      Word concat = w1;
      concat.insert(concat.end(), w2.begin(), w2.end());
      result.add_term(concat, c1 * c2);
    }
  }
  return result;
}

NCSeries NCSeries::scaled(const Int& c) const {
  NCSeries result(grading_, bound_);
  if (c == 0) return result;
  for (const auto& [w, coef] : terms_) result.add_term(w, coef * c);
  return result;
}

NCSeries NCSeries::star() const {
  if (coefficient({}) != 0)
    throw std::domain_error("star requires a series without constant term");
  NCSeries result = one(grading_, bound_);
  NCSeries power = one(grading_, bound_);
  // Each factor raises the minimum grade by at least one, so this stops.
  for (int k = 0; k < bound_; ++k) {
    power = power * *this;
    if (power.is_zero()) break;
    result = result + power;
  }
  return result;
}

NCSeries NCSeries::plus() const { return star() - one(grading_, bound_); }

std::string NCSeries::to_string(const Poset& p) const {
  std::vector<const std::pair<const Word, Int>*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& term : terms_) ordered.push_back(&term);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const auto* a, const auto* b) {
                     return grade(a->first, grading_) < grade(b->first, grading_);
                   });
  std::string out;
  for (const auto* term : ordered) {
    if (!out.empty()) out += '\n';
    out += term->second.str() + "*" + format_word(term->first, p);
  }
  return out.empty() ? "0" : out;
}

NCSeries letter_sum(const std::vector<Letter>& letters, Grading g, int bound) {
  NCSeries s(g, bound);
  for (Letter a : letters) s.add_term({a}, 1);
  return s;
}

namespace {

void collect_smirnov(const Poset& p, Grading g, int bound, Letter previous,
                     Word& prefix, NCSeries& out) {
  out.add_term(prefix, prefix.size() % 2 == 0 ? 1 : -1);
  for (Letter o : p.minimal_elements()) {
    if (o == previous) continue;
    prefix.push_back(o);
    if (grade(prefix, g) <= bound) collect_smirnov(p, g, bound, o, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

NCSeries smirnov_series(const Poset& p, Grading g, int bound,
                        Letter forbidden_first) {
  NCSeries out(g, bound);
  Word prefix;
  collect_smirnov(p, g, bound, forbidden_first, prefix, out);
  return out;
}

NCSeries z_builder(Letter a, const Poset& p, Grading g, int bound) {
  return letter_sum(p.upper_ideal(a), g, bound) *
         letter_sum(p.ideal_complement(a), g, bound).star();
}

NCSeries m_builder(Letter a, const Poset& p, Grading g, int bound) {
  if (!p.rooted_forest())
    throw std::domain_error("m builder requires a rooted forest");
  NCSeries covers_plus(g, bound);
  for (Letter c : p.cover_set(a))
    covers_plus = covers_plus + NCSeries::monomial({c}, g, bound).plus();
  const NCSeries smirnov = smirnov_series(p, g, bound);
  if (p.is_minimal(a)) {
    return NCSeries::monomial({a}, g, bound) * smirnov_series(p, g, bound, a) -
           covers_plus * smirnov;
  }
  return (NCSeries::monomial({a}, g, bound).plus() - covers_plus) * smirnov;
}

NCSeries series_Z(const Word& u, const Poset& p, Grading g, int bound) {
  NCSeries result = letter_sum(p.elements(), g, bound).star();
  for (Letter a : u) result = result * z_builder(a, p, g, bound);
  return result;
}

NCSeries series_M(const Word& u, const Poset& p, Grading g, int bound) {
  NCSeries result = smirnov_series(p, g, bound);
  for (Letter a : u) result = result * m_builder(a, p, g, bound);
  return result;
}

NCSeries apply_m(const NCSeries& f, const Poset& p) {
  const Grading g = f.grading();
  const int bound = f.bound();
  std::vector<NCSeries> builder_by_letter;
  for (Letter a : p.elements()) builder_by_letter.push_back(m_builder(a, p, g, bound));

  std::map<Word, NCSeries> products;
  products.emplace(Word{}, NCSeries::one(g, bound));
  auto product_of = [&](auto&& self, const Word& w) -> const NCSeries& {
    auto it = products.find(w);
    if (it != products.end()) return it->second;
    Word head(w.begin(), w.end() - 1);
    NCSeries value = self(self, head) * builder_by_letter[w.back()];
    return products.emplace(w, std::move(value)).first->second;
  };

  NCSeries result(g, bound);
  for (const auto& [w, c] : f.terms())
    result = result + product_of(product_of, w).scaled(c);
  return result;
}

TelescopingReport verify_telescoping(int n, Grading g, int bound) {
  const Poset chain = make_chain(n);
  TelescopingReport report{{}, true};

  auto mismatch_detail = [&](const NCSeries& got, const NCSeries& expected) {
    for (const auto& [w, c] : expected.terms())
      if (got.coefficient(w) != c)
        return "first offending coefficient at " + format_word(w, chain) +
               ": expected " + c.str() + ", got " + got.coefficient(w).str();
    for (const auto& [w, c] : got.terms())
      if (expected.coefficient(w) != c)
        return "first offending coefficient at " + format_word(w, chain) +
               ": expected " + expected.coefficient(w).str() + ", got " +
               c.str();
    return std::string();
  };
  auto record = [&](const std::string& name, const NCSeries& got,
                    const NCSeries& expected) {
    const bool pass = got == expected;
    report.identities.push_back({name, pass, pass ? "" : mismatch_detail(got, expected)});
    report.all_pass = report.all_pass && pass;
  };

  NCSeries m_sum(g, bound);
  for (Letter a : chain.elements()) m_sum = m_sum + m_builder(a, chain, g, bound);
  const NCSeries eps_minus_one =
      NCSeries::one(g, bound) - NCSeries::monomial({0}, g, bound);
  record("(eps - 1) * m([n])^* = eps", eps_minus_one * m_sum.star(),
         NCSeries::one(g, bound));

  for (Letter k = 0; k < std::min(n, 3); ++k) {
    record("m(z(" + chain.name(k) + ")) = " + chain.name(k),
           apply_m(z_builder(k, chain, g, bound), chain),
           NCSeries::monomial({k}, g, bound));
  }
  return report;
}

}  // namespace composet
