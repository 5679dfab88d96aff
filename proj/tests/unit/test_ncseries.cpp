#include <doctest.h>

#include <random>
#include <stdexcept>

#include "composet/incidence.hpp"
#include "composet/ncseries.hpp"

using namespace composet;

namespace {

Word wd(const std::string& text, const Poset& p) { return parse_word(text, p); }

std::vector<Word> all_words_up_to(const Poset& p, int max_len) {
  std::vector<Word> out{{}};
  size_t start = 0;
  for (int len = 1; len <= max_len; ++len) {
    size_t end = out.size();
    for (size_t i = start; i < end; ++i)
      for (Letter a : p.elements()) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(w);
      }
    start = end;
  }
  return out;
}

NCSeries random_series(const Poset& p, Grading g, int bound, std::mt19937& rng,
                       bool with_constant) {
  NCSeries s(g, bound);
  auto words = all_words_up_to(p, 2);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const Word& w : words) {
    if (w.empty() && !with_constant) continue;
    s.add_term(w, coeff(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("ring basics") {
  Poset ab = make_antichain(2);
  const Grading g = Grading::length;
  NCSeries a = NCSeries::monomial({0}, g, 4);
  NCSeries b = NCSeries::monomial({1}, g, 4);
  CHECK((a * b).coefficient({0, 1}) == 1);
  CHECK((a * b) != (b * a));
  CHECK((a + a.scaled(-1)).is_zero());

  NCSeries other_bound(g, 5);
  CHECK_THROWS_AS((void)(a + other_bound), std::invalid_argument);
  NCSeries other_grading(Grading::norm, 4);
  CHECK_THROWS_AS((void)(a * other_grading), std::invalid_argument);
}

TEST_CASE("star") {
  const Grading g = Grading::length;
  NCSeries one_letter = NCSeries::monomial({0}, g, 3);
  NCSeries starred = one_letter.star();
  CHECK(starred.coefficient({}) == 1);
  CHECK(starred.coefficient({0}) == 1);
  CHECK(starred.coefficient({0, 0}) == 1);
  CHECK(starred.coefficient({0, 0, 0}) == 1);
  CHECK(starred.terms().size() == 4);

  CHECK(NCSeries::zero(g, 3).star() == NCSeries::one(g, 3));

  Poset ab = make_antichain(2);
  NCSeries both = letter_sum(ab.elements(), g, 2);
  NCSeries all_words = both.star();
  CHECK(all_words.terms().size() == 7);  // eps, a, b, aa, ab, ba, bb
  for (const auto& [w, c] : all_words.terms()) CHECK(c == 1);

  CHECK_THROWS_AS(NCSeries::one(g, 3).star(), std::domain_error);

  // eps + f * f^* = f^* for assorted constant-free series.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    NCSeries f = random_series(ab, g, 4, rng, false);
    CHECK(NCSeries::one(g, 4) + f * f.star() == f.star());
  }
}

TEST_CASE("z builder over the chain") {
  Poset chain3 = make_chain(3);
  NCSeries z2 = z_builder(1, chain3, Grading::length, 2);
  // [2,3] * [1]^* begins (2 + 3) + (2 + 3)*1.
  CHECK(z2.coefficient({1}) == 1);
  CHECK(z2.coefficient({2}) == 1);
  CHECK(z2.coefficient({1, 0}) == 1);
  CHECK(z2.coefficient({2, 0}) == 1);
  CHECK(z2.coefficient({0}) == 0);
  CHECK(z2.coefficient({1, 1}) == 0);
}

TEST_CASE("m builder over the chain") {
  const Grading g = Grading::norm;
  const int bound = 6;
  Poset chain3 = make_chain(3);
  // m(n) = n+ (eps - 1): the k+1 term is empty at k = n.
  NCSeries m3 = m_builder(2, chain3, g, bound);
  NCSeries expected = NCSeries::monomial({2}, g, bound).plus() *
                      (NCSeries::one(g, bound) - NCSeries::monomial({0}, g, bound));
  CHECK(m3 == expected);

  // m(1) = 1 - 2+ (eps - 1).
  NCSeries m1 = m_builder(0, chain3, g, bound);
  NCSeries expected1 =
      NCSeries::monomial({0}, g, bound) -
      NCSeries::monomial({1}, g, bound).plus() *
          (NCSeries::one(g, bound) - NCSeries::monomial({0}, g, bound));
  CHECK(m1 == expected1);

  CHECK_THROWS_AS(m_builder(0, make_lambda(), g, bound), std::domain_error);
}

TEST_CASE("m builder over the antichain carries the Smirnov tail") {
  Poset ab = make_antichain(2);
  NCSeries m_a = m_builder(0, ab, Grading::length, 3);
  CHECK(m_a.coefficient({0}) == 1);        // a
  CHECK(m_a.coefficient({0, 1}) == -1);    // -ab
  CHECK(m_a.coefficient({0, 1, 0}) == 1);  // +aba
  CHECK(m_a.coefficient({0, 0}) == 0);     // no aa term
  CHECK(m_a.coefficient({1}) == 0);
}

TEST_CASE("series coefficients equal zeta and mu") {
  struct Scope {
    Poset poset;
    int bound;
  };
  for (const Scope& scope : {Scope{make_chain(3), 4}, Scope{make_antichain(2), 5}}) {
    IntervalCache cache(scope.poset);
    const Grading g = Grading::length;
    auto words = all_words_up_to(scope.poset, scope.bound);
    auto u_words = all_words_up_to(scope.poset, 3);
    for (const Word& u : u_words) {
      NCSeries z = series_Z(u, scope.poset, g, scope.bound);
      NCSeries m = series_M(u, scope.poset, g, scope.bound);
      for (const Word& w : words) {
        CHECK(z.coefficient(w) == cache.zeta(u, w));
        CHECK(m.coefficient(w) == cache.mobius(u, w));
      }
    }
  }
}

TEST_CASE("series over a branching forest still match the oracle") {
  Poset forest({"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
  IntervalCache cache(forest);
  const Grading g = Grading::length;
  auto words = all_words_up_to(forest, 3);
  for (const Word& u : all_words_up_to(forest, 2)) {
    NCSeries m = series_M(u, forest, g, 3);
    for (const Word& w : words) CHECK(m.coefficient(w) == cache.mobius(u, w));
  }
}

TEST_CASE("series_Z of the empty word sees every word once") {
  Poset chain2 = make_chain(2);
  NCSeries z = series_Z({}, chain2, Grading::length, 4);
  auto words = all_words_up_to(chain2, 4);
  CHECK(z.terms().size() == words.size());
  for (const Word& w : words) CHECK(z.coefficient(w) == 1);
}

TEST_CASE("mul is associative and distributes (spot check)") {
  Poset ab = make_antichain(2);
  std::mt19937 rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    NCSeries f = random_series(ab, Grading::length, 4, rng, true);
    NCSeries g = random_series(ab, Grading::length, 4, rng, true);
    NCSeries h = random_series(ab, Grading::length, 4, rng, true);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("telescoping identities") {
  TelescopingReport report = verify_telescoping(8, Grading::norm, 8);
  CHECK(report.all_pass);
  REQUIRE(report.identities.size() == 4);
  for (const IdentityCheck& identity : report.identities) CHECK(identity.pass);
}

TEST_CASE("series printing") {
  Poset chain2 = make_chain(2);
  NCSeries m = series_M(wd("1", chain2), chain2, Grading::length, 2);
  CHECK(m.to_string(chain2) ==
        "1*1\n-1*2\n-1*1,1\n1*1,2\n1*2,1\n-1*2,2");
}
