#include <doctest.h>

#include <set>
#include <stdexcept>

#include "composet/incidence.hpp"

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

}  // namespace

TEST_CASE("interval enumeration") {
  Poset chain2 = make_chain(2);
  IntervalCache cache(chain2);
  const auto& members = cache.interval(wd("1", chain2), wd("2,1", chain2));
  std::set<Word> expected{{0}, {1}, {0, 0}, {1, 0}};
  CHECK(std::set<Word>(members.begin(), members.end()) == expected);

  Word u = wd("2,1", chain2);
  CHECK(cache.interval(u, u) == std::vector<Word>{u});

  Poset lambda = make_lambda();
  IntervalCache lcache(lambda);
  const auto& below_c = lcache.interval({}, wd("c", lambda));
  CHECK(std::set<Word>(below_c.begin(), below_c.end()) ==
        std::set<Word>{{}, {0}, {1}, {2}});

  CHECK(lcache.interval(wd("c", lambda), wd("a", lambda)).empty());
}

TEST_CASE("mobius by recursion") {
  Poset chain2 = make_chain(2);
  IntervalCache cache(chain2);
  CHECK(cache.mobius(wd("1", chain2), wd("1,1", chain2)) == -1);
  CHECK(cache.mobius(wd("1", chain2), wd("2,1", chain2)) == 1);
  CHECK(cache.mobius(wd("1", chain2), wd("1", chain2)) == 1);
  CHECK(cache.mobius(wd("2", chain2), wd("1,1", chain2)) == 0);

  Poset lambda = make_lambda();
  IntervalCache lcache(lambda);
  CHECK(lcache.mobius(wd("a", lambda), wd("c", lambda)) == -1);
}

TEST_CASE("mobius by normal embeddings: worked examples") {
  Poset ab = make_antichain(2);
  CHECK(mobius_normal(wd("a,b,b,a", ab), wd("a,b,a,b,b,b,a,a", ab), ab) == 2);

  Poset chain3 = make_chain(3);
  CHECK(mobius_normal(wd("2,1,1,1,3", chain3), wd("2,2,1,1,1,3,3", chain3),
                      chain3) == 2);

  Word u = wd("2,1,3", chain3);
  CHECK(mobius_normal(u, u, chain3) == 1);

  CHECK_THROWS_AS(mobius_normal({}, {}, make_lambda()), std::domain_error);
}

TEST_CASE("formula equals recursion exhaustively (small)") {
  for (const Poset& p : {make_chain(2), make_antichain(2)}) {
    IntervalCache cache(p);
    auto words = all_words_up_to(p, 4);
    for (const Word& u : words)
      for (const Word& w : words) {
        if (u.size() > w.size()) continue;
        CHECK(mobius_normal(u, w, p) == cache.mobius(u, w));
      }
  }
}

TEST_CASE("zeta powers count multichains") {
  Poset chain2 = make_chain(2);
  IntervalCache cache(chain2);
  // eps <= v <= 1 with v in {eps, 1}.
  CHECK(cache.zeta_power({}, wd("1", chain2), 2) == 2);
  Word u = wd("2,1", chain2);
  for (int m = 0; m <= 4; ++m) CHECK(cache.zeta_power(u, u, m) == 1);
  CHECK(cache.zeta_power(wd("1", chain2), wd("2,1", chain2), 1) == 1);
  CHECK(cache.zeta_power(wd("2", chain2), wd("1,1", chain2), 1) == 0);
  CHECK(cache.zeta_power(wd("1", chain2), wd("2,1", chain2), 0) == 0);
  CHECK_THROWS_AS(cache.zeta_power({}, {}, -1), std::domain_error);

  // zeta^{m+1}(u,w) = sum over v of zeta^m(u,v) zeta(v,w).
  auto words = all_words_up_to(chain2, 3);
  for (const Word& u2 : words)
    for (const Word& w2 : words) {
      if (!leq_words(u2, w2, chain2)) continue;
      for (int m = 0; m <= 3; ++m) {
        Int convolved = 0;
        for (const Word& v : cache.interval(u2, w2))
          convolved += cache.zeta_power(u2, v, m) * cache.zeta(v, w2);
        CHECK(convolved == cache.zeta_power(u2, w2, m + 1));
      }
    }
}

TEST_CASE("convolution identities") {
  Poset chain3 = make_chain(3);
  IntervalCache cache(chain3);
  CHECK(cache.convolution_check(wd("1", chain3), wd("2,2,1,1,1,3,3", chain3)));
  CHECK(cache.convolution_check(wd("1", chain3), wd("2,2,1,1,1,3,3", chain3),
                                MobiusMethod::normal));
  Word u = wd("2,1", chain3);
  CHECK(cache.convolution_check(u, u));

  Poset lambda = make_lambda();
  IntervalCache lcache(lambda);
  CHECK(lcache.convolution_check({}, wd("c,c", lambda)));

  // Both convolution orders sum to the delta on small intervals.
  Poset chain2 = make_chain(2);
  IntervalCache c2(chain2);
  auto words = all_words_up_to(chain2, 4);
  for (const Word& u2 : words)
    for (const Word& w2 : words) {
      if (!leq_words(u2, w2, chain2)) continue;
      Int left = 0, right = 0;
      for (const Word& v : c2.interval(u2, w2)) {
        left += c2.mobius(u2, v);
        right += c2.mobius(v, w2);
      }
      Int expected = u2 == w2 ? 1 : 0;
      CHECK(left == expected);
      CHECK(right == expected);
    }
}

TEST_CASE("antichain sign restatement") {
  Poset ab = make_antichain(2);
  IntervalCache cache(ab);
  auto words = all_words_up_to(ab, 5);
  for (const Word& u : words)
    for (const Word& w : words) {
      if (u.size() > w.size() || !leq_words(u, w, ab)) continue;
      Int count = static_cast<int>(normal_embeddings(u, w, ab).size());
      Int sign = (w.size() - u.size()) % 2 == 0 ? 1 : -1;
      CHECK(cache.mobius(u, w) == sign * count);
    }
}
