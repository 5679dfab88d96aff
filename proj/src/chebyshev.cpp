#include "composet/chebyshev.hpp"

#include <stdexcept>

namespace composet {

Polynomial chebyshev_T(int n) {
  if (n < 0) throw std::domain_error("Chebyshev index must be >= 0");
  Polynomial prev = Polynomial::constant(1);
  if (n == 0) return prev;
  Polynomial current = Polynomial::variable();
  const Polynomial two_x = Polynomial::monomial(2, 1);
  for (int k = 2; k <= n; ++k) {
    Polynomial next = two_x * current - prev;
    prev = std::move(current);
    current = std::move(next);
  }
  return current;
}

LambdaCheck check_lambda_conjecture(int i, int j, IntervalCache& lambda_cache) {
  if (i < 0 || i > j) throw std::domain_error("need 0 <= i <= j");
  const Poset& lambda = lambda_cache.poset();
  const Letter a = *lambda.find("a");
  const Letter c = *lambda.find("c");
  Word u(i, a);
  Word w(j, c);
  Int mu = lambda_cache.mobius(u, w);
  Int coefficient = chebyshev_T(i + j).coefficient(j - i);
  return {mu, coefficient, mu == coefficient};
}

LambdaCheck check_lambda_conjecture(int i, int j) {
  IntervalCache cache(make_lambda());
  return check_lambda_conjecture(i, j, cache);
}

}  // namespace composet
