#include "mlk/numeric.hpp"

namespace mlk {

std::vector<Int> divisors_sorted(const Int& n) {
  if (n <= 0) throw precondition_error("divisors_sorted: n must be positive");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (divides(d, n)) {
      small.push_back(d);
      Int q = n / d;
      if (q != d) large.push_back(q);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it)
    small.push_back(*it);
  return small;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  if (n <= 0) throw precondition_error("factorize: n must be positive");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (!divides(p, n)) continue;
    int e = 0;
    while (divides(p, n)) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace mlk
