#include "kleinfour/quad_ext.hpp"

#include <cstdlib>

namespace kleinfour {

long squarefree_part(long n) {
  if (n == 0) return 0;
  long sign = n < 0 ? -1 : 1;
  long m = std::labs(n), out = 1;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e % 2 == 1) out *= d;
  }
  return sign * out * m;
}

}  // namespace kleinfour
