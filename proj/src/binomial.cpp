#include "dshuffle/binomial.hpp"

namespace dshuffle {

Integer binomial(long a, long b) {
  if (!binomial_nonzero(a, b)) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

}  // namespace dshuffle
