#ifndef DSHUFFLE_BINOMIAL_HPP
#define DSHUFFLE_BINOMIAL_HPP

#include "dshuffle/lincomb.hpp"

namespace dshuffle {

/// C(a, b), extended by zero: C(a, b) = 0 whenever a < 0, b < 0 or b > a.
Integer binomial(long a, long b);

/// Same convention; only the zero test, no big-integer work.
inline bool binomial_nonzero(long a, long b) noexcept { return a >= 0 && b >= 0 && b <= a; }

}  // namespace dshuffle

#endif  // DSHUFFLE_BINOMIAL_HPP
