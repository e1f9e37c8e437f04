#ifndef DSHUFFLE_RECURSIVE_HPP
#define DSHUFFLE_RECURSIVE_HPP

#include "dshuffle/lincomb.hpp"
#include "dshuffle/word.hpp"

namespace dshuffle {

using ShuffleComb = LinComb<ShuffleWord>;
using IndexedComb = LinComb<IndexedWord>;

/// Shuffle product by the first-letter recursion
///   a u (sh) b v = a (u (sh) b v) + b (a u (sh) v),  1 (sh) w = w (sh) 1 = w.
/// Subproblems are suffix pairs, tabulated once per call.
ShuffleComb shuffle(const ShuffleWord& u, const ShuffleWord& v);
ShuffleComb shuffle(const ShuffleComb& x, const ShuffleComb& y);

/// Quasi-shuffle (stuffle) product by the recursion
///   [m1, m'] * [n1, n'] = [m1, m' * [n1, n']] + [n1, [m1, m'] * n'] + [m1.n1, m' * n'],
/// where m1.n1 adds exponents and multiplies marks.
IndexedComb quasi_shuffle(const IndexedWord& mu, const IndexedWord& nu);
IndexedComb quasi_shuffle(const IndexedComb& x, const IndexedComb& y);

/// P: raises the leading exponent by one. Every word must be nonempty.
IndexedComb raise_leading_exponent(const IndexedComb& xi);
IndexedComb raise_leading_exponent(const IndexedWord& w);

/// Q_b: prepends the pair (1, b); Q_b(1) = (1; b).
IndexedComb prepend_unit_pair(const GroupElement& b, const IndexedComb& xi);
IndexedComb prepend_unit_pair(const GroupElement& b, const IndexedWord& w);

}  // namespace dshuffle

#endif  // DSHUFFLE_RECURSIVE_HPP
