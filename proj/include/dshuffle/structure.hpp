#ifndef DSHUFFLE_STRUCTURE_HPP
#define DSHUFFLE_STRUCTURE_HPP

#include <vector>

#include "dshuffle/recursive.hpp"

namespace dshuffle {

// Two coordinate systems on indexed words:
//   b-form  (s; b1,...,bk)  -- the marks are the letters x_{b_i} of the shuffle word;
//   e-form  (s; z1,...,zk)  -- the marks are the arguments of Li_s(z).
// They are related by z = (1/b1, b1/b2, ..., b_{k-1}/bk).

/// x_0^{s1-1} x_{b1} ... x_0^{sk-1} x_{bk}  ->  (s1,...,sk; b1,...,bk), 1 -> 1.
/// Throws DomainError when u ends in x_0.
IndexedWord to_indexed_word(const ShuffleWord& u);
/// Inverse of to_indexed_word.
ShuffleWord to_shuffle_word(const IndexedWord& nu);

/// (b1,...,bk) -> (1/b1, b1/b2, ..., b_{k-1}/bk)
std::vector<GroupElement> marks_to_e_form(const std::vector<GroupElement>& b);
/// (z1,...,zk) -> (1/z1, 1/(z1 z2), ..., 1/(z1...zk))
std::vector<GroupElement> marks_to_b_form(const std::vector<GroupElement>& z);

IndexedWord to_e_form(const IndexedWord& nu);
IndexedWord to_b_form(const IndexedWord& nu);
IndexedComb to_e_form(const IndexedComb& xi);
IndexedComb to_b_form(const IndexedComb& xi);

/// Shuffle word -> e-form indexed word (the composite of the two maps above).
IndexedWord shuffle_word_to_e_form(const ShuffleWord& u);
ShuffleWord e_form_to_shuffle_word(const IndexedWord& nu);

ShuffleComb to_shuffle_comb(const IndexedComb& xi);
IndexedComb to_indexed_comb(const ShuffleComb& x);

/// The shuffle product transported to b-form words through the letter bijection,
/// computed by the recursive shuffle. Reference route for the explicit formula.
IndexedComb shuffle_product_b(const IndexedWord& mu, const IndexedWord& nu);
IndexedComb shuffle_product_b(const IndexedComb& x, const IndexedComb& y);

/// The shuffle product transported to e-form words.
IndexedComb shuffle_product_e(const IndexedWord& mu, const IndexedWord& nu);
IndexedComb shuffle_product_e(const IndexedComb& x, const IndexedComb& y);

}  // namespace dshuffle

#endif  // DSHUFFLE_STRUCTURE_HPP
