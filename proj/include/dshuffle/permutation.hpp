#ifndef DSHUFFLE_PERMUTATION_HPP
#define DSHUFFLE_PERMUTATION_HPP

#include <vector>

#include "dshuffle/explicit.hpp"

namespace dshuffle {

/// A (k,l)-shuffle: a permutation sigma of [k+l] with sigma^{-1} increasing on
/// [k] and on [k+1, k+l]. images[i-1] = sigma(i).
struct ShufflePermutation {
  int k = 0;
  int l = 0;
  std::vector<int> images;

  int size() const noexcept { return k + l; }
  int operator()(int i) const { return images[static_cast<std::size_t>(i - 1)]; }
  /// +1 when sigma(i) <= k.
  int epsilon(int i) const { return (*this)(i) <= k ? 1 : -1; }

  friend bool operator==(const ShufflePermutation&, const ShufflePermutation&) = default;
};

bool is_shuffle_permutation(int k, int l, const std::vector<int>& images);

/// All (k,l)-shuffles, found by filtering every permutation of [k+l] (so the
/// enumeration is independent of the index-pair enumeration).
std::vector<ShufflePermutation> enumerate_shuffle_permutations(int k, int l);

/// sigma^{-1}(j) = phi(j) for j <= k and psi(j-k) for j > k.
IndexPair pair_of_permutation(const ShufflePermutation& sigma);
ShufflePermutation permutation_of_pair(const IndexPair& pair);

/// prod_i C(t_i - 1, kappa_{sigma(i)} - 1 - [switch at i] * sum_{j<i} (t_j - kappa_{sigma(j)}))
/// with kappa = (r, s) and no switch at i = 1.
Integer permutation_coefficient(const ShufflePermutation& sigma, const Composition& r,
                                const Composition& s, const Composition& t);

/// (gamma_{sigma(1)}, ..., gamma_{sigma(k+l)}) with gamma = (a, b).
std::vector<GroupElement> merge_marks_permutation(const ShufflePermutation& sigma,
                                                  const std::vector<GroupElement>& a,
                                                  const std::vector<GroupElement>& b);

/// The b-form shuffle product summed over shuffle permutations and all
/// compositions t, without pruning.
IndexedComb permutation_product_b(const IndexedWord& mu, const IndexedWord& nu);

}  // namespace dshuffle

#endif  // DSHUFFLE_PERMUTATION_HPP
