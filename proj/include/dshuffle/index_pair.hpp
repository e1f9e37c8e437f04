#ifndef DSHUFFLE_INDEX_PAIR_HPP
#define DSHUFFLE_INDEX_PAIR_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace dshuffle {

/// An order-preserving map [n] -> [m], stored as its values f(1), ..., f(n).
/// Positions and values are 1-based, matching the combinatorics.
using OrderMap = std::vector<int>;

/// A pair (phi, psi) of order-preserving injections phi: [k] -> [k+l],
/// psi: [l] -> [k+l] with complementary images.
///
/// The pair is determined by im(phi), kept as a bitmask (bit i-1 <=> position i),
/// which limits k + l to 64.
class IndexPair {
 public:
  static constexpr int max_size = 64;

  IndexPair() = default;
  /// phi_image: the k positions of im(phi), in any order.
  IndexPair(int k, int l, const std::vector<int>& phi_image);
  static IndexPair from_mask(int k, int l, std::uint64_t mask);
  /// Throws DomainError unless phi and psi are increasing with complementary images.
  static IndexPair from_maps(const OrderMap& phi, const OrderMap& psi);

  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }
  int size() const noexcept { return k_ + l_; }
  std::uint64_t mask() const noexcept { return mask_; }

  /// Position i (1-based) lies in im(phi).
  bool in_phi(int i) const noexcept { return (mask_ >> (i - 1)) & 1U; }

  OrderMap phi() const;
  OrderMap psi() const;
  std::vector<int> phi_image() const { return phi(); }

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;

 private:
  int k_ = 0;
  int l_ = 0;
  std::uint64_t mask_ = 0;
};

/// All C(k+l, k) pairs, lexicographic in im(phi). For k = 0 (resp. l = 0) the
/// single pair (empty map, identity) (resp. (identity, empty map)).
std::vector<IndexPair> enumerate_index_pairs(int k, int l);

/// A vector of positive integers.
using Composition = std::vector<int>;

/// All vectors in Z_{>=1}^m summing to n, lexicographic. Empty when n < m;
/// (0, 0) yields the single empty composition.
std::vector<Composition> enumerate_compositions(int n, int m);

// Maps on order-preserving functions used by the inductive structure of the
// coefficients.

/// x -> f(x+1) - 1 on [n-1]. Of a map on [1], the empty map.
OrderMap drop_head(const OrderMap& f);
/// x -> f(x) - 1 on [n].
OrderMap shift_down(const OrderMap& f);
/// 1 -> 1, x -> f(x-1) + 1 on [n+1].
OrderMap prepend_head(const OrderMap& f);
/// y -> f(y) + 1 on [n].
OrderMap shift_up(const OrderMap& f);

/// (phi, psi) -> (drop_head phi, shift_down psi), a bijection from the pairs
/// in I_{k,l} with phi(1) = 1 onto I_{k-1,l}. Throws DomainError if phi(1) != 1.
IndexPair strip_leading_phi(const IndexPair& pair);
/// Inverse: (phi, psi) -> (prepend_head phi, shift_up psi).
IndexPair restore_leading_phi(const IndexPair& pair);
/// (phi, psi) -> (shift_down phi, drop_head psi), pairs with psi(1) = 1 onto I_{k,l-1}.
IndexPair strip_leading_psi(const IndexPair& pair);
/// Inverse: (phi, psi) -> (shift_up phi, prepend_head psi).
IndexPair restore_leading_psi(const IndexPair& pair);

}  // namespace dshuffle

#endif  // DSHUFFLE_INDEX_PAIR_HPP
