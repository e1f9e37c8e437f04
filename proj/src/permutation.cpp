#include "dshuffle/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "dshuffle/errors.hpp"

namespace dshuffle {

bool is_shuffle_permutation(int k, int l, const std::vector<int>& images) {
  const int n = k + l;
  if (k < 0 || l < 0 || static_cast<int>(images.size()) != n) return false;
  std::vector<int> inverse(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    const int v = images[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n || inverse[static_cast<std::size_t>(v)] != 0) return false;
    inverse[static_cast<std::size_t>(v)] = i;
  }
  for (int j = 2; j <= k; ++j)
    if (inverse[static_cast<std::size_t>(j - 1)] > inverse[static_cast<std::size_t>(j)]) return false;
  for (int j = k + 2; j <= n; ++j)
    if (inverse[static_cast<std::size_t>(j - 1)] > inverse[static_cast<std::size_t>(j)]) return false;
  return true;
}

std::vector<ShufflePermutation> enumerate_shuffle_permutations(int k, int l) {
  if (k < 0 || l < 0) throw DomainError("arities must be >= 0");
  std::vector<int> images(static_cast<std::size_t>(k + l));
  std::iota(images.begin(), images.end(), 1);
  std::vector<ShufflePermutation> out;
  do {
    if (is_shuffle_permutation(k, l, images)) out.push_back({k, l, images});
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

IndexPair pair_of_permutation(const ShufflePermutation& sigma) {
  if (!is_shuffle_permutation(sigma.k, sigma.l, sigma.images))
    throw DomainError("not a (k,l)-shuffle");
  std::vector<int> phi_image;
  for (int i = 1; i <= sigma.size(); ++i)
    if (sigma(i) <= sigma.k) phi_image.push_back(i);
  return IndexPair(sigma.k, sigma.l, phi_image);
}

ShufflePermutation permutation_of_pair(const IndexPair& pair) {
  ShufflePermutation sigma{pair.k(), pair.l(), std::vector<int>(static_cast<std::size_t>(pair.size()))};
  const OrderMap phi = pair.phi();
  const OrderMap psi = pair.psi();
  for (std::size_t j = 0; j < phi.size(); ++j)
    sigma.images[static_cast<std::size_t>(phi[j] - 1)] = static_cast<int>(j) + 1;
  for (std::size_t j = 0; j < psi.size(); ++j)
    sigma.images[static_cast<std::size_t>(psi[j] - 1)] = pair.k() + static_cast<int>(j) + 1;
  return sigma;
}

Integer permutation_coefficient(const ShufflePermutation& sigma, const Composition& r,
                                const Composition& s, const Composition& t) {
  if (!is_shuffle_permutation(sigma.k, sigma.l, sigma.images))
    throw DomainError("not a (k,l)-shuffle");
  if (static_cast<int>(r.size()) != sigma.k || static_cast<int>(s.size()) != sigma.l ||
      static_cast<int>(t.size()) != sigma.size())
    throw DomainError("composition arities do not match the permutation");
  Composition kappa = r;
  kappa.insert(kappa.end(), s.begin(), s.end());
  if (std::accumulate(t.begin(), t.end(), 0) != std::accumulate(kappa.begin(), kappa.end(), 0))
    throw DomainError("|t| must equal |r| + |s|");

  Integer c = 1;
  long excess = 0;  // sum_{j<i} (t_j - kappa_{sigma(j)})
  for (int i = 1; i <= sigma.size() && c != 0; ++i) {
    const int kap = kappa[static_cast<std::size_t>(sigma(i) - 1)];
    const int previous_eps = i == 1 ? sigma.epsilon(1) : sigma.epsilon(i - 1);
    // (1 - eps(i) eps(i-1)) / 2 is 1 at a switch and 0 otherwise.
    const long switch_weight = (1 - sigma.epsilon(i) * previous_eps) / 2;
    const int t_i = t[static_cast<std::size_t>(i - 1)];
    c *= binomial(t_i - 1, kap - 1 - switch_weight * excess);
    excess += t_i - kap;
  }
  return c;
}

std::vector<GroupElement> merge_marks_permutation(const ShufflePermutation& sigma,
                                                  const std::vector<GroupElement>& a,
                                                  const std::vector<GroupElement>& b) {
  if (static_cast<int>(a.size()) != sigma.k || static_cast<int>(b.size()) != sigma.l)
    throw DomainError("mark arities do not match the permutation");
  std::vector<GroupElement> gamma = a;
  gamma.insert(gamma.end(), b.begin(), b.end());
  std::vector<GroupElement> out;
  out.reserve(gamma.size());
  for (int i = 1; i <= sigma.size(); ++i) out.push_back(gamma[static_cast<std::size_t>(sigma(i) - 1)]);
  return out;
}

IndexedComb permutation_product_b(const IndexedWord& mu, const IndexedWord& nu) {
  const int k = static_cast<int>(mu.depth());
  const int l = static_cast<int>(nu.depth());
  const std::vector<Composition> ts = enumerate_compositions(mu.weight() + nu.weight(), k + l);
  IndexedComb out;
  for (const ShufflePermutation& sigma : enumerate_shuffle_permutations(k, l)) {
    const std::vector<GroupElement> marks = merge_marks_permutation(sigma, mu.marks(), nu.marks());
    for (const Composition& t : ts) {
      Integer c = permutation_coefficient(sigma, mu.exponents(), nu.exponents(), t);
      if (c != 0) out.add_term(IndexedWord(t, marks), c);
    }
  }
  return out;
}

}  // namespace dshuffle
