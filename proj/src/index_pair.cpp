#include "dshuffle/index_pair.hpp"

#include <bit>

#include "dshuffle/errors.hpp"

namespace dshuffle {
namespace {

void check_sizes(int k, int l) {
  if (k < 0 || l < 0) throw DomainError("index pair arities must be >= 0");
  if (k + l > IndexPair::max_size) throw DomainError("index pair limited to k + l <= 64");
}

std::uint64_t low_bits(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void extend_compositions(int remaining, int parts_left, Composition& prefix,
                         std::vector<Composition>& out) {
  if (parts_left == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  if (parts_left == 1) {
    prefix.push_back(remaining);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int part = 1; part <= remaining - (parts_left - 1); ++part) {
    prefix.push_back(part);
    extend_compositions(remaining - part, parts_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

IndexPair::IndexPair(int k, int l, const std::vector<int>& phi_image) : k_(k), l_(l) {
  check_sizes(k, l);
  if (static_cast<int>(phi_image.size()) != k) throw DomainError("im(phi) must have k elements");
  for (int i : phi_image) {
    if (i < 1 || i > k + l) throw DomainError("im(phi) position out of range");
    mask_ |= std::uint64_t{1} << (i - 1);
  }
  if (std::popcount(mask_) != k) throw DomainError("im(phi) has repeated positions");
}

IndexPair IndexPair::from_mask(int k, int l, std::uint64_t mask) {
  check_sizes(k, l);
  if ((mask & ~low_bits(k + l)) != 0 || std::popcount(mask) != k)
    throw DomainError("mask is not a k-subset of [k+l]");
  IndexPair p;
  p.k_ = k;
  p.l_ = l;
  p.mask_ = mask;
  return p;
}

IndexPair IndexPair::from_maps(const OrderMap& phi, const OrderMap& psi) {
  const int k = static_cast<int>(phi.size());
  const int l = static_cast<int>(psi.size());
  check_sizes(k, l);
  auto increasing = [](const OrderMap& f) {
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i] <= f[i - 1]) return false;
    return true;
  };
  if (!increasing(phi) || !increasing(psi)) throw DomainError("maps must be order preserving injections");
  std::uint64_t seen = 0;
  for (const OrderMap* f : {&phi, &psi}) {
    for (int v : *f) {
      if (v < 1 || v > k + l) throw DomainError("map value out of range");
      const std::uint64_t bit = std::uint64_t{1} << (v - 1);
      if (seen & bit) throw DomainError("images must be disjoint");
      seen |= bit;
    }
  }
  return IndexPair(k, l, phi);
}

OrderMap IndexPair::phi() const {
  OrderMap f;
  f.reserve(static_cast<std::size_t>(k_));
  for (int i = 1; i <= size(); ++i)
    if (in_phi(i)) f.push_back(i);
  return f;
}

OrderMap IndexPair::psi() const {
  OrderMap f;
  f.reserve(static_cast<std::size_t>(l_));
  for (int i = 1; i <= size(); ++i)
    if (!in_phi(i)) f.push_back(i);
  return f;
}

std::vector<IndexPair> enumerate_index_pairs(int k, int l) {
  check_sizes(k, l);
  std::vector<IndexPair> out;
  // Walk the k-subsets of [k+l] in lexicographic order of their sorted elements.
  std::vector<int> image(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) image[static_cast<std::size_t>(j)] = j + 1;
  const int n = k + l;
  while (true) {
    out.emplace_back(k, l, image);
    int j = k - 1;
    while (j >= 0 && image[static_cast<std::size_t>(j)] == n - k + j + 1) --j;
    if (j < 0) break;
    ++image[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t)
      image[static_cast<std::size_t>(t)] = image[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

std::vector<Composition> enumerate_compositions(int n, int m) {
  std::vector<Composition> out;
  if (m < 0 || n < m) return out;
  if (m == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  Composition prefix;
  prefix.reserve(static_cast<std::size_t>(m));
  extend_compositions(n, m, prefix, out);
  return out;
}

OrderMap drop_head(const OrderMap& f) {
  if (f.empty()) throw DomainError("drop_head needs a map on a nonempty set");
  OrderMap g;
  g.reserve(f.size() - 1);
  for (std::size_t x = 1; x < f.size(); ++x) g.push_back(f[x] - 1);
  return g;
}

OrderMap shift_down(const OrderMap& f) {
  OrderMap g = f;
  for (int& v : g) --v;
  return g;
}

OrderMap prepend_head(const OrderMap& f) {
  OrderMap g;
  g.reserve(f.size() + 1);
  g.push_back(1);
  for (int v : f) g.push_back(v + 1);
  return g;
}

OrderMap shift_up(const OrderMap& f) {
  OrderMap g = f;
  for (int& v : g) ++v;
  return g;
}

IndexPair strip_leading_phi(const IndexPair& pair) {
  if (pair.k() == 0 || !pair.in_phi(1)) throw DomainError("pair does not have phi(1) = 1");
  return IndexPair::from_maps(drop_head(pair.phi()), shift_down(pair.psi()));
}

IndexPair restore_leading_phi(const IndexPair& pair) {
  return IndexPair::from_maps(prepend_head(pair.phi()), shift_up(pair.psi()));
}

IndexPair strip_leading_psi(const IndexPair& pair) {
  if (pair.l() == 0 || pair.in_phi(1)) throw DomainError("pair does not have psi(1) = 1");
  return IndexPair::from_maps(shift_down(pair.phi()), drop_head(pair.psi()));
}

IndexPair restore_leading_psi(const IndexPair& pair) {
  return IndexPair::from_maps(shift_up(pair.phi()), prepend_head(pair.psi()));
}

}  // namespace dshuffle
