#include "dshuffle/explicit.hpp"

#include <numeric>

#include "dshuffle/errors.hpp"

namespace dshuffle {

CoefficientKernel::CoefficientKernel(const IndexPair& pair, const Composition& r, const Composition& s) {
  if (static_cast<int>(r.size()) != pair.k() || static_cast<int>(s.size()) != pair.l())
    throw DomainError("composition arities do not match the index pair");
  const int n = pair.size();
  h_.resize(static_cast<std::size_t>(n));
  from_phi_.resize(static_cast<std::size_t>(n));
  h_prefix_.assign(static_cast<std::size_t>(n + 1), 0);
  std::size_t next_r = 0, next_s = 0;
  for (int i = 1; i <= n; ++i) {
    const auto idx = static_cast<std::size_t>(i - 1);
    from_phi_[idx] = pair.in_phi(i);
    h_[idx] = from_phi_[idx] ? r[next_r++] : s[next_s++];
    if (h_[idx] < 1) throw DomainError("composition parts must be >= 1");
    h_prefix_[idx + 1] = h_prefix_[idx] + h_[idx];
  }
  weight_ = h_prefix_.back();
}

int CoefficientKernel::h(int i) const {
  if (i < 1 || i > size()) throw DomainError("position out of range");
  return h_[static_cast<std::size_t>(i - 1)];
}

int CoefficientKernel::epsilon(int i) const {
  if (i < 1 || i > size()) throw DomainError("position out of range");
  return from_phi_[static_cast<std::size_t>(i - 1)] ? 1 : -1;
}

bool CoefficientKernel::is_switch(int i) const {
  return i >= 2 && epsilon(i) != epsilon(i - 1);
}

void CoefficientKernel::check(const Composition& t) const {
  if (static_cast<int>(t.size()) != size()) throw DomainError("t has the wrong arity");
  if (std::accumulate(t.begin(), t.end(), 0) != weight_) throw DomainError("|t| must equal |r| + |s|");
}

bool CoefficientKernel::position_ok(int i, int t_i, int prefix_before) const noexcept {
  const auto idx = static_cast<std::size_t>(i - 1);
  const bool switched = i >= 2 && from_phi_[idx] != from_phi_[idx - 1];
  if (!switched) return t_i >= h_[idx];
  const int t_prefix = prefix_before + t_i;
  const int h_prefix = h_prefix_[idx + 1];
  return t_prefix >= h_prefix && h_prefix > prefix_before;
}

Integer CoefficientKernel::position_factor(int i, int t_i, int prefix_before) const {
  const auto idx = static_cast<std::size_t>(i - 1);
  const bool switched = i >= 2 && from_phi_[idx] != from_phi_[idx - 1];
  if (!switched) return binomial(t_i - 1, h_[idx] - 1);
  return binomial(t_i - 1, prefix_before + t_i - h_prefix_[idx + 1]);
}

Integer CoefficientKernel::factor(const Composition& t, int i) const {
  check(t);
  if (i < 1 || i > size()) throw DomainError("position out of range");
  const int prefix_before = std::accumulate(t.begin(), t.begin() + (i - 1), 0);
  return position_factor(i, t[static_cast<std::size_t>(i - 1)], prefix_before);
}

Integer CoefficientKernel::value(const Composition& t) const {
  check(t);
  Integer c = 1;
  int prefix = 0;
  for (int i = 1; i <= size() && c != 0; ++i) {
    const int t_i = t[static_cast<std::size_t>(i - 1)];
    c *= position_factor(i, t_i, prefix);
    prefix += t_i;
  }
  return c;
}

bool CoefficientKernel::nonzero(const Composition& t) const {
  check(t);
  int prefix = 0;
  for (int i = 1; i <= size(); ++i) {
    const int t_i = t[static_cast<std::size_t>(i - 1)];
    if (!position_ok(i, t_i, prefix)) return false;
    prefix += t_i;
  }
  return true;
}

int h_value(const IndexPair& pair, const Composition& r, const Composition& s, int i) {
  return CoefficientKernel(pair, r, s).h(i);
}

int epsilon(const IndexPair& pair, int i) {
  if (i < 1 || i > pair.size()) throw DomainError("position out of range");
  return pair.in_phi(i) ? 1 : -1;
}

Integer coefficient_factor(const IndexPair& pair, const Composition& r, const Composition& s,
                           const Composition& t, int i) {
  return CoefficientKernel(pair, r, s).factor(t, i);
}

Integer coefficient(const IndexPair& pair, const Composition& r, const Composition& s,
                    const Composition& t) {
  return CoefficientKernel(pair, r, s).value(t);
}

bool coefficient_nonzero(const IndexPair& pair, const Composition& r, const Composition& s,
                         const Composition& t) {
  return CoefficientKernel(pair, r, s).nonzero(t);
}

std::vector<GroupElement> merge_marks_b(const IndexPair& pair, const std::vector<GroupElement>& a,
                                        const std::vector<GroupElement>& b) {
  if (static_cast<int>(a.size()) != pair.k() || static_cast<int>(b.size()) != pair.l())
    throw DomainError("mark arities do not match the index pair");
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(pair.size()));
  std::size_t next_a = 0, next_b = 0;
  for (int i = 1; i <= pair.size(); ++i) out.push_back(pair.in_phi(i) ? a[next_a++] : b[next_b++]);
  return out;
}

std::vector<GroupElement> merge_marks_e(const IndexPair& pair, const std::vector<GroupElement>& w,
                                        const std::vector<GroupElement>& z) {
  if (static_cast<int>(w.size()) != pair.k() || static_cast<int>(z.size()) != pair.l())
    throw DomainError("mark arities do not match the index pair");
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(pair.size()));
  // j_w, j_z: how many positions so far came from each side.
  std::size_t j_w = 0, j_z = 0;
  for (int i = 1; i <= pair.size(); ++i) {
    const bool same_run = i == 1 || pair.in_phi(i) == pair.in_phi(i - 1);
    if (pair.in_phi(i)) {
      ++j_w;
      out.push_back(same_run ? w[j_w - 1] : product(w, 0, j_w) / product(z, 0, j_z));
    } else {
      ++j_z;
      out.push_back(same_run ? z[j_z - 1] : product(z, 0, j_z) / product(w, 0, j_w));
    }
  }
  return out;
}

namespace {

template <class Merge>
IndexedComb explicit_product(const IndexedWord& mu, const IndexedWord& nu, Merge merge) {
  IndexedComb out;
  const int k = static_cast<int>(mu.depth());
  const int l = static_cast<int>(nu.depth());
  for (const IndexPair& pair : enumerate_index_pairs(k, l)) {
    const CoefficientKernel kernel(pair, mu.exponents(), nu.exponents());
    const std::vector<GroupElement> marks = merge(pair, mu.marks(), nu.marks());
    kernel.for_each_nonzero([&](const Composition& t, const Integer& c) {
      out.add_term(IndexedWord(t, marks), c);
    });
  }
  return out;
}

}  // namespace

IndexedComb explicit_product_b(const IndexedWord& mu, const IndexedWord& nu) {
  return explicit_product(mu, nu, merge_marks_b);
}

IndexedComb explicit_product_b(const IndexedComb& x, const IndexedComb& y) {
  return bilinear(x, y, [](const IndexedWord& a, const IndexedWord& b) { return explicit_product_b(a, b); });
}

IndexedComb explicit_product_e(const IndexedWord& mu, const IndexedWord& nu) {
  return explicit_product(mu, nu, merge_marks_e);
}

IndexedComb explicit_product_e(const IndexedComb& x, const IndexedComb& y) {
  return bilinear(x, y, [](const IndexedWord& a, const IndexedWord& b) { return explicit_product_e(a, b); });
}

}  // namespace dshuffle
