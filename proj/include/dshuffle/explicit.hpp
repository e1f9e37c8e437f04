#ifndef DSHUFFLE_EXPLICIT_HPP
#define DSHUFFLE_EXPLICIT_HPP

#include <vector>

#include "dshuffle/binomial.hpp"
#include "dshuffle/index_pair.hpp"
#include "dshuffle/recursive.hpp"

namespace dshuffle {

/// The coefficient c_{r,s}^{t,(phi,psi)} for a fixed pair and fixed (r, s), as a
/// function of the composition t.
///
/// Positions i run over 1..k+l. Position i takes h_i = r_j if i = phi(j) and
/// s_j if i = psi(j); it is a "switch" when i >= 2 and positions i-1, i come from
/// different sides. The factor at i is
///   C(t_i - 1, h_i - 1)            at i = 1 or a non-switch,
///   C(t_i - 1, T_i - H_i)          at a switch,
/// with T_i, H_i the prefix sums of t and h. The prefix sums of h are computed
/// once here and reused for every t.
class CoefficientKernel {
 public:
  CoefficientKernel(const IndexPair& pair, const Composition& r, const Composition& s);

  int size() const noexcept { return static_cast<int>(h_.size()); }
  /// Sum of r and s; every admissible t has this weight.
  int weight() const noexcept { return weight_; }
  int h(int i) const;
  int epsilon(int i) const;
  bool is_switch(int i) const;

  Integer factor(const Composition& t, int i) const;
  Integer value(const Composition& t) const;

  /// The inequality system characterising value(t) != 0:
  ///   t_i >= h_i                                at i = 1 or a non-switch,
  ///   T_i >= H_i > T_{i-1}                      at a switch.
  bool nonzero(const Composition& t) const;

  /// Calls visit(t, value(t)) for every composition t of weight() into size()
  /// parts with nonzero value, in lexicographic order of t. Branches are cut as
  /// soon as a prefix violates the inequality system.
  template <class Visit>
  void for_each_nonzero(Visit&& visit) const;

 private:
  void check(const Composition& t) const;
  bool position_ok(int i, int t_i, int prefix_before) const noexcept;
  Integer position_factor(int i, int t_i, int prefix_before) const;

  template <class Visit>
  void descend(int i, int prefix, Composition& t, std::vector<Integer>& partial, Visit& visit) const;

  std::vector<int> h_;
  std::vector<int> h_prefix_;  // h_prefix_[i] = h_1 + ... + h_i, h_prefix_[0] = 0
  std::vector<bool> from_phi_;
  int weight_ = 0;
};

/// h_{(phi,psi),i}: r_j if i = phi(j), s_j if i = psi(j).
int h_value(const IndexPair& pair, const Composition& r, const Composition& s, int i);
/// +1 if i lies in im(phi), -1 otherwise.
int epsilon(const IndexPair& pair, int i);

Integer coefficient_factor(const IndexPair& pair, const Composition& r, const Composition& s,
                           const Composition& t, int i);
Integer coefficient(const IndexPair& pair, const Composition& r, const Composition& s,
                    const Composition& t);
bool coefficient_nonzero(const IndexPair& pair, const Composition& r, const Composition& s,
                         const Composition& t);

/// Position i receives a_j if i = phi(j), b_j if i = psi(j).
std::vector<GroupElement> merge_marks_b(const IndexPair& pair, const std::vector<GroupElement>& a,
                                        const std::vector<GroupElement>& b);

/// The e-form merge: position i = phi(j) receives w_j when i = 1 or i-1 is also
/// in im(phi), and (w_1...w_j)/(z_1...z_{i-j}) when i-1 is in im(psi);
/// symmetrically for i = psi(j).
std::vector<GroupElement> merge_marks_e(const IndexPair& pair, const std::vector<GroupElement>& w,
                                        const std::vector<GroupElement>& z);

/// The shuffle product of b-form words by the closed formula
///   sum over (phi,psi) and t of c_{r,s}^{t,(phi,psi)} (t; a merge_b b).
IndexedComb explicit_product_b(const IndexedWord& mu, const IndexedWord& nu);
IndexedComb explicit_product_b(const IndexedComb& x, const IndexedComb& y);

/// Same coefficients with the e-form merge; the shuffle product of e-form words.
IndexedComb explicit_product_e(const IndexedWord& mu, const IndexedWord& nu);
IndexedComb explicit_product_e(const IndexedComb& x, const IndexedComb& y);

// ---------------------------------------------------------------------------

template <class Visit>
void CoefficientKernel::for_each_nonzero(Visit&& visit) const {
  const int m = size();
  Composition t(static_cast<std::size_t>(m));
  if (m == 0) {
    if (weight_ == 0) visit(t, Integer(1));
    return;
  }
  std::vector<Integer> partial(static_cast<std::size_t>(m + 1));
  partial[0] = 1;
  descend(1, 0, t, partial, visit);
}

template <class Visit>
void CoefficientKernel::descend(int i, int prefix, Composition& t, std::vector<Integer>& partial,
                                Visit& visit) const {
  const int m = size();
  const int remaining = weight_ - prefix;
  const int lo = 1;
  const int hi = remaining - (m - i);
  if (i == m) {
    if (hi < lo || !position_ok(i, remaining, prefix)) return;
    t[static_cast<std::size_t>(i - 1)] = remaining;
    const Integer c = partial[static_cast<std::size_t>(i - 1)] * position_factor(i, remaining, prefix);
    visit(static_cast<const Composition&>(t), c);
    return;
  }
  for (int part = lo; part <= hi; ++part) {
    if (!position_ok(i, part, prefix)) continue;
    t[static_cast<std::size_t>(i - 1)] = part;
    partial[static_cast<std::size_t>(i)] =
        partial[static_cast<std::size_t>(i - 1)] * position_factor(i, part, prefix);
    descend(i + 1, prefix + part, t, partial, visit);
  }
}

}  // namespace dshuffle

#endif  // DSHUFFLE_EXPLICIT_HPP
