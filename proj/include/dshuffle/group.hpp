#ifndef DSHUFFLE_GROUP_HPP
#define DSHUFFLE_GROUP_HPP

#include <compare>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace dshuffle {

/// A root of unity exp(2*pi*i * num/den), stored as a reduced angle fraction
/// in [0, 1). The identity is 0/1; the sign group {+1, -1} is {0/1, 1/2}.
class GroupElement {
 public:
  /// The identity.
  constexpr GroupElement() = default;

  /// Any integer pair with den >= 1; the angle is taken mod 1 and reduced.
  GroupElement(std::int64_t num, std::int64_t den);

  static GroupElement identity() { return {}; }
  static GroupElement minus_one() { return {1, 2}; }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_identity() const noexcept { return num_ == 0; }

  /// Multiplicative order, which equals the reduced denominator.
  std::int64_t order() const noexcept { return den_; }

  GroupElement inverse() const;

  /// z^n evaluated exactly on the angle before conversion to floating point.
  std::complex<double> power(std::int64_t n) const;
  std::complex<double> to_complex() const { return power(1); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator/(const GroupElement& a, const GroupElement& b) {
    return a * b.inverse();
  }
  GroupElement& operator*=(const GroupElement& other) { return *this = *this * other; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  /// Orders by angle value.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline GroupElement group_mul(const GroupElement& a, const GroupElement& b) { return a * b; }
inline GroupElement group_inv(const GroupElement& a) { return a.inverse(); }

/// Product of a range of group elements (identity when empty).
GroupElement product(const std::vector<GroupElement>& elements, std::size_t first, std::size_t last);

/// All n-th roots of unity in increasing angle order; n = 1 is the trivial group.
std::vector<GroupElement> roots_of_unity(std::int64_t n);

/// True when g lies in the cyclic group of n-th roots of unity.
inline bool in_cyclic_group(const GroupElement& g, std::int64_t n) { return n % g.den() == 0; }

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

}  // namespace dshuffle

#endif  // DSHUFFLE_GROUP_HPP
