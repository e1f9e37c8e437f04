#include "dshuffle/group.hpp"

#include <numbers>
#include <numeric>
#include <ostream>

#include "dshuffle/errors.hpp"

namespace dshuffle {

GroupElement::GroupElement(std::int64_t num, std::int64_t den) {
  if (den < 1) throw DomainError("group element denominator must be >= 1");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

GroupElement GroupElement::inverse() const { return {den_ - num_, den_}; }

std::complex<double> GroupElement::power(std::int64_t n) const {
  // Reduce num*n mod den in integers so that large n stay exact.
  std::int64_t k = ((n % den_) * num_) % den_;
  if (k < 0) k += den_;
  if (k == 0) return {1.0, 0.0};
  if (2 * k == den_) return {-1.0, 0.0};
  if (4 * k == den_) return {0.0, 1.0};
  if (4 * k == 3 * den_) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(den_);
  return std::polar(1.0, angle);
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

GroupElement product(const std::vector<GroupElement>& elements, std::size_t first, std::size_t last) {
  GroupElement acc;
  for (std::size_t i = first; i < last; ++i) acc *= elements[i];
  return acc;
}

std::vector<GroupElement> roots_of_unity(std::int64_t n) {
  if (n < 1) throw DomainError("cyclic group order must be >= 1");
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) out.emplace_back(k, n);
  return out;
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  return os << g.num() << '/' << g.den();
}

}  // namespace dshuffle
