#ifndef DSHUFFLE_WORD_HPP
#define DSHUFFLE_WORD_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "dshuffle/group.hpp"

namespace dshuffle {

/// A letter of the shuffle alphabet: x_0, or x_b for a group element b.
class Letter {
 public:
  static Letter zero() { return Letter(false, {}); }
  static Letter indexed(GroupElement b) { return Letter(true, b); }
  /// x_1, the letter indexed by the identity.
  static Letter one() { return indexed({}); }

  bool is_zero() const noexcept { return !indexed_; }
  bool is_indexed() const noexcept { return indexed_; }
  /// Only meaningful for indexed letters.
  const GroupElement& mark() const noexcept { return mark_; }

  friend bool operator==(const Letter&, const Letter&) = default;
  /// x_0 sorts first, then indexed letters by angle.
  friend std::strong_ordering operator<=>(const Letter&, const Letter&) = default;

 private:
  Letter(bool indexed, GroupElement mark) : indexed_(indexed), mark_(mark) {}

  bool indexed_;
  GroupElement mark_;
};

/// A word in x_0 and the x_b; the empty word is the unit of the shuffle algebra.
struct ShuffleWord {
  std::vector<Letter> letters;

  ShuffleWord() = default;
  explicit ShuffleWord(std::vector<Letter> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  const Letter& operator[](std::size_t i) const { return letters[i]; }

  friend bool operator==(const ShuffleWord&, const ShuffleWord&) = default;
  friend auto operator<=>(const ShuffleWord&, const ShuffleWord&) = default;
};

/// Empty, or ends in an indexed letter: the domain of the letter/index bijection.
bool ends_in_indexed_letter(const ShuffleWord& u);

/// Empty, or ends in an indexed letter and does not start with x_1.
bool is_convergent_shuffle_word(const ShuffleWord& u);

/// A word in pairs (exponent >= 1, mark); the empty word is the unit.
///
/// Ordered lexicographically on the exponent vector, then on the marks by angle.
class IndexedWord {
 public:
  IndexedWord() = default;
  /// All marks the identity.
  explicit IndexedWord(std::vector<int> exponents);
  IndexedWord(std::vector<int> exponents, std::vector<GroupElement> marks);

  std::size_t depth() const noexcept { return exponents_.size(); }
  bool empty() const noexcept { return exponents_.empty(); }
  int weight() const noexcept;

  const std::vector<int>& exponents() const noexcept { return exponents_; }
  const std::vector<GroupElement>& marks() const noexcept { return marks_; }
  int exponent(std::size_t i) const { return exponents_[i]; }
  const GroupElement& mark(std::size_t i) const { return marks_[i]; }

  /// Nonempty and the leading pair is not (1, identity).
  bool admissible() const noexcept;
  bool trivial_marks() const noexcept;

  /// [(s, b), this]
  IndexedWord prepended(int exponent, GroupElement mark) const;
  /// Copy with the leading exponent replaced; requires a nonempty word.
  IndexedWord with_leading_exponent(int exponent) const;
  /// Drops the first pair.
  IndexedWord tail() const;

  friend bool operator==(const IndexedWord&, const IndexedWord&) = default;
  friend auto operator<=>(const IndexedWord&, const IndexedWord&) = default;

 private:
  std::vector<int> exponents_;
  std::vector<GroupElement> marks_;
};

/// The concatenation of two words.
IndexedWord concat(const IndexedWord& a, const IndexedWord& b);

}  // namespace dshuffle

#endif  // DSHUFFLE_WORD_HPP
