#include "dshuffle/word.hpp"

#include <numeric>

#include "dshuffle/errors.hpp"

namespace dshuffle {

bool ends_in_indexed_letter(const ShuffleWord& u) {
  return u.empty() || u.letters.back().is_indexed();
}

bool is_convergent_shuffle_word(const ShuffleWord& u) {
  if (u.empty()) return true;
  const Letter& first = u.letters.front();
  if (first.is_indexed() && first.mark().is_identity()) return false;
  return u.letters.back().is_indexed();
}

IndexedWord::IndexedWord(std::vector<int> exponents)
    : exponents_(std::move(exponents)), marks_(exponents_.size()) {
  for (int s : exponents_)
    if (s < 1) throw DomainError("indexed word exponents must be >= 1");
}

IndexedWord::IndexedWord(std::vector<int> exponents, std::vector<GroupElement> marks)
    : exponents_(std::move(exponents)), marks_(std::move(marks)) {
  if (exponents_.size() != marks_.size())
    throw DomainError("indexed word needs as many marks as exponents");
  for (int s : exponents_)
    if (s < 1) throw DomainError("indexed word exponents must be >= 1");
}

int IndexedWord::weight() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool IndexedWord::admissible() const noexcept {
  return !empty() && !(exponents_[0] == 1 && marks_[0].is_identity());
}

bool IndexedWord::trivial_marks() const noexcept {
  for (const auto& m : marks_)
    if (!m.is_identity()) return false;
  return true;
}

IndexedWord IndexedWord::prepended(int exponent, GroupElement mark) const {
  IndexedWord out;
  out.exponents_.reserve(depth() + 1);
  out.marks_.reserve(depth() + 1);
  out.exponents_.push_back(exponent);
  out.marks_.push_back(mark);
  out.exponents_.insert(out.exponents_.end(), exponents_.begin(), exponents_.end());
  out.marks_.insert(out.marks_.end(), marks_.begin(), marks_.end());
  if (exponent < 1) throw DomainError("indexed word exponents must be >= 1");
  return out;
}

IndexedWord IndexedWord::with_leading_exponent(int exponent) const {
  if (empty()) throw DomainError("the empty word has no leading exponent");
  if (exponent < 1) throw DomainError("indexed word exponents must be >= 1");
  IndexedWord out = *this;
  out.exponents_[0] = exponent;
  return out;
}

IndexedWord IndexedWord::tail() const {
  if (empty()) throw DomainError("the empty word has no tail");
  IndexedWord out;
  out.exponents_.assign(exponents_.begin() + 1, exponents_.end());
  out.marks_.assign(marks_.begin() + 1, marks_.end());
  return out;
}

IndexedWord concat(const IndexedWord& a, const IndexedWord& b) {
  std::vector<int> s = a.exponents();
  std::vector<GroupElement> m = a.marks();
  s.insert(s.end(), b.exponents().begin(), b.exponents().end());
  m.insert(m.end(), b.marks().begin(), b.marks().end());
  return IndexedWord(std::move(s), std::move(m));
}

}  // namespace dshuffle
