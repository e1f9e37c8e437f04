#ifndef DSHUFFLE_LINCOMB_HPP
#define DSHUFFLE_LINCOMB_HPP

#include <gmpxx.h>

#include <map>
#include <utility>

namespace dshuffle {

/// Arbitrary-precision integer coefficients.
using Integer = mpz_class;

/// A finite integer linear combination of words.
///
/// Zero coefficients are never stored, so two combinations are equal exactly
/// when their term maps are equal. Iteration follows the word ordering, which
/// makes every printed form deterministic.
template <class Word>
class LinComb {
 public:
  using map_type = std::map<Word, Integer>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  explicit LinComb(Word w, Integer c = 1) { add_term(std::move(w), c); }

  void add_term(const Word& w, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  /// Sum of all coefficients.
  Integer mass() const {
    Integer m = 0;
    for (const auto& [w, c] : terms_) m += c;
    return m;
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
  }
  LinComb& operator*=(const Integer& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [w, c] : terms_) c *= k;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Integer(-1); }
  friend LinComb operator*(const Integer& k, LinComb a) { return a *= k; }
  friend LinComb operator*(LinComb a, const Integer& k) { return a *= k; }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Linear extension of a word-to-word map.
  template <class F>
  auto map_words(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Word&>()))>;
    LinComb<Out> out;
    for (const auto& [w, c] : terms_) out.add_term(f(w), c);
    return out;
  }

  /// Linear extension of a word-to-combination map.
  template <class F>
  auto flat_map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const Word&>()))>;
    Out out;
    for (const auto& [w, c] : terms_) {
      Out image = f(w);
      image *= c;
      out += image;
    }
    return out;
  }

 private:
  map_type terms_;
};

template <class Word>
LinComb<Word> lincomb_add(const LinComb<Word>& a, const LinComb<Word>& b) { return a + b; }
template <class Word>
LinComb<Word> lincomb_sub(const LinComb<Word>& a, const LinComb<Word>& b) { return a - b; }
template <class Word>
LinComb<Word> lincomb_scale(const Integer& k, const LinComb<Word>& a) { return k * a; }

/// Bilinear extension of a word product.
template <class Word, class Product>
LinComb<Word> bilinear(const LinComb<Word>& a, const LinComb<Word>& b, Product&& product) {
  LinComb<Word> out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      LinComb<Word> term = product(u, v);
      term *= Integer(cu * cv);
      out += term;
    }
  }
  return out;
}

}  // namespace dshuffle

#endif  // DSHUFFLE_LINCOMB_HPP
