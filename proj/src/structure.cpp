#include "dshuffle/structure.hpp"

#include "dshuffle/errors.hpp"

namespace dshuffle {

IndexedWord to_indexed_word(const ShuffleWord& u) {
  if (!ends_in_indexed_letter(u))
    throw DomainError("word ending in x_0 has no indexed form");
  std::vector<int> s;
  std::vector<GroupElement> b;
  int run = 0;
  for (const Letter& x : u.letters) {
    ++run;
    if (x.is_indexed()) {
      s.push_back(run);
      b.push_back(x.mark());
      run = 0;
    }
  }
  return IndexedWord(std::move(s), std::move(b));
}

ShuffleWord to_shuffle_word(const IndexedWord& nu) {
  ShuffleWord u;
  u.letters.reserve(static_cast<std::size_t>(nu.weight()));
  for (std::size_t i = 0; i < nu.depth(); ++i) {
    u.letters.insert(u.letters.end(), static_cast<std::size_t>(nu.exponent(i) - 1), Letter::zero());
    u.letters.push_back(Letter::indexed(nu.mark(i)));
  }
  return u;
}

std::vector<GroupElement> marks_to_e_form(const std::vector<GroupElement>& b) {
  std::vector<GroupElement> z(b.size());
  GroupElement previous;
  for (std::size_t i = 0; i < b.size(); ++i) {
    z[i] = previous / b[i];
    previous = b[i];
  }
  return z;
}

std::vector<GroupElement> marks_to_b_form(const std::vector<GroupElement>& z) {
  std::vector<GroupElement> b(z.size());
  GroupElement running;
  for (std::size_t i = 0; i < z.size(); ++i) {
    running *= z[i];
    b[i] = running.inverse();
  }
  return b;
}

IndexedWord to_e_form(const IndexedWord& nu) {
  return IndexedWord(nu.exponents(), marks_to_e_form(nu.marks()));
}

IndexedWord to_b_form(const IndexedWord& nu) {
  return IndexedWord(nu.exponents(), marks_to_b_form(nu.marks()));
}

IndexedComb to_e_form(const IndexedComb& xi) {
  return xi.map_words([](const IndexedWord& w) { return to_e_form(w); });
}

IndexedComb to_b_form(const IndexedComb& xi) {
  return xi.map_words([](const IndexedWord& w) { return to_b_form(w); });
}

IndexedWord shuffle_word_to_e_form(const ShuffleWord& u) { return to_e_form(to_indexed_word(u)); }

ShuffleWord e_form_to_shuffle_word(const IndexedWord& nu) { return to_shuffle_word(to_b_form(nu)); }

ShuffleComb to_shuffle_comb(const IndexedComb& xi) {
  return xi.map_words([](const IndexedWord& w) { return to_shuffle_word(w); });
}

IndexedComb to_indexed_comb(const ShuffleComb& x) {
  return x.map_words([](const ShuffleWord& u) { return to_indexed_word(u); });
}

IndexedComb shuffle_product_b(const IndexedWord& mu, const IndexedWord& nu) {
  return to_indexed_comb(shuffle(to_shuffle_word(mu), to_shuffle_word(nu)));
}

IndexedComb shuffle_product_b(const IndexedComb& x, const IndexedComb& y) {
  return bilinear(x, y, [](const IndexedWord& a, const IndexedWord& b) { return shuffle_product_b(a, b); });
}

IndexedComb shuffle_product_e(const IndexedWord& mu, const IndexedWord& nu) {
  const ShuffleComb product = shuffle(e_form_to_shuffle_word(mu), e_form_to_shuffle_word(nu));
  return product.map_words([](const ShuffleWord& u) { return shuffle_word_to_e_form(u); });
}

IndexedComb shuffle_product_e(const IndexedComb& x, const IndexedComb& y) {
  return bilinear(x, y, [](const IndexedWord& a, const IndexedWord& b) { return shuffle_product_e(a, b); });
}

}  // namespace dshuffle
