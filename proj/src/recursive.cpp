#include "dshuffle/recursive.hpp"

#include <vector>

#include "dshuffle/errors.hpp"

namespace dshuffle {
namespace {

ShuffleWord suffix(const ShuffleWord& u, std::size_t from) {
  return ShuffleWord({u.letters.begin() + static_cast<std::ptrdiff_t>(from), u.letters.end()});
}

IndexedWord suffix(const IndexedWord& w, std::size_t from) {
  const auto off = static_cast<std::ptrdiff_t>(from);
  return IndexedWord({w.exponents().begin() + off, w.exponents().end()},
                     {w.marks().begin() + off, w.marks().end()});
}

void add_prepended(ShuffleComb& out, const Letter& a, const ShuffleComb& tail) {
  for (const auto& [w, c] : tail) {
    ShuffleWord x;
    x.letters.reserve(w.size() + 1);
    x.letters.push_back(a);
    x.letters.insert(x.letters.end(), w.letters.begin(), w.letters.end());
    out.add_term(x, c);
  }
}

void add_prepended(IndexedComb& out, int s, const GroupElement& b, const IndexedComb& tail) {
  for (const auto& [w, c] : tail) out.add_term(w.prepended(s, b), c);
}

// table[i][j] holds the product of the suffixes starting at i and j.
template <class Comb>
using SuffixTable = std::vector<std::vector<Comb>>;

}  // namespace

ShuffleComb shuffle(const ShuffleWord& u, const ShuffleWord& v) {
  const std::size_t m = u.size(), n = v.size();
  SuffixTable<ShuffleComb> table(m + 1, std::vector<ShuffleComb>(n + 1));
  for (std::size_t j = 0; j <= n; ++j) table[m][j] = ShuffleComb(suffix(v, j));
  for (std::size_t i = 0; i < m; ++i) table[i][n] = ShuffleComb(suffix(u, i));
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      ShuffleComb cell;
      add_prepended(cell, u[i], table[i + 1][j]);
      add_prepended(cell, v[j], table[i][j + 1]);
      table[i][j] = std::move(cell);
    }
  }
  return std::move(table[0][0]);
}

ShuffleComb shuffle(const ShuffleComb& x, const ShuffleComb& y) {
  return bilinear(x, y, [](const ShuffleWord& a, const ShuffleWord& b) { return shuffle(a, b); });
}

IndexedComb quasi_shuffle(const IndexedWord& mu, const IndexedWord& nu) {
  const std::size_t m = mu.depth(), n = nu.depth();
  SuffixTable<IndexedComb> table(m + 1, std::vector<IndexedComb>(n + 1));
  for (std::size_t j = 0; j <= n; ++j) table[m][j] = IndexedComb(suffix(nu, j));
  for (std::size_t i = 0; i < m; ++i) table[i][n] = IndexedComb(suffix(mu, i));
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      IndexedComb cell;
      add_prepended(cell, mu.exponent(i), mu.mark(i), table[i + 1][j]);
      add_prepended(cell, nu.exponent(j), nu.mark(j), table[i][j + 1]);
      add_prepended(cell, mu.exponent(i) + nu.exponent(j), mu.mark(i) * nu.mark(j),
                    table[i + 1][j + 1]);
      table[i][j] = std::move(cell);
    }
  }
  return std::move(table[0][0]);
}

IndexedComb quasi_shuffle(const IndexedComb& x, const IndexedComb& y) {
  return bilinear(x, y, [](const IndexedWord& a, const IndexedWord& b) { return quasi_shuffle(a, b); });
}

IndexedComb raise_leading_exponent(const IndexedWord& w) {
  if (w.empty()) throw DomainError("P is not defined on the empty word");
  return IndexedComb(w.with_leading_exponent(w.exponent(0) + 1));
}

IndexedComb raise_leading_exponent(const IndexedComb& xi) {
  IndexedComb out;
  for (const auto& [w, c] : xi) {
    if (w.empty()) throw DomainError("P is not defined on the empty word");
    out.add_term(w.with_leading_exponent(w.exponent(0) + 1), c);
  }
  return out;
}

IndexedComb prepend_unit_pair(const GroupElement& b, const IndexedWord& w) {
  return IndexedComb(w.prepended(1, b));
}

IndexedComb prepend_unit_pair(const GroupElement& b, const IndexedComb& xi) {
  IndexedComb out;
  for (const auto& [w, c] : xi) out.add_term(w.prepended(1, b), c);
  return out;
}

}  // namespace dshuffle
