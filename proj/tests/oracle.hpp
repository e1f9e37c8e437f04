// Brute-force references shared by the unit tests and the acceptance run.
// Nothing here calls into the product code it is used to check.

#ifndef DSHUFFLE_TESTS_ORACLE_HPP
#define DSHUFFLE_TESTS_ORACLE_HPP

#include <gmpxx.h>

#include <random>
#include <vector>

#include "dshuffle/recursive.hpp"

namespace oracle {

using namespace dshuffle;

// C(a, b) for 0 <= b <= a <= n from Pascal's rule alone.
inline std::vector<std::vector<mpz_class>> pascal(int n) {
  std::vector<std::vector<mpz_class>> c(static_cast<std::size_t>(n + 1));
  for (int a = 0; a <= n; ++a) {
    c[a].assign(static_cast<std::size_t>(a + 1), 1);
    for (int b = 1; b < a; ++b) c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
  }
  return c;
}

// Every interleaving, one per choice of the positions taken by u.
inline ShuffleComb shuffle(const ShuffleWord& u, const ShuffleWord& v) {
  const std::size_t n = u.size() + v.size();
  ShuffleComb out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size()) continue;
    ShuffleWord w;
    std::size_t iu = 0, iv = 0;
    for (std::size_t i = 0; i < n; ++i) w.letters.push_back((mask >> i) & 1U ? u[iu++] : v[iv++]);
    out.add_term(w, 1);
  }
  return out;
}

// Stuffle as a sum over pairs of increasing maps f: [k] -> [m], g: [l] -> [m]
// whose images cover [m]; slots hit twice merge.
inline IndexedComb stuffle(const IndexedWord& mu, const IndexedWord& nu) {
  const int k = static_cast<int>(mu.depth()), l = static_cast<int>(nu.depth());
  IndexedComb out;
  if (k + l == 0) {
    out.add_term(IndexedWord(), 1);
    return out;
  }
  for (int m = std::max(k, l); m <= k + l; ++m) {
    for (std::uint32_t fm = 0; fm < (1U << m); ++fm) {
      if (__builtin_popcount(fm) != k) continue;
      for (std::uint32_t gm = 0; gm < (1U << m); ++gm) {
        if (__builtin_popcount(gm) != l || (fm | gm) != (1U << m) - 1) continue;
        std::vector<int> s(static_cast<std::size_t>(m), 0);
        std::vector<GroupElement> z(static_cast<std::size_t>(m));
        std::size_t i_mu = 0, i_nu = 0;
        for (int j = 0; j < m; ++j) {
          if ((fm >> j) & 1U) {
            s[j] += mu.exponent(i_mu);
            z[j] *= mu.mark(i_mu++);
          }
          if ((gm >> j) & 1U) {
            s[j] += nu.exponent(i_nu);
            z[j] *= nu.mark(i_nu++);
          }
        }
        out.add_term(IndexedWord(s, z), 1);
      }
    }
  }
  return out;
}

// All words of exactly this weight, depth <= max_depth, marks in mu_n,
// admissible or not. Weight 0 gives the empty word.
inline std::vector<IndexedWord> words(int weight, int max_depth, std::int64_t n) {
  std::vector<IndexedWord> out;
  if (weight == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<GroupElement> roots;
  for (std::int64_t j = 0; j < n; ++j) roots.emplace_back(j, n);
  // exponent vectors by recursion on the first part
  std::vector<std::vector<int>> exps;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      exps.push_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_depth) return;
    for (int s = 1; s <= left; ++s) {
      cur.push_back(s);
      self(self, left - s);
      cur.pop_back();
    }
  };
  rec(rec, weight);
  for (const auto& s : exps) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < s.size(); ++i) total *= static_cast<std::size_t>(n);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<GroupElement> z;
      std::size_t c = code;
      for (std::size_t i = 0; i < s.size(); ++i, c /= static_cast<std::size_t>(n))
        z.push_back(roots[c % static_cast<std::size_t>(n)]);
      out.emplace_back(s, z);
    }
  }
  return out;
}

inline std::vector<IndexedWord> words_up_to(int max_weight, int max_depth, std::int64_t n) {
  std::vector<IndexedWord> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto ws = words(w, max_depth, n);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

// Letter words over x0 and x_b, b in mu_n, of exact length.
inline std::vector<ShuffleWord> letter_words(std::size_t length, std::int64_t n) {
  std::vector<Letter> alphabet{Letter::zero()};
  for (std::int64_t j = 0; j < n; ++j) alphabet.push_back(Letter::indexed({j, n}));
  std::vector<ShuffleWord> out{ShuffleWord()};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<ShuffleWord> next;
    for (const auto& w : out)
      for (const auto& a : alphabet) {
        ShuffleWord x = w;
        x.letters.push_back(a);
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

// Random word with marks in mu_n; weight in [1, max_weight].
inline IndexedWord random_word(std::mt19937& rng, int max_weight, int max_depth, std::int64_t n) {
  std::uniform_int_distribution<int> weight_dist(1, max_weight);
  const int weight = weight_dist(rng);
  std::vector<int> s;
  int left = weight;
  while (left > 0 && static_cast<int>(s.size()) < max_depth) {
    const bool last = static_cast<int>(s.size()) + 1 == max_depth;
    std::uniform_int_distribution<int> part(1, left);
    const int p = last ? left : part(rng);
    s.push_back(p);
    left -= p;
  }
  std::uniform_int_distribution<std::int64_t> mark(0, n - 1);
  std::vector<GroupElement> z;
  for (std::size_t i = 0; i < s.size(); ++i) z.emplace_back(mark(rng), n);
  return IndexedWord(s, z);
}

// Truncated sum over N >= n1 > ... > nk >= 1 in exact rationals, marks +-1 only.
inline mpq_class truncated_sum(const IndexedWord& w, int n_max) {
  if (w.empty()) return 1;
  const std::size_t k = w.depth();
  // inner[n]: sum over the levels below, with their top index < n
  std::vector<mpq_class> inner(static_cast<std::size_t>(n_max + 1), 1), outer(inner.size());
  for (std::size_t level = k; level-- > 0;) {
    mpq_class running = 0;
    outer[0] = 0;
    for (int n = 1; n <= n_max; ++n) {
      mpz_class denom;
      mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(w.exponent(level)));
      mpq_class term(1, denom);
      term.canonicalize();
      if (!w.mark(level).is_identity() && n % 2 == 1) term = -term;
      running += term * (level + 1 == k ? mpq_class(1) : inner[static_cast<std::size_t>(n - 1)]);
      outer[static_cast<std::size_t>(n)] = running;
    }
    std::swap(inner, outer);
  }
  return inner[static_cast<std::size_t>(n_max)];
}

}  // namespace oracle

#endif  // DSHUFFLE_TESTS_ORACLE_HPP
