#ifndef DSHUFFLE_EMIT_HPP
#define DSHUFFLE_EMIT_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "dshuffle/special.hpp"

namespace dshuffle {

using Json = nlohmann::ordered_json;

// JSON
//
//   combination  {"terms":[{"coeff":"<decimal>","s":[...],"m":["p/q",...]}]}
//   shuffle      {"terms":[{"coeff":"<decimal>","letters":["0","p/q",...]}]}
//   relation     {"kind":..., "left":{"s","m"}, "right":{"s","m"}, "terms":[...]}
//
// Coefficients are strings so that big integers survive. The readers raise
// ParseError on malformed input.

Json to_json(const IndexedWord& w);
Json to_json(const IndexedComb& x);
Json to_json(const ShuffleComb& x);
Json to_json(const Relation& rel);

IndexedWord indexed_word_from_json(const Json& j);
IndexedComb indexed_comb_from_json(const Json& j);
ShuffleComb shuffle_comb_from_json(const Json& j);
Relation relation_from_json(const Json& j);
/// Parses one JSON document; syntax errors keep their byte offset.
Json parse_json(std::string_view text);

// LaTeX

enum class Notation {
  Auto,         ///< the narrowest of the three below that fits every mark
  Zeta,         ///< \zeta(2,1); trivial marks only
  Alternating,  ///< \zeta(2,1;-1,1); marks +-1
  Polylog,      ///< \mathrm{Li}_{2,1}(e^{2\pi i\cdot 1/3},1)
  Lambda,       ///< \lambda(2,1;-1,1), for b-form words
};

std::string latex(const IndexedWord& w, Notation notation);
std::string latex(const IndexedComb& x, Notation notation = Notation::Auto);
/// Letters x_0, x_1, x_{-1}, x_{e^{...}}.
std::string latex(const ShuffleComb& x);
/// Products read "lhs = rhs", the other kinds "combination = 0".
std::string latex(const Relation& rel, Notation notation = Notation::Auto);

}  // namespace dshuffle

#endif  // DSHUFFLE_EMIT_HPP
