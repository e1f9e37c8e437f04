#ifndef DSHUFFLE_SYNTAX_HPP
#define DSHUFFLE_SYNTAX_HPP

#include <string>
#include <string_view>

#include "dshuffle/special.hpp"

namespace dshuffle {

// Text grammar
//
//   indexed word   1 | ( s1,...,sk ) | ( s1,...,sk | p1/q1,...,pk/qk )
//   shuffle word   tokens 0, 1 and [p/q], optionally wrapped in ( ); () is empty
//   combination    0 | term { (+|-) term },  term = [c *] word
//   relation       kind left right : combination
//
// p/q means exp(2 pi i p/q); it is reduced mod 1 on input. Whitespace between
// tokens is ignored. Errors raise ParseError with the offset of the culprit.

IndexedWord parse_indexed_word(std::string_view text);
ShuffleWord parse_shuffle_word(std::string_view text);
GroupElement parse_group_element(std::string_view text);
IndexedComb parse_indexed_comb(std::string_view text);
ShuffleComb parse_shuffle_comb(std::string_view text);
Relation parse_relation(std::string_view text);

std::string format(const GroupElement& g);
/// "1", "(2,1)" for trivial marks, "(2,1 | 1/2,0/1)" otherwise.
std::string format(const IndexedWord& w);
/// Tokens separated by single spaces; the empty word is "()".
std::string format(const ShuffleWord& u);
/// "2*(2,2) + 4*(3,1)", unit coefficients omitted, "0" when empty.
std::string format(const IndexedComb& x);
/// Like the indexed form with every word in parentheses: "4*(0 0 1 1) + 2*(0 1 0 1)".
std::string format(const ShuffleComb& x);
/// "product (2) (3) : (2,3) + 3*(3,2) + 6*(4,1)".
std::string format(const Relation& rel);

}  // namespace dshuffle

#endif  // DSHUFFLE_SYNTAX_HPP
