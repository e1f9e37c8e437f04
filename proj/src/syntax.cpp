#include "dshuffle/syntax.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "dshuffle/errors.hpp"

namespace dshuffle {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }
  void expect_end() {
    if (at_end()) return;
    if (text_[pos_] == ')' || text_[pos_] == ']') fail(std::string("unbalanced '") + text_[pos_] + "'");
    fail("unexpected trailing input" + found());
  }

  std::size_t pos() const noexcept { return pos_; }
  void reset(std::size_t pos) noexcept { pos_ = pos; }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number" + found());
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    const bool negative = accept('-');
    const std::string d = digits();
    if (d.size() > 18) fail_at(start, "number out of range");
    const std::int64_t v = std::stoll(d);
    return negative ? -v : v;
  }

  std::string word_token() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected a name" + found());
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const { throw ParseError(pos, message); }

  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

GroupElement fraction(Cursor& in) {
  const std::int64_t p = in.integer();
  if (!in.accept('/')) in.fail("malformed fraction: expected '/'" + in.found());
  in.skip_ws();
  const std::size_t den_pos = in.pos();
  const std::int64_t q = in.integer();
  if (q < 1) in.fail_at(den_pos, "malformed fraction: denominator must be >= 1");
  return GroupElement(p, q);
}

IndexedWord indexed_word(Cursor& in) {
  in.skip_ws();
  const std::size_t start = in.pos();
  if (in.accept('1')) return IndexedWord();
  if (!in.accept('(')) in.fail("expected '(' or '1'" + in.found());
  std::vector<int> exps;
  do {
    in.skip_ws();
    const std::size_t at = in.pos();
    const std::int64_t s = in.integer();
    if (s < 1) in.fail_at(at, "exponent must be >= 1");
    if (s > std::numeric_limits<int>::max()) in.fail_at(at, "exponent out of range");
    exps.push_back(static_cast<int>(s));
  } while (in.accept(','));
  std::vector<GroupElement> marks;
  if (in.accept('|')) {
    in.skip_ws();
    const std::size_t marks_at = in.pos();
    do marks.push_back(fraction(in));
    while (in.accept(','));
    if (marks.size() != exps.size())
      in.fail_at(marks_at, "expected " + std::to_string(exps.size()) + " marks, got " + std::to_string(marks.size()));
  } else {
    marks.assign(exps.size(), GroupElement());
  }
  if (!in.accept(')')) {
    if (in.at_end()) in.fail_at(start, "unbalanced '('");
    in.fail("expected ')'" + in.found());
  }
  return IndexedWord(std::move(exps), std::move(marks));
}

Letter letter(Cursor& in) {
  in.skip_ws();
  const std::size_t start = in.pos();
  if (in.accept('0')) return Letter::zero();
  if (in.accept('1')) return Letter::one();
  if (in.accept('[')) {
    GroupElement b = fraction(in);
    if (!in.accept(']')) {
      if (in.at_end()) in.fail_at(start, "unbalanced '['");
      in.fail("expected ']'" + in.found());
    }
    return Letter::indexed(b);
  }
  in.fail("expected a letter 0, 1 or [p/q]" + in.found());
}

bool letter_start(char c) { return c == '0' || c == '1' || c == '['; }

ShuffleWord bracketed_shuffle_word(Cursor& in) {
  in.skip_ws();
  const std::size_t start = in.pos();
  in.expect('(');
  ShuffleWord u;
  while (letter_start(in.peek())) u.letters.push_back(letter(in));
  if (!in.accept(')')) {
    if (in.at_end()) in.fail_at(start, "unbalanced '('");
    in.fail("expected a letter or ')'" + in.found());
  }
  return u;
}

template <class Word, class ReadWord>
LinComb<Word> comb(Cursor& in, ReadWord read_word) {
  LinComb<Word> out;
  // A lone 0 is the zero combination.
  const std::size_t start = in.pos();
  if (in.accept('0') && in.at_end()) return out;
  in.reset(start);

  bool first = true;
  while (first || !in.at_end()) {
    int sign = 1;
    if (in.accept('-')) {
      sign = -1;
    } else if (!first) {
      in.expect('+');
    }
    first = false;
    Integer c = 1;
    in.skip_ws();
    const std::size_t term_at = in.pos();
    if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
      const std::string d = in.digits();
      if (in.accept('*')) c = Integer(d);
      else in.reset(term_at);
    }
    out.add_term(read_word(in), sign * c);
  }
  return out;
}

}  // namespace

IndexedWord parse_indexed_word(std::string_view text) {
  Cursor in(text);
  IndexedWord w = indexed_word(in);
  in.expect_end();
  return w;
}

ShuffleWord parse_shuffle_word(std::string_view text) {
  Cursor in(text);
  if (in.peek() == '(') {
    ShuffleWord u = bracketed_shuffle_word(in);
    in.expect_end();
    return u;
  }
  ShuffleWord u;
  while (!in.at_end()) u.letters.push_back(letter(in));
  return u;
}

GroupElement parse_group_element(std::string_view text) {
  Cursor in(text);
  GroupElement g = fraction(in);
  in.expect_end();
  return g;
}

IndexedComb parse_indexed_comb(std::string_view text) {
  Cursor in(text);
  return comb<IndexedWord>(in, indexed_word);
}

ShuffleComb parse_shuffle_comb(std::string_view text) {
  Cursor in(text);
  return comb<ShuffleWord>(in, bracketed_shuffle_word);
}

Relation parse_relation(std::string_view text) {
  Cursor in(text);
  in.skip_ws();
  const std::size_t kind_at = in.pos();
  Relation rel;
  try {
    rel.kind = relation_kind_from_string(in.word_token());
  } catch (const DomainError& e) {
    throw ParseError(kind_at, e.what());
  }
  rel.left = indexed_word(in);
  rel.right = indexed_word(in);
  in.expect(':');
  rel.combination = comb<IndexedWord>(in, indexed_word);
  return rel;
}

std::string format(const GroupElement& g) {
  return std::to_string(g.num()) + "/" + std::to_string(g.den());
}

std::string format(const IndexedWord& w) {
  if (w.empty()) return "1";
  std::string out = "(";
  for (std::size_t i = 0; i < w.depth(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.exponent(i));
  }
  if (!w.trivial_marks()) {
    out += " | ";
    for (std::size_t i = 0; i < w.depth(); ++i) {
      if (i) out += ',';
      out += format(w.mark(i));
    }
  }
  return out + ")";
}

std::string format(const ShuffleWord& u) {
  if (u.empty()) return "()";
  std::string out;
  for (const Letter& a : u.letters) {
    if (!out.empty()) out += ' ';
    if (a.is_zero()) out += '0';
    else if (a.mark().is_identity()) out += '1';
    else out += "[" + format(a.mark()) + "]";
  }
  return out;
}

namespace {

template <class Word, class FormatWord>
std::string format_comb(const LinComb<Word>& x, FormatWord word_text) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : x) {
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Integer magnitude = abs(c);
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += word_text(w);
  }
  return out;
}

}  // namespace

std::string format(const IndexedComb& x) {
  return format_comb(x, [](const IndexedWord& w) { return format(w); });
}

std::string format(const ShuffleComb& x) {
  return format_comb(x, [](const ShuffleWord& u) { return u.empty() ? "()" : "(" + format(u) + ")"; });
}

std::string format(const Relation& rel) {
  std::ostringstream out;
  out << to_string(rel.kind) << ' ' << format(rel.left) << ' ' << format(rel.right) << " : "
      << format(rel.combination);
  return out.str();
}

}  // namespace dshuffle
