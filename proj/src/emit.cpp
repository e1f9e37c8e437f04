#include "dshuffle/emit.hpp"

#include "dshuffle/errors.hpp"
#include "dshuffle/syntax.hpp"

namespace dshuffle {

namespace {

[[noreturn]] void bad(const std::string& message) { throw ParseError(0, "json: " + message); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

GroupElement mark_from_json(const Json& j) {
  if (!j.is_string()) bad("marks must be strings \"p/q\"");
  return parse_group_element(j.get<std::string>());
}

Integer coeff_from_json(const Json& j) {
  if (!j.is_string()) bad("coeff must be a decimal string");
  const std::string text = j.get<std::string>();
  Integer c;
  if (text.empty() || c.set_str(text, 10) != 0) bad("coeff '" + text + "' is not an integer");
  return c;
}

Json mark_list(const std::vector<GroupElement>& marks) {
  Json m = Json::array();
  for (const GroupElement& g : marks) m.push_back(format(g));
  return m;
}

Json terms_of(const IndexedComb& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x) {
    Json t;
    t["coeff"] = c.get_str();
    t["s"] = w.exponents();
    t["m"] = mark_list(w.marks());
    terms.push_back(std::move(t));
  }
  return terms;
}

IndexedComb comb_of_terms(const Json& terms) {
  if (!terms.is_array()) bad("'terms' must be an array");
  IndexedComb out;
  for (const Json& t : terms) out.add_term(indexed_word_from_json(t), coeff_from_json(field(t, "coeff")));
  return out;
}

}  // namespace

Json to_json(const IndexedWord& w) {
  Json j;
  j["s"] = w.exponents();
  j["m"] = mark_list(w.marks());
  return j;
}

Json to_json(const IndexedComb& x) {
  Json j;
  j["terms"] = terms_of(x);
  return j;
}

Json to_json(const ShuffleComb& x) {
  Json terms = Json::array();
  for (const auto& [u, c] : x) {
    Json letters = Json::array();
    for (const Letter& a : u.letters) letters.push_back(a.is_zero() ? std::string("0") : format(a.mark()));
    Json t;
    t["coeff"] = c.get_str();
    t["letters"] = std::move(letters);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const Relation& rel) {
  Json j;
  j["kind"] = to_string(rel.kind);
  j["left"] = to_json(rel.left);
  j["right"] = to_json(rel.right);
  j["terms"] = terms_of(rel.combination);
  return j;
}

IndexedWord indexed_word_from_json(const Json& j) {
  const Json& s = field(j, "s");
  const Json& m = field(j, "m");
  if (!s.is_array() || !m.is_array()) bad("'s' and 'm' must be arrays");
  if (s.size() != m.size()) bad("'s' and 'm' differ in length");
  std::vector<int> exps;
  std::vector<GroupElement> marks;
  for (const Json& e : s) {
    if (!e.is_number_integer() || e.get<long long>() < 1) bad("exponents must be integers >= 1");
    exps.push_back(e.get<int>());
  }
  for (const Json& g : m) marks.push_back(mark_from_json(g));
  return IndexedWord(std::move(exps), std::move(marks));
}

IndexedComb indexed_comb_from_json(const Json& j) { return comb_of_terms(field(j, "terms")); }

ShuffleComb shuffle_comb_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("'terms' must be an array");
  ShuffleComb out;
  for (const Json& t : terms) {
    const Json& letters = field(t, "letters");
    if (!letters.is_array()) bad("'letters' must be an array");
    ShuffleWord u;
    for (const Json& a : letters) {
      if (a == "0") u.letters.push_back(Letter::zero());
      else u.letters.push_back(Letter::indexed(mark_from_json(a)));
    }
    out.add_term(u, coeff_from_json(field(t, "coeff")));
  }
  return out;
}

Relation relation_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) bad("'kind' must be a string");
  Relation rel;
  try {
    rel.kind = relation_kind_from_string(kind.get<std::string>());
  } catch (const DomainError& e) {
    bad(e.what());
  }
  rel.left = indexed_word_from_json(field(j, "left"));
  rel.right = indexed_word_from_json(field(j, "right"));
  rel.combination = comb_of_terms(field(j, "terms"));
  return rel;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, e.what());
  }
}

// ---------------------------------------------------------------------------

namespace {

std::string latex_mark(const GroupElement& g) {
  if (g.is_identity()) return "1";
  if (g == GroupElement::minus_one()) return "-1";
  return "e^{2\\pi i\\cdot " + format(g) + "}";
}

bool fits(const IndexedWord& w, Notation n) {
  for (const GroupElement& g : w.marks()) {
    if (n == Notation::Zeta && !g.is_identity()) return false;
    if (n == Notation::Alternating && g.den() > 2) return false;
  }
  return true;
}

Notation resolve(const std::vector<IndexedWord>& words, Notation n) {
  if (n != Notation::Auto) return n;
  for (Notation candidate : {Notation::Zeta, Notation::Alternating}) {
    bool ok = true;
    for (const IndexedWord& w : words) ok = ok && fits(w, candidate);
    if (ok) return candidate;
  }
  return Notation::Polylog;
}

std::vector<IndexedWord> words_of(const IndexedComb& x) {
  std::vector<IndexedWord> out;
  for (const auto& [w, c] : x) out.push_back(w);
  return out;
}

std::string join_exponents(const IndexedWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.depth(); ++i) out += (i ? "," : "") + std::to_string(w.exponent(i));
  return out;
}

std::string join_marks(const IndexedWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.depth(); ++i) out += (i ? "," : "") + latex_mark(w.mark(i));
  return out;
}

template <class Word, class Render>
std::string latex_sum(const LinComb<Word>& x, Render render) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : x) {
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    const Integer magnitude = abs(c);
    const std::string body = render(w);
    if (magnitude != 1) out += magnitude.get_str();
    else if (body == "1") out += "1";
    if (body != "1") out += body;
  }
  return out;
}

}  // namespace

std::string latex(const IndexedWord& w, Notation notation) {
  if (w.empty()) return "1";
  if (notation == Notation::Auto) notation = resolve({w}, notation);
  switch (notation) {
    case Notation::Zeta:
      return "\\zeta(" + join_exponents(w) + ")";
    case Notation::Alternating:
      return "\\zeta(" + join_exponents(w) + ";" + join_marks(w) + ")";
    case Notation::Lambda:
      return "\\lambda(" + join_exponents(w) + ";" + join_marks(w) + ")";
    default:
      return "\\mathrm{Li}_{" + join_exponents(w) + "}(" + join_marks(w) + ")";
  }
}

std::string latex(const IndexedComb& x, Notation notation) {
  notation = resolve(words_of(x), notation);
  return latex_sum(x, [&](const IndexedWord& w) { return latex(w, notation); });
}

std::string latex(const ShuffleComb& x) {
  return latex_sum(x, [](const ShuffleWord& u) {
    if (u.empty()) return std::string("1");
    std::string out;
    for (const Letter& a : u.letters) {
      if (a.is_zero()) out += "x_0";
      else if (a.mark().is_identity()) out += "x_1";
      else out += "x_{" + latex_mark(a.mark()) + "}";
    }
    return out;
  });
}

std::string latex(const Relation& rel, Notation notation) {
  std::vector<IndexedWord> everything = words_of(rel.combination);
  everything.push_back(rel.left);
  everything.push_back(rel.right);
  notation = resolve(everything, notation);
  const std::string sum = latex(rel.combination, notation);
  if (rel.kind != RelationKind::Product) return sum + " = 0";
  return latex(rel.left, notation) + latex(rel.right, notation) + " = " + sum;
}

}  // namespace dshuffle
