// dshuffle: shuffle and stuffle products of indexed words, the explicit
// product formula, relation streams and numeric checks.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "dshuffle/emit.hpp"
#include "dshuffle/errors.hpp"
#include "dshuffle/explicit.hpp"
#include "dshuffle/permutation.hpp"
#include "dshuffle/special.hpp"
#include "dshuffle/structure.hpp"
#include "dshuffle/syntax.hpp"

using namespace dshuffle;

namespace {

enum class Format { Text, Json, Latex };

struct Options {
  std::string format = "text";
  std::string group;
  std::string a, b;
  std::string form = "b";
  bool letters = false;
  int r = 0, s = 0;
  int weight = 0, depth = 0;
  bool hoffman = false;
  std::int64_t terms = 100000;
  double tol = 1e-3;
  std::string input;
  bool conditional = false;
};

Format output_format(const Options& o) {
  if (o.format == "json") return Format::Json;
  if (o.format == "latex") return Format::Latex;
  return Format::Text;
}

// 0 means "no group given".
std::int64_t group_order(const std::string& text) {
  if (text.empty()) return 0;
  if (text == "trivial") return 1;
  if (text == "sign") return 2;
  if (text.rfind("root:", 0) == 0) {
    const std::string n = text.substr(5);
    if (!n.empty() && n.find_first_not_of("0123456789") == std::string::npos && n.size() < 10) {
      const std::int64_t order = std::stoll(n);
      if (order >= 1) return order;
    }
  }
  throw DomainError("--group expects trivial, sign or root:N with N >= 1, got '" + text + "'");
}

void check_group(const std::vector<GroupElement>& marks, std::int64_t order) {
  if (order == 0) return;
  for (const GroupElement& g : marks)
    if (!in_cyclic_group(g, order))
      throw DomainError("mark " + format(g) + " does not lie in mu_" + std::to_string(order));
}

IndexedWord word_arg(const std::string& text, std::int64_t order) {
  IndexedWord w = parse_indexed_word(text);
  check_group(w.marks(), order);
  return w;
}

ShuffleWord letters_arg(const std::string& text, std::int64_t order) {
  ShuffleWord u = parse_shuffle_word(text);
  for (const Letter& a : u.letters)
    if (a.is_indexed()) check_group({a.mark()}, order);
  return u;
}

void emit(const IndexedComb& x, Format f, Notation notation = Notation::Auto) {
  switch (f) {
    case Format::Json: std::cout << to_json(x).dump() << '\n'; break;
    case Format::Latex: std::cout << latex(x, notation) << '\n'; break;
    case Format::Text: std::cout << format(x) << '\n'; break;
  }
}

void emit(const ShuffleComb& x, Format f) {
  switch (f) {
    case Format::Json: std::cout << to_json(x).dump() << '\n'; break;
    case Format::Latex: std::cout << latex(x) << '\n'; break;
    case Format::Text: std::cout << format(x) << '\n'; break;
  }
}

void emit(const Relation& rel, Format f) {
  switch (f) {
    case Format::Json: std::cout << to_json(rel).dump() << '\n'; break;
    case Format::Latex: std::cout << latex(rel) << '\n'; break;
    case Format::Text: std::cout << format(rel) << '\n'; break;
  }
}

// b-form words with real marks read as lambda values.
Notation b_form_notation(const IndexedComb& x) {
  for (const auto& [w, c] : x)
    if (!w.trivial_marks()) return Notation::Lambda;
  return Notation::Auto;
}

int run_verify(const Options& o, std::int64_t order) {
  std::ifstream file;
  if (!o.input.empty()) {
    file.open(o.input);
    if (!file) throw DomainError("cannot open '" + o.input + "'");
  }
  std::istream& in = o.input.empty() ? std::cin : file;
  EvaluationOptions eval;
  eval.allow_conditional = o.conditional;
  PolylogEvaluator evaluate(o.terms, eval);
  const Format f = output_format(o);

  std::size_t count = 0, failed = 0;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Relation rel;
    try {
      rel = line[first] == '{' ? relation_from_json(parse_json(line)) : parse_relation(line);
    } catch (const ParseError& e) {
      throw ParseError(e.position(), "line " + std::to_string(line_no) + ": " + e.what());
    }
    check_group(rel.left.marks(), order);
    check_group(rel.right.marks(), order);
    for (const auto& [w, c] : rel.combination) check_group(w.marks(), order);

    const ResidualReport report = verify_relation_numeric(rel, evaluate, o.tol);
    ++count;
    if (!report.pass) ++failed;
    if (f == Format::Json) {
      Json j;
      j["relation"] = format(rel);
      j["residual"] = report.residual;
      j["threshold"] = report.threshold;
      j["pass"] = report.pass;
      std::cout << j.dump() << '\n';
    } else {
      std::ostringstream row;
      row << (report.pass ? "PASS" : "FAIL") << std::scientific << std::setprecision(3)
          << "  residual=" << report.residual << "  threshold=" << report.threshold << "  " << format(rel);
      std::cout << row.str() << '\n';
    }
  }
  if (f != Format::Json)
    std::cout << count - failed << "/" << count << " relations verified at N=" << o.terms << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shuffle and stuffle products of indexed words, polylogarithm relations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  app.add_option("--group", o.group, "Mark group: trivial, sign or root:N");

  auto* shuffle_cmd = app.add_subcommand("shuffle", "Shuffle product by the letter recursion");
  shuffle_cmd->add_option("A", o.a)->required();
  shuffle_cmd->add_option("B", o.b)->required();
  shuffle_cmd->add_flag("--letters", o.letters, "Operands and result are letter words");
  shuffle_cmd->add_option("--form", o.form, "Index coordinates for the marks")
      ->check(CLI::IsMember({"b", "e"}))
      ->capture_default_str();

  auto* stuffle_cmd = app.add_subcommand("stuffle", "Quasi-shuffle (stuffle) product");
  stuffle_cmd->add_option("A", o.a)->required();
  stuffle_cmd->add_option("B", o.b)->required();

  auto* explicit_cmd = app.add_subcommand("explicit", "Shuffle product by the closed formula over index pairs");
  explicit_cmd->add_option("A", o.a)->required();
  explicit_cmd->add_option("B", o.b)->required();
  explicit_cmd->add_option("--form", o.form, "Index coordinates for the marks")
      ->check(CLI::IsMember({"b", "e"}))
      ->capture_default_str();

  auto* perm_cmd = app.add_subcommand("perm-form", "Shuffle product summed over shuffle permutations");
  perm_cmd->add_option("A", o.a)->required();
  perm_cmd->add_option("B", o.b)->required();

  auto* euler_cmd = app.add_subcommand("euler", "Euler's decomposition of zeta(r) zeta(s)");
  euler_cmd->add_option("R", o.r)->required()->check(CLI::Range(2, 1000));
  euler_cmd->add_option("S", o.s)->required()->check(CLI::Range(2, 1000));

  auto* relations_cmd = app.add_subcommand("relations", "Double shuffle relation stream");
  relations_cmd->add_option("--weight", o.weight)->required()->check(CLI::Range(1, 64));
  relations_cmd->add_option("--depth", o.depth)->required()->check(CLI::Range(1, 64));
  relations_cmd->add_flag("--hoffman", o.hoffman, "Emit (1) sh nu - (1) * nu instead");

  auto* verify_cmd = app.add_subcommand("verify", "Check relations numerically with truncated sums");
  verify_cmd->add_option("--terms", o.terms, "Truncation N")->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40))
      ->capture_default_str();
  verify_cmd->add_option("--tol", o.tol, "Tolerance on top of the tail estimates")->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--input", o.input, "Relation file (default stdin)");
  verify_cmd->add_flag("--conditional", o.conditional, "Allow conditionally convergent leading (1; z)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::int64_t order = group_order(o.group);
    const Format f = output_format(o);

    if (*shuffle_cmd) {
      if (o.letters) {
        emit(shuffle(letters_arg(o.a, order), letters_arg(o.b, order)), f);
      } else {
        const IndexedWord mu = word_arg(o.a, order), nu = word_arg(o.b, order);
        if (o.form == "e") emit(shuffle_product_e(mu, nu), f);
        else {
          const IndexedComb x = shuffle_product_b(mu, nu);
          emit(x, f, b_form_notation(x));
        }
      }
    } else if (*stuffle_cmd) {
      emit(quasi_shuffle(word_arg(o.a, order), word_arg(o.b, order)), f);
    } else if (*explicit_cmd) {
      const IndexedWord mu = word_arg(o.a, order), nu = word_arg(o.b, order);
      if (o.form == "e") emit(explicit_product_e(mu, nu), f);
      else {
        const IndexedComb x = explicit_product_b(mu, nu);
        emit(x, f, b_form_notation(x));
      }
    } else if (*perm_cmd) {
      const IndexedComb x = permutation_product_b(word_arg(o.a, order), word_arg(o.b, order));
      emit(x, f, b_form_notation(x));
    } else if (*euler_cmd) {
      emit(euler_relation(o.r, o.s), f);
    } else if (*relations_cmd) {
      const std::int64_t n = order == 0 ? 1 : order;
      const auto rels = o.hoffman ? hoffman_relations(o.weight, o.depth, n) : double_shuffle_relations(o.weight, o.depth, n);
      for (const Relation& rel : rels) emit(rel, f);
    } else if (*verify_cmd) {
      return run_verify(o, order);
    }
  } catch (const ParseError& e) {
    std::cerr << "dshuffle: parse error at " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "dshuffle: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
