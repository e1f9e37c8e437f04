#include "dshuffle/special.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "dshuffle/binomial.hpp"
#include "dshuffle/errors.hpp"
#include "dshuffle/explicit.hpp"
#include "dshuffle/index_pair.hpp"
#include "dshuffle/structure.hpp"

namespace dshuffle {

const char* to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::Product: return "product";
    case RelationKind::DoubleShuffle: return "double-shuffle";
    case RelationKind::Hoffman: return "hoffman";
  }
  return "?";
}

RelationKind relation_kind_from_string(const std::string& name) {
  if (name == "product") return RelationKind::Product;
  if (name == "double-shuffle") return RelationKind::DoubleShuffle;
  if (name == "hoffman") return RelationKind::Hoffman;
  throw DomainError("unknown relation kind '" + name + "'");
}

Relation double_polylog_closed_form(int r1, const GroupElement& w1, int s1, const GroupElement& z1) {
  if (r1 < 1 || s1 < 1) throw DomainError("exponents must be >= 1");
  if ((r1 == 1 && w1.is_identity()) || (s1 == 1 && z1.is_identity()))
    throw DomainError("both factors must be admissible");
  Relation rel;
  rel.kind = RelationKind::Product;
  rel.left = IndexedWord({r1}, {w1});
  rel.right = IndexedWord({s1}, {z1});
  for (int k = 0; k <= s1 - 1; ++k)
    rel.combination.add_term(IndexedWord({r1 + k, s1 - k}, {w1, z1 / w1}), binomial(r1 + k - 1, k));
  for (int k = 0; k <= r1 - 1; ++k)
    rel.combination.add_term(IndexedWord({s1 + k, r1 - k}, {z1, w1 / z1}), binomial(s1 + k - 1, k));
  return rel;
}

Relation euler_relation(int r, int s) {
  if (r < 2 || s < 2) throw DomainError("Euler's decomposition needs r, s >= 2");
  Relation rel = double_polylog_closed_form(r, {}, s, {});
  rel.label = "euler(" + std::to_string(r) + "," + std::to_string(s) + ")";
  return rel;
}

Relation zeta_1x2_closed_form(int r1, int s1, int s2) {
  if (r1 < 2 || s1 < 2 || s2 < 1) throw DomainError("needs r1, s1 >= 2 and s2 >= 1");
  Relation rel;
  rel.left = IndexedWord({r1});
  rel.right = IndexedWord({s1, s2});
  // t1 >= 2, t2 >= 1, t1 + t2 = r1 + s1:  C(t1-1, r1-1) zeta(t1, t2, s2)
  for (int t1 = 2; t1 <= r1 + s1 - 1; ++t1) {
    const int t2 = r1 + s1 - t1;
    rel.combination.add_term(IndexedWord({t1, t2, s2}), binomial(t1 - 1, r1 - 1));
  }
  // t1 >= 2, t2, t3 >= 1, t1 + t2 + t3 = r1 + s1 + s2:
  //   C(t1-1, s1-1) [C(t2-1, s2-t3) + C(t2-1, s2-1)] zeta(t1, t2, t3)
  const int n = r1 + s1 + s2;
  for (int t1 = 2; t1 <= n - 2; ++t1) {
    for (int t2 = 1; t1 + t2 <= n - 1; ++t2) {
      const int t3 = n - t1 - t2;
      Integer c = binomial(t1 - 1, s1 - 1) * (binomial(t2 - 1, s2 - t3) + binomial(t2 - 1, s2 - 1));
      rel.combination.add_term(IndexedWord({t1, t2, t3}), c);
    }
  }
  return rel;
}

Relation zeta_2x2_closed_form(int r1, int r2, int s1, int s2) {
  if (r1 < 2 || s1 < 2 || r2 < 1 || s2 < 1) throw DomainError("needs r1, s1 >= 2 and r2, s2 >= 1");
  Relation rel;
  rel.left = IndexedWord({r1, r2});
  rel.right = IndexedWord({s1, s2});
  // Three-part sums with the fourth slot pinned.
  auto three_part = [&](int total, int first, int second, int pinned) {
    for (int t1 = 2; t1 <= total - 2; ++t1) {
      for (int t2 = 1; t1 + t2 <= total - 1; ++t2) {
        const int t3 = total - t1 - t2;
        Integer c = binomial(t1 - 1, first - 1) * binomial(t2 - 1, second - 1);
        rel.combination.add_term(IndexedWord({t1, t2, t3, pinned}), c);
      }
    }
  };
  three_part(r1 + r2 + s1, r1, r2, s2);
  three_part(r1 + s1 + s2, s1, s2, r2);
  const int n = r1 + r2 + s1 + s2;
  for (int t1 = 2; t1 <= n - 3; ++t1) {
    for (int t2 = 1; t1 + t2 <= n - 2; ++t2) {
      for (int t3 = 1; t1 + t2 + t3 <= n - 1; ++t3) {
        const int t4 = n - t1 - t2 - t3;
        const Integer middle = binomial(t2 - 1, t1 + t2 - r1 - s1);
        Integer c = binomial(t1 - 1, r1 - 1) * middle *
                        (binomial(t3 - 1, s2 - t4) + binomial(t3 - 1, s2 - 1)) +
                    binomial(t1 - 1, s1 - 1) * middle *
                        (binomial(t3 - 1, r2 - t4) + binomial(t3 - 1, r2 - 1));
        rel.combination.add_term(IndexedWord({t1, t2, t3, t4}), c);
      }
    }
  }
  return rel;
}

std::vector<Relation> worked_example_fixtures() {
  std::vector<Relation> out;
  out.push_back(zeta_1x2_closed_form(2, 2, 1));
  out.back().label = "zeta(2)zeta(2,1)";
  out.push_back(zeta_2x2_closed_form(2, 1, 2, 1));
  out.back().label = "zeta(2,1)zeta(2,1)";
  out.push_back(double_polylog_closed_form(2, GroupElement::minus_one(), 2, GroupElement::minus_one()));
  out.back().label = "alt-euler(2,2;-1,-1)";
  return out;
}

std::vector<IndexedWord> admissible_words(int weight, int max_depth, std::int64_t group_order) {
  std::vector<IndexedWord> out;
  if (weight < 1) return out;
  const std::vector<GroupElement> group = roots_of_unity(group_order);
  const std::size_t g = group.size();
  for (int depth = 1; depth <= std::min(weight, max_depth); ++depth) {
    for (const Composition& s : enumerate_compositions(weight, depth)) {
      // Odometer over all mark vectors in group^depth.
      std::vector<std::size_t> digits(static_cast<std::size_t>(depth), 0);
      while (true) {
        std::vector<GroupElement> marks;
        marks.reserve(digits.size());
        for (std::size_t d : digits) marks.push_back(group[d]);
        IndexedWord w(s, std::move(marks));
        if (w.admissible()) out.push_back(std::move(w));
        std::size_t pos = digits.size();
        while (pos > 0 && ++digits[pos - 1] == g) digits[--pos] = 0;
        if (pos == 0) break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Relation> double_shuffle_relations(int weight, int depth, std::int64_t group_order) {
  std::vector<std::pair<IndexedWord, IndexedWord>> pairs;
  for (int w1 = 1; 2 * w1 <= weight; ++w1) {
    const int w2 = weight - w1;
    const auto left = admissible_words(w1, depth - 1, group_order);
    const auto right = admissible_words(w2, depth - 1, group_order);
    for (const auto& mu : left) {
      for (const auto& nu : right) {
        if (static_cast<int>(mu.depth() + nu.depth()) > depth) continue;
        if (w1 == w2 && nu < mu) continue;
        pairs.emplace_back(std::min(mu, nu), std::max(mu, nu));
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<Relation> out;
  for (const auto& [mu, nu] : pairs) {
    Relation rel;
    rel.kind = RelationKind::DoubleShuffle;
    rel.left = mu;
    rel.right = nu;
    rel.combination = explicit_product_e(mu, nu) - quasi_shuffle(mu, nu);
    if (!rel.combination.empty()) out.push_back(std::move(rel));
  }
  return out;
}

Relation hoffman_difference(const IndexedWord& nu) {
  if (!nu.admissible()) throw DomainError("Hoffman difference needs an admissible word");
  Relation rel;
  rel.kind = RelationKind::Hoffman;
  rel.left = IndexedWord({1});
  rel.right = nu;
  rel.combination = explicit_product_e(rel.left, nu) - quasi_shuffle(rel.left, nu);
  return rel;
}

std::vector<Relation> hoffman_relations(int weight, int depth, std::int64_t group_order) {
  std::vector<Relation> out;
  for (const IndexedWord& nu : admissible_words(weight - 1, depth - 1, group_order)) {
    Relation rel = hoffman_difference(nu);
    if (!rel.combination.empty()) out.push_back(std::move(rel));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_evaluable(const IndexedWord& word, const EvaluationOptions& options) {
  if (word.empty()) return;
  if (!word.admissible()) throw DomainError("inadmissible word: the series diverges");
  if (word.exponent(0) == 1 && !options.allow_conditional)
    throw DomainError("leading exponent 1 converges only conditionally; enable conditional mode");
}

}  // namespace

NumericValue polylog_value(const IndexedWord& word, std::int64_t truncation, const EvaluationOptions& options) {
  if (truncation < 1) throw DomainError("truncation must be >= 1");
  check_evaluable(word, options);
  NumericValue out;
  out.truncation = truncation;
  if (word.empty()) {
    out.value = 1.0;
    return out;
  }
  const auto n_max = static_cast<std::size_t>(truncation);
  const std::size_t k = word.depth();

  // inner[n] = sum over n > n_{i+1} > ... > n_k >= 1, i.e. the partial sum of the
  // deeper levels up to n - 1; starts as the constant 1 below the innermost level.
  std::vector<std::complex<double>> inner(n_max + 1, 1.0), outer(n_max + 1);
  for (std::size_t level = k; level-- > 0;) {
    const int s = word.exponent(level);
    const GroupElement& z = word.mark(level);
    std::vector<std::complex<double>> powers(static_cast<std::size_t>(z.den()));
    for (std::size_t r = 0; r < powers.size(); ++r) powers[r] = z.power(static_cast<std::int64_t>(r));
    const bool innermost = level + 1 == k;
    std::complex<double> running = 0.0;
    outer[0] = 0.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double base = std::pow(static_cast<double>(n), -s);
      const std::complex<double> below = innermost ? std::complex<double>(1.0) : inner[n - 1];
      running += powers[n % powers.size()] * base * below;
      outer[n] = running;
    }
    std::swap(inner, outer);
  }
  out.value = inner[n_max];

  const double n = static_cast<double>(truncation);
  const double log_factor = std::pow(std::log(n + 1.0), static_cast<double>(k - 1));
  const int s1 = word.exponent(0);
  out.tail_estimate = s1 >= 2 ? log_factor * std::pow(n, 1.0 - s1) / (s1 - 1) : log_factor / n;
  return out;
}

NumericValue lambda_value(const IndexedWord& word, std::int64_t truncation, const EvaluationOptions& options) {
  return polylog_value(to_e_form(word), truncation, options);
}

const NumericValue& PolylogEvaluator::operator()(const IndexedWord& word) {
  auto it = cache_.find(word);
  if (it == cache_.end()) it = cache_.emplace(word, polylog_value(word, truncation_, options_)).first;
  return it->second;
}

ResidualReport verify_relation_numeric(const Relation& relation, PolylogEvaluator& evaluate, double tol) {
  std::complex<double> sum = 0.0;
  double threshold = tol;
  for (const auto& [word, c] : relation.combination) {
    const NumericValue& v = evaluate(word);
    const double coeff = c.get_d();
    sum += coeff * v.value;
    threshold += std::abs(coeff) * v.tail_estimate;
  }
  if (relation.kind == RelationKind::Product) {
    const NumericValue left = evaluate(relation.left);
    const NumericValue right = evaluate(relation.right);
    sum -= left.value * right.value;
    threshold += std::abs(left.value) * right.tail_estimate + std::abs(right.value) * left.tail_estimate +
                 left.tail_estimate * right.tail_estimate;
  }
  ResidualReport report;
  report.residual = std::abs(sum);
  report.threshold = threshold;
  report.pass = std::isfinite(report.residual) && report.residual <= threshold;
  return report;
}

ResidualReport verify_relation_numeric(const Relation& relation, std::int64_t truncation, double tol,
                                       const EvaluationOptions& options) {
  PolylogEvaluator evaluate(truncation, options);
  return verify_relation_numeric(relation, evaluate, tol);
}

}  // namespace dshuffle
