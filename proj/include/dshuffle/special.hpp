#ifndef DSHUFFLE_SPECIAL_HPP
#define DSHUFFLE_SPECIAL_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dshuffle/recursive.hpp"

namespace dshuffle {

/// What a relation's combination is equal to.
enum class RelationKind {
  /// combination = Li(left) * Li(right): a product expanded by one of the products.
  Product,
  /// combination = 0, the shuffle expansion of Li(left) Li(right) minus the stuffle one.
  DoubleShuffle,
  /// combination = 0, with left = (1): the formal difference (1) sh nu - (1) * nu.
  Hoffman,
};

const char* to_string(RelationKind kind);
/// Inverse of to_string; throws DomainError on unknown names.
RelationKind relation_kind_from_string(const std::string& name);

/// A linear relation among polylogarithm values. All words are in e-form, i.e.
/// a word (s; z) stands for Li_s(z).
struct Relation {
  RelationKind kind = RelationKind::Product;
  IndexedWord left;
  IndexedWord right;
  IndexedComb combination;
  /// Free-form name, used for the worked-example fixtures.
  std::string label;

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// zeta(r) zeta(s) = sum_k C(r+k-1, k) zeta(r+k, s-k) + sum_k C(s+k-1, k) zeta(s+k, r-k),
/// built from the binomial sums directly. Requires r, s >= 2.
Relation euler_relation(int r, int s);

/// All admissible e-form words of the given weight with depth <= max_depth and
/// marks in the n-th roots of unity, in word order.
std::vector<IndexedWord> admissible_words(int weight, int max_depth, std::int64_t group_order);

/// For each unordered pair {mu, nu} of admissible words with
/// |mu| + |nu| = weight and depth(mu) + depth(nu) <= depth, the difference
/// explicit_product_e(mu, nu) - quasi_shuffle(mu, nu). Pairs whose expansions
/// coincide are skipped. Ordered by (mu, nu) with mu <= nu.
std::vector<Relation> double_shuffle_relations(int weight, int depth, std::int64_t group_order = 1);

/// explicit_product_e((1), nu) - quasi_shuffle((1), nu). nu must be admissible.
Relation hoffman_difference(const IndexedWord& nu);

/// Hoffman differences for every admissible nu of weight `weight - 1` and depth
/// below `depth`, in word order.
std::vector<Relation> hoffman_relations(int weight, int depth, std::int64_t group_order = 1);

/// The worked two-variable examples in closed form: the depth (1,1) double
/// polylogarithm identity, the (1,2) and (2,2) zeta identities. Each is the
/// product expansion written out by hand, not via the general formula.
Relation double_polylog_closed_form(int r1, const GroupElement& w1, int s1, const GroupElement& z1);
Relation zeta_1x2_closed_form(int r1, int s1, int s2);
Relation zeta_2x2_closed_form(int r1, int r2, int s1, int s2);

/// The closed forms instantiated at small indices:
///   "zeta(2)zeta(2,1)", "zeta(2,1)zeta(2,1)", "alt-euler(2,2;-1,-1)".
std::vector<Relation> worked_example_fixtures();

// ---------------------------------------------------------------------------
// Numerics

struct NumericValue {
  std::complex<double> value;
  std::int64_t truncation = 0;
  double tail_estimate = 0.0;
};

struct EvaluationOptions {
  /// Allow a leading (1; z) with z != 1 (conditionally convergent); its
  /// tail estimate is a heuristic, not a bound.
  bool allow_conditional = false;
};

/// sum_{N >= n1 > ... > nk >= 1} prod z_i^{n_i} / n_i^{s_i} for an e-form word,
/// in O(N * depth) by carrying the inner partial sums outward. The empty word
/// evaluates to exactly 1.
///
/// Requires an admissible word with leading exponent >= 2 unless
/// allow_conditional is set and the leading mark is not 1.
NumericValue polylog_value(const IndexedWord& word, std::int64_t truncation,
                           const EvaluationOptions& options = {});

/// The same sum for a b-form word, i.e. polylog_value(to_e_form(word)).
NumericValue lambda_value(const IndexedWord& word, std::int64_t truncation,
                          const EvaluationOptions& options = {});

/// Memoizing evaluator for many words at one truncation.
class PolylogEvaluator {
 public:
  explicit PolylogEvaluator(std::int64_t truncation, EvaluationOptions options = {})
      : truncation_(truncation), options_(options) {}

  const NumericValue& operator()(const IndexedWord& word);
  std::int64_t truncation() const noexcept { return truncation_; }

 private:
  std::int64_t truncation_;
  EvaluationOptions options_;
  std::map<IndexedWord, NumericValue> cache_;
};

struct ResidualReport {
  /// |sum c_w Li(w) - target|, target = Li(left) Li(right) for products and 0 otherwise.
  double residual = 0.0;
  /// tol plus the propagated tail estimates.
  double threshold = 0.0;
  bool pass = false;
};

ResidualReport verify_relation_numeric(const Relation& relation, PolylogEvaluator& evaluate, double tol);
ResidualReport verify_relation_numeric(const Relation& relation, std::int64_t truncation, double tol,
                                       const EvaluationOptions& options = {});

}  // namespace dshuffle

#endif  // DSHUFFLE_SPECIAL_HPP
