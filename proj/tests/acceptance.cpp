// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "checks.hpp"

using namespace dshuffle;

namespace {

int failed = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s  %d  %-28s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

std::string counts(const checks::Tally& t) {
  std::string s = std::to_string(t.cases) + " cases, " + std::to_string(t.failures) + " mismatches";
  if (!t.ok()) s += " (first: " + t.first + ")";
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string timing(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, " [%.2fs]", s);
  return buf;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  constexpr std::int64_t N = 100000;
  constexpr double tol = 1e-3;

  auto t0 = clock::now();
  const checks::OracleTallies b = checks::oracle_b(8, 3);
  const double tb = seconds_since(t0);
  report(1, "explicit b-form vs oracle", b.equal.ok() && tb < 60.0, counts(b.equal) + timing(tb));

  t0 = clock::now();
  const checks::OracleTallies e = checks::oracle_e(8, 3, 500);
  report(2, "explicit e-form vs oracle", e.equal.ok(), counts(e.equal) + timing(seconds_since(t0)));

  t0 = clock::now();
  const checks::Tally eu = checks::euler(2, 6);
  report(3, "Euler decomposition", eu.ok(), counts(eu) + timing(seconds_since(t0)));

  t0 = clock::now();
  const checks::Tally fx = checks::fixtures();
  report(4, "worked fixtures", fx.ok(), counts(fx) + timing(seconds_since(t0)));

  t0 = clock::now();
  const checks::Tally pf = checks::permutation_form(5, 10);
  report(5, "permutation coefficients", pf.ok(), counts(pf) + timing(seconds_since(t0)));

  t0 = clock::now();
  checks::Tally identities;
  identities.merge(checks::identity_nonzero(6));
  identities.merge(checks::identity_vanishing(6));
  identities.merge(checks::identity_bijection(6));
  identities.merge(checks::identity_factor_recursions(6));
  identities.merge(checks::identity_coefficient_recursions(6));
  identities.merge(checks::identity_marks(6, 3));
  for (std::int64_t n : {1, 2, 3}) identities.merge(checks::rota_baxter(6, n));
  report(6, "coefficient identities", identities.ok(), counts(identities) + timing(seconds_since(t0)));

  checks::Tally mass = b.mass;
  mass.merge(e.mass);
  report(7, "mass identity", mass.ok(), counts(mass));

  {
    const IndexedWord two({2}), three({3});
    struct Case {
      const char* name;
      Relation rel;
    };
    const Case cases[] = {
        {"stuffle (2)*(3)", checks::stuffle_relation(two, three)},
        {"euler(2,3)", euler_relation(2, 3)},
        {"4(3,1) - (4)", double_shuffle_relations(4, 2).at(0)},
    };
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
      t0 = clock::now();
      const ResidualReport r = verify_relation_numeric(c.rel, N, tol);
      const double s = seconds_since(t0);
      ok = ok && r.pass && r.residual < tol && s < 10.0;
      detail += std::string(detail.empty() ? "" : "; ") + c.name + " residual " + sci(r.residual) + " threshold " +
                sci(r.threshold) + timing(s);
    }
    IndexedComb want(IndexedWord({3, 1}), 4);
    want.add_term(IndexedWord({4}), -1);
    ok = ok && cases[2].rel.combination == want;
    report(8, "numeric residuals", ok, detail);
  }

  t0 = clock::now();
  const checks::NumericTally h = checks::hoffman(6, N, tol);
  report(9, "Hoffman differences", h.verified.ok(),
         counts(h.verified) + "; raw residual < 1e-3 in " + std::to_string(h.raw_within) + " of " +
             std::to_string(h.relations) + ", max " + sci(h.max_residual) + " at " + h.worst +
             timing(seconds_since(t0)));

  std::printf("%s: %d of 9 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
