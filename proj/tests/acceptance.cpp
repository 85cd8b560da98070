// One line per acceptance criterion: the suite must pass, carry every
// listed check with enough samples, and finish inside its time budget.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "infinilie/suites.hpp"

using namespace infinilie;

namespace {

struct Need {
  std::string id;  // suffix after "<suite>/"; a leading "*/" sums the matches across groups
  int samples;
};

struct Criterion {
  std::string label;
  std::string suite;
  double limit;  // seconds
  std::vector<Need> needs;
};

std::vector<Criterion> criteria() {
  std::vector<Need> field;
  for (const char* id : {"add-assoc", "add-comm", "mul-assoc", "mul-comm", "distributive", "additive-inverse",
                         "multiplicative-inverse", "order-antisymmetry", "order-transitive", "order-add", "order-mul",
                         "squares-nonnegative"})
    field.push_back({id, 1000});
  field.push_back({"epsilon-below-rationals", 20});

  std::vector<Need> relations{{"triple/standard-so3", 1}, {"triple/standard-su2", 1}};
  std::vector<Need> lemma;
  const std::vector<std::pair<std::string, int>> roots{{"so3", 2}, {"so5", 8}, {"su2", 2}, {"su3", 6}};
  const std::vector<std::pair<std::string, int>> rank{{"so3", 1}, {"so5", 2}, {"su2", 1}, {"su3", 2}};
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const auto& [g, n] = roots[k];
    relations.push_back({"triple/" + g, n});
    relations.push_back({"cartan-action/" + g, n * rank[k].second});
    if (g == "su2") continue;
    for (const char* c : {"derived-equals-s", "centralizer-is-ker-alpha", "double-centralizer", "negativity"})
      lemma.push_back({g + "/" + c, n});
  }

  return {
      {"field/order axioms, epsilon below rationals", "field-axioms", 5, field},
      {"standard part is a ring homomorphism on O", "standard-part", 2,
       {{"st-add", 500}, {"st-mul", 500}, {"st-one", 1}, {"outside-O-error", 1}}},
      {"so3-relations: bracket residuals zero", "so3-relations", 5, relations},
      {"lemma-so3: span equalities and negativity", "lemma-so3", 10, lemma},
      {"rho-equivariance", "rho-equivariance", 5, {{"conjugation", 200}}},
      {"spin-cover", "spin-cover", 5, {{"homomorphism", 200}, {"kernel", 100}, {"adjoint", 100}}},
      {"quaternion-facts", "quaternion-facts", 5,
       {{"scalar-part-inequality", 500}, {"equality-iff-equal", 500}, {"conjugation-invariance", 500}}},
      {"commutator-width", "commutator-width", 30, {{"residual", 50}, {"factors-in-G00", 50}}},
      {"chart-roundtrip", "chart-roundtrip", 30,
       {{"SO(3)/certificate", 1},
        {"SU(2)/certificate", 1},
        {"*/solve-after-phi", 50},
        {"*/phi-after-solve", 50},
        {"*/phi-first-coordinate", 20}}},
      {"star-pullback", "star-pullback", 20, {{"identity", 25}, {"inverse", 25}, {"associativity", 25}}},
      {"cayley-psi", "cayley-psi", 10,
       {{"SO(3)/m-entries-into-G00", 200},
        {"SO(3)/G00-into-m-entries", 200},
        {"SO(3)/predicate-equivalence", 200},
        {"SU(2)/m-entries-into-G00", 200},
        {"SU(2)/G00-into-m-entries", 200},
        {"SU(2)/predicate-equivalence", 200}}},
      {"adjoint-embedding", "adjoint-embedding", 10,
       {{"SO(5)/homomorphism", 100}, {"SO(5)/distinct-images", 100}, {"SO(5)/torsion-free", 100}}},
      {"product-law", "product-law", 5, {{"SO(3)xSU(2)", 200}}},
      {"symmetric-interval probe", "symmetric-interval", 20,
       {{"g-squared-bound", 500}, {"quaternion-bound", 500}, {"inversion-symmetric", 1}, {"contains-identity", 1}}},
  };
}

bool matches(const std::string& full, const std::string& suite, const std::string& need) {
  const std::string prefix = suite + "/";
  if (full.rfind(prefix, 0) != 0) return false;
  const std::string rest = full.substr(prefix.size());
  if (need.rfind("*/", 0) == 0) {
    const std::string tail = need.substr(1);
    return rest.size() >= tail.size() && rest.compare(rest.size() - tail.size(), tail.size(), tail) == 0;
  }
  return rest == need;
}

}  // namespace

int main() {
  const SuiteConfig cfg;
  int failed = 0;
  for (const Criterion& c : criteria()) {
    std::string why;
    double secs = 0;
    try {
      const auto t0 = std::chrono::steady_clock::now();
      const Report r = run_suite(c.suite, cfg);
      secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (!r.passed()) why = std::to_string(r.count(Status::Fail)) + " failing checks";
      for (const Need& n : c.needs) {
        int samples = 0, hits = 0;
        bool clean = true;
        for (const Check& ch : r.checks)
          if (matches(ch.id, c.suite, n.id)) {
            ++hits;
            samples += ch.samples;
            clean = clean && ch.status == Status::Pass;
          }
        if (why.empty() && hits == 0) why = "missing check " + n.id;
        if (why.empty() && !clean) why = n.id + " not passing";
        if (why.empty() && samples < n.samples)
          why = n.id + " has " + std::to_string(samples) + " samples, needs " + std::to_string(n.samples);
      }
      if (why.empty() && secs >= c.limit) why = "over time budget";
    } catch (const std::exception& e) {
      why = std::string("threw: ") + e.what();
    }
    const bool ok = why.empty();
    failed += ok ? 0 : 1;
    std::printf("%s  %-46s %7.2f s (limit %4.0f s)%s%s\n", ok ? "PASS" : "FAIL", c.label.c_str(), secs, c.limit,
                ok ? "" : "  ", why.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria met\n", static_cast<int>(criteria().size()) - failed, criteria().size());
  return failed == 0 ? 0 : 1;
}
