// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qrg/cli/groupspec.hpp"
#include "qrg/cli/suites.hpp"
#include "qrg/qrg.hpp"

namespace {

using qrg::Index;
using qrg::Permutation;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome suite_outcome(std::initializer_list<const char*> names) {
  Outcome o{true, ""};
  std::size_t total = 0, failed = 0;
  for (const char* name : names) {
    for (const auto& a : qrg::cli::run_suite(name)) {
      ++total;
      if (!a.passed) {
        ++failed;
        o.passed = false;
        o.detail += " [failed: " + a.suite + " / " + a.name + "]";
      }
    }
  }
  o.detail = std::to_string(total - failed) + "/" + std::to_string(total) + " assertions" + o.detail;
  return o;
}

// 1. Covering number <= 4 and the 4-fold class product is the whole group.
Outcome brenner_covering() {
  const auto t0 = std::chrono::steady_clock::now();
  auto o = suite_outcome({"brenner"});
  const double t = seconds_since(t0);
  if (t >= 60) o.passed = false;
  o.detail += ", " + std::to_string(t) + " s (limit 60)";
  return o;
}

// 2. Hypotheses for the two-prime permutations, plus (4, 4) in A6.
Outcome two_prime_instances() {
  Outcome o{true, ""};
  for (std::uint32_t n : {17u, 31u}) {
    auto s = qrg::brenner_sigma(n, 5, 7);
    const bool ok = qrg::parity(s) == qrg::Parity::Even && qrg::is_fixed_point_free(s) &&
                    !qrg::is_exceptional(s);
    o.passed = o.passed && ok;
    o.detail += "sigma(" + std::to_string(n) + ",5,7)=" + qrg::to_cycle_string(s) +
                (ok ? " hypotheses hold; " : " hypotheses FAIL; ");
  }
  auto a6 = qrg::cli::build("A6");
  const auto x = *a6->find(Permutation::from_cycles(6, {{0, 1, 2}, {3, 4, 5}}));
  const bool prop = qrg::covering_property(*a6, x, 4, 4, false, qrg::PowerSelection::CoprimeToOrder);
  o.passed = o.passed && prop;
  o.detail += std::string("A6 (1 2 3)(4 5 6) K=4 m=4 coprime powers: ") + (prop ? "holds" : "fails");
  return o;
}

// 3. D values and the sum-of-squares identity.
Outcome quasirandom_degrees() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o{true, ""};
  auto expect = [&](const char* spec, std::uint64_t d) {
    auto got = qrg::quasirandom_degree(*qrg::cli::build(spec));
    if (got != d) {
      o.passed = false;
      o.detail += std::string(spec) + " D=" + std::to_string(got) + " expected " + std::to_string(d) + "; ";
    }
  };
  expect("A6", 5);
  expect("A7", 6);
  for (std::uint64_t p : {5, 7, 11, 13}) expect(("SL2:" + std::to_string(p)).c_str(), (p - 1) / 2);
  std::size_t checked = 0;
  for (const char* spec : {"C1", "C6", "D4", "D5", "S3", "S4", "S5", "S6", "A4", "A5", "A6", "A7",
                           "SL2:3", "SL2:5", "SL2:7", "SL2:11", "SL2:13", "PSL2:7", "PSL2:11",
                           "Sp4:2", "prod(A5,SL2:5)", "prod(S3,C2)"}) {
    auto g = qrg::cli::build(spec);
    auto cd = qrg::character_degrees(*g);
    ++checked;
    if (cd.sum_of_squares() != g->order() || cd.degrees.size() != g->num_classes()) {
      o.passed = false;
      o.detail += std::string(spec) + " sum of squares mismatch; ";
    }
  }
  const double t = seconds_since(t0);
  if (t >= 30) o.passed = false;
  o.detail += "D(A6)=5 D(A7)=6 D(SL2:p)=(p-1)/2 checked, sum of squares on " +
              std::to_string(checked) + " groups, " + std::to_string(t) + " s (limit 30)";
  return o;
}

// 4. Exact cosocle sets.
Outcome cosocles() {
  Outcome o{true, ""};
  auto members = [](const qrg::GroupTable& g, const qrg::NormalSubgroup& n) {
    std::set<Index> s;
    for (Index x = 0; x < g.order(); ++x)
      if (n.contains(x)) s.insert(x);
    return s;
  };
  for (std::uint32_t n = 3; n <= 6; ++n) {
    auto g = qrg::cli::build("S" + std::to_string(n));
    std::set<Index> even;
    for (Index x = 0; x < g->order(); ++x)
      if (qrg::parity(*g->element_as<Permutation>(x)) == qrg::Parity::Even) even.insert(x);
    const bool ok = members(*g, qrg::cosocle(*g)) == even;
    o.passed = o.passed && ok;
    o.detail += "S" + std::to_string(n) + (ok ? " = A_n; " : " MISMATCH; ");
  }
  for (std::uint32_t p : {5u, 7u}) {
    auto g = qrg::cli::build("SL2:" + std::to_string(p));
    const qrg::PrimeField f(p);
    std::set<Index> pm{*g->find(qrg::FFMatrix::identity(f, 2)),
                       *g->find(qrg::FFMatrix::identity(f, 2).scaled(p - 1))};
    const bool ok = members(*g, qrg::cosocle(*g)) == pm;
    o.passed = o.passed && ok;
    o.detail += "SL2:" + std::to_string(p) + (ok ? " = {I,-I}; " : " MISMATCH; ");
  }
  auto prod = qrg::cli::build("prod(A5,A6)");
  const bool ok = qrg::cosocle(*prod).order == 1;
  o.passed = o.passed && ok;
  o.detail += std::string("A5xA6 ") + (ok ? "trivial" : "NOT trivial");
  return o;
}

Outcome readme_substitution() {
  std::ifstream in(QRG_README_PATH);
  if (!in) return {false, "README.md not found"};
  std::stringstream ss;
  ss << in.rdbuf();
  const auto text = ss.str();
  const bool ok = text.find("ultraproduct") != std::string::npos &&
                  text.find("not reproducible") != std::string::npos;
  return {ok, ok ? "README documents the finite substitution"
                 : "README lacks the ultraproduct substitution note"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"brenner covering", brenner_covering},
      {"two-prime instances", two_prime_instances},
      {"quasirandom degrees", quasirandom_degrees},
      {"cosocles", cosocles},
      {"inflation", [] { return suite_outcome({"bcc"}); }},
      {"preservation", [] { return suite_outcome({"preservation"}); }},
      {"jordan length", [] { return suite_outcome({"jordan"}); }},
      {"unitary geometry", [] { return suite_outcome({"axioms", "mustexp", "packing"}); }},
      {"gowers mixing", [] { return suite_outcome({"mixing"}); }},
      {"finite substitution", readme_substitution},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
