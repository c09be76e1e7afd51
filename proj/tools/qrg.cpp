// qrg: command-line front end.
//
// Exit codes: 0 success / all assertions pass, 1 an assertion failed,
// 2 usage, parse or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qrg/cli/analyze.hpp"
#include "qrg/cli/groupspec.hpp"
#include "qrg/cli/suites.hpp"
#include "qrg/qrg.hpp"

namespace {

using qrg::cli::Json;

enum class Format { Text, Json, Tsv };

struct Common {
  bool json = false;
  bool tsv = false;
  std::optional<std::size_t> cap_order;
  std::optional<std::size_t> cap_width;

  Format format() const { return json ? Format::Json : tsv ? Format::Tsv : Format::Text; }

  qrg::Caps caps() const {
    qrg::Caps c = qrg::kDefaultCaps;
    if (const char* env = std::getenv("QRG_CAP_ORDER")) c.order = std::stoull(env);
    if (cap_order) c.order = *cap_order;
    if (cap_width) c.width = *cap_width;
    return c;
  }
};

void add_common(CLI::App* cmd, Common& c) {
  auto* j = cmd->add_flag("--json", c.json, "JSON output");
  cmd->add_flag("--tsv", c.tsv, "tab-separated output")->excludes(j);
  cmd->add_option("--cap-order", c.cap_order, "enumeration cap (overrides QRG_CAP_ORDER)");
  cmd->add_option("--cap-width", c.cap_width, "commutator-width cap");
}

void emit(const Json& j, Format f) {
  if (f == Format::Json)
    std::cout << j.dump() << '\n';
  else
    std::cout << qrg::cli::to_tsv(j);
}

std::size_t parse_m(const std::string& s) {
  if (s == "inf") return qrg::kAllPowers;
  std::size_t used = 0;
  auto v = std::stoull(s, &used);
  if (used != s.size() || v == 0) throw qrg::ParseError(used, "positive integer or 'inf'", "bad --m");
  return v;
}

Json covering_json(const qrg::GroupTable& g, const qrg::CoveringReport& r) {
  Json j;
  j["element"] = g.describe(r.element);
  j["class"] = g.class_of(r.element);
  j["symmetric"] = r.symmetric;
  j["K"] = r.K ? Json(*r.K) : Json(nullptr);
  if (!r.reason.empty()) j["reason"] = r.reason;
  Json t = Json::array();
  for (auto [k, n] : r.growth_trace) t.push_back({k, n});
  j["growth_trace"] = t;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasirandom groups toolkit"};
  app.require_subcommand(1);
  Common common;

  auto* analyze = app.add_subcommand("analyze", "order, classes, cosocle, perfectness, D(G)");
  std::string spec;
  analyze->add_option("spec", spec, "group spec")->required();
  add_common(analyze, common);

  auto* covering = app.add_subcommand("covering", "covering number and covering property");
  std::string element, m_text = "1";
  bool symmetric = false, mod_cosocle = false, coprime = false;
  std::optional<unsigned> K;
  covering->add_option("spec", spec, "group spec")->required();
  covering->add_option("--element", element, "#idx, class:k, cycles or matrix literal")->required();
  covering->add_flag("--symmetric", symmetric, "use C(x) u C(x^-1)");
  covering->add_option("--K", K, "check the covering property with this K");
  covering->add_option("--m", m_text, "powers 1..m, or inf");
  covering->add_flag("--coprime-powers", coprime, "only powers coprime to the element order");
  covering->add_flag("--mod-cosocle", mod_cosocle, "work in G modulo its cosocle");
  add_common(covering, common);

  auto* degree = app.add_subcommand("degree", "irreducible degrees and D(G)");
  degree->add_option("spec", spec, "group spec")->required();
  add_common(degree, common);

  auto* jordan = app.add_subcommand("jordan", "Jordan length of a matrix or group element");
  std::string target;
  jordan->add_option("target", target, "matrix literal, or group spec with --element")->required();
  jordan->add_option("--element", element, "element of the matrix group");
  add_common(jordan, common);

  auto* construct = app.add_subcommand("construct", "explicit witnesses");
  construct->require_subcommand(1);
  auto* sigma = construct->add_subcommand("sigma", "a p-cycles and b q-cycles on n points");
  std::uint32_t n = 0, p = 0, q = 0;
  std::optional<std::uint32_t> field;
  sigma->add_option("--n", n)->required();
  sigma->add_option("--p", p)->required();
  sigma->add_option("--q", q)->required();
  sigma->add_option("--field", field, "also report the Jordan length over GF(field)");
  add_common(sigma, common);
  auto* embed = construct->add_subcommand("embed", "P + P (+ I_pad) over GF(field)");
  std::string perm;
  std::uint32_t pad = 0, embed_field = 0;
  embed->add_option("--perm", perm, "\"(1 2 3);degree=n\"")->required();
  embed->add_option("--pad", pad)->check(CLI::Range(0, 2));
  embed->add_option("--field", embed_field)->required();
  add_common(embed, common);

  auto* mixing = app.add_subcommand("mixing", "seeded random-set mixing trials");
  double alpha = 0.5, eps1 = 0.1, eps2 = 0.1;
  std::uint64_t trials = 100, seed = 0;
  mixing->add_option("spec", spec, "group spec")->required();
  mixing->add_option("--alpha", alpha);
  mixing->add_option("--eps1", eps1);
  mixing->add_option("--eps2", eps2);
  mixing->add_option("--trials", trials);
  mixing->add_option("--seed", seed)->required();
  add_common(mixing, common);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  qrg::cli::SuiteOptions so;
  verify->add_option("suite", suite, "brenner|bcc|packing|mustexp|axioms|mixing|jordan|preservation")
      ->required();
  verify->add_option("--seed", so.seed);
  verify->add_option("--samples", so.samples);
  verify->add_option("--D", so.D);
  verify->add_option("--eps", so.eps);
  verify->add_option("--trials", so.trials);
  add_common(verify, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto fmt = common.format();
  try {
    const auto caps = common.caps();
    if (*analyze) {
      auto r = qrg::cli::analyze(qrg::cli::parse_spec(spec), caps);
      emit(qrg::cli::to_json(r), fmt);
      return 0;
    }
    if (*covering) {
      auto g = qrg::cli::build(spec, caps);
      const auto x = qrg::cli::parse_element(*g, element);
      const auto m = parse_m(m_text);
      Json j;
      j["schema"] = qrg::cli::kSchema;
      j["spec"] = qrg::cli::render(qrg::cli::parse_spec(spec));
      j["order"] = g->order();
      auto work = g;
      auto wx = x;
      if (mod_cosocle) {
        auto cos = qrg::cosocle(*g, caps);
        work = qrg::quotient(*g, cos, caps);
        wx = work->projection()[x];
        j["cosocle_order"] = cos.order;
        j["cosocle_classes"] = cos.num_classes();
      }
      j["covering"] = covering_json(*work, qrg::covering_number(*work, wx, symmetric));
      if (K) {
        j["K"] = *K;
        j["m"] = m == qrg::kAllPowers ? Json("inf") : Json(m);
        j["property_holds"] = qrg::covering_property(
            *work, wx, *K, m, symmetric,
            coprime ? qrg::PowerSelection::CoprimeToOrder : qrg::PowerSelection::All);
      }
      emit(j, fmt);
      return 0;
    }
    if (*degree) {
      auto g = qrg::cli::build(spec, caps);
      auto cd = qrg::character_degrees(*g, caps);
      Json j;
      j["schema"] = qrg::cli::kSchema;
      j["spec"] = qrg::cli::render(qrg::cli::parse_spec(spec));
      j["order"] = g->order();
      j["degrees"] = cd.degrees;
      j["D"] = qrg::cli::degree_json(qrg::quasirandom_degree(cd));
      j["sum_of_squares"] = cd.sum_of_squares();
      j["prime"] = cd.prime;
      j["bound_holds"] = qrg::element_count_bound_check(g->order(), qrg::quasirandom_degree(cd));
      if (!g->is_trivial()) j["min_normal_index"] = qrg::min_normal_index(*g, caps);
      emit(j, fmt);
      return 0;
    }
    if (*jordan) {
      Json j;
      j["schema"] = qrg::cli::kSchema;
      if (target.rfind("mat:", 0) == 0) {
        auto mtx = qrg::parse_matrix(target);
        j["matrix"] = qrg::to_string(mtx);
        j["jordan_length"] = qrg::jordan_length(mtx).to_string();
      } else {
        if (element.empty()) throw qrg::Error(qrg::ErrorKind::InvalidArgument, "--element is required with a group spec");
        auto g = qrg::cli::build(target, caps);
        const auto x = qrg::cli::parse_element(*g, element);
        const auto* mtx = g->element_as<qrg::FFMatrix>(x);
        if (!mtx) throw qrg::Error(qrg::ErrorKind::InvalidArgument, "Jordan length needs a matrix group");
        const auto len = qrg::jordan_length(*mtx);
        auto cov = qrg::covering_number(*g, x, false);
        j["element"] = g->describe(x);
        j["jordan_length"] = len.to_string();
        j["covering_number"] = cov.K ? Json(*cov.K) : Json(nullptr);
        if (cov.K) j["ratio"] = *cov.K * len.to_double();
      }
      emit(j, fmt);
      return 0;
    }
    if (*sigma) {
      Json j;
      j["schema"] = qrg::cli::kSchema;
      auto split = qrg::solve_two_prime(n, p, q);
      if (!split) throw qrg::Error(qrg::ErrorKind::Infeasible, "no split n = ap + bq with max(a, b) >= 2");
      auto s = qrg::brenner_sigma(n, p, q);
      auto ct = qrg::cycle_type(s);
      j["a"] = split->a;
      j["b"] = split->b;
      j["sigma"] = qrg::to_string(s);
      j["cycle_type"] = ct.lengths;
      j["even"] = ct.parity == qrg::Parity::Even;
      j["fixed_point_free"] = qrg::is_fixed_point_free(s);
      j["exceptional"] = qrg::is_exceptional(ct);
      if (field) {
        auto r = qrg::jordan_of_sigma(n, p, q, qrg::PrimeField(*field));
        j["jordan_length"] = r.value.to_string();
        j["cycle_bound"] = r.bound.to_string();
        j["bound_holds"] = r.bound_holds();
      }
      emit(j, fmt);
      return 0;
    }
    if (*embed) {
      const qrg::PrimeField f(embed_field);
      auto pm = qrg::parse_permutation(perm);
      auto mtx = qrg::double_embed(pm, pad, f);
      Json j;
      j["schema"] = qrg::cli::kSchema;
      j["matrix"] = qrg::to_string(mtx);
      j["determinant"] = mtx.determinant();
      if (pad == 0) j["preserves_symplectic_form"] = qrg::preserves_form(mtx, qrg::symplectic_form(f, mtx.n()));
      emit(j, fmt);
      return 0;
    }
    if (*mixing) {
      auto g = qrg::cli::build(spec, caps);
      auto t = qrg::mixing_trials(*g, alpha, eps1, eps2, trials, seed);
      Json j;
      j["schema"] = qrg::cli::kSchema;
      j["spec"] = qrg::cli::render(qrg::cli::parse_spec(spec));
      j["order"] = g->order();
      j["alpha"] = alpha;
      j["eps1"] = eps1;
      j["eps2"] = eps2;
      j["seed"] = seed;
      j["trials"] = t.trials;
      j["passes"] = t.passes;
      j["rate"] = t.rate();
      if (!t.reports.empty()) {
        j["threshold_pairs"] = t.reports.front().threshold_pairs;
        j["required_good"] = t.reports.front().required_good;
      }
      emit(j, fmt);
      return 0;
    }
    if (*verify) {
      so.caps = caps;
      auto results = qrg::cli::run_suite(suite, so);
      for (const auto& a : results) {
        if (fmt == Format::Tsv)
          std::cout << (a.passed ? "PASS" : "FAIL") << '\t' << a.suite << '\t' << a.name << '\n';
        else
          std::cout << qrg::cli::to_json(a).dump() << '\n';
      }
      return qrg::cli::all_passed(results) ? 0 : 1;
    }
  } catch (const qrg::ParseError& e) {
    std::cerr << "qrg: " << e.what() << '\n';
    return 2;
  } catch (const qrg::Error& e) {
    std::cerr << "qrg: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "qrg: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
