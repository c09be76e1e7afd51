#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "qrg/cli/analyze.hpp"
#include "qrg/cli/groupspec.hpp"
#include "qrg/cli/suites.hpp"

using qrg::ErrorKind;
using qrg::cli::GroupSpec;
using qrg::cli::Json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(QRG_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t parse_error_offset(const char* text) {
  try {
    qrg::cli::parse_spec(text);
  } catch (const qrg::ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST(GroupSpec, ParsesFamilies) {
  auto a5 = qrg::cli::parse_spec("A5");
  EXPECT_EQ(a5.kind, GroupSpec::Kind::Alternating);
  EXPECT_EQ(a5.n, 5u);
  auto sl = qrg::cli::parse_spec("SL3:2");
  EXPECT_EQ(sl.kind, GroupSpec::Kind::SL);
  EXPECT_EQ(sl.n, 3u);
  EXPECT_EQ(sl.p, 2u);
  auto prod = qrg::cli::parse_spec("prod(A5, SL2:5)");
  EXPECT_EQ(prod.kind, GroupSpec::Kind::Product);
  ASSERT_EQ(prod.children.size(), 2u);
  EXPECT_EQ(prod.children[1].kind, GroupSpec::Kind::SL);
  auto perm = qrg::cli::parse_spec("perm:(1 2 3);degree=4;gens=(1 2),(3 4)");
  EXPECT_EQ(perm.kind, GroupSpec::Kind::Perm);
  EXPECT_EQ(perm.gens.size(), 3u);
  EXPECT_EQ(qrg::cli::build(perm)->order(), 24u);
}

TEST(GroupSpec, ErrorsPointAtTheOffendingCharacter) {
  EXPECT_EQ(parse_error_offset("SL2:6"), 4u);
  EXPECT_EQ(parse_error_offset("X5"), 0u);
  EXPECT_EQ(parse_error_offset("Sp3:5"), 2u);
  EXPECT_EQ(parse_error_offset("prod(A5,S3"), 10u);
  EXPECT_EQ(parse_error_offset("A"), 1u);
  EXPECT_EQ(parse_error_offset("A5 junk"), 3u);
  EXPECT_EQ(parse_error_offset("perm:(1 5);degree=4"), 5u);
}

TEST(GroupSpec, RenderRoundTrip) {
  for (const char* text : {"A5", "S4", "C1", "D6", "SL2:7", "SL3:2", "PSL2:11", "Sp4:3",
                           "perm:(1 2 3);degree=5", "perm:(1 2);degree=3;gens=(1 2 3),(2 3)",
                           "prod(A5,prod(C2,SL2:3))"}) {
    auto s = qrg::cli::parse_spec(text);
    EXPECT_EQ(qrg::cli::render(s), text);
    EXPECT_EQ(qrg::cli::parse_spec(qrg::cli::render(s)), s);
  }
}

TEST(GroupSpec, Orders) {
  EXPECT_EQ(qrg::cli::build("D5")->order(), 10u);
  EXPECT_EQ(qrg::cli::build("D1")->order(), 2u);
  EXPECT_EQ(qrg::cli::build("D2")->order(), 4u);
  EXPECT_EQ(qrg::cli::build("PSL2:7")->order(), 168u);
  EXPECT_EQ(qrg::cli::build("Sp4:2")->order(), 720u);
  EXPECT_EQ(qrg::cli::build("prod(A5,C3)")->order(), 180u);
}

TEST(ParseElement, AllForms) {
  auto g = qrg::cli::build("A5");
  auto x = qrg::cli::parse_element(*g, "(1 2 3)");
  EXPECT_EQ(*g->element_as<qrg::Permutation>(x), qrg::Permutation::from_cycles(5, {{0, 1, 2}}));
  EXPECT_EQ(qrg::cli::parse_element(*g, "#7"), 7u);
  EXPECT_EQ(g->class_of(qrg::cli::parse_element(*g, "class:2")), 2u);
  auto sl = qrg::cli::build("SL2:5");
  auto m = qrg::cli::parse_element(*sl, "mat:p=5:[[1,1],[0,1]]");
  EXPECT_EQ(sl->element_order(m), 5u);
  EXPECT_THROW(qrg::cli::parse_element(*g, "(1 2)"), qrg::Error);
}

TEST(Analyze, S4) {
  auto r = qrg::cli::analyze(qrg::cli::parse_spec("S4"));
  EXPECT_EQ(r.order, 24u);
  EXPECT_EQ(r.num_classes, 5u);
  EXPECT_EQ(r.cosocle_order, 12u);
  EXPECT_FALSE(r.perfect);
  EXPECT_EQ(r.degree, 1u);
  EXPECT_EQ(r.min_normal_index, 2u);
  auto j = qrg::cli::to_json(r);
  EXPECT_EQ(j["schema"], "qrg/1");
  EXPECT_EQ(j["degrees"], Json::parse("[1,1,2,3,3]"));
}

TEST(Analyze, A6AndTrivialGroup) {
  auto a6 = qrg::cli::analyze(qrg::cli::parse_spec("A6"));
  EXPECT_TRUE(a6.perfect);
  EXPECT_EQ(a6.cosocle_order, 1u);
  EXPECT_EQ(a6.degree, 5u);
  EXPECT_EQ(a6.min_normal_index, 360u);
  auto c1 = qrg::cli::to_json(qrg::cli::analyze(qrg::cli::parse_spec("C1")));
  EXPECT_EQ(c1["D"], "inf");
  EXPECT_TRUE(c1["min_normal_index"].is_null());
  EXPECT_EQ(c1["trivial"], true);
}

TEST(Suites, UnknownName) {
  try {
    qrg::cli::run_suite("nope");
    FAIL();
  } catch (const qrg::Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSuite);
  }
}

TEST(Suites, JordanPasses) {
  auto as = qrg::cli::run_suite("jordan");
  EXPECT_FALSE(as.empty());
  EXPECT_TRUE(qrg::cli::all_passed(as));
}

TEST(Binary, AnalyzeJson) {
  auto r = run("analyze A5 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["order"], 60);
  EXPECT_EQ(j["D"], 3);
  EXPECT_EQ(j["perfect"], true);
}

TEST(Binary, CoveringWithCoprimePowers) {
  auto all = run("covering A6 --element '(1 2 3)(4 5 6)' --K 4 --m inf --json");
  ASSERT_EQ(all.code, 0) << all.out;
  EXPECT_EQ(Json::parse(all.out)["property_holds"], false);
  auto coprime = run("covering A6 --element '(1 2 3)(4 5 6)' --K 4 --m inf --coprime-powers --json");
  ASSERT_EQ(coprime.code, 0) << coprime.out;
  auto j = Json::parse(coprime.out);
  EXPECT_EQ(j["property_holds"], true);
  EXPECT_EQ(j["covering"]["K"], 3);
}

TEST(Binary, ErrorsExitWithTwo) {
  auto bad_spec = run("analyze SL2:6");
  EXPECT_EQ(bad_spec.code, 2);
  EXPECT_NE(bad_spec.out.find("offset 4"), std::string::npos) << bad_spec.out;
  EXPECT_EQ(run("verify nope").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
  EXPECT_EQ(run("analyze A9 --cap-order 1000").code, 2);
  EXPECT_EQ(run("mixing A5").code, 2);
}

TEST(Binary, VerifyPrintsOneLinePerAssertion) {
  auto r = run("verify packing");
  ASSERT_EQ(r.code, 0) << r.out;
  std::size_t lines = 0, pos = 0;
  while ((pos = r.out.find('\n', pos)) != std::string::npos) {
    ++lines;
    ++pos;
  }
  EXPECT_GT(lines, 0u);
  auto first = Json::parse(r.out.substr(0, r.out.find('\n')));
  EXPECT_EQ(first["suite"], "packing");
  EXPECT_EQ(first["passed"], true);
}

TEST(Binary, ConstructSigma) {
  auto r = run("construct sigma --n 17 --p 5 --q 7 --field 2 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NO_THROW(Json::parse(r.out));
  EXPECT_NE(r.out.find("14/17"), std::string::npos) << r.out;
  EXPECT_EQ(run("construct sigma --n 12 --p 5 --q 7").code, 2);
}

TEST(Binary, MixingIsSeeded) {
  auto a = run("mixing SL2:5 --seed 3 --trials 5 --json");
  auto b = run("mixing SL2:5 --seed 3 --trials 5 --json");
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
}
