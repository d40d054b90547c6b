#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ffzeta/cli.hpp"
#include "ffzeta/report.hpp"

using namespace ffzeta;

namespace {

const std::string kData = FFZETA_DATA_DIR;

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.status = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ffzeta_test_" + name)).string();
}

Json slurp(const std::string& path) {
  std::ifstream in(path);
  return Json::parse(in);
}

}  // namespace

TEST_CASE("zeta build on the elliptic curve over F_5") {
  const auto r = run({"zeta", "build", "--spec", kData + "/elliptic_f5.spec"});
  INFO(r.err);
  REQUIRE(r.status == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["command"] == "zeta build");
  CHECK(j["verdict"] == true);
  CHECK(j["result"]["zeta"]["L"]["coefficients"] == Json::array({"1", "3", "5"}));
  CHECK(j["result"]["zeta"]["class_number"]["h"] == "9");
  CHECK(j["result"]["zeta"]["rh"]["rh_verdict"] == true);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"zeta", "build", "--spec", kData + "/genus2_f7.spec"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> p{"perturb", "fail-rh", "--spec", kData + "/elliptic_f5.spec"};
  CHECK(run(p).out == run(p).out);
}

TEST_CASE("other commands") {
  auto r = run({"curve", "count", "--spec", kData + "/elliptic_f5.spec"});
  REQUIRE(r.status == kExitOk);
  CHECK(Json::parse(r.out)["result"]["point_counts"]["counts"] == Json::array({9, 27}));
  r = run({"zeta", "rh", "--spec", kData + "/line_f2.spec"});
  CHECK(r.status == kExitOk);
  r = run({"zeta", "nevanlinna", "--spec", kData + "/elliptic_f5.spec", "--rmax", "100", "--alpha", "0,2,inf", "--format",
           "csv"});
  REQUIRE(r.status == kExitOk);
  CHECK(r.out.rfind("r,alpha,n,N,m,T\n", 0) == 0);
  r = run({"approx", "--spec", kData + "/elliptic_f5.spec", "--target", "sq", "--grid", "0.2", "--levels", "2"});
  INFO(r.err);
  CHECK(r.status == kExitOk);
}

TEST_CASE("perturb, validate and restore round trip") {
  const auto art = temp_path("artifact.json");
  auto r = run({"perturb", "fail-rh", "--spec", kData + "/elliptic_f5.spec", "--epsilon", "1e-3", "--annulus", "10", "--out",
                art});
  INFO(r.err);
  REQUIRE(r.status == kExitOk);
  CHECK(slurp(art)["result"]["rh_verdict"] == false);

  r = run({"validate", "member", "--member", art});
  REQUIRE(r.status == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["result"]["rh_verdict"] == false);
  CHECK(j["result"]["membership"]["verdict"] == true);

  r = run({"perturb", "fix-rh", "--member", art});
  REQUIRE(r.status == kExitOk);
  j = Json::parse(r.out);
  CHECK(j["result"]["rh_verdict"] == true);
  CHECK(j["result"]["exact"] == true);
  CHECK(j["result"]["member"]["numerator"] == Json::array({"1", "3", "5"}));
  std::filesystem::remove(art);
}

TEST_CASE("verification failures exit 2 with an invariant id") {
  // L u breaks the functional equation
  const auto bad = temp_path("bad_member.json");
  {
    std::ofstream f(bad);
    f << R"({"q": 5, "g": 1, "reference_L": ["1", "3", "5"], "representation": "exact",
             "numerator": ["0", "1", "3", "5"], "denominator": ["1"]})";
  }
  const auto r = run({"validate", "member", "--member", bad});
  CHECK(r.status == kExitVerification);
  CHECK(r.err.find("[member.functional_equation]") != std::string::npos);
  const auto j = Json::parse(r.out);
  CHECK(j["verdict"] == false);
  bool named = false;
  for (const auto& v : j["violations"]) named = named || v["id"] == "member.functional_equation";
  CHECK(named);

  // a lone off-circle zero cannot be removed
  {
    std::ofstream f(bad);
    f << R"({"q": 5, "g": 1, "reference_L": ["1", "3", "5"], "representation": "exact",
             "numerator": ["-2", "1"], "denominator": ["1"]})";
  }
  const auto fix = run({"perturb", "fix-rh", "--member", bad});
  CHECK(fix.status == kExitVerification);
  CHECK(fix.err.find("[member.zero_symmetry]") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("input errors exit 1") {
  auto r = run({"zeta", "build", "--spec", kData + "/malformed.spec"});
  CHECK(r.status == kExitInput);
  CHECK(r.err.find("line 3, column 21") != std::string::npos);
  r = run({"zeta", "build", "--spec", "/nonexistent/spec"});
  CHECK(r.status == kExitInput);
  r = run({"zeta", "build"});
  CHECK(r.status == kExitInput);
  r = run({"frobnicate"});
  CHECK(r.status == kExitInput);
  r = run({"zeta", "build", "--spec", kData + "/elliptic_f5.spec", "--format", "csv"});
  CHECK(r.status == kExitInput);
  r = run({"approx", "--spec", kData + "/elliptic_f5.spec", "--eta", "fast"});
  CHECK(r.status == kExitInput);
  r = run({"approx", "--spec", kData + "/elliptic_f5.spec", "--eta", "1"});
  CHECK(r.status == kExitInput);
  r = run({"perturb", "fail-rh", "--spec", kData + "/elliptic_f5.spec", "--annulus", "3"});
  CHECK(r.status == kExitInput);
  const auto junk = temp_path("junk.json");
  {
    std::ofstream f(junk);
    f << "{\"q\": 5,\n  \"g\": }";
  }
  r = run({"validate", "member", "--member", junk});
  CHECK(r.status == kExitInput);
  CHECK(r.err.find("line 2") != std::string::npos);
  std::filesystem::remove(junk);
}

TEST_CASE("member artifacts round trip") {
  const ZetaFunction zf(l_from_counts(count_series(CurveSpec::elliptic(make_field(5, 1), 1, 1), 1), 1));
  const auto m = ZetaLikeMember::from_zeta(zf);
  const auto back = member_from_json(member_json(m));
  REQUIRE(back.exact());
  CHECK(back.exact_h()->num() == m.exact_h()->num());
  CHECK(back.reference().c == m.reference().c);

  const ZetaLikeMember cm(zf.L(), zf.h());
  const auto cback = member_from_json(Json::parse(member_json(cm).dump()));
  CHECK_FALSE(cback.exact());
  CHECK(cback.h().num().coeffs() == cm.h().num().coeffs());

  Json broken = member_json(m);
  broken["representation"] = "symbolic";
  CHECK_THROWS_AS(member_from_json(broken), Error);
  broken = member_json(m);
  broken["numerator"][1] = "3/";
  CHECK_THROWS_AS(member_from_json(broken), Error);
}
