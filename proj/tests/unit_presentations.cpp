#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "qlie/elem_io.hpp"
#include "qlie/presentation.hpp"
#include "qlie/report.hpp"

using namespace qlie;

namespace {

int count_status(const Report& rep, const std::string& st) {
  int c = 0;
  for (const auto& r : rep.records)
    if (r.status == st) ++c;
  return c;
}

const CheckRecord& rec(const Report& rep, const std::string& id) {
  for (const auto& r : rep.records)
    if (r.check_id == id) return r;
  throw std::runtime_error("no record " + id);
}

std::set<std::string> ids_with_status(const Report& rep, const std::string& st) {
  std::set<std::string> out;
  for (const auto& r : rep.records)
    if (r.status == st) out.insert(r.check_id);
  return out;
}

// discrepancy counts per relation family (the part of the id before ':')
std::map<std::string, int> family_count(const Report& rep, const std::string& st) {
  std::map<std::string, int> out;
  for (const auto& r : rep.records)
    if (r.status == st) {
      auto c = r.check_id.find(':');
      out[c == std::string::npos ? r.check_id : r.check_id.substr(0, c)]++;
    }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cartan-chevalley presentation of the odd-symmetric subalgebra holds exactly") {
  for (int n : {2, 3}) {
    auto rep = evaluate_presentation(pres_sqn(n), assign_sqn(n));
    CHECK(rep.numbers.at("relations") == (n == 2 ? 41 : 120));
    CHECK(count_status(rep, "pass") == (int)rep.records.size());
  }
}

TEST_CASE("negative controls: corrupted relations are caught, not absorbed") {
  // sign slip on an in-span term -> discrepancy, and the suggested correction
  // is the true relation
  Presentation p;
  p.name = "controls";
  FreeElem comm = super_bracket(fe(gen("xp", {1, 0}, 0)), fe(gen("xm", {1, 0}, 0)));
  p.rels.push_back({"bad-sign", "ctl", comm - fe(gen("h", {1, 0}, 0)) - fe(gen("h", {2, 0}, 0))});
  // a bracket that lands outside the span of the generator images -> fail with
  // witness and no candidate
  p.rels.push_back(
      {"bad-span", "ctl", super_bracket(fe(gen("xp", {1, 0}, 0)), fe(gen("xp", {2, 0}, 0)))});
  auto rep = evaluate_presentation(p, assign_sqn(3));
  const auto& b1 = rec(rep, "bad-sign");
  CHECK(b1.status == "discrepancy");
  CHECK(b1.witness != "");
  CHECK(b1.candidate ==
        "-h[1;0] + h[2;0] - xm[1;0]*xp[1;0] + xp[1;0]*xm[1;0] = 0");
  const auto& b2 = rec(rep, "bad-span");
  CHECK(b2.status == "fail");
  CHECK(b2.witness != "");
  CHECK(b2.candidate == "");
}

TEST_CASE("evaluation refuses a partial assignment and names the hole") {
  CHECK_THROWS_WITH_AS(evaluate_presentation(pres_sqn(3), assign_sqn(2)),
                       doctest::Contains("missing generator"), std::runtime_error);
}

TEST_CASE("direct-sum presentation: verdicts against the full matrix model") {
  auto rep = evaluate_presentation(pres_glnn(2), assign_glnn(2));
  CHECK(rep.numbers.at("relations") == 108);
  CHECK(count_status(rep, "pass") == 101);
  CHECK(count_status(rep, "fail") == 0);
  // Seven stated relations disagree with the model.  Four are the mixed
  // cartan-cartan brackets (the stated right side drops the bracket's odd-odd
  // contribution); three are neighbor-index legs of the odd-cartan action rows
  // whose sign pattern contradicts the rows that restate the same left side.
  std::set<std::string> expect = {"gA2:1,1,1,0", "gA2:1,1,1,1", "gA2:2,2,1,0",
                                  "gA2:2,2,1,1", "gJ1:2,1",     "gJ2:1,1",
                                  "gJ2:2,1"};
  CHECK(ids_with_status(rep, "discrepancy") == expect);
  CHECK(rec(rep, "gA2:1,1,1,0").candidate ==
        "h[1;0,1]*h[1;1,0] - h[1;1,0]*h[1;0,1] - 2*h[1;1,1] = 0");
  // every candidate is itself a verified relation of the model
  Presentation cand;
  cand.name = "candidates";
  cand.parity = pres_glnn(2).parity;
  for (const auto& id : expect) {
    std::string c = rec(rep, id).candidate;
    REQUIRE(c.size() > 4);
    cand.rels.push_back({id, "cand", elem_parse(c.substr(0, c.size() - 4), cand.parity)});
  }
  auto rep2 = evaluate_presentation(cand, assign_glnn(2));
  CHECK(count_status(rep2, "pass") == (int)expect.size());
  // the restatements of the same left sides elsewhere in the list do hold,
  // which is what adjudicates the seven above as slips rather than findings
  for (const auto& r : rep.records) {
    auto fam = r.check_id.substr(0, 3);
    if (fam == "gC1" || fam == "gK2" || fam == "gB1") CHECK(r.status == "pass");
  }
}

TEST_CASE("twisted current presentation: verdicts at bounded degree") {
  auto rep = evaluate_presentation(pres_twisted(2, 4), assign_twisted(2, 4));
  CHECK(rep.numbers.at("relations") == 426);
  CHECK(count_status(rep, "pass") == 402);
  CHECK(count_status(rep, "fail") == 0);
  auto disc = family_count(rep, "discrepancy");
  std::map<std::string, int> expect = {{"tA2", 12}, {"tJ1", 3}, {"tJ2", 3}, {"tO", 6}};
  CHECK(disc == expect);
  // the degree-matching row holds exactly when its two degree formulas agree
  CHECK(rec(rep, "tO:1,1,1,0,1").status == "pass");
  CHECK(rec(rep, "tO:1,1,1,0,0").status == "discrepancy");
}

TEST_CASE("rank-one yangian relations hold in the classical current model") {
  auto rep = evaluate_presentation(pres_ysq1(), assign_ysq1_classical());
  CHECK(rep.numbers.at("relations") == 11);
  CHECK(count_status(rep, "pass") == 11);
}

TEST_CASE("presentation text round-trips and the parser rejects malformed input") {
  for (const auto& p : {pres_twisted(2, 4), pres_yd_sqn(3, 1)}) {
    std::string s = presentation_serialize(p);
    Presentation q = presentation_parse(p.name, s, p.parity);
    CHECK(q.rels.size() == p.rels.size());
    CHECK(presentation_serialize(q) == s);
  }
  ParityFn even = [](const std::string&, const std::vector<int>&) { return 0; };
  Presentation q = presentation_parse("inline",
                                      "# comment line\n"
                                      "\n"
                                      "r1 | a:1 | h[1;0]*h[2;0] - h[2;0]*h[1;0] = 0\n"
                                      "r2 | a:2 | 0 = 0\n",
                                      even);
  REQUIRE(q.rels.size() == 2);
  CHECK(q.rels[0].id == "r1");
  CHECK(q.rels[1].anchor == "a:2");
  CHECK_THROWS(presentation_parse("dup", "r1 | a | 0 = 0\nr1 | a | 0 = 0\n", even));
  CHECK_THROWS(presentation_parse("tail", "r1 | a | h[1;0]\n", even));  // missing tail
}

TEST_CASE("parity audit: exactly one stated relation mixes parities") {
  CHECK(!parity_inhomogeneous(pres_sqn(3)));
  CHECK(!parity_inhomogeneous(pres_glnn(2)));
  CHECK(!parity_inhomogeneous(pres_twisted(2, 4)));
  CHECK(!parity_inhomogeneous(pres_ysq1()));
  CHECK(!parity_inhomogeneous(pres_ybar_sq1(3)));
  CHECK(!parity_inhomogeneous(pres_yd_sq1(2)));
  // the odd-odd bracket row whose right side names an even generator family
  auto bad = parity_inhomogeneous(pres_yd_sqn(3, 1));
  REQUIRE(bad.has_value());
  CHECK(*bad == "eq54301-a:1,2,0,0");
  CHECK(parity_inhomogeneous(pres_yd_sqn(3, 2)) == bad);
}

TEST_CASE("checked-in presentation files match the builders byte for byte") {
  std::string dir = std::string(QLIE_DATA_DIR) + "/";
  CHECK(slurp(dir + "sqn_n3.pres") == presentation_serialize(pres_sqn(3)));
  CHECK(slurp(dir + "glnn_n2.pres") == presentation_serialize(pres_glnn(2)));
  CHECK(slurp(dir + "twisted_n2_d4.pres") == presentation_serialize(pres_twisted(2, 4)));
  CHECK(slurp(dir + "ysq1.pres") == presentation_serialize(pres_ysq1()));
  CHECK(slurp(dir + "ybar_sq1_k3.pres") == presentation_serialize(pres_ybar_sq1(3)));
  CHECK(slurp(dir + "yd_sq1_k2.pres") == presentation_serialize(pres_yd_sq1(2)));
  CHECK(slurp(dir + "yd_sqn_n3_m2.pres") == presentation_serialize(pres_yd_sqn(3, 2)));
}

TEST_CASE("rank-one deformed system: classical shadow against the current model") {
  auto rep = classical_shadow_check(yd_sq1_struct(2), assign_sq1_currents(6));
  CHECK(rep.numbers.at("relations") == 10);
  CHECK(rep.numbers.at("with-corrections") == 3);
  CHECK(count_status(rep, "pass") == 8);
  CHECK(count_status(rep, "fail") == 0);
  std::set<std::string> expect = {"yd2:0,0", "yd3-b:0,0"};
  CHECK(ids_with_status(rep, "discrepancy") == expect);
  for (const auto& id : expect) {
    CHECK(rec(rep, id).notes == "correction terms dropped");
  }
  // the shadow residual sits at loop degree two and the in-span correction
  // reinstates an anticommutator the stated row lacks
  CHECK(rec(rep, "yd3-b:0,0").witness == "u^2: 2*E(1,1) + 2*E(-1,-1)");
  CHECK(rec(rep, "yd3-b:0,0").candidate ==
        "-2*h[0;2] + h[1;0]*h[1;2] + h[1;2]*h[1;0] = 0");
}

TEST_CASE("higher-rank deformed system: shadow verdicts, including honest failures") {
  auto rep = classical_shadow_check(yd_sqn_struct(3, 2), assign_yd_classical(3, 8));
  CHECK(rep.config.count("assumption") == 1);
  CHECK(rep.numbers.at("relations") == 574);
  CHECK(rep.numbers.at("with-corrections") == 128);
  CHECK(count_status(rep, "pass") == 413);
  CHECK(count_status(rep, "discrepancy") == 143);
  CHECK(count_status(rep, "fail") == 18);
  // the failures are confined to the two distant-index coupling rows; their
  // residuals involve matrix positions outside the span of any generator
  // image, so no candidate exists and the checker says so plainly
  auto fails = family_count(rep, "fail");
  std::map<std::string, int> expect_f = {{"eq5453", 6}, {"eq5454", 12}};
  CHECK(fails == expect_f);
  for (const auto& r : rep.records)
    if (r.status == "fail") {
      CHECK(r.witness != "");
      CHECK(r.candidate == "");
    }
  // spot pins for rows whose verdict pattern the matrix oracle predicts:
  // same-parity cartan brackets pass wholesale, odd-odd cartan rows at odd
  // degree acquire an even-part residual the stated system omits
  auto disc = family_count(rep, "discrepancy");
  CHECK(disc.count("eq54581") == 0);
  CHECK(disc.at("eq54299") == 4);
  CHECK(disc.at("eq54300") == 8);
  CHECK(disc.at("eq5451") == 34);
  CHECK(rec(rep, "eq54299:1,1,1,0,0").witness ==
        "u^2: -2*E(1,-1) + -2*E(2,-2) + -2*E(-1,1) + -2*E(-2,2)");
  // full (non-shadow) evaluation of the same presentation carries the
  // configurable pairing assumption in its report header too
  auto full = evaluate_presentation(pres_yd_sqn(3, 1), assign_yd_classical(3, 6));
  CHECK(full.config.count("assumption") == 1);
  auto tw = evaluate_presentation(pres_twisted(2, 2), assign_twisted(2, 2));
  CHECK(tw.config.count("assumption") == 0);
}
