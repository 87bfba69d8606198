#include <doctest.h>

#include <set>
#include <string>

#include <json.hpp>

#include "ebi/constructions.hpp"
#include "ebi/dot.hpp"
#include "ebi/io.hpp"
#include "ebi/report.hpp"

using namespace ebi;

TEST_CASE("verification without the oracle passes for every recorded claim") {
  const VerificationReport small = verify_theorems(7, false);
  REQUIRE(small.cases.size() == 2);
  CHECK(small.passed == 2);
  CHECK(small.failed == 0);
  CHECK(small.all_passed());
  CHECK(report_to_csv(small) ==
        "family,n,a,c,claimed,constructed,oracle,status\n"
        "two-diff,7,,,0 2 4 6,0 2 4 6,,pass\n"
        "general,7,1,,0 2 4 6,0 2 4 6,,pass\n");

  const VerificationReport wide = verify_theorems(11, false);
  REQUIRE(wide.cases.size() == 7);
  CHECK(wide.passed == 7);
  CHECK(wide.all_passed());
  for (const VerificationCase& vc : wide.cases) {
    CHECK(vc.status == CaseStatus::pass);
    CHECK_FALSE(vc.oracle.has_value());
    CHECK(vc.constructed == vc.claimed);
  }
}

// With the oracle attached, the K_{3,5} reference case must fail: the
// enumeration achieves {0, 2, 4} while the recorded claim stops at {0, 2}.
// The report surfaces the mismatch instead of absorbing it.
TEST_CASE("verification with the oracle reports the K_{3,5} finding") {
  const VerificationReport report = verify_theorems(7, true);
  REQUIRE(report.cases.size() == 3);
  CHECK(report.passed == 2);
  CHECK(report.failed == 1);
  CHECK_FALSE(report.all_passed());

  const VerificationCase& example = report.cases.back();
  CHECK(example.family == "example");
  CHECK(example.n == 5);
  REQUIRE(example.a.has_value());
  CHECK(*example.a == 1);
  CHECK(example.claimed == std::set<int>{0, 2});
  CHECK(example.constructed == std::set<int>{0, 2});
  REQUIRE(example.oracle.has_value());
  CHECK(*example.oracle == std::set<int>{0, 2, 4});
  CHECK(example.status == CaseStatus::fail);
  REQUIRE(example.detail.has_value());
  CHECK(*example.detail == "exhaustive search differs from the claimed set");

  const std::string csv = report_to_csv(report);
  CHECK(csv.find("example,5,1,,0 2,0 2,0 2 4,fail\n") != std::string::npos);
}

TEST_CASE("report_to_json mirrors the cases and the summary") {
  const VerificationReport report = verify_theorems(7, true);
  const nlohmann::json j = nlohmann::json::parse(report_to_json(report));
  REQUIRE(j["cases"].size() == 3);
  CHECK(j["cases"][0]["family"] == "two-diff");
  CHECK(j["cases"][0]["n"] == 7);
  CHECK_FALSE(j["cases"][0].contains("a"));
  CHECK(j["cases"][0]["status"] == "pass");
  CHECK(j["cases"][1]["family"] == "general");
  CHECK(j["cases"][1]["a"] == 1);
  CHECK(j["cases"][2]["family"] == "example");
  CHECK(j["cases"][2]["oracle"] == nlohmann::json({0, 2, 4}));
  CHECK(j["cases"][2]["detail"] ==
        "exhaustive search differs from the claimed set");
  CHECK(j["summary"]["passed"] == 2);
  CHECK(j["summary"]["failed"] == 1);
  CHECK(j["summary"]["skipped"] == 0);
}

TEST_CASE("verification rejects an unusable n_max") {
  CHECK_THROWS_AS(verify_theorems(6, false), parameter_error);
  CHECK_THROWS_AS(verify_theorems(5, false), parameter_error);
  CHECK_THROWS_AS(verify_theorems(-2, true), parameter_error);
  CHECK_THROWS_AS(verify_theorems(8, true), parameter_error);
}

TEST_CASE("export_dot emits the full graph with class styling") {
  const Labeling zeros(Shape{2, 2});
  CHECK(export_dot(zeros) ==
        "graph ebi {\n"
        "  rankdir=TB;\n"
        "  { rank=same; a0; a1; }\n"
        "  { rank=same; b0; b1; }\n"
        "  a0 [style=filled];\n"
        "  a1 [style=filled];\n"
        "  b0 [style=filled];\n"
        "  b1 [style=filled];\n"
        "  a0 -- b0;\n"
        "  a0 -- b1;\n"
        "  a1 -- b0;\n"
        "  a1 -- b1;\n"
        "}\n");
}

TEST_CASE("export_dot styles the three vertex classes distinctly") {
  const std::string bolded = export_dot(fixture_k35('a'));
  std::size_t bold = 0;
  std::size_t filled = 0;
  std::size_t dashed = 0;
  for (std::size_t pos = 0; (pos = bolded.find("[style=bold]", pos)) !=
                            std::string::npos;
       ++bold, ++pos) {
  }
  for (std::size_t pos = 0; (pos = bolded.find("[style=filled]", pos)) !=
                            std::string::npos;
       ++filled, ++pos) {
  }
  for (std::size_t pos = 0; (pos = bolded.find("[style=dashed]", pos)) !=
                            std::string::npos;
       ++dashed, ++pos) {
  }
  CHECK(bold == 7);    // one per 1-edge
  CHECK(filled == 3);  // one per zero-class vertex
  CHECK(dashed == 0);

  // A perfect alternation leaves every vertex tied, hence dashed.
  Labeling tied(Shape{2, 2});
  tied.set(0, 1, 1);
  tied.set(1, 0, 1);
  const std::string dashes = export_dot(tied);
  std::size_t tied_count = 0;
  for (std::size_t pos = 0; (pos = dashes.find("[style=dashed]", pos)) !=
                            std::string::npos;
       ++tied_count, ++pos) {
  }
  CHECK(tied_count == 4);
  CHECK(export_dot(tied) == dashes);
}
