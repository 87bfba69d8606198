#include "ebi/report.hpp"

#include <string>

#include <json.hpp>

#include "ebi/constructions.hpp"
#include "ebi/search.hpp"

namespace ebi {

namespace {

const char* status_text(CaseStatus status) {
  switch (status) {
    case CaseStatus::pass:
      return "pass";
    case CaseStatus::fail:
      return "fail";
    case CaseStatus::skipped:
      return "skipped";
  }
  return "fail";
}

std::string set_cell(const std::set<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

// Fills status and detail from the sets gathered so far.
void settle(VerificationCase& vc) {
  if (vc.constructed != vc.claimed) {
    vc.status = CaseStatus::fail;
    vc.detail = "constructed indices differ from the claimed set";
    return;
  }
  if (vc.oracle && *vc.oracle != vc.claimed) {
    vc.status = CaseStatus::fail;
    vc.detail = "exhaustive search differs from the claimed set";
    return;
  }
  vc.status = CaseStatus::pass;
}

VerificationCase two_diff_case(int n) {
  VerificationCase vc;
  vc.family = "two-diff";
  vc.n = n;
  try {
    vc.claimed = claimed_ebi(Family::two_diff, n);
    vc.constructed.insert(evaluate(build_two_diff_max(n)).index);
    const Labeling base = build_two_diff_base(n);
    vc.constructed.insert(evaluate(base).index);
    for (const ScheduleRecord& rec :
         apply_schedule(base, schedule_two_diff(n))) {
      vc.constructed.insert(rec.index);
    }
    settle(vc);
  } catch (const error& e) {
    vc.status = CaseStatus::fail;
    vc.detail = e.what();
  }
  return vc;
}

VerificationCase general_case(int n, int a) {
  VerificationCase vc;
  vc.family = "general";
  vc.n = n;
  vc.a = a;
  try {
    vc.claimed = claimed_ebi(Family::general, n, a);
    for (int c = 2; c <= 2 * a + 1; ++c) {
      vc.constructed.insert(evaluate(build_general(n, a, c)).index);
    }
    const Labeling start = build_general(n, a, 2 * a + 1);
    for (const ScheduleRecord& rec :
         apply_schedule(start, schedule_general(n, a))) {
      vc.constructed.insert(rec.index);
    }
    settle(vc);
  } catch (const error& e) {
    vc.status = CaseStatus::fail;
    vc.detail = e.what();
  }
  return vc;
}

// Small enough for the exhaustive engine, so the worked K_{3,5} fixtures get
// an independent cross-check.
VerificationCase example_case() {
  VerificationCase vc;
  vc.family = "example";
  vc.n = 5;
  vc.a = 1;
  try {
    vc.claimed = {0, 2};
    vc.constructed.insert(evaluate(fixture_k35('a')).index);
    vc.constructed.insert(evaluate(fixture_k35('b')).index);
    vc.oracle = ebi_exhaustive(Shape{3, 5}).achieved;
    settle(vc);
  } catch (const error& e) {
    vc.status = CaseStatus::fail;
    vc.detail = e.what();
  }
  return vc;
}

}  // namespace

VerificationReport verify_theorems(int n_max, bool with_oracle) {
  if (n_max < 7 || n_max % 2 == 0) {
    throw parameter_error("verification covers odd n starting at 7, got "
                          "n_max=" +
                          std::to_string(n_max));
  }
  VerificationReport report;
  for (int n = 7; n <= n_max; n += 2) {
    report.cases.push_back(two_diff_case(n));
    for (int a = 1; 4 * a <= n - 3; ++a) {
      report.cases.push_back(general_case(n, a));
    }
  }
  if (with_oracle) {
    report.cases.push_back(example_case());
  }
  for (const VerificationCase& vc : report.cases) {
    switch (vc.status) {
      case CaseStatus::pass:
        ++report.passed;
        break;
      case CaseStatus::fail:
        ++report.failed;
        break;
      case CaseStatus::skipped:
        ++report.skipped;
        break;
    }
  }
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["cases"] = nlohmann::ordered_json::array();
  for (const VerificationCase& vc : report.cases) {
    nlohmann::ordered_json c;
    c["family"] = vc.family;
    c["n"] = vc.n;
    if (vc.a) c["a"] = *vc.a;
    if (vc.c) c["c"] = *vc.c;
    c["claimed"] = vc.claimed;
    c["constructed"] = vc.constructed;
    if (vc.oracle) c["oracle"] = *vc.oracle;
    c["status"] = status_text(vc.status);
    if (vc.detail) c["detail"] = *vc.detail;
    j["cases"].push_back(std::move(c));
  }
  j["summary"]["passed"] = report.passed;
  j["summary"]["failed"] = report.failed;
  j["summary"]["skipped"] = report.skipped;
  return j.dump();
}

std::string report_to_csv(const VerificationReport& report) {
  std::string out = "family,n,a,c,claimed,constructed,oracle,status\n";
  for (const VerificationCase& vc : report.cases) {
    out += vc.family;
    out += ',' + std::to_string(vc.n);
    out += ',';
    if (vc.a) out += std::to_string(*vc.a);
    out += ',';
    if (vc.c) out += std::to_string(*vc.c);
    out += ',' + set_cell(vc.claimed);
    out += ',' + set_cell(vc.constructed);
    out += ',';
    if (vc.oracle) out += set_cell(*vc.oracle);
    out += ',';
    out += status_text(vc.status);
    out += '\n';
  }
  return out;
}

}  // namespace ebi
