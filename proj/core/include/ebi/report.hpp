#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ebi/bipartite.hpp"

namespace ebi {

enum class CaseStatus { pass, fail, skipped };

// One verified claim: a closed-form index set against the set actually
// realized by builders and schedules, plus an independent enumeration when
// one was run. pass requires constructed == claimed and, when the oracle
// column is present, oracle == claimed.
struct VerificationCase {
  std::string family;
  int n = 0;
  std::optional<int> a;
  std::optional<int> c;
  std::set<int> claimed;
  std::set<int> constructed;
  std::optional<std::set<int>> oracle;
  CaseStatus status = CaseStatus::fail;
  // Present on failures caused by an exception rather than a mismatch.
  std::optional<std::string> detail;
};

struct VerificationReport {
  std::vector<VerificationCase> cases;
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  bool all_passed() const noexcept { return failed == 0 && skipped == 0; }
};

// Verifies every closed-form claim with parameters up to n_max: for each
// odd 7 <= n <= n_max one K_{n,n-2} case (both builders plus the descent
// schedule) and one K_{n,n-2a} case per admissible a (all dense counts c,
// plus that family's schedule). with_oracle additionally runs the
// enumeration oracle on shapes within the plain exhaustive ceiling and
// appends the K_{3,5} reference case. Failures become report content;
// nothing is omitted and nothing throws for an in-range n_max.
VerificationReport verify_theorems(int n_max, bool with_oracle);

// JSON object {cases: [...], summary: {passed, failed, skipped}} with each
// case carrying the CSV columns in order.
std::string report_to_json(const VerificationReport& report);

// Header "family,n,a,c,claimed,constructed,oracle,status"; one row per
// case; set cells are space-separated ascending indices; absent cells stay
// empty.
std::string report_to_csv(const VerificationReport& report);

}  // namespace ebi
