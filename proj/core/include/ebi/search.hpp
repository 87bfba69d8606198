#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "ebi/bipartite.hpp"

namespace ebi {

struct SearchOptions {
  // Enumerate one representative per row/column-permutation orbit instead
  // of every labeling.
  bool use_symmetry = false;
  // Number of workers consuming enumeration shards. Any value >= 1 yields
  // identical results.
  int worker_chunks = 1;
  // Maximum labelings examined. 0 means unlimited for exhaustive runs;
  // local_search requires a positive value.
  std::uint64_t budget = 0;
  // Seed for local_search. Exhaustive runs ignore it.
  std::uint64_t seed = 0;
  // Exhaustive-size ceilings (edge counts). A shape over the applicable
  // ceiling is refused up front.
  int plain_cell_limit = 25;
  int symmetry_cell_limit = 35;
  // Optional wall-clock cutoff for exhaustive runs.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Outcome of an exhaustive enumeration. Every witness re-evaluates as
// edge-friendly with its mapped index; exhaustive is true only when the
// whole edge-friendly space (up to the declared symmetries) was covered.
struct EbiResult {
  Shape shape;
  std::set<int> achieved;
  bool exhaustive = false;
  std::uint64_t examined = 0;
  std::map<int, Labeling> witnesses;
  // Set for single-edge shapes, where requiring both labels to occur
  // would empty the index set.
  std::optional<std::string> note;
};

// Refusal (shape over its ceiling) or interruption (budget or deadline
// exhausted). An interruption carries the partial result, never silently.
class resource_limit_error : public error {
 public:
  explicit resource_limit_error(const std::string& what,
                                std::shared_ptr<const EbiResult> partial = {})
      : error(what), partial_(std::move(partial)) {}

  // Progress at interruption; null for an up-front refusal.
  const EbiResult* partial() const noexcept { return partial_.get(); }

 private:
  std::shared_ptr<const EbiResult> partial_;
};

// Computes { evaluate(f).index : f edge-friendly on shape } by explicit
// enumeration. When p*q is odd only the heavier balanced weight is
// enumerated; complement symmetry covers the other. The achieved set is
// independent of worker_chunks and use_symmetry.
EbiResult ebi_exhaustive(Shape shape, const SearchOptions& options = {});

// Single fixed-weight enumeration without complement folding. Exposed so
// the folding step itself can be checked against direct runs.
EbiResult ebi_exhaustive_weight(Shape shape, int weight,
                                const SearchOptions& options = {});

// Canonical representative of a labeling's orbit under independent row and
// column permutations; orbit equality coincides with byte equality of the
// key. The key is the canonical representative's text serialization.
struct CanonicalKey {
  std::string bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};
CanonicalKey canonical_key(const Labeling& labeling);
Labeling canonical_form(const Labeling& labeling);

// Seed-deterministic hill climb over balanced labelings using single
// vertex-sharing swap moves, with plateau acceptance and random restarts.
// found is true only for a labeling verified to be edge-friendly with
// exactly the target index; absence of a hit is evidence, not proof.
struct LocalSearchResult {
  bool found = false;
  int target = 0;
  std::uint64_t examined = 0;
  std::optional<Labeling> labeling;
};
LocalSearchResult local_search(Shape shape, int target_index,
                               const SearchOptions& options);

// JSON object {shape:{p,q}, achieved, exhaustive, examined, witnesses}
// with witnesses keyed by index and valued by labeling text; `note`
// appended last when present.
std::string ebi_result_to_json(const EbiResult& result);

}  // namespace ebi
