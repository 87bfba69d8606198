#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ebi/errors.hpp"

namespace ebi {

// Complete bipartite graph K_{p,q}: part A holds p vertices (rows), part B
// holds q vertices (columns), and every row-column pair is an edge.
struct Shape {
  int p = 0;
  int q = 0;

  int cells() const noexcept { return p * q; }
  bool operator==(const Shape&) const noexcept = default;
};

// One edge, addressed by its endpoints. The linear index row*q + col is the
// fixed convention for every serialized form and for enumeration order.
struct EdgeRef {
  int row = 0;
  int col = 0;
  bool operator==(const EdgeRef&) const noexcept = default;
};

enum class Side : std::uint8_t { a, b };

struct VertexRef {
  Side side = Side::a;
  int index = 0;
  bool operator==(const VertexRef&) const noexcept = default;
};

// Induced vertex class under the strict-majority rule. A vertex can be
// unlabeled only when its degree is even (exact tie).
enum class VertexClass : std::uint8_t { zero, one, unlabeled };

// Total 0/1 edge assignment, stored row-major, one byte per edge.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(Shape shape);  // all edges labeled 0

  const Shape& shape() const noexcept { return shape_; }

  int label(int row, int col) const {
    return labels_[static_cast<std::size_t>(row) * shape_.q + col];
  }
  int label(EdgeRef e) const { return label(e.row, e.col); }

  void set(int row, int col, int value) {
    labels_[static_cast<std::size_t>(row) * shape_.q + col] =
        static_cast<std::uint8_t>(value);
  }
  void set(EdgeRef e, int value) { set(e.row, e.col, value); }

  std::size_t cells() const noexcept { return labels_.size(); }
  const std::vector<std::uint8_t>& raw() const noexcept { return labels_; }

  bool operator==(const Labeling&) const noexcept = default;

 private:
  Shape shape_{0, 0};
  std::vector<std::uint8_t> labels_;
};

// Full result of evaluating a labeling: edge counts, per-vertex 1-degrees,
// induced classes, class counts, and the index |v0 - v1|.
struct Evaluation {
  int e0 = 0;
  int e1 = 0;
  int v0 = 0;
  int v1 = 0;
  int unlabeled = 0;
  int index = 0;
  bool edge_friendly = false;
  std::vector<VertexClass> class_a;
  std::vector<VertexClass> class_b;
  std::vector<int> deg1_a;
  std::vector<int> deg1_b;
};

// Exchange the labels of two opposite-labeled edges sharing one endpoint.
struct SwapStep {
  EdgeRef edge_a;
  EdgeRef edge_b;
};

// Asserts the index reached after `prefix` steps of a schedule.
struct Checkpoint {
  std::size_t prefix = 0;
  int expected_index = 0;
};

// Ordered swap list with index assertions at designated prefixes.
// Well-formedness: prefixes strictly increasing, each at most the step
// count; expected indices strictly decreasing by exactly 2.
struct Schedule {
  std::vector<SwapStep> steps;
  std::vector<Checkpoint> checkpoints;
};

// State captured at one checkpoint of a schedule run.
struct ScheduleRecord {
  std::size_t prefix = 0;
  int index = 0;
  Labeling labeling;
  Evaluation eval;
};

// Classifies deg1 1-edges out of `degree` incident edges.
VertexClass vertex_class_of(int deg1, int degree);

// Evaluates every field of Evaluation in one pass over the labels.
Evaluation evaluate(const Labeling& labeling);

// Class of a single vertex; agrees with evaluate's class vectors.
VertexClass vertex_class(const Labeling& labeling, VertexRef v);

// Applies one swap step in place. The step must name two distinct in-range
// edges that share exactly one endpoint and carry opposite labels.
void apply_swap(Labeling& labeling, const SwapStep& step);

// Runs a schedule against a starting labeling. Every intermediate labeling
// must remain edge-friendly and every checkpoint must evaluate to its
// expected index; violations raise schedule_error with the failing prefix.
// Returns one record per declared checkpoint, or a single prefix-0 record
// of the start state when the schedule declares none.
std::vector<ScheduleRecord> apply_schedule(const Labeling& start,
                                           const Schedule& schedule);

// Flips every label. Exchanges (e0,e1) and (v0,v1); preserves the index,
// the unlabeled count, and edge-friendliness.
Labeling complement(const Labeling& labeling);

}  // namespace ebi
