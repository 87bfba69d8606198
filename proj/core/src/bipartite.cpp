#include "ebi/bipartite.hpp"

#include <cstdlib>
#include <string>

namespace ebi {

namespace {

std::string shape_text(const Shape& s) {
  return std::to_string(s.p) + "x" + std::to_string(s.q);
}

bool edge_in_range(const Shape& s, EdgeRef e) {
  return e.row >= 0 && e.row < s.p && e.col >= 0 && e.col < s.q;
}

}  // namespace

Labeling::Labeling(Shape shape) : shape_(shape) {
  if (shape.p < 1 || shape.q < 1) {
    throw parameter_error("labeling shape must have both parts nonempty, got " +
                          shape_text(shape));
  }
  labels_.assign(static_cast<std::size_t>(shape.p) * shape.q, 0);
}

VertexClass vertex_class_of(int deg1, int degree) {
  if (2 * deg1 > degree) return VertexClass::one;
  if (2 * deg1 < degree) return VertexClass::zero;
  return VertexClass::unlabeled;
}

Evaluation evaluate(const Labeling& labeling) {
  const Shape& s = labeling.shape();
  if (s.p < 1 || s.q < 1) {
    throw malformed_input_error("cannot evaluate an empty labeling");
  }
  if (labeling.cells() != static_cast<std::size_t>(s.p) * s.q) {
    throw malformed_input_error("labeling length does not match its shape " +
                                shape_text(s));
  }

  Evaluation ev;
  ev.deg1_a.assign(s.p, 0);
  ev.deg1_b.assign(s.q, 0);
  const std::vector<std::uint8_t>& bits = labeling.raw();
  std::size_t pos = 0;
  for (int r = 0; r < s.p; ++r) {
    int row_ones = 0;
    for (int c = 0; c < s.q; ++c, ++pos) {
      const int bit = bits[pos];
      row_ones += bit;
      ev.deg1_b[c] += bit;
    }
    ev.deg1_a[r] = row_ones;
    ev.e1 += row_ones;
  }
  ev.e0 = s.p * s.q - ev.e1;
  ev.edge_friendly = std::abs(ev.e0 - ev.e1) <= 1;

  ev.class_a.resize(s.p);
  ev.class_b.resize(s.q);
  auto tally = [&ev](VertexClass cls) {
    if (cls == VertexClass::zero) {
      ++ev.v0;
    } else if (cls == VertexClass::one) {
      ++ev.v1;
    } else {
      ++ev.unlabeled;
    }
  };
  for (int r = 0; r < s.p; ++r) {
    ev.class_a[r] = vertex_class_of(ev.deg1_a[r], s.q);
    tally(ev.class_a[r]);
  }
  for (int c = 0; c < s.q; ++c) {
    ev.class_b[c] = vertex_class_of(ev.deg1_b[c], s.p);
    tally(ev.class_b[c]);
  }
  ev.index = std::abs(ev.v0 - ev.v1);
  return ev;
}

VertexClass vertex_class(const Labeling& labeling, VertexRef v) {
  const Shape& s = labeling.shape();
  const int part = v.side == Side::a ? s.p : s.q;
  if (v.index < 0 || v.index >= part) {
    throw malformed_input_error(
        "vertex index " + std::to_string(v.index) + " out of range for side " +
        (v.side == Side::a ? "A" : "B") + " of " + shape_text(s));
  }
  int deg1 = 0;
  if (v.side == Side::a) {
    for (int c = 0; c < s.q; ++c) deg1 += labeling.label(v.index, c);
    return vertex_class_of(deg1, s.q);
  }
  for (int r = 0; r < s.p; ++r) deg1 += labeling.label(r, v.index);
  return vertex_class_of(deg1, s.p);
}

void apply_swap(Labeling& labeling, const SwapStep& step) {
  const Shape& s = labeling.shape();
  auto edge_text = [](EdgeRef e) {
    return "(" + std::to_string(e.row) + "," + std::to_string(e.col) + ")";
  };
  if (!edge_in_range(s, step.edge_a) || !edge_in_range(s, step.edge_b)) {
    throw invalid_swap_error("swap edge out of range for shape " +
                             shape_text(s) + ": " + edge_text(step.edge_a) +
                             ", " + edge_text(step.edge_b));
  }
  if (step.edge_a == step.edge_b) {
    throw invalid_swap_error("swap edges must be distinct, got " +
                             edge_text(step.edge_a) + " twice");
  }
  const bool same_row = step.edge_a.row == step.edge_b.row;
  const bool same_col = step.edge_a.col == step.edge_b.col;
  if (!same_row && !same_col) {
    throw invalid_swap_error("swap edges " + edge_text(step.edge_a) + " and " +
                             edge_text(step.edge_b) +
                             " do not share a vertex");
  }
  const int la = labeling.label(step.edge_a);
  const int lb = labeling.label(step.edge_b);
  if (la == lb) {
    throw invalid_swap_error("swap edges " + edge_text(step.edge_a) + " and " +
                             edge_text(step.edge_b) + " both carry label " +
                             std::to_string(la));
  }
  labeling.set(step.edge_a, lb);
  labeling.set(step.edge_b, la);
}

std::vector<ScheduleRecord> apply_schedule(const Labeling& start,
                                           const Schedule& schedule) {
  const std::vector<Checkpoint>& cps = schedule.checkpoints;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i].prefix > schedule.steps.size()) {
      throw malformed_input_error(
          "checkpoint prefix " + std::to_string(cps[i].prefix) +
          " exceeds the schedule's " + std::to_string(schedule.steps.size()) +
          " steps");
    }
    if (i > 0 && cps[i].prefix <= cps[i - 1].prefix) {
      throw malformed_input_error("checkpoint prefixes must strictly increase");
    }
    if (i > 0 && cps[i].expected_index != cps[i - 1].expected_index - 2) {
      throw malformed_input_error(
          "checkpoint indices must decrease by exactly 2, got " +
          std::to_string(cps[i - 1].expected_index) + " then " +
          std::to_string(cps[i].expected_index));
    }
  }

  Labeling current = start;
  Evaluation ev = evaluate(current);
  if (!ev.edge_friendly) {
    throw schedule_error("starting labeling is not edge-friendly", 0);
  }

  std::vector<ScheduleRecord> records;
  if (cps.empty()) {
    records.push_back({0, ev.index, current, ev});
  }
  std::size_t next_cp = 0;
  auto visit = [&](std::size_t prefix) {
    while (next_cp < cps.size() && cps[next_cp].prefix == prefix) {
      if (ev.index != cps[next_cp].expected_index) {
        throw schedule_error("checkpoint expected index " +
                                 std::to_string(cps[next_cp].expected_index) +
                                 " but evaluation gives " +
                                 std::to_string(ev.index),
                             prefix);
      }
      records.push_back({prefix, ev.index, current, ev});
      ++next_cp;
    }
  };

  visit(0);
  for (std::size_t k = 0; k < schedule.steps.size(); ++k) {
    apply_swap(current, schedule.steps[k]);
    ev = evaluate(current);
    if (!ev.edge_friendly) {
      throw schedule_error("labeling stopped being edge-friendly", k + 1);
    }
    visit(k + 1);
  }
  return records;
}

Labeling complement(const Labeling& labeling) {
  Labeling flipped = labeling;
  const Shape& s = labeling.shape();
  for (int r = 0; r < s.p; ++r) {
    for (int c = 0; c < s.q; ++c) {
      flipped.set(r, c, 1 - labeling.label(r, c));
    }
  }
  return flipped;
}

}  // namespace ebi
