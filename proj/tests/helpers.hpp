#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "ebi/bipartite.hpp"

namespace ebi::testing {

// Builds a labeling from a row-major bitmask, bit k = cell k. Independent of
// any enumeration-internal encoding on purpose.
inline Labeling from_mask(Shape shape, std::uint32_t mask) {
  Labeling lab(shape);
  for (int cell = 0; cell < shape.cells(); ++cell) {
    if (mask >> cell & 1u) lab.set(cell / shape.q, cell % shape.q, 1);
  }
  return lab;
}

// Every shape with p <= q and at most max_cells edges.
inline std::vector<Shape> shapes_up_to(int max_cells) {
  std::vector<Shape> out;
  for (int p = 1; p * p <= max_cells; ++p) {
    for (int q = p; p * q <= max_cells; ++q) out.push_back(Shape{p, q});
  }
  return out;
}

inline Labeling permuted(const Labeling& lab, const std::vector<int>& row_perm,
                         const std::vector<int>& col_perm) {
  Labeling out(lab.shape());
  for (int r = 0; r < lab.shape().p; ++r) {
    for (int c = 0; c < lab.shape().q; ++c) {
      out.set(row_perm[r], col_perm[c], lab.label(r, c));
    }
  }
  return out;
}

inline std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace ebi::testing
