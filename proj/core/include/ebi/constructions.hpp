#pragma once

#include <set>
#include <vector>

#include "ebi/bipartite.hpp"

namespace ebi {

// The labeling families with closed-form index sets.
//
//   two_diff     K_{n,n-2}, odd n > 5:          {0, 2, ..., 2n-8}
//   general      K_{n,n-2a}, 1 <= a <= (n-3)/4: {0, 2, ..., 2n-2a-6}
//   square_odd   K_{n,n}, odd n >= 3:           {0, 2, ..., 2n-4}
//   square_even  K_{n,n}, even n >= 4:          {0, 1, ..., 2n-8}
//
// Shapes are oriented with the smaller part as rows: two_diff builders
// return Shape{n-2, n}, general builders Shape{n-2a, n}.
enum class Family { two_diff, general, square_odd, square_even };

// Closed-form index set for a family at the given parameters.
// Out-of-range parameters raise parameter_error.
std::set<int> claimed_ebi(Family family, int n, int a = 0);

// A run of 1-edges a sparse vertex sends into the cyclically ordered
// opposite sparse part: positions (start_offset + t) mod cycle size for
// t in [0, length). `anchor` is the owning sparse vertex's position.
struct CyclicWindow {
  int anchor = 0;
  int start_offset = 0;
  int length = 0;
};

// ---------------------------------------------------------------------------
// K_{n,n-2} constructions (family two_diff), n odd > 5.
//
// Vertex layout on Shape{n-2, n}: row 0 plus columns 0 and 1 are the heavy
// all-zero vertices; rows 1..n-3 and columns 2..n-1 are sparse. Sparse
// columns own cyclic windows over the sparse-row cycle (size n-3).
// ---------------------------------------------------------------------------

// Maximum-index labeling: edge-friendly, index 2n-8, and the zero class is
// exactly {row 0, column 0, column 1}. Window lengths are (n+1)/2 for the
// first (n-3)/2 sparse columns and (n-1)/2 for the rest, anchored at
// column position mod (n-3); every sparse row collects at least (n+1)/2
// ones, which the builder verifies before returning.
Labeling build_two_diff_max(int n);

// Descent start: edge-friendly, index 2n-10, zero class {row 0, columns
// 0, 1, 2} with (row 0, column 2) the single heavy 1-edge. Here the sparse
// ROWS own the windows: row i sends (n+1)/2 ones starting at sparse column
// position i-1, so every sparse column also receives exactly (n+1)/2 ones.
Labeling build_two_diff_base(int n);

// Swap schedule on build_two_diff_base(n): n-5 vertex flips, one
// checkpoint each, realizing indices 2n-12, 2n-14, ..., 2, 0. Sparse
// columns at positions 2..(n-1)/2 flip first (two swaps each, absorbed by
// columns 0 and 1), then sparse rows (n+1)/2..n-4 flip (one swap each,
// absorbed by row 0).
Schedule schedule_two_diff(int n);

// The window tables behind the two builders, exposed for inspection.
std::vector<CyclicWindow> two_diff_max_windows(int n);
std::vector<CyclicWindow> two_diff_base_windows(int n);

// ---------------------------------------------------------------------------
// K_{n,n-2a} constructions (family general), n odd > 5, 1 <= a <= (n-3)/4,
// dense column count 2 <= c <= 2a+1.
//
// Vertex layout on Shape{n-2a, n}: row 0 and columns 0..c-1 are heavy;
// rows 1..n-2a-1 and columns c..n-1 are sparse.
// ---------------------------------------------------------------------------

// Per-sparse-column 1-edge surplus. `k` is the largest count in
// [0, (n-2a-3)/2] keeping the signed balance
//   balance = 2ac - n(c-1) + 2k(n-c)
// at most 1; `balance` is that value. Raises infeasible_parameters_error
// when no k in range qualifies.
struct KnResult {
  int k = 0;
  int balance = 0;
};
KnResult compute_kn(int n, int a, int c);

// c-heavy labeling: edge-friendly, index 2n-2a-2(c+1), zero class exactly
// {row 0} and the c heavy columns. Sparse column i takes a window of
// length (n-2a+1)/2 + k, plus one more for the first floor(-balance/2)
// columns; windows are laid consecutively around the sparse-row cycle so
// row coverage never strays more than 1 from the mean. Row 0's edges into
// the heavy columns are 0 for the first (c-1)/2 of them when c is odd,
// for the first c/2 when c is even, and 1 for the rest; the builder
// verifies friendliness, the index, and the zero class before returning.
Labeling build_general(int n, int a, int c);

// Swap schedule on build_general(n, a, 2a+1): flips the first n-3a-2
// sparse columns, k+1 swaps each, absorbed by heavy columns in rotation
// (overflowing into never-flipped sparse columns when a heavy column's
// zero-majority slack is exhausted). Checkpoints realize
// 2n-6a-6, 2n-6a-8, ..., 2, 0.
Schedule schedule_general(int n, int a);

// Window table behind build_general.
std::vector<CyclicWindow> general_windows(int n, int a, int c);

// ---------------------------------------------------------------------------
// Counting bounds and fixtures.
// ---------------------------------------------------------------------------

// Edge-count tallies for labelings with few heavy vertices: e1_min is the
// 1-edge total forced when every vertex outside the heavy set keeps a
// strict 1-majority, e0_max caps the 0-edges under the tally's capacity
// assumptions, and feasible is gap <= 1. dense_count = 2 treats two heavy
// vertices on K_{n,n-2} (a must be 1); dense_count = 1 treats one heavy
// column on K_{n,n-2a}. The dense_count = 2 capacity term undercounts the
// heavy column's 0-edges by one, so its infeasible verdict is advisory
// only: K_{7,5} admits an edge-friendly labeling of index 8 even though
// the tally reports gap 2 for exactly that configuration.
struct BoundReport {
  int e1_min = 0;
  int e0_max = 0;
  int gap = 0;
  bool feasible = false;
};
BoundReport dense_bound_check(int n, int a, int dense_count);

// The two reference labelings of K_{3,5} (Shape{3,5}): variant 'a' has
// index 2, variant 'b' has index 0; both have e0 = 8, e1 = 7.
Labeling fixture_k35(char variant);

}  // namespace ebi
