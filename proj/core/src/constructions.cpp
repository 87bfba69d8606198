#include "ebi/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ebi {

namespace {

void require_two_diff_n(int n) {
  if (n < 7 || n % 2 == 0) {
    throw parameter_error(
        "two-diff family needs an odd part size of at least 7, got n=" +
        std::to_string(n));
  }
}

void require_general_params(int n, int a) {
  if (n < 7 || n % 2 == 0) {
    throw parameter_error(
        "general family needs an odd part size of at least 7, got n=" +
        std::to_string(n));
  }
  if (a < 1 || 4 * a > n - 3) {
    throw parameter_error("gap parameter a must satisfy 1 <= a <= (n-3)/4; "
                          "got a=" +
                          std::to_string(a) + " with n=" + std::to_string(n));
  }
}

void require_c(int n, int a, int c) {
  require_general_params(n, a);
  if (c < 2 || c > 2 * a + 1) {
    throw parameter_error("heavy-column count c must satisfy 2 <= c <= 2a+1; "
                          "got c=" +
                          std::to_string(c) + " with a=" + std::to_string(a));
  }
}

int hub_zero_count(int c) { return c % 2 == 1 ? (c - 1) / 2 : c / 2; }

std::set<int> even_range(int top) {
  std::set<int> out;
  for (int v = 0; v <= top; v += 2) out.insert(v);
  return out;
}

// Every builder re-derives the quantities its labeling must exhibit and
// refuses to return anything that fails the check.
void verify_built(const Labeling& lab, int expected_index, int expected_e0,
                  int expected_e1, const std::vector<int>& zero_rows,
                  const std::vector<int>& zero_cols, const char* what) {
  const Evaluation ev = evaluate(lab);
  auto fail = [what](const std::string& msg) {
    throw internal_error(std::string(what) + ": " + msg);
  };
  if (!ev.edge_friendly) {
    fail("labeling is not edge-friendly (e0=" + std::to_string(ev.e0) +
         ", e1=" + std::to_string(ev.e1) + ")");
  }
  if (ev.e0 != expected_e0 || ev.e1 != expected_e1) {
    fail("edge counts (" + std::to_string(ev.e0) + "," +
         std::to_string(ev.e1) + ") differ from expected (" +
         std::to_string(expected_e0) + "," + std::to_string(expected_e1) +
         ")");
  }
  if (ev.unlabeled != 0) {
    fail("found " + std::to_string(ev.unlabeled) + " unlabeled vertices");
  }
  if (ev.index != expected_index) {
    fail("index " + std::to_string(ev.index) + " differs from expected " +
         std::to_string(expected_index));
  }
  const Shape& s = lab.shape();
  auto listed = [](const std::vector<int>& xs, int x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
  };
  for (int r = 0; r < s.p; ++r) {
    const VertexClass want =
        listed(zero_rows, r) ? VertexClass::zero : VertexClass::one;
    if (ev.class_a[r] != want) {
      fail("row " + std::to_string(r) + " fell on the wrong side (1-degree " +
           std::to_string(ev.deg1_a[r]) + " of " + std::to_string(s.q) + ")");
    }
  }
  for (int c = 0; c < s.q; ++c) {
    const VertexClass want =
        listed(zero_cols, c) ? VertexClass::zero : VertexClass::one;
    if (ev.class_b[c] != want) {
      fail("column " + std::to_string(c) +
           " fell on the wrong side (1-degree " + std::to_string(ev.deg1_b[c]) +
           " of " + std::to_string(s.p) + ")");
    }
  }
}

// Paints window cells; rows of the sparse block cycle with period m and begin
// at row_base, columns sit at col_base + anchor.
void paint_row_cycle_windows(Labeling& lab,
                             const std::vector<CyclicWindow>& windows, int m,
                             int row_base, int col_base) {
  for (const CyclicWindow& w : windows) {
    if (w.length < 1 || w.length > m) {
      throw internal_error("window of length " + std::to_string(w.length) +
                           " cannot tile a cycle of " + std::to_string(m));
    }
    for (int t = 0; t < w.length; ++t) {
      lab.set(row_base + (w.start_offset + t) % m, col_base + w.anchor, 1);
    }
  }
}

}  // namespace

std::set<int> claimed_ebi(Family family, int n, int a) {
  if (family != Family::general && a != 0) {
    throw parameter_error("gap parameter a applies only to the general family");
  }
  switch (family) {
    case Family::two_diff:
      require_two_diff_n(n);
      return even_range(2 * n - 8);
    case Family::general:
      require_general_params(n, a);
      return even_range(2 * n - 2 * a - 6);
    case Family::square_odd: {
      if (n < 3 || n % 2 == 0) {
        throw parameter_error("odd square family needs odd n >= 3, got n=" +
                              std::to_string(n));
      }
      return even_range(2 * n - 4);
    }
    case Family::square_even: {
      if (n < 4 || n % 2 == 1) {
        throw parameter_error("even square family needs even n >= 4, got n=" +
                              std::to_string(n));
      }
      std::set<int> out;
      for (int v = 0; v <= 2 * n - 8; ++v) out.insert(v);
      return out;
    }
  }
  throw parameter_error("unknown family");
}

std::vector<CyclicWindow> two_diff_max_windows(int n) {
  require_two_diff_n(n);
  const int m = n - 3;
  std::vector<CyclicWindow> windows;
  windows.reserve(n - 2);
  // Sparse column i (1-based) anchors at row position (i-1) mod m; the first
  // (n-3)/2 columns take the longer window so row coverage lands at (n+1)/2.
  for (int i = 1; i <= n - 2; ++i) {
    const int length = i <= (n - 3) / 2 ? (n + 1) / 2 : (n - 1) / 2;
    windows.push_back({i - 1, (i - 1) % m, length});
  }
  return windows;
}

Labeling build_two_diff_max(int n) {
  require_two_diff_n(n);
  const int m = n - 3;
  Labeling lab(Shape{n - 2, n});
  paint_row_cycle_windows(lab, two_diff_max_windows(n), m, 1, 2);
  // Heavy row 0 and heavy columns 0,1 stay all-zero.
  verify_built(lab, 2 * n - 8, (n - 1) * (n - 1) / 2, (n * n - 2 * n - 1) / 2,
               {0}, {0, 1}, "two-diff extreme construction");
  return lab;
}

std::vector<CyclicWindow> two_diff_base_windows(int n) {
  require_two_diff_n(n);
  std::vector<CyclicWindow> windows;
  windows.reserve(n - 3);
  // Here the sparse rows own the windows, sliding over the column cycle; the
  // anchors are distinct so every sparse column is covered exactly (n+1)/2
  // times.
  for (int i = 1; i <= n - 3; ++i) {
    windows.push_back({i - 1, i - 1, (n + 1) / 2});
  }
  return windows;
}

Labeling build_two_diff_base(int n) {
  require_two_diff_n(n);
  const int m = n - 3;
  Labeling lab(Shape{n - 2, n});
  for (const CyclicWindow& w : two_diff_base_windows(n)) {
    for (int t = 0; t < w.length; ++t) {
      lab.set(1 + w.anchor, 3 + (w.start_offset + t) % m, 1);
    }
  }
  lab.set(0, 2, 1);
  verify_built(lab, 2 * n - 10, (n - 1) * (n - 1) / 2,
               (n * n - 2 * n - 1) / 2, {0}, {0, 1, 2},
               "two-diff base construction");
  return lab;
}

Schedule schedule_two_diff(int n) {
  require_two_diff_n(n);
  Schedule sched;
  const int base_index = 2 * n - 10;
  int flips = 0;
  auto checkpoint = [&]() {
    ++flips;
    sched.checkpoints.push_back({sched.steps.size(), base_index - 2 * flips});
  };
  // Forward a 1-edge of column j+2 to absorber column 0 through row j, then
  // another to absorber column 1 through row j-1; the shared rows keep their
  // 1-degree, the column drops by two and crosses to the zero side.
  for (int j = 2; j <= (n - 1) / 2; ++j) {
    sched.steps.push_back({{j, 0}, {j, j + 2}});
    sched.steps.push_back({{j - 1, 1}, {j - 1, j + 2}});
    checkpoint();
  }
  // Remaining flips move one 1-edge from row i up to absorber row 0 inside
  // column i+2, dropping the row to the zero side while the column holds.
  for (int i = (n + 1) / 2; i <= n - 4; ++i) {
    sched.steps.push_back({{0, i + 2}, {i, i + 2}});
    checkpoint();
  }
  return sched;
}

KnResult compute_kn(int n, int a, int c) {
  require_c(n, a, c);
  const auto balance_at = [n, a, c](int k) {
    return 2 * a * c - n * (c - 1) + 2 * k * (n - c);
  };
  // Largest k keeping the balance at most 1, capped by the window headroom.
  const int cap = (n - 2 * a - 3) / 2;
  const int k =
      std::min((1 + n * (c - 1) - 2 * a * c) / (2 * (n - c)), cap);
  if (k < 0 || balance_at(k) > 1) {
    throw infeasible_parameters_error(
        "no window extension balances K_{" + std::to_string(n) + "," +
        std::to_string(n - 2 * a) + "} with c=" + std::to_string(c));
  }
  return {k, balance_at(k)};
}

std::vector<CyclicWindow> general_windows(int n, int a, int c) {
  const KnResult kn = compute_kn(n, a, c);
  const int m = n - 2 * a - 1;
  const int cols = n - c;
  const int widened = kn.balance < 0 ? -kn.balance / 2 : 0;
  const int base_length = (n - 2 * a + 1) / 2 + kn.k;
  std::vector<CyclicWindow> windows;
  windows.reserve(cols);
  // Consecutive windows continue where the previous one ended, so total
  // coverage spreads over the row cycle within one edge per row.
  int start = 0;
  for (int i = 0; i < cols; ++i) {
    const int length = base_length + (i < widened ? 1 : 0);
    windows.push_back({i, start, length});
    start = (start + length) % m;
  }
  return windows;
}

Labeling build_general(int n, int a, int c) {
  const std::vector<CyclicWindow> windows = general_windows(n, a, c);
  const int m = n - 2 * a - 1;
  Labeling lab(Shape{n - 2 * a, n});
  paint_row_cycle_windows(lab, windows, m, 1, c);
  const int zeros = hub_zero_count(c);
  for (int j = zeros; j < c; ++j) lab.set(0, j, 1);

  int window_total = 0;
  for (const CyclicWindow& w : windows) window_total += w.length;
  const int e1 = window_total + (c - zeros);
  std::vector<int> zero_cols(c);
  std::iota(zero_cols.begin(), zero_cols.end(), 0);
  verify_built(lab, 2 * n - 2 * a - 2 * (c + 1), n * (n - 2 * a) - e1, e1,
               {0}, zero_cols, "general construction");
  return lab;
}

Schedule schedule_general(int n, int a) {
  require_general_params(n, a);
  const int c = 2 * a + 1;
  const KnResult kn = compute_kn(n, a, c);
  const int widened = kn.balance < 0 ? -kn.balance / 2 : 0;
  const int flips = n - 3 * a - 2;
  const int rows = n - 2 * a;
  // A column sits on the zero side exactly while its 1-degree stays at or
  // below this bound; the part size is odd, so there is no tie.
  const int zero_ceiling = (n - 2 * a - 1) / 2;

  Labeling work = build_general(n, a, c);
  Schedule sched;
  const int base_index = 2 * n - 6 * a - 4;

  const auto col_deg1 = [&work, rows](int col) {
    int d = 0;
    for (int r = 0; r < rows; ++r) d += work.label(r, col);
    return d;
  };
  // Smallest row that still has a 1 in the flipping column and a 0 in the
  // candidate partner column; moving along that row keeps the row's 1-degree.
  const auto find_pivot = [&work, rows](int partner_col, int flip_col) {
    for (int r = 1; r < rows; ++r) {
      if (work.label(r, flip_col) == 1 && work.label(r, partner_col) == 0) {
        return r;
      }
    }
    return -1;
  };

  int rotation = 0;
  for (int i = 1; i <= flips; ++i) {
    const int flip_col = c + (i - 1);
    const int switches = kn.k + 1 + (i <= widened ? 1 : 0);
    for (int s = 0; s < switches; ++s) {
      int partner = -1;
      int pivot = -1;
      for (int t = 0; t < c && partner < 0; ++t) {
        const int d = (rotation + t) % c;
        if (col_deg1(d) >= zero_ceiling) continue;
        const int r = find_pivot(d, flip_col);
        if (r > 0) {
          partner = d;
          pivot = r;
          rotation = (d + 1) % c;
        }
      }
      // Columns never scheduled to flip can absorb the spill; they are on the
      // one side and stay there.
      for (int col = c + flips; col < n && partner < 0; ++col) {
        const int r = find_pivot(col, flip_col);
        if (r > 0) {
          partner = col;
          pivot = r;
        }
      }
      if (partner < 0) {
        throw budget_error("no absorbing column left while switching column " +
                           std::to_string(flip_col) + " of K_{" +
                           std::to_string(n) + "," +
                           std::to_string(n - 2 * a) + "}");
      }
      const SwapStep step{{pivot, partner}, {pivot, flip_col}};
      apply_swap(work, step);
      sched.steps.push_back(step);
    }
    sched.checkpoints.push_back({sched.steps.size(), base_index - 2 * i});
  }

  const Evaluation final_ev = evaluate(work);
  if (!final_ev.edge_friendly || final_ev.index != 0) {
    throw internal_error("general switching schedule ended at index " +
                         std::to_string(final_ev.index) +
                         " instead of 0 for n=" + std::to_string(n) +
                         ", a=" + std::to_string(a));
  }
  return sched;
}

BoundReport dense_bound_check(int n, int a, int dense_count) {
  require_general_params(n, a);
  BoundReport report;
  if (dense_count == 2) {
    if (a != 1) {
      throw parameter_error(
          "two heavy B-vertices only arise in the two-diff family (a=1), "
          "got a=" +
          std::to_string(a));
    }
    report.e1_min = (n - 1) / 2 * (n - 1);
    report.e0_max = (n - 3) + (n - 3) / 2 * (n - 1);
  } else if (dense_count == 1) {
    report.e1_min = (n - 2 * a + 1) / 2 * (n - 1);
    report.e0_max = (n - 2 * a - 1) + (n - 2 * a - 1) / 2 * (n - 1);
  } else {
    throw parameter_error("the counting bound covers one or two heavy "
                          "B-vertices, got dense_count=" +
                          std::to_string(dense_count));
  }
  report.gap = report.e1_min - report.e0_max;
  report.feasible = report.gap <= 1;
  return report;
}

Labeling fixture_k35(char variant) {
  Labeling lab(Shape{3, 5});
  if (variant == 'a') {
    for (const EdgeRef e : {EdgeRef{0, 0}, EdgeRef{0, 1}, EdgeRef{0, 3},
                            EdgeRef{1, 1}, EdgeRef{1, 2}, EdgeRef{1, 3},
                            EdgeRef{2, 2}}) {
      lab.set(e, 1);
    }
  } else if (variant == 'b') {
    for (const EdgeRef e : {EdgeRef{0, 0}, EdgeRef{0, 1}, EdgeRef{0, 2},
                            EdgeRef{1, 1}, EdgeRef{1, 2}, EdgeRef{1, 3},
                            EdgeRef{2, 4}}) {
      lab.set(e, 1);
    }
  } else {
    throw parameter_error(std::string("unknown fixture variant '") + variant +
                          "'; use 'a' or 'b'");
  }
  return lab;
}

}  // namespace ebi
