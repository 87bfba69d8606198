#include "ebi/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ebi/io.hpp"

namespace ebi {

namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kSingleEdgeNote =
    "single-edge shape: no labeling uses both edge labels, so under the "
    "surjective reading the index set is empty; the reported set follows the "
    "non-surjective reading";

void require_shape(const Shape& s) {
  if (s.p < 1 || s.q < 1) {
    throw parameter_error("search needs both parts nonempty, got " +
                          std::to_string(s.p) + "x" + std::to_string(s.q));
  }
}

std::string shape_name(const Shape& s) {
  return "K_{" + std::to_string(s.p) + "," + std::to_string(s.q) + "}";
}

// Order by serialized text: the mask with a 0 at the lowest differing cell
// comes first, since cells serialize in bit order.
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (0 - d))) == 0;
}

Labeling labeling_from_mask(const Shape& s, std::uint64_t mask) {
  Labeling lab(s);
  for (int r = 0; r < s.p; ++r) {
    for (int c = 0; c < s.q; ++c) {
      if (mask >> (r * s.q + c) & 1u) lab.set(r, c, 1);
    }
  }
  return lab;
}

struct ShardResult {
  std::set<int> achieved;
  std::map<int, std::uint64_t> witness;
  std::uint64_t examined = 0;
  bool complete = false;
};

void merge_index(ShardResult& out, int index, std::uint64_t mask) {
  out.achieved.insert(index);
  auto [it, fresh] = out.witness.try_emplace(index, mask);
  if (!fresh && mask_lex_less(mask, it->second)) it->second = mask;
}

// Shared stop conditions. `cap` bounds how many labelings this shard may
// still charge (0 = unlimited) and is checked before every evaluation; the
// clock and the cross-worker flag are polled every few thousand visits.
struct RunControl {
  std::uint64_t cap = 0;
  std::optional<Clock::time_point> deadline;
  std::atomic<bool>* stop = nullptr;

  bool over_cap(std::uint64_t examined) const {
    return cap != 0 && examined >= cap;
  }

  bool clock_stop(std::uint64_t visited) const {
    if ((visited & 0xFFFu) != 0u) return false;
    if (stop && stop->load(std::memory_order_relaxed)) return true;
    if (deadline && Clock::now() > *deadline) {
      if (stop) stop->store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
};

struct MaskEvaluator {
  int p = 0;
  int q = 0;
  std::uint64_t row_mask = 0;
  std::vector<std::uint64_t> col_masks;

  explicit MaskEvaluator(const Shape& s) : p(s.p), q(s.q) {
    row_mask = (std::uint64_t{1} << q) - 1;
    col_masks.assign(q, 0);
    for (int c = 0; c < q; ++c) {
      for (int r = 0; r < p; ++r) {
        col_masks[c] |= std::uint64_t{1} << (r * q + c);
      }
    }
  }

  int index_of(std::uint64_t mask) const {
    int v0 = 0;
    int v1 = 0;
    for (int r = 0; r < p; ++r) {
      const int d = std::popcount(mask >> (r * q) & row_mask);
      v1 += 2 * d > q;
      v0 += 2 * d < q;
    }
    for (int c = 0; c < q; ++c) {
      const int d = std::popcount(mask & col_masks[c]);
      v1 += 2 * d > p;
      v0 += 2 * d < p;
    }
    return v0 < v1 ? v1 - v0 : v0 - v1;
  }
};

// Walks every weight-w mask whose lowest set bit is s, in increasing numeric
// order, by iterating the (w-1)-bit suffix above s.
void run_plain_shard(const MaskEvaluator& me, int cell_count, int weight,
                     int s, const RunControl& control, ShardResult& out) {
  const int rest = weight - 1;
  const int universe = cell_count - 1 - s;
  if (rest > universe) {
    out.complete = true;
    return;
  }
  std::uint64_t sub = rest == 0 ? 0 : (std::uint64_t{1} << rest) - 1;
  const std::uint64_t last = sub << (universe - rest);
  const std::uint64_t anchor = std::uint64_t{1} << s;
  std::uint64_t visited = 0;
  for (;;) {
    if (control.over_cap(out.examined) || control.clock_stop(visited)) return;
    ++visited;
    const std::uint64_t mask = (sub << (s + 1)) | anchor;
    ++out.examined;
    merge_index(out, me.index_of(mask), mask);
    if (sub == last) break;
    const std::uint64_t low = sub & (0 - sub);
    const std::uint64_t ripple = sub + low;
    sub = ((ripple ^ sub) >> 2) / low | ripple;
  }
  out.complete = true;
}

// One side is folded into machine words (the "bit side", always the smaller
// part); the other side becomes a tuple of bit-column values. Reordering
// tuple entries is a permutation of the value side, and permuting bit
// positions is a permutation of the bit side, so orbits correspond exactly
// to sorted tuples minimized over bit permutations.
struct SymContext {
  Shape shape;
  bool bits_are_rows = true;
  int bits = 0;
  int values = 0;
  int full = 0;
  int weight = 0;
  int perm_count = 0;
  std::vector<std::uint16_t> perm_maps;
  std::vector<std::int8_t> pop;
  std::vector<std::int8_t> min_pop_from;
  std::vector<std::int8_t> max_pop_from;

  SymContext(const Shape& s, int w) : shape(s), weight(w) {
    bits_are_rows = s.p <= s.q;
    bits = bits_are_rows ? s.p : s.q;
    values = bits_are_rows ? s.q : s.p;
    full = 1 << bits;

    pop.resize(full);
    for (int v = 0; v < full; ++v) {
      pop[v] = static_cast<std::int8_t>(std::popcount(unsigned(v)));
    }
    min_pop_from.assign(full + 1, static_cast<std::int8_t>(bits + 1));
    max_pop_from.assign(full + 1, static_cast<std::int8_t>(-1));
    for (int v = full - 1; v >= 0; --v) {
      min_pop_from[v] = std::min(min_pop_from[v + 1], pop[v]);
      max_pop_from[v] = std::max(max_pop_from[v + 1], pop[v]);
    }

    std::vector<int> perm(bits);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (int v = 0; v < full; ++v) {
        std::uint16_t mapped = 0;
        for (int b = 0; b < bits; ++b) {
          if (v >> b & 1) mapped |= std::uint16_t(1) << perm[b];
        }
        perm_maps.push_back(mapped);
      }
      ++perm_count;
    }
  }

  std::uint64_t mask_of(const std::uint16_t* tuple) const {
    std::uint64_t mask = 0;
    for (int j = 0; j < values; ++j) {
      for (int b = 0; b < bits; ++b) {
        if (tuple[j] >> b & 1) {
          const int r = bits_are_rows ? b : j;
          const int c = bits_are_rows ? j : b;
          mask |= std::uint64_t{1} << (r * shape.q + c);
        }
      }
    }
    return mask;
  }

  int index_of(const std::uint16_t* tuple) const {
    int v0 = 0;
    int v1 = 0;
    for (int j = 0; j < values; ++j) {
      const int d = pop[tuple[j]];
      v1 += 2 * d > bits;
      v0 += 2 * d < bits;
    }
    for (int b = 0; b < bits; ++b) {
      int d = 0;
      for (int j = 0; j < values; ++j) d += tuple[j] >> b & 1;
      v1 += 2 * d > values;
      v0 += 2 * d < values;
    }
    return v0 < v1 ? v1 - v0 : v0 - v1;
  }

  // True when no bit permutation can produce a lexicographically smaller
  // sorted tuple; exactly one tuple per orbit passes.
  bool is_canonical(const std::uint16_t* tuple, std::uint16_t* scratch) const {
    const std::uint16_t head = tuple[0];
    for (int pi = 0; pi < perm_count; ++pi) {
      const std::uint16_t* map = &perm_maps[std::size_t(pi) * full];
      std::uint16_t lowest = std::uint16_t(full);
      for (int j = 0; j < values; ++j) {
        const std::uint16_t m = map[tuple[j]];
        if (m < head) return false;
        lowest = std::min(lowest, m);
        scratch[j] = m;
      }
      if (lowest > head) continue;
      for (int j = 1; j < values; ++j) {
        const std::uint16_t v = scratch[j];
        int k = j - 1;
        while (k >= 0 && scratch[k] > v) {
          scratch[k + 1] = scratch[k];
          --k;
        }
        scratch[k + 1] = v;
      }
      for (int j = 0; j < values; ++j) {
        if (scratch[j] != tuple[j]) {
          if (scratch[j] < tuple[j]) return false;
          break;
        }
      }
    }
    return true;
  }
};

struct SymShardRun {
  const SymContext& cx;
  const RunControl& control;
  ShardResult& out;
  std::vector<std::uint16_t> tuple;
  std::vector<std::uint16_t> scratch;
  std::uint64_t visited = 0;

  SymShardRun(const SymContext& c, const RunControl& ctl, ShardResult& o)
      : cx(c), control(ctl), out(o), tuple(c.values), scratch(c.values) {}

  bool descend(int depth, int rem) {
    if (depth == cx.values) {
      ++visited;
      if (control.over_cap(out.examined) || control.clock_stop(visited)) {
        return false;
      }
      if (!cx.is_canonical(tuple.data(), scratch.data())) return true;
      ++out.examined;
      merge_index(out, cx.index_of(tuple.data()), cx.mask_of(tuple.data()));
      return true;
    }
    const int slots_after = cx.values - depth - 1;
    for (int v = tuple[depth - 1]; v < cx.full; ++v) {
      const int pv = cx.pop[v];
      if (pv > rem) continue;
      const int rest = rem - pv;
      if (rest < slots_after * cx.min_pop_from[v]) continue;
      if (rest > slots_after * cx.max_pop_from[v]) continue;
      tuple[depth] = static_cast<std::uint16_t>(v);
      if (!descend(depth + 1, rest)) return false;
    }
    return true;
  }

  void run(int first_value) {
    const int rem = cx.weight - cx.pop[first_value];
    const int slots_after = cx.values - 1;
    if (rem < 0 || rem < slots_after * cx.min_pop_from[first_value] ||
        rem > slots_after * cx.max_pop_from[first_value]) {
      out.complete = true;
      return;
    }
    tuple[0] = static_cast<std::uint16_t>(first_value);
    out.complete = descend(1, rem);
  }
};

struct ExhaustiveOutcome {
  EbiResult result;
  bool finished = true;
};

EbiResult merge_shards(const Shape& shape, const std::vector<ShardResult>& rs,
                       bool finished) {
  EbiResult res;
  res.shape = shape;
  res.exhaustive = finished;
  std::map<int, std::uint64_t> witness;
  for (const ShardResult& r : rs) {
    res.examined += r.examined;
    for (int idx : r.achieved) res.achieved.insert(idx);
    for (const auto& [idx, mask] : r.witness) {
      auto [it, fresh] = witness.try_emplace(idx, mask);
      if (!fresh && mask_lex_less(mask, it->second)) it->second = mask;
    }
  }
  for (const auto& [idx, mask] : witness) {
    res.witnesses.emplace(idx, labeling_from_mask(shape, mask));
  }
  return res;
}

EbiResult run_balanced_enumeration(const Shape& shape, int weight,
                                   const SearchOptions& opts) {
  const int cells = shape.p * shape.q;

  // Weight 0 only appears for the single-cell shape; handle it inline.
  if (weight == 0) {
    MaskEvaluator me(shape);
    std::vector<ShardResult> rs(1);
    rs[0].examined = 1;
    rs[0].complete = true;
    merge_index(rs[0], me.index_of(0), 0);
    return merge_shards(shape, rs, true);
  }

  const bool sym = opts.use_symmetry;
  std::optional<SymContext> cx;
  std::optional<MaskEvaluator> me;
  int shard_count = 0;
  if (sym) {
    cx.emplace(shape, weight);
    shard_count = cx->full;
  } else {
    me.emplace(shape);
    shard_count = cells - weight + 1;
  }

  std::vector<ShardResult> rs(shard_count);
  auto run_one = [&](int s, const RunControl& control) {
    if (sym) {
      SymShardRun run(*cx, control, rs[s]);
      run.run(s);
    } else {
      run_plain_shard(*me, cells, weight, s, control, rs[s]);
    }
  };

  if (opts.budget > 0) {
    // A budget forces sequential shard order so the cut point, and with it
    // the partial result, is reproducible.
    std::uint64_t used = 0;
    for (int s = 0; s < shard_count; ++s) {
      // cap = 0 means unlimited, so a budget spent exactly at a shard
      // boundary must stop here rather than fall through as "no cap".
      if (used == opts.budget) {
        rs.resize(s);
        auto partial =
            std::make_shared<EbiResult>(merge_shards(shape, rs, false));
        throw resource_limit_error(
            "examined-labeling budget of " + std::to_string(opts.budget) +
                " exhausted before completing " + shape_name(shape),
            std::move(partial));
      }
      RunControl control;
      control.cap = opts.budget - used;
      control.deadline = opts.deadline;
      run_one(s, control);
      used += rs[s].examined;
      if (!rs[s].complete) {
        rs.resize(s + 1);
        auto partial = std::make_shared<EbiResult>(
            merge_shards(shape, rs, false));
        const bool out_of_time =
            opts.deadline && Clock::now() > *opts.deadline;
        throw resource_limit_error(
            out_of_time
                ? "deadline passed while enumerating " + shape_name(shape)
                : "examined-labeling budget of " +
                      std::to_string(opts.budget) +
                      " exhausted before completing " + shape_name(shape),
            std::move(partial));
      }
    }
    return merge_shards(shape, rs, true);
  }

  std::atomic<bool> stop{false};
  std::atomic<int> cursor{0};
  RunControl control;
  control.deadline = opts.deadline;
  control.stop = &stop;
  auto worker = [&]() {
    for (;;) {
      const int s = cursor.fetch_add(1, std::memory_order_relaxed);
      if (s >= shard_count) return;
      if (stop.load(std::memory_order_relaxed)) return;
      run_one(s, control);
    }
  };

  const int workers = std::min(opts.worker_chunks, shard_count);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  bool finished = true;
  for (const ShardResult& r : rs) finished = finished && r.complete;
  if (!finished) {
    auto partial = std::make_shared<EbiResult>(merge_shards(shape, rs, false));
    throw resource_limit_error(
        "deadline passed while enumerating " + shape_name(shape),
        std::move(partial));
  }
  return merge_shards(shape, rs, true);
}

void require_enumeration_limits(const Shape& shape, const SearchOptions& opts) {
  require_shape(shape);
  if (opts.worker_chunks < 1) {
    throw parameter_error("worker_chunks must be positive, got " +
                          std::to_string(opts.worker_chunks));
  }
  const long long cells = static_cast<long long>(shape.p) * shape.q;
  const int limit =
      opts.use_symmetry ? opts.symmetry_cell_limit : opts.plain_cell_limit;
  if (cells > limit) {
    throw resource_limit_error(
        shape_name(shape) + " has " + std::to_string(cells) +
        " cells, above the " + std::to_string(limit) +
        "-cell exhaustive ceiling; local_search can still probe single "
        "indices");
  }
  if (opts.use_symmetry && std::min(shape.p, shape.q) > 8) {
    throw resource_limit_error(
        "symmetry reduction permutes the smaller part, which is limited to 8 "
        "vertices; got " +
        std::to_string(std::min(shape.p, shape.q)));
  }
}

}  // namespace

EbiResult ebi_exhaustive(Shape shape, const SearchOptions& opts) {
  require_enumeration_limits(shape, opts);
  const int cells = shape.p * shape.q;
  EbiResult res = run_balanced_enumeration(shape, (cells + 1) / 2, opts);
  if (cells == 1) res.note = kSingleEdgeNote;
  return res;
}

EbiResult ebi_exhaustive_weight(Shape shape, int weight,
                                const SearchOptions& opts) {
  require_enumeration_limits(shape, opts);
  const int cells = shape.p * shape.q;
  if (weight < 0 || weight > cells) {
    throw parameter_error("weight " + std::to_string(weight) +
                          " is outside 0.." + std::to_string(cells));
  }
  if (std::abs(cells - 2 * weight) > 1) {
    throw parameter_error("weight " + std::to_string(weight) +
                          " leaves the edge labels off balance for " +
                          shape_name(shape));
  }
  return run_balanced_enumeration(shape, weight, opts);
}

Labeling canonical_form(const Labeling& labeling) {
  const Shape& s = labeling.shape();
  const int bits = std::min(s.p, s.q);
  if (bits > 8) {
    throw resource_limit_error(
        "canonical form permutes the smaller part, which is limited to 8 "
        "vertices; got " +
        std::to_string(bits));
  }
  const bool bits_are_rows = s.p <= s.q;
  const int values = bits_are_rows ? s.q : s.p;

  std::vector<std::uint16_t> tuple(values, 0);
  for (int j = 0; j < values; ++j) {
    for (int b = 0; b < bits; ++b) {
      const int r = bits_are_rows ? b : j;
      const int c = bits_are_rows ? j : b;
      if (labeling.label(r, c)) tuple[j] |= std::uint16_t(1) << b;
    }
  }

  std::vector<int> perm(bits);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint16_t> best;
  std::vector<std::uint16_t> mapped(values);
  do {
    for (int j = 0; j < values; ++j) {
      std::uint16_t m = 0;
      for (int b = 0; b < bits; ++b) {
        if (tuple[j] >> b & 1) m |= std::uint16_t(1) << perm[b];
      }
      mapped[j] = m;
    }
    std::sort(mapped.begin(), mapped.end());
    if (best.empty() || mapped < best) best = mapped;
  } while (std::next_permutation(perm.begin(), perm.end()));

  Labeling out(s);
  for (int j = 0; j < values; ++j) {
    for (int b = 0; b < bits; ++b) {
      if (best[j] >> b & 1) {
        const int r = bits_are_rows ? b : j;
        const int c = bits_are_rows ? j : b;
        out.set(r, c, 1);
      }
    }
  }
  return out;
}

CanonicalKey canonical_key(const Labeling& labeling) {
  return {serialize_labeling(canonical_form(labeling))};
}

LocalSearchResult local_search(Shape shape, int target_index,
                               const SearchOptions& opts) {
  require_shape(shape);
  if (opts.budget < 1) {
    throw parameter_error("local search needs a positive move budget");
  }
  if (target_index < 0) {
    throw parameter_error("target index cannot be negative, got " +
                          std::to_string(target_index));
  }
  const long long cells_ll = static_cast<long long>(shape.p) * shape.q;
  if (cells_ll > 16'777'216) {
    throw resource_limit_error(shape_name(shape) +
                               " exceeds the 16777216-cell limit");
  }

  LocalSearchResult res;
  res.target = target_index;
  // Parity wall: with both parts odd there are no degree ties, so the index
  // is always even.
  if (shape.p % 2 == 1 && shape.q % 2 == 1 && target_index % 2 == 1) {
    return res;
  }
  if (target_index > shape.p + shape.q) {
    return res;
  }

  const int p = shape.p;
  const int q = shape.q;
  const int cells = static_cast<int>(cells_ll);
  const int weight = (cells + 1) / 2;
  const std::uint64_t budget = opts.budget;
  std::mt19937_64 rng(opts.seed);

  std::vector<std::uint8_t> lab(cells, 0);
  std::vector<int> deg_a(p, 0);
  std::vector<int> deg_b(q, 0);
  std::vector<int> ones(weight, 0);
  std::vector<int> slot_of(cells, 0);
  std::vector<int> pool(cells, 0);
  int v0 = 0;
  int v1 = 0;

  const auto side_of = [](int deg1, int degree) {
    if (2 * deg1 > degree) return 1;
    if (2 * deg1 < degree) return -1;
    return 0;
  };
  const auto draw = [&rng](int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  };

  const auto init_state = [&]() {
    std::fill(lab.begin(), lab.end(), 0);
    std::fill(deg_a.begin(), deg_a.end(), 0);
    std::fill(deg_b.begin(), deg_b.end(), 0);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < weight; ++i) {
      const int j = i + draw(cells - i);
      std::swap(pool[i], pool[j]);
      const int cell = pool[i];
      lab[cell] = 1;
      ones[i] = cell;
      slot_of[cell] = i;
      ++deg_a[cell / q];
      ++deg_b[cell % q];
    }
    v0 = 0;
    v1 = 0;
    for (int r = 0; r < p; ++r) {
      const int s = side_of(deg_a[r], q);
      v0 += s < 0;
      v1 += s > 0;
    }
    for (int c = 0; c < q; ++c) {
      const int s = side_of(deg_b[c], p);
      v0 += s < 0;
      v1 += s > 0;
    }
  };

  const auto finish_success = [&]() {
    Labeling found(shape);
    for (int cell = 0; cell < cells; ++cell) {
      if (lab[cell]) found.set(cell / q, cell % q, 1);
    }
    const Evaluation ev = evaluate(found);
    if (!ev.edge_friendly || ev.index != target_index) {
      throw internal_error("local search bookkeeping diverged from the "
                           "evaluator at index " +
                           std::to_string(ev.index));
    }
    res.found = true;
    res.labeling = std::move(found);
  };

  const int stall_limit = 50 * (p + q);
  std::uint64_t examined = 0;

  while (examined < budget) {
    init_state();
    ++examined;
    int dist = std::abs(std::abs(v0 - v1) - target_index);
    if (dist == 0) {
      finish_success();
      res.examined = examined;
      return res;
    }
    int stall = 0;
    while (examined < budget && stall < stall_limit) {
      const int pick = ones[draw(weight)];
      const int r = pick / q;
      const int c = pick % q;
      const int row_zeros = q - deg_a[r];
      const int col_zeros = p - deg_b[c];
      ++examined;
      if (row_zeros + col_zeros == 0) {
        ++stall;
        continue;
      }

      // Choose a 0-labeled edge sharing a vertex with the picked 1-edge.
      int t = draw(row_zeros + col_zeros);
      int other = -1;
      if (t < row_zeros) {
        for (int cc = 0; cc < q; ++cc) {
          if (!lab[r * q + cc] && t-- == 0) {
            other = r * q + cc;
            break;
          }
        }
      } else {
        t -= row_zeros;
        for (int rr = 0; rr < p; ++rr) {
          if (!lab[rr * q + c] && t-- == 0) {
            other = rr * q + c;
            break;
          }
        }
      }
      if (other < 0) {
        throw internal_error("local search lost track of the zero cells");
      }

      int nv0 = v0;
      int nv1 = v1;
      const auto retally = [&](int before, int after, int degree) {
        const int sb = side_of(before, degree);
        const int sa = side_of(after, degree);
        nv0 += (sa < 0) - (sb < 0);
        nv1 += (sa > 0) - (sb > 0);
      };
      if (other / q == r) {
        const int c2 = other % q;
        retally(deg_b[c], deg_b[c] - 1, p);
        retally(deg_b[c2], deg_b[c2] + 1, p);
      } else {
        const int r2 = other / q;
        retally(deg_a[r], deg_a[r] - 1, q);
        retally(deg_a[r2], deg_a[r2] + 1, q);
      }
      const int ndist = std::abs(std::abs(nv0 - nv1) - target_index);

      if (ndist < dist || (ndist == dist && (rng() & 1u))) {
        lab[pick] = 0;
        lab[other] = 1;
        const int slot = slot_of[pick];
        ones[slot] = other;
        slot_of[other] = slot;
        --deg_a[r];
        --deg_b[c];
        ++deg_a[other / q];
        ++deg_b[other % q];
        v0 = nv0;
        v1 = nv1;
        stall = ndist < dist ? 0 : stall + 1;
        dist = ndist;
        if (dist == 0) {
          finish_success();
          res.examined = examined;
          return res;
        }
      } else {
        ++stall;
      }
    }
  }

  res.examined = examined;
  return res;
}

std::string ebi_result_to_json(const EbiResult& result) {
  nlohmann::ordered_json j;
  j["shape"]["p"] = result.shape.p;
  j["shape"]["q"] = result.shape.q;
  j["achieved"] = result.achieved;
  j["exhaustive"] = result.exhaustive;
  j["examined"] = result.examined;
  j["witnesses"] = nlohmann::ordered_json::object();
  for (const auto& [idx, lab] : result.witnesses) {
    j["witnesses"][std::to_string(idx)] = serialize_labeling(lab);
  }
  if (result.note) j["note"] = *result.note;
  return j.dump();
}

}  // namespace ebi
