#include <doctest.h>

#include <chrono>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ebi/constructions.hpp"
#include "ebi/io.hpp"
#include "ebi/search.hpp"
#include "helpers.hpp"

using namespace ebi;
using ebi::testing::from_mask;
using ebi::testing::permuted;
using ebi::testing::random_perm;

namespace {

SearchOptions with(bool symmetry, int chunks) {
  SearchOptions opts;
  opts.use_symmetry = symmetry;
  opts.worker_chunks = chunks;
  return opts;
}

void check_witnesses(const EbiResult& res, bool expect_canonical) {
  for (const auto& [index, lab] : res.witnesses) {
    const Evaluation ev = evaluate(lab);
    REQUIRE(ev.edge_friendly);
    REQUIRE(ev.index == index);
    REQUIRE(lab.shape() == res.shape);
    if (expect_canonical) REQUIRE(canonical_form(lab) == lab);
  }
}

}  // namespace

TEST_CASE("exhaustive index sets for the smallest shapes, frozen") {
  const EbiResult k11 = ebi_exhaustive(Shape{1, 1});
  CHECK(k11.achieved == std::set<int>{2});
  CHECK(k11.examined == 1);
  CHECK(k11.exhaustive);
  REQUIRE(k11.note.has_value());
  CHECK(*k11.note ==
        "single-edge shape: no labeling uses both edge labels, so under the "
        "surjective reading the index set is empty; the reported set follows "
        "the non-surjective reading");
  CHECK(serialize_labeling(k11.witnesses.at(2)) == "1 1\n1\n");

  const EbiResult k12 = ebi_exhaustive(Shape{1, 2});
  CHECK(k12.achieved == std::set<int>{0});
  CHECK(k12.examined == 2);
  CHECK_FALSE(k12.note.has_value());
  CHECK(serialize_labeling(k12.witnesses.at(0)) == "1 2\n01\n");

  const EbiResult k22 = ebi_exhaustive(Shape{2, 2});
  CHECK(k22.achieved == std::set<int>{0});
  CHECK(k22.examined == 6);
  CHECK(serialize_labeling(k22.witnesses.at(0)) == "2 2\n00\n11\n");

  const EbiResult k23 = ebi_exhaustive(Shape{2, 3});
  CHECK(k23.achieved == std::set<int>{0});
  CHECK(k23.examined == 20);
  CHECK(serialize_labeling(k23.witnesses.at(0)) == "2 3\n000\n111\n");

  const EbiResult k33 = ebi_exhaustive(Shape{3, 3});
  CHECK(k33.achieved == std::set<int>{0, 2});
  CHECK(k33.examined == 126);
  CHECK(serialize_labeling(k33.witnesses.at(0)) == "3 3\n001\n010\n111\n");
  CHECK(serialize_labeling(k33.witnesses.at(2)) == "3 3\n000\n011\n111\n");
  CHECK(k33.achieved == claimed_ebi(Family::square_odd, 3));
}

// The recorded claim for K_{3,5} is {0, 2}; enumeration finds a third index
// whose witness is short enough to check by hand: e0 = 7, e1 = 8, row 0 and
// column 0 land in the zero class, everything else in the one class.
TEST_CASE("K_{3,5} achieves index 4, contradicting the recorded claim") {
  const EbiResult res = ebi_exhaustive(Shape{3, 5});
  CHECK(res.achieved == std::set<int>{0, 2, 4});
  CHECK(res.examined == 6435);
  CHECK(res.exhaustive);
  CHECK(serialize_labeling(res.witnesses.at(0)) == "3 5\n00001\n00110\n11111\n");
  CHECK(serialize_labeling(res.witnesses.at(2)) == "3 5\n00000\n00111\n11111\n");
  CHECK(serialize_labeling(res.witnesses.at(4)) == "3 5\n00000\n01111\n01111\n");

  const Evaluation four = evaluate(res.witnesses.at(4));
  CHECK(four.e0 == 7);
  CHECK(four.e1 == 8);
  CHECK(four.v0 == 2);
  CHECK(four.v1 == 6);
  CHECK(four.index == 4);
  CHECK(four.edge_friendly);
}

// The even-square closed form gives {0} at n = 4; the true set is {0, 1, 2}.
TEST_CASE("K_{4,4} achieves indices beyond the recorded even-square form") {
  const EbiResult res = ebi_exhaustive(Shape{4, 4});
  CHECK(res.achieved == std::set<int>{0, 1, 2});
  CHECK(res.examined == 12870);
  CHECK(res.achieved != claimed_ebi(Family::square_even, 4));
  check_witnesses(res, false);
}

// The two-diff closed form tops out at 2n-8 = 6 for n = 7; enumeration up to
// row/column symmetry shows index 8 is also reachable, so the recorded
// maximum is short by one step. The witness pins the counterexample.
TEST_CASE("K_{7,5} achieves index 8 above the recorded two-diff maximum") {
  const EbiResult res = ebi_exhaustive(Shape{7, 5}, with(true, 1));
  CHECK(res.achieved == std::set<int>{0, 2, 4, 6, 8});
  CHECK(res.examined == 16063);
  CHECK(res.exhaustive);

  std::set<int> expected = claimed_ebi(Family::two_diff, 7);
  expected.insert(8);
  CHECK(res.achieved == expected);

  const Labeling eight = parse_labeling(
      "5 7\n1111100\n0111110\n1110010\n1001110\n0000000\n");
  const Evaluation ev = evaluate(eight);
  CHECK(ev.e0 == 17);
  CHECK(ev.e1 == 18);
  CHECK(ev.v0 == 2);
  CHECK(ev.v1 == 10);
  CHECK(ev.index == 8);
  CHECK(ev.edge_friendly);
}

TEST_CASE("the odd-square form holds at n = 5") {
  const EbiResult res = ebi_exhaustive(Shape{5, 5}, with(true, 1));
  CHECK(res.achieved == claimed_ebi(Family::square_odd, 5));
  CHECK(res.exhaustive);
  check_witnesses(res, true);
}

TEST_CASE("fixed-weight runs agree with the folded enumeration") {
  const EbiResult w7 = ebi_exhaustive_weight(Shape{3, 5}, 7);
  const EbiResult w8 = ebi_exhaustive_weight(Shape{3, 5}, 8);
  CHECK(w7.examined == 6435);
  CHECK(w8.examined == 6435);
  CHECK(w7.achieved == w8.achieved);
  CHECK(w7.achieved == ebi_exhaustive(Shape{3, 5}).achieved);

  CHECK(ebi_exhaustive_weight(Shape{3, 3}, 4).achieved ==
        ebi_exhaustive_weight(Shape{3, 3}, 5).achieved);
  CHECK(ebi_exhaustive_weight(Shape{2, 2}, 2).examined == 6);

  CHECK_THROWS_AS(ebi_exhaustive_weight(Shape{3, 3}, 3), parameter_error);
  CHECK_THROWS_AS(ebi_exhaustive_weight(Shape{2, 2}, 1), parameter_error);
  CHECK_THROWS_AS(ebi_exhaustive_weight(Shape{2, 2}, -1), parameter_error);
  CHECK_THROWS_AS(ebi_exhaustive_weight(Shape{2, 2}, 5), parameter_error);
}

TEST_CASE("the achieved set is independent of chunking and symmetry") {
  for (const Shape shape : {Shape{2, 3}, Shape{3, 3}, Shape{3, 4}, Shape{2, 5},
                            Shape{4, 4}, Shape{3, 5}, Shape{2, 2},
                            Shape{1, 5}}) {
    for (const bool symmetry : {false, true}) {
      const EbiResult one = ebi_exhaustive(shape, with(symmetry, 1));
      check_witnesses(one, symmetry);
      const std::string baseline = ebi_result_to_json(one);
      for (const int chunks : {2, 8}) {
        const EbiResult more = ebi_exhaustive(shape, with(symmetry, chunks));
        REQUIRE(ebi_result_to_json(more) == baseline);
      }
    }
    REQUIRE(ebi_exhaustive(shape, with(false, 1)).achieved ==
            ebi_exhaustive(shape, with(true, 1)).achieved);
  }
}

TEST_CASE("a budget interrupts deterministically with a partial result") {
  SearchOptions opts;
  opts.budget = 50;
  std::string first;
  for (int run = 0; run < 2; ++run) {
    try {
      ebi_exhaustive(Shape{3, 3}, opts);
      FAIL("expected resource_limit_error");
    } catch (const resource_limit_error& e) {
      REQUIRE(e.partial() != nullptr);
      CHECK(e.partial()->examined == 50);
      CHECK_FALSE(e.partial()->exhaustive);
      CHECK(std::string(e.what()).find("budget") != std::string::npos);
      for (int idx : e.partial()->achieved) {
        CHECK(std::set<int>{0, 2}.count(idx) == 1);
      }
      const std::string body = ebi_result_to_json(*e.partial());
      if (run == 0) {
        first = body;
      } else {
        CHECK(body == first);
      }
    }
  }

  // Requesting many chunks cannot change the cut point.
  SearchOptions wide = opts;
  wide.worker_chunks = 8;
  try {
    ebi_exhaustive(Shape{3, 3}, wide);
    FAIL("expected resource_limit_error");
  } catch (const resource_limit_error& e) {
    REQUIRE(e.partial() != nullptr);
    CHECK(ebi_result_to_json(*e.partial()) == first);
  }
}

TEST_CASE("a budget equal to the space size completes the run") {
  SearchOptions opts;
  opts.budget = 6;
  const EbiResult res = ebi_exhaustive(Shape{2, 2}, opts);
  CHECK(res.exhaustive);
  CHECK(res.examined == 6);

  opts.budget = 5;
  CHECK_THROWS_AS(ebi_exhaustive(Shape{2, 2}, opts), resource_limit_error);
}

TEST_CASE("an expired deadline interrupts with a partial result") {
  SearchOptions opts;
  opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  try {
    ebi_exhaustive(Shape{4, 4}, opts);
    FAIL("expected resource_limit_error");
  } catch (const resource_limit_error& e) {
    REQUIRE(e.partial() != nullptr);
    CHECK_FALSE(e.partial()->exhaustive);
    CHECK(e.partial()->examined < 12870);
    CHECK(std::string(e.what()).find("deadline") != std::string::npos);
  }
}

TEST_CASE("shapes beyond the ceilings are refused up front") {
  try {
    ebi_exhaustive(Shape{2, 13});
    FAIL("expected resource_limit_error");
  } catch (const resource_limit_error& e) {
    CHECK(e.partial() == nullptr);
    CHECK(std::string(e.what()).find("local_search") != std::string::npos);
  }
  CHECK_THROWS_AS(ebi_exhaustive(Shape{6, 6}, with(true, 1)),
                  resource_limit_error);
  // 30 cells pass the symmetric ceiling even though the plain one refuses.
  CHECK(ebi_exhaustive(Shape{6, 5}, with(true, 1)).exhaustive);
  CHECK_THROWS_AS(ebi_exhaustive(Shape{3, 3}, with(false, 0)),
                  parameter_error);
}

// The canonical order: pack each larger-side vertex's incident labels into
// an integer (bit b = smaller-side vertex b) and sort the integers. The
// canonical form minimizes this tuple over smaller-side permutations.
std::vector<std::uint16_t> sorted_codes(const Labeling& lab) {
  const Shape s = lab.shape();
  const bool bits_are_rows = s.p <= s.q;
  const int bits = bits_are_rows ? s.p : s.q;
  const int values = bits_are_rows ? s.q : s.p;
  std::vector<std::uint16_t> tuple(values, 0);
  for (int j = 0; j < values; ++j) {
    for (int b = 0; b < bits; ++b) {
      const int label =
          bits_are_rows ? lab.label(b, j) : lab.label(j, b);
      if (label != 0) tuple[j] |= static_cast<std::uint16_t>(1) << b;
    }
  }
  std::sort(tuple.begin(), tuple.end());
  return tuple;
}

TEST_CASE("canonical keys are orbit invariants") {
  std::mt19937_64 rng(4242);
  const Shape shape{3, 4};
  for (int trial = 0; trial < 100; ++trial) {
    const auto mask =
        static_cast<std::uint32_t>(rng() & ((1u << shape.cells()) - 1));
    const Labeling lab = from_mask(shape, mask);
    const CanonicalKey key = canonical_key(lab);
    const Labeling canon = canonical_form(lab);
    CHECK(canonical_form(canon) == canon);
    CHECK(canonical_key(canon) == key);
    CHECK(serialize_labeling(canon) == key.bytes);
    // Same multiset of incidence codes up to bit order, so the orbit is
    // preserved, and the canonical tuple is minimal over the orbit.
    CHECK(evaluate(canon).index == evaluate(lab).index);
    CHECK(sorted_codes(canon) <= sorted_codes(lab));
    for (int reps = 0; reps < 4; ++reps) {
      const Labeling moved = permuted(lab, random_perm(shape.p, rng),
                                      random_perm(shape.q, rng));
      CHECK(canonical_key(moved) == key);
      CHECK(sorted_codes(canon) <= sorted_codes(moved));
    }
  }
  CHECK(canonical_key(fixture_k35('a')) != canonical_key(fixture_k35('b')));
  CHECK_THROWS_AS(canonical_form(Labeling(Shape{9, 9})), resource_limit_error);
}

TEST_CASE("canonical keys partition small shapes into the right orbit counts") {
  // Orbit counts under row x column permutations: 7 for K_{2,2} (group of
  // order 4 on 16 labelings), 13 for K_{2,3} (order 12 on 64).
  std::set<std::string> keys22;
  std::set<std::string> keys22_balanced;
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    const Labeling lab = from_mask(Shape{2, 2}, mask);
    keys22.insert(canonical_key(lab).bytes);
    if (evaluate(lab).edge_friendly && evaluate(lab).e1 == 2) {
      keys22_balanced.insert(canonical_key(lab).bytes);
    }
  }
  CHECK(keys22.size() == 7);
  CHECK(keys22_balanced.size() == 3);
  CHECK(ebi_exhaustive(Shape{2, 2}, with(true, 1)).examined == 3);

  std::set<std::string> keys23;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    keys23.insert(canonical_key(from_mask(Shape{2, 3}, mask)).bytes);
  }
  CHECK(keys23.size() == 13);
}

TEST_CASE("local search reaches every index the oracle certifies") {
  SearchOptions opts;
  opts.budget = 1'000'000;
  opts.seed = 1;
  for (const int target : {0, 2, 4}) {
    const LocalSearchResult res = local_search(Shape{3, 5}, target, opts);
    REQUIRE(res.found);
    REQUIRE(res.labeling.has_value());
    const Evaluation ev = evaluate(*res.labeling);
    CHECK(ev.edge_friendly);
    CHECK(ev.index == target);
    CHECK(res.examined >= 1);
    CHECK(res.examined <= opts.budget);
  }
}

// Hill climbing independently rediscovers the index-8 labeling of K_{7,5}
// that the recorded two-diff maximum says should not exist.
TEST_CASE("local search confirms index 8 on K_{7,5}") {
  SearchOptions opts;
  opts.budget = 1'000'000;
  opts.seed = 1;
  const LocalSearchResult res = local_search(Shape{7, 5}, 8, opts);
  REQUIRE(res.found);
  CHECK(evaluate(*res.labeling).index == 8);
}

TEST_CASE("local search is deterministic for a fixed seed") {
  SearchOptions opts;
  opts.budget = 100'000;
  opts.seed = 42;
  const LocalSearchResult first = local_search(Shape{3, 5}, 2, opts);
  const LocalSearchResult second = local_search(Shape{3, 5}, 2, opts);
  REQUIRE(first.found);
  REQUIRE(second.found);
  CHECK(first.examined == second.examined);
  CHECK(serialize_labeling(*first.labeling) ==
        serialize_labeling(*second.labeling));
}

TEST_CASE("local search walls: parity, range, and exhausted budgets") {
  SearchOptions opts;
  opts.budget = 20'000;
  opts.seed = 3;

  const LocalSearchResult odd = local_search(Shape{3, 5}, 1, opts);
  CHECK_FALSE(odd.found);
  CHECK(odd.examined == 0);

  const LocalSearchResult far = local_search(Shape{3, 5}, 9, opts);
  CHECK_FALSE(far.found);
  CHECK(far.examined == 0);

  // Index 4 is not achievable on K_{3,3}; the budget must be spent exactly.
  const LocalSearchResult miss = local_search(Shape{3, 3}, 4, opts);
  CHECK_FALSE(miss.found);
  CHECK(miss.examined == 20'000);
  CHECK_FALSE(miss.labeling.has_value());

  SearchOptions bad = opts;
  bad.budget = 0;
  CHECK_THROWS_AS(local_search(Shape{3, 5}, 2, bad), parameter_error);
  CHECK_THROWS_AS(local_search(Shape{3, 5}, -1, opts), parameter_error);
  CHECK_THROWS_AS(local_search(Shape{4097, 4097}, 0, opts),
                  resource_limit_error);
}

TEST_CASE("ebi_result_to_json carries the shape, sets, and witnesses") {
  const EbiResult res = ebi_exhaustive(Shape{2, 2});
  CHECK(ebi_result_to_json(res) ==
        R"({"shape":{"p":2,"q":2},"achieved":[0],"exhaustive":true,)"
        R"("examined":6,"witnesses":{"0":"2 2\n00\n11\n"}})");
}
