#include <doctest.h>

#include <algorithm>
#include <set>

#include "lahbell/errors.hpp"
#include "lahbell/oracle.hpp"

using namespace lahbell;

TEST_CASE("counts for n = 3") {
  const auto ordered = oracle::count_ordered_partitions(3);
  CHECK(ordered.total == 13);
  CHECK(ordered.by_k == std::map<unsigned, std::uint64_t>{{1, 6}, {2, 6}, {3, 1}});
  CHECK(oracle::count_set_partitions(3).total == 5);
  CHECK(oracle::count_permutations_by_cycles(3).by_k == std::map<unsigned, std::uint64_t>{{1, 2}, {2, 3}, {3, 1}});
}

TEST_CASE("n = 0 is the single empty structure") {
  const std::map<unsigned, std::uint64_t> empty{{0, 1}};
  CHECK(oracle::count_ordered_partitions(0).by_k == empty);
  CHECK(oracle::count_set_partitions(0).by_k == empty);
  CHECK(oracle::count_permutations_by_cycles(0).by_k == empty);
}

TEST_CASE("totals") {
  CHECK(oracle::count_ordered_partitions(8).total == 394353);
  CHECK(oracle::count_set_partitions(10).total == 115975);
  CHECK(oracle::count_permutations_by_cycles(7).total == 5040);
}

TEST_CASE("ordered partitions are distinct and cover the ground set") {
  std::set<std::vector<std::vector<unsigned>>> seen;
  oracle::for_each_ordered_partition(5, [&](const oracle::OrderedSetPartition& p) {
    std::set<unsigned> elems;
    unsigned last_min = 0;
    for (const auto& b : p.blocks) {
      CHECK_FALSE(b.empty());
      unsigned m = *std::min_element(b.begin(), b.end());
      CHECK(m > last_min);
      last_min = m;
      elems.insert(b.begin(), b.end());
    }
    CHECK(elems == std::set<unsigned>{1, 2, 3, 4, 5});
    seen.insert(p.blocks);
  });
  CHECK(seen.size() == 501);
  CHECK(oracle::list_ordered_partitions(2).size() == 3);
}

TEST_CASE("enumeration bounds") {
  CHECK_THROWS_AS(oracle::count_ordered_partitions(oracle::kMaxOrderedPartitionN + 1), PreconditionError);
  CHECK_THROWS_AS(oracle::count_set_partitions(oracle::kMaxSetPartitionN + 1), PreconditionError);
  CHECK_THROWS_AS(oracle::count_permutations_by_cycles(oracle::kMaxPermutationN + 1), PreconditionError);
  CHECK_THROWS_AS(oracle::list_ordered_partitions(6), PreconditionError);
}
