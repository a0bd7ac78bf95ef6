#pragma once

// Brute-force enumerators used as ground truth for small n. Nothing here
// touches the triangles or any closed form.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace lahbell::oracle {

inline constexpr unsigned kMaxOrderedPartitionN = 10;
inline constexpr unsigned kMaxSetPartitionN = 12;
inline constexpr unsigned kMaxPermutationN = 9;

/// Partition of {1..n} into nonempty internally ordered blocks. Blocks are
/// kept sorted by least element, which makes each structure unique.
struct OrderedSetPartition {
  std::vector<std::vector<unsigned>> blocks;
};

/// Counts by number of blocks (or cycles). Only nonzero entries are stored;
/// n = 0 gives {0: 1}.
struct OracleCounts {
  std::map<unsigned, std::uint64_t> by_k;
  std::uint64_t total = 0;
};

/// Calls `visit` once per ordered set partition of {1..n}.
void for_each_ordered_partition(unsigned n, const std::function<void(const OrderedSetPartition&)>& visit);

/// Throw PreconditionError above the enumeration bounds.
OracleCounts count_ordered_partitions(unsigned n);
OracleCounts count_set_partitions(unsigned n);
OracleCounts count_permutations_by_cycles(unsigned n);

/// All ordered set partitions of {1..n} for n <= 5 (debug listing).
std::vector<OrderedSetPartition> list_ordered_partitions(unsigned n);

}  // namespace lahbell::oracle
