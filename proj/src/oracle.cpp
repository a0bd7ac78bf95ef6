#include "lahbell/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lahbell/errors.hpp"

namespace lahbell::oracle {

namespace {

void check_bound(unsigned n, unsigned bound, const char* what) {
  if (n > bound) {
    throw PreconditionError(std::string(what) + ": n = " + std::to_string(n) + " exceeds enumeration bound " +
                            std::to_string(bound));
  }
}

// Element e is placed either at some position of an existing block or in a
// new block. Since elements arrive in increasing order a block's least
// element is the first one placed in it, so blocks stay sorted by least
// element and no structure is produced twice.
void place(unsigned e, unsigned n, OrderedSetPartition& part,
           const std::function<void(const OrderedSetPartition&)>& visit) {
  if (e > n) {
    visit(part);
    return;
  }
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    // Index instead of holding a reference: the recursion may grow `blocks`.
    for (std::size_t pos = 0; pos <= part.blocks[b].size(); ++pos) {
      part.blocks[b].insert(part.blocks[b].begin() + static_cast<std::ptrdiff_t>(pos), e);
      place(e + 1, n, part, visit);
      part.blocks[b].erase(part.blocks[b].begin() + static_cast<std::ptrdiff_t>(pos));
    }
  }
  part.blocks.push_back({e});
  place(e + 1, n, part, visit);
  part.blocks.pop_back();
}

// Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
void grow(unsigned i, unsigned n, unsigned blocks, OracleCounts& out) {
  if (i == n) {
    ++out.by_k[blocks];
    ++out.total;
    return;
  }
  for (unsigned b = 0; b <= blocks; ++b) grow(i + 1, n, std::max(blocks, b + 1), out);
}

}  // namespace

void for_each_ordered_partition(unsigned n, const std::function<void(const OrderedSetPartition&)>& visit) {
  check_bound(n, kMaxOrderedPartitionN, "count_ordered_partitions");
  OrderedSetPartition part;
  place(1, n, part, visit);
}

OracleCounts count_ordered_partitions(unsigned n) {
  OracleCounts out;
  for_each_ordered_partition(n, [&](const OrderedSetPartition& p) {
    ++out.by_k[static_cast<unsigned>(p.blocks.size())];
    ++out.total;
  });
  return out;
}

OracleCounts count_set_partitions(unsigned n) {
  check_bound(n, kMaxSetPartitionN, "count_set_partitions");
  OracleCounts out;
  grow(0, n, 0, out);
  return out;
}

OracleCounts count_permutations_by_cycles(unsigned n) {
  check_bound(n, kMaxPermutationN, "count_permutations_by_cycles");
  OracleCounts out;
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<char> seen(n);
  do {
    std::fill(seen.begin(), seen.end(), 0);
    unsigned cycles = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = 1;
    }
    ++out.by_k[cycles];
    ++out.total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<OrderedSetPartition> list_ordered_partitions(unsigned n) {
  check_bound(n, 5, "list_ordered_partitions");
  std::vector<OrderedSetPartition> out;
  for_each_ordered_partition(n, [&](const OrderedSetPartition& p) { out.push_back(p); });
  return out;
}

}  // namespace lahbell::oracle
