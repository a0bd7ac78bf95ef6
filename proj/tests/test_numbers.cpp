#include <doctest.h>

#include <future>
#include <vector>

#include "lahbell/numbers.hpp"
#include "lahbell/oracle.hpp"

using namespace lahbell;

TEST_CASE("small triangle rows") {
  CHECK(shared_triangle(TriangleKind::lah).row(3) == std::vector<BigInt>{0, 6, 6, 1});
  CHECK(shared_triangle(TriangleKind::stirling1_signed).row(3) == std::vector<BigInt>{0, 2, -3, 1});
  CHECK(shared_triangle(TriangleKind::stirling2).row(4) == std::vector<BigInt>{0, 1, 7, 6, 1});
  CHECK(lah(0, 0) == 1);
  CHECK(lah(4, 2) == 36);
  CHECK(lah(3, 5) == 0);
  CHECK(stirling1_signed(4, 1) == -6);
  CHECK(stirling2(5, 3) == 25);
}

TEST_CASE("row sums") {
  const std::vector<BigInt> bell{1, 1, 2, 5, 15, 52, 203, 877, 4140};
  const std::vector<BigInt> lah_bell{1, 1, 3, 13, 73, 501, 4051, 37633, 394353};
  for (unsigned n = 0; n < bell.size(); ++n) {
    CHECK(bell_number(n) == bell[n]);
    CHECK(lah_bell_number(n) == lah_bell[n]);
  }
  CHECK(lah_bell_number(20) == BigInt("327697927886085654441"));
  CHECK(bell_number(25) == BigInt("4638590332229999353"));
}

TEST_CASE("triangles agree with brute-force enumeration") {
  for (unsigned n = 0; n <= 8; ++n) {
    const auto ordered = oracle::count_ordered_partitions(n);
    const auto sets = oracle::count_set_partitions(n);
    const auto perms = oracle::count_permutations_by_cycles(n);
    for (unsigned k = 0; k <= n; ++k) {
      const auto get = [k](const oracle::OracleCounts& c) {
        const auto it = c.by_k.find(k);
        return BigInt(it == c.by_k.end() ? 0 : it->second);
      };
      CHECK(lah(n, k) == get(ordered));
      CHECK(stirling2(n, k) == get(sets));
      const BigInt s1 = stirling1_signed(n, k);
      CHECK((s1 < 0 ? BigInt(-s1) : s1) == get(perms));
    }
  }
}

TEST_CASE("closed forms match the recurrence") {
  for (unsigned n = 0; n <= 25; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(lah_closed_form(n, k) == lah(n, k));
      if (k >= 1) {
        CHECK(lah_binomial_form(n, k) == lah(n, k));
        CHECK(lah_factorial_ratio_form(n, k) == BigRational(lah(n, k)));
      }
      CHECK(lah_via_stirling(n, k) == lah(n, k));
      CHECK(stirling2_via_lah(n, k) == stirling2(n, k));
    }
  }
}

TEST_CASE("concurrent extension returns consistent rows") {
  Triangle t(TriangleKind::lah);
  std::vector<std::future<BigInt>> futures;
  for (unsigned i = 0; i < 8; ++i) {
    futures.push_back(std::async(std::launch::async, [&t, i] { return t.at(30 + i, 3); }));
  }
  for (unsigned i = 0; i < 8; ++i) CHECK(futures[i].get() == lah_closed_form(30 + i, 3));
}
