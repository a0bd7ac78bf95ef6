#pragma once

// Executable catalog of identities. Each entry computes both sides by
// independent routes over an index range and reports the first mismatch.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lahbell {

struct Counterexample {
  std::string index;  // e.g. "n=7" or "n=5, k=2"
  std::string lhs;
  std::string rhs;
};

enum class IdentityStatus { pass, fail };

struct IdentityRecord {
  std::string id;
  std::string anchor;  // the statement being checked
  std::string description;
  unsigned range_lo = 0;
  unsigned range_hi = 0;
  IdentityStatus status = IdentityStatus::pass;
  std::optional<Counterexample> counterexample;

  bool passed() const { return status == IdentityStatus::pass; }
  std::string range() const { return std::to_string(range_lo) + ".." + std::to_string(range_hi); }
};

struct IdentityInfo {
  std::string id;
  std::string anchor;
  std::string description;
  unsigned range_lo;
  unsigned default_hi;
  bool oracle;  // only part of "all" when oracle entries are requested
};

class MultiPoly;

/// First n in lo..hi with lhs(n) != rhs(n), both sides rendered exactly.
std::optional<Counterexample> first_mismatch(unsigned lo, unsigned hi,
                                             const std::function<MultiPoly(unsigned)>& lhs,
                                             const std::function<MultiPoly(unsigned)>& rhs);

/// Catalog in canonical (report) order.
const std::vector<IdentityInfo>& identity_catalog();

/// Runs `id` over range_lo..hi. Throws UnknownNameError.
IdentityRecord run_identity(std::string_view id, unsigned hi);

/// Runs the selection ("all" expands to every non-oracle entry, plus the
/// oracle entries when include_oracle is set). Each identity's default range
/// is capped at max_n when given. Identities run concurrently; records come
/// back in catalog order. Throws UnknownNameError for an unknown id and
/// PreconditionError for max_n == 0.
std::vector<IdentityRecord> run_suite(const std::vector<std::string>& selection,
                                      std::optional<unsigned> max_n = std::nullopt,
                                      bool include_oracle = false);

}  // namespace lahbell
