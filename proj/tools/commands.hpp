#pragma once

// Subcommand implementations behind the `lahbell` executable. Each returns
// the full stdout payload and the exit code; usage errors (bad kind, family,
// id or format) are thrown as UnknownNameError / PreconditionError and mapped
// to exit code 2 by the caller.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lahbell/exact.hpp"
#include "lahbell/series.hpp"

namespace lahbell::cli {

enum class Format { text, json, csv };

Format parse_format(std::string_view s);

struct CommandResult {
  std::string out;
  int exit_code = 0;
};

CommandResult cmd_table(std::string_view kind, unsigned nmax, Format format);
CommandResult cmd_seq(std::string_view kind, unsigned nmax, Format format);
CommandResult cmd_poly(std::string_view family, unsigned n, Format format,
                       const std::optional<BigRational>& alpha = std::nullopt);
CommandResult cmd_gf(std::string_view name, std::size_t order, const GfParams& params, Format format);
CommandResult cmd_verify(const std::vector<std::string>& ids, std::optional<unsigned> max_n, bool oracle,
                         Format format);
CommandResult cmd_dobinski(std::string_view family, unsigned n, const BigRational& x, const BigRational& eps,
                           Format format);
/// JSON listing of every ordered set partition of {1..n}, n <= 5.
CommandResult cmd_partitions(unsigned n);

}  // namespace lahbell::cli
