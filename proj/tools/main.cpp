// lahbell: tables, sequences, polynomials, generating functions, identity
// verification and certified Dobinski evaluation.
//
// Exit codes: 0 success, 1 failed verification or unreachable precision,
// 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lahbell/errors.hpp"

namespace {

std::optional<lahbell::BigRational> opt_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return lahbell::parse_rational(s);
}

bool is_unsigned(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lahbell;
  using namespace lahbell::cli;

  CLI::App app{"Exact Lah, Stirling, Bell and Lah-Bell computations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  if (const char* env = std::getenv("LAHBELL_FORMAT")) format_name = env;
  app.add_option("--format", format_name, "Output format: text, json or csv (default from LAHBELL_FORMAT)");

  std::string kind;
  unsigned nmax = 0;
  auto* table = app.add_subcommand("table", "Rows 0..nmax of a triangle (lah, s1, s2)");
  table->add_option("kind", kind)->required();
  table->add_option("nmax", nmax)->required();

  auto* seq = app.add_subcommand("seq", "Terms 0..nmax of bell or lah_bell");
  seq->add_option("kind", kind)->required();
  seq->add_option("nmax", nmax)->required();

  std::string family;
  unsigned n = 0;
  std::string alpha_text;
  auto* poly = app.add_subcommand("poly", "A polynomial family member");
  poly->add_option("family", family)->required();
  poly->add_option("n", n)->required();
  poly->add_option("--alpha", alpha_text, "Rational alpha for laguerre (default symbolic)");

  std::string gf_name;
  std::optional<std::size_t> gf_order_pos;
  std::optional<std::size_t> gf_order_flag;
  std::string gx, gy, glambda, galpha;
  auto* gf = app.add_subcommand("gf", "EGF coefficients of a catalog generating function");
  gf->add_option("name", gf_name)->required();
  gf->add_option("order_pos", gf_order_pos, "Truncation order (same as --order)");
  gf->add_option("--order", gf_order_flag, "Truncation order (default 32)");
  gf->add_option("--x", gx);
  gf->add_option("--y", gy);
  gf->add_option("--lambda", glambda);
  gf->add_option("--alpha", galpha);

  std::vector<std::string> verify_args;
  std::optional<unsigned> max_n;
  bool oracle = false;
  std::optional<unsigned> structures;
  auto* verify = app.add_subcommand("verify", "Run the identity suite (default: all)");
  verify->add_option("ids", verify_args, "Identity ids or 'all'; a trailing integer is taken as --max-n");
  verify->add_option("--max-n", max_n, "Cap every identity's range");
  verify->add_flag("--oracle", oracle, "Include the brute-force enumeration checks");
  verify->add_option("--structures", structures, "Print the ordered set partitions of {1..N} as JSON (N <= 5)");

  std::string dob_family = "lah_bell";
  unsigned dob_n = 0;
  std::string dob_x;
  std::string dob_eps = "1e-20";
  auto* dob = app.add_subcommand("dobinski", "Certified Dobinski evaluation");
  dob->add_option("--n", dob_n)->required();
  dob->add_option("--x", dob_x, "Positive rational, e.g. 1/2")->required();
  dob->add_option("--eps", dob_eps, "Requested absolute error (default 1e-20)");
  dob->add_option("--family", dob_family, "lah_bell or bell");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Format format = parse_format(format_name);
    CommandResult result;
    if (*table) {
      result = cmd_table(kind, nmax, format);
    } else if (*seq) {
      result = cmd_seq(kind, nmax, format);
    } else if (*poly) {
      result = cmd_poly(family, n, format, opt_rational(alpha_text));
    } else if (*gf) {
      if (gf_order_pos && gf_order_flag && *gf_order_pos != *gf_order_flag) {
        throw PreconditionError("conflicting orders given");
      }
      const std::size_t order = gf_order_flag.value_or(gf_order_pos.value_or(kDefaultGfOrder));
      const GfParams params{opt_rational(gx), opt_rational(gy), opt_rational(glambda), opt_rational(galpha)};
      result = cmd_gf(gf_name, order, params, format);
    } else if (*verify) {
      if (structures) {
        result = cmd_partitions(*structures);
      } else {
        if (!verify_args.empty() && is_unsigned(verify_args.back())) {
          if (max_n) throw PreconditionError("max-n given twice");
          max_n = static_cast<unsigned>(std::stoul(verify_args.back()));
          verify_args.pop_back();
        }
        result = cmd_verify(verify_args, max_n, oracle, format);
      }
    } else if (*dob) {
      result = cmd_dobinski(dob_family, dob_n, parse_rational(dob_x), parse_rational(dob_eps), format);
    }
    std::cout << result.out;
    return result.exit_code;
  } catch (const UnknownNameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
