#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobcheck/containment.hpp"

namespace frobcheck {

/// Process exit codes shared by scripts and subcommands.
enum ExitCode : int { kExitOk = 0, kExitExpectation = 1, kExitUsage = 2, kExitBudget = 3 };

struct SessionOptions {
  GroebnerOptions budget;
  /// 0 selects default_e_max(p).
  unsigned e_max = 0;
  std::uint64_t seed = 42;
  bool json = false;
  bool timings = false;
};

/// Interpreter for the line-oriented script language:
///
///   ring F5[x,y,z]
///   hypersurface x*y - z^2
///   ideal Q = (x, z)
///   primes Q = (x, z) [height=N] [bundle] [; (...)] [local=N]   or   primes Q = monomial
///   separator Q <index> = <poly>        separator Q auto
///   assert-fpure Q | assert-sfr Q | assert-finite-pd Q
///   symbolic Q n=N
///   check <tag> Q key=value ...
///   example <id> key=value ...          values: 5 | 5,7 | 1..3
///
/// `#` starts a comment. Reports are written as they complete.
class Session {
 public:
  explicit Session(SessionOptions options = {});

  /// Runs a whole script and returns the exit code. Errors are written to
  /// `err` with their line; execution stops at the first error.
  int run(std::istream& script, std::ostream& out, std::ostream& err);

  /// Executes one statement. Throws ParseError / InvalidArgument / Error.
  void execute(std::string_view line, std::size_t line_no, std::ostream& out);

  /// All reports produced so far.
  const std::vector<ContainmentReport>& reports() const { return reports_; }
  bool all_expectations_met() const;

 private:
  struct PrimeDecl {
    std::vector<PrimeSpec> specs;
    bool monomial = false;
    std::optional<unsigned> local_generators;
    Assertions assertions;
  };

  const AmbientRing& ambient() const;
  const QuotientIdeal& ideal(const std::string& name, std::size_t line) const;
  PrimeData prime_data(const std::string& name, std::size_t line);
  void emit(ContainmentReport report, std::ostream& out);

  void do_ring(std::string_view rest, std::size_t line, std::size_t col);
  void do_hypersurface(std::string_view rest, std::size_t line, std::size_t col);
  void do_ideal(std::string_view rest, std::size_t line, std::size_t col);
  void do_primes(std::string_view rest, std::size_t line, std::size_t col);
  void do_separator(std::string_view rest, std::size_t line, std::size_t col);
  void do_assert(const std::string& keyword, std::string_view rest, std::size_t line);
  void do_symbolic(std::string_view rest, std::size_t line, std::size_t col, std::ostream& out);
  void do_check(std::string_view rest, std::size_t line, std::size_t col, std::ostream& out);
  void do_example(std::string_view rest, std::size_t line, std::size_t col, std::ostream& out);

  SessionOptions options_;
  std::optional<AmbientRing> ambient_;
  std::map<std::string, QuotientIdeal> ideals_;
  std::map<std::string, PrimeDecl> primes_;
  std::vector<ContainmentReport> reports_;
};

/// Splits "5", "5,7" or "1..3" into values; throws InvalidArgument.
std::vector<std::int64_t> parse_value_list(std::string_view text);

/// Reads budget overrides such as "pairs=100000,terms=50000,basis=1000".
GroebnerOptions parse_budget(std::string_view text, GroebnerOptions base = {});

}  // namespace frobcheck
