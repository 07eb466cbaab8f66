#ifndef STEINITZ_TOOLS_CLI_HPP
#define STEINITZ_TOOLS_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "steinitz/arith.hpp"

namespace steinitz::cli {

enum exit_code : int {
    ok = 0,
    usage = 1,
    bad_input = 2,
    ceiling = 3,
    internal = 4,
};

struct CliConfig {
    std::string subcommand;
    i64 disc = 0;
    bool json = false;

    /* wgroup */
    i64 modulus = 1;
    std::vector<i64> subgroup{1};
    std::optional<i64> bound;

    /* steinitz */
    std::string ram;
    i64 order = 1;
    bool noncyclic_two_sylow = false;

    /* exponents */
    i64 l = 3;
    i64 otau = 3;
    i64 m = 1;
    i64 n = 3;

    /* rt */
    std::string group_path;
    std::string builtin;
    std::optional<std::string> trace_path;
    bool no_dedupe = false;

    /* check */
    std::string suite = "all";
};

/*
 * Parses argv into a config. Returns the exit code to use instead when
 * parsing ends the run (help, usage errors, invalid discriminants); the
 * messages go to out / err.
 */
std::optional<int> parse_args(int argc, char const * const * argv, CliConfig & config, std::ostream & out,
                              std::ostream & err);

/* Executes a parsed config; library errors map onto exit_code. */
int run(CliConfig const & config, std::ostream & out, std::ostream & err);

int main(int argc, char const * const * argv, std::ostream & out, std::ostream & err);

/* Invariant suites behind the check subcommand; one line per suite. */
bool run_checks(std::string const & suite, i64 disc, std::ostream & out);

} // namespace steinitz::cli

#endif
