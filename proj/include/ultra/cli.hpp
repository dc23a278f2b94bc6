#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ultra/bignum.hpp"
#include "ultra/report.hpp"

// Command-line front end. Every subcommand parses its inputs, runs the
// relevant library routines, and emits exactly one JSON report on the given
// stream; the exit code summarizes the report. Commands are assertions, not
// just queries: `balls subset` asserts containment and exits 1 when the
// balls are not nested, with the falsified certificate naming the reason.
//
// Exit codes: 0 every certificate passed, 1 at least one certificate was
// falsified, 2 the command never reached a verdict (usage error, violated
// precondition, precision exhaustion, division by zero).
//
// Reports are deterministic: the same argument vector and --seed produce
// byte-identical output. Randomized sweeps derive their generators from the
// seed alone; nothing reads the clock or the environment.

namespace ultra {

// Global flags shared by all subcommands.
struct CliOptions {
    Int prime{2};
    unsigned prec = 64;
    unsigned level_cap = 1024;
    std::uint64_t seed = 0;
    std::size_t trials = 100;
};

// Runs one command (args exclude the program name) and writes its report.
int run_cli(const std::vector<std::string>& args, std::ostream& out);

// The invariant sweep behind `verify all`: one certificate per suite, each
// counting how many sampled instances satisfied the property. Suites draw
// from independent generators seeded by (seed, suite index), so the merged
// report does not depend on execution order.
Report run_verification(const CliOptions& opt);

} // namespace ultra
