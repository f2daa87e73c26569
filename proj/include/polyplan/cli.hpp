#ifndef POLYPLAN_CLI_HPP
#define POLYPLAN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polyplan::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    success = 0,
    negative = 1,         // no plan, invalid plan, unsatisfiable request
    budget_exceeded = 2,
    usage_error = 64,
    data_error = 65,      // malformed or inconsistent input files
    no_input = 66,        // an input file cannot be read
    cannot_create = 73,   // an output file cannot be written
};

// args[0] is the program name. Data goes to out, diagnostics to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}

#endif
