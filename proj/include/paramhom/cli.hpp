#ifndef PARAMHOM_CLI_HPP
#define PARAMHOM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace paramhom
{

/// Exit statuses of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_property_failure = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (without the program name) and returns its exit
/// status. Subcommands: diagram, measure, bottleneck, stability, extended,
/// validate, plot.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace paramhom

#endif
