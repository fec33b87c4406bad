#ifndef DICHROMA_CLI_HPP
#define DICHROMA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dichroma::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_usage = 2;
    inline constexpr int exit_budget = 3;
    inline constexpr int exit_violation = 4;

    /// Runs one command line (without the program name). Graph inputs named
    /// "-" (or omitted, where optional) are read from `in`.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
