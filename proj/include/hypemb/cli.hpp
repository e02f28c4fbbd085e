#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace hypemb {

namespace exit_code {
    inline constexpr int yes = 0;
    inline constexpr int no = 1;
    inline constexpr int unknown = 2;
    inline constexpr int usage = 64;
}

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

/// Parses "3,2,2" into integers. Throws Error(Parse) on anything else.
auto parse_int_list(const std::string & text) -> std::vector<std::int64_t>;

}  // namespace hypemb
