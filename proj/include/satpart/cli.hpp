#ifndef SATPART_CLI_HPP
#define SATPART_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace satpart {

enum class Engine { Brute, Nd, Cw };
enum class OutputFormat { Json, Plain };

/// A fully resolved `solve` invocation.
struct SolveRequest {
    Engine engine = Engine::Brute;
    std::string instance_path;            // graph/instance file (brute, nd)
    std::string expr_path;                // c-expression file (cw)
    bool balanced = false;
    bool verify = true;                   // re-check witnesses with the oracle checker
    int brute_cap = -1;                   // -1: default / SATPART_BRUTE_CAP
    OutputFormat format = OutputFormat::Json;
};

/// Dispatches a solve request and writes the report. Exit status:
/// 0 = YES, 1 = NO, 2 = error.
int run_solve(const SolveRequest& request, std::ostream& out);

/// Full command-line entry point (argv without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satpart

#endif
