#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace dunkl {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_failed = 1,  // a verification failed or the run was interrupted
  exit_usage = 2,
};

/// Runs one subcommand (verify, hbasis, kernel, bessel, lebesgue, bounds).
/// Results go to `out` unless --out names a file; diagnostics go to `err`.
/// `cancel` is polled by long sweeps; set it to stop with partial output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::atomic<bool>* cancel = nullptr);

/// "1.5,1.8" or "a:b:step" (inclusive, step > 0), or a mix separated by commas.
std::vector<double> parse_number_list(const std::string& text);

/// Reads key=value lines ('#' starts a comment) and turns them into
/// "--key value" arguments.
std::vector<std::string> config_file_args(const std::string& path);

}  // namespace dunkl
