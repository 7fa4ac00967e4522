#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace diskinterp::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kValidationError = 3,
  kCertificationError = 4,
};

/// Boundary table of the peak function of the set in `peaks_path`.
int cmd_fatou(const std::string& peaks_path, std::size_t eval_grid,
              const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err);

/// Full pipeline plus audit; writes the certificate and optionally the
/// boundary grid of g.
int cmd_interpolate(const std::string& problem_path, const std::optional<std::string>& out_path,
                    const std::optional<std::string>& grid_out_path, std::ostream& out,
                    std::ostream& err);

/// Rebuilds from the problem and compares against the stored certificate.
int cmd_verify(const std::string& certificate_path, const std::string& problem_path,
               std::ostream& out, std::ostream& err);

/// Subcommand dispatch: fatou, interpolate, verify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diskinterp::cli
