#include "diskinterp/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "diskinterp/error.hpp"
#include "diskinterp/fatou.hpp"
#include "diskinterp/io.hpp"
#include "diskinterp/kernels.hpp"

namespace diskinterp::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::optional<std::string>& path, const std::string& text,
                  std::ostream& fallback) {
  if (!path) {
    fallback << text;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw io::ParseError("cannot write " + *path);
  out << text;
}

struct Outcome {
  Interpolant g;
  VerificationReport report;
  io::CertificateFile certificate;
};

Outcome solve(const io::ProblemSpec& spec, const BoundaryData& data) {
  Outcome o;
  o.g = iterative_interpolant(data, spec.eta, spec.n_max, spec.grid_size, spec.safety_margin);
  VerifyOptions options;
  options.grid_size = spec.grid_size;
  options.seed = spec.seed;
  o.report = verify_interpolant(o.g, data, options);
  o.certificate = io::make_certificate(spec, o.g, o.report);
  return o;
}

}  // namespace

int cmd_fatou(const std::string& peaks_path, std::size_t eval_grid,
              const std::optional<std::string>& out_path, std::ostream& out, std::ostream& err) {
  std::vector<double> peaks;
  try {
    peaks = io::parse_peaks(read_file(peaks_path));
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
  if (eval_grid == 0) {
    err << "invalid set: --eval-grid must be positive\n";
    return kValidationError;
  }
  try {
    const FatouFunction lambda = build_fatou(FiniteBoundarySet(peaks));
    const auto grid = kernels::circle_grid(eval_grid);
    std::vector<double> thetas(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) thetas[i] = grid[i];
    const auto points = kernels::grid_points(grid);
    std::vector<std::complex<double>> values(points.size());
    kernels::parallel::evaluate(points, values, lambda);
    write_output(out_path, io::grid_csv(thetas, values), out);
  } catch (const InvalidArgument& e) {
    err << "invalid set: " << e.what() << "\n";
    return kValidationError;
  } catch (const io::ParseError& e) {
    err << "io error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

int cmd_interpolate(const std::string& problem_path, const std::optional<std::string>& out_path,
                    const std::optional<std::string>& grid_out_path, std::ostream& out,
                    std::ostream& err) {
  io::ProblemSpec spec;
  try {
    spec = io::parse_problem(read_file(problem_path));
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
  std::optional<BoundaryData> data;
  try {
    data = io::validate_problem(spec);
  } catch (const io::ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  }

  Outcome o;
  try {
    o = solve(spec, *data);
  } catch (const NoContractionError& e) {
    err << "certification failure: off_arc_sup: " << e.what() << "\n";
    return kCertificationError;
  } catch (const CertificationError& e) {
    err << "certification failure: stage_bounds: " << e.what() << "\n";
    return kCertificationError;
  }

  try {
    write_output(out_path, io::serialize_certificate(o.certificate), out);
    if (grid_out_path) {
      const auto grid = kernels::circle_grid(spec.grid_size);
      std::vector<double> thetas(grid.count);
      for (std::size_t i = 0; i < grid.count; ++i) thetas[i] = grid[i];
      const auto points = kernels::grid_points(grid);
      std::vector<std::complex<double>> values(points.size());
      kernels::parallel::evaluate(points, values, o.g);
      write_output(grid_out_path, io::grid_csv(thetas, values), out);
    }
  } catch (const io::ParseError& e) {
    err << "io error: " << e.what() << "\n";
    return kParseError;
  }

  if (const auto* failed = o.report.first_failure()) {
    err << "certification failure: " << failed->name << ": measured " << failed->measured
        << " exceeds threshold " << failed->threshold << "\n";
    return kCertificationError;
  }
  return kOk;
}

int cmd_verify(const std::string& certificate_path, const std::string& problem_path,
               std::ostream& out, std::ostream& err) {
  std::string stored;
  io::CertificateFile cert;
  io::ProblemSpec spec;
  try {
    stored = read_file(certificate_path);
    cert = io::parse_certificate(stored);
    spec = io::parse_problem(read_file(problem_path));
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }
  std::optional<BoundaryData> data;
  try {
    data = io::validate_problem(spec);
  } catch (const io::ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidationError;
  }
  if (cert.seed != spec.seed) {
    err << "mismatch: seed (certificate " << cert.seed << ", problem " << spec.seed << ")\n";
    return kCertificationError;
  }

  Outcome o;
  try {
    o = solve(spec, *data);
  } catch (const std::runtime_error& e) {
    err << "mismatch: rebuild failed: " << e.what() << "\n";
    return kCertificationError;
  }
  const std::string fresh = io::serialize_certificate(o.certificate);
  if (const auto field = io::first_mismatch(stored, fresh, 1e-12); !field.empty()) {
    err << "mismatch: " << field << "\n";
    return kCertificationError;
  }
  if (fresh != stored) {
    err << "mismatch: certificate bytes differ from the reproduced certificate\n";
    return kCertificationError;
  }
  if (const auto* failed = o.report.first_failure()) {
    err << "certification failure: " << failed->name << "\n";
    return kCertificationError;
  }
  out << "verified: certificate reproduced\n";
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disk-algebra interpolation on finite boundary sets"};
  app.require_subcommand(1);

  std::string peaks_path;
  std::size_t eval_grid = 360;
  std::optional<std::string> fatou_out;
  auto* fatou = app.add_subcommand("fatou", "Tabulate the peak function of a set on the circle");
  fatou->add_option("peaks-file", peaks_path, "JSON file {\"peaks\": [theta, ...]}")->required();
  fatou->add_option("--eval-grid", eval_grid, "Number of boundary grid points");
  fatou->add_option("--out", fatou_out, "Output CSV (default: stdout)");

  std::string problem_path;
  std::optional<std::string> cert_out;
  std::optional<std::string> grid_out;
  auto* interp = app.add_subcommand("interpolate", "Build and certify an interpolant");
  interp->add_option("problem-file", problem_path, "JSON problem file")->required();
  interp->add_option("--out", cert_out, "Certificate file (default: stdout)");
  interp->add_option("--grid-out", grid_out, "Boundary grid CSV of the interpolant");

  std::string verify_cert;
  std::string verify_problem;
  auto* verify = app.add_subcommand("verify", "Reproduce a certificate from its problem");
  verify->add_option("certificate-file", verify_cert, "Certificate file")->required();
  verify->add_option("problem-file", verify_problem, "JSON problem file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kParseError;
  }

  if (*fatou) return cmd_fatou(peaks_path, eval_grid, fatou_out, out, err);
  if (*interp) return cmd_interpolate(problem_path, cert_out, grid_out, out, err);
  return cmd_verify(verify_cert, verify_problem, out, err);
}

}  // namespace diskinterp::cli
