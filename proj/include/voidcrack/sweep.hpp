#ifndef VOIDCRACK_SWEEP_HPP
#define VOIDCRACK_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "voidcrack/errors.hpp"
#include "voidcrack/material.hpp"

namespace voidcrack {

enum class Problem { kPlane, kPenny };

enum class OutputFormat { kCsv, kJson };

/// Parameter sweep over the (c2, b, N) grid of one crack problem.
struct SweepConfig {
    Problem problem = Problem::kPenny;
    std::vector<double> c2_list;
    double n_start = 0.0;
    double n_stop = 0.0;
    double n_step = 0.025;
    std::vector<double> b_list;
    int n_or_m = 0;  // 0 picks the per-problem default
    double sigma0 = 1.0;
    double mu = 1.0;
    std::string output_path;  // empty = stdout
    OutputFormat format = OutputFormat::kCsv;
};

enum class RowStatus { kOk, kWarn, kError };

/// One computed sweep point.  wall_time_ms is informational and never
/// emitted (output must be byte-stable across runs).
struct SweepRow {
    std::string problem;
    double c2 = 0.0;
    double N = 0.0;
    double b = 0.0;
    double k = 0.0;
    double k0 = 0.0;
    double ratio = 0.0;
    int n_used = 0;
    double est_error = 0.0;
    RowStatus status = RowStatus::kOk;
    std::string error_message;
    double wall_time_ms = 0.0;
};

/// Default mesh sizes for single solves.
inline constexpr int kDefaultPlaneN = 400;
inline constexpr int kDefaultPennyM = 64;
/// Mesh sizes used by the shipped figure presets.
inline constexpr int kFigurePlaneN = 800;
inline constexpr int kFigurePennyM = 128;

/// Runs one solve and returns its row.  Solver errors are reported in the
/// row status rather than thrown.
SweepRow run_single(Problem problem, const CrackConfig& cfg, const PorousParams& params,
                    int n_or_m);

/// As run_single but also fills the node-wise solution profile (x_i, g_i)
/// or (xi_j, gamma_j).
SweepRow run_single_with_profile(Problem problem, const CrackConfig& cfg,
                                 const PorousParams& params, int n_or_m,
                                 std::vector<std::pair<double, double>>* profile);

/// Runs the whole grid.  Row order is deterministic (c2 outer, b middle,
/// N inner); rows are computed in a work pool capped by the
/// VOIDCRACK_THREADS environment variable.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Serializes rows as CSV (fixed header, RFC 4180 quoting, LF endings,
/// 9 significant digits) or as a JSON array with the same field names.
void emit(const std::vector<SweepRow>& rows, OutputFormat format, std::ostream& out);

/// As above but writing to a file path; throws IoError on failure.
void emit_to_path(const std::vector<SweepRow>& rows, OutputFormat format,
                  const std::string& path);

/// I/O failure (unwritable output path and similar).
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

/// Formats a double with 9 significant digits, '.' decimal separator.
std::string format_number(double v);

}  // namespace voidcrack

#endif
