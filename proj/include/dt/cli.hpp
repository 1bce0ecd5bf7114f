#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dt/dataset.hpp"

namespace dt::cli {

enum class Command { Fit, Compare, Describe, Ss, Sample, EmitPoints };
enum class Format { Csv, Markdown };

struct RunConfig {
    Command command = Command::Fit;
    std::string data;                   // bundled name or file path
    std::optional<double> scale_floor;  // preprocessing divisor for file input
    std::string method = "mle";         // fit: mle | mom | both
    std::vector<std::string> models;    // compare; empty = full in-scope set
    std::optional<double> theta;
    std::vector<double> theta_grid;
    std::vector<double> theta2_grid;  // ss columns; defaults to theta_grid
    std::string fn = "pmf";           // emit-points: pmf | cdf | hrf | ll-profile
    std::int64_t max_y = 20;
    std::int64_t n = 10;
    std::uint64_t seed = 1;
    Format format = Format::Markdown;
    int precision = 4;
    std::string out_path;  // point/sample files; empty = stdout
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitNoConvergence = 3;
inline constexpr int kExitDegenerate = 4;

// Bundled data sets: "paper-I" (24 raw counts, divided by 10000 and floored),
// "paper-I-alt" (same with the 24th raw value read as 144820 instead of
// 14482 -- the variant that reproduces the reference fits), and "paper-II"
// (39 survival times in days, used as-is).
bool is_bundled(const std::string& name);
est::Dataset bundled_dataset(const std::string& name);

// Loads a bundled dataset by name, or parses a text file of newline- or
// comma-separated numbers, applying scale-floor preprocessing if requested.
// Throws ParseError (with line number) on malformed or negative input.
est::Dataset ingest(const std::string& name_or_path, std::optional<double> scale_floor);

// Executes one command, writing results to `out` and diagnostics to `err`.
// Returns the process exit code: 0 ok, 2 parse/usage, 3 non-convergence,
// 4 degenerate data.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace dt::cli
