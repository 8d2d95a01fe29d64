#pragma once

#include "ssy/execution.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ssy {

inline constexpr int kCsvSchemaVersion = 1;

// Fixed CSV column order of a sweep row.
const std::vector<std::string>& report_columns();

// Grid sweep over dimensions and an evenly spaced q-range.
struct SweepSpec {
    std::vector<int> n_values;
    double q_min = 0.0;
    double q_max = 0.0;
    int steps = 2;
    std::vector<std::string> outputs;  // column subset; empty means all

    // Throws std::invalid_argument on an unusable spec.
    void validate() const;
    // q_k = q_min + k (q_max - q_min) / (steps - 1).
    [[nodiscard]] double q_at(int k) const;
};

struct ReportRow {
    int n = 0;
    double q = 0.0;
    bool ok = false;
    std::string error;
    double A = 0, C1 = 0, C3 = 0, CY = 0, C3H = 0, CH = 0, ratio = 0, ratio_root = 0;
    std::optional<double> f_bound;  // only defined for 0 < q < 1
    double delta = 0, C0 = 0, B0 = 0, calC1 = 0, calC2 = 0;
};

ReportRow evaluate_row(int n, double q);

// Rows ordered by (n index, q index). Both kernels give identical rows.
std::vector<ReportRow> sweep_rows(const SweepSpec& spec, Execution execution);

// Schema line, header row, then one line per row. Numbers use 17
// significant digits; numeric cells are empty on domain_error rows.
void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<ReportRow>& rows);

// %.17g formatting so binary64 values round-trip.
std::string format_number(double value);

// Grid for the binary64 vs extended-precision cross-check.
struct OracleGrid {
    std::vector<int> n_values;
    int steps = 0;                            // interior points per n on (0, sqrt(2/n))
    std::vector<double> boundary_gaps;        // extra points with A(n,q) close to these values
};

OracleGrid default_oracle_grid();

struct OracleDeviation {
    std::string field;
    int n = 0;
    double q = 0.0;
    double deviation = 0.0;
};

struct OracleReport {
    std::size_t regular_points = 0;
    std::size_t boundary_points = 0;          // points with A < kBoundaryGap
    OracleDeviation worst_regular;
    OracleDeviation worst_boundary;
    bool passed = false;
};

inline constexpr double kBoundaryGap = 1e-6;
inline constexpr double kRegularTolerance = 1e-12;
inline constexpr double kBoundaryTolerance = 1e-9;

// Throws std::invalid_argument on an empty grid.
OracleReport oracle_check(const OracleGrid& grid, Execution execution);

} // namespace ssy
