#include "ssy/report.hpp"

#include "ssy/cmc_constants.hpp"
#include "ssy/errors.hpp"
#include "ssy/extended_reference.hpp"
#include "ssy/minimal_constants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ssy {

const std::vector<std::string>& report_columns()
{
    static const std::vector<std::string> columns{
        "n", "q", "A", "C1", "C3", "CY", "C3H", "CH", "ratio", "ratio_root", "f_bound",
        "delta", "C0", "B0", "calC1", "calC2", "status",
    };
    return columns;
}

void SweepSpec::validate() const
{
    if (n_values.empty()) {
        throw std::invalid_argument("sweep needs at least one dimension");
    }
    for (const int n : n_values) {
        if (n < 2) {
            throw std::invalid_argument("sweep dimensions must be >= 2");
        }
    }
    if (steps < 2) {
        throw std::invalid_argument("sweep needs steps >= 2");
    }
    if (!std::isfinite(q_min) || !std::isfinite(q_max) || !(q_min < q_max)) {
        throw std::invalid_argument("sweep needs finite q_min < q_max");
    }
    if (q_min < 0.0) {
        throw std::invalid_argument("sweep needs q_min >= 0");
    }
    const auto& cols = report_columns();
    for (const auto& c : outputs) {
        if (std::find(cols.begin(), cols.end(), c) == cols.end()) {
            throw std::invalid_argument("unknown sweep column '" + c + "'");
        }
    }
}

double SweepSpec::q_at(int k) const
{
    return q_min + (q_max - q_min) * k / (steps - 1);
}

std::string format_number(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

ReportRow evaluate_row(int n, double q)
{
    ReportRow row;
    row.n = n;
    row.q = q;
    try {
        const ParamPoint p{n, q};
        const auto m = minimal_bundle(p);
        const auto c = cmc_bundle(p);
        row.A = m.A;
        row.C1 = m.C1;
        row.C3 = m.C3;
        row.CY = m.CY;
        row.C3H = m.C3H;
        row.CH = m.CH;
        row.ratio = m.ratio;
        row.ratio_root = m.ratio_root;
        if (q > 0.0 && q < 1.0) {
            row.f_bound = f_bound(q);
        }
        row.delta = c.delta;
        row.C0 = c.C0;
        row.B0 = c.B0;
        row.calC1 = c.calC1;
        row.calC2 = c.calC2;
        row.ok = true;
    } catch (const DomainError& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

std::vector<ReportRow> sweep_rows(const SweepSpec& spec, Execution execution)
{
    spec.validate();
    const auto per_n = static_cast<std::size_t>(spec.steps);
    const std::size_t total = spec.n_values.size() * per_n;
    std::vector<ReportRow> rows(total);
    auto fill = [&](std::size_t i) {
        const int n = spec.n_values[i / per_n];
        rows[i] = evaluate_row(n, spec.q_at(static_cast<int>(i % per_n)));
    };
    const auto count = static_cast<std::ptrdiff_t>(total);
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            fill(static_cast<std::size_t>(i));
        }
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            fill(static_cast<std::size_t>(i));
        }
    }
    return rows;
}

namespace {

std::string cell(const ReportRow& row, const std::string& column)
{
    if (column == "n") {
        return std::to_string(row.n);
    }
    if (column == "q") {
        return format_number(row.q);
    }
    if (column == "status") {
        return row.ok ? "ok" : "domain_error";
    }
    if (!row.ok) {
        return {};
    }
    if (column == "A") return format_number(row.A);
    if (column == "C1") return format_number(row.C1);
    if (column == "C3") return format_number(row.C3);
    if (column == "CY") return format_number(row.CY);
    if (column == "C3H") return format_number(row.C3H);
    if (column == "CH") return format_number(row.CH);
    if (column == "ratio") return format_number(row.ratio);
    if (column == "ratio_root") return format_number(row.ratio_root);
    if (column == "f_bound") return row.f_bound ? format_number(*row.f_bound) : std::string{};
    if (column == "delta") return format_number(row.delta);
    if (column == "C0") return format_number(row.C0);
    if (column == "B0") return format_number(row.B0);
    if (column == "calC1") return format_number(row.calC1);
    if (column == "calC2") return format_number(row.calC2);
    throw std::invalid_argument("unknown sweep column '" + column + "'");
}

} // namespace

void write_sweep_csv(std::ostream& out, const SweepSpec& spec, const std::vector<ReportRow>& rows)
{
    // Selected columns keep the canonical order.
    std::vector<std::string> columns;
    for (const auto& c : report_columns()) {
        if (spec.outputs.empty() || std::find(spec.outputs.begin(), spec.outputs.end(), c) != spec.outputs.end()) {
            columns.push_back(c);
        }
    }
    out << "# schema_version=" << kCsvSchemaVersion << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out << (i ? "," : "") << columns[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            out << (i ? "," : "") << cell(row, columns[i]);
        }
        out << '\n';
    }
}

OracleGrid default_oracle_grid()
{
    OracleGrid grid;
    for (int n = 2; n <= 12; ++n) {
        grid.n_values.push_back(n);
    }
    grid.steps = 64;
    grid.boundary_gaps = {1e-3, 1e-5, 1e-7, 1e-8};
    return grid;
}

namespace {

struct OraclePoint {
    int n;
    double q;
};

using reference::Real;

double relative(double value, const Real& exact, const Real& scale)
{
    const Real denom = scale > 0 ? scale : Real(1);
    const Real diff = Real(value) - exact;
    return static_cast<double>((diff < 0 ? -diff : diff) / denom);
}

Real magnitude(const Real& x)
{
    return x < 0 ? Real(-x) : x;
}

// Largest deviation over all fields at one point; fields that are
// differences of terms are normalized by their largest summand.
OracleDeviation compare_point(const OraclePoint& pt, bool& boundary)
{
    const ParamPoint p{pt.n, pt.q};
    const auto m = minimal_bundle(p);
    const auto c = cmc_bundle(p);
    const auto r = reference::evaluate(pt.n, pt.q);
    boundary = r.A < Real(kBoundaryGap);

    OracleDeviation worst{"", pt.n, pt.q, 0.0};
    auto check = [&](const char* field, double value, const Real& exact, const Real& scale) {
        const double dev = relative(value, exact, scale);
        if (!(dev <= worst.deviation)) {
            worst.field = field;
            worst.deviation = dev;
        }
    };
    check("A", m.A, r.A, magnitude(r.A));
    check("C1", m.C1, r.C1, r.C1);
    check("C3", m.C3, r.C3, r.C3);
    check("CY", m.CY, r.CY, r.CY);
    check("C3H", m.C3H, r.C3H, r.C3H);
    check("CH", m.CH, r.CH, r.CH);
    check("ratio", m.ratio, r.ratio, r.ratio);
    check("ratio_root", m.ratio_root, r.ratio_root, r.ratio_root);
    if (pt.q > 0.0 && pt.q < 1.0) {
        check("f_bound", f_bound(pt.q), r.f_bound, r.f_bound);
    }
    check("delta", c.delta, r.delta, r.delta);
    check("C0", c.C0, r.C0, r.C0);
    check("B0_raw", c.B0_raw, r.B0_raw, r.B0_scale);
    check("B0", c.B0, r.B0, r.B0_scale);
    check("a", c.a, r.a, r.a);
    check("b", c.b, r.b, r.b_scale);
    check("calC1", c.calC1, r.calC1, r.calC1);
    check("calC2", c.calC2, r.calC2, r.calC2_scale);
    return worst;
}

} // namespace

OracleReport oracle_check(const OracleGrid& grid, Execution execution)
{
    std::vector<OraclePoint> points;
    for (const int n : grid.n_values) {
        if (n < 2) {
            throw std::invalid_argument("oracle grid dimensions must be >= 2");
        }
        const double edge = std::sqrt(2.0 / n);
        for (int k = 0; k < grid.steps; ++k) {
            points.push_back({n, edge * k / grid.steps});
        }
        for (const double g : grid.boundary_gaps) {
            if (g > 0.0 && g < 2.0 / n) {
                points.push_back({n, std::sqrt(2.0 / n - g)});
            }
        }
    }
    if (points.empty()) {
        throw std::invalid_argument("oracle grid is empty");
    }

    std::vector<OracleDeviation> devs(points.size());
    std::vector<char> is_boundary(points.size(), 0);
    const auto count = static_cast<std::ptrdiff_t>(points.size());
    auto run = [&](std::ptrdiff_t i) {
        bool boundary = false;
        devs[i] = compare_point(points[i], boundary);
        is_boundary[i] = boundary ? 1 : 0;
    };
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            run(i);
        }
    } else {
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            run(i);
        }
    }

    OracleReport report;
    for (std::size_t i = 0; i < points.size(); ++i) {
        OracleDeviation& slot = is_boundary[i] ? report.worst_boundary : report.worst_regular;
        (is_boundary[i] ? report.boundary_points : report.regular_points) += 1;
        if (devs[i].deviation > slot.deviation || slot.field.empty()) {
            slot = devs[i];
        }
    }
    report.passed = report.worst_regular.deviation < kRegularTolerance &&
                    report.worst_boundary.deviation < kBoundaryTolerance;
    return report;
}

} // namespace ssy
