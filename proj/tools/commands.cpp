#include "commands.hpp"

#include "ssy/certifier.hpp"
#include "ssy/cmc_constants.hpp"
#include "ssy/errors.hpp"
#include "ssy/minimal_constants.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace ssy::cli {

namespace {

using json = nlohmann::ordered_json;

// Ordered key/value rows rendered as text, CSV or JSON.
class Table {
public:
    void begin_row() { rows_.emplace_back(); }

    void set(const std::string& key, double value) { put(key, format_number(value), json(value)); }
    void set(const std::string& key, int value) { put(key, std::to_string(value), json(value)); }
    void set(const std::string& key, std::size_t value) { put(key, std::to_string(value), json(value)); }
    void set(const std::string& key, bool value) { put(key, value ? "true" : "false", json(value)); }
    void set(const std::string& key, const std::string& value) { put(key, value, json(value)); }
    void set(const std::string& key, const char* value) { set(key, std::string(value)); }

    void print(std::ostream& out, Format format) const
    {
        switch (format) {
        case Format::Text:
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (r) {
                    out << '\n';
                }
                for (const auto& [key, text, value] : rows_[r]) {
                    out << key << ": " << text << '\n';
                }
            }
            break;
        case Format::Csv:
            if (rows_.empty()) {
                return;
            }
            for (std::size_t i = 0; i < rows_.front().size(); ++i) {
                out << (i ? "," : "") << std::get<0>(rows_.front()[i]);
            }
            out << '\n';
            for (const auto& row : rows_) {
                for (std::size_t i = 0; i < row.size(); ++i) {
                    out << (i ? "," : "") << std::get<1>(row[i]);
                }
                out << '\n';
            }
            break;
        case Format::Structured: {
            const json doc = to_json();
            out << (doc.size() == 1 ? doc.front() : doc).dump(2) << '\n';
            break;
        }
        }
    }

    [[nodiscard]] json to_json() const
    {
        json doc = json::array();
        for (const auto& row : rows_) {
            json obj = json::object();
            for (const auto& [key, text, value] : row) {
                obj[key] = value;
            }
            doc.push_back(std::move(obj));
        }
        return doc;
    }

private:
    void put(const std::string& key, std::string text, json value)
    {
        if (rows_.empty()) {
            begin_row();
        }
        rows_.back().emplace_back(key, std::move(text), std::move(value));
    }

    std::vector<std::vector<std::tuple<std::string, std::string, json>>> rows_;
};

std::string n_list_string(const std::vector<int>& ns)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        out << (i ? "," : "") << ns[i];
    }
    return out.str();
}

void add_minimal(Table& t, const ConstantBundle& b)
{
    t.set("n", b.point.n);
    t.set("q", b.point.q);
    t.set("A", b.A);
    t.set("C1", b.C1);
    t.set("C3", b.C3);
    t.set("CY", b.CY);
    t.set("C3H", b.C3H);
    t.set("CH", b.CH);
    t.set("ratio", b.ratio);
    t.set("ratio_root", b.ratio_root);
    if (b.point.q > 0.0 && b.point.q < 1.0) {
        t.set("f_bound", f_bound(b.point.q));
    }
    t.set("holder_beats_young", b.CH < b.CY);
}

void add_cmc(Table& t, const CmcConstantBundle& c)
{
    t.set("delta", c.delta);
    t.set("C0", c.C0);
    t.set("B0_raw", c.B0_raw);
    t.set("B0", c.B0);
    t.set("a", c.a);
    t.set("b", c.b);
    t.set("calC1", c.calC1);
    t.set("calC2", c.calC2);
}

void add_local(Table& t, const CmcScale& s, const LocalEstimate& e, double theta)
{
    t.set("H", s.H);
    t.set("R", s.R);
    t.set("theta", s.theta);
    t.set("gradient_coefficient", e.gradient_coefficient);
    t.set("curvature_coefficient", e.curvature_coefficient);
    t.set("combined_small_scale", e.combined_small_scale);
    t.set("regime", to_string(e.regime));
    const double radius = threshold_radius(s.H, theta);
    if (std::isinf(radius)) {
        t.set("threshold_radius", "inf");
    } else {
        t.set("threshold_radius", radius);
    }
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

int parse_int(const std::string& s)
{
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
    return v;
}

double parse_double(const std::string& s)
{
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return v;
}

// Runs a command body, mapping library errors onto exit codes.
template <class Fn>
int guarded(std::ostream& err, Fn&& body)
{
    try {
        return body();
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageOrDomain;
    } catch (const FeasibilityError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageOrDomain;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageOrDomain;
    } catch (const std::out_of_range& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageOrDomain;
    }
}

} // namespace

Format parse_format(const std::string& name)
{
    if (name == "text") {
        return Format::Text;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "structured") {
        return Format::Structured;
    }
    throw std::invalid_argument("unknown format '" + name + "' (expected text, csv or structured)");
}

std::vector<int> parse_dimensions(const std::string& spec)
{
    std::vector<int> out;
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const int a = parse_int(trim(spec.substr(0, dots)));
        const int b = parse_int(trim(spec.substr(dots + 2)));
        if (a > b) {
            throw std::invalid_argument("dimension range '" + spec + "' is decreasing");
        }
        for (int n = a; n <= b; ++n) {
            out.push_back(n);
        }
    } else {
        std::stringstream in(spec);
        std::string item;
        while (std::getline(in, item, ',')) {
            out.push_back(parse_int(trim(item)));
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("empty dimension list");
    }
    for (const int n : out) {
        if (n < 2) {
            throw std::invalid_argument("dimensions must be >= 2");
        }
    }
    return out;
}

std::pair<double, double> parse_q_range(const std::string& spec)
{
    const auto dots = spec.find("..");
    if (dots == std::string::npos) {
        const double v = parse_double(trim(spec));
        return {v, v};
    }
    const double a = parse_double(trim(spec.substr(0, dots)));
    const double b = parse_double(trim(spec.substr(dots + 2)));
    if (!(a <= b)) {
        throw std::invalid_argument("q-range '" + spec + "' is decreasing");
    }
    return {a, b};
}

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const ParamPoint p{args.n, args.q};
        Table t;
        add_minimal(t, minimal_bundle(p));
        const bool local = args.H || args.R || args.theta;
        if (local) {
            if (!(args.H && args.R && args.theta)) {
                throw std::invalid_argument("--H, --R and --theta must be given together");
            }
            const CmcScale s{*args.H, *args.R, *args.theta};
            add_cmc(t, cmc_bundle(p));
            add_local(t, s, local_estimate(p, s), s.theta);
        }
        t.print(out, args.format);
        return int{kSuccess};
    });
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto rows = sweep_rows(args.spec, Execution::Parallel);
        if (args.out_path.empty() || args.out_path == "-") {
            write_sweep_csv(out, args.spec, rows);
            return int{kSuccess};
        }
        std::ofstream file(args.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << args.out_path << "' for writing\n";
            return int{kIoError};
        }
        write_sweep_csv(file, args.spec, rows);
        file.flush();
        if (!file) {
            err << "error: failed writing '" << args.out_path << "'\n";
            return int{kIoError};
        }
        return int{kSuccess};
    });
}

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (args.n_values.empty() || args.steps < 2 || !(args.q_min < args.q_max)) {
            throw std::invalid_argument("compare needs dimensions, steps >= 2 and q_min < q_max");
        }
        Table grid;
        Table crossings;
        for (const int n : args.n_values) {
            for (int k = 0; k < args.steps; ++k) {
                const double q = args.q_min + (args.q_max - args.q_min) * k / (args.steps - 1);
                const auto row = evaluate_row(n, q);
                const auto cell = [&](double v) { return row.ok ? format_number(v) : std::string{}; };
                grid.begin_row();
                grid.set("n", n);
                grid.set("q", q);
                if (args.format == Format::Structured && row.ok) {
                    grid.set("CY", row.CY);
                    grid.set("CH", row.CH);
                    grid.set("ratio", row.ratio);
                    grid.set("ratio_root", row.ratio_root);
                } else {
                    grid.set("CY", cell(row.CY));
                    grid.set("CH", cell(row.CH));
                    grid.set("ratio", cell(row.ratio));
                    grid.set("ratio_root", cell(row.ratio_root));
                }
                grid.set("holder_beats_young", row.ok ? (row.CH < row.CY ? "yes" : "no") : "");
                grid.set("status", row.ok ? "ok" : "domain_error");
            }
            crossings.begin_row();
            crossings.set("n", n);
            crossings.set("crossover_q", crossover_q(n).to_string());
        }
        if (args.format == Format::Structured) {
            json doc = json::object();
            doc["rows"] = grid.to_json();
            doc["crossover"] = crossings.to_json();
            out << doc.dump(2) << '\n';
        } else {
            grid.print(out, args.format);
            out << '\n';
            crossings.print(out, args.format);
        }
        return int{kSuccess};
    });
}

int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const NamedClaim& named = find_named_claim(args.claim);
        if (args.n_values.empty()) {
            throw std::invalid_argument("certify needs at least one dimension");
        }
        CertifyOptions options;
        options.max_depth = args.max_depth;
        options.clip_to_domain = named.needs_gap;
        const ParamBox box{args.n_values, args.q_lo, args.q_hi};
        const Certificate cert = certify(named.claim, box, options);

        Table t;
        t.set("claim", cert.claim);
        t.set("description", named.description);
        t.set("box.n", n_list_string(box.n_values));
        t.set("box.q", Interval(box.q_lo, box.q_hi).to_string());
        t.set("status", to_string(cert.status));
        if (cert.witness) {
            t.set("witness.n", cert.witness->n);
            t.set("witness.q", cert.witness->q);
            t.set("witness.enclosure", cert.witness->enclosure.to_string());
        } else {
            t.set("witness", "none");
        }
        t.set("subdivisions", cert.subdivisions);
        t.set("max_depth_reached", cert.max_depth_reached);
        t.set("leaves", cert.leaves);
        t.set("domain_error_boxes", cert.domain_error_boxes);
        t.set("diagnostics", cert.diagnostics.empty() ? std::string("none") : cert.diagnostics);

        if (!args.out_path.empty() && args.out_path != "-") {
            std::ofstream file(args.out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open '" << args.out_path << "' for writing\n";
                return int{kIoError};
            }
            t.print(file, args.format == Format::Csv ? Format::Text : args.format);
            if (!file) {
                return int{kIoError};
            }
        }
        t.print(out, args.format == Format::Csv ? Format::Text : args.format);
        return cert.status == CertStatus::Proven ? int{kSuccess} : int{kCertificationFailure};
    });
}

int cmd_optimize(const OptimizeArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const ParamPoint p{args.n, args.q};
        OptimizeOptions options;
        options.cmc_weight = args.weight;
        const auto r = optimize(args.target, p, options);
        static const char* young_names[] = {"eps1", "eps2", "eps3", "lambda"};
        static const char* cmc_names[] = {"eps1", "eps2", "eps3"};
        Table t;
        t.set("target", to_string(r.target));
        t.set("n", p.n);
        t.set("q", p.q);
        if (args.target == Target::CmcCalC1) {
            t.set("weight", args.weight);
        }
        for (std::size_t i = 0; i < r.best_params.size(); ++i) {
            const char* name = args.target == Target::CmcCalC1 ? cmc_names[i] : young_names[i];
            t.set(std::string("best.") + name, r.best_params[i]);
        }
        const auto canonical = canonical_parameters(args.target, p);
        for (std::size_t i = 0; i < canonical.size(); ++i) {
            const char* name = args.target == Target::CmcCalC1 ? cmc_names[i] : young_names[i];
            t.set(std::string("canonical.") + name, canonical[i]);
        }
        t.set("best_value", r.best_value);
        t.set("paper_value", r.paper_value);
        t.set("improvement_ratio", r.improvement_ratio);
        t.set("evaluations", r.evaluations);
        t.set("converged", r.converged);
        t.print(out, args.format);
        return int{kSuccess};
    });
}

int cmd_cmc(const CmcArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const ParamPoint p{args.n, args.q};
        const CmcScale s{args.H, args.R, args.theta};
        Table t;
        t.set("n", p.n);
        t.set("q", p.q);
        t.set("A", stability_gap(p));
        add_cmc(t, cmc_bundle(p));
        add_local(t, s, local_estimate(p, s), s.theta);
        t.print(out, args.format);
        return int{kSuccess};
    });
}

int cmd_bernstein(const BernsteinArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        Table t;
        for (const int n : args.n_values) {
            const auto range = bernstein_range(n);
            t.begin_row();
            t.set("n", n);
            t.set("admissible_q", admissible_q_domain(n).to_string());
            t.set("bernstein_range", range.to_string());
            t.set("nonempty", !range.empty);
            if (!range.empty) {
                const double mid = range.lower + range.width() / 2.0;
                t.set("sample_q", mid);
                t.set("decay_exponent", decay_exponent(ParamPoint{n, mid}));
            } else {
                t.set("sample_q", std::string{});
                t.set("decay_exponent", std::string{});
            }
        }
        t.print(out, args.format);
        return int{kSuccess};
    });
}

int cmd_oracle_check(const OracleCheckArgs& args, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        if (args.grid.n_values.empty() || args.grid.steps < 1) {
            throw std::invalid_argument("oracle-check grid is empty (need dimensions and steps >= 1)");
        }
        const auto report = oracle_check(args.grid, Execution::Parallel);
        Table t;
        t.set("regular_points", report.regular_points);
        t.set("regular_tolerance", kRegularTolerance);
        t.set("regular_max_deviation", report.worst_regular.deviation);
        t.set("regular_worst_field", report.worst_regular.field);
        t.set("regular_worst_n", report.worst_regular.n);
        t.set("regular_worst_q", report.worst_regular.q);
        t.set("boundary_points", report.boundary_points);
        t.set("boundary_tolerance", kBoundaryTolerance);
        t.set("boundary_max_deviation", report.worst_boundary.deviation);
        t.set("boundary_worst_field", report.worst_boundary.field);
        t.set("passed", report.passed);
        t.print(out, args.format);
        return report.passed ? int{kSuccess} : int{kCertificationFailure};
    });
}

} // namespace ssy::cli
