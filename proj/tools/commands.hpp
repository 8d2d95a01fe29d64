#pragma once

#include "ssy/epsilon_optimizer.hpp"
#include "ssy/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ssy::cli {

// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kUsageOrDomain = 1,
    kCertificationFailure = 2,
    kIoError = 3,
};

enum class Format { Text, Csv, Structured };

Format parse_format(const std::string& name);

// "5", "2,3,5" or an inclusive range "2..12".
std::vector<int> parse_dimensions(const std::string& spec);

// "0.125" (a point) or "1e-3..0.125".
std::pair<double, double> parse_q_range(const std::string& spec);

struct EvalArgs {
    int n = 3;
    double q = 0.1;
    std::optional<double> H;
    std::optional<double> R;
    std::optional<double> theta;
    Format format = Format::Text;
};

struct SweepArgs {
    SweepSpec spec;
    std::string out_path;  // "-" or empty writes to stdout
};

struct CompareArgs {
    std::vector<int> n_values;
    double q_min = 1e-3;
    double q_max = 0.125;
    int steps = 8;
    Format format = Format::Text;
};

struct CertifyArgs {
    std::string claim;
    std::vector<int> n_values;
    double q_lo = 1e-3;
    double q_hi = 0.125;
    int max_depth = 40;
    Format format = Format::Text;
    std::string out_path;
};

struct OptimizeArgs {
    Target target = Target::HolderCH;
    int n = 3;
    double q = 0.1;
    double weight = 0.0;
    Format format = Format::Text;
};

struct CmcArgs {
    int n = 3;
    double q = 0.1;
    double H = 0.0;
    double R = 1.0;
    double theta = 0.5;
    Format format = Format::Text;
};

struct BernsteinArgs {
    std::vector<int> n_values;
    Format format = Format::Text;
};

struct OracleCheckArgs {
    OracleGrid grid;
    Format format = Format::Text;
};

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err);
int cmd_certify(const CertifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_optimize(const OptimizeArgs& args, std::ostream& out, std::ostream& err);
int cmd_cmc(const CmcArgs& args, std::ostream& out, std::ostream& err);
int cmd_bernstein(const BernsteinArgs& args, std::ostream& out, std::ostream& err);
int cmd_oracle_check(const OracleCheckArgs& args, std::ostream& out, std::ostream& err);

} // namespace ssy::cli
