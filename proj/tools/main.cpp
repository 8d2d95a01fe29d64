#include "commands.hpp"

#include "ssy/certifier.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <stdexcept>

using namespace ssy;
using namespace ssy::cli;

namespace {

// Options shared by several subcommands, kept as strings until dispatch.
struct Raw {
    std::string n = "3";
    std::string q = "0.1";
    std::string format = "text";
    std::string columns;
    std::string out;
    double q_min = 1e-3;
    double q_max = 0.125;
    int steps = 8;
    double H = 0.0;
    double R = 1.0;
    double theta = 0.5;
    int max_depth = 40;
    double weight = 0.0;
    std::string target = "holder";
    std::string claim;
};

std::vector<std::string> split_columns(const std::string& s)
{
    std::vector<std::string> out;
    std::string item;
    for (const char c : s + ",") {
        if (c == ',') {
            if (!item.empty()) {
                out.push_back(item);
            }
            item.clear();
        } else if (c != ' ') {
            item += c;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Curvature-estimate constants for stable minimal and CMC hypersurfaces"};
    app.require_subcommand(1);
    Raw raw;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", raw.format, "text, csv or structured")
            ->check(CLI::IsMember({"text", "csv", "structured"}));
    };

    auto* eval = app.add_subcommand("eval", "All constants at one (n, q)");
    eval->add_option("--n", raw.n, "dimension")->required();
    eval->add_option("--q", raw.q, "exponent q")->required();
    auto* eval_H = eval->add_option("--H", raw.H, "mean curvature");
    auto* eval_R = eval->add_option("--R", raw.R, "ball radius");
    auto* eval_theta = eval->add_option("--theta", raw.theta, "interior fraction");
    add_format(eval);

    auto* sweep = app.add_subcommand("sweep", "CSV sweep over dimensions and a q grid");
    sweep->add_option("--n", raw.n, "dimensions, e.g. 2..12 or 3,5")->required();
    sweep->add_option("--q-min", raw.q_min)->required();
    sweep->add_option("--q-max", raw.q_max)->required();
    sweep->add_option("--steps", raw.steps)->required();
    sweep->add_option("--columns", raw.columns, "comma-separated column subset");
    sweep->add_option("--out", raw.out, "output file, '-' for stdout");

    auto* compare = app.add_subcommand("compare", "Young vs Hoelder constants and crossover");
    compare->add_option("--n", raw.n, "dimensions")->required();
    compare->add_option("--q-min", raw.q_min);
    compare->add_option("--q-max", raw.q_max);
    compare->add_option("--steps", raw.steps);
    add_format(compare);

    auto* certify = app.add_subcommand("certify", "Interval-arithmetic certification of a named claim");
    std::string claim_help = "one of:";
    for (const auto& c : named_claims()) {
        claim_help += " " + c.name;
    }
    certify->add_option("claim", raw.claim, claim_help)->required();
    std::string certify_n = "2..12";
    certify->add_option("--n", certify_n, "dimensions (default 2..12)");
    certify->add_option("--q", raw.q, "q-range lo..hi")->required();
    certify->add_option("--max-depth", raw.max_depth)->check(CLI::Range(0, 60));
    certify->add_option("--out", raw.out, "also write the certificate to this file");
    add_format(certify);

    auto* opt = app.add_subcommand("optimize", "Minimize a constant over the free epsilons");
    opt->add_option("--target", raw.target, "young, holder or cmc")
        ->check(CLI::IsMember({"young", "holder", "cmc"}));
    opt->add_option("--n", raw.n)->required();
    opt->add_option("--q", raw.q)->required();
    opt->add_option("--weight", raw.weight, "weight of calC2 for the cmc target");
    add_format(opt);

    auto* cmc = app.add_subcommand("cmc", "CMC constants and the local estimate");
    cmc->add_option("--n", raw.n)->required();
    cmc->add_option("--q", raw.q)->required();
    cmc->add_option("--H", raw.H)->required();
    cmc->add_option("--R", raw.R)->required();
    cmc->add_option("--theta", raw.theta)->required();
    add_format(cmc);

    auto* bern = app.add_subcommand("bernstein", "q-ranges giving a Bernstein-type decay");
    bern->add_option("--n", raw.n, "dimensions")->default_val("2..12");
    add_format(bern);

    auto* oracle = app.add_subcommand("oracle-check", "binary64 vs 50-digit cross-check");
    std::string oracle_n = "2..12";
    int oracle_steps = default_oracle_grid().steps;
    oracle->add_option("--n", oracle_n, "dimensions");
    oracle->add_option("--steps", oracle_steps, "interior points per dimension");
    add_format(oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageOrDomain;
    }

    try {
        const Format format = parse_format(raw.format);
        if (eval->parsed()) {
            EvalArgs a;
            a.n = std::stoi(raw.n);
            a.q = std::stod(raw.q);
            if (eval_H->count()) {
                a.H = raw.H;
            }
            if (eval_R->count()) {
                a.R = raw.R;
            }
            if (eval_theta->count()) {
                a.theta = raw.theta;
            }
            a.format = format;
            return cmd_eval(a, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            SweepArgs a;
            a.spec.n_values = parse_dimensions(raw.n);
            a.spec.q_min = raw.q_min;
            a.spec.q_max = raw.q_max;
            a.spec.steps = raw.steps;
            a.spec.outputs = split_columns(raw.columns);
            a.out_path = raw.out;
            return cmd_sweep(a, std::cout, std::cerr);
        }
        if (compare->parsed()) {
            CompareArgs a;
            a.n_values = parse_dimensions(raw.n);
            a.q_min = raw.q_min;
            a.q_max = raw.q_max;
            a.steps = raw.steps;
            a.format = format;
            return cmd_compare(a, std::cout, std::cerr);
        }
        if (certify->parsed()) {
            CertifyArgs a;
            a.claim = raw.claim;
            a.n_values = parse_dimensions(certify_n);
            std::tie(a.q_lo, a.q_hi) = parse_q_range(raw.q);
            a.max_depth = raw.max_depth;
            a.format = format;
            a.out_path = raw.out;
            return cmd_certify(a, std::cout, std::cerr);
        }
        if (opt->parsed()) {
            OptimizeArgs a;
            a.target = parse_target(raw.target);
            a.n = std::stoi(raw.n);
            a.q = std::stod(raw.q);
            a.weight = raw.weight;
            a.format = format;
            return cmd_optimize(a, std::cout, std::cerr);
        }
        if (cmc->parsed()) {
            CmcArgs a{std::stoi(raw.n), std::stod(raw.q), raw.H, raw.R, raw.theta, format};
            return cmd_cmc(a, std::cout, std::cerr);
        }
        if (bern->parsed()) {
            BernsteinArgs a{parse_dimensions(raw.n), format};
            return cmd_bernstein(a, std::cout, std::cerr);
        }
        if (oracle->parsed()) {
            OracleCheckArgs a;
            a.grid = default_oracle_grid();
            a.grid.n_values = parse_dimensions(oracle_n);
            a.grid.steps = oracle_steps;
            a.format = format;
            return cmd_oracle_check(a, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsageOrDomain;
    }
    return kUsageOrDomain;
}
