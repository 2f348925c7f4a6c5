// Command-line front end: single-point statistics, figure CSV sweeps,
// wavefunction grid dumps and the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wigcat/oracle.hpp"
#include "wigcat/position.hpp"
#include "wigcat/sweep.hpp"
#include "wigcat/verify.hpp"

namespace {

using namespace wigcat;
using nlohmann::json;

const std::map<std::string, Parity> kParityMap = {{"even", Parity::even},
                                                  {"odd", Parity::odd}};

struct ReportField {
    const char* name;
    double StatisticsReport::*member;
};

constexpr ReportField kFields[] = {
    {"mean_n", &StatisticsReport::mean_n},
    {"mean_n2", &StatisticsReport::mean_n2},
    {"mandel_q", &StatisticsReport::mandel_q},
    {"var_x", &StatisticsReport::var_x},
    {"var_p", &StatisticsReport::var_p},
    {"commutator_mean", &StatisticsReport::commutator_mean},
    {"s_x", &StatisticsReport::s_x},
    {"s_p", &StatisticsReport::s_p},
    {"var_x1", &StatisticsReport::var_x1},
    {"var_x2", &StatisticsReport::var_x2},
    {"mean_j3", &StatisticsReport::mean_j3},
    {"s_1", &StatisticsReport::s_1},
    {"s_2", &StatisticsReport::s_2},
    {"xp_uncertainty_lhs", &StatisticsReport::xp_uncertainty_lhs},
    {"xp_uncertainty_rhs", &StatisticsReport::xp_uncertainty_rhs},
    {"su11_product_ratio", &StatisticsReport::su11_product_ratio},
};

double rel_dev(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-3});
}

// Output selection: "-" or empty means stdout.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
            out_ = &file_;
        }
    }
    std::ostream& stream() { return *out_; }

  private:
    std::ofstream file_;
    std::ostream* out_ = &std::cout;
};

struct StatsArgs {
    double lambda = 0.0;
    double w_abs = 1.0;
    double phi = 0.0;
    Parity parity = Parity::even;
    bool oracle = false;
    int truncation = -1;
    std::string format = "text";
    std::string out;
    double w_min = 0.0;
    double w_max = 0.0;
    int w_steps = 0;
};

json report_to_json(const StatisticsReport& r) {
    json j;
    for (const ReportField& f : kFields) j[f.name] = r.*(f.member);
    return j;
}

int run_stats(const StatsArgs& args) {
    Sink sink(args.out);
    std::ostream& os = sink.stream();

    const bool sweep = args.w_steps > 0;
    if (sweep) {
        SweepConfig config;
        config.lambda_list = {args.lambda};
        config.w_min = args.w_min;
        config.w_max = args.w_max;
        config.w_steps = args.w_steps;
        config.phi = args.phi;
        config.parity = args.parity;
        validate(config);
        if (args.format == "csv") {
            os << kStatsCsvHeader << "\n";
            for (double w : sweep_grid(args.w_min, args.w_max, args.w_steps)) {
                const WignerCatSpec spec{args.lambda, w, args.phi, args.parity};
                write_stats_row(os, spec, statistics_report(spec));
            }
        } else if (args.format == "json") {
            json rows = json::array();
            for (double w : sweep_grid(args.w_min, args.w_max, args.w_steps)) {
                const WignerCatSpec spec{args.lambda, w, args.phi, args.parity};
                json row = report_to_json(statistics_report(spec));
                row["lambda"] = spec.lambda;
                row["w_abs"] = spec.w_abs;
                row["phi"] = spec.phi;
                row["parity"] = parity_name(spec.parity);
                rows.push_back(std::move(row));
            }
            os << rows.dump(2) << "\n";
        } else {
            throw std::invalid_argument("stats sweeps support --format csv or json");
        }
        return 0;
    }

    const WignerCatSpec spec{args.lambda, args.w_abs, args.phi, args.parity};
    validate(spec);
    const StatisticsReport closed = statistics_report(spec);
    StatisticsReport brute;
    double max_dev = 0.0;
    if (args.oracle) {
        brute = oracle_statistics(spec, args.truncation);
        for (const ReportField& f : kFields)
            if (std::isfinite(closed.*(f.member)))
                max_dev = std::max(max_dev, rel_dev(closed.*(f.member), brute.*(f.member)));
    }

    if (args.format == "csv") {
        if (args.oracle)
            throw std::invalid_argument("--oracle reporting requires --format text or json");
        os << kStatsCsvHeader << "\n";
        write_stats_row(os, spec, closed);
        return 0;
    }
    if (args.format == "json") {
        json j;
        j["lambda"] = spec.lambda;
        j["w_abs"] = spec.w_abs;
        j["phi"] = spec.phi;
        j["parity"] = parity_name(spec.parity);
        j["report"] = report_to_json(closed);
        if (args.oracle) {
            j["oracle"] = report_to_json(brute);
            j["max_rel_deviation"] = max_dev;
        }
        os << j.dump(2) << "\n";
        return 0;
    }
    if (args.format != "text")
        throw std::invalid_argument("unknown format: " + args.format);

    char line[160];
    std::snprintf(line, sizeof line, "%-20s= %s\n", "lambda",
                  format_field(spec.lambda).c_str());
    os << line;
    std::snprintf(line, sizeof line, "%-20s= %s\n", "w_abs", format_field(spec.w_abs).c_str());
    os << line;
    std::snprintf(line, sizeof line, "%-20s= %s\n", "phi", format_field(spec.phi).c_str());
    os << line;
    std::snprintf(line, sizeof line, "%-20s= %s\n", "parity", parity_name(spec.parity));
    os << line;
    if (!args.oracle) {
        for (const ReportField& f : kFields) {
            std::snprintf(line, sizeof line, "%-20s= %s\n", f.name,
                          format_field(closed.*(f.member)).c_str());
            os << line;
        }
    } else {
        std::snprintf(line, sizeof line, "%-20s %-24s %-24s %s\n", "field", "closed-form",
                      "oracle", "rel-deviation");
        os << line;
        for (const ReportField& f : kFields) {
            if (std::isfinite(closed.*(f.member)))
                std::snprintf(line, sizeof line, "%-20s %-24s %-24s %.3e\n", f.name,
                              format_field(closed.*(f.member)).c_str(),
                              format_field(brute.*(f.member)).c_str(),
                              rel_dev(closed.*(f.member), brute.*(f.member)));
            else
                std::snprintf(line, sizeof line, "%-20s %-24s %-24s %s\n", f.name,
                              "undefined (degenerate)", "-", "-");
            os << line;
        }
        std::snprintf(line, sizeof line, "max relative deviation = %.3e\n", max_dev);
        os << line;
    }
    return 0;
}

struct FigureArgs {
    std::string id;
    std::string out;
    double w_min = 0.05;
    double w_max = 4.0;
    int w_steps = 200;
    std::vector<double> lambdas;
    std::vector<double> phis;
};

int run_figure(const FigureArgs& args) {
    FigureSpec spec = figure_defaults(args.id);
    spec.w_min = args.w_min;
    spec.w_max = args.w_max;
    spec.w_steps = args.w_steps;
    if (!args.lambdas.empty()) {
        if (spec.sweep_phi) {
            if (args.lambdas.size() != 1)
                throw std::invalid_argument("figure " + args.id +
                                            " takes a single --lambda override");
            spec.lambda = args.lambdas[0];
        } else {
            spec.lambdas = args.lambdas;
        }
    }
    if (!args.phis.empty()) {
        if (spec.sweep_phi) {
            spec.phis = args.phis;
        } else {
            if (args.phis.size() != 1)
                throw std::invalid_argument("figure " + args.id +
                                            " takes a single --phi override");
            spec.phi = args.phis[0];
        }
    }
    // sector legality of every curve before any output is written
    SweepConfig probe;
    probe.lambda_list = spec.sweep_phi ? std::vector<double>{spec.lambda} : spec.lambdas;
    probe.w_min = spec.w_min;
    probe.w_max = spec.w_max;
    probe.w_steps = spec.w_steps;
    probe.parity = spec.parity;
    validate(probe);

    const std::string path = args.out.empty() ? ("fig" + args.id + ".csv") : args.out;
    Sink sink(path);
    write_figure_csv(sink.stream(), spec);
    const int curves = int(spec.sweep_phi ? spec.phis.size() : spec.lambdas.size());
    std::cerr << path << ": " << spec.w_steps << " rows, " << curves << " curves\n";
    return 0;
}

struct VerifyArgs {
    double tol = 0.0;
    bool tol_set = false;
    std::string only;
    std::string format = "text";
    int truncation = -1;
};

int run_verify(const VerifyArgs& args) {
    VerifyOptions options;
    if (args.tol_set) options.tol_override = args.tol;
    options.truncation = args.truncation;
    const VerificationReport report = run_verification(args.only, options);

    if (args.format == "json") {
        json checks = json::array();
        for (const Check& c : report.checks)
            checks.push_back({{"name", c.name},
                              {"residual", c.residual},
                              {"tol", c.tol},
                              {"pass", c.pass}});
        json j;
        j["all_pass"] = report.all_pass();
        j["checks"] = std::move(checks);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const Check& c : report.checks) {
            char line[256];
            std::snprintf(line, sizeof line, "%-4s %-72s residual=%-12.3e tol=%-9.0e\n",
                          c.pass ? "ok" : "FAIL", c.name.c_str(), c.residual, c.tol);
            std::cout << line;
        }
        std::cout << (report.all_pass() ? "verification passed" : "VERIFICATION FAILED")
                  << " (" << report.checks.size() << " checks)\n";
    }
    return report.all_pass() ? 0 : 1;
}

struct WavefunctionArgs {
    double lambda = 0.0;
    int n = -1;
    bool cat = false;
    double w_abs = 1.0;
    double phi = 0.0;
    Parity parity = Parity::even;
    double x_min = -8.0;
    double x_max = 8.0;
    int points = 1600;
    int truncation = -1;
    std::string out;
};

int run_wavefunction(const WavefunctionArgs& args) {
    if (args.points < 2) throw std::invalid_argument("wavefunction: requires --points >= 2");
    // cell midpoints: a symmetric default range never lands on x = 0
    std::vector<double> xs(args.points);
    const double h = (args.x_max - args.x_min) / args.points;
    if (!(h > 0)) throw std::invalid_argument("wavefunction: requires x_min < x_max");
    for (int i = 0; i < args.points; ++i) xs[i] = args.x_min + (i + 0.5) * h;

    Sink sink(args.out);
    std::ostream& os = sink.stream();
    if (args.cat) {
        const WignerCatSpec spec{args.lambda, args.w_abs, args.phi, args.parity};
        const WavefunctionSample s = cat_wavefunction(spec, xs, args.truncation);
        os << "x,re,im,abs2\n";
        for (size_t i = 0; i < xs.size(); ++i)
            os << format_field(xs[i]) << "," << format_field(s.values[i].real()) << ","
               << format_field(s.values[i].imag()) << ","
               << format_field(std::norm(s.values[i])) << "\n";
    } else {
        os << "x,psi\n";
        for (double x : xs) os << format_field(x) << "," << format_field(psi(args.n, args.lambda, x)) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wigner-Heisenberg cat states: closed-form statistics, brute-force "
                 "oracle, figure sweeps and verification"};
    app.require_subcommand(1);

    StatsArgs stats;
    CLI::App* stats_cmd = app.add_subcommand(
        "stats", "statistics of one cat state (or a |w| sweep with --w-min/--w-max/--w-steps)");
    stats_cmd->add_option("--lambda", stats.lambda, "Wigner deformation parameter")->required();
    stats_cmd->add_option("--w-abs", stats.w_abs, "|w| (default 1)");
    stats_cmd->add_option("--phi", stats.phi, "phase of w in radians (default 0)");
    stats_cmd->add_option("--parity", stats.parity, "even|odd")
        ->transform(CLI::CheckedTransformer(kParityMap, CLI::ignore_case));
    stats_cmd->add_flag("--oracle", stats.oracle,
                        "also print truncated-Fock brute-force values and deviations");
    stats_cmd->add_option("--truncation", stats.truncation, "Fock cutoff (default: auto)");
    stats_cmd->add_option("--format", stats.format, "text|csv|json (default text)");
    stats_cmd->add_option("--out", stats.out, "output path (default stdout)");
    stats_cmd->add_option("--w-min", stats.w_min, "sweep start");
    stats_cmd->add_option("--w-max", stats.w_max, "sweep end");
    stats_cmd->add_option("--w-steps", stats.w_steps, "sweep point count (enables sweep mode)");

    FigureArgs figure;
    CLI::App* figure_cmd =
        app.add_subcommand("figure", "emit one figure CSV (Mandel or squeezing curves)");
    figure_cmd->add_option("--id", figure.id, "1a|1b|2a|2b|3a|3b|4a|4b")->required();
    figure_cmd->add_option("--out", figure.out, "output path (default fig<id>.csv)");
    figure_cmd->add_option("--w-min", figure.w_min, "|w| sweep start (default 0.05)");
    figure_cmd->add_option("--w-max", figure.w_max, "|w| sweep end (default 4)");
    figure_cmd->add_option("--w-steps", figure.w_steps, "sweep point count (default 200)");
    figure_cmd->add_option("--lambda", figure.lambdas, "override curve lambda values");
    figure_cmd->add_option("--phi", figure.phis, "override phase(s)");

    VerifyArgs verify;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the full verification suite (exit 1 on failure)");
    verify_cmd->add_option("--tol", verify.tol, "override every group tolerance")
        ->each([&](const std::string&) { verify.tol_set = true; });
    verify_cmd->add_option("--only", verify.only, "run a single group")
        ->check(CLI::IsMember(verify_group_names()));
    verify_cmd->add_option("--format", verify.format, "text|json (default text)");
    verify_cmd->add_option("--truncation", verify.truncation, "Fock cutoff (default: auto)");

    WavefunctionArgs wave;
    CLI::App* wave_cmd =
        app.add_subcommand("wavefunction", "dump psi_n or a cat wavefunction on a grid");
    wave_cmd->add_option("--lambda", wave.lambda, "Wigner deformation parameter")->required();
    wave_cmd->add_option("--n", wave.n, "basis index (psi mode)");
    wave_cmd->add_flag("--cat", wave.cat, "dump the cat wavefunction instead of psi_n");
    wave_cmd->add_option("--w-abs", wave.w_abs, "|w| for cat mode");
    wave_cmd->add_option("--phi", wave.phi, "phase for cat mode");
    wave_cmd->add_option("--parity", wave.parity, "even|odd for cat mode")
        ->transform(CLI::CheckedTransformer(kParityMap, CLI::ignore_case));
    wave_cmd->add_option("--x-min", wave.x_min, "grid start (default -8)");
    wave_cmd->add_option("--x-max", wave.x_max, "grid end (default 8)");
    wave_cmd->add_option("--points", wave.points, "grid size (default 1600)");
    wave_cmd->add_option("--truncation", wave.truncation, "Fock cutoff for cat mode");
    wave_cmd->add_option("--out", wave.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (stats_cmd->parsed()) return run_stats(stats);
        if (figure_cmd->parsed()) return run_figure(figure);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (wave_cmd->parsed()) {
            if (!wave.cat && wave.n < 0)
                throw std::invalid_argument("wavefunction: pass --n or --cat");
            return run_wavefunction(wave);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
