#include "wigcat/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace wigcat {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kEvenLambdas = {-0.25, 0.0, 0.5, 1.0, 2.0};
const std::vector<double> kOddLambdas = {-1.0, -0.25, 0.0, 0.5, 1.0};
// The odd squeezing factors divide by |1 - 2 lambda|, which vanishes at
// lambda = 1/2, so the odd squeezing figures swap that curve for -1/2.
const std::vector<double> kOddSqueezeLambdas = {-1.0, -0.5, -0.25, 0.0, 1.0};
const std::vector<double> kFig4Phis = {0.0, kPi / 6.0, kPi / 3.0, kPi / 2.0};

}  // namespace

void validate(const SweepConfig& config) {
    if (!(config.w_min < config.w_max))
        throw std::invalid_argument("sweep: requires w_min < w_max");
    if (config.w_steps < 2) throw std::invalid_argument("sweep: requires w_steps >= 2");
    for (double lambda : config.lambda_list) {
        WignerCatSpec probe{lambda, std::max(config.w_min, 1e-6), config.phi, config.parity};
        wigcat::validate(probe);
    }
}

std::vector<double> sweep_grid(double w_min, double w_max, int steps) {
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i)
        grid[i] = w_min + (w_max - w_min) * double(i) / double(steps - 1);
    return grid;
}

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {"1a", "1b", "2a", "2b",
                                                 "3a", "3b", "4a", "4b"};
    return ids;
}

FigureSpec figure_defaults(const std::string& id) {
    FigureSpec spec;
    spec.id = id;
    if (id == "1a") {
        spec.quantity = FigureQuantity::mandel_q;
        spec.parity = Parity::even;
        spec.lambdas = kEvenLambdas;
    } else if (id == "1b") {
        spec.quantity = FigureQuantity::mandel_q;
        spec.parity = Parity::odd;
        spec.lambdas = kOddLambdas;
    } else if (id == "2a" || id == "2b") {
        spec.quantity = FigureQuantity::squeeze_x;
        spec.parity = (id == "2a") ? Parity::even : Parity::odd;
        spec.lambdas = (id == "2a") ? kEvenLambdas : kOddSqueezeLambdas;
        spec.phi = kPi / 2.0;
    } else if (id == "3a" || id == "3b") {
        spec.quantity = FigureQuantity::squeeze_p;
        spec.parity = (id == "3a") ? Parity::even : Parity::odd;
        spec.lambdas = (id == "3a") ? kEvenLambdas : kOddSqueezeLambdas;
        spec.phi = 0.0;
    } else if (id == "4a" || id == "4b") {
        spec.quantity = FigureQuantity::squeeze_x;
        spec.sweep_phi = true;
        spec.parity = (id == "4a") ? Parity::even : Parity::odd;
        spec.lambda = (id == "4a") ? -0.25 : -1.0;
        spec.phis = kFig4Phis;
    } else {
        throw std::invalid_argument("unknown figure id: " + id +
                                    " (expected one of 1a 1b 2a 2b 3a 3b 4a 4b)");
    }
    return spec;
}

double figure_value(const FigureSpec& spec, int curve, double w_abs) {
    const double lambda = spec.sweep_phi ? spec.lambda : spec.lambdas.at(curve);
    const double phi = spec.sweep_phi ? spec.phis.at(curve) : spec.phi;
    switch (spec.quantity) {
        case FigureQuantity::mandel_q:
            return mandel_q(lambda, w_abs, spec.parity);
        case FigureQuantity::squeeze_x:
            return xp_squeezing(lambda, w_abs, phi, spec.parity).s_x;
        case FigureQuantity::squeeze_p:
            return xp_squeezing(lambda, w_abs, phi, spec.parity).s_p;
    }
    throw std::logic_error("figure_value: bad quantity");
}

std::string format_field(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_figure_csv(std::ostream& os, const FigureSpec& spec) {
    const int curves = int(spec.sweep_phi ? spec.phis.size() : spec.lambdas.size());
    os << "w_abs";
    for (int c = 0; c < curves; ++c) {
        if (spec.sweep_phi)
            os << ",phi=" << format_field(spec.phis[c]);
        else
            os << ",lambda=" << format_field(spec.lambdas[c]);
    }
    os << "\n";
    for (double w : sweep_grid(spec.w_min, spec.w_max, spec.w_steps)) {
        os << format_field(w);
        for (int c = 0; c < curves; ++c) {
            const double v = figure_value(spec, c, w);
            if (!std::isfinite(v))
                throw std::runtime_error("figure " + spec.id + ": non-finite value");
            os << "," << format_field(v);
        }
        os << "\n";
    }
}

const char* const kStatsCsvHeader =
    "lambda,w_abs,phi,parity,mean_n,mean_n2,mandel_q,var_x,var_p,s_x,s_p,"
    "var_x1,var_x2,mean_j3,s_1,s_2,su11_product_ratio";

void write_stats_row(std::ostream& os, const WignerCatSpec& spec,
                     const StatisticsReport& r) {
    os << format_field(spec.lambda) << "," << format_field(spec.w_abs) << ","
       << format_field(spec.phi) << "," << parity_name(spec.parity);
    for (double v : {r.mean_n, r.mean_n2, r.mandel_q, r.var_x, r.var_p, r.s_x, r.s_p,
                     r.var_x1, r.var_x2, r.mean_j3, r.s_1, r.s_2, r.su11_product_ratio})
        os << "," << format_field(v);
    os << "\n";
}

}  // namespace wigcat
