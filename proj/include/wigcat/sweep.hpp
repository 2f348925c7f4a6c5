// Sweep and figure machinery used by the CLI: the per-figure defaults for
// the Mandel-parameter and squeezing-factor curves, the |w| grids, and the
// deterministic CSV rendering (17 significant digits, '\n' line endings).
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "wigcat/observables.hpp"

namespace wigcat {

enum class OutputFormat { text, csv, json };

struct SweepConfig {
    std::vector<double> lambda_list;
    double w_min = 0.05;
    double w_max = 4.0;
    int w_steps = 200;
    double phi = 0.0;
    Parity parity = Parity::even;
    std::string output_path;
    OutputFormat format = OutputFormat::csv;
};

// w_min < w_max, w_steps >= 2, every lambda sector-valid for the parity.
void validate(const SweepConfig& config);

std::vector<double> sweep_grid(double w_min, double w_max, int steps);

enum class FigureQuantity { mandel_q, squeeze_x, squeeze_p };

struct FigureSpec {
    std::string id;
    FigureQuantity quantity = FigureQuantity::mandel_q;
    Parity parity = Parity::even;
    bool sweep_phi = false;          // figure 4: one curve per phi
    std::vector<double> lambdas;     // curves for figures 1-3
    std::vector<double> phis;        // curves for figure 4
    double phi = 0.0;                // fixed phase for figures 2-3
    double lambda = 0.0;             // fixed lambda for figure 4
    double w_min = 0.05;
    double w_max = 4.0;
    int w_steps = 200;
};

const std::vector<std::string>& figure_ids();

// Defaults per figure id (1a..4b); throws std::invalid_argument otherwise.
FigureSpec figure_defaults(const std::string& id);

// Value of one curve at one |w|; `curve` indexes lambdas or phis.
double figure_value(const FigureSpec& spec, int curve, double w_abs);

std::string format_field(double value);  // %.17g

void write_figure_csv(std::ostream& os, const FigureSpec& spec);

extern const char* const kStatsCsvHeader;
void write_stats_row(std::ostream& os, const WignerCatSpec& spec,
                     const StatisticsReport& report);

}  // namespace wigcat
