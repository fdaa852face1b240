#pragma once

#include <string>
#include <vector>

#include "namegame/experiment.hpp"

namespace namegame {

// CSV writers.  NaN scores become empty cells; floats are written with six
// significant digits so reruns diff cleanly.
void write_summary_csv(const std::vector<SummaryRow>& rows, const std::string& path);
void write_iterations_csv(const std::vector<IterationRow>& rows, const std::string& path);
void write_timing_csv(const std::vector<TimingRow>& rows, const std::string& path);

// Per-iteration score trajectories (aggregate lines, averaged over trials),
// one polyline per method, as a self-contained SVG.
enum class PlotMetric { kAri, kKappa };
void write_metric_plot_svg(const std::vector<IterationRow>& rows, PlotMetric metric,
                           const std::string& path);

// Create the directory (and parents) if needed; errors become DataError.
void ensure_directory(const std::string& path);

}  // namespace namegame
