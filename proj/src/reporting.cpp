#include "namegame/reporting.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "namegame/errors.hpp"

namespace namegame {

namespace {

std::string fmt(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write: " + path);
  return out;
}

}  // namespace

void ensure_directory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw DataError("cannot create directory " + path + ": " + ec.message());
}

void write_summary_csv(const std::vector<SummaryRow>& rows, const std::string& path) {
  auto out = open_out(path);
  out << "method,agent,ari_mean,ari_std,kappa_mean,kappa_std,agreement\n";
  for (const auto& r : rows)
    out << r.method << ',' << r.agent << ',' << fmt(r.ari_mean) << ',' << fmt(r.ari_std) << ','
        << fmt(r.kappa_mean) << ',' << fmt(r.kappa_std) << ',' << fmt(r.agreement) << "\n";
  if (!out) throw DataError("write failed: " + path);
}

void write_iterations_csv(const std::vector<IterationRow>& rows, const std::string& path) {
  auto out = open_out(path);
  out << "method,trial,iteration,agent,ari,kappa\n";
  for (const auto& r : rows)
    out << r.method << ',' << r.trial << ',' << r.iteration << ',' << r.agent << ','
        << fmt(r.ari) << ',' << fmt(r.kappa) << "\n";
  if (!out) throw DataError("write failed: " + path);
}

void write_timing_csv(const std::vector<TimingRow>& rows, const std::string& path) {
  auto out = open_out(path);
  out << "n_exchanges,chain_length,seconds_per_iteration,exchanges_per_iteration\n";
  for (const auto& r : rows)
    out << r.n_exchanges << ',' << r.chain_length << ',' << fmt(r.seconds_per_iteration) << ','
        << fmt(r.exchanges_per_iteration) << "\n";
  if (!out) throw DataError("write failed: " + path);
}

void write_metric_plot_svg(const std::vector<IterationRow>& rows, PlotMetric metric,
                           const std::string& path) {
  // Aggregate rows only, averaged over trials: method -> iteration -> value.
  std::map<std::string, std::map<int, std::pair<double, int>>> series;
  int max_iter = 0;
  for (const auto& r : rows) {
    if (r.agent != -1) continue;
    const double v = metric == PlotMetric::kAri ? r.ari : r.kappa;
    if (std::isnan(v)) continue;
    auto& cell = series[r.method][r.iteration];
    cell.first += v;
    cell.second += 1;
    max_iter = std::max(max_iter, r.iteration);
  }

  const double width = 720, height = 480;
  const double left = 60, right = 160, top = 30, bottom = 50;
  const double plot_w = width - left - right, plot_h = height - top - bottom;
  double lo = 0.0, hi = 1.0;
  for (const auto& [name, pts] : series)
    for (const auto& [it, cell] : pts) {
      const double v = cell.first / cell.second;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (hi - lo < 1e-9) hi = lo + 1.0;

  const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  const char* label = metric == PlotMetric::kAri ? "ARI" : "kappa";

  auto out = open_out(path);
  char buf[256];
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // Axes.
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", left,
                top + plot_h, left + plot_w, top + plot_h);
  out << buf;
  std::snprintf(buf, sizeof buf,
                "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", left, top,
                left, top + plot_h);
  out << buf;
  for (int tick = 0; tick <= 5; ++tick) {
    const double v = lo + (hi - lo) * tick / 5.0;
    const double y = top + plot_h - plot_h * tick / 5.0;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%g\" y=\"%g\" font-size=\"12\" text-anchor=\"end\">%.2f</text>\n",
                  left - 6, y + 4, v);
    out << buf;
  }
  std::snprintf(buf, sizeof buf,
                "<text x=\"%g\" y=\"%g\" font-size=\"13\" text-anchor=\"middle\">iteration</text>\n",
                left + plot_w / 2, height - 14);
  out << buf;
  std::snprintf(buf, sizeof buf,
                "<text x=\"18\" y=\"%g\" font-size=\"13\" text-anchor=\"middle\" "
                "transform=\"rotate(-90 18 %g)\">%s</text>\n",
                top + plot_h / 2, top + plot_h / 2, label);
  out << buf;

  int idx = 0;
  for (const auto& [name, pts] : series) {
    const char* color = colors[idx % 8];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [it, cell] : pts) {
      const double v = cell.first / cell.second;
      const double x = left + (max_iter > 0 ? plot_w * it / max_iter : 0.0);
      const double y = top + plot_h - plot_h * (v - lo) / (hi - lo);
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", x, y);
      out << buf;
    }
    out << "\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"%s\" "
                  "stroke-width=\"1.5\"/>\n",
                  left + plot_w + 10, top + 12.0 + 18.0 * idx, left + plot_w + 34,
                  top + 12.0 + 18.0 * idx, color);
    out << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%g\" y=\"%g\" font-size=\"12\">%s</text>\n",
                  left + plot_w + 40, top + 16.0 + 18.0 * idx, name.c_str());
    out << buf;
    ++idx;
  }
  out << "</svg>\n";
  if (!out) throw DataError("write failed: " + path);
}

}  // namespace namegame
