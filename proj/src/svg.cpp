#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "shblab/harness.hpp"

namespace shblab {

namespace {

constexpr double kWidth = 840.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 50.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Scale {
  double x_max = 1.0;
  double log_lo = -1.0;
  double log_hi = 1.0;

  double px(double iter) const {
    return kLeft + (kWidth - kLeft - kRight) * (iter / x_max);
  }
  double py(double value) const {
    const double lv = std::log10(std::max(value, 1e-300));
    const double t = (lv - log_lo) / (log_hi - log_lo);
    return kHeight - kBottom - (kHeight - kTop - kBottom) * t;
  }
};

void polyline(std::ostream& out, const std::vector<double>& xs, const std::vector<double>& ys,
              const Scale& sc, const char* color, bool dashed) {
  out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
  if (dashed) out << " stroke-dasharray=\"6 4\"";
  out << " points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ' ';
    out << fmt(sc.px(xs[i])) << ',' << fmt(sc.py(ys[i]));
  }
  out << "\"/>\n";
}

}  // namespace

void emit_plot(const std::vector<std::pair<std::string, AggregateResult>>& curves,
               const std::set<Baseline>& baselines, double kappa, const std::string& out_path) {
  if (curves.empty()) throw std::invalid_argument("emit_plot needs at least one curve");
  for (const auto& [name, agg] : curves)
    if (agg.iters.empty()) throw std::invalid_argument("empty aggregate: " + name);

  Scale sc;
  double lo = 1e300, hi = 1e-300;
  for (const auto& [name, agg] : curves) {
    sc.x_max = std::max(sc.x_max, static_cast<double>(agg.iters.back()));
    for (double g : agg.mean_grad) {
      if (g > 0 && std::isfinite(g)) {
        lo = std::min(lo, g);
        hi = std::max(hi, g);
      }
    }
  }
  const double g0 = curves.front().second.mean_grad.front();
  if (!baselines.empty()) lo = std::min(lo, g0 * std::exp(-sc.x_max / kappa));
  if (baselines.count(Baseline::kSqrtKap))
    lo = std::min(lo, g0 * std::exp(-sc.x_max / std::sqrt(kappa)));
  lo = std::max(lo, hi * 1e-18);
  sc.log_lo = std::floor(std::log10(lo));
  sc.log_hi = std::ceil(std::log10(hi));
  if (sc.log_hi <= sc.log_lo) sc.log_hi = sc.log_lo + 1.0;

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  // Axes and decade ticks.
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << (kHeight - kBottom) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << (kHeight - kBottom) << "\" x2=\""
      << (kWidth - kRight) << "\" y2=\"" << (kHeight - kBottom) << "\" stroke=\"black\"/>\n";
  for (double dec = sc.log_lo; dec <= sc.log_hi + 0.5; dec += 1.0) {
    const double y = sc.py(std::pow(10.0, dec));
    out << "<line x1=\"" << (kLeft - 4) << "\" y1=\"" << fmt(y) << "\" x2=\"" << kLeft
        << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << (kLeft - 8) << "\" y=\"" << fmt(y + 4)
        << "\" text-anchor=\"end\" font-size=\"11\">1e" << fmt(dec) << "</text>\n";
  }
  const int x_ticks = 5;
  for (int t = 0; t <= x_ticks; ++t) {
    const double iter = sc.x_max * t / x_ticks;
    const double x = sc.px(iter);
    out << "<line x1=\"" << fmt(x) << "\" y1=\"" << (kHeight - kBottom) << "\" x2=\"" << fmt(x)
        << "\" y2=\"" << (kHeight - kBottom + 4) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(x) << "\" y=\"" << (kHeight - kBottom + 18)
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(iter) << "</text>\n";
  }
  out << "<text x=\"" << (kLeft + (kWidth - kLeft - kRight) / 2) << "\" y=\"" << (kHeight - 14)
      << "\" text-anchor=\"middle\" font-size=\"12\">iteration</text>\n";
  out << "<text x=\"16\" y=\"" << (kTop + (kHeight - kTop - kBottom) / 2)
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
      << (kTop + (kHeight - kTop - kBottom) / 2) << ")\">gradient norm</text>\n";

  // Baselines anchored at the initial gradient norm.
  if (baselines.count(Baseline::kKap)) {
    std::vector<double> xs, ys;
    for (int t = 0; t <= 200; ++t) {
      const double k = sc.x_max * t / 200.0;
      xs.push_back(k);
      ys.push_back(g0 * std::exp(-k / kappa));
    }
    polyline(out, xs, ys, sc, "#444444", true);
    out << "<text x=\"" << fmt(sc.px(sc.x_max * 0.98)) << "\" y=\""
        << fmt(sc.py(ys.back()) - 4) << "\" text-anchor=\"end\" font-size=\"11\">KAP</text>\n";
  }
  if (baselines.count(Baseline::kSqrtKap)) {
    std::vector<double> xs, ys;
    for (int t = 0; t <= 200; ++t) {
      const double k = sc.x_max * t / 200.0;
      xs.push_back(k);
      ys.push_back(g0 * std::exp(-k / std::sqrt(kappa)));
    }
    polyline(out, xs, ys, sc, "#999999", true);
    out << "<text x=\"" << fmt(sc.px(sc.x_max * 0.98)) << "\" y=\""
        << fmt(sc.py(ys.back()) - 4)
        << "\" text-anchor=\"end\" font-size=\"11\">SQRT-KAP</text>\n";
  }

  int color_idx = 0;
  double legend_y = kTop + 14;
  for (const auto& [name, agg] : curves) {
    const char* color = kPalette[color_idx % 8];
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < agg.iters.size(); ++i) {
      if (!std::isfinite(agg.mean_grad[i]) || agg.mean_grad[i] <= 0) break;
      xs.push_back(static_cast<double>(agg.iters[i]));
      ys.push_back(agg.mean_grad[i]);
    }
    if (!xs.empty()) polyline(out, xs, ys, sc, color, false);
    if (agg.n_diverged > 0 && !xs.empty()) {
      // Truncation marker where the guard stopped the run.
      const double x = sc.px(xs.back()), y = sc.py(ys.back());
      out << "<path d=\"M " << fmt(x - 5) << ' ' << fmt(y - 5) << " L " << fmt(x + 5) << ' '
          << fmt(y + 5) << " M " << fmt(x - 5) << ' ' << fmt(y + 5) << " L " << fmt(x + 5)
          << ' ' << fmt(y - 5) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    }
    out << "<line x1=\"" << (kLeft + 10) << "\" y1=\"" << fmt(legend_y - 4) << "\" x2=\""
        << (kLeft + 34) << "\" y2=\"" << fmt(legend_y - 4) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << (kLeft + 40) << "\" y=\"" << fmt(legend_y)
        << "\" font-size=\"11\">" << name;
    if (agg.n_diverged > 0) out << " (" << agg.n_diverged << " diverged)";
    out << "</text>\n";
    legend_y += 16;
    ++color_idx;
  }
  out << "</svg>\n";
}

}  // namespace shblab
