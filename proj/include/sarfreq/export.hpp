#ifndef SARFREQ_EXPORT_HPP
#define SARFREQ_EXPORT_HPP

#include <filesystem>
#include <string>

#include "sarfreq/frontier.hpp"

namespace sarfreq {

/// Header `budget,f1,f2,x_1_1,...,y_1,...`, LF line endings, f1 with 6 decimals.
std::string frontier_csv(const Frontier& f, std::size_t stations, std::size_t frequencies);

/// Array of {budget, f1, f2, x: [[...]], y: [...]}.
std::string frontier_json(const Frontier& f);

/// Plot geometry, in viewBox units.
struct PlotLayout {
  double width = 640.0;
  double height = 480.0;
  double margin_left = 90.0;
  double margin_right = 30.0;
  double margin_top = 30.0;
  double margin_bottom = 70.0;

  double plot_left() const { return margin_left; }
  double plot_right() const { return width - margin_right; }
  double plot_top() const { return margin_top; }
  double plot_bottom() const { return height - margin_bottom; }
};

/// Marker position for a point. x runs from the most negative f2 (left) to
/// the largest f2 (right). y maps [min f1, max f1] onto [bottom, top].
/// Degenerate ranges map to the plot centre.
struct PlotPoint {
  double x;
  double y;
};
PlotPoint plot_position(const Frontier& f, const NPoint& p, const PlotLayout& layout = {});

/// Standalone static SVG of the frontier in objective space.
/// Throws InputError on an empty frontier.
std::string frontier_svg(const Frontier& f, const PlotLayout& layout = {});

/// Writes frontier_svg to `path`.
void emit_plot(const Frontier& f, const std::filesystem::path& path);

}  // namespace sarfreq

#endif  // SARFREQ_EXPORT_HPP
