#include "sarfreq/export.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "sarfreq/scenario_io.hpp"

namespace sarfreq {

std::string frontier_csv(const Frontier& f, std::size_t stations, std::size_t frequencies) {
  const Table t = frontier_report(f, stations, frequencies);
  std::string out;
  auto emit = [&out](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += ',';
      out += cells[c];
    }
    out += '\n';
  };
  emit(t.header);
  for (const auto& row : t.rows) emit(row);
  return out;
}

std::string frontier_json(const Frontier& f) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : f.points) {
    nlohmann::ordered_json o;
    o["budget"] = p.budget;
    o["f1"] = p.f1;
    o["f2"] = p.f2;
    std::vector<std::vector<int>> x(p.assignment.x.rows(),
                                    std::vector<int>(p.assignment.x.cols()));
    for (std::size_t j = 0; j < x.size(); ++j)
      for (std::size_t k = 0; k < x[j].size(); ++k) x[j][k] = p.assignment.x(j, k);
    o["x"] = x;
    o["y"] = p.assignment.y;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

namespace {

struct Extent {
  double f1_min, f1_max;
  int f2_min, f2_max;
};

Extent extent_of(const Frontier& f) {
  Extent e{f.points.front().f1, f.points.front().f1, f.points.front().f2, f.points.front().f2};
  for (const auto& p : f.points) {
    e.f1_min = std::min(e.f1_min, p.f1);
    e.f1_max = std::max(e.f1_max, p.f1);
    e.f2_min = std::min(e.f2_min, p.f2);
    e.f2_max = std::max(e.f2_max, p.f2);
  }
  return e;
}

PlotPoint place(const Extent& e, const NPoint& p, const PlotLayout& l) {
  PlotPoint out;
  if (e.f2_max > e.f2_min)
    out.x = l.plot_left() + (l.plot_right() - l.plot_left()) * (p.f2 - e.f2_min) /
                                static_cast<double>(e.f2_max - e.f2_min);
  else
    out.x = 0.5 * (l.plot_left() + l.plot_right());
  if (e.f1_max > e.f1_min)
    out.y = l.plot_bottom() - (l.plot_bottom() - l.plot_top()) * (p.f1 - e.f1_min) /
                                  (e.f1_max - e.f1_min);
  else
    out.y = 0.5 * (l.plot_top() + l.plot_bottom());
  return out;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

PlotPoint plot_position(const Frontier& f, const NPoint& p, const PlotLayout& layout) {
  if (f.points.empty()) throw InputError("empty frontier");
  return place(extent_of(f), p, layout);
}

std::string frontier_svg(const Frontier& f, const PlotLayout& l) {
  if (f.points.empty()) throw InputError("cannot plot an empty frontier");
  const Extent e = extent_of(f);

  std::vector<const NPoint*> by_f2;
  for (const auto& p : f.points) by_f2.push_back(&p);
  std::stable_sort(by_f2.begin(), by_f2.end(),
                   [](const NPoint* a, const NPoint* b) { return a->f2 < b->f2; });

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << num(l.width) << ' '
     << num(l.height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"" << num(l.width) << "\" height=\"" << num(l.height)
     << "\" fill=\"white\"/>\n";
  // axes
  os << "  <g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
     << "    <line x1=\"" << num(l.plot_left()) << "\" y1=\"" << num(l.plot_bottom()) << "\" x2=\""
     << num(l.plot_right()) << "\" y2=\"" << num(l.plot_bottom()) << "\"/>\n"
     << "    <line x1=\"" << num(l.plot_left()) << "\" y1=\"" << num(l.plot_top()) << "\" x2=\""
     << num(l.plot_left()) << "\" y2=\"" << num(l.plot_bottom()) << "\"/>\n"
     << "  </g>\n";
  os << "  <text class=\"xlabel\" x=\"" << num(0.5 * (l.plot_left() + l.plot_right())) << "\" y=\""
     << num(l.height - 20.0) << "\" text-anchor=\"middle\">f2 (negated excess coverage)</text>\n";
  os << "  <text class=\"ylabel\" x=\"20\" y=\"" << num(0.5 * (l.plot_top() + l.plot_bottom()))
     << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
     << num(0.5 * (l.plot_top() + l.plot_bottom())) << ")\">f1 (expected accurate LOBs)</text>\n";

  // tick labels at the extremes
  os << "  <g class=\"ticks\" font-size=\"10\">\n";
  for (int f2 : {e.f2_min, e.f2_max}) {
    NPoint probe;
    probe.f2 = f2;
    probe.f1 = e.f1_min;
    const auto pos = place(e, probe, l);
    os << "    <text x=\"" << num(pos.x) << "\" y=\"" << num(l.plot_bottom() + 16.0)
       << "\" text-anchor=\"middle\">" << f2 << "</text>\n";
    if (e.f2_min == e.f2_max) break;
  }
  for (double f1 : {e.f1_min, e.f1_max}) {
    NPoint probe;
    probe.f2 = e.f2_min;
    probe.f1 = f1;
    const auto pos = place(e, probe, l);
    os << "    <text x=\"" << num(l.plot_left() - 6.0) << "\" y=\"" << num(pos.y + 4.0)
       << "\" text-anchor=\"end\">" << format_f1(f1) << "</text>\n";
    if (e.f1_min == e.f1_max) break;
  }
  os << "  </g>\n";

  if (by_f2.size() > 1) {
    os << "  <polyline class=\"frontier\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" "
          "points=\"";
    for (std::size_t n = 0; n < by_f2.size(); ++n) {
      const auto pos = place(e, *by_f2[n], l);
      if (n) os << ' ';
      os << num(pos.x) << ',' << num(pos.y);
    }
    os << "\"/>\n";
  }
  for (const NPoint* p : by_f2) {
    const auto pos = place(e, *p, l);
    os << "  <circle class=\"npoint\" cx=\"" << num(pos.x) << "\" cy=\"" << num(pos.y)
       << "\" r=\"4\" fill=\"steelblue\"><title>B=" << p->budget << " f1=" << format_f1(p->f1)
       << " f2=" << p->f2 << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void emit_plot(const Frontier& f, const std::filesystem::path& path) {
  write_text_file(path, frontier_svg(f));
}

}  // namespace sarfreq
