#include "hamsim/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hamsim {

namespace {

const char* kCsvHeader =
    "model,params,width,method,seed,raw_fidelity,polarization_fidelity,rescaled_fidelity,"
    "layered_depth,gate_count,two_qubit_count,elapsed_ns,kernel_ns,shots,timestamp";

std::string csv_quote(const std::string& field) {
  bool needs_quoting = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs_quoting) return field;
  std::string out = "\"";
  for (char c : field) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

void write_records_csv(const std::vector<BenchRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open CSV output '" + path + "'");
  out << kCsvHeader << "\r\n";
  for (const BenchRecord& r : records) {
    out << csv_quote(r.model) << ',' << csv_quote(r.params.dump()) << ',' << r.width << ','
        << method_name(r.method) << ',' << r.seed << ',' << fmt_double(r.raw_fidelity) << ','
        << fmt_double(r.polarization_fidelity) << ',' << fmt_double(r.rescaled_fidelity) << ','
        << r.depth.layered_depth << ',' << r.depth.gate_count << ',' << r.depth.two_qubit_count
        << ',' << r.elapsed_ns << ',' << r.kernel_ns << ',' << r.shots << ','
        << csv_quote(r.timestamp) << "\r\n";
  }
}

std::vector<BenchRecord> read_records_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open CSV input '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV file");

  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto fields = parse_csv_line(line);
    if (fields.size() != 15) throw std::runtime_error("CSV row with wrong field count");
    BenchRecord r;
    r.model = fields[0];
    r.params = ordered_json::parse(fields[1]);
    r.width = static_cast<uint32_t>(std::stoul(fields[2]));
    auto m = method_from_name(fields[3]);
    if (!m) throw std::runtime_error("unknown method '" + fields[3] + "' in CSV");
    r.method = *m;
    r.seed = std::stoull(fields[4]);
    r.raw_fidelity = std::stod(fields[5]);
    r.polarization_fidelity = std::stod(fields[6]);
    r.rescaled_fidelity = std::stod(fields[7]);
    r.depth.layered_depth = static_cast<uint32_t>(std::stoul(fields[8]));
    r.depth.gate_count = static_cast<uint32_t>(std::stoul(fields[9]));
    r.depth.two_qubit_count = static_cast<uint32_t>(std::stoul(fields[10]));
    r.elapsed_ns = std::stoull(fields[11]);
    r.kernel_ns = std::stoull(fields[12]);
    r.shots = std::stoull(fields[13]);
    r.timestamp = fields[14];
    records.push_back(std::move(r));
  }
  return records;
}

namespace {

constexpr double kWidthPx = 800.0, kHeightPx = 600.0;
constexpr double kLeft = 70.0, kRight = 770.0, kTop = 50.0, kBottom = 540.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct SvgCanvas {
  std::ostringstream body;

  void line(double x1, double y1, double x2, double y2, const std::string& stroke,
            double stroke_width = 1.0, const std::string& dash = "") {
    body << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
         << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
         << num(stroke_width) << "\"";
    if (!dash.empty()) body << " stroke-dasharray=\"" << dash << "\"";
    body << "/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
                double stroke_width = 2.0, const std::string& dash = "") {
    body << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
         << num(stroke_width) << "\"";
    if (!dash.empty()) body << " stroke-dasharray=\"" << dash << "\"";
    body << " points=\"";
    for (const auto& [x, y] : pts) body << num(x) << "," << num(y) << " ";
    body << "\"/>\n";
  }

  void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& fill,
               double opacity) {
    body << "<polygon fill=\"" << fill << "\" fill-opacity=\"" << num(opacity)
         << "\" stroke=\"none\" points=\"";
    for (const auto& [x, y] : pts) body << num(x) << "," << num(y) << " ";
    body << "\"/>\n";
  }

  void circle(double x, double y, double r, const std::string& fill) {
    body << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r)
         << "\" fill=\"" << fill << "\"/>\n";
  }

  void text(double x, double y, const std::string& s, double size = 13.0,
            const std::string& anchor = "start", const std::string& fill = "#000") {
    body << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << num(size)
         << "\" font-family=\"sans-serif\" text-anchor=\"" << anchor << "\" fill=\"" << fill
         << "\">" << s << "</text>\n";
  }

  void save(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open SVG output '" + path + "'");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidthPx) << "\" height=\""
        << num(kHeightPx) << "\" viewBox=\"0 0 " << num(kWidthPx) << " " << num(kHeightPx)
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out << body.str();
    out << "</svg>\n";
  }
};

struct Axis {
  double lo = 0.0, hi = 1.0;
  double map(double v, double px_lo, double px_hi) const {
    if (hi == lo) return (px_lo + px_hi) / 2.0;
    return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
  }
};

void draw_frame(SvgCanvas& svg, const std::string& title, const std::string& x_label,
                const std::string& y_label) {
  svg.line(kLeft, kTop, kLeft, kBottom, "#000");
  svg.line(kLeft, kBottom, kRight, kBottom, "#000");
  svg.text((kLeft + kRight) / 2.0, 28.0, title, 16.0, "middle");
  svg.text((kLeft + kRight) / 2.0, kHeightPx - 20.0, x_label, 13.0, "middle");
  svg.text(18.0, (kTop + kBottom) / 2.0, y_label, 13.0, "middle");
}

// Per-method series of (width -> values) grouped from records.
using Series = std::map<std::string, std::map<uint32_t, std::vector<double>>>;

Series group_by_method(const std::vector<BenchRecord>& records, bool use_depth) {
  Series series;
  for (const BenchRecord& r : records) {
    double v = use_depth ? static_cast<double>(r.depth.layered_depth) : r.rescaled_fidelity;
    series[method_name(r.method)][r.width].push_back(v);
  }
  return series;
}

void draw_series_chart(const Series& series, const std::string& title, const std::string& y_label,
                       Axis y_axis, const std::string& path, bool band) {
  SvgCanvas svg;
  draw_frame(svg, title, "circuit width (qubits)", y_label);

  std::set<uint32_t> widths;
  for (const auto& [method, per_width] : series)
    for (const auto& [w, values] : per_width) widths.insert(w);
  if (widths.empty()) throw std::invalid_argument("no records to plot");

  Axis x_axis{static_cast<double>(*widths.begin()), static_cast<double>(*widths.rbegin())};
  if (x_axis.lo == x_axis.hi) x_axis.hi = x_axis.lo + 1.0;

  for (uint32_t w : widths) {
    double x = x_axis.map(w, kLeft, kRight);
    svg.line(x, kBottom, x, kBottom + 5, "#000");
    svg.text(x, kBottom + 20, std::to_string(w), 12.0, "middle");
  }
  for (int t = 0; t <= 5; ++t) {
    double v = y_axis.lo + (y_axis.hi - y_axis.lo) * t / 5.0;
    double y = y_axis.map(v, kBottom, kTop);
    svg.line(kLeft - 5, y, kLeft, y, "#000");
    svg.text(kLeft - 8, y + 4, num(v), 12.0, "end");
  }

  size_t color = 0;
  double legend_y = kTop + 10.0;
  for (const auto& [method, per_width] : series) {
    const std::string stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
    ++color;

    std::vector<std::pair<double, double>> mean_pts, lo_pts, hi_pts;
    for (const auto& [w, values] : per_width) {
      double mn = *std::min_element(values.begin(), values.end());
      double mx = *std::max_element(values.begin(), values.end());
      double sum = 0.0;
      for (double v : values) sum += v;
      double mean = sum / static_cast<double>(values.size());
      double x = x_axis.map(w, kLeft, kRight);
      mean_pts.emplace_back(x, y_axis.map(mean, kBottom, kTop));
      lo_pts.emplace_back(x, y_axis.map(mn, kBottom, kTop));
      hi_pts.emplace_back(x, y_axis.map(mx, kBottom, kTop));
    }
    if (band && mean_pts.size() > 1) {
      std::vector<std::pair<double, double>> poly = hi_pts;
      poly.insert(poly.end(), lo_pts.rbegin(), lo_pts.rend());
      svg.polygon(poly, stroke, 0.15);
    }
    svg.polyline(mean_pts, stroke);
    for (const auto& [x, y] : mean_pts) svg.circle(x, y, 2.5, stroke);

    svg.line(kRight - 150, legend_y, kRight - 120, legend_y, stroke, 2.0);
    svg.text(kRight - 112, legend_y + 4, method, 12.0);
    legend_y += 18.0;
  }
  svg.save(path);
}

}  // namespace

void write_fidelity_svg(const std::vector<BenchRecord>& records, const std::string& path) {
  if (records.empty()) throw std::invalid_argument("write_fidelity_svg: no records");
  draw_series_chart(group_by_method(records, false), "Fidelity vs width", "rescaled fidelity",
                    Axis{0.0, 1.0}, path, true);
}

void write_depth_svg(const std::vector<BenchRecord>& records, const std::string& path) {
  if (records.empty()) throw std::invalid_argument("write_depth_svg: no records");
  Series series = group_by_method(records, true);
  double hi = 1.0;
  for (const auto& [method, per_width] : series)
    for (const auto& [w, values] : per_width)
      hi = std::max(hi, *std::max_element(values.begin(), values.end()));
  draw_series_chart(series, "Layered depth vs width", "layered depth", Axis{0.0, hi * 1.05}, path,
                    false);
}

void write_timing_svg(const std::vector<TimingRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("write_timing_svg: no timing rows");

  std::map<std::string, std::vector<TimingRow>> by_backend;
  for (const TimingRow& r : rows) by_backend[r.backend].push_back(r);

  double lo = 1e300, hi = -1e300;
  std::set<uint32_t> widths;
  for (const TimingRow& r : rows) {
    widths.insert(r.width);
    for (double v : {1e-9 * static_cast<double>(r.kernel_ns), 1e-9 * static_cast<double>(r.elapsed_ns)}) {
      if (v <= 0.0) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (lo >= hi) {
    lo = 1e-6;
    hi = 1.0;
  }
  Axis y_axis{std::floor(std::log10(lo)), std::ceil(std::log10(hi))};
  if (y_axis.lo == y_axis.hi) y_axis.hi = y_axis.lo + 1.0;
  Axis x_axis{static_cast<double>(*widths.begin()), static_cast<double>(*widths.rbegin())};
  if (x_axis.lo == x_axis.hi) x_axis.hi = x_axis.lo + 1.0;

  SvgCanvas svg;
  draw_frame(svg, "Execution time vs width", "circuit width (qubits)", "seconds (log scale)");
  for (uint32_t w : widths) {
    double x = x_axis.map(w, kLeft, kRight);
    svg.line(x, kBottom, x, kBottom + 5, "#000");
    svg.text(x, kBottom + 20, std::to_string(w), 12.0, "middle");
  }
  for (int e = static_cast<int>(y_axis.lo); e <= static_cast<int>(y_axis.hi); ++e) {
    double y = y_axis.map(e, kBottom, kTop);
    svg.line(kLeft - 5, y, kLeft, y, "#000");
    svg.text(kLeft - 8, y + 4, "1e" + std::to_string(e), 12.0, "end");
  }

  size_t color = 0;
  double legend_y = kTop + 10.0;
  for (const auto& [backend, backend_rows] : by_backend) {
    const std::string stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
    ++color;
    for (const std::string& field : {std::string("kernel"), std::string("elapsed")}) {
      TimingSeries series = timing_series(backend_rows, field);
      std::vector<std::pair<double, double>> pts;
      for (const auto& [w, seconds] : series)
        if (seconds > 0.0)
          pts.emplace_back(x_axis.map(w, kLeft, kRight),
                           y_axis.map(std::log10(seconds), kBottom, kTop));
      svg.polyline(pts, stroke, 2.0, field == "elapsed" ? "6,4" : "");
      svg.line(kRight - 170, legend_y, kRight - 140, legend_y, stroke, 2.0,
               field == "elapsed" ? "6,4" : "");
      svg.text(kRight - 132, legend_y + 4, backend + " " + field, 12.0);
      legend_y += 18.0;
    }
  }

  if (by_backend.size() >= 2) {
    auto it = by_backend.begin();
    TimingSeries a = timing_series(it->second, "kernel");
    ++it;
    TimingSeries b = timing_series(it->second, "kernel");
    try {
      if (auto w = crossover_width(a, b)) {
        double x = x_axis.map(*w, kLeft, kRight);
        svg.line(x, kTop, x, kBottom, "#d62728", 1.5, "4,4");
        double seconds = 0.0;
        for (const auto& [sw, sv] : a)
          if (sw == *w) seconds = sv;
        if (seconds > 0.0)
          svg.circle(x, y_axis.map(std::log10(seconds), kBottom, kTop), 5.0, "#d62728");
        svg.text(x + 6, kTop + 14, "crossover @ " + std::to_string(*w), 12.0, "start", "#d62728");
      }
    } catch (const std::invalid_argument&) {
      // fewer than 2 shared grid points: nothing to mark
    }
  }
  svg.save(path);
}

}  // namespace hamsim
