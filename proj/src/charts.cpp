#include "qualcube/charts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qualcube/analytics.hpp"
#include "qualcube/iri.hpp"
#include "qualcube/util.hpp"

namespace qualcube::charts {

namespace {

// Fixed canvas; golden tests depend on these staying put.
constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kLeft = 160;
constexpr double kTop = 48;
constexpr double kRight = 616;
constexpr double kBottom = 312;
constexpr double kPlotW = kRight - kLeft;
constexpr double kPlotH = kBottom - kTop;
constexpr double kLegendY = 336;
constexpr double kPi = 3.14159265358979323846;

const std::vector<std::string> kPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
    "#edc949", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

const std::string& color(std::size_t index) {
  return kPalette[index % kPalette.size()];
}

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Coordinates are rounded to two decimals; data values keep their exact
// shortest form so CSV and SVG agree byte for byte.
std::string num(double value) {
  return util::format_double(std::round(value * 100.0) / 100.0);
}

std::string val(double value) { return util::format_double(value); }

struct Scale {
  double lo = 0.0;
  double hi = 1.0;
  double to_unit(double value) const { return (value - lo) / (hi - lo); }
};

Scale scale_of(const ChartSpec& spec) {
  Scale scale;
  for (const auto& row : spec.values) {
    for (const auto& cell : row) {
      if (!cell) continue;
      scale.lo = std::min(scale.lo, *cell);
      scale.hi = std::max(scale.hi, *cell);
    }
  }
  return scale;
}

void open_svg(std::string& svg, const ChartSpec& spec) {
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
         " " + num(kHeight) + "\" font-family=\"sans-serif\">\n";
  svg += "<title>" + escape_xml(spec.title) + "</title>\n";
  svg += "<rect class=\"bg\" x=\"0\" y=\"0\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" fill=\"#ffffff\"/>\n";
  svg += "<text class=\"chart-title\" x=\"" + num(kWidth / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
         escape_xml(spec.title) + "</text>\n";
}

void axes(std::string& svg) {
  svg += "<line class=\"axis\" x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) +
         "\" x2=\"" + num(kLeft) + "\" y2=\"" + num(kBottom) +
         "\" stroke=\"#333333\"/>\n";
  svg += "<line class=\"axis\" x1=\"" + num(kLeft) + "\" y1=\"" +
         num(kBottom) + "\" x2=\"" + num(kRight) + "\" y2=\"" + num(kBottom) +
         "\" stroke=\"#333333\"/>\n";
}

void tick_text(std::string& svg, double x, double y, const std::string& text,
               const char* anchor) {
  svg += "<text class=\"tick\" x=\"" + num(x) + "\" y=\"" + num(y) +
         "\" text-anchor=\"" + anchor + "\" font-size=\"11\">" +
         escape_xml(text) + "</text>\n";
}

void value_ticks_x(std::string& svg, const Scale& scale) {
  for (double f : {0.0, 0.5, 1.0}) {
    double value = scale.lo + f * (scale.hi - scale.lo);
    tick_text(svg, kLeft + f * kPlotW, kBottom + 16, val(value), "middle");
  }
}

void value_ticks_y(std::string& svg, const Scale& scale) {
  for (double f : {0.0, 0.5, 1.0}) {
    double value = scale.lo + f * (scale.hi - scale.lo);
    tick_text(svg, kLeft - 8, kBottom - f * kPlotH + 4, val(value), "end");
  }
}

void legend(std::string& svg, const std::vector<std::string>& entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    double y = kLegendY + static_cast<double>(i) * 18;
    svg += "<rect class=\"swatch\" x=\"" + num(kLeft) + "\" y=\"" +
           num(y - 10) + "\" width=\"12\" height=\"12\" fill=\"" + color(i) +
           "\"/>\n";
    tick_text(svg, kLeft + 18, y, iri::local_name(entries[i]), "start");
  }
}

void cell_group(std::string& svg, const ChartSpec& spec, std::size_t row,
                std::size_t column, double value, const std::string& body) {
  svg += "<g class=\"cell\" data-row=\"" + escape_xml(spec.rows[row]) +
         "\" data-column=\"" + escape_xml(spec.columns[column]) +
         "\" data-value=\"" + val(value) + "\">" + body + "</g>\n";
}

std::string rect(double x, double y, double w, double h,
                 const std::string& fill) {
  return "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) +
         "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"/>";
}

void render_horizontal_bars(std::string& svg, const ChartSpec& spec,
                            const Scale& scale) {
  axes(svg);
  value_ticks_x(svg, scale);
  std::size_t rows = spec.rows.size();
  std::size_t cols = spec.columns.size();
  double band = kPlotH / static_cast<double>(std::max<std::size_t>(rows, 1));
  double slot = band / static_cast<double>(cols + 1);
  double x_zero = kLeft + scale.to_unit(0.0) * kPlotW;
  for (std::size_t i = 0; i < rows; ++i) {
    tick_text(svg, kLeft - 8,
              kTop + (static_cast<double>(i) + 0.5) * band + 4,
              iri::local_name(spec.rows[i]), "end");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!spec.values[i][j]) continue;
      double value = *spec.values[i][j];
      double x_value = kLeft + scale.to_unit(value) * kPlotW;
      double y = kTop + static_cast<double>(i) * band +
                 (static_cast<double>(j) + 0.5) * slot;
      cell_group(svg, spec, i, j, value,
                 rect(std::min(x_zero, x_value), y,
                      std::abs(x_value - x_zero), slot, color(j)));
    }
  }
  legend(svg, spec.columns);
}

void render_vertical_bars(std::string& svg, const ChartSpec& spec,
                          const Scale& scale) {
  axes(svg);
  value_ticks_y(svg, scale);
  std::size_t rows = spec.rows.size();
  std::size_t cols = spec.columns.size();
  double band = kPlotW / static_cast<double>(std::max<std::size_t>(rows, 1));
  double slot = band / static_cast<double>(cols + 1);
  double y_zero = kBottom - scale.to_unit(0.0) * kPlotH;
  for (std::size_t i = 0; i < rows; ++i) {
    tick_text(svg, kLeft + (static_cast<double>(i) + 0.5) * band,
              kBottom + 16, iri::local_name(spec.rows[i]), "middle");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!spec.values[i][j]) continue;
      double value = *spec.values[i][j];
      double y_value = kBottom - scale.to_unit(value) * kPlotH;
      double x = kLeft + static_cast<double>(i) * band +
                 (static_cast<double>(j) + 0.5) * slot;
      cell_group(svg, spec, i, j, value,
                 rect(x, std::min(y_zero, y_value), slot,
                      std::abs(y_value - y_zero), color(j)));
    }
  }
  legend(svg, spec.columns);
}

void render_lines(std::string& svg, const ChartSpec& spec,
                  const Scale& scale) {
  axes(svg);
  value_ticks_y(svg, scale);
  std::size_t rows = spec.rows.size();
  double band = kPlotW / static_cast<double>(std::max<std::size_t>(rows, 1));
  auto x_of = [&](std::size_t i) {
    return kLeft + (static_cast<double>(i) + 0.5) * band;
  };
  auto y_of = [&](double value) {
    return kBottom - scale.to_unit(value) * kPlotH;
  };
  for (std::size_t i = 0; i < rows; ++i) {
    tick_text(svg, x_of(i), kBottom + 16, iri::local_name(spec.rows[i]),
              "middle");
  }
  for (std::size_t j = 0; j < spec.columns.size(); ++j) {
    std::string points;
    for (std::size_t i = 0; i < rows; ++i) {
      if (!spec.values[i][j]) continue;
      if (!points.empty()) points += ' ';
      points += num(x_of(i)) + "," + num(y_of(*spec.values[i][j]));
    }
    svg += "<polyline class=\"series\" data-column=\"" +
           escape_xml(spec.columns[j]) + "\" points=\"" + points +
           "\" fill=\"none\" stroke=\"" + color(j) +
           "\" stroke-width=\"2\"/>\n";
    for (std::size_t i = 0; i < rows; ++i) {
      if (!spec.values[i][j]) continue;
      double value = *spec.values[i][j];
      svg += "<circle class=\"pt\" data-row=\"" + escape_xml(spec.rows[i]) +
             "\" data-column=\"" + escape_xml(spec.columns[j]) +
             "\" data-value=\"" + val(value) + "\" cx=\"" + num(x_of(i)) +
             "\" cy=\"" + num(y_of(value)) + "\" r=\"3.5\" fill=\"" +
             color(j) + "\"/>\n";
    }
  }
  legend(svg, spec.columns);
}

void render_radar(std::string& svg, const ChartSpec& spec,
                  const Scale& scale) {
  double cx = (kLeft + kRight) / 2;
  double cy = (kTop + kBottom) / 2;
  double radius = std::min(kPlotW, kPlotH) / 2 - 8;
  std::size_t cols = spec.columns.size();
  auto angle_of = [&](std::size_t j) {
    return -kPi / 2 + 2 * kPi * static_cast<double>(j) /
                          static_cast<double>(cols);
  };
  auto point_at = [&](std::size_t j, double r) {
    return std::pair<double, double>(cx + r * std::cos(angle_of(j)),
                                     cy + r * std::sin(angle_of(j)));
  };

  std::string ring;
  for (std::size_t j = 0; j < cols; ++j) {
    auto [x, y] = point_at(j, radius);
    svg += "<line class=\"spoke\" x1=\"" + num(cx) + "\" y1=\"" + num(cy) +
           "\" x2=\"" + num(x) + "\" y2=\"" + num(y) +
           "\" stroke=\"#cccccc\"/>\n";
    auto [lx, ly] = point_at(j, radius + 14);
    tick_text(svg, lx, ly + 4, iri::local_name(spec.columns[j]), "middle");
    if (!ring.empty()) ring += ' ';
    ring += num(x) + "," + num(y);
  }
  svg += "<polygon class=\"grid\" points=\"" + ring +
         "\" fill=\"none\" stroke=\"#cccccc\"/>\n";

  for (std::size_t i = 0; i < spec.rows.size(); ++i) {
    std::string points;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!spec.values[i][j]) continue;
      auto [x, y] = point_at(j, scale.to_unit(*spec.values[i][j]) * radius);
      if (!points.empty()) points += ' ';
      points += num(x) + "," + num(y);
    }
    svg += "<polygon class=\"dataset\" data-row=\"" +
           escape_xml(spec.rows[i]) + "\" points=\"" + points + "\" fill=\"" +
           color(i) + "\" fill-opacity=\"0.15\" stroke=\"" + color(i) +
           "\" stroke-width=\"2\"/>\n";
    for (std::size_t j = 0; j < cols; ++j) {
      if (!spec.values[i][j]) continue;
      double value = *spec.values[i][j];
      auto [x, y] = point_at(j, scale.to_unit(value) * radius);
      svg += "<circle class=\"pt\" data-row=\"" + escape_xml(spec.rows[i]) +
             "\" data-column=\"" + escape_xml(spec.columns[j]) +
             "\" data-value=\"" + val(value) + "\" cx=\"" + num(x) +
             "\" cy=\"" + num(y) + "\" r=\"3.5\" fill=\"" + color(i) +
             "\"/>\n";
    }
  }
  legend(svg, spec.rows);
}

}  // namespace

std::optional<ChartKind> chart_kind_from_name(std::string_view name) {
  if (name == "hbar") return ChartKind::HorizontalBar;
  if (name == "vbar") return ChartKind::VerticalBar;
  if (name == "radar") return ChartKind::Radar;
  if (name == "lines") return ChartKind::Lines;
  return std::nullopt;
}

std::string_view chart_kind_name(ChartKind kind) {
  switch (kind) {
    case ChartKind::HorizontalBar: return "hbar";
    case ChartKind::VerticalBar: return "vbar";
    case ChartKind::Radar: return "radar";
    case ChartKind::Lines: return "lines";
  }
  return "?";
}

ChartSpec chart_spec(const rdf::QuadDataset& graphs, ChartKind kind,
                     const std::vector<std::string>& computed_on,
                     const std::vector<std::string>& metric_classes,
                     const daq::TBox& t, const std::string& title) {
  ChartSpec spec;
  spec.kind = kind;
  spec.rows = computed_on;
  spec.columns = metric_classes;
  spec.title = title;
  switch (kind) {
    case ChartKind::HorizontalBar:
      spec.x_label = "value";
      spec.y_label = "dataset";
      break;
    case ChartKind::VerticalBar:
    case ChartKind::Lines:
      spec.x_label = "dataset";
      spec.y_label = "value";
      break;
    case ChartKind::Radar:
      break;
  }

  std::vector<quality::Observation> pool =
      analytics::all_observations(graphs, t);
  spec.values.resize(spec.rows.size());
  for (std::size_t i = 0; i < spec.rows.size(); ++i) {
    spec.values[i].resize(spec.columns.size());
    for (std::size_t j = 0; j < spec.columns.size(); ++j) {
      const quality::Observation* latest =
          analytics::latest_in(pool, spec.columns[j], spec.rows[i], t);
      if (latest) {
        spec.values[i][j] = analytics::numeric_value(latest->value);
      }
    }
  }
  return spec;
}

std::string export_csv(const ChartSpec& spec) {
  auto field = [](const std::string& text) {
    if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
      if (c == '"') quoted += "\"\"";
      else quoted += c;
    }
    quoted += '"';
    return quoted;
  };

  std::string out = "computedOn";
  for (const std::string& column : spec.columns) {
    out += ",";
    out += field(column);
  }
  out += "\r\n";
  for (std::size_t i = 0; i < spec.rows.size(); ++i) {
    out += field(spec.rows[i]);
    for (std::size_t j = 0; j < spec.columns.size(); ++j) {
      out += ",";
      if (i < spec.values.size() && j < spec.values[i].size() &&
          spec.values[i][j]) {
        out += val(*spec.values[i][j]);
      }
    }
    out += "\r\n";
  }
  return out;
}

std::string render_svg(const ChartSpec& spec) {
  if (spec.values.size() != spec.rows.size()) {
    throw std::invalid_argument(
        "values matrix has " + std::to_string(spec.values.size()) +
        " rows, expected " + std::to_string(spec.rows.size()));
  }
  for (const auto& row : spec.values) {
    if (row.size() != spec.columns.size()) {
      throw std::invalid_argument(
          "values matrix row has " + std::to_string(row.size()) +
          " cells, expected " + std::to_string(spec.columns.size()));
    }
  }
  if (spec.kind == ChartKind::Radar && spec.columns.size() < 3) {
    throw std::invalid_argument(
        "a radar chart needs at least three metrics; use a bar chart "
        "instead");
  }

  Scale scale = scale_of(spec);
  std::string svg;
  open_svg(svg, spec);
  switch (spec.kind) {
    case ChartKind::HorizontalBar:
      render_horizontal_bars(svg, spec, scale);
      break;
    case ChartKind::VerticalBar:
      render_vertical_bars(svg, spec, scale);
      break;
    case ChartKind::Lines:
      render_lines(svg, spec, scale);
      break;
    case ChartKind::Radar:
      render_radar(svg, spec, scale);
      break;
  }
  if (!spec.x_label.empty()) {
    tick_text(svg, (kLeft + kRight) / 2, kHeight - 6, spec.x_label, "middle");
  }
  if (!spec.y_label.empty()) {
    tick_text(svg, kLeft, kTop - 10, spec.y_label, "middle");
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace qualcube::charts
