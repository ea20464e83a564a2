#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qualcube/dataset.hpp"
#include "qualcube/tbox.hpp"

namespace qualcube::charts {

enum class ChartKind { HorizontalBar, VerticalBar, Radar, Lines };

std::optional<ChartKind> chart_kind_from_name(std::string_view name);
std::string_view chart_kind_name(ChartKind kind);

// A filled plotting table: one row per dataset (computedOn IRI), one
// column per metric class, cells holding the latest observation value or
// nothing. Missing cells render as gaps, never as zero.
struct ChartSpec {
  ChartKind kind = ChartKind::HorizontalBar;
  std::vector<std::string> rows;     // computedOn IRIs, plot order
  std::vector<std::string> columns;  // metric class IRIs, plot order
  std::vector<std::vector<std::optional<double>>> values;  // rows x columns
  std::string title;
  std::string x_label;
  std::string y_label;
};

// Reads the latest observation per (computedOn, metric class) cell out of
// the quality graphs. t must be closed.
ChartSpec chart_spec(const rdf::QuadDataset& graphs, ChartKind kind,
                     const std::vector<std::string>& computed_on,
                     const std::vector<std::string>& metric_classes,
                     const daq::TBox& t,
                     const std::string& title = "Quality metrics");

// RFC-4180 CSV: header `computedOn` plus one column per metric class, one
// row per dataset, empty cells for missing values, CRLF line endings.
std::string export_csv(const ChartSpec& spec);

// Self-contained static SVG. Every present cell carries exactly one
// element with a data-value attribute; bar charts emit one <g
// class="cell"> per present cell, the lines plot one <polyline
// class="series"> per column, the radar one <polygon class="dataset"> per
// row. The value axis spans [0,1] unless the data exceeds it; colors come
// from a fixed palette. Throws std::invalid_argument on mismatched matrix
// dimensions or a radar with fewer than three metrics.
std::string render_svg(const ChartSpec& spec);

}  // namespace qualcube::charts
