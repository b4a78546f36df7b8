#pragma once

#include <string>
#include <vector>

namespace thetascale {

// Fixed-format number rendering for CSV output: 13 significant digits,
// trailing zeros kept, '.' decimal separator, locale independent.
std::string format_sig(double v);

// One CSV document: header plus pre-formatted cells, LF line endings.
std::string csv_document(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

// Numeric table reader: comma-separated rows, optional header line,
// blank lines skipped, CR tolerated. Throws parse_error naming the token.
std::vector<std::vector<double>> read_table(const std::string& path, std::size_t min_cols);

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

// Self-contained 800x600 SVG with axis lines, tick labels, and one polyline
// per series. Deterministic output for identical input.
std::string svg_plot(const std::string& title, const std::string& xlabel,
                     const std::string& ylabel, const std::vector<PlotSeries>& series);

void write_file(const std::string& path, const std::string& content);

} // namespace thetascale
