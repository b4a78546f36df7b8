#include "thetascale/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "thetascale/errors.hpp"

namespace thetascale {

std::string format_sig(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%#.13g", v);
    return buf;
}

std::string csv_document(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

namespace {

bool parse_number(const std::string& tok, double& out) {
    const char* b = tok.data();
    const char* e = b + tok.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

std::vector<std::vector<double>> read_table(const std::string& path, std::size_t min_cols) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'");
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string tok;
        bool bad = false;
        std::string bad_tok;
        while (std::getline(ss, tok, ',')) {
            tok = trim(tok);
            double v;
            if (!parse_number(tok, v)) {
                bad = true;
                bad_tok = tok;
                break;
            }
            row.push_back(v);
        }
        if (bad) {
            if (first) { // header line
                first = false;
                continue;
            }
            throw parse_error("bad numeric token '" + bad_tok + "' in '" + path + "'");
        }
        if (row.size() < min_cols)
            throw parse_error("row with " + std::to_string(row.size()) + " columns in '" +
                              path + "', expected at least " + std::to_string(min_cols));
        rows.push_back(std::move(row));
        first = false;
    }
    if (rows.empty()) throw parse_error("no numeric rows in '" + path + "'");
    return rows;
}

namespace {

std::string fnum(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fcoord(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

const char* palette(std::size_t i) {
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b"};
    return colors[i % 6];
}

} // namespace

std::string svg_plot(const std::string& title, const std::string& xlabel,
                     const std::string& ylabel, const std::vector<PlotSeries>& series) {
    const double W = 800, H = 600;
    const double L = 70, R = 770, T = 50, B = 550;

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool any = false;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (!any) {
                xmin = xmax = s.x[i];
                ymin = ymax = s.y[i];
                any = true;
            } else {
                xmin = std::min(xmin, s.x[i]);
                xmax = std::max(xmax, s.x[i]);
                ymin = std::min(ymin, s.y[i]);
                ymax = std::max(ymax, s.y[i]);
            }
        }
    if (xmax - xmin < 1e-300) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    if (ymax - ymin < 1e-300) {
        ymin -= 1.0;
        ymax += 1.0;
    }
    const double xpad = 0.05 * (xmax - xmin), ypad = 0.05 * (ymax - ymin);
    xmin -= xpad;
    xmax += xpad;
    ymin -= ypad;
    ymax += ypad;

    auto mapx = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (R - L); };
    auto mapy = [&](double y) { return B - (y - ymin) / (ymax - ymin) * (B - T); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fnum(W) + "\" height=\"" +
           fnum(H) + "\" viewBox=\"0 0 " + fnum(W) + " " + fnum(H) + "\">\n";
    svg += "<rect width=\"" + fnum(W) + "\" height=\"" + fnum(H) + "\" fill=\"white\"/>\n";
    svg += "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"18\">" + title + "</text>\n";

    // Axis lines.
    svg += "<line x1=\"" + fcoord(L) + "\" y1=\"" + fcoord(B) + "\" x2=\"" + fcoord(R) +
           "\" y2=\"" + fcoord(B) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fcoord(L) + "\" y1=\"" + fcoord(T) + "\" x2=\"" + fcoord(L) +
           "\" y2=\"" + fcoord(B) + "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 5.0;
        const double fy = ymin + (ymax - ymin) * i / 5.0;
        const double px = mapx(fx), py = mapy(fy);
        svg += "<line x1=\"" + fcoord(px) + "\" y1=\"" + fcoord(B) + "\" x2=\"" + fcoord(px) +
               "\" y2=\"" + fcoord(B + 6) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fcoord(px) + "\" y=\"" + fcoord(B + 22) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
               fnum(fx) + "</text>\n";
        svg += "<line x1=\"" + fcoord(L - 6) + "\" y1=\"" + fcoord(py) + "\" x2=\"" +
               fcoord(L) + "\" y2=\"" + fcoord(py) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fcoord(L - 10) + "\" y=\"" + fcoord(py + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
               fnum(fy) + "</text>\n";
    }

    svg += "<text x=\"420\" y=\"585\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">" + xlabel + "</text>\n";
    svg += "<text x=\"18\" y=\"300\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\" transform=\"rotate(-90 18 300)\">" + ylabel + "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += palette(k);
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (i) svg += ' ';
            svg += fcoord(mapx(s.x[i])) + "," + fcoord(mapy(s.y[i]));
        }
        svg += "\"/>\n";
        svg += "<text x=\"" + fcoord(R - 120) + "\" y=\"" + fcoord(T + 18 + 18 * k) +
               "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"";
        svg += palette(k);
        svg += "\">" + s.name + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write file '" + path + "'");
    out << content;
}

} // namespace thetascale
