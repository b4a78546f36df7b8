#include "thetascale/spec_parse.hpp"

#include <charconv>
#include <complex>
#include <sstream>

#include "thetascale/errors.hpp"
#include "thetascale/io.hpp"

namespace thetascale {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(s);
    while (std::getline(ss, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

// Splits "kind:rest"; rest may be empty when there is no colon.
std::pair<std::string, std::string> keyword(const std::string& s) {
    auto pos = s.find(':');
    if (pos == std::string::npos) return {s, ""};
    return {s.substr(0, pos), s.substr(pos + 1)};
}

} // namespace

double parse_double(const std::string& tok, const std::string& what) {
    double v;
    const char* b = tok.data();
    const char* e = b + tok.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e)
        throw parse_error("bad " + what + " '" + tok + "'");
    return v;
}

std::vector<double> parse_double_list(const std::string& s, const std::string& what) {
    std::vector<double> out;
    for (const auto& tok : split(s, ','))
        out.push_back(parse_double(tok, what));
    return out;
}

Point parse_point(const std::string& s) {
    auto v = parse_double_list(s, "point coordinate");
    if (v.size() < 2 || v.size() > 4)
        throw parse_error("point '" + s + "' needs 2..4 comma-separated values (t,x1[,x2[,x3]])");
    Vec x(static_cast<int>(v.size()) - 1);
    for (std::size_t i = 1; i < v.size(); ++i) x.c[i - 1] = v[i];
    return {v[0], x};
}

ThetaField parse_theta(const std::string& s) {
    auto [kind, rest] = keyword(s);
    if (kind == "constant") {
        return ThetaField::constant(parse_double(rest, "constant value"));
    }
    if (kind == "linear") {
        auto parts = split(rest, ';');
        if (parts.empty() || parts.size() > 2)
            throw parse_error("linear field '" + s + "' needs <b1,..,bd>[;<c>]");
        auto b = parse_double_list(parts[0], "linear coefficient");
        if (b.size() < 1 || b.size() > 3)
            throw parse_error("linear field '" + s + "' needs 1..3 slope components");
        Vec bv(static_cast<int>(b.size()));
        for (std::size_t i = 0; i < b.size(); ++i) bv.c[i] = b[i];
        double c = parts.size() == 2 ? parse_double(parts[1], "linear offset") : 0.0;
        return ThetaField::linear(bv, c);
    }
    if (kind == "radial") {
        auto parts = split(rest, '@');
        if (parts.size() != 2)
            throw parse_error("radial field '" + s + "' needs <K>@<cx,..>");
        double K = parse_double(parts[0], "radial strength");
        auto c = parse_double_list(parts[1], "radial center coordinate");
        if (c.size() < 1 || c.size() > 3)
            throw parse_error("radial field '" + s + "' needs a 1..3 dimensional center");
        Vec cv(static_cast<int>(c.size()));
        for (std::size_t i = 0; i < c.size(); ++i) cv.c[i] = c[i];
        return ThetaField::radial(K, cv);
    }
    if (kind == "time-linear" || kind == "time-quadratic") {
        auto parts = split(rest, '@');
        if (parts.empty() || parts.size() > 2)
            throw parse_error(kind + " field '" + s + "' needs <k>[@<t_ref>]");
        double k = parse_double(parts[0], "time coefficient");
        double t_ref = parts.size() == 2 ? parse_double(parts[1], "reference time") : 0.0;
        return kind == "time-linear" ? ThetaField::time_linear(k, t_ref)
                                     : ThetaField::time_quadratic(k, t_ref);
    }
    if (kind == "table") {
        if (rest.empty()) throw parse_error("table field needs a file path");
        auto rows = read_table(rest, 2);
        std::vector<double> xs, th;
        for (const auto& r : rows) {
            xs.push_back(r[0]);
            th.push_back(r[1]);
        }
        return ThetaField::tabulated(xs, th);
    }
    throw parse_error("unknown field kind '" + kind + "'");
}

Metric parse_metric(const std::string& s) {
    auto [kind, rest] = keyword(s);
    if (kind == "euclidean")
        return Metric::euclidean(rest.empty() ? 3 : static_cast<int>(parse_double(rest, "dimension")));
    if (kind == "minkowski")
        return Metric::minkowski(rest.empty() ? 3 : static_cast<int>(parse_double(rest, "dimension")));
    if (kind == "frw") {
        auto parts = split(rest, ';');
        if (parts.size() != 2 || parts[1].substr(0, 2) != "a=")
            throw parse_error("frw metric '" + s + "' needs <k>;a=<num|poly:c0,c1,...>");
        double k = parse_double(parts[0], "spatial curvature");
        std::string a = parts[1].substr(2);
        std::vector<double> coeff;
        if (a.substr(0, 5) == "poly:")
            coeff = parse_double_list(a.substr(5), "scale-factor coefficient");
        else
            coeff = {parse_double(a, "scale factor")};
        return Metric::frw(k, coeff);
    }
    throw parse_error("unknown metric kind '" + kind + "'");
}

Curve parse_curve(const std::string& s) {
    auto [kind, rest] = keyword(s);
    if (kind == "segment") {
        auto v = parse_double_list(rest, "segment coordinate");
        if (v.size() < 4 || v.size() > 8 || v.size() % 2 != 0)
            throw parse_error("segment '" + s + "' needs two equal-length points t,x..,t,x..");
        const int d = static_cast<int>(v.size()) / 2 - 1;
        Point from{v[0], Vec(d)}, to{v[d + 1], Vec(d)};
        for (int i = 0; i < d; ++i) {
            from.x.c[i] = v[1 + i];
            to.x.c[i] = v[d + 2 + i];
        }
        return Curve::segment(from, to);
    }
    if (kind == "poly") {
        auto groups = split(rest, ';');
        if (groups.size() < 2 || groups.size() > 4)
            throw parse_error("poly curve '" + s + "' needs t coeffs plus 1..3 spatial groups");
        std::vector<std::vector<double>> coeff;
        for (const auto& g : groups)
            coeff.push_back(parse_double_list(g, "polynomial coefficient"));
        return Curve::polynomial(coeff);
    }
    if (kind == "polyline") {
        if (rest.empty() || rest[0] != '@')
            throw parse_error("polyline needs @<path>");
        auto rows = read_table(rest.substr(1), 2);
        const auto cols = rows[0].size();
        if (cols > 4) throw parse_error("polyline rows must be t,x1[,x2[,x3]]");
        std::vector<Point> pts;
        for (const auto& r : rows) {
            if (r.size() != cols)
                throw parse_error("polyline rows must all have the same width");
            Point p{r[0], Vec(static_cast<int>(cols) - 1)};
            for (std::size_t i = 1; i < cols; ++i) p.x.c[i - 1] = r[i];
            pts.push_back(p);
        }
        return Curve::polyline(pts);
    }
    throw parse_error("unknown curve kind '" + kind + "'");
}

WavePacket parse_packet(const std::string& s) {
    auto [kind, rest] = keyword(s);
    if (kind == "gaussian") {
        auto parts = split(rest, ';');
        if (parts.size() != 2)
            throw parse_error("gaussian packet '" + s + "' needs <mu..>;<sigma..>");
        auto mu = parse_double_list(parts[0], "packet center");
        auto sg = parse_double_list(parts[1], "packet width");
        if (mu.size() != sg.size() || mu.empty() || mu.size() > 3)
            throw parse_error("gaussian packet '" + s + "' needs matching 1..3 dim center/width");
        Vec m(static_cast<int>(mu.size())), w(static_cast<int>(sg.size()));
        for (std::size_t i = 0; i < mu.size(); ++i) {
            m.c[i] = mu[i];
            w.c[i] = sg[i];
        }
        return WavePacket::gaussian(m, w);
    }
    if (kind == "sampled") {
        if (rest.empty() || rest[0] != '@')
            throw parse_error("sampled packet needs @<path>");
        auto rows = read_table(rest.substr(1), 2);
        std::vector<double> grid;
        std::vector<std::complex<double>> amp;
        for (const auto& r : rows) {
            grid.push_back(r[0]);
            amp.emplace_back(r[1], r.size() > 2 ? r[2] : 0.0);
        }
        return WavePacket::sampled(grid, amp);
    }
    throw parse_error("unknown packet kind '" + kind + "'");
}

Lagrangian parse_lagrangian(const std::string& s) {
    auto [kind, rest] = keyword(s);
    if (kind == "free") return Lagrangian::free(parse_double(rest, "mass"));
    if (kind == "harmonic") {
        auto parts = split(rest, ';');
        if (parts.size() != 2)
            throw parse_error("harmonic lagrangian '" + s + "' needs <m>;<k>");
        return Lagrangian::harmonic(parse_double(parts[0], "mass"),
                                    parse_double(parts[1], "spring constant"));
    }
    throw parse_error("unknown lagrangian kind '" + kind + "'");
}

} // namespace thetascale
