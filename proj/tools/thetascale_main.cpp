#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetascale/curves.hpp"
#include "thetascale/dynamics.hpp"
#include "thetascale/errors.hpp"
#include "thetascale/geodesics.hpp"
#include "thetascale/geometry.hpp"
#include "thetascale/holes.hpp"
#include "thetascale/io.hpp"
#include "thetascale/quantum.hpp"
#include "thetascale/spec_parse.hpp"
#include "thetascale/theta_field.hpp"

namespace ts = thetascale;

namespace {

// CLI11 config reader for flat JSON objects {"flag": value}.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw CLI::FileError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) throw CLI::FileError("config must be a JSON object");
        std::vector<CLI::ConfigItem> items;
        for (auto it = j.begin(); it != j.end(); ++it) {
            CLI::ConfigItem item;
            item.name = it.key();
            const auto& v = it.value();
            if (v.is_boolean())
                item.inputs = {v.get<bool>() ? "true" : "false"};
            else if (v.is_string())
                item.inputs = {v.get<std::string>()};
            else if (v.is_number())
                item.inputs = {v.dump()};
            else
                throw CLI::FileError("config value for '" + it.key() +
                                     "' must be a scalar");
            items.push_back(std::move(item));
        }
        return items;
    }
};

struct Common {
    ts::QuadratureConfig quad;
    std::string out;
    std::string plot;
};

double default_rel_tol() {
    const char* env = std::getenv("THETASCALE_TOL");
    if (env) {
        double v;
        auto [p, ec] = std::from_chars(env, env + std::string(env).size(), v);
        if (ec == std::errc() && *p == '\0' && v > 0) return v;
    }
    return ts::QuadratureConfig{}.rel_tol;
}

void add_common(CLI::App* sub, Common& c, bool with_plot) {
    c.quad.rel_tol = default_rel_tol();
    sub->add_option("--rel-tol", c.quad.rel_tol, "Relative quadrature tolerance");
    sub->add_option("--abs-tol", c.quad.abs_tol, "Absolute quadrature tolerance");
    sub->add_option("--max-subdivisions", c.quad.max_subdivisions,
                    "Adaptive quadrature subdivision cap");
    sub->add_option("--clip", c.quad.singularity_clip, "Singular endpoint clip");
    sub->add_option("--out", c.out, "Write CSV here instead of stdout");
    if (with_plot) sub->add_option("--plot", c.plot, "Write an SVG plot here");
    sub->set_config("--config", "", "JSON config file supplying any flag");
    sub->config_formatter(std::make_shared<JsonConfig>());
}

void emit(const Common& c, const std::string& csv) {
    if (c.out.empty())
        std::fwrite(csv.data(), 1, csv.size(), stdout);
    else
        ts::write_file(c.out, csv);
}

ts::Vec parse_vec(const std::string& s, const std::string& what) {
    auto v = ts::parse_double_list(s, what);
    if (v.empty() || v.size() > 3)
        throw ts::parse_error(what + " '" + s + "' needs 1..3 components");
    ts::Vec out(static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out.c[i] = v[i];
    return out;
}

std::string one_value_csv(const std::string& header, double v) {
    return ts::csv_document({header}, {{ts::format_sig(v)}});
}

void add_scale_factor(CLI::App& app) {
    auto sub = app.add_subcommand("scale-factor",
                                  "Scaling factor between two points of a field");
    struct S {
        Common c;
        std::string theta, from, to;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--theta", s->theta, "Field spec")->required();
    sub->add_option("--from", s->from, "Source point t,x1[,x2[,x3]]")->required();
    sub->add_option("--to", s->to, "Target point t,x1[,x2[,x3]]")->required();
    add_common(sub, s->c, false);
    sub->callback([s] {
        auto th = ts::parse_theta(s->theta);
        double f = ts::scaling_factor(th, ts::parse_point(s->to), ts::parse_point(s->from));
        emit(s->c, one_value_csv("factor", f));
    });
}

void add_path_factor(CLI::App& app) {
    auto sub = app.add_subcommand("path-factor",
                                  "Scaling factor from the line integral along a curve");
    struct S {
        Common c;
        std::string theta, curve;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--theta", s->theta, "Field spec")->required();
    sub->add_option("--curve", s->curve, "Curve spec")->required();
    add_common(sub, s->c, false);
    sub->callback([s] {
        auto th = ts::parse_theta(s->theta);
        auto curve = ts::parse_curve(s->curve);
        double f = ts::path_scaling_factor(ts::VectorField::gradient_of(th), curve, s->c.quad);
        emit(s->c, one_value_csv("factor", f));
    });
}

void add_line_element(CLI::App& app) {
    auto sub = app.add_subcommand("line-element",
                                  "Line element ds^2, optionally scaled by a field");
    struct S {
        Common c;
        std::string metric = "euclidean:3", at, disp, theta, ref;
        bool tensor = false;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--metric", s->metric, "Metric spec");
    sub->add_option("--at", s->at, "Evaluation point")->required();
    sub->add_option("--disp", s->disp, "Displacement components");
    sub->add_option("--theta", s->theta, "Field spec for scaling");
    sub->add_option("--ref", s->ref, "Reference point for scaling");
    sub->add_flag("--tensor", s->tensor, "Print the metric tensor instead");
    add_common(sub, s->c, false);
    sub->callback([s] {
        auto metric = ts::parse_metric(s->metric);
        auto at = ts::parse_point(s->at);
        const bool scaled = !s->theta.empty();
        if (scaled && s->ref.empty())
            throw ts::parse_error("--theta needs --ref");
        if (s->tensor) {
            ts::SymMatrix g = scaled
                ? ts::scaled_metric_tensor(metric, ts::parse_theta(s->theta), at,
                                           ts::parse_point(s->ref))
                : ts::metric_tensor(metric, at);
            std::vector<std::vector<std::string>> rows;
            for (int i = 0; i < g.n; ++i)
                for (int j = 0; j < g.n; ++j)
                    rows.push_back({std::to_string(i), std::to_string(j),
                                    ts::format_sig(g.g[i][j])});
            emit(s->c, ts::csv_document({"i", "j", "value"}, rows));
            return;
        }
        if (s->disp.empty()) throw ts::parse_error("--disp is required");
        auto disp = ts::parse_double_list(s->disp, "displacement component");
        if (scaled) {
            auto r = ts::scaled_line_element(metric, ts::parse_theta(s->theta), at, disp,
                                             ts::parse_point(s->ref));
            emit(s->c, ts::csv_document({"unscaled", "scaled", "factor", "causal_class"},
                                        {{ts::format_sig(r.unscaled), ts::format_sig(r.scaled),
                                          ts::format_sig(r.factor), ts::to_string(r.causal)}}));
        } else {
            double ds2 = ts::line_element(metric, at, disp);
            emit(s->c, ts::csv_document({"ds2", "causal_class"},
                                        {{ts::format_sig(ds2),
                                          ts::to_string(ts::causal_class(ds2, metric.kind))}}));
        }
    });
}

ts::LengthMode parse_mode(const std::string& mode) {
    if (mode == "proper-time") return ts::LengthMode::proper_time;
    if (mode == "proper-length") return ts::LengthMode::proper_length;
    throw ts::parse_error("unknown mode '" + mode + "'");
}

void add_curve_length(CLI::App& app) {
    auto sub = app.add_subcommand("curve-length",
                                  "Length of a curve, optionally internally scaled");
    struct S {
        Common c;
        std::string curve, metric, theta, ref, mode = "proper-time";
        bool path = false;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--curve", s->curve, "Curve spec")->required();
    sub->add_option("--metric", s->metric, "Metric spec (default euclidean)");
    sub->add_option("--theta", s->theta, "Field spec for scaling");
    sub->add_option("--ref", s->ref, "Reference point for scaling");
    sub->add_option("--mode", s->mode, "proper-time or proper-length");
    sub->add_flag("--path", s->path, "Accumulate the factor along the path itself");
    add_common(sub, s->c, false);
    sub->callback([s] {
        auto curve = ts::parse_curve(s->curve);
        auto metric = s->metric.empty() ? ts::Metric::euclidean(curve.dim)
                                        : ts::parse_metric(s->metric);
        auto mode = parse_mode(s->mode);
        if (s->path) {
            if (s->theta.empty()) throw ts::parse_error("--path needs --theta");
            auto th = ts::parse_theta(s->theta);
            auto r = ts::curve_length_scaled_path(curve, ts::VectorField::gradient_of(th),
                                                  s->c.quad);
            emit(s->c, one_value_csv("length", r.value));
        } else if (!s->theta.empty()) {
            if (s->ref.empty()) throw ts::parse_error("--theta needs --ref");
            auto r = ts::curve_length_scaled(curve, metric, ts::parse_theta(s->theta),
                                             ts::parse_point(s->ref), s->c.quad, mode);
            emit(s->c, one_value_csv("length", r.value));
        } else {
            emit(s->c, one_value_csv("length",
                                     ts::curve_length(curve, metric, s->c.quad, mode)));
        }
    });
}

std::string curve_nodes_csv(const ts::Curve& curve) {
    const auto& pts = curve.pts;
    std::vector<std::string> header{"s", "t"};
    for (int i = 0; i < curve.dim; ++i) header.push_back("x" + std::to_string(i + 1));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<std::string> row;
        row.push_back(ts::format_sig(static_cast<double>(i) / (pts.size() - 1)));
        row.push_back(ts::format_sig(pts[i].t));
        for (int j = 0; j < curve.dim; ++j) row.push_back(ts::format_sig(pts[i].x.c[j]));
        rows.push_back(std::move(row));
    }
    return ts::csv_document(header, rows);
}

std::string curve_svg(const ts::Curve& curve, const std::string& title) {
    ts::PlotSeries series;
    series.name = "curve";
    for (std::size_t i = 0; i < curve.pts.size(); ++i) {
        if (curve.dim >= 2) {
            series.x.push_back(curve.pts[i].x.c[0]);
            series.y.push_back(curve.pts[i].x.c[1]);
        } else {
            series.x.push_back(static_cast<double>(i) / (curve.pts.size() - 1));
            series.y.push_back(curve.pts[i].x.c[0]);
        }
    }
    const std::string xl = curve.dim >= 2 ? "x1" : "s";
    const std::string yl = curve.dim >= 2 ? "x2" : "x1";
    return ts::svg_plot(title, xl, yl, {series});
}

void add_geodesic(CLI::App& app) {
    auto sub = app.add_subcommand("geodesic",
                                  "Minimum-scaled-length curve between two points");
    struct S {
        Common c;
        std::string from, to, theta, metric, curve_out;
        int nodes = 64;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--from", s->from, "Start point")->required();
    sub->add_option("--to", s->to, "End point")->required();
    sub->add_option("--theta", s->theta, "Field spec")->required();
    sub->add_option("--metric", s->metric, "Metric spec (default euclidean)");
    sub->add_option("--nodes", s->nodes, "Interior node count");
    sub->add_option("--curve-out", s->curve_out, "Write the node curve CSV here");
    add_common(sub, s->c, true);
    sub->callback([s] {
        auto from = ts::parse_point(s->from);
        auto to = ts::parse_point(s->to);
        auto th = ts::parse_theta(s->theta);
        auto metric = s->metric.empty() ? ts::Metric::euclidean(from.x.dim)
                                        : ts::parse_metric(s->metric);
        auto g = ts::geodesic(from, to, th, metric, s->nodes, s->c.quad);
        emit(s->c, ts::csv_document(
                       {"length", "converged", "iterations", "el_residual"},
                       {{ts::format_sig(g.length.value), g.converged ? "1" : "0",
                         std::to_string(g.iterations), ts::format_sig(g.el_residual)}}));
        if (!s->curve_out.empty()) ts::write_file(s->curve_out, curve_nodes_csv(g.curve));
        if (!s->c.plot.empty()) ts::write_file(s->c.plot, curve_svg(g.curve, "geodesic"));
    });
}

void add_distance(CLI::App& app) {
    auto sub = app.add_subcommand("distance",
                                  "Scaled distance between two points");
    struct S {
        Common c;
        std::string from, to, theta, metric;
        int nodes = 64;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--from", s->from, "Start point")->required();
    sub->add_option("--to", s->to, "End point")->required();
    sub->add_option("--theta", s->theta, "Field spec")->required();
    sub->add_option("--metric", s->metric, "Metric spec (default euclidean)");
    sub->add_option("--nodes", s->nodes, "Interior node count");
    add_common(sub, s->c, false);
    sub->callback([s] {
        auto from = ts::parse_point(s->from);
        auto metric = s->metric.empty() ? ts::Metric::euclidean(from.x.dim)
                                        : ts::parse_metric(s->metric);
        double d = ts::distance(from, ts::parse_point(s->to), ts::parse_theta(s->theta),
                                metric, s->nodes, s->c.quad);
        emit(s->c, one_value_csv("distance", d));
    });
}

void add_action(CLI::App& app) {
    auto sub = app.add_subcommand("action", "Scaled action along a trajectory curve");
    struct S {
        Common c;
        std::string curve, lagrangian, theta, ref;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--curve", s->curve, "Curve spec with increasing time")->required();
    sub->add_option("--lagrangian", s->lagrangian, "Lagrangian spec")->required();
    sub->add_option("--theta", s->theta, "Field spec")->required();
    sub->add_option("--ref", s->ref, "Reference point")->required();
    add_common(sub, s->c, false);
    sub->callback([s] {
        double a = ts::scaled_action(ts::parse_curve(s->curve),
                                     ts::parse_lagrangian(s->lagrangian),
                                     ts::parse_theta(s->theta), ts::parse_point(s->ref),
                                     s->c.quad);
        emit(s->c, one_value_csv("action", a));
    });
}

void add_eom(CLI::App& app) {
    auto sub = app.add_subcommand("eom",
                                  "Integrate the scaled equations of motion");
    struct S {
        Common c;
        std::string theta, lagrangian, x0, v0;
        double t0 = 0.0, t_end = 1.0, dt = 1e-3;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--theta", s->theta, "Field spec")->required();
    sub->add_option("--lagrangian", s->lagrangian, "Lagrangian spec")->required();
    sub->add_option("--x0", s->x0, "Initial position components")->required();
    sub->add_option("--v0", s->v0, "Initial velocity components")->required();
    sub->add_option("--t0", s->t0, "Start time");
    sub->add_option("--t-end", s->t_end, "End time")->required();
    sub->add_option("--dt", s->dt, "Step size");
    add_common(sub, s->c, true);
    sub->callback([s] {
        auto x0 = parse_vec(s->x0, "initial position");
        auto v0 = parse_vec(s->v0, "initial velocity");
        auto traj = ts::integrate_eom(ts::parse_lagrangian(s->lagrangian),
                                      ts::parse_theta(s->theta), x0, v0, s->t0, s->t_end,
                                      s->dt);
        std::vector<std::string> header{"t"};
        for (int i = 0; i < x0.dim; ++i) header.push_back("x" + std::to_string(i + 1));
        for (int i = 0; i < x0.dim; ++i) header.push_back("v" + std::to_string(i + 1));
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < traj.t.size(); ++i) {
            std::vector<std::string> row{ts::format_sig(traj.t[i])};
            for (int j = 0; j < x0.dim; ++j) row.push_back(ts::format_sig(traj.x[i].c[j]));
            for (int j = 0; j < x0.dim; ++j) row.push_back(ts::format_sig(traj.v[i].c[j]));
            rows.push_back(std::move(row));
        }
        emit(s->c, ts::csv_document(header, rows));
        if (!s->c.plot.empty()) {
            ts::PlotSeries px, pv;
            px.name = "x1";
            pv.name = "v1";
            for (std::size_t i = 0; i < traj.t.size(); ++i) {
                px.x.push_back(traj.t[i]);
                px.y.push_back(traj.x[i].c[0]);
                pv.x.push_back(traj.t[i]);
                pv.y.push_back(traj.v[i].c[0]);
            }
            ts::write_file(s->c.plot, ts::svg_plot("trajectory", "t", "value", {px, pv}));
        }
    });
}

void add_covariant_derivative(CLI::App& app) {
    auto sub = app.add_subcommand("covariant-derivative",
                                  "Scaling-aware derivative D_j f at a point");
    struct S {
        Common c;
        std::string f, theta, at;
        int axis = 0;
        int index = -1;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--f", s->f, "Function: poly:<c0,c1,...> or table:<path>")->required();
    sub->add_option("--theta", s->theta, "Field spec")->required();
    sub->add_option("--at", s->at, "Evaluation point")->required();
    sub->add_option("--axis", s->axis, "Coordinate axis");
    sub->add_option("--index", s->index, "Grid index for the table form");
    add_common(sub, s->c, false);
    sub->callback([s] {
        auto th = ts::parse_theta(s->theta);
        auto at = ts::parse_point(s->at);
        double v;
        if (s->f.rfind("poly:", 0) == 0) {
            auto coeff = ts::parse_double_list(s->f.substr(5), "polynomial coefficient");
            const int axis = s->axis;
            auto eval = [coeff, axis](const ts::Point& p) {
                double y = p.x.c[axis], acc = 0.0;
                for (std::size_t k = coeff.size(); k-- > 0;) acc = acc * y + coeff[k];
                return acc;
            };
            auto deriv = [coeff, axis](const ts::Point& p) {
                double y = p.x.c[axis], acc = 0.0;
                for (std::size_t k = coeff.size(); k-- > 1;)
                    acc = acc * y + coeff[k] * static_cast<double>(k);
                return acc;
            };
            v = ts::covariant_derivative(eval, deriv, th, at, s->axis);
        } else if (s->f.rfind("table:", 0) == 0) {
            auto rows = ts::read_table(s->f.substr(6), 2);
            ts::SampledFn fn;
            for (const auto& r : rows) {
                fn.grid.push_back(r[0]);
                fn.values.push_back(r[1]);
            }
            if (s->index < 0) throw ts::parse_error("table form needs --index");
            v = ts::covariant_derivative(fn, th, at, s->axis,
                                         static_cast<std::size_t>(s->index));
        } else {
            throw ts::parse_error("unknown function spec '" + s->f + "'");
        }
        emit(s->c, one_value_csv("value", v));
    });
}

void add_qm_expect(CLI::App& app) {
    auto sub = app.add_subcommand("qm-expect",
                                  "Scaled expectation value of a wave packet");
    struct S {
        Common c;
        std::string packet, theta, ref, quantity = "norm";
        int axis = 0;
        double hbar = 1.0;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--packet", s->packet, "Packet spec")->required();
    sub->add_option("--theta", s->theta, "Field spec")->required();
    sub->add_option("--ref", s->ref, "Reference point")->required();
    sub->add_option("--quantity", s->quantity, "norm, position, or momentum");
    sub->add_option("--axis", s->axis, "Axis for position");
    sub->add_option("--hbar", s->hbar, "Planck constant for momentum");
    add_common(sub, s->c, false);
    sub->callback([s] {
        auto psi = ts::parse_packet(s->packet);
        auto th = ts::parse_theta(s->theta);
        auto ref = ts::parse_point(s->ref);
        ts::ScaledExpectation e;
        if (s->quantity == "norm")
            e = ts::scaled_norm(psi, th, ref, s->c.quad);
        else if (s->quantity == "position")
            e = ts::scaled_position(psi, th, ref, s->axis, s->c.quad);
        else if (s->quantity == "momentum")
            e = ts::scaled_momentum(psi, th, ref, s->hbar, s->c.quad);
        else
            throw ts::parse_error("unknown quantity '" + s->quantity + "'");
        emit(s->c, one_value_csv("value", e.value));
    });
}

void add_transfer(CLI::App& app) {
    auto sub = app.add_subcommand("transfer",
                                  "Move a referenced value to a new reference point");
    struct S {
        Common c;
        std::string theta, ref, to;
        double value = 0.0;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--value", s->value, "Value referenced at --ref")->required();
    sub->add_option("--ref", s->ref, "Current reference point")->required();
    sub->add_option("--to", s->to, "New reference point")->required();
    sub->add_option("--theta", s->theta, "Field spec")->required();
    add_common(sub, s->c, false);
    sub->callback([s] {
        auto th = ts::parse_theta(s->theta);
        double f = ts::scaling_factor(th, ts::parse_point(s->ref), ts::parse_point(s->to));
        emit(s->c, one_value_csv("value", s->value * f));
    });
}

void add_hole_profile(CLI::App& app) {
    auto sub = app.add_subcommand("hole-profile",
                                  "Scaled vs unscaled radial distance profile");
    struct S {
        Common c;
        double K = 1.0, l = 1.0, lprime = -1.0, w_max = 1.0;
        std::string direction = "inward";
        int samples = 200;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--K", s->K, "Field strength")->required();
    sub->add_option("--l", s->l, "Start distance from the center")->required();
    sub->add_option("--direction", s->direction, "inward or outward");
    sub->add_option("--lprime", s->lprime, "Outward travel span (default 2|K| - l)");
    sub->add_option("--samples", s->samples, "Profile row count");
    sub->add_option("--w-max", s->w_max, "Profile endpoint fraction");
    add_common(sub, s->c, true);
    sub->callback([s] {
        ts::HoleDirection dir;
        if (s->direction == "inward")
            dir = ts::HoleDirection::inward;
        else if (s->direction == "outward")
            dir = ts::HoleDirection::outward;
        else
            throw ts::parse_error("unknown direction '" + s->direction + "'");
        auto spec = ts::HoleSpec::axial(s->K, s->l, dir, s->lprime);
        auto rows = ts::hole_profile(spec, s->samples, s->c.quad, s->w_max);
        std::vector<std::vector<std::string>> out;
        for (const auto& r : rows)
            out.push_back({ts::format_sig(r.w), ts::format_sig(r.unscaled),
                           ts::format_sig(r.scaled), r.divergent ? "1" : "0"});
        emit(s->c, ts::csv_document({"w", "unscaled", "scaled", "divergent"}, out));
        if (!s->c.plot.empty()) {
            ts::PlotSeries pu, ps;
            pu.name = "unscaled";
            ps.name = "scaled";
            for (const auto& r : rows) {
                pu.x.push_back(r.w);
                pu.y.push_back(r.unscaled);
                ps.x.push_back(r.w);
                ps.y.push_back(r.scaled);
            }
            ts::write_file(s->c.plot,
                           ts::svg_plot("radial profile", "w", "distance", {pu, ps}));
        }
    });
}

void add_lightcone_scale(CLI::App& app) {
    auto sub = app.add_subcommand("lightcone-scale",
                                  "Retarded-time scaling factor on the past light cone");
    struct S {
        Common c;
        std::string theta, observer, event;
        double cc = 1.0;
    };
    auto s = std::make_shared<S>();
    sub->add_option("--theta", s->theta, "Time-dependent field spec")->required();
    sub->add_option("--observer", s->observer, "Observer point")->required();
    sub->add_option("--event", s->event, "Event position components")->required();
    sub->add_option("--c", s->cc, "Signal speed");
    add_common(sub, s->c, false);
    sub->callback([s] {
        double f = ts::lightcone_scaling(ts::parse_theta(s->theta),
                                         ts::parse_point(s->observer),
                                         parse_vec(s->event, "event position"), s->cc);
        emit(s->c, one_value_csv("factor", f));
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Number scaling calculator for scalar theta fields"};
    app.require_subcommand(1);

    add_scale_factor(app);
    add_path_factor(app);
    add_line_element(app);
    add_curve_length(app);
    add_geodesic(app);
    add_distance(app);
    add_action(app);
    add_eom(app);
    add_covariant_derivative(app);
    add_qm_expect(app);
    add_transfer(app);
    add_hole_profile(app);
    add_lightcone_scale(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const thetascale::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
