#include "polyspan/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

namespace polyspan {

namespace {

using json = nlohmann::json;

Rational coordinate(const json& value, const std::string& where) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) return Rational(std::to_string(value.get<std::uint64_t>()));
        return Rational(std::to_string(value.get<std::int64_t>()));
    }
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError(where + ": bad coordinate \"" + value.get<std::string>() + "\"");
        }
    }
    if (value.is_number_float())
        throw ParseError(where + ": non-integer JSON number; write it as a string");
    throw ParseError(where + ": coordinate must be an integer or a string");
}

std::string coordinate_text(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return "\"" + format_rational(r) + "\"";
}

}  // namespace

Scene parse_instance_unchecked(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    if (!doc.contains("vertices")) throw ParseError("missing \"vertices\"");

    Scene scene;
    const json& vertices = doc["vertices"];
    if (!vertices.is_array()) throw ParseError("vertices: expected an array");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        const json& v = vertices[i];
        if (!v.is_array() || v.size() != 2) throw ParseError(where + ": expected [x, y]");
        scene.vertices.push_back({coordinate(v[0], where + "[0]"), coordinate(v[1], where + "[1]")});
    }

    if (doc.contains("obstacles")) {
        const json& obstacles = doc["obstacles"];
        if (!obstacles.is_array()) throw ParseError("obstacles: expected an array");
        for (std::size_t k = 0; k < obstacles.size(); ++k) {
            const std::string where = "obstacles[" + std::to_string(k) + "]";
            const json& poly = obstacles[k];
            if (!poly.is_array()) throw ParseError(where + ": expected an array of indices");
            std::vector<VertexId> ids;
            for (std::size_t j = 0; j < poly.size(); ++j) {
                const std::string at = where + "[" + std::to_string(j) + "]";
                if (!poly[j].is_number_unsigned() &&
                    !(poly[j].is_number_integer() && poly[j].get<std::int64_t>() >= 0))
                    throw ParseError(at + ": expected a vertex index");
                const auto id = poly[j].get<std::uint64_t>();
                if (id >= scene.vertices.size()) throw ParseError(at + ": index out of range");
                ids.push_back(static_cast<VertexId>(id));
            }
            scene.obstacles.push_back(std::move(ids));
        }
    }
    for (const auto& [key, _] : doc.items())
        if (key != "vertices" && key != "obstacles") throw ParseError("unknown key \"" + key + "\"");
    return scene;
}

Scene parse_instance(std::string_view text) {
    Scene scene = parse_instance_unchecked(text);
    normalize_orientation(scene);
    const ValidationResult result = validate(scene);
    if (!result.ok()) throw ParseError("invalid scene: " + result.summary());
    return scene;
}

std::string write_instance(const Scene& scene) {
    std::ostringstream out;
    out << "{\n  \"vertices\": [";
    for (std::size_t i = 0; i < scene.vertices.size(); ++i) {
        out << (i ? ",\n    " : "\n    ") << '[' << coordinate_text(scene.vertices[i].x) << ", "
            << coordinate_text(scene.vertices[i].y) << ']';
    }
    out << (scene.vertices.empty() ? "]" : "\n  ]") << ",\n  \"obstacles\": [";
    for (std::size_t k = 0; k < scene.obstacles.size(); ++k) {
        out << (k ? ",\n    " : "\n    ") << '[';
        for (std::size_t j = 0; j < scene.obstacles[k].size(); ++j)
            out << (j ? ", " : "") << scene.obstacles[k][j];
        out << ']';
    }
    out << (scene.obstacles.empty() ? "]" : "\n  ]") << "\n}\n";
    return out.str();
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string current;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(current);
                current.clear();
            } else if (c != '\r') {
                current.push_back(c);
            }
        }
        if (!current.empty()) lines.push_back(current);
    }

    auto read_pair = [](const std::string& line, std::size_t lineno) {
        std::istringstream in(line);
        long long a = -1, b = -1;
        std::string rest;
        if (!(in >> a >> b) || (in >> rest) || a < 0 || b < 0)
            throw ParseError("line " + std::to_string(lineno) + ": expected two non-negative integers");
        return std::pair<std::size_t, std::size_t>(a, b);
    };

    std::size_t lineno = 0;
    auto next_line = [&]() -> const std::string* {
        while (lineno < lines.size()) {
            const std::string& l = lines[lineno++];
            if (l.find_first_not_of(" \t") != std::string::npos) return &l;
        }
        return nullptr;
    };

    const std::string* header = next_line();
    if (!header) throw ParseError("empty edge list");
    const auto [n, m] = read_pair(*header, lineno);
    Graph g(n);
    for (std::size_t i = 0; i < m; ++i) {
        const std::string* line = next_line();
        if (!line)
            throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        const auto [u, v] = read_pair(*line, lineno);
        if (u >= n || v >= n) throw ParseError("line " + std::to_string(lineno) + ": index out of range");
        if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop");
        if (!g.add_edge(u, v)) throw ParseError("line " + std::to_string(lineno) + ": duplicate edge");
    }
    if (next_line()) throw ParseError("line " + std::to_string(lineno) + ": more edges than the header says");
    return g;
}

namespace {

struct IPoint {
    std::int64_t x;
    std::int64_t y;
};

std::int64_t icross(const IPoint& o, const IPoint& a, const IPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Strict convex hull, counterclockwise, collinear points dropped.
std::vector<IPoint> convex_hull(std::vector<IPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const IPoint& a, const IPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const IPoint& a, const IPoint& b) { return a.x == b.x && a.y == b.y; }),
              pts.end());
    if (pts.size() < 3) return pts;
    std::vector<IPoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && icross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && icross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

struct Box {
    std::int64_t x0, y0, x1, y1;

    bool contains(const IPoint& p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
    bool overlaps(const Box& o) const { return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1; }
    Box grown(std::int64_t m) const { return {x0 - m, y0 - m, x1 + m, y1 + m}; }
};

// No shared y (which also rules out duplicates) and no collinear triple.
bool fits_general_position(const std::vector<IPoint>& pts, const IPoint& p) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].y == p.y) return false;
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (icross(p, pts[i], pts[j]) == 0) return false;
    }
    return true;
}

}  // namespace

Scene generate(const GeneratorConfig& config) {
    if (config.n_points < 1) throw SceneError("generator: n_points must be at least 1");
    if (config.obstacle_size < 3) throw SceneError("generator: obstacle_size must be at least 3");
    if (config.n_obstacles * config.obstacle_size > config.n_points)
        throw SceneError("generator: obstacle vertices exceed n_points");
    if (config.bbox < 4) throw SceneError("generator: bbox too small");

    std::mt19937_64 rng(config.seed);
    auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    const auto per_side = static_cast<std::int64_t>(
        std::ceil(std::sqrt(static_cast<double>(std::max<std::size_t>(config.n_obstacles, 1)))));
    const std::int64_t side = std::max<std::int64_t>(3, config.bbox / (2 * per_side + 1));
    const std::int64_t margin = std::max<std::int64_t>(1, side / 4);

    for (std::size_t attempt = 0; attempt < config.max_attempts; ++attempt) {
        std::vector<IPoint> pts;
        std::vector<std::vector<VertexId>> obstacles;
        std::vector<Box> boxes;
        bool ok = true;

        for (std::size_t k = 0; k < config.n_obstacles && ok; ++k) {
            ok = false;
            for (int tries = 0; tries < 1000 && !ok; ++tries) {
                const std::int64_t x0 = uniform(0, config.bbox - side);
                const std::int64_t y0 = uniform(0, config.bbox - side);
                const Box box{x0, y0, x0 + side, y0 + side};
                if (std::any_of(boxes.begin(), boxes.end(),
                                [&](const Box& b) { return b.grown(margin).overlaps(box); }))
                    continue;
                std::vector<IPoint> samples;
                for (std::size_t s = 0; s < config.obstacle_size; ++s)
                    samples.push_back({uniform(box.x0, box.x1), uniform(box.y0, box.y1)});
                const std::vector<IPoint> hull = convex_hull(samples);
                if (hull.size() < 3) continue;
                std::vector<IPoint> trial = pts;
                bool fits = true;
                for (const auto& h : hull) {
                    if (!fits_general_position(trial, h)) {
                        fits = false;
                        break;
                    }
                    trial.push_back(h);
                }
                if (!fits) continue;
                std::vector<VertexId> ids;
                for (std::size_t i = 0; i < hull.size(); ++i) ids.push_back(pts.size() + i);
                pts = std::move(trial);
                obstacles.push_back(std::move(ids));
                boxes.push_back(box);
                ok = true;
            }
        }

        while (ok && pts.size() < config.n_points) {
            ok = false;
            for (int tries = 0; tries < 10000 && !ok; ++tries) {
                const IPoint p{uniform(0, config.bbox), uniform(0, config.bbox)};
                if (std::any_of(boxes.begin(), boxes.end(), [&](const Box& b) { return b.contains(p); }))
                    continue;
                if (!fits_general_position(pts, p)) continue;
                pts.push_back(p);
                ok = true;
            }
        }
        if (!ok) continue;

        Scene scene;
        for (const auto& p : pts) scene.vertices.push_back({Rational(p.x), Rational(p.y)});
        scene.obstacles = std::move(obstacles);
        normalize_orientation(scene);
        if (validate(scene).ok() && check_general_position(scene).ok()) return scene;
    }
    throw SceneError("generator: no valid scene after " + std::to_string(config.max_attempts) +
                     " attempts");
}

namespace {

struct Viewport {
    double min_x = 0, min_y = 0, scale = 1, margin = 0, height = 0, width = 0;

    double sx(double x) const { return margin + (x - min_x) * scale; }
    double sy(double y) const { return height - margin - (y - min_y) * scale; }
};

std::string fmt(double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(2) << v;
    return s.str();
}

}  // namespace

std::string render_svg(const Scene& scene, const Graph& g, const SvgOptions& options) {
    Viewport vp;
    vp.margin = options.margin;
    vp.width = options.width;
    std::vector<std::pair<double, double>> xy;
    for (const auto& p : scene.vertices) xy.emplace_back(p.x.get_d(), p.y.get_d());

    double span_x = 1, span_y = 1;
    if (!xy.empty()) {
        double max_x = xy[0].first, max_y = xy[0].second;
        vp.min_x = max_x;
        vp.min_y = max_y;
        for (const auto& [x, y] : xy) {
            vp.min_x = std::min(vp.min_x, x);
            vp.min_y = std::min(vp.min_y, y);
            max_x = std::max(max_x, x);
            max_y = std::max(max_y, y);
        }
        span_x = std::max(max_x - vp.min_x, 1e-9);
        span_y = std::max(max_y - vp.min_y, 1e-9);
    }
    const double inner = std::max(options.width - 2 * options.margin, 1.0);
    vp.scale = inner / std::max(span_x, span_y);
    vp.height = xy.empty() ? options.width : span_y * vp.scale + 2 * options.margin;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(vp.width) << "\" height=\""
        << fmt(vp.height) << "\" viewBox=\"0 0 " << fmt(vp.width) << ' ' << fmt(vp.height) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (options.highlight_cone && options.highlight_cone->apex < xy.size()) {
        const SubconeRef& ref = *options.highlight_cone;
        const auto [ax, ay] = xy[ref.apex];
        const double reach = 2.0 * std::hypot(span_x, span_y);
        const int s = ref.label.sector();
        const double a0 = (60.0 + 60.0 * s) * std::numbers::pi / 180.0;
        const double a1 = a0 + std::numbers::pi / 3.0;
        out << "<polygon class=\"cone\" fill=\"#ffe08a\" fill-opacity=\"0.5\" stroke=\"none\" points=\""
            << fmt(vp.sx(ax)) << ',' << fmt(vp.sy(ay)) << ' ' << fmt(vp.sx(ax + reach * std::cos(a0)))
            << ',' << fmt(vp.sy(ay + reach * std::sin(a0))) << ' '
            << fmt(vp.sx(ax + reach * std::cos(a1))) << ',' << fmt(vp.sy(ay + reach * std::sin(a1)))
            << "\"><title>" << to_string(ref) << "</title></polygon>\n";
    }

    for (const auto& poly : scene.obstacles) {
        out << "<polygon class=\"obstacle\" fill=\"#c8c8c8\" stroke=\"#606060\" points=\"";
        for (std::size_t j = 0; j < poly.size(); ++j) {
            if (poly[j] >= xy.size()) continue;
            out << (j ? " " : "") << fmt(vp.sx(xy[poly[j]].first)) << ',' << fmt(vp.sy(xy[poly[j]].second));
        }
        out << "\"/>\n";
    }

    for (const auto& [u, v] : g.edges()) {
        if (u >= xy.size() || v >= xy.size()) continue;
        out << "<line class=\"edge\" stroke=\"#1f4e99\" stroke-width=\"1.2\" x1=\"" << fmt(vp.sx(xy[u].first))
            << "\" y1=\"" << fmt(vp.sy(xy[u].second)) << "\" x2=\"" << fmt(vp.sx(xy[v].first))
            << "\" y2=\"" << fmt(vp.sy(xy[v].second)) << "\"/>\n";
    }

    if (options.highlight_path.size() >= 2) {
        out << "<polyline class=\"path\" fill=\"none\" stroke=\"#d03030\" stroke-width=\"3\" points=\"";
        bool first = true;
        for (VertexId id : options.highlight_path) {
            if (id >= xy.size()) continue;
            out << (first ? "" : " ") << fmt(vp.sx(xy[id].first)) << ',' << fmt(vp.sy(xy[id].second));
            first = false;
        }
        out << "\"/>\n";
    }

    for (std::size_t i = 0; i < xy.size(); ++i) {
        out << "<circle class=\"vertex\" r=\"3\" fill=\"black\" cx=\"" << fmt(vp.sx(xy[i].first))
            << "\" cy=\"" << fmt(vp.sy(xy[i].second)) << "\"/>\n";
        if (options.label_vertices)
            out << "<text font-size=\"10\" x=\"" << fmt(vp.sx(xy[i].first) + 4) << "\" y=\""
                << fmt(vp.sy(xy[i].second) - 4) << "\">" << i << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace polyspan
