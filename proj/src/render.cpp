#include "gridpaths/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "gridpaths/io.hpp"

namespace gridpaths {

namespace {

// Edges appearing on any path, tagged with whether an active path uses them.
std::map<std::pair<std::string, std::string>, bool> path_edges(const ElementSet& elements,
                                                               const PathSet& paths) {
    std::map<std::pair<std::string, std::string>, bool> edges;
    for (const auto& [c, list] : paths.by_customer)
        for (const auto& info : list) {
            bool active = path_active(info.path, elements);
            for (std::size_t i = 0; i + 1 < info.path.size(); ++i) {
                auto a = info.path[i], b = info.path[i + 1];
                if (natural_less(b, a)) std::swap(a, b);
                auto [it, inserted] = edges.emplace(std::make_pair(a, b), active);
                if (!inserted && active) it->second = true;
            }
        }
    return edges;
}

bool is_open(const Element& e) { return e.status && *e.status == SwitchStatus::open; }

Coord centroid(const Element& e) {
    Coord c{0.0, 0.0};
    for (const Coord& p : e.coords) {
        c.x += p.x;
        c.y += p.y;
    }
    c.x /= static_cast<double>(e.coords.size());
    c.y /= static_cast<double>(e.coords.size());
    return c;
}

const char* dot_shape(ElementType t) {
    switch (t) {
        case ElementType::customer: return "circle";
        case ElementType::transformer: return "box";
        case ElementType::switch_:
        case ElementType::open_switch:
        case ElementType::close_switch: return "square";
        case ElementType::cabinet: return "house";
        case ElementType::connection_board: return "triangle";
        case ElementType::pole: return "point";
        default: return "ellipse";
    }
}

}  // namespace

std::string render_dot(const ElementSet& elements, const PathSet& paths) {
    std::string out = "graph network {\n";
    out += "  graph [label=\"distribution network\"];\n";
    out += "  node [fontsize=10];\n";
    for (const auto& [id, e] : elements) {
        out += "  \"" + id + "\" [shape=" + dot_shape(e.type) + ", label=\"" + id + "\"";
        if (is_switch_like(e.type))
            out += is_open(e) ? ", style=solid" : ", style=filled, fillcolor=black, fontcolor=white";
        out += "];\n";
    }
    for (const auto& [edge, active] : path_edges(elements, paths)) {
        out += "  \"" + edge.first + "\" -- \"" + edge.second + "\"";
        out += active ? " [color=forestgreen, penwidth=2]" : " [color=steelblue, style=dashed]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

std::string render_svg(const ElementSet& elements, const PathSet& paths) {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x, max_x = -min_x, max_y = -min_x;
    for (const auto& [id, e] : elements)
        for (const Coord& p : e.coords) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    if (elements.empty()) min_x = min_y = 0, max_x = max_y = 1;

    const double pad = 30.0;
    double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    double scale = 800.0 / span;
    auto sx = [&](double x) { return format_fixed6((x - min_x) * scale + pad); };
    auto sy = [&](double y) { return format_fixed6((max_y - y) * scale + pad); };
    double width = (max_x - min_x) * scale + 2 * pad;
    double height = (max_y - min_y) * scale + 2 * pad;

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      format_fixed6(width) + "\" height=\"" + format_fixed6(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Line-like elements as light polylines under everything else.
    for (const auto& [id, e] : elements) {
        if (!is_line_like(e.type) || e.coords.size() < 2) continue;
        out += "<polyline fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < e.coords.size(); ++i) {
            if (i) out += ' ';
            out += sx(e.coords[i].x) + "," + sy(e.coords[i].y);
        }
        out += "\"><title>" + id + "</title></polyline>\n";
    }

    // Path overlays between element centroids: solid for active, dashed for
    // backup.
    for (const auto& [c, list] : paths.by_customer)
        for (const auto& info : list) {
            bool active = path_active(info.path, elements);
            out += std::string("<polyline fill=\"none\" stroke=\"") +
                   (active ? "#2e8b57" : "#4682b4") + "\" stroke-width=\"" +
                   (active ? "3" : "2") + "\"" +
                   (active ? "" : " stroke-dasharray=\"7 4\"") + " points=\"";
            for (std::size_t i = 0; i < info.path.size(); ++i) {
                if (i) out += ' ';
                Coord p = centroid(elements.get(info.path[i]));
                out += sx(p.x) + "," + sy(p.y);
            }
            out += "\"><title>" + info.path.front() + (active ? " active" : " backup") +
                   "</title></polyline>\n";
        }

    // Point markers on top; open switches hollow, closed switches filled.
    for (const auto& [id, e] : elements) {
        Coord p = e.coords.front();
        std::string x = sx(p.x), y = sy(p.y);
        if (is_switch_like(e.type)) {
            std::string fill = is_open(e) ? "none" : "black";
            out += "<rect x=\"" + format_fixed6((p.x - min_x) * scale + pad - 5) + "\" y=\"" +
                   format_fixed6((max_y - p.y) * scale + pad - 5) +
                   "\" width=\"10\" height=\"10\" fill=\"" + fill +
                   "\" stroke=\"black\" stroke-width=\"2\"><title>" + id + "</title></rect>\n";
        } else if (e.type == ElementType::transformer) {
            out += "<rect x=\"" + format_fixed6((p.x - min_x) * scale + pad - 6) + "\" y=\"" +
                   format_fixed6((max_y - p.y) * scale + pad - 6) +
                   "\" width=\"12\" height=\"12\" fill=\"#8b0000\"><title>" + id +
                   "</title></rect>\n";
        } else if (e.type == ElementType::customer) {
            out += "<circle cx=\"" + x + "\" cy=\"" + y +
                   "\" r=\"6\" fill=\"#d2691e\"><title>" + id + "</title></circle>\n";
        } else if (e.type == ElementType::cabinet || e.type == ElementType::connection_board ||
                   e.type == ElementType::pole) {
            out += "<circle cx=\"" + x + "\" cy=\"" + y +
                   "\" r=\"4\" fill=\"#555555\"><title>" + id + "</title></circle>\n";
        }
        out += "<text x=\"" + format_fixed6((p.x - min_x) * scale + pad + 7) + "\" y=\"" +
               format_fixed6((max_y - p.y) * scale + pad - 7) +
               "\" font-size=\"11\" font-family=\"sans-serif\">" + id + "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

std::string render(const ElementSet& elements, const PathSet& paths,
                   const std::string& format) {
    if (format == "dot") return render_dot(elements, paths);
    if (format == "svg") return render_svg(elements, paths);
    fail(Errc::unsupported_format, "'" + format + "' (expected dot or svg)");
}

}  // namespace gridpaths
