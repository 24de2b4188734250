#include "gridpaths/transform.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>

#include "gridpaths/graph.hpp"

namespace gridpaths {

namespace {

double point_dist(const Coord& a, const Coord& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Candidate whose recorded coordinates come closest to p; ties toward the
// naturally smaller id. Returns nullptr when candidates is empty.
const Element* closest_to_point(const Coord& p, const ElementSet& candidates,
                                const std::string& exclude, double* out_d = nullptr) {
    const Element* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& [id, c] : candidates) {
        if (id == exclude) continue;
        double d = std::numeric_limits<double>::infinity();
        for (const Coord& q : c.coords) d = std::min(d, point_dist(p, q));
        if (d < best_d) {
            best_d = d;
            best = &c;
        }
    }
    if (out_d) *out_d = best_d;
    return best;
}

const Coord& nearest_coord(const Element& e, const Coord& p) {
    const Coord* best = &e.coords.front();
    double best_d = std::numeric_limits<double>::infinity();
    for (const Coord& q : e.coords) {
        double d = point_dist(p, q);
        if (d < best_d) {
            best_d = d;
            best = &q;
        }
    }
    return *best;
}

// Coordinate pair realising dist(a, b); first pair in coordinate order wins ties.
std::pair<const Coord*, const Coord*> nearest_pair(const Element& a, const Element& b) {
    std::pair<const Coord*, const Coord*> best{&a.coords.front(), &b.coords.front()};
    double best_d = std::numeric_limits<double>::infinity();
    for (const Coord& p : a.coords)
        for (const Coord& q : b.coords) {
            double d = point_dist(p, q);
            if (d < best_d) {
                best_d = d;
                best = {&p, &q};
            }
        }
    return best;
}

}  // namespace

bool TransformTrace::touched(const std::string& id) const {
    for (const auto& e : added)
        if (e.id == id) return true;
    for (const auto& r : removed)
        if (r == id) return true;
    for (const auto& e : replaced)
        if (e.id == id) return true;
    return false;
}

std::pair<ElementSet, TransformTrace> snap_overhead(const ElementSet& elements, double d_oh) {
    ElementSet out = elements;
    TransformTrace trace{"snap_overhead", {}, {}, {}};

    std::vector<std::string> overheads = subset(elements, ElementType::overhead).ids();
    std::set<std::string, NaturalLess> changed;

    for (const auto& id : overheads) {
        std::vector<std::size_t> ends{0};
        if (out.get(id).coords.size() > 1) ends.push_back(out.get(id).coords.size() - 1);
        for (std::size_t end : ends) {
            Coord p = out.get(id).coords[end];
            // Nearest extremity of any other overhead, at current positions.
            const Coord* target = nullptr;
            double best_d = std::numeric_limits<double>::infinity();
            for (const auto& oid : overheads) {
                if (oid == id) continue;
                const Element& other = out.get(oid);
                for (std::size_t oe : {std::size_t{0}, other.coords.size() - 1}) {
                    double d = point_dist(p, other.coords[oe]);
                    if (d < best_d) {
                        best_d = d;
                        target = &other.coords[oe];
                    }
                }
            }
            if (target && best_d > 0.0 && best_d < d_oh) {
                Element moved = out.get(id);
                moved.coords[end] = *target;
                out.replace(moved);
                changed.insert(id);
            }
        }
    }
    for (const auto& id : changed) trace.replaced.push_back(out.get(id));
    return {std::move(out), std::move(trace)};
}

std::pair<ElementSet, TransformTrace> stitch_underground_to_cabinets(const ElementSet& elements,
                                                                     double d_cab) {
    ElementSet out = elements;
    TransformTrace trace{"stitch_underground_to_cabinets", {}, {}, {}};

    ElementSet cabinets = subset(elements, ElementType::cabinet);
    for (const auto& id : subset(elements, ElementType::underground).ids()) {
        const Element& u = elements.get(id);
        bool keep = false;
        if (!cabinets.empty()) {
            double d_first = 0, d_last = 0;
            const Element* first_cab =
                closest_to_point(u.coords.front(), cabinets, u.id, &d_first);
            const Element* last_cab = closest_to_point(u.coords.back(), cabinets, u.id, &d_last);
            if (first_cab && last_cab && d_first < d_cab && d_last < d_cab &&
                first_cab->id != last_cab->id) {
                Element stitched = u;
                stitched.coords.insert(stitched.coords.begin(),
                                       nearest_coord(*first_cab, u.coords.front()));
                stitched.coords.push_back(nearest_coord(*last_cab, u.coords.back()));
                out.replace(stitched);
                trace.replaced.push_back(stitched);
                keep = true;
            }
        }
        if (!keep) {
            out.remove(id);
            trace.removed.push_back(id);
        }
    }
    return {std::move(out), std::move(trace)};
}

std::pair<ElementSet, TransformTrace> link_boards_to_poles(const ElementSet& elements,
                                                           double d_cb) {
    ElementSet out = elements;
    TransformTrace trace{"link_boards_to_poles", {}, {}, {}};

    ElementSet poles = subset(elements, ElementType::pole);
    if (poles.empty()) return {std::move(out), std::move(trace)};

    for (const auto& id : subset(elements, ElementType::connection_board).ids()) {
        const Element& board = elements.get(id);
        const Element& pole = closest(board, poles);
        if (dist(board, pole) >= d_cb) continue;
        std::string link_id = "cb_" + id;
        if (out.contains(link_id)) continue;  // already linked on a prior run
        auto [bp, pp] = nearest_pair(board, pole);
        Element link = make_element(link_id, ElementType::overhead, {*bp, *pp});
        out.add(link);
        trace.added.push_back(std::move(link));
    }
    return {std::move(out), std::move(trace)};
}

std::pair<ElementSet, TransformTrace> connect_customers(const ElementSet& elements) {
    ElementSet out = elements;
    TransformTrace trace{"connect_customers", {}, {}, {}};

    ElementSet cabinets = subset(elements, ElementType::cabinet);
    ElementSet poles = subset(elements, ElementType::pole);

    for (const auto& id : subset(elements, ElementType::customer).ids()) {
        const Element& cust = elements.get(id);
        if (cabinets.empty() && poles.empty())
            fail(Errc::no_attachment_target,
                 "customer '" + id + "' has no cabinet or pole to attach to");
        double d_cab = std::numeric_limits<double>::infinity();
        double d_pole = std::numeric_limits<double>::infinity();
        const Element* cab = cabinets.empty() ? nullptr : &closest(cust, cabinets);
        const Element* pole = poles.empty() ? nullptr : &closest(cust, poles);
        if (cab) d_cab = dist(cust, *cab);
        if (pole) d_pole = dist(cust, *pole);

        std::string link_id = "cus_" + id;
        if (out.contains(link_id)) continue;
        bool to_cabinet = d_cab < d_pole;
        const Element& target = to_cabinet ? *cab : *pole;
        auto [cp, tp] = nearest_pair(cust, target);
        Element link = make_element(
            link_id, to_cabinet ? ElementType::underground : ElementType::overhead,
            {*cp, *tp});
        out.add(link);
        trace.added.push_back(std::move(link));
    }
    return {std::move(out), std::move(trace)};
}

std::pair<ElementSet, TransformTrace> locate_switches(const ElementSet& elements, double r) {
    TransformTrace trace{"locate_switches", {}, {}, {}};
    Adjacency adj = Adjacency::build(elements, r);

    std::set<std::string, NaturalLess> visited;
    std::set<std::pair<std::string, std::string>> seen_edges;
    std::vector<Coord> open_sites;      // ring-closing midpoints, discovery order
    std::vector<std::string> cabinets;  // first-visit order

    auto note_visit = [&](const std::string& id) {
        if (elements.get(id).type == ElementType::cabinet) cabinets.push_back(id);
    };

    auto bfs = [&](std::deque<std::string> queue) {
        while (!queue.empty()) {
            std::string u = std::move(queue.front());
            queue.pop_front();
            for (const auto& v : adj.neighbors(u)) {
                auto a = u, b = v;
                if (natural_less(b, a)) std::swap(a, b);
                if (!seen_edges.emplace(std::move(a), std::move(b)).second) continue;
                if (visited.insert(v).second) {
                    note_visit(v);
                    queue.push_back(v);
                } else {
                    // Ring-closing edge: mark the midpoint of its closest
                    // coordinate pair for an open switch.
                    auto [pu, pv] = nearest_pair(elements.get(u), elements.get(v));
                    open_sites.push_back({(pu->x + pv->x) / 2.0, (pu->y + pv->y) / 2.0});
                }
            }
        }
    };

    std::deque<std::string> roots;
    for (const auto& id : subset(elements, ElementType::transformer).ids()) {
        if (visited.insert(id).second) {
            note_visit(id);
            roots.push_back(id);
        }
    }
    bfs(std::move(roots));
    // Components without a transformer still get scanned, smallest id first.
    for (const auto& id : elements.ids()) {
        if (visited.count(id)) continue;
        visited.insert(id);
        note_visit(id);
        bfs({id});
    }

    ElementSet out = elements;
    auto coord_taken = [&](const Coord& p) {
        for (const auto& [id, e] : out)
            if (is_switch_like(e.type))
                for (const Coord& q : e.coords)
                    if (q == p) return true;
        return false;
    };

    int next_open = 1;
    for (const Coord& site : open_sites) {
        if (coord_taken(site)) continue;
        Element sw = make_element("os_" + std::to_string(next_open++),
                                  ElementType::open_switch, {site});
        out.add(sw);
        trace.added.push_back(std::move(sw));
    }
    for (const auto& cab_id : cabinets) {
        const Coord& site = elements.get(cab_id).coords.front();
        if (coord_taken(site)) continue;
        Element sw = make_element("cs_" + cab_id, ElementType::close_switch, {site});
        out.add(sw);
        trace.added.push_back(std::move(sw));
    }
    return {std::move(out), std::move(trace)};
}

const std::vector<std::string>& step_names() {
    static const std::vector<std::string> names = {
        "snap_overhead",
        "stitch_underground_to_cabinets",
        "link_boards_to_poles",
        "connect_customers",
        "locate_switches",
    };
    return names;
}

bool is_step_name(const std::string& name) {
    const auto& names = step_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

const std::vector<ElementType>& step_domain(const std::string& step) {
    static const std::vector<ElementType> snap{ElementType::overhead};
    static const std::vector<ElementType> stitch{ElementType::underground, ElementType::cabinet};
    static const std::vector<ElementType> link{ElementType::connection_board, ElementType::pole};
    static const std::vector<ElementType> connect{ElementType::customer, ElementType::cabinet,
                                                  ElementType::pole};
    static const std::vector<ElementType> locate{ElementType::switch_, ElementType::open_switch,
                                                 ElementType::close_switch, ElementType::cabinet};
    static const std::vector<ElementType> none;
    if (step == "snap_overhead") return snap;
    if (step == "stitch_underground_to_cabinets") return stitch;
    if (step == "link_boards_to_poles") return link;
    if (step == "connect_customers") return connect;
    if (step == "locate_switches") return locate;
    return none;
}

std::pair<ElementSet, std::vector<TransformTrace>> apply_pipeline(const ElementSet& elements,
                                                                  const PipelineConfig& cfg) {
    ElementSet current = elements;
    std::vector<TransformTrace> traces;
    for (const auto& step : cfg.steps) {
        std::pair<ElementSet, TransformTrace> result = [&] {
            if (step == "snap_overhead") return snap_overhead(current, cfg.d_oh);
            if (step == "stitch_underground_to_cabinets")
                return stitch_underground_to_cabinets(current, cfg.d_cab);
            if (step == "link_boards_to_poles") return link_boards_to_poles(current, cfg.d_cb);
            if (step == "connect_customers") return connect_customers(current);
            if (step == "locate_switches") return locate_switches(current, cfg.r);
            fail(Errc::unknown_step, "pipeline step '" + step + "'");
        }();
        current = std::move(result.first);
        traces.push_back(std::move(result.second));
    }
    return {std::move(current), std::move(traces)};
}

ElementSet replay(const ElementSet& input, const std::vector<TransformTrace>& traces) {
    ElementSet current = input;
    for (const auto& t : traces) {
        for (const auto& id : t.removed) current.remove(id);
        for (const auto& e : t.replaced) current.replace(e);
        for (const auto& e : t.added) current.add(e);
    }
    return current;
}

}  // namespace gridpaths
