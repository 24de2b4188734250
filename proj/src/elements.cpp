#include "gridpaths/elements.hpp"

#include <cmath>
#include <limits>

namespace gridpaths {

const char* type_name(ElementType t) {
    switch (t) {
        case ElementType::customer: return "customer";
        case ElementType::transformer: return "transformer";
        case ElementType::line: return "line";
        case ElementType::switch_: return "switch";
        case ElementType::open_switch: return "open_switch";
        case ElementType::close_switch: return "close_switch";
        case ElementType::cabinet: return "cabinet";
        case ElementType::connection_board: return "connection_board";
        case ElementType::pole: return "pole";
        case ElementType::underground: return "underground";
        case ElementType::overhead: return "overhead";
    }
    return "unknown";
}

ElementType parse_type(const std::string& name) {
    static const std::map<std::string, ElementType> table = {
        {"customer", ElementType::customer},
        {"transformer", ElementType::transformer},
        {"line", ElementType::line},
        {"switch", ElementType::switch_},
        {"open_switch", ElementType::open_switch},
        {"close_switch", ElementType::close_switch},
        {"cabinet", ElementType::cabinet},
        {"connection_board", ElementType::connection_board},
        {"pole", ElementType::pole},
        {"underground", ElementType::underground},
        {"overhead", ElementType::overhead},
    };
    auto it = table.find(name);
    if (it == table.end()) fail(Errc::unknown_type, "element type '" + name + "'");
    return it->second;
}

const char* status_name(SwitchStatus s) {
    return s == SwitchStatus::open ? "open" : "close";
}

SwitchStatus parse_status(const std::string& name) {
    if (name == "open") return SwitchStatus::open;
    if (name == "close" || name == "closed") return SwitchStatus::closed;
    fail(Errc::parse_error, "switch status '" + name + "'");
}

Element make_element(std::string id, ElementType type, std::vector<Coord> coords,
                     std::optional<SwitchStatus> status) {
    Element e;
    e.id = std::move(id);
    e.type = type;
    e.coords = std::move(coords);
    if (e.coords.empty()) fail(Errc::parse_error, "element '" + e.id + "' has no coordinates");
    if (is_switch_like(type)) {
        if (!status) {
            // The explicit switch types imply their own recorded position.
            if (type == ElementType::open_switch) status = SwitchStatus::open;
            else if (type == ElementType::close_switch) status = SwitchStatus::closed;
            else fail(Errc::missing_status, "switch '" + e.id + "' lacks a status");
        }
    } else if (status) {
        fail(Errc::parse_error,
             "element '" + e.id + "' of type " + type_name(type) + " cannot carry a status");
    }
    e.status = status;
    return e;
}

void ElementSet::add(Element e) {
    auto [it, inserted] = members_.emplace(e.id, std::move(e));
    if (!inserted) fail(Errc::duplicate_id, "element '" + it->first + "' defined twice");
}

void ElementSet::replace(Element e) {
    auto it = members_.find(e.id);
    if (it == members_.end()) fail(Errc::unknown_element, "element '" + e.id + "'");
    it->second = std::move(e);
}

void ElementSet::remove(const std::string& id) {
    if (members_.erase(id) == 0) fail(Errc::unknown_element, "element '" + id + "'");
}

const Element& ElementSet::get(const std::string& id) const {
    auto it = members_.find(id);
    if (it == members_.end()) fail(Errc::unknown_element, "element '" + id + "'");
    return it->second;
}

std::vector<std::string> ElementSet::ids() const {
    std::vector<std::string> out;
    out.reserve(members_.size());
    for (const auto& [id, e] : members_) out.push_back(id);
    return out;
}

ElementSet subset(const ElementSet& elements, ElementType t) {
    ElementSet out;
    for (const auto& [id, e] : elements)
        if (e.type == t) out.add(e);
    return out;
}

static double point_dist(const Coord& a, const Coord& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

double dist(const Element& a, const Element& b) {
    double best = std::numeric_limits<double>::infinity();
    for (const Coord& p : a.coords)
        for (const Coord& q : b.coords) best = std::min(best, point_dist(p, q));
    return best;
}

double internal_length(const Element& e) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < e.coords.size(); ++i)
        total += point_dist(e.coords[i], e.coords[i + 1]);
    return total;
}

const Element& closest(const Element& e, const ElementSet& candidates) {
    const Element* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& [id, c] : candidates) {
        if (id == e.id) continue;
        double d = dist(e, c);
        if (d < best_d) {  // ties keep the earlier (naturally smaller) id
            best_d = d;
            best = &c;
        }
    }
    if (!best) fail(Errc::empty_candidate_set, "no candidate for '" + e.id + "'");
    return *best;
}

double length_path(const Path& p, const ElementSet& elements) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const Element& a = elements.get(p[i]);
        const Element& b = elements.get(p[i + 1]);
        total += dist(a, b) + internal_length(a);
    }
    return total;
}

bool valid_path(const Path& p, const ElementSet& elements) {
    if (p.size() < 2) return false;
    std::map<std::string, int, NaturalLess> seen;
    for (const auto& id : p) {
        if (!elements.contains(id)) return false;
        if (++seen[id] > 1) return false;
    }
    return elements.get(p.front()).type == ElementType::customer &&
           elements.get(p.back()).type == ElementType::transformer;
}

}  // namespace gridpaths
