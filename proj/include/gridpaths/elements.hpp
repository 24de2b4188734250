#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridpaths/errors.hpp"
#include "gridpaths/ids.hpp"

namespace gridpaths {

enum class ElementType {
    customer,
    transformer,
    line,
    switch_,
    open_switch,
    close_switch,
    cabinet,
    connection_board,
    pole,
    underground,
    overhead,
};

enum class SwitchStatus { open, closed };

const char* type_name(ElementType t);
ElementType parse_type(const std::string& name);  // throws unknown_type

const char* status_name(SwitchStatus s);  // "open" / "close"
SwitchStatus parse_status(const std::string& name);

// Switch-like elements carry a status and can interrupt a path.
inline bool is_switch_like(ElementType t) {
    return t == ElementType::switch_ || t == ElementType::open_switch ||
           t == ElementType::close_switch;
}

// Line-like elements have geometric extent that contributes internal length.
inline bool is_line_like(ElementType t) {
    return t == ElementType::line || t == ElementType::underground ||
           t == ElementType::overhead;
}

struct Coord {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Coord& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Coord& o) const { return !(*this == o); }
};

struct Element {
    std::string id;
    ElementType type = ElementType::line;
    std::vector<Coord> coords;                // at least one recorded point
    std::optional<SwitchStatus> status;       // present iff switch-like

    bool operator==(const Element& o) const {
        return id == o.id && type == o.type && coords == o.coords && status == o.status;
    }
};

Element make_element(std::string id, ElementType type, std::vector<Coord> coords,
                     std::optional<SwitchStatus> status = std::nullopt);

// Element collection keyed by id, iterated in natural id order so every
// derived result is deterministic.
class ElementSet {
public:
    using Map = std::map<std::string, Element, NaturalLess>;
    using const_iterator = Map::const_iterator;

    ElementSet() = default;

    void add(Element e);                       // throws duplicate_id
    void replace(Element e);                   // same id must exist
    void remove(const std::string& id);        // throws unknown_element
    bool contains(const std::string& id) const { return members_.count(id) != 0; }
    const Element& get(const std::string& id) const;  // throws unknown_element

    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const_iterator begin() const { return members_.begin(); }
    const_iterator end() const { return members_.end(); }

    std::vector<std::string> ids() const;

    bool operator==(const ElementSet& o) const { return members_ == o.members_; }

private:
    Map members_;
};

// Elements of one type, in natural id order.
ElementSet subset(const ElementSet& elements, ElementType t);

// Shortest straight-line distance over every pair of recorded coordinates.
double dist(const Element& a, const Element& b);

// Sum of an element's own consecutive segment lengths (0 for single points).
double internal_length(const Element& e);

// Candidate at minimum distance from e; e itself is never a candidate; ties
// break toward the naturally smallest id. Throws empty_candidate_set when no
// candidate remains.
const Element& closest(const Element& e, const ElementSet& candidates);

// A path is the ordered id sequence from a customer to a transformer.
using Path = std::vector<std::string>;

// Hop distances plus internal lengths of every element except the last.
double length_path(const Path& p, const ElementSet& elements);

// True iff p starts at a customer, ends at a transformer, repeats no id and
// references only known elements.
bool valid_path(const Path& p, const ElementSet& elements);

}  // namespace gridpaths
