#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gridpaths/config.hpp"
#include "gridpaths/elements.hpp"

namespace gridpaths {

// Audit record of one pipeline step: what it added, removed (by id) and
// replaced (same id, new content). replay() folds these back over the
// step's input to reproduce its output exactly.
struct TransformTrace {
    std::string step;
    std::vector<Element> added;
    std::vector<std::string> removed;
    std::vector<Element> replaced;

    bool touched(const std::string& id) const;
};

// Moves every overhead extremity onto the nearest extremity of another
// overhead element when that lies strictly within d_oh (and is not already
// coincident). Extremities are processed one at a time in natural id order,
// first end then last, each seeing the positions left by earlier moves.
std::pair<ElementSet, TransformTrace> snap_overhead(const ElementSet& elements, double d_oh);

// For each underground line, finds the cabinet closest to its first
// coordinate and the cabinet closest to its last. When both lie strictly
// within d_cab and are distinct, the cabinet coordinates are spliced onto the
// line's ends; otherwise the line is dropped. With no cabinets at all, every
// underground line is dropped.
std::pair<ElementSet, TransformTrace> stitch_underground_to_cabinets(const ElementSet& elements,
                                                                     double d_cab);

// Adds an overhead line "cb_<board>" from each connection board to its
// closest pole when that pole lies strictly within d_cb.
std::pair<ElementSet, TransformTrace> link_boards_to_poles(const ElementSet& elements,
                                                           double d_cb);

// Attaches each customer to the grid: an underground line "cus_<customer>"
// to the nearest cabinet when that is strictly nearer than the nearest pole,
// an overhead line to the nearest pole otherwise. A network with neither
// cabinets nor poles cannot attach anyone (no_attachment_target).
std::pair<ElementSet, TransformTrace> connect_customers(const ElementSet& elements);

// Walks the connectivity graph breadth-first from all transformers at once
// (then from any leftover components). An edge that closes a ring receives an
// open switch "os_<k>" at the midpoint of the edge's nearest coordinate pair;
// every cabinet receives a close switch "cs_<cabinet>" at its coordinate.
// Open switches materialise before close switches, and neither lands on a
// coordinate already occupied by a switch-like element.
std::pair<ElementSet, TransformTrace> locate_switches(const ElementSet& elements, double r);

const std::vector<std::string>& step_names();
bool is_step_name(const std::string& name);

// Element types a step reads or writes; used to implicate a step in a
// finding when no traced id matches.
const std::vector<ElementType>& step_domain(const std::string& step);

// Runs cfg.steps in order. Throws unknown_step for an unrecognised name.
std::pair<ElementSet, std::vector<TransformTrace>> apply_pipeline(const ElementSet& elements,
                                                                  const PipelineConfig& cfg);

// Applies recorded traces to an input set: removals, then replacements, then
// additions, per step in order.
ElementSet replay(const ElementSet& input, const std::vector<TransformTrace>& traces);

}  // namespace gridpaths
