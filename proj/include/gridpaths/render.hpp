#pragma once

#include <string>

#include "gridpaths/elements.hpp"
#include "gridpaths/engine.hpp"

namespace gridpaths {

// One node per element, edges taken from the enumerated paths; edges on an
// active path are drawn solid, backup-only edges dashed. Byte-deterministic.
std::string render_dot(const ElementSet& elements, const PathSet& paths);

// Geometric drawing: elements at their coordinates (open switches hollow,
// closed switches filled), path overlays in two distinct styles.
// Byte-deterministic, coordinates fixed to six fractional digits.
std::string render_svg(const ElementSet& elements, const PathSet& paths);

// Dispatch on format ∈ {dot, svg}; anything else is unsupported_format.
std::string render(const ElementSet& elements, const PathSet& paths,
                   const std::string& format);

}  // namespace gridpaths
