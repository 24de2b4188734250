#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridpaths/elements.hpp"

namespace gridpaths {

enum class Mode { academic, casestudy };

const char* mode_name(Mode m);
Mode parse_mode(const std::string& name);  // throws unknown_key on bad value

// Thresholds, mode, pipeline step list and optional declared insertions.
// Distances are meters. See load_config for the file syntax.
struct PipelineConfig {
    Mode mode = Mode::academic;

    double r = 20.0;      // connectivity radius between elements
    double l = 400.0;     // maximum path length (academic enumeration)
    double d_oh = 1.0;    // overhead extremity snapping radius
    double d_cab = 2.0;   // underground-to-cabinet stitching radius
    double d_cb = 2.0;    // connection-board-to-pole linking radius
    double min_line_length = 0.1;  // diagnostics: shorter lines are suspect

    std::optional<std::uint64_t> n;  // max elements per path (case-study)
    std::optional<double> d_p;       // max path length (case-study)
    std::optional<std::uint64_t> m;  // max customers per transformer

    std::uint64_t cap = 10'000'000;  // raw-sequence guard for the oracle engine

    std::vector<std::string> steps;   // transformation pipeline, in order
    std::vector<Element> inserts;     // elements added right after loading

    // Throws invalid_threshold when a distance is non-positive or a
    // case-study requirement (n, d_p, m) is missing in case-study mode.
    void validate() const;
};

}  // namespace gridpaths
