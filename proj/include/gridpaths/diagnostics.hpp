#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridpaths/config.hpp"
#include "gridpaths/elements.hpp"
#include "gridpaths/engine.hpp"
#include "gridpaths/transform.hpp"

namespace gridpaths {

enum class FindingKind {
    DisconnectedElement,
    CustomerWithoutPath,
    MultipleActivePaths,
    PathTooLong,
    PathTooShort,
    RingDetected,
    ConsecutiveSameType,
    CardinalityViolation,
    TransformerOverCapacity,
};

const char* finding_kind_name(FindingKind k);

struct Finding {
    FindingKind kind;
    std::vector<std::string> subjects;      // ids; arity depends on kind
    std::vector<ElementType> subject_types; // types of the subjects, deduplicated
    std::optional<std::string> step;        // implicated pipeline step, if any
    std::string detail;
};

struct DiagnosticReport {
    std::vector<Finding> findings;
    bool passed = false;  // equivalent to findings.empty()
};

// Runs every discrepancy check over the element set and its enumerated
// paths, using recorded switch statuses. Findings come out ordered by kind,
// then first subject, then detail. Problems are findings, never errors.
DiagnosticReport diagnose(const ElementSet& elements, const PathSet& paths,
                          const PipelineConfig& cfg);

// Re-classifies the paths under every assignment of open/closed across all
// switch-like elements and flags customers with a number of active paths
// other than one; each finding names the assignment. Throws
// switch_space_too_large beyond 20 switches.
std::vector<Finding> check_unique_active(const ElementSet& elements, const PathSet& paths);

// Latest pipeline step whose trace touched a subject of the finding; when
// none did, the latest step whose operand types overlap the subjects' types;
// otherwise nothing.
std::optional<std::string> implicate_step(const Finding& finding,
                                          const std::vector<TransformTrace>& traces);

}  // namespace gridpaths
