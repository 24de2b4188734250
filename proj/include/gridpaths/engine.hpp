#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gridpaths/config.hpp"
#include "gridpaths/elements.hpp"

namespace gridpaths {

struct PathInfo {
    Path path;
    double length = 0.0;
    bool active = false;
};

// Paths grouped per customer (every customer keeps a key, possibly with an
// empty list), each list ordered lexicographically by natural id sequence.
// stage_counts records survivor counts after each filtering stage for the
// exhaustive engine, or the single final count for the recursive engine.
struct PathSet {
    std::map<std::string, std::vector<PathInfo>, NaturalLess> by_customer;
    std::string provenance;  // "oracle" or "eps"
    std::vector<std::pair<std::string, std::uint64_t>> stage_counts;

    std::uint64_t total_paths() const;
};

// Natural-id lexicographic order between paths.
bool path_less(const Path& a, const Path& b);

// True when both sets hold exactly the same id sequences per customer
// (lengths and flags recomputed from the same elements necessarily agree).
bool same_paths(const PathSet& a, const PathSet& b);

// Number of customer→transformer sequences over E elements of which C are
// customers and T transformers, threading any arrangement of the remaining
// E−C−T elements between them. Exact; throws overflow when the value
// exceeds 64 bits, usage when the cardinalities are inconsistent.
std::uint64_t hypothetical_count(std::uint64_t e, std::uint64_t c, std::uint64_t t);

// Exhaustive engine: materialises every hypothetical sequence, then applies
// each constraint in turn, recording survivor counts per stage. Throws
// enumeration_cap_exceeded when the raw sequence count exceeds cfg.cap (or
// does not fit 64 bits).
PathSet enumerate_filtered(const ElementSet& elements, const PipelineConfig& cfg);

// Recursive engine: per-customer depth-first expansion over the connectivity
// graph, pruning as constraints fail. Agrees with enumerate_filtered on any
// input the latter can process.
PathSet enumerate_eps(const ElementSet& elements, const PipelineConfig& cfg);

// True when the path crosses no element whose recorded status is open.
bool path_active(const Path& p, const ElementSet& elements);

// Recomputes every active flag (and length) from the elements.
PathSet classify(PathSet paths, const ElementSet& elements);

// The customer's list from the set; throws not_a_customer when the id names
// an element of a different type.
std::vector<PathInfo> paths_for_customer(const PathSet& paths, const ElementSet& elements,
                                         const std::string& customer);

}  // namespace gridpaths
