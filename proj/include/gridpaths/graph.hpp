#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gridpaths/elements.hpp"

namespace gridpaths {

// Undirected connectivity graph over an element set.
//
// Rule: for every element x and every recorded coordinate p of x, x is linked
// to the single element whose distance to p is smallest, provided that
// distance is strictly below r. Ties break toward the candidate with fewer
// recorded coordinates, then the naturally smaller id (junction points beat
// long lines, which keeps hubs where the data says they are). The union of
// all such picks, symmetrised, is the edge set.
class Adjacency {
public:
    static Adjacency build(const ElementSet& elements, double r);

    const std::vector<std::string>& neighbors(const std::string& id) const;
    bool linked(const std::string& a, const std::string& b) const;
    bool has(const std::string& id) const { return nbrs_.count(id) != 0; }

    // Every edge once, (smaller id, larger id), naturally ordered.
    std::vector<std::pair<std::string, std::string>> edges() const;

    const std::vector<std::string>& nodes() const { return nodes_; }

private:
    std::map<std::string, std::vector<std::string>, NaturalLess> nbrs_;
    std::vector<std::string> nodes_;
    static const std::vector<std::string> kNone;
};

// Ids reachable from any seed by walking the adjacency (seeds included,
// unknown seeds ignored).
std::set<std::string, NaturalLess> reachable(const Adjacency& adj,
                                             const std::vector<std::string>& seeds);

// One cycle per independent back edge of a spanning forest, restricted to
// nodes accepted by keep. Each cycle is a closed walk of ≥3 distinct ids,
// canonicalised (smallest id first, smaller neighbour second) and the list
// is deduplicated and sorted.
std::vector<std::vector<std::string>> find_cycles(
    const Adjacency& adj, const std::function<bool(const std::string&)>& keep);

}  // namespace gridpaths
