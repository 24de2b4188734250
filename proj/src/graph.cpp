#include "gridpaths/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gridpaths {

const std::vector<std::string> Adjacency::kNone;

Adjacency Adjacency::build(const ElementSet& elements, double r) {
    Adjacency adj;
    std::set<std::pair<std::string, std::string>> edges;

    for (const auto& [id, e] : elements) {
        adj.nodes_.push_back(id);
        adj.nbrs_[id];  // ensure isolated elements still appear
        for (const Coord& p : e.coords) {
            const Element* best = nullptr;
            double best_d = std::numeric_limits<double>::infinity();
            for (const auto& [oid, other] : elements) {
                if (oid == id) continue;
                double d = std::numeric_limits<double>::infinity();
                for (const Coord& q : other.coords)
                    d = std::min(d, std::hypot(p.x - q.x, p.y - q.y));
                bool better = d < best_d;
                if (!better && d == best_d && best) {
                    // Prefer compact elements, then the smaller id.
                    if (other.coords.size() != best->coords.size())
                        better = other.coords.size() < best->coords.size();
                    else
                        better = natural_less(oid, best->id);
                }
                if (better) {
                    best_d = d;
                    best = &other;
                }
            }
            if (best && best_d < r) {
                auto a = id, b = best->id;
                if (natural_less(b, a)) std::swap(a, b);
                edges.emplace(std::move(a), std::move(b));
            }
        }
    }

    for (const auto& [a, b] : edges) {
        adj.nbrs_[a].push_back(b);
        adj.nbrs_[b].push_back(a);
    }
    for (auto& [id, ns] : adj.nbrs_) std::sort(ns.begin(), ns.end(), natural_less);
    return adj;
}

const std::vector<std::string>& Adjacency::neighbors(const std::string& id) const {
    auto it = nbrs_.find(id);
    return it == nbrs_.end() ? kNone : it->second;
}

bool Adjacency::linked(const std::string& a, const std::string& b) const {
    const auto& ns = neighbors(a);
    return std::binary_search(ns.begin(), ns.end(), b, natural_less);
}

std::vector<std::pair<std::string, std::string>> Adjacency::edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [id, ns] : nbrs_)
        for (const auto& n : ns)
            if (natural_less(id, n)) out.emplace_back(id, n);
    return out;
}

std::set<std::string, NaturalLess> reachable(const Adjacency& adj,
                                             const std::vector<std::string>& seeds) {
    std::set<std::string, NaturalLess> seen;
    std::vector<std::string> stack;
    for (const auto& s : seeds)
        if (adj.has(s) && seen.insert(s).second) stack.push_back(s);
    while (!stack.empty()) {
        std::string id = std::move(stack.back());
        stack.pop_back();
        for (const auto& n : adj.neighbors(id))
            if (seen.insert(n).second) stack.push_back(n);
    }
    return seen;
}

namespace {

std::vector<std::string> canonical_cycle(std::vector<std::string> cycle) {
    auto smallest = std::min_element(cycle.begin(), cycle.end(), natural_less);
    std::rotate(cycle.begin(), smallest, cycle.end());
    if (cycle.size() > 2 && natural_less(cycle.back(), cycle[1]))
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

}  // namespace

std::vector<std::vector<std::string>> find_cycles(
    const Adjacency& adj, const std::function<bool(const std::string&)>& keep) {
    std::map<std::string, std::string, NaturalLess> parent;
    std::map<std::string, int, NaturalLess> depth;
    std::set<std::pair<std::string, std::string>> used;
    std::vector<std::vector<std::string>> cycles;

    for (const auto& root : adj.nodes()) {
        if (!keep(root) || depth.count(root)) continue;
        depth[root] = 0;
        std::vector<std::string> stack{root};
        while (!stack.empty()) {
            std::string u = std::move(stack.back());
            stack.pop_back();
            for (const auto& v : adj.neighbors(u)) {
                if (!keep(v)) continue;
                if (!depth.count(v)) {
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    stack.push_back(v);
                    auto a = u, b = v;
                    if (natural_less(b, a)) std::swap(a, b);
                    used.emplace(std::move(a), std::move(b));
                } else {
                    auto a = u, b = v;
                    if (natural_less(b, a)) std::swap(a, b);
                    if (!used.emplace(std::move(a), std::move(b)).second) continue;
                    // Back/cross edge: climb both endpoints to their meeting
                    // point to recover the enclosed cycle.
                    std::vector<std::string> up_u{u}, up_v{v};
                    std::string x = u, y = v;
                    while (depth[x] > depth[y]) up_u.push_back(x = parent[x]);
                    while (depth[y] > depth[x]) up_v.push_back(y = parent[y]);
                    while (x != y) {
                        up_u.push_back(x = parent[x]);
                        up_v.push_back(y = parent[y]);
                    }
                    // x == y is the meeting node, present in both walks.
                    std::vector<std::string> cycle(up_u.begin(), up_u.end());
                    for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it)
                        cycle.push_back(*it);
                    if (cycle.size() >= 3) cycles.push_back(canonical_cycle(std::move(cycle)));
                }
            }
        }
    }
    std::sort(cycles.begin(), cycles.end());
    cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
    return cycles;
}

}  // namespace gridpaths
