#include "gridpaths/engine.hpp"

#include <algorithm>
#include <limits>

#include "gridpaths/graph.hpp"

namespace gridpaths {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        fail(Errc::overflow, "sequence count exceeds 64 bits");
    return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
        fail(Errc::overflow, "sequence count exceeds 64 bits");
    return a * b;
}

}  // namespace

std::uint64_t PathSet::total_paths() const {
    std::uint64_t n = 0;
    for (const auto& [c, list] : by_customer) n += list.size();
    return n;
}

bool path_less(const Path& a, const Path& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), natural_less);
}

bool same_paths(const PathSet& a, const PathSet& b) {
    auto strip = [](const PathSet& s) {
        std::map<std::string, std::vector<Path>, NaturalLess> out;
        for (const auto& [c, list] : s.by_customer) {
            auto& paths = out[c];
            for (const auto& info : list) paths.push_back(info.path);
            std::sort(paths.begin(), paths.end(), path_less);
        }
        return out;
    };
    return strip(a) == strip(b);
}

std::uint64_t hypothetical_count(std::uint64_t e, std::uint64_t c, std::uint64_t t) {
    if (c < 1 || t < 1 || e < c + t)
        fail(Errc::usage, "count needs at least one customer, one transformer and e >= c + t");
    std::uint64_t rest = e - c - t;
    std::uint64_t total = 0;
    std::uint64_t arrangements = 1;  // P(rest, i)
    for (std::uint64_t i = 0; i <= rest; ++i) {
        if (i > 0) arrangements = checked_mul(arrangements, rest - i + 1);
        total = checked_add(total, checked_mul(checked_mul(c, arrangements), t));
    }
    return total;
}

bool path_active(const Path& p, const ElementSet& elements) {
    for (const auto& id : p) {
        const Element& e = elements.get(id);
        if (e.status && *e.status == SwitchStatus::open) return false;
    }
    return true;
}

namespace {

struct Workspace {
    const ElementSet& elements;
    const PipelineConfig& cfg;
    Adjacency adj;
    std::vector<std::string> customers;
    std::vector<std::string> transformers;
    std::vector<std::string> rest;  // neither customer nor transformer

    // Per-customer id of its closest element of type line (academic hop
    // rule); empty when no lines exist.
    std::map<std::string, std::string, NaturalLess> closest_line;

    explicit Workspace(const ElementSet& els, const PipelineConfig& c)
        : elements(els), cfg(c), adj(Adjacency::build(els, c.r)) {
        for (const auto& [id, e] : els) {
            if (e.type == ElementType::customer) customers.push_back(id);
            else if (e.type == ElementType::transformer) transformers.push_back(id);
            else rest.push_back(id);
        }
        if (cfg.mode == Mode::academic) {
            ElementSet lines = subset(els, ElementType::line);
            if (!lines.empty())
                for (const auto& c_id : customers)
                    closest_line[c_id] = closest(els.get(c_id), lines).id;
        }
    }
};

PathSet finalize(std::map<std::string, std::vector<Path>, NaturalLess> raw,
                 const Workspace& ws, std::string provenance,
                 std::vector<std::pair<std::string, std::uint64_t>> stages) {
    PathSet out;
    out.provenance = std::move(provenance);
    out.stage_counts = std::move(stages);
    for (const auto& c : ws.customers) out.by_customer[c];  // keep empty lists
    for (auto& [c, paths] : raw) {
        std::sort(paths.begin(), paths.end(), path_less);
        auto& list = out.by_customer[c];
        for (auto& p : paths) {
            PathInfo info;
            info.length = length_path(p, ws.elements);
            info.active = path_active(p, ws.elements);
            info.path = std::move(p);
            list.push_back(std::move(info));
        }
    }
    return out;
}

// Constraint predicates shared by both engines, each over a whole sequence.

bool consecutive_linked(const Path& p, const Workspace& ws) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!ws.adj.linked(p[i], p[i + 1])) return false;
    return true;
}

bool starts_at_closest_line(const Path& p, const Workspace& ws) {
    auto it = ws.closest_line.find(p.front());
    return it != ws.closest_line.end() && p.size() > 1 && p[1] == it->second;
}

bool no_consecutive_same_type(const Path& p, const ElementSet& els) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (els.get(p[i]).type == els.get(p[i + 1]).type) return false;
    return true;
}

std::size_t board_count(const Path& p, const ElementSet& els) {
    std::size_t n = 0;
    for (const auto& id : p)
        if (els.get(id).type == ElementType::connection_board) ++n;
    return n;
}

}  // namespace

PathSet enumerate_filtered(const ElementSet& elements, const PipelineConfig& cfg) {
    if (cfg.mode == Mode::casestudy && (!cfg.n || !cfg.d_p))
        fail(Errc::invalid_threshold, "casestudy enumeration requires n and d_p");
    Workspace ws(elements, cfg);
    if (ws.customers.empty() || ws.transformers.empty())
        fail(Errc::usage, "enumeration needs at least one customer and one transformer");

    std::uint64_t raw_count = 0;
    try {
        raw_count = hypothetical_count(elements.size(), ws.customers.size(),
                                       ws.transformers.size());
    } catch (const Error& err) {
        if (err.code() != Errc::overflow) throw;
        fail(Errc::enumeration_cap_exceeded, "raw sequence count exceeds 64 bits");
    }
    if (raw_count > cfg.cap)
        fail(Errc::enumeration_cap_exceeded,
             "raw sequence count " + std::to_string(raw_count) + " exceeds cap " +
                 std::to_string(cfg.cap));

    // Collect the survivors of the first filtering stage directly. Both
    // first-stage predicates are prefix-monotone (once a prefix violates
    // them, every completion does too), so subtrees of doomed sequences are
    // skipped; the stored set is exactly the stage-one survivor set and the
    // raw cardinality is the closed-form count above.
    std::vector<Path> pool;
    Path current;
    std::vector<bool> used(ws.rest.size(), false);
    bool academic = cfg.mode == Mode::academic;

    auto expand = [&](auto&& self, const std::string& t) -> void {
        const std::string& last = current.back();
        bool emit = academic ? current.size() > 1 && starts_at_closest_line(current, ws)
                             : ws.adj.linked(last, t);
        if (emit) {
            current.push_back(t);
            pool.push_back(current);
            current.pop_back();
        }
        for (std::size_t i = 0; i < ws.rest.size(); ++i) {
            if (used[i]) continue;
            const std::string& next = ws.rest[i];
            if (academic) {
                // Stage one pins the element right after the customer.
                if (current.size() == 1 &&
                    (!ws.closest_line.count(current.front()) ||
                     next != ws.closest_line.at(current.front())))
                    continue;
            } else {
                if (!ws.adj.linked(last, next)) continue;
            }
            used[i] = true;
            current.push_back(next);
            self(self, t);
            current.pop_back();
            used[i] = false;
        }
    };
    for (const auto& c : ws.customers)
        for (const auto& t : ws.transformers) {
            current.assign({c});
            expand(expand, t);
        }

    std::vector<std::pair<std::string, std::uint64_t>> stages;
    stages.emplace_back("hypothetical", raw_count);
    stages.emplace_back(academic ? "customer_closest_line" : "connectivity", pool.size());

    auto apply_stage = [&](const char* name, auto&& pred) {
        std::vector<Path> kept;
        kept.reserve(pool.size());
        for (auto& p : pool)
            if (pred(p)) kept.push_back(std::move(p));
        pool = std::move(kept);
        stages.emplace_back(name, pool.size());
    };

    if (academic) {
        apply_stage("connectivity", [&](const Path& p) { return consecutive_linked(p, ws); });
        apply_stage("path_length",
                    [&](const Path& p) { return length_path(p, elements) < cfg.l; });
    } else {
        apply_stage("element_count", [&](const Path& p) { return p.size() <= *cfg.n; });
        apply_stage("path_distance",
                    [&](const Path& p) { return length_path(p, elements) <= *cfg.d_p; });
        apply_stage("no_consecutive_same_type",
                    [&](const Path& p) { return no_consecutive_same_type(p, elements); });
        apply_stage("one_connection_board",
                    [&](const Path& p) { return board_count(p, elements) == 1; });
    }

    std::map<std::string, std::vector<Path>, NaturalLess> grouped;
    for (auto& p : pool) grouped[p.front()].push_back(std::move(p));
    return finalize(std::move(grouped), ws, "oracle", std::move(stages));
}

PathSet enumerate_eps(const ElementSet& elements, const PipelineConfig& cfg) {
    if (cfg.mode == Mode::casestudy && (!cfg.n || !cfg.d_p))
        fail(Errc::invalid_threshold, "casestudy enumeration requires n and d_p");
    Workspace ws(elements, cfg);
    std::map<std::string, std::vector<Path>, NaturalLess> grouped;

    bool academic = cfg.mode == Mode::academic;
    for (const auto& c : ws.customers) {
        auto& results = grouped[c];
        Path current{c};
        std::set<std::string, NaturalLess> on_path{c};

        // Extends the path ending at `u` with accumulated length `len`
        // (hop distances plus internal lengths of all elements before u).
        auto dfs = [&](auto&& self, const std::string& u, double len) -> void {
            const Element& eu = elements.get(u);
            double exit_len = len + internal_length(eu);
            for (const auto& v : ws.adj.neighbors(u)) {
                if (on_path.count(v)) continue;
                const Element& ev = elements.get(v);
                if (ev.type == ElementType::customer) continue;
                double next_len = exit_len + dist(eu, ev);
                if (academic) {
                    if (next_len >= cfg.l) continue;
                } else {
                    if (next_len > *cfg.d_p) continue;
                    if (current.size() + 1 > *cfg.n) continue;
                    if (ev.type == eu.type) continue;
                }
                if (ev.type == ElementType::transformer) {
                    if (!academic && board_count(current, elements) != 1) continue;
                    current.push_back(v);
                    results.push_back(current);
                    current.pop_back();
                    continue;  // paths never pass through a transformer
                }
                if (!academic && ev.type == ElementType::connection_board &&
                    board_count(current, elements) == 1)
                    continue;
                current.push_back(v);
                on_path.insert(v);
                self(self, v, next_len);
                on_path.erase(v);
                current.pop_back();
            }
        };

        if (academic) {
            // First hop fixed by the closest-line rule, if it is also linked.
            auto it = ws.closest_line.find(c);
            if (it == ws.closest_line.end() || !ws.adj.linked(c, it->second)) continue;
            const Element& ec = elements.get(c);
            const Element& first = elements.get(it->second);
            double hop = internal_length(ec) + dist(ec, first);
            if (hop >= cfg.l) continue;
            current.push_back(it->second);
            on_path.insert(it->second);
            dfs(dfs, it->second, hop);
        } else {
            dfs(dfs, c, 0.0);
        }
    }

    PathSet out = finalize(std::move(grouped), ws, "eps", {});
    out.stage_counts.emplace_back("paths", out.total_paths());
    return out;
}

PathSet classify(PathSet paths, const ElementSet& elements) {
    for (auto& [c, list] : paths.by_customer)
        for (auto& info : list) {
            info.length = length_path(info.path, elements);
            info.active = path_active(info.path, elements);
        }
    return paths;
}

std::vector<PathInfo> paths_for_customer(const PathSet& paths, const ElementSet& elements,
                                         const std::string& customer) {
    const Element& e = elements.get(customer);
    if (e.type != ElementType::customer)
        fail(Errc::not_a_customer, "'" + customer + "' is a " + type_name(e.type));
    auto it = paths.by_customer.find(customer);
    if (it == paths.by_customer.end()) return {};
    return it->second;
}

}  // namespace gridpaths
