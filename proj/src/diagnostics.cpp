#include "gridpaths/diagnostics.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gridpaths/graph.hpp"

namespace gridpaths {

const char* finding_kind_name(FindingKind k) {
    switch (k) {
        case FindingKind::DisconnectedElement: return "DisconnectedElement";
        case FindingKind::CustomerWithoutPath: return "CustomerWithoutPath";
        case FindingKind::MultipleActivePaths: return "MultipleActivePaths";
        case FindingKind::PathTooLong: return "PathTooLong";
        case FindingKind::PathTooShort: return "PathTooShort";
        case FindingKind::RingDetected: return "RingDetected";
        case FindingKind::ConsecutiveSameType: return "ConsecutiveSameType";
        case FindingKind::CardinalityViolation: return "CardinalityViolation";
        case FindingKind::TransformerOverCapacity: return "TransformerOverCapacity";
    }
    return "unknown";
}

namespace {

std::string format_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

Finding make_finding(FindingKind kind, std::vector<std::string> subjects,
                     const ElementSet& elements, std::string detail) {
    Finding f;
    f.kind = kind;
    f.subjects = std::move(subjects);
    f.detail = std::move(detail);
    std::set<ElementType> seen;
    for (const auto& id : f.subjects)
        if (elements.contains(id) && seen.insert(elements.get(id).type).second)
            f.subject_types.push_back(elements.get(id).type);
    return f;
}

}  // namespace

DiagnosticReport diagnose(const ElementSet& elements, const PathSet& paths,
                          const PipelineConfig& cfg) {
    std::vector<Finding> findings;
    Adjacency adj = Adjacency::build(elements, cfg.r);

    // Elements the grid cannot reach from any transformer.
    auto reached = reachable(adj, subset(elements, ElementType::transformer).ids());
    for (const auto& [id, e] : elements)
        if (!reached.count(id))
            findings.push_back(make_finding(FindingKind::DisconnectedElement, {id}, elements,
                                            "unreachable from every transformer"));

    // Customers with no enumerated path at all.
    for (const auto& id : subset(elements, ElementType::customer).ids()) {
        auto it = paths.by_customer.find(id);
        if (it == paths.by_customer.end() || it->second.empty())
            findings.push_back(make_finding(FindingKind::CustomerWithoutPath, {id}, elements,
                                            "no path reaches a transformer"));
    }

    // More than one active path under the recorded switch statuses.
    for (const auto& [cust, list] : paths.by_customer) {
        std::size_t active = 0;
        for (const auto& info : list)
            if (path_active(info.path, elements)) ++active;
        if (active > 1)
            findings.push_back(make_finding(FindingKind::MultipleActivePaths, {cust}, elements,
                                            std::to_string(active) + " active paths"));
    }

    // Paths beyond the configured length budget.
    const bool academic = cfg.mode == Mode::academic;
    const double limit = academic ? cfg.l : cfg.d_p.value_or(cfg.l);
    for (const auto& [cust, list] : paths.by_customer)
        for (const auto& info : list) {
            double len = length_path(info.path, elements);
            bool too_long = academic ? len >= limit : len > limit;
            if (too_long)
                findings.push_back(make_finding(
                    FindingKind::PathTooLong, info.path, elements,
                    "length " + format_fixed(len) + " exceeds " + format_fixed(limit)));
        }

    // Suspiciously short line-like elements.
    for (const auto& [id, e] : elements)
        if (is_line_like(e.type) && internal_length(e) < cfg.min_line_length)
            findings.push_back(make_finding(
                FindingKind::PathTooShort, {id}, elements,
                "internal length " + format_fixed(internal_length(e)) + " below " +
                    format_fixed(cfg.min_line_length)));

    // Rings with no open switch anywhere on them: the grid cannot be
    // operated radially there. Rings broken by an open switch are healthy.
    auto keep = [&](const std::string& id) {
        const Element& e = elements.get(id);
        return !(e.status && *e.status == SwitchStatus::open);
    };
    for (const auto& cycle : find_cycles(adj, keep))
        findings.push_back(make_finding(FindingKind::RingDetected, cycle, elements,
                                        "closed ring of " + std::to_string(cycle.size()) +
                                            " elements"));

    // Same type twice in a row along a path (case-study vocabulary only).
    if (!academic)
        for (const auto& [cust, list] : paths.by_customer)
            for (const auto& info : list)
                for (std::size_t i = 0; i + 1 < info.path.size(); ++i) {
                    const Element& a = elements.get(info.path[i]);
                    const Element& b = elements.get(info.path[i + 1]);
                    if (a.type == b.type) {
                        findings.push_back(make_finding(
                            FindingKind::ConsecutiveSameType, info.path, elements,
                            a.id + " and " + b.id + " are both " + type_name(a.type)));
                        break;
                    }
                }

    // Structural cardinality of each path.
    for (const auto& [cust, list] : paths.by_customer)
        for (const auto& info : list) {
            std::size_t customers = 0, transformers = 0, boards = 0;
            for (const auto& id : info.path) {
                ElementType t = elements.get(id).type;
                if (t == ElementType::customer) ++customers;
                else if (t == ElementType::transformer) ++transformers;
                else if (t == ElementType::connection_board) ++boards;
            }
            bool bad = customers != 1 || transformers != 1 ||
                       elements.get(info.path.front()).type != ElementType::customer ||
                       elements.get(info.path.back()).type != ElementType::transformer;
            if (!academic && boards != 1) bad = true;
            if (bad)
                findings.push_back(make_finding(
                    FindingKind::CardinalityViolation, info.path, elements,
                    "customers=" + std::to_string(customers) +
                        " transformers=" + std::to_string(transformers) +
                        (academic ? "" : " connection_boards=" + std::to_string(boards))));
        }

    // Transformers feeding more customers than they may carry.
    if (cfg.m) {
        std::map<std::string, std::set<std::string, NaturalLess>, NaturalLess> served;
        for (const auto& [cust, list] : paths.by_customer)
            for (const auto& info : list)
                if (path_active(info.path, elements)) served[info.path.back()].insert(cust);
        for (const auto& [t, custs] : served)
            if (custs.size() > *cfg.m)
                findings.push_back(make_finding(
                    FindingKind::TransformerOverCapacity, {t}, elements,
                    std::to_string(custs.size()) + " customers exceed capacity " +
                        std::to_string(*cfg.m)));
    }

    std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.subjects != b.subjects) {
            return std::lexicographical_compare(a.subjects.begin(), a.subjects.end(),
                                                b.subjects.begin(), b.subjects.end(),
                                                natural_less);
        }
        return a.detail < b.detail;
    });

    DiagnosticReport report;
    report.findings = std::move(findings);
    report.passed = report.findings.empty();
    return report;
}

std::vector<Finding> check_unique_active(const ElementSet& elements, const PathSet& paths) {
    std::vector<std::string> switches;
    for (const auto& [id, e] : elements)
        if (is_switch_like(e.type)) switches.push_back(id);
    if (switches.size() > 20)
        fail(Errc::switch_space_too_large,
             std::to_string(switches.size()) + " switches exceed the 2^20 assignment guard");

    std::vector<Finding> findings;
    const std::uint64_t assignments = std::uint64_t{1} << switches.size();
    for (std::uint64_t k = 0; k < assignments; ++k) {
        std::set<std::string, NaturalLess> open;
        std::string label;
        for (std::size_t i = 0; i < switches.size(); ++i) {
            bool is_open = (k >> i) & 1;
            if (is_open) open.insert(switches[i]);
            if (i) label += ",";
            label += switches[i] + "=" + (is_open ? "open" : "close");
        }
        if (switches.empty()) label = "no switches";

        for (const auto& [cust, list] : paths.by_customer) {
            std::size_t active = 0;
            for (const auto& info : list) {
                bool blocked = false;
                for (const auto& id : info.path)
                    if (open.count(id)) {
                        blocked = true;
                        break;
                    }
                if (!blocked) ++active;
            }
            if (active == 1) continue;
            Finding f;
            f.kind = active == 0 ? FindingKind::CustomerWithoutPath
                                 : FindingKind::MultipleActivePaths;
            f.subjects = {cust};
            if (elements.contains(cust)) f.subject_types = {elements.get(cust).type};
            f.detail = "assignment " + label + ": " + std::to_string(active) + " active paths";
            findings.push_back(std::move(f));
        }
    }
    return findings;
}

std::optional<std::string> implicate_step(const Finding& finding,
                                          const std::vector<TransformTrace>& traces) {
    for (auto it = traces.rbegin(); it != traces.rend(); ++it)
        for (const auto& id : finding.subjects)
            if (it->touched(id)) return it->step;
    for (auto it = traces.rbegin(); it != traces.rend(); ++it) {
        const auto& domain = step_domain(it->step);
        for (ElementType t : finding.subject_types)
            if (std::find(domain.begin(), domain.end(), t) != domain.end()) return it->step;
    }
    return std::nullopt;
}

}  // namespace gridpaths
