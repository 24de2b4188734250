#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gridpaths/config.hpp"
#include "gridpaths/elements.hpp"
#include "gridpaths/io.hpp"

// Checks that an expression throws Error with a specific code.
#define CHECK_ERRC(expr, errc)                                        \
    do {                                                              \
        try {                                                         \
            (void)(expr);                                             \
            FAIL_CHECK("expected " << errc_name(errc) << " error");   \
        } catch (const gridpaths::Error& e_) {                        \
            CHECK(e_.code() == (errc));                               \
        }                                                             \
    } while (0)

namespace testsup {

using namespace gridpaths;

inline std::filesystem::path data_dir() { return GRIDPATHS_DATA_DIR; }

inline ElementSet load_fixture(const std::string& name) {
    return load_elements(data_dir() / name);
}

inline PipelineConfig load_cfg(const std::string& name) {
    return load_config(data_dir() / name);
}

inline Element pt(std::string id, ElementType t, double x, double y,
                  std::optional<SwitchStatus> s = std::nullopt) {
    return make_element(std::move(id), t, {{x, y}}, s);
}

inline Element seg(std::string id, ElementType t, double x1, double y1, double x2, double y2) {
    return make_element(std::move(id), t, {{x1, y1}, {x2, y2}});
}

inline Path path_of(std::initializer_list<const char*> ids) {
    Path p;
    for (const char* id : ids) p.emplace_back(id);
    return p;
}

inline std::vector<std::pair<std::string, std::string>> edge_list(
    std::initializer_list<std::pair<const char*, const char*>> pairs) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : pairs) out.emplace_back(a, b);
    return out;
}

}  // namespace testsup
