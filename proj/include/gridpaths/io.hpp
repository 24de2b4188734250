#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "gridpaths/config.hpp"
#include "gridpaths/diagnostics.hpp"
#include "gridpaths/elements.hpp"
#include "gridpaths/engine.hpp"
#include "gridpaths/transform.hpp"

namespace gridpaths {

// --- element CSV -----------------------------------------------------------
// One record per line: id,type,coords,status with coords "x1 y1;x2 y2;...".
// Status is empty unless the element is switch-like. A leading
// "id,type,coords,status" header is skipped; '#' lines and blank lines are
// ignored; an empty file is an empty set.

ElementSet parse_elements_csv(std::istream& in, const std::string& source_name);
ElementSet load_elements(const std::filesystem::path& file);

// Parses one CSV record (no header), as it appears in element files and in a
// config file's `insert` value.
Element parse_element_record(const std::string& record, const std::string& where);

std::string write_elements_csv(const ElementSet& elements);
void save_elements(const ElementSet& elements, const std::filesystem::path& file);

// --- config ----------------------------------------------------------------
// Flat "key = value" lines; '#' comments. Keys: mode, r, l, n, d_p, m, d_oh,
// d_cab, d_cb, min_line_length, cap, steps (comma-separated step names) and
// insert (one element record, repeatable; applied right after loading).

PipelineConfig parse_config(std::istream& in, const std::string& source_name);
PipelineConfig load_config(const std::filesystem::path& file);

// The element set plus the config's declared insertions.
ElementSet with_inserts(ElementSet elements, const PipelineConfig& cfg);

// --- structured documents ---------------------------------------------------
// All lengths are serialised with exactly six fractional digits; documents
// are byte-deterministic for fixed inputs.

std::string format_fixed6(double v);

std::string paths_json(const PathSet& paths);
std::string trace_json(const std::vector<TransformTrace>& traces);
std::string report_json(const PipelineConfig& cfg, const PathSet& paths,
                        const DiagnosticReport& report);

// --- run bundle --------------------------------------------------------------
// Directory capturing everything needed to replay a pipeline run. Only
// run.json carries the timestamp; every other artifact is deterministic.

struct RunBundle {
    std::filesystem::path dir;
    ElementSet input;    // loaded elements with inserts applied
    std::string config_text;
    PipelineConfig cfg;
    ElementSet transformed;
    std::vector<TransformTrace> traces;
    PathSet paths;
    DiagnosticReport report;
};

void write_run_bundle(const RunBundle& bundle);

}  // namespace gridpaths
