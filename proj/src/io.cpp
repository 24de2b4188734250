#include "gridpaths/io.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gridpaths/render.hpp"

namespace gridpaths {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(s);
    while (std::getline(ss, field, sep)) out.push_back(field);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

double parse_double(const std::string& text, const std::string& where) {
    const std::string t = trim(text);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        fail(Errc::parse_error, where + ": bad number '" + text + "'");
    return value;
}

std::uint64_t parse_u64(const std::string& text, const std::string& where) {
    const std::string t = trim(text);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        fail(Errc::parse_error, where + ": bad count '" + text + "'");
    return value;
}

// Shortest decimal text that re-reads to the same double.
std::string shortest_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::vector<Coord> parse_coords(const std::string& text, const std::string& where) {
    std::vector<Coord> coords;
    for (const auto& pair_text : split(text, ';')) {
        const std::string t = trim(pair_text);
        if (t.empty()) continue;
        std::istringstream ss(t);
        std::string xs, ys, extra;
        if (!(ss >> xs >> ys) || (ss >> extra))
            fail(Errc::parse_error, where + ": bad coordinate pair '" + pair_text + "'");
        coords.push_back({parse_double(xs, where), parse_double(ys, where)});
    }
    if (coords.empty()) fail(Errc::parse_error, where + ": no coordinates");
    return coords;
}

// Rethrows an error with the file:line location prefixed to its message.
[[noreturn]] void fail_at(const Error& e, const std::string& where) {
    std::string text = e.what();
    const std::string prefix = std::string(errc_name(e.code())) + ": ";
    if (text.rfind(prefix, 0) == 0) text = text.substr(prefix.size());
    fail(e.code(), where + ": " + text);
}

constexpr const char* kHeader = "id,type,coords,status";

}  // namespace

Element parse_element_record(const std::string& record, const std::string& where) {
    auto fields = split(record, ',');
    if (fields.size() < 3 || fields.size() > 4)
        fail(Errc::parse_error, where + ": expected id,type,coords[,status]");
    std::string id = trim(fields[0]);
    if (id.empty()) fail(Errc::parse_error, where + ": empty id");
    ElementType type;
    try {
        type = parse_type(trim(fields[1]));
    } catch (const Error& e) {
        fail_at(e, where);
    }
    std::vector<Coord> coords = parse_coords(fields[2], where);
    std::optional<SwitchStatus> status;
    std::string status_text = fields.size() == 4 ? trim(fields[3]) : "";
    if (!status_text.empty()) {
        if (!is_switch_like(type))
            fail(Errc::parse_error,
                 where + ": status on non-switch element '" + id + "'");
        try {
            status = parse_status(status_text);
        } catch (const Error& e) {
            fail_at(e, where);
        }
    } else if (type == ElementType::switch_) {
        fail(Errc::missing_status, where + ": switch '" + id + "' lacks a status");
    }
    return make_element(std::move(id), type, std::move(coords), status);
}

ElementSet parse_elements_csv(std::istream& in, const std::string& source_name) {
    ElementSet out;
    std::string line;
    int line_no = 0;
    bool seen_record = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!seen_record && t == kHeader) {
            seen_record = true;
            continue;
        }
        seen_record = true;
        const std::string where = source_name + ":" + std::to_string(line_no);
        Element e = parse_element_record(t, where);
        try {
            out.add(std::move(e));
        } catch (const Error& err) {
            fail_at(err, where);
        }
    }
    return out;
}

ElementSet load_elements(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) fail(Errc::io_error, "cannot open '" + file.string() + "'");
    return parse_elements_csv(in, file.filename().string());
}

std::string write_elements_csv(const ElementSet& elements) {
    std::string out = kHeader;
    out += '\n';
    for (const auto& [id, e] : elements) {
        out += id;
        out += ',';
        out += type_name(e.type);
        out += ',';
        for (std::size_t i = 0; i < e.coords.size(); ++i) {
            if (i) out += ';';
            out += shortest_double(e.coords[i].x) + " " + shortest_double(e.coords[i].y);
        }
        out += ',';
        if (e.status) out += status_name(*e.status);
        out += '\n';
    }
    return out;
}

void save_elements(const ElementSet& elements, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) fail(Errc::io_error, "cannot write '" + file.string() + "'");
    out << write_elements_csv(elements);
}

PipelineConfig parse_config(std::istream& in, const std::string& source_name) {
    PipelineConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::string where = source_name + ":" + std::to_string(line_no);
        auto eq = t.find('=');
        if (eq == std::string::npos) fail(Errc::parse_error, where + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key == "mode") cfg.mode = parse_mode(value);
        else if (key == "r") cfg.r = parse_double(value, where);
        else if (key == "l") cfg.l = parse_double(value, where);
        else if (key == "n") cfg.n = parse_u64(value, where);
        else if (key == "d_p") cfg.d_p = parse_double(value, where);
        else if (key == "m") cfg.m = parse_u64(value, where);
        else if (key == "d_oh") cfg.d_oh = parse_double(value, where);
        else if (key == "d_cab") cfg.d_cab = parse_double(value, where);
        else if (key == "d_cb") cfg.d_cb = parse_double(value, where);
        else if (key == "min_line_length") cfg.min_line_length = parse_double(value, where);
        else if (key == "cap") cfg.cap = parse_u64(value, where);
        else if (key == "steps") {
            cfg.steps.clear();
            for (const auto& raw : split(value, ',')) {
                std::string step = trim(raw);
                if (step.empty()) continue;
                if (!is_step_name(step))
                    fail(Errc::unknown_step, where + ": '" + step + "'");
                cfg.steps.push_back(step);
            }
        } else if (key == "insert") {
            cfg.inserts.push_back(parse_element_record(value, where));
        } else {
            fail(Errc::unknown_key, where + ": '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

PipelineConfig load_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) fail(Errc::io_error, "cannot open '" + file.string() + "'");
    return parse_config(in, file.filename().string());
}

ElementSet with_inserts(ElementSet elements, const PipelineConfig& cfg) {
    for (const auto& e : cfg.inserts) elements.add(e);
    return elements;
}

std::string format_fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

namespace {

ordered_json element_json(const Element& e) {
    ordered_json j;
    j["id"] = e.id;
    j["type"] = type_name(e.type);
    ordered_json coords = ordered_json::array();
    for (const Coord& c : e.coords) coords.push_back({c.x, c.y});
    j["coords"] = std::move(coords);
    if (e.status) j["status"] = status_name(*e.status);
    return j;
}

ordered_json path_set_json(const PathSet& paths) {
    ordered_json j;
    j["engine"] = paths.provenance;
    ordered_json stages = ordered_json::array();
    for (const auto& [name, count] : paths.stage_counts)
        stages.push_back({{"stage", name}, {"count", count}});
    j["stage_counts"] = std::move(stages);
    ordered_json customers = ordered_json::object();
    for (const auto& [c, list] : paths.by_customer) {
        ordered_json entries = ordered_json::array();
        for (const auto& info : list)
            entries.push_back({{"path", info.path},
                               {"length", format_fixed6(info.length)},
                               {"active", info.active}});
        customers[c] = std::move(entries);
    }
    j["customers"] = std::move(customers);
    return j;
}

ordered_json finding_json(const Finding& f) {
    ordered_json j;
    j["kind"] = finding_kind_name(f.kind);
    j["subjects"] = f.subjects;
    if (f.step) j["step"] = *f.step;
    else j["step"] = nullptr;
    j["detail"] = f.detail;
    return j;
}

}  // namespace

std::string paths_json(const PathSet& paths) { return path_set_json(paths).dump(2) + "\n"; }

std::string trace_json(const std::vector<TransformTrace>& traces) {
    ordered_json out = ordered_json::array();
    for (const auto& t : traces) {
        ordered_json j;
        j["step"] = t.step;
        ordered_json added = ordered_json::array();
        for (const auto& e : t.added) added.push_back(element_json(e));
        j["added"] = std::move(added);
        j["removed"] = t.removed;
        ordered_json replaced = ordered_json::array();
        for (const auto& e : t.replaced) replaced.push_back(element_json(e));
        j["replaced"] = std::move(replaced);
        out.push_back(std::move(j));
    }
    return out.dump(2) + "\n";
}

std::string report_json(const PipelineConfig& cfg, const PathSet& paths,
                        const DiagnosticReport& report) {
    ordered_json j;
    j["mode"] = mode_name(cfg.mode);
    ordered_json thresholds;
    thresholds["r"] = cfg.r;
    thresholds["l"] = cfg.l;
    thresholds["d_oh"] = cfg.d_oh;
    thresholds["d_cab"] = cfg.d_cab;
    thresholds["d_cb"] = cfg.d_cb;
    thresholds["min_line_length"] = cfg.min_line_length;
    if (cfg.n) thresholds["n"] = *cfg.n;
    if (cfg.d_p) thresholds["d_p"] = *cfg.d_p;
    if (cfg.m) thresholds["m"] = *cfg.m;
    j["thresholds"] = std::move(thresholds);
    ordered_json ps = path_set_json(paths);
    j["engine"] = ps["engine"];
    j["stage_counts"] = ps["stage_counts"];
    j["customers"] = ps["customers"];
    ordered_json findings = ordered_json::array();
    for (const auto& f : report.findings) findings.push_back(finding_json(f));
    j["findings"] = std::move(findings);
    j["passed"] = report.passed;
    return j.dump(2) + "\n";
}

void write_run_bundle(const RunBundle& bundle) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(bundle.dir, ec);
    if (ec) fail(Errc::io_error, "cannot create '" + bundle.dir.string() + "'");

    auto write_file = [&](const char* name, const std::string& content) {
        std::ofstream out(bundle.dir / name);
        if (!out) fail(Errc::io_error, "cannot write '" + (bundle.dir / name).string() + "'");
        out << content;
    };

    write_file("input_elements.csv", write_elements_csv(bundle.input));
    write_file("config.cfg", bundle.config_text);
    write_file("transformed_elements.csv", write_elements_csv(bundle.transformed));
    write_file("trace.json", trace_json(bundle.traces));
    write_file("paths.json", paths_json(bundle.paths));
    write_file("report.json", report_json(bundle.cfg, bundle.paths, bundle.report));
    write_file("render.dot", render_dot(bundle.transformed, bundle.paths));
    write_file("render.svg", render_svg(bundle.transformed, bundle.paths));

    auto now = std::chrono::system_clock::now();
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch());
    ordered_json run;
    run["timestamp_unix"] = secs.count();
    run["passed"] = bundle.report.passed;
    run["engine"] = bundle.paths.provenance;
    write_file("run.json", run.dump(2) + "\n");
}

}  // namespace gridpaths
