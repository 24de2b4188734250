#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gridpaths/diagnostics.hpp"
#include "gridpaths/engine.hpp"
#include "gridpaths/io.hpp"
#include "gridpaths/render.hpp"
#include "gridpaths/transform.hpp"

namespace {

using namespace gridpaths;

int log_level() {
    static int level = [] {
        const char* v = std::getenv("GRIDPATHS_LOG");
        if (!v) return 0;
        std::string s(v);
        if (s == "debug") return 2;
        if (s == "info") return 1;
        return 0;
    }();
    return level;
}

void note(int level, const std::string& msg) {
    if (log_level() >= level) std::cerr << "[gridpaths] " << msg << "\n";
}

struct Inputs {
    ElementSet elements;       // with config inserts applied
    PipelineConfig cfg;
    std::string config_text;   // raw bytes of the config file, if any
};

Inputs load_inputs(const std::string& elements_path, const std::string& config_path) {
    Inputs in;
    if (!config_path.empty()) {
        in.cfg = load_config(config_path);
        std::ifstream raw(config_path);
        std::ostringstream buf;
        buf << raw.rdbuf();
        in.config_text = buf.str();
    }
    in.elements = with_inserts(load_elements(elements_path), in.cfg);
    note(1, "loaded " + std::to_string(in.elements.size()) + " elements from " + elements_path);
    return in;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail(Errc::io_error, "cannot write '" + out_path + "'");
    out << content;
}

PathSet run_engine(const ElementSet& elements, const PipelineConfig& cfg, bool oracle) {
    note(1, std::string("enumerating with the ") + (oracle ? "oracle" : "eps") + " engine");
    PathSet paths = oracle ? enumerate_filtered(elements, cfg) : enumerate_eps(elements, cfg);
    for (const auto& [stage, count] : paths.stage_counts)
        note(2, "stage " + stage + ": " + std::to_string(count));
    return paths;
}

std::string findings_text(const DiagnosticReport& report) {
    if (report.passed) return "passed: no findings\n";
    std::string out;
    for (const auto& f : report.findings) {
        out += finding_kind_name(f.kind);
        out += " [";
        for (std::size_t i = 0; i < f.subjects.size(); ++i) {
            if (i) out += ",";
            out += f.subjects[i];
        }
        out += "] ";
        if (f.step) out += "(step " + *f.step + ") ";
        out += f.detail;
        out += "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distribution-network path reconstruction"};
    app.require_subcommand(1);

    std::string elements_path, config_path, out_path, format = "svg";
    bool oracle = false;
    std::optional<std::uint64_t> cap;

    auto add_common = [&](CLI::App* cmd, bool need_config) {
        cmd->add_option("--elements", elements_path, "element CSV file")->required();
        auto* c = cmd->add_option("--config", config_path, "config file");
        if (need_config) c->required();
        return cmd;
    };

    auto* cmd_size = add_common(app.add_subcommand("size", "print the hypothetical path count"),
                                false);
    auto* cmd_transform =
        add_common(app.add_subcommand("transform", "run the transformation pipeline"), true);
    cmd_transform->add_option("--out", out_path, "output CSV (default stdout)");
    auto* cmd_enumerate =
        add_common(app.add_subcommand("enumerate", "enumerate compatible paths"), true);
    cmd_enumerate->add_flag("--oracle", oracle, "use the exhaustive engine");
    cmd_enumerate->add_option("--cap", cap, "raw sequence cap override");
    cmd_enumerate->add_option("--out", out_path, "output JSON (default stdout)");
    auto* cmd_classify =
        add_common(app.add_subcommand("classify", "list paths as active/backup"), true);
    cmd_classify->add_flag("--oracle", oracle, "use the exhaustive engine");
    cmd_classify->add_option("--cap", cap, "raw sequence cap override");
    cmd_classify->add_option("--out", out_path, "output text (default stdout)");
    auto* cmd_diagnose =
        add_common(app.add_subcommand("diagnose", "check paths for discrepancies"), true);
    cmd_diagnose->add_flag("--oracle", oracle, "use the exhaustive engine");
    cmd_diagnose->add_option("--cap", cap, "raw sequence cap override");
    cmd_diagnose->add_option("--out", out_path, "report JSON file");
    auto* cmd_render = add_common(app.add_subcommand("render", "draw the network"), true);
    cmd_render->add_option("--format", format, "dot or svg (default svg)");
    cmd_render->add_option("--cap", cap, "raw sequence cap override");
    cmd_render->add_option("--out", out_path, "output file (default stdout)");
    auto* cmd_report = add_common(app.add_subcommand("report", "full structured report"), true);
    cmd_report->add_flag("--oracle", oracle, "use the exhaustive engine");
    cmd_report->add_option("--cap", cap, "raw sequence cap override");
    cmd_report->add_option("--out", out_path, "output JSON (default stdout)");
    auto* cmd_pipeline = add_common(
        app.add_subcommand("pipeline", "load, transform, enumerate, classify, diagnose"), true);
    cmd_pipeline->add_flag("--oracle", oracle, "use the exhaustive engine");
    cmd_pipeline->add_option("--cap", cap, "raw sequence cap override");
    cmd_pipeline->add_option("--out", out_path, "run bundle directory")->required();

    try {
        app.parse(argc, argv);

        Inputs in = load_inputs(elements_path, config_path);
        if (cap) in.cfg.cap = *cap;

        if (cmd_size->parsed()) {
            std::size_t customers = subset(in.elements, ElementType::customer).size();
            std::size_t transformers = subset(in.elements, ElementType::transformer).size();
            std::cout << hypothetical_count(in.elements.size(), customers, transformers)
                      << "\n";
            return 0;
        }
        if (cmd_transform->parsed()) {
            auto result = apply_pipeline(in.elements, in.cfg);
            write_output(out_path, write_elements_csv(result.first));
            return 0;
        }
        if (cmd_enumerate->parsed()) {
            PathSet paths = run_engine(in.elements, in.cfg, oracle);
            write_output(out_path, paths_json(paths));
            return 0;
        }
        if (cmd_classify->parsed()) {
            PathSet paths = classify(run_engine(in.elements, in.cfg, oracle), in.elements);
            std::string out;
            for (const auto& [c, list] : paths.by_customer)
                for (const auto& info : list) {
                    out += c + "\t" + (info.active ? "active" : "backup") + "\t" +
                           format_fixed6(info.length) + "\t";
                    for (std::size_t i = 0; i < info.path.size(); ++i) {
                        if (i) out += ">";
                        out += info.path[i];
                    }
                    out += "\n";
                }
            write_output(out_path, out);
            return 0;
        }
        if (cmd_diagnose->parsed()) {
            PathSet paths = run_engine(in.elements, in.cfg, oracle);
            DiagnosticReport report = diagnose(in.elements, paths, in.cfg);
            if (!out_path.empty()) write_output(out_path, report_json(in.cfg, paths, report));
            std::cout << findings_text(report);
            return report.passed ? 0 : 1;
        }
        if (cmd_render->parsed()) {
            PathSet paths = enumerate_eps(in.elements, in.cfg);
            write_output(out_path, render(in.elements, paths, format));
            return 0;
        }
        if (cmd_report->parsed()) {
            PathSet paths = run_engine(in.elements, in.cfg, oracle);
            DiagnosticReport report = diagnose(in.elements, paths, in.cfg);
            write_output(out_path, report_json(in.cfg, paths, report));
            return report.passed ? 0 : 1;
        }
        if (cmd_pipeline->parsed()) {
            RunBundle bundle;
            bundle.dir = out_path;
            bundle.cfg = in.cfg;
            bundle.config_text = in.config_text;
            bundle.input = in.elements;
            auto [transformed, traces] = apply_pipeline(in.elements, in.cfg);
            bundle.transformed = std::move(transformed);
            bundle.traces = std::move(traces);
            bundle.paths = run_engine(bundle.transformed, in.cfg, oracle);
            DiagnosticReport report = diagnose(bundle.transformed, bundle.paths, in.cfg);
            for (auto& f : report.findings) f.step = implicate_step(f, bundle.traces);
            bundle.report = std::move(report);
            write_run_bundle(bundle);
            std::cout << findings_text(bundle.report);
            note(1, "run bundle written to " + out_path);
            return bundle.report.passed ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(Errc::usage);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(Errc::io_error);
    }
}
