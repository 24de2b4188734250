#include <doctest.h>

#include "gridpaths/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gridpaths/transform.hpp"
#include "support.hpp"

using namespace gridpaths;
using namespace testsup;
using nlohmann::json;

namespace {

ElementSet parse_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_elements_csv(in, "mem");
}

PipelineConfig parse_cfg(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in, "mem");
}

// Message carried by the Error an expression throws.
template <typename F>
std::string error_message(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

std::filesystem::path fresh_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("element files load with types, coordinates and statuses") {
    ElementSet set = load_fixture("dso_network.csv");
    CHECK(set.size() == 12);
    CHECK(set.get("e1").type == ElementType::transformer);
    CHECK(set.get("e3").coords == std::vector<Coord>{{240, 297}, {328, 296}});
    CHECK(set.get("e9").type == ElementType::switch_);
    CHECK(set.get("e9").status == SwitchStatus::closed);
    CHECK_FALSE(set.get("e1").status.has_value());
}

TEST_CASE("the header line, comments and blanks are all optional noise") {
    CHECK(parse_csv("").empty());
    CHECK(parse_csv("id,type,coords,status\n").empty());
    CHECK(parse_csv("# nothing but comments\n\n").empty());

    ElementSet bare = parse_csv("a1,customer,1 2\n");
    ElementSet framed = parse_csv(
        "# network\n"
        "id,type,coords,status\n"
        "\n"
        "a1,customer,1 2,\n");
    CHECK(bare == framed);

    // Only the first record position may hold a header.
    CHECK_ERRC(parse_csv("a1,customer,1 2\nid,type,coords,status\n"), Errc::unknown_type);
}

TEST_CASE("switch statuses follow the type rules") {
    ElementSet set = parse_csv(
        "s1,switch,1 1,open\n"
        "s2,open_switch,2 2\n"
        "s3,close_switch,3 3\n");
    CHECK(set.get("s1").status == SwitchStatus::open);
    CHECK(set.get("s2").status == SwitchStatus::open);
    CHECK(set.get("s3").status == SwitchStatus::closed);
    CHECK_ERRC(parse_csv("s1,switch,1 1\n"), Errc::missing_status);
    CHECK_ERRC(parse_csv("l1,line,1 1;2 2,open\n"), Errc::parse_error);
    CHECK_ERRC(parse_csv("s1,switch,1 1,ajar\n"), Errc::parse_error);
}

TEST_CASE("malformed records carry their file and line") {
    CHECK_ERRC(parse_csv("a1,customer\n"), Errc::parse_error);
    CHECK_ERRC(parse_csv("a1,customer,1 2,open,extra\n"), Errc::parse_error);
    CHECK_ERRC(parse_csv("a1,gizmo,1 2\n"), Errc::unknown_type);
    CHECK_ERRC(parse_csv("a1,customer,1 2 3\n"), Errc::parse_error);
    CHECK_ERRC(parse_csv("a1,customer,\n"), Errc::parse_error);
    CHECK_ERRC(parse_csv("a1,customer,x y\n"), Errc::parse_error);
    CHECK_ERRC(parse_csv("a1,customer,1 2\na1,customer,3 4\n"), Errc::duplicate_id);

    std::string msg = error_message([] {
        parse_csv("id,type,coords,status\na1,customer,1 2\nb2,gizmo,3 4\n");
    });
    CHECK(msg.find("mem:3") != std::string::npos);
}

TEST_CASE("written element files read back identically") {
    for (const char* name : {"dso_network.csv", "real_network.csv", "casestudy_micro.csv"}) {
        ElementSet set = load_fixture(name);
        CHECK(parse_csv(write_elements_csv(set)) == set);
    }
}

TEST_CASE("written element files use the shortest faithful numbers") {
    ElementSet set;
    set.add(seg("l1", ElementType::line, 240, 297, 328.25, -0.1));
    set.add(pt("s1", ElementType::switch_, 301.5, 190, SwitchStatus::open));
    CHECK(write_elements_csv(set) ==
          "id,type,coords,status\n"
          "l1,line,240 297;328.25 -0.1,\n"
          "s1,switch,301.5 190,open\n");
}

TEST_CASE("save and load round-trip through the filesystem") {
    auto dir = fresh_dir("gridpaths_io_rt");
    std::filesystem::create_directories(dir);
    ElementSet set = load_fixture("dso_network.csv");
    save_elements(set, dir / "copy.csv");
    CHECK(load_elements(dir / "copy.csv") == set);
    CHECK_ERRC(load_elements(dir / "absent.csv"), Errc::io_error);
    CHECK_ERRC(load_config(dir / "absent.cfg"), Errc::io_error);
}

TEST_CASE("configs parse keys, steps and declared insertions") {
    PipelineConfig academic = load_cfg("academic.cfg");
    CHECK(academic.mode == Mode::academic);
    CHECK(academic.r == 20.0);
    CHECK(academic.l == 400.0);
    CHECK(academic.steps.empty());
    CHECK(academic.inserts.empty());

    PipelineConfig extended = load_cfg("academic_e13.cfg");
    REQUIRE(extended.inserts.size() == 1);
    CHECK(extended.inserts[0].id == "e13");
    CHECK(extended.inserts[0].type == ElementType::switch_);
    CHECK(extended.inserts[0].coords == std::vector<Coord>{{301.5, 190}});
    CHECK(extended.inserts[0].status == SwitchStatus::open);

    PipelineConfig cs = load_cfg("casestudy.cfg");
    CHECK(cs.mode == Mode::casestudy);
    CHECK(cs.n == 15);
    CHECK(cs.d_p == 100.0);
    CHECK(cs.m == 5);
    CHECK(cs.steps == std::vector<std::string>{
                          "snap_overhead", "stitch_underground_to_cabinets",
                          "link_boards_to_poles", "connect_customers", "locate_switches"});
}

TEST_CASE("config defaults cover every academic threshold") {
    PipelineConfig cfg = parse_cfg("");
    CHECK(cfg.mode == Mode::academic);
    CHECK(cfg.r == 20.0);
    CHECK(cfg.l == 400.0);
    CHECK(cfg.d_oh == 1.0);
    CHECK(cfg.d_cab == 2.0);
    CHECK(cfg.d_cb == 2.0);
    CHECK(cfg.min_line_length == 0.1);
    CHECK(cfg.cap == 10'000'000);
    CHECK_FALSE(cfg.n.has_value());
    CHECK_FALSE(cfg.d_p.has_value());
    CHECK_FALSE(cfg.m.has_value());
}

TEST_CASE("config mistakes are rejected with their own codes") {
    CHECK_ERRC(parse_cfg("radius = 5\n"), Errc::unknown_key);
    CHECK_ERRC(parse_cfg("mode = quantum\n"), Errc::unknown_key);
    CHECK_ERRC(parse_cfg("steps = snap_overhead,mystery\n"), Errc::unknown_step);
    CHECK_ERRC(parse_cfg("r 5\n"), Errc::parse_error);
    CHECK_ERRC(parse_cfg("r = fast\n"), Errc::parse_error);
    CHECK_ERRC(parse_cfg("insert = a1,customer\n"), Errc::parse_error);
    CHECK_ERRC(parse_cfg("r = 0\n"), Errc::invalid_threshold);
    CHECK_ERRC(parse_cfg("l = -1\n"), Errc::invalid_threshold);
    CHECK_ERRC(parse_cfg("mode = casestudy\nn = 5\nd_p = 10\n"), Errc::invalid_threshold);

    std::string msg = error_message([] { parse_cfg("# c\nr = 20\nwhat = 1\n"); });
    CHECK(msg.find("mem:3") != std::string::npos);
}

TEST_CASE("declared insertions join the loaded set") {
    ElementSet set = load_fixture("dso_network.csv");
    PipelineConfig cfg = load_cfg("academic_e13.cfg");
    ElementSet joined = with_inserts(set, cfg);
    CHECK(joined.size() == 13);
    CHECK(joined.get("e13").status == SwitchStatus::open);
    CHECK_ERRC(with_inserts(joined, cfg), Errc::duplicate_id);
}

TEST_CASE("plain values format with six fractional digits") {
    CHECK(format_fixed6(107.90517657137886) == "107.905177");
    CHECK(format_fixed6(9.0) == "9.000000");
    CHECK(format_fixed6(0.5) == "0.500000");
}

TEST_CASE("path documents expose lengths as fixed-point strings") {
    auto set = load_fixture("dso_network.csv");
    auto cfg = load_cfg("academic.cfg");
    auto paths = enumerate_eps(set, cfg);
    json doc = json::parse(paths_json(paths));
    CHECK(doc["engine"] == "eps");
    REQUIRE(doc["stage_counts"].size() == 1);
    CHECK(doc["stage_counts"][0]["stage"] == "paths");
    CHECK(doc["stage_counts"][0]["count"] == 4);
    REQUIRE(doc["customers"].contains("e10"));
    const json& first = doc["customers"]["e10"][0];
    CHECK(first["path"] == json::array({"e10", "e3", "e1"}));
    REQUIRE(first["length"].is_string());
    CHECK(first["length"] == "107.905177");
    CHECK(first["active"] == true);
}

TEST_CASE("reports carry thresholds, findings and the verdict") {
    auto set = load_fixture("dso_network.csv");
    auto cfg = load_cfg("academic.cfg");
    auto paths = enumerate_eps(set, cfg);
    auto report = diagnose(set, paths, cfg);
    json doc = json::parse(report_json(cfg, paths, report));
    CHECK(doc["mode"] == "academic");
    CHECK(doc["thresholds"]["r"] == 20.0);
    CHECK(doc["thresholds"]["l"] == 400.0);
    CHECK_FALSE(doc["thresholds"].contains("n"));
    CHECK(doc["engine"] == "eps");
    REQUIRE(doc["findings"].size() == 1);
    CHECK(doc["findings"][0]["kind"] == "MultipleActivePaths");
    CHECK(doc["findings"][0]["subjects"] == json::array({"e12"}));
    CHECK(doc["findings"][0]["step"].is_null());
    CHECK(doc["findings"][0]["detail"] == "2 active paths");
    CHECK(doc["passed"] == false);
}

TEST_CASE("trace documents record each step's additions and removals") {
    PipelineConfig cfg = load_cfg("casestudy.cfg");
    auto [net, traces] = apply_pipeline(load_fixture("casestudy_micro.csv"), cfg);
    json doc = json::parse(trace_json(traces));
    REQUIRE(doc.size() == 5);
    CHECK(doc[0]["step"] == "snap_overhead");
    REQUIRE(doc[0]["replaced"].size() == 1);
    CHECK(doc[0]["replaced"][0]["id"] == "o1");
    CHECK_FALSE(doc[0]["replaced"][0].contains("status"));
    CHECK(doc[4]["step"] == "locate_switches");
    CHECK(doc[4]["added"][0]["id"] == "os_1");
    CHECK(doc[4]["added"][0]["status"] == "open");
    CHECK(doc[1]["removed"] == json::array());
}

TEST_CASE("run bundles capture a replayable record") {
    auto dir = fresh_dir("gridpaths_bundle");
    auto set = load_fixture("dso_network.csv");
    auto cfg = load_cfg("academic_e13.cfg");

    RunBundle bundle;
    bundle.dir = dir;
    bundle.input = with_inserts(set, cfg);
    bundle.config_text = "mode = academic\n";
    bundle.cfg = cfg;
    bundle.transformed = bundle.input;
    bundle.paths = enumerate_eps(bundle.input, cfg);
    bundle.report = diagnose(bundle.input, bundle.paths, cfg);
    write_run_bundle(bundle);

    for (const char* name : {"input_elements.csv", "config.cfg", "transformed_elements.csv",
                             "trace.json", "paths.json", "report.json", "render.dot",
                             "render.svg", "run.json"})
        CHECK(std::filesystem::exists(dir / name));

    CHECK(load_elements(dir / "input_elements.csv") == bundle.input);

    std::ifstream run_in(dir / "run.json");
    json run = json::parse(run_in);
    CHECK(run.contains("timestamp_unix"));
    CHECK(run["passed"] == true);

    // Every artifact except run.json is byte-deterministic.
    auto dir2 = fresh_dir("gridpaths_bundle2");
    bundle.dir = dir2;
    write_run_bundle(bundle);
    for (const char* name : {"report.json", "paths.json", "render.svg", "render.dot"}) {
        std::ifstream a(dir / name), b(dir2 / name);
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        CHECK(sa.str() == sb.str());
    }
}
