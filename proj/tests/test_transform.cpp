#include <doctest.h>

#include "gridpaths/transform.hpp"

#include "gridpaths/graph.hpp"
#include "gridpaths/io.hpp"
#include "support.hpp"

using namespace gridpaths;
using namespace testsup;

namespace {

ElementSet micro() { return load_fixture("casestudy_micro.csv"); }

}  // namespace

TEST_CASE("overhead snapping moves only the loose extremities") {
    auto [out, trace] = snap_overhead(micro(), 1.0);
    REQUIRE(trace.replaced.size() == 1);
    CHECK(trace.added.empty());
    CHECK(trace.removed.empty());
    CHECK(trace.replaced[0].id == "o1");
    CHECK(out.get("o1").coords == std::vector<Coord>{{-0.1, 0.3}, {10.1, 0.3}});
    CHECK(out.get("o2").coords == micro().get("o2").coords);
    CHECK(out.get("o3").coords == micro().get("o3").coords);
    CHECK(out.get("o4").coords == micro().get("o4").coords);
    CHECK(out.size() == micro().size());
}

TEST_CASE("already coincident extremities are left untouched") {
    ElementSet set;
    set.add(seg("oa", ElementType::overhead, 0, 0, 5, 0));
    set.add(seg("ob", ElementType::overhead, 5, 0, 10, 0));
    auto [out, trace] = snap_overhead(set, 1.0);
    CHECK(trace.replaced.empty());
    CHECK(out == set);
}

TEST_CASE("stitching splices cabinet coordinates onto the line ends") {
    auto [out, trace] = stitch_underground_to_cabinets(micro(), 2.0);
    CHECK(trace.removed.empty());
    REQUIRE(trace.replaced.size() == 1);
    CHECK(trace.replaced[0].id == "u0");
    CHECK(out.get("u0").coords ==
          std::vector<Coord>{{4.8, 7.9}, {4.8, 8.0}, {4.8, 9.3}, {4.8, 9.4}});
}

TEST_CASE("stitching drops lines without two distinct nearby cabinets") {
    ElementSet set;
    set.add(pt("k1", ElementType::cabinet, 0, 0));
    set.add(seg("u1", ElementType::underground, 0.5, 0, 1.5, 0));  // both ends pick k1
    set.add(seg("u2", ElementType::underground, 50, 50, 60, 60));  // nothing near
    auto [out, trace] = stitch_underground_to_cabinets(set, 2.0);
    CHECK(trace.removed == std::vector<std::string>{"u1", "u2"});
    CHECK_FALSE(out.contains("u1"));
    CHECK_FALSE(out.contains("u2"));
    CHECK(out.contains("k1"));

    // No cabinets at all: every underground line goes away.
    ElementSet bare;
    bare.add(seg("u1", ElementType::underground, 0, 0, 1, 0));
    bare.add(pt("t1", ElementType::transformer, 5, 5));
    auto [out2, trace2] = stitch_underground_to_cabinets(bare, 2.0);
    CHECK(trace2.removed == std::vector<std::string>{"u1"});
    CHECK(subset(out2, ElementType::underground).empty());
}

TEST_CASE("board linking adds one overhead to the closest pole in range") {
    auto [out, trace] = link_boards_to_poles(micro(), 2.0);
    REQUIRE(trace.added.size() == 1);
    const Element& link = trace.added[0];
    CHECK(link.id == "cb_b1");
    CHECK(link.type == ElementType::overhead);
    CHECK(link.coords == std::vector<Coord>{{0, -0.75}, {-0.1, 0.3}});
    CHECK(out.contains("cb_b1"));

    // Out of range: nothing is added.
    ElementSet far;
    far.add(pt("b1", ElementType::connection_board, 0, 0));
    far.add(pt("p1", ElementType::pole, 10, 10));
    auto [out2, trace2] = link_boards_to_poles(far, 2.0);
    CHECK(trace2.added.empty());
    CHECK(out2 == far);
}

TEST_CASE("customers attach underground to cabinets or overhead to poles") {
    auto [out, trace] = connect_customers(micro());
    REQUIRE(trace.added.size() == 2);
    CHECK(trace.added[0].id == "cus_c1");
    CHECK(trace.added[0].type == ElementType::overhead);
    CHECK(trace.added[0].coords == std::vector<Coord>{{13, 0.5}, {12, 0}});
    CHECK(trace.added[1].id == "cus_c2");
    CHECK(trace.added[1].type == ElementType::underground);
    CHECK(trace.added[1].coords == std::vector<Coord>{{4.8, 10.0}, {4.8, 9.4}});

    ElementSet no_targets;
    no_targets.add(pt("c1", ElementType::customer, 0, 0));
    no_targets.add(pt("t1", ElementType::transformer, 5, 5));
    CHECK_ERRC(connect_customers(no_targets), Errc::no_attachment_target);
}

TEST_CASE("switch placement breaks the ring and guards the cabinets") {
    // Run the first four steps, then locate switches on the result.
    PipelineConfig cfg = load_cfg("casestudy.cfg");
    PipelineConfig four = cfg;
    four.steps.assign(cfg.steps.begin(), cfg.steps.end() - 1);
    auto [before, traces] = apply_pipeline(micro(), four);
    REQUIRE(before.size() == 18);

    auto [out, trace] = locate_switches(before, cfg.r);
    REQUIRE(trace.added.size() == 2);
    CHECK(trace.added[0].id == "os_1");
    CHECK(trace.added[0].type == ElementType::open_switch);
    CHECK(trace.added[0].coords == std::vector<Coord>{{5.35, 7.7}});
    CHECK(trace.added[1].id == "cs_k0");
    CHECK(trace.added[1].type == ElementType::close_switch);
    CHECK(trace.added[1].coords == std::vector<Coord>{{4.8, 7.9}});
    // k1's close switch is skipped: s1 already sits on that coordinate.
    CHECK_FALSE(out.contains("cs_k1"));
    CHECK(out.size() == 20);
}

TEST_CASE("switch placement finds the corridor between the feeders") {
    ElementSet fixture = load_fixture("dso_network.csv");
    fixture.remove("e9");
    auto [out, trace] = locate_switches(fixture, 20.0);
    REQUIRE(trace.added.size() == 1);
    CHECK(trace.added[0].id == "os_1");
    CHECK(trace.added[0].type == ElementType::open_switch);
    CHECK(trace.added[0].coords == std::vector<Coord>{{301.5, 190.0}});
    CHECK(out.size() == 12);
}

TEST_CASE("full pipeline reproduces the hand-derived final network") {
    PipelineConfig cfg = load_cfg("casestudy.cfg");
    auto [out, traces] = apply_pipeline(micro(), cfg);
    REQUIRE(traces.size() == 5);
    CHECK(out.size() == 20);

    Adjacency adj = Adjacency::build(out, cfg.r);
    auto expected = edge_list({{"b1", "cb_b1"},  {"b1", "t1"},    {"c1", "cus_c1"},
                               {"c2", "cus_c2"}, {"cb_b1", "p2"}, {"cs_k0", "k0"},
                               {"cs_k0", "o3"},  {"cs_k0", "os_1"}, {"cs_k0", "u0"},
                               {"cus_c1", "p1"}, {"cus_c2", "k1"}, {"k1", "s1"},
                               {"k1", "u0"},     {"o1", "p2"},    {"o1", "p3"},
                               {"o2", "os_1"},   {"o2", "p3"},    {"o3", "p2"},
                               {"o4", "p1"},     {"o4", "p3"}});
    CHECK(adj.edges() == expected);
}

TEST_CASE("traces replay to the exact pipeline output") {
    PipelineConfig cfg = load_cfg("casestudy.cfg");
    auto [out, traces] = apply_pipeline(micro(), cfg);
    CHECK(replay(micro(), traces) == out);
}

TEST_CASE("unknown steps are rejected") {
    PipelineConfig cfg;
    cfg.steps = {"mystery_step"};
    CHECK_ERRC(apply_pipeline(micro(), cfg), Errc::unknown_step);
    CHECK(is_step_name("snap_overhead"));
    CHECK_FALSE(is_step_name("mystery_step"));
}

TEST_CASE("step domains name the element types each step works on") {
    auto has = [](const std::vector<ElementType>& v, ElementType t) {
        return std::find(v.begin(), v.end(), t) != v.end();
    };
    CHECK(has(step_domain("snap_overhead"), ElementType::overhead));
    CHECK(has(step_domain("stitch_underground_to_cabinets"), ElementType::underground));
    CHECK(has(step_domain("stitch_underground_to_cabinets"), ElementType::cabinet));
    CHECK(has(step_domain("connect_customers"), ElementType::customer));
    CHECK(has(step_domain("locate_switches"), ElementType::open_switch));
    CHECK(step_domain("mystery_step").empty());
}
