#include <doctest.h>

#include "gridpaths/elements.hpp"

#include "support.hpp"

using namespace gridpaths;
using namespace testsup;

TEST_CASE("natural id order compares digit runs by value") {
    CHECK(natural_less("e2", "e10"));
    CHECK(natural_less("e9", "e10"));
    CHECK_FALSE(natural_less("e10", "e2"));
    CHECK(natural_less("e1", "e1x"));
    CHECK(natural_less("cb_b1", "cb_b2"));
    CHECK(natural_less("a2b3", "a2b10"));
    CHECK_FALSE(natural_less("e10", "e10"));
    CHECK(natural_less("os_1", "os_2"));
}

TEST_CASE("element set keeps natural order and unique ids") {
    ElementSet set;
    set.add(pt("e10", ElementType::customer, 0, 0));
    set.add(pt("e2", ElementType::pole, 1, 1));
    set.add(pt("e1", ElementType::cabinet, 2, 2));
    CHECK(set.ids() == std::vector<std::string>{"e1", "e2", "e10"});
    CHECK_ERRC(set.add(pt("e2", ElementType::pole, 3, 3)), Errc::duplicate_id);
    CHECK_ERRC(set.get("zz"), Errc::unknown_element);
    CHECK_ERRC(set.remove("zz"), Errc::unknown_element);
}

TEST_CASE("switch status is mandatory for plain switches and implied for typed ones") {
    CHECK_ERRC(make_element("s", ElementType::switch_, {{0, 0}}, std::nullopt),
               Errc::missing_status);
    Element open = make_element("o", ElementType::open_switch, {{0, 0}});
    CHECK(open.status == SwitchStatus::open);
    Element closed = make_element("c", ElementType::close_switch, {{0, 0}});
    CHECK(closed.status == SwitchStatus::closed);
    CHECK_ERRC(make_element("l", ElementType::line, {{0, 0}}, SwitchStatus::open),
               Errc::parse_error);
    CHECK_ERRC(make_element("l", ElementType::line, {}), Errc::parse_error);
}

TEST_CASE("subset selects one type from the fixture") {
    ElementSet dso = load_fixture("dso_network.csv");
    CHECK(subset(dso, ElementType::transformer).size() == 2);
    CHECK(subset(dso, ElementType::line).size() == 6);
    CHECK(subset(dso, ElementType::switch_).size() == 1);
    CHECK(subset(dso, ElementType::customer).size() == 3);
    CHECK(subset(dso, ElementType::pole).empty());
}

TEST_CASE("dist is the minimum over all coordinate pairs") {
    ElementSet dso = load_fixture("dso_network.csv");
    CHECK(dist(dso.get("e1"), dso.get("e3")) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(dist(dso.get("e10"), dso.get("e3")) ==
          doctest::Approx(9.899494936611665).epsilon(1e-12));
    CHECK(dist(dso.get("e3"), dso.get("e1")) == dist(dso.get("e1"), dso.get("e3")));
}

TEST_CASE("internal length sums consecutive own segments") {
    ElementSet dso = load_fixture("dso_network.csv");
    CHECK(internal_length(dso.get("e3")) == doctest::Approx(88.0056816347672).epsilon(1e-12));
    CHECK(internal_length(dso.get("e10")) == 0.0);
    Element zigzag = make_element("z", ElementType::line, {{0, 0}, {3, 4}, {3, 0}});
    CHECK(internal_length(zigzag) == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("closest picks the minimum distance candidate, ties to the smaller id") {
    ElementSet dso = load_fixture("dso_network.csv");
    ElementSet lines = subset(dso, ElementType::line);
    CHECK(closest(dso.get("e10"), lines).id == "e3");
    CHECK(closest(dso.get("e12"), lines).id == "e6");

    ElementSet ties;
    ties.add(pt("p", ElementType::customer, 0, 0));
    ties.add(pt("q10", ElementType::pole, 1, 0));
    ties.add(pt("q2", ElementType::pole, -1, 0));
    CHECK(closest(ties.get("p"), ties).id == "q2");

    ElementSet lonely;
    lonely.add(pt("p", ElementType::customer, 0, 0));
    CHECK_ERRC(closest(lonely.get("p"), lonely), Errc::empty_candidate_set);
    CHECK_ERRC(closest(dso.get("e1"), ElementSet{}), Errc::empty_candidate_set);
}

TEST_CASE("length_path adds hop distances and internal lengths up to the last hop") {
    ElementSet dso = load_fixture("dso_network.csv");
    CHECK(length_path(path_of({"e10", "e3", "e1"}), dso) ==
          doctest::Approx(107.90517657137886).epsilon(1e-12));
    CHECK(length_path(path_of({"e11", "e4", "e2"}), dso) ==
          doctest::Approx(117.92493562613588).epsilon(1e-12));
    CHECK(length_path(path_of({"e10"}), dso) == 0.0);
    CHECK_ERRC(length_path(path_of({"e10", "zz"}), dso), Errc::unknown_element);
}

TEST_CASE("path validity requires customer start, transformer end and no repeats") {
    ElementSet dso = load_fixture("dso_network.csv");
    CHECK(valid_path(path_of({"e10", "e3", "e1"}), dso));
    CHECK_FALSE(valid_path(path_of({"e3", "e1"}), dso));
    CHECK_FALSE(valid_path(path_of({"e10", "e3"}), dso));
    CHECK_FALSE(valid_path(path_of({"e10", "e3", "e3", "e1"}), dso));
    CHECK_FALSE(valid_path(path_of({"e10"}), dso));
    CHECK_FALSE(valid_path(path_of({"e10", "zz", "e1"}), dso));
}
