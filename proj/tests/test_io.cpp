#include <doctest.h>

#include <sstream>

#include "simpmap/engine.hpp"
#include "simpmap/io.hpp"
#include "support.hpp"

using namespace simpmap;

namespace {

filtration parse(const std::string& text) {
    std::istringstream in(text);
    return parse_filtration(in);
}

std::string serialize(const filtration& f) {
    std::ostringstream out;
    write_filtration(out, f);
    return out.str();
}

}  // namespace

TEST_CASE("filtration files round trip") {
    const std::string text =
        "# simpfilt v1\n"
        "t 1\n"
        "i 0\n"
        "i 1\n"
        "t 2.5\n"
        "i 0 1\n"
        "c 0 1\n";
    const auto f = parse(text);
    REQUIRE(f.ops.size() == 4);
    CHECK(f.ops[0].grade == 1.0);
    CHECK(f.ops[2].grade == 2.5);
    CHECK(f.ops[3].is_collapse());
    CHECK(f.ops[3].u == 0);
    CHECK(f.ops[3].v == 1);
    CHECK(serialize(f) == text);
    CHECK(serialize(parse(serialize(f))) == serialize(f));
}

TEST_CASE("grades auto-increment when no t lines appear") {
    const auto f = parse("# simpfilt v1\ni 0\ni 1\nc 0 1\n");
    REQUIRE(f.ops.size() == 3);
    CHECK(f.ops[0].grade == 1.0);
    CHECK(f.ops[1].grade == 2.0);
    CHECK(f.ops[2].grade == 3.0);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse("nonsense\n"), parse_error);

    try {
        parse("# simpfilt v1\nt 2\ni 0\nt 1\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 4);  // the decreasing grade line
    }

    try {
        parse("# simpfilt v1\ni 0 0\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }

    CHECK_THROWS_AS(parse("# simpfilt v1\nc 1 1\n"), parse_error);
    CHECK_THROWS_AS(parse("# simpfilt v1\nx 0\n"), parse_error);
    CHECK_THROWS_AS(parse("# simpfilt v1\ni -3\n"), parse_error);
}

TEST_CASE("comments and blank lines are allowed after the header") {
    const auto f = parse("# simpfilt v1\n\n# a remark\nt 1\ni 4\n");
    REQUIRE(f.ops.size() == 1);
    CHECK(f.ops[0].sigma == simplex{4});
}

TEST_CASE("diagram files round trip with the inf token") {
    persistence_diagram d;
    d.add(0, 1.0, infinite_death);
    d.add(1, 0.25, 1.125);
    d.add(0, 1.0, 3.0);

    std::ostringstream out;
    write_diagram(out, d);
    CHECK(out.str() ==
          "0 1 3\n"
          "0 1 inf\n"
          "1 0.25 1.125\n");

    std::istringstream in(out.str());
    const auto back = parse_diagram(in);
    CHECK(back.same_pairs(d));
}

TEST_CASE("diagram files reject malformed rows") {
    std::istringstream bad1("0 1\n");
    CHECK_THROWS_AS(parse_diagram(bad1), parse_error);
    std::istringstream bad2("0 2 1\n");
    CHECK_THROWS_AS(parse_diagram(bad2), parse_error);
    std::istringstream bad3("0 inf inf\n");
    CHECK_THROWS_AS(parse_diagram(bad3), parse_error);
}

TEST_CASE("point files parse uniform rows") {
    std::istringstream in("# two dimensional\n0 0\n1 0\n\n0.5 0.25\n");
    const auto cloud = parse_points(in);
    REQUIRE(cloud.size() == 3);
    CHECK(cloud.points[2][1] == 0.25);

    std::istringstream ragged("0 0\n1\n");
    CHECK_THROWS_AS(parse_points(ragged), parse_error);
}

TEST_CASE("serialized filtrations replay to the same diagram") {
    std::mt19937 rng(3);
    for (int round = 0; round < 5; ++round) {
        auto filt = testsupport::random_mixed_filtration(rng, 60, 9, 3);
        const auto direct = run(filt);
        const auto replayed = run(parse(serialize(filt)));
        CHECK(direct.same_pairs(replayed));
        CHECK(serialize(parse(serialize(filt))) == serialize(filt));
    }
}
