#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "dp4/plane.hpp"

using namespace dp4;
using namespace dp4::plane;

TEST_CASE("normalization and incidence are exact") {
    ProjPoint p(Rational(2), Rational(4), Rational(6));
    CHECK(p == ProjPoint(1, 2, 3));
    CHECK(p.str() == "(1 : 2 : 3)");
    ProjPoint q(Rational(0), Rational(-3), Rational(9));
    CHECK(q == ProjPoint(0, 1, -3));
    CHECK_THROWS_AS(ProjPoint(0, 0, 0), InputError);
    ProjLine axis = join(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0));
    CHECK(incident(ProjPoint(5, -7, 0), axis));
    CHECK_FALSE(incident(ProjPoint(1, 1, 1), axis));
}

TEST_CASE("join and meet are dual and reject coincident input") {
    ProjPoint a(1, 2, 3), b(4, 5, 6);
    ProjLine ab = join(a, b);
    CHECK(incident(a, ab));
    CHECK(incident(b, ab));
    CHECK_THROWS_AS(join(a, ProjPoint(2, 4, 6)), InputError);
    ProjLine other = join(a, ProjPoint(0, 0, 1));
    CHECK(meet(ab, other) == a);
}

TEST_CASE("general position checks all ten triples") {
    CHECK(general_position(default_points()));
    std::array<ProjPoint, 5> bad = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0),
                                    ProjPoint(0, 0, 1), ProjPoint(1, 1, 1)};
    CHECK_FALSE(general_position(bad));
    std::array<ProjPoint, 5> dup = {ProjPoint(1, 0, 0), ProjPoint(1, 0, 0), ProjPoint(0, 0, 1),
                                    ProjPoint(1, 1, 1), ProjPoint(1, 2, 3)};
    CHECK_THROWS_AS(general_position(dup), InputError);
}

TEST_CASE("point files parse rationals and enforce arity") {
    std::istringstream good("# comment\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n1/2 2/3 -3\n");
    auto pts = parse_points(good);
    CHECK(pts[4] == ProjPoint(Rational(1, 2), Rational(2, 3), Rational(-3)));
    std::istringstream four("1 0 0\n0 1 0\n0 0 1\n1 1 1\n");
    CHECK_THROWS_AS(parse_points(four), InputError);
    std::istringstream six("1 0 0\n0 1 0\n0 0 1\n1 1 1\n1 2 3\n1 4 5\n");
    CHECK_THROWS_AS(parse_points(six), InputError);
    std::istringstream bad("1 0 0\n0 1 0\n0 0 1\n1 1 1\n1 x 3\n");
    CHECK_THROWS_AS(parse_points(bad), InputError);
    std::istringstream zeroden("1 0 0\n0 1 0\n0 0 1\n1 1 1\n1 1/0 3\n");
    CHECK_THROWS_AS(parse_points(zeroden), InputError);
}

TEST_CASE("strict transform classes from actual incidences") {
    Lattice lat(5);
    auto arr = make_arrangement(default_points());
    CHECK(class_of_line(arr, "e'1") == lat.l() - lat.e(2) - lat.e(3));
    CHECK(class_of_line(arr, "g2") == lat.l() - lat.e(4) - lat.e(2));
    CHECK(class_of_line(arr, "h3") == lat.l() - lat.e(5) - lat.e(3));
    CHECK_THROWS_AS(class_of_line(arr, "q7"), InputError);
}

TEST_CASE("branch classes match their displayed vectors and sum to -3K") {
    Lattice lat(5);
    auto arr = make_arrangement(default_points());
    DivisorClass b1 = branch_class(arr, 1);
    DivisorClass b2 = branch_class(arr, 2);
    DivisorClass b3 = branch_class(arr, 3);
    CHECK(b1 == DivisorClass({3, 1, -3, -1, -1, -1}));
    CHECK(b2 == DivisorClass({3, -1, 1, -3, -1, -1}));
    CHECK(b3 == DivisorClass({3, -3, -1, 1, -1, -1}));
    CHECK(b1 + b2 + b3 == lat.canonical() * -3);
}

TEST_CASE("default configuration certifies normal crossing") {
    auto res = normal_crossing(make_arrangement(default_points()));
    CHECK(res.pass);
    CHECK(res.reason.empty());
    CHECK_FALSE(res.witness.has_value());
}

TEST_CASE("degenerate input is rejected before arrangement construction") {
    std::array<ProjPoint, 5> bad = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(1, 1, 0),
                                    ProjPoint(0, 0, 1), ProjPoint(1, 1, 1)};
    CHECK_THROWS_AS(make_arrangement(bad), InputError);
}

TEST_CASE("a forced concurrency is caught with a re-checkable witness") {
    // Three of the nine joining lines of five points can only concur outside
    // the points if two of them share an endpoint, which general position
    // forbids; so a synthetic arrangement is the way to reach the detector.
    auto arr = make_arrangement(default_points());
    ProjPoint x = meet(arr.lines[3].line, arr.lines[7].line);  // g1 and h2
    arr.lines[0].line = join(x, ProjPoint(1, 5, 7));           // replace e'1
    auto res = normal_crossing(arr);
    CHECK_FALSE(res.pass);
    REQUIRE(res.witness.has_value());
    for (const auto& name : res.witness->line_names) {
        const ProjLine* line = nullptr;
        for (const auto& al : arr.lines)
            if (al.name == name) line = &al.line;
        REQUIRE(line != nullptr);
        CHECK(incident(res.witness->point, *line));
    }
    for (const auto& p : arr.points) CHECK_FALSE(p == res.witness->point);
}

TEST_CASE("coincident lines are reported") {
    auto arr = make_arrangement(default_points());
    arr.lines[1].line = arr.lines[0].line;
    auto res = normal_crossing(arr);
    CHECK_FALSE(res.pass);
    CHECK(res.reason.find("coincide") != std::string::npos);
}

TEST_CASE("fuzz: random integer configurations certify once non-degenerate") {
    std::mt19937_64 rng(987654);
    int nondeg = 0, passed = 0, bad_witness = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto pts = random_points(rng, -50, 50);
        bool gp = false;
        try {
            gp = general_position(pts);
        } catch (const InputError&) {
        }
        if (!gp) continue;
        ++nondeg;
        auto res = normal_crossing(make_arrangement(pts));
        if (res.pass) {
            ++passed;
        } else if (!res.witness.has_value()) {
            ++bad_witness;
        }
    }
    CHECK(nondeg > 0);
    CHECK(bad_witness == 0);
    CHECK(passed * 100 >= nondeg * 95);
}
