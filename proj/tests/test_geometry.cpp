#include "doctest.h"
#include "gsrs/geometry.hpp"

#include <random>

using namespace gsrs;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }
QComplex pt(long a, long b, long c, long d) { return {q(a, b), q(c, d)}; }
HalfPlane hp(long a, long b, long c, bool strict) { return *HalfPlane::make(a, b, c, strict); }

Cell half_open_square() {
    std::vector<HalfPlane> hs{hp(1, 0, 0, false), hp(-1, 0, 1, true), hp(0, 1, 0, false), hp(0, -1, 1, true)};
    return intersect_halfplanes(hs);
}

QComplex random_point(std::mt19937_64& rng, long lo, long hi, long den) {
    std::uniform_int_distribution<long> d(lo * den, hi * den);
    return {q(d(rng), den), q(d(rng), den)};
}

HalfPlane random_halfplane(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> c(-4, 4);
    std::bernoulli_distribution s(0.5);
    while (true) {
        long a = c(rng), b = c(rng);
        if (a == 0 && b == 0) continue;
        return hp(a, b, c(rng), s(rng));
    }
}

Cell random_cell(std::mt19937_64& rng, int k) {
    Cell frame = Cell::box(-2, 2, -2, 2);
    while (true) {
        std::vector<HalfPlane> hs;
        for (int i = 0; i < k; ++i) hs.push_back(random_halfplane(rng));
        Cell c = intersect_halfplanes(hs, frame);
        if (!c.empty()) return c;
    }
}

}  // namespace

TEST_CASE("half-plane normalization") {
    auto h = HalfPlane::make(q(-3), q(6), q(9), true);
    REQUIRE(h);
    CHECK(h->a == -1);
    CHECK(h->b == 2);
    CHECK(h->c == 3);
    CHECK_FALSE(HalfPlane::make(0, 0, 1, false));
    CHECK(HalfPlane::constant_holds(0, false));
    CHECK_FALSE(HalfPlane::constant_holds(0, true));
}

TEST_CASE("intersect_halfplanes examples") {
    std::vector<HalfPlane> point{hp(1, 0, 0, false), hp(-1, 0, 0, false), hp(0, 1, 0, false), hp(0, -1, 0, false)};
    Cell c = intersect_halfplanes(point);
    CHECK(c.kind() == Cell::Kind::Point);
    CHECK(c == Cell::point({0, 0}));

    std::vector<HalfPlane> bad{hp(1, 0, 0, true), hp(-1, 0, 0, false)};
    CHECK(intersect_halfplanes(bad).empty());
}

TEST_CASE("cell_contains honors strictness") {
    Cell unit = Cell::box(0, 1, 0, 1);
    CHECK(cell_contains(unit, {0, 0}));
    Cell ho = half_open_square();
    CHECK_FALSE(cell_contains(ho, {1, 0}));
    CHECK(cell_contains(ho, {0, 0}));
    CHECK(ho.vertex_member() == std::vector<bool>{true, false, false, false});
    CHECK(ho.edge_solid() == std::vector<bool>{true, false, false, true});
}

TEST_CASE("from_polygon canonicalizes orientation, start and collinear points") {
    // Clockwise, starting elsewhere, with a midpoint on a solid edge.
    Cell a = Cell::from_polygon({{1, 1}, {1, 0}, {0, 0}, {0, 1}}, {true, true, true, false},
                                {false, true, true, false});
    Cell b = Cell::from_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {true, true, false, true},
                                {true, true, false, false});
    CHECK(a == b);
    Cell c = Cell::from_polygon({{0, 0}, pt(1, 2, 0, 1), {1, 0}, {1, 1}, {0, 1}}, {true, true, true, false, true},
                                {true, true, true, false, false});
    CHECK(c == b);
    CHECK_THROWS_AS(Cell::from_polygon({{0, 0}, {1, 0}, {0, 1}}, {false, true, true}, {true, true, true}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Cell::from_polygon({{0, 0}, {1, 0}}, {false, false}, {true, true}), std::invalid_argument);
}

TEST_CASE("lone excluded vertex gets a supporting strict line") {
    Cell c = Cell::from_polygon({{0, 0}, {1, 0}, {0, 1}}, {true, true, true}, {false, true, true});
    CHECK_FALSE(c.contains({0, 0}));
    CHECK(c.contains(pt(1, 100, 0, 1)));
    CHECK(c.contains(pt(0, 1, 1, 100)));
    Cell again = intersect_halfplanes(c.constraints());
    CHECK(again == c);
}

TEST_CASE("subtract_cover examples") {
    Cell sq = Cell::box(0, 1, 0, 1);
    std::vector<Cell> self{sq};
    CHECK(subtract_cover(sq, self).empty());

    std::vector<HalfPlane> left{hp(-2, 0, 1, true)};
    std::vector<Cell> covers{intersect_halfplanes(left)};
    auto res = subtract_cover(sq, covers);
    REQUIRE(res.size() == 1);
    CHECK(res[0] == Cell::box(q(1, 2), 1, 0, 1));
}

TEST_CASE("disk_separation examples") {
    CHECK(disk_separation(Cell::point({2, 0})) == DiskRelation::Outside);
    CHECK(disk_separation(Cell::point(pt(1, 2, 1, 2))) == DiskRelation::Inside);
    CHECK(disk_separation(Cell::box(0, 1, 0, 1)) == DiskRelation::Meets);
    CHECK(disk_separation(Cell::box(q(1, 4), q(1, 2), q(1, 4), q(1, 2))) == DiskRelation::Inside);
    CHECK(disk_separation(Cell::box(-2, 2, -2, 2)) == DiskRelation::Meets);
    CHECK(squared_distance_to_origin(Cell::box(-1, 1, -1, 1)) == 0);
}

TEST_CASE("subtract_cover residuals are exact and disjoint") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 10; ++round) {
        Cell target = random_cell(rng, 3);
        std::vector<Cell> covers;
        for (int i = 0; i < 3; ++i) covers.push_back(random_cell(rng, 3));
        auto res = subtract_cover(target, covers);
        for (const auto& r : res) CHECK_FALSE(r.empty());
        for (int t = 0; t < 1000; ++t) {
            // A coarse grid hits faces and vertices of the random cells often.
            QComplex p = random_point(rng, -2, 2, t % 2 ? 4 : 60);
            bool expected = target.contains(p);
            for (const auto& c : covers) expected = expected && !c.contains(p);
            int hits = 0;
            for (const auto& r : res) hits += r.contains(p);
            CHECK(hits <= 1);
            CHECK((hits == 1) == expected);
        }
    }
}

TEST_CASE("canonicalization is idempotent and complements partition") {
    std::mt19937_64 rng(32);
    for (int round = 0; round < 100; ++round) {
        Cell c = random_cell(rng, 4);
        CHECK(intersect_halfplanes(c.constraints(), Cell::box(-2, 2, -2, 2)) == c);
        CHECK(Cell::from_polygon(c.vertices(), c.kind() == Cell::Kind::Segment ? std::vector<bool>{true, true}
                                                                                 : c.edge_solid(),
                                 c.vertex_member()) == c);
        CHECK(c.contains(c.sample_point()));
        CHECK(c.reflected().reflected() == c);
        HalfPlane h = random_halfplane(rng);
        for (int t = 0; t < 20; ++t) {
            QComplex p = random_point(rng, -2, 2, 4);
            CHECK(h.contains(p) != h.complement().contains(p));
            CHECK(c.contains(p) == c.reflected().contains(p.conj()));
        }
    }
}
