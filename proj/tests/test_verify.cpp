#include "doctest.h"
#include "gsrs/cutout.hpp"
#include "gsrs/region.hpp"
#include "gsrs/verify.hpp"
#include "test_support.hpp"

#include <cstdlib>

using namespace gsrs;
using gsrs::testing::q;
using gsrs::testing::random_point;
using gsrs::testing::random_point_in;

namespace {

// Rational point on the unit circle from the tangent half-angle t.
QComplex circle_point(const Rational& t) {
    Rational d = 1 + t * t;
    return {(1 - t * t) / d, 2 * t / d};
}

bool reaches_zero_within(const QComplex& r, GaussianInt z, long steps) {
    for (long k = 0; k <= steps; ++k) {
        if (z.is_zero()) return true;
        z = gamma(r, z);
    }
    return false;
}

}  // namespace

TEST_CASE("sector 8 is covered and needs family 19") {
    CoverageReport full = verify_sector(8);
    CHECK(full.covered);
    CHECK(full.sector == 8);
    for (const auto& res : full.residuals) CHECK(res.relation == DiskRelation::Outside);
    CoverageReport cut = verify_sector(8, {19});
    CHECK_FALSE(cut.covered);
    bool meets = false;
    for (const auto& res : cut.residuals) meets = meets || res.relation != DiskRelation::Outside;
    CHECK(meets);
}

TEST_CASE("uncovered residuals in sector 8 without family 19 are genuinely outside G_C") {
    CoverageReport cut = verify_sector(8, {19});
    std::mt19937_64 rng(41);
    for (const auto& res : cut.residuals) {
        if (res.relation == DiskRelation::Outside) continue;
        QComplex p = res.cell.sample_point();
        CHECK_FALSE(region_contains(p));
        CHECK(sector_window(8).contains(p));
    }
}

TEST_CASE("G_C cells in a box") {
    std::mt19937_64 rng(43);
    for (Rational radius : {q(1, 4), q(3, 4), q(15, 16)}) {
        auto cells = gc_cells_in_box(radius);
        for (int k = 0; k < 1500; ++k) {
            QComplex p = random_point(rng, -1, 1, 1013);
            if (abs(p.re) > radius || abs(p.im) > radius) continue;
            int count = 0;
            for (const auto& c : cells) count += c.contains(p);
            CHECK(count <= 1);
            CHECK((count == 1) == region_contains(p));
        }
    }
    CHECK(last_relevant_sector(q(1, 2)) == 8);
    CHECK(last_relevant_sector(q(63, 64)) > last_relevant_sector(q(15, 16)));
}

TEST_CASE("flood fill of the disk of radius 1/4") {
    TileReport rep = flood_fill_tiles(q(1, 4), 1000);
    REQUIRE(rep.verdict == TileReport::Verdict::Covered);
    CHECK_FALSE(rep.tiles.empty());
    for (std::size_t i = 0; i < rep.tiles.size(); ++i) {
        const Tile& t = rep.tiles[i];
        CHECK(t.finite);
        CHECK(t.cell.contains(t.parameter));
        CHECK(decide_finiteness(t.parameter).verdict == Finiteness::Verdict::Finite);
        auto g = witness_graph(t.parameter);
        REQUIRE(g);
        CHECK(intersect(t.cell, witness_polyhedron(*g)) == t.cell);
        for (std::size_t j = i + 1; j < rep.tiles.size(); ++j) CHECK(intersect(t.cell, rep.tiles[j].cell).empty());
    }
    for (const auto& c : rep.uncovered) CHECK(disk_separation(c, q(1, 16)) == DiskRelation::Outside);
    std::mt19937_64 rng(47);
    for (int k = 0; k < 500; ++k) {
        QComplex p = random_point(rng, -1, 1, 4099);
        p = {p.re / 4, p.im / 4};
        if (p.norm2() > q(1, 16)) continue;
        int count = 0;
        for (const auto& t : rep.tiles) count += t.cell.contains(p);
        CHECK(count == (region_contains(p) ? 1 : 0));
    }
}

TEST_CASE("critical set") {
    for (long n = 1; n <= 9; ++n) {
        auto m = critical_set(n);
        std::size_t want = 0;
        for (long a = -n; a <= n; ++a) {
            for (long b = -n; b <= n; ++b) {
                long s = std::labs(a) + std::labs(b);
                if (s < n || (s == n && a > 0 && b > 0)) ++want;
            }
        }
        CHECK(m.size() == want);
    }
}

TEST_CASE("critical orbits and the step bound") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> u(1, 1000);
    for (long n = 2; n <= 10; ++n) {
        for (int k = 0; k < 4; ++k) {
            // 0 < y (n - 1) <= x, |r| <= 1
            Rational x = q(u(rng), 1001);
            Rational y = x * q(u(rng), 1000) / (n - 1);
            QComplex r{x, y};
            if (r.norm2() > 1) continue;
            bool all = true;
            long limit = n * n - (n + 1) / 2;
            for (const auto& z : critical_set(n)) all = all && reaches_zero_within(r, z, limit);
            CHECK(critical_orbit_check(n, r) == all);
            // m single steps are not always enough near |r| = 1; twice that is
            bool doubled = true;
            for (const auto& z : critical_set(n)) doubled = doubled && reaches_zero_within(r, z, 2 * limit);
            CHECK(doubled);
        }
    }
    // (0,-2) -> (0,2) -> (1,-1) -> (-1,1) -> (2,0) -> (-1,0) -> (1,1) -> (0,-1) -> (0,1) -> (1,0) -> 0
    QComplex r{q(848, 1001), q(37577, 125125)};
    CHECK_FALSE(critical_orbit_check(3, r));
    CHECK_FALSE(reaches_zero_within(r, {0, -2}, 9));
    CHECK(reaches_zero_within(r, {0, -2}, 10));
    CHECK(critical_orbit_check(3, {q(4, 5), q(1, 5)}));
    CHECK_THROWS_AS(critical_orbit_check(3, {q(1, 2), q(0)}), std::invalid_argument);
    CHECK_THROWS_AS(critical_orbit_check(3, {q(1), q(1, 2)}), std::invalid_argument);
}

TEST_CASE("double step table") {
    CHECK(predicted_double_step({2, 0}) == GaussianInt(-1, 1));
    CHECK(predicted_double_step({1, 3}) == GaussianInt(-1, 0));
    CHECK(predicted_double_step({-1, 2}) == GaussianInt(-1, -1));
    CHECK(predicted_double_step({0, 1}) == GaussianInt(0, -1));
    CHECK(predicted_double_step({-2, -1}) == GaussianInt(1, -1));
    CHECK(predicted_double_step({3, -1}) == GaussianInt(1, 1));
    CHECK_THROWS_AS(predicted_double_step({0, 0}), std::invalid_argument);
}

TEST_CASE("double step rule on the unit circle") {
    for (long n = 5; n <= 8; ++n) {
        for (long j = 1; j <= 3; ++j) {
            QComplex r = circle_point(q(1, 2 * n + j));
            REQUIRE(r.norm2() == 1);
            REQUIRE(r.im * (n - 1) <= r.re);
            for (long a = -n; a <= n; ++a) {
                for (long b = -n; b <= n; ++b) {
                    long s = std::labs(a) + std::labs(b);
                    if ((a == 0 && b == 0) || s > n || std::max(std::labs(a), std::labs(b)) >= n) continue;
                    if ((a < 0 || b < 0) && s == n) continue;
                    GaussianInt z(a, b);
                    GaussianInt twice = gamma(r, gamma(r, z));
                    CHECK(step_rule_check(n, r, z) == (twice - z == predicted_double_step(z)));
                }
            }
        }
    }
    CHECK_THROWS_AS(step_rule_check(5, {q(1, 2), q(1, 10)}, {1, 1}), std::invalid_argument);
}

TEST_CASE("rotation cycles") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<long> d(-50, 50);
    for (int k = 0; k < 100; ++k) {
        GaussianInt a(d(rng), d(rng));
        CHECK(rotation_cycle_check(a));
        QComplex i{q(0), q(1)};
        CHECK(gamma(i, a) == GaussianInt(a.im, -a.re));
    }
}
