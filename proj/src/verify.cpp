#include "gsrs/verify.hpp"

#include "gsrs/cutout.hpp"
#include "gsrs/region.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gsrs {

namespace {

// target minus the covers; pieces whose closure misses the unit disk are set
// aside as soon as they appear.
CoverageReport cover(const std::vector<Cell>& targets, const std::vector<Cell>& covers) {
    CoverageReport report;
    std::vector<Cell> live;
    auto sort_piece = [&](Cell c) {
        if (disk_separation(c) == DiskRelation::Outside) {
            report.residuals.push_back({std::move(c), DiskRelation::Outside});
        } else {
            live.push_back(std::move(c));
        }
    };
    for (const Cell& t : targets) sort_piece(t);
    for (const Cell& c : covers) {
        if (live.empty()) break;
        std::vector<Cell> pieces = std::move(live);
        live.clear();
        for (const Cell& p : pieces) {
            for (Cell& rest : subtract_cover(p, std::span<const Cell>(&c, 1))) sort_piece(std::move(rest));
        }
    }
    report.covered = live.empty();
    for (Cell& c : live) {
        DiskRelation rel = disk_separation(c);
        report.residuals.push_back({std::move(c), rel});
    }
    return report;
}

std::vector<Cell> cutouts(const std::vector<Cycle>& cycles, const Cell& window) {
    std::vector<Cell> out;
    for (const Cycle& c : cycles) {
        Cell p = cycle_polygon(c);
        if (!intersect(p, window).empty()) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

CoverageReport verify_sector(long n, const std::vector<int>& omit) {
    Cell window = sector_window(n);
    std::vector<Cell> gc = local_gc_cells(n);
    std::vector<Cell> target = subtract_cover(window, gc);
    std::vector<Cycle> cycles;
    for (const auto& inst : selection(n, omit)) cycles.push_back(expand_generators(inst));
    CoverageReport report = cover(target, cutouts(cycles, window));
    report.sector = n;
    report.instances_used = cycles.size();
    return report;
}

std::vector<Cycle> prefix_cover_cycles() {
    std::vector<Cycle> out;
    for (const auto& inst : prefix_selection()) out.push_back(expand_generators(inst));
    out.push_back(Cycle({GaussianInt(1, 0), GaussianInt(0, -1), GaussianInt(-1, 0), GaussianInt(0, 1)}));
    return out;
}

CoverageReport verify_prefix() {
    Cell window = prefix_window();
    std::vector<Cell> gc = prefix_gc_cells();
    std::vector<Cell> target = subtract_cover(window, gc);
    std::vector<Cycle> cycles = prefix_cover_cycles();
    CoverageReport report = cover(target, cutouts(cycles, window));
    report.sector = 0;
    report.instances_used = cycles.size();
    return report;
}

// ---------------------------------------------------------------------------
// Witness tiles

namespace {

Rational min_pike_norm(long n) {
    Rational best = vertex(1, n).norm2();
    for (int i = 2; i <= 10; ++i) best = std::min(best, vertex(i, n).norm2());
    return best;
}

}  // namespace

long last_relevant_sector(const Rational& radius) {
    // Pikes from n - 2 on reach below slope 1/(n-1); none of them may have a
    // vertex in the disk. Pike minima increase with n, checked over a
    // look-ahead of ten pikes.
    const Rational r2 = radius * radius;
    long n = 8;
    while (true) {
        bool clear = true;
        for (long k = n - 2; k < n + 8 && clear; ++k) clear = min_pike_norm(k) > r2;
        if (clear) return n;
        ++n;
    }
}

std::vector<Cell> gc_cells_in_box(const Rational& radius) {
    if (radius <= 0 || radius >= 1) throw std::invalid_argument("box radius must be in (0, 1)");
    const Cell box = Cell::box(-radius, radius, -radius, radius);
    std::vector<Cell> upper;
    auto keep = [&](const Cell& c) {
        Cell k = intersect(c, box);
        if (!k.empty()) upper.push_back(std::move(k));
    };
    for (const Cell& c : prefix_gc_cells()) keep(c);
    const long last = last_relevant_sector(radius);
    for (long n = 8; n < last; ++n) {
        for (const Cell& c : local_gc_cells(n)) keep(c);
    }
    // Below slope 1/(last-1) the chain stays outside the box's disk, so by
    // star-shapedness the wedge (with the origin and the real axis) lies in G_C.
    std::vector<HalfPlane> wedge{*HalfPlane::make(0, 1, 0, false), *HalfPlane::make(1, -(last - 1), 0, false)};
    std::sort(wedge.begin(), wedge.end());
    Cell w = intersect_halfplanes(wedge, box);
    if (!w.empty()) upper.push_back(std::move(w));

    std::vector<Cell> out = upper;
    const HalfPlane below = *HalfPlane::make(0, -1, 0, true);
    for (const Cell& c : upper) {
        Cell r = intersect_halfplanes(std::span<const HalfPlane>(&below, 1), c.reflected());
        if (!r.empty()) out.push_back(std::move(r));
    }
    return out;
}

TileReport flood_fill_tiles(const Rational& target_radius, std::size_t budget) {
    if (target_radius <= 0 || target_radius >= 1) throw std::invalid_argument("target radius must be in (0, 1)");
    const Rational r2 = target_radius * target_radius;
    Rational box = target_radius;
    TileReport report;
    std::vector<Cell> uncovered;
    for (Cell& c : gc_cells_in_box(box)) {
        if (disk_separation(c, r2) != DiskRelation::Outside) uncovered.push_back(std::move(c));
    }
    bool all_finite = true;
    while (!uncovered.empty() && report.tiles.size() < budget) {
        QComplex probe = uncovered.front().sample_point();
        auto graph = witness_graph(probe);
        if (!graph) {
            report.verdict = TileReport::Verdict::Failed;
            report.uncovered = std::move(uncovered);
            return report;
        }
        Tile tile;
        tile.cell = witness_polyhedron(*graph);
        tile.parameter = probe;
        tile.witnesses = graph->vertices.size();
        tile.finite = decide_finiteness(probe).verdict == Finiteness::Verdict::Finite;
        all_finite = all_finite && tile.finite;
        if (!tile.cell.contains(probe)) throw std::logic_error("witness polyhedron misses its own parameter");
        std::vector<Cell> next;
        for (const Cell& c : uncovered) {
            for (Cell& rest : subtract_cover(c, std::span<const Cell>(&tile.cell, 1))) {
                if (disk_separation(rest, r2) != DiskRelation::Outside) next.push_back(std::move(rest));
            }
        }
        uncovered = std::move(next);
        report.tiles.push_back(std::move(tile));
    }
    if (!uncovered.empty()) {
        report.verdict = TileReport::Verdict::Budget;
    } else {
        report.verdict = all_finite ? TileReport::Verdict::Covered : TileReport::Verdict::Failed;
    }
    report.uncovered = std::move(uncovered);
    return report;
}

// ---------------------------------------------------------------------------
// Critical points

namespace {

void require_sector(long n, const QComplex& r) {
    if (!(sgn(r.im) > 0 && r.im * (n - 1) <= r.re)) throw std::invalid_argument("r must satisfy 0 < y(n-1) <= x");
}

Integer abs_sum(const GaussianInt& z) { return abs(z.re) + abs(z.im); }

}  // namespace

std::vector<GaussianInt> critical_set(long n) {
    std::vector<GaussianInt> out;
    for (long a = -n; a <= n; ++a) {
        for (long b = -n; b <= n; ++b) {
            long s = std::labs(a) + std::labs(b);
            if (s > n) continue;
            if ((a <= 0 || b <= 0) && s >= n) continue;
            out.emplace_back(a, b);
        }
    }
    return out;
}

bool critical_orbit_check(long n, const QComplex& r) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    require_sector(n, r);
    if (r.norm2() > 1) throw std::invalid_argument("|r| must be at most 1");
    const std::size_t m = static_cast<std::size_t>(n * n - (n + 1) / 2);
    for (const auto& z : critical_set(n)) {
        auto result = orbit(r, z, m);
        if (!std::holds_alternative<ReachesZero>(result)) return false;
    }
    return true;
}

GaussianInt predicted_double_step(const GaussianInt& z) {
    const Integer& a = z.re;
    const Integer& b = z.im;
    if (a > 1 && b >= 0) return {-1, 1};
    if (a == 1 && b >= 0) return {-1, 0};
    if (a <= 0 && b > 1) return {-1, -1};
    if (a <= 0 && b == 1) return {0, -1};
    if (a < 0 && b <= 0) return {1, -1};
    if (a >= 0 && b < 0) return {1, 1};
    throw std::invalid_argument("no displacement rule for z = 0");
}

bool step_rule_check(long n, const QComplex& r, const GaussianInt& z) {
    require_sector(n, r);
    if (r.norm2() != 1) throw std::invalid_argument("|r| must be 1");
    Integer s = abs_sum(z);
    if (s > n || abs(z.re) >= n || abs(z.im) >= n) throw std::invalid_argument("z outside the admissible range");
    if ((z.re < 0 || z.im < 0) && s >= n) throw std::invalid_argument("z outside the admissible range");
    GaussianInt d = predicted_double_step(z);
    Gsrs g(r);
    return g(g(z)) - z == d;
}

bool rotation_cycle_check(const GaussianInt& a) {
    const GaussianInt& z = a;
    const QComplex plus_i{Rational(0), Rational(1)};
    const QComplex minus_i{Rational(0), Rational(-1)};
    Cycle c1({z, {z.im, -z.re}, -z, {-z.im, z.re}});
    Cycle c2({z, {-z.im, z.re}, -z, {z.im, -z.re}});
    return c1.is_cycle_of(plus_i) && c2.is_cycle_of(minus_i);
}

}  // namespace gsrs
