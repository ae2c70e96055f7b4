#pragma once

// Verification campaigns: cutout coverage of the complement of G_C in the
// sectors and the prefix, witness-tile coverage of G_C near the origin, and
// the orbit statements about the critical point 1 and the rotations +-i.

#include "gsrs/dynamics.hpp"
#include "gsrs/families.hpp"
#include "gsrs/geometry.hpp"

#include <cstddef>
#include <vector>

namespace gsrs {

struct Residual {
    Cell cell;
    DiskRelation relation = DiskRelation::Meets;
};

struct CoverageReport {
    long sector = 0;  // 0 for the prefix
    std::size_t instances_used = 0;
    std::vector<Residual> residuals;
    bool covered = false;  // every residual misses the closed unit disk
};

/// Cuts sector_window(n) minus G_C with the cutouts of selection(n, omit).
CoverageReport verify_sector(long n, const std::vector<int>& omit = {});

/// Instances used for the prefix: prefix_selection() plus the rotation cycle
/// of (0, 1), whose cutout is the point i.
std::vector<Cycle> prefix_cover_cycles();
/// Cuts prefix_window() minus G_C with the cutouts of prefix_cover_cycles().
CoverageReport verify_prefix();

struct Tile {
    Cell cell;
    QComplex parameter;
    bool finite = false;
    std::size_t witnesses = 0;
};

struct TileReport {
    enum class Verdict { Covered, Budget, Failed };
    std::vector<Tile> tiles;
    std::vector<Cell> uncovered;
    Verdict verdict = Verdict::Failed;
};

/// G_C within the box [-R, R]^2, as disjoint cells (0 < R < 1).
std::vector<Cell> gc_cells_in_box(const Rational& radius);
/// The least n >= 8 such that no vertex of pike n - 2 or later lies in the
/// disk of radius R; below slope 1/(n-1) the disk is then inside G_C.
long last_relevant_sector(const Rational& radius);

/// Covers G_C intersected with the closed disk of the given radius by witness
/// polyhedra, probing at the vertex average of the first uncovered cell.
/// Covered requires every tile to be finite and every uncovered remnant to
/// miss the disk.
TileReport flood_fill_tiles(const Rational& target_radius, std::size_t budget);

/// M_n = {|a| + |b| <= n, and |a| + |b| < n when a <= 0 or b <= 0}.
std::vector<GaussianInt> critical_set(long n);

/// Every element of M_n reaches 0 within n^2 - ceil(n/2) steps. Requires
/// 0 < y (n-1) <= x and |r| <= 1; throws std::invalid_argument otherwise.
bool critical_orbit_check(long n, const QComplex& r);

/// The displacement gamma_r^2(z) - z predicted for z = (a, b) != 0.
GaussianInt predicted_double_step(const GaussianInt& z);

/// gamma_r^2(z) - z equals the predicted displacement. Requires |r| = 1,
/// 0 < y (n-1) <= x, |a| + |b| <= n, max(|a|, |b|) < n,
/// (a < 0 or b < 0) => |a| + |b| < n and z != 0.
bool step_rule_check(long n, const QComplex& r, const GaussianInt& z);

/// (a, b), (b, -a), (-a, -b), (-b, a) is a cycle of (0, 1) and
/// (a, b), (-b, a), (-a, -b), (b, -a) a cycle of (0, -1).
bool rotation_cycle_check(const GaussianInt& a);

}  // namespace gsrs
