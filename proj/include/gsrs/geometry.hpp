#pragma once

// Exact half-open convex cells in the plane.
//
// A cell is an intersection of rational half-planes, each either strict or
// non-strict. Its closure Q is the polygon of the relaxed system; the cell is
// Q minus the faces on which some strict constraint vanishes. It is described
// canonically by Q's vertices (counter-clockwise from the lexicographically
// smallest), a solidity flag per edge and a membership flag per vertex, so two
// cells are equal as point sets iff they compare equal.

#include "gsrs/exact.hpp"

#include <optional>
#include <span>
#include <vector>

namespace gsrs {

/// {(x, y) : a x + b y + c >= 0}, or > 0 when strict. Normalized so that the
/// leading nonzero of (a, b) is +-1.
struct HalfPlane {
    Rational a;
    Rational b;
    Rational c;
    bool strict = false;

    /// Returns nullopt when a = b = 0 (a constant condition, see constant_holds).
    static std::optional<HalfPlane> make(Rational a, Rational b, Rational c, bool strict);
    /// Truth value of the degenerate condition c >= 0 (or c > 0).
    static bool constant_holds(const Rational& c, bool strict);

    Rational eval(const QComplex& p) const { return a * p.re + b * p.im + c; }
    bool contains(const QComplex& p) const;
    /// The closure of the set difference: {f < 0} becomes {-f > 0}.
    HalfPlane complement() const;
    HalfPlane relaxed() const { return {a, b, c, false}; }

    friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
    friend bool operator<(const HalfPlane& x, const HalfPlane& y);
};

class Cell {
public:
    enum class Kind { Empty, Point, Segment, Polygon };

    /// The empty cell.
    Cell() = default;

    /// Builds a cell from a closed polygon (any orientation, any starting
    /// vertex) with edge i joining vertex i to vertex i+1 (cyclically).
    /// Two vertices describe a segment; one vertex a point. Throws
    /// std::invalid_argument for inconsistent markup (e.g. a member vertex
    /// on a non-member edge).
    static Cell from_polygon(std::vector<QComplex> vertices, std::vector<bool> edge_solid,
                             std::vector<bool> vertex_member);

    /// Closed axis-parallel box.
    static Cell box(const Rational& xlo, const Rational& xhi, const Rational& ylo, const Rational& yhi);
    static Cell point(const QComplex& p);

    Kind kind() const { return kind_; }
    bool empty() const { return kind_ == Kind::Empty; }
    const std::vector<QComplex>& vertices() const { return vertices_; }
    const std::vector<bool>& edge_solid() const { return edge_solid_; }
    const std::vector<bool>& vertex_member() const { return vertex_member_; }
    /// Irredundant description regenerated from the canonical form.
    const std::vector<HalfPlane>& constraints() const { return constraints_; }

    bool contains(const QComplex& p) const;
    /// A point of the cell (average of the closure vertices, which lies in the
    /// relative interior of the closure and hence in the cell).
    QComplex sample_point() const;

    Rational min_x() const { return lo_.re; }
    Rational max_x() const { return hi_.re; }
    Rational min_y() const { return lo_.im; }
    Rational max_y() const { return hi_.im; }

    /// Mirror image under complex conjugation.
    Cell reflected() const;

    friend bool operator==(const Cell& x, const Cell& y) {
        return x.kind_ == y.kind_ && x.vertices_ == y.vertices_ && x.edge_solid_ == y.edge_solid_ &&
               x.vertex_member_ == y.vertex_member_;
    }

private:
    friend Cell intersect_halfplanes(std::span<const HalfPlane> hs, const Cell& frame);
    static Cell from_closure(std::vector<QComplex> ring, std::span<const HalfPlane> strict_constraints);
    void finish();

    Kind kind_ = Kind::Empty;
    std::vector<QComplex> vertices_;
    std::vector<bool> edge_solid_;
    std::vector<bool> vertex_member_;
    std::vector<HalfPlane> constraints_;
    QComplex lo_;
    QComplex hi_;
};

/// [-2, 2]^2, which strictly contains the closed unit disk.
const Cell& default_frame();

/// frame intersected with every half-plane in hs.
Cell intersect_halfplanes(std::span<const HalfPlane> hs, const Cell& frame = default_frame());
Cell intersect(const Cell& x, const Cell& y);
bool cell_contains(const Cell& c, const QComplex& p);

/// Pairwise disjoint nonempty cells whose union is target minus the union of
/// covers. Lower-dimensional remnants are kept.
std::vector<Cell> subtract_cover(const Cell& target, std::span<const Cell> covers);

enum class DiskRelation { Inside, Outside, Meets };

/// Position relative to the closed disk |z|^2 <= radius_sq: Outside when the
/// cell misses the disk (its closure may touch the circle at an excluded
/// point), Inside when every closure vertex is strictly inside, Meets otherwise.
DiskRelation disk_separation(const Cell& c, const Rational& radius_sq = Rational(1));

/// Squared distance from the origin to the closure of a nonempty cell.
Rational squared_distance_to_origin(const Cell& c);
/// The point of the closure nearest to the origin.
QComplex nearest_to_origin(const Cell& c);

}  // namespace gsrs
