#pragma once

// The conjectured region G_C: the vertex formulas P_0 .. P_10, the boundary
// chain with its markup, exact membership, sector windows with an exact cell
// decomposition of G_C inside them, and certified perimeter/area brackets.

#include "gsrs/exact.hpp"
#include "gsrs/geometry.hpp"

#include <string>
#include <vector>

namespace gsrs {

/// P_i(n). Throws std::invalid_argument outside the formula's domain
/// (P_0 is defined for n = 1, 2, 3 only).
QComplex vertex(int i, long n);
QComplex vertex(int i, const Integer& n);

struct ChainVertex {
    QComplex point;
    bool overline = false;  // the vertex belongs to G_C
    int index = 0;          // i of P_i(n)
    long pike = 0;          // n of P_i(n)
};

/// Upper boundary of G_C, clockwise from P_0(1) = (1, 0). edge_solid[k] joins
/// vertices k and k+1.
struct BoundaryChain {
    std::vector<ChainVertex> vertices;
    std::vector<bool> edge_solid;
};

/// The chain from P_0(1) through pike n_pikes (n_pikes >= 7), ending at the
/// first vertex P_1(n_pikes + 1) of the next pike.
BoundaryChain boundary_chain(long n_pikes);

/// Exact membership in G_C. The hint is accepted for interface stability; the
/// governing pike is found from the slope of p.
bool region_contains(const QComplex& p, long n_pikes_hint = 0);

/// {1/n < y/x <= 1/(n-1), x > 0} within the default frame, n >= 7.
Cell sector_window(long n);
/// {y >= 0, y/x > 1/7 or x <= 0} within the default frame: the upper half of
/// the irregular part, without the origin and the positive real axis.
Cell prefix_window();

/// Pairwise disjoint cells whose union is G_C intersected with the window.
std::vector<Cell> local_gc_cells(long n);
std::vector<Cell> prefix_gc_cells();

/// A certified enclosure [low, high] with exactly representable endpoints.
struct Bracket {
    Rational low;
    Rational high;
};

/// Decimal with `digits` fractional digits, rounded down or up.
std::string to_decimal(const Rational& q, int digits, bool round_up);

/// Perimeter of G_C: twice the chain length from the origin onwards, summed
/// through pike n_pikes with interval arithmetic at precision_bits, plus a
/// certified tail bound. n_pikes >= 8.
Bracket perimeter_estimate(long n_pikes, long precision_bits = 256);
/// Area of G_C: twice the triangle fan from the origin over the chain.
Bracket area_estimate(long n_pikes, long precision_bits = 256);

/// Squared length of the chain edge from P_i(n) to P_j(n) as an exact rational.
Rational squared_edge_length(int i, int j, long n);

/// SVG drawing of the chain through pike n_pikes within the view box
/// [x0, x1] x [y0, y1]: solid edges stroked, dotted edges dashed, overlined
/// vertices filled, plain ones hollow. Optional cells are drawn translucent.
std::string boundary_svg(long n_pikes, const std::vector<Cell>& cells = {}, double x0 = 0, double y0 = 0,
                         double x1 = 1, double y1 = 1);

}  // namespace gsrs
