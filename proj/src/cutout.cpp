#include "gsrs/cutout.hpp"

#include <algorithm>

namespace gsrs {

namespace {

// k <= v < k + 1 where v = a x + b y.
bool floor_band(const Integer& a, const Integer& b, const Integer& k, std::vector<HalfPlane>& out) {
    auto lower = HalfPlane::make(Rational(a), Rational(b), Rational(-k), false);
    auto upper = HalfPlane::make(Rational(-a), Rational(-b), Rational(k + 1), true);
    if (!lower) return HalfPlane::constant_holds(Rational(-k), false) && HalfPlane::constant_holds(Rational(k + 1), true);
    out.push_back(std::move(*lower));
    out.push_back(std::move(*upper));
    return true;
}

Cell solve(std::vector<HalfPlane> hs, bool feasible, const Cell& frame) {
    if (!feasible) return {};
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    return intersect_halfplanes(hs, frame);
}

}  // namespace

bool floor_equation(const GaussianInt& g, const GaussianInt& k, std::vector<HalfPlane>& out) {
    // s g = (x g.re - y g.im) + i (x g.im + y g.re)
    bool ok = floor_band(g.re, -g.im, k.re, out);
    return floor_band(g.im, g.re, k.im, out) && ok;
}

Cell cycle_polygon(const Cycle& pi, const Cell& frame) {
    const auto& e = pi.elements();
    std::vector<HalfPlane> hs;
    bool feasible = !e.empty();
    for (std::size_t i = 0; i < e.size() && feasible; ++i) {
        feasible = floor_equation(e[i], -e[(i + 1) % e.size()], hs);
    }
    return solve(std::move(hs), feasible, frame);
}

Cell witness_polyhedron(const WitnessGraph& g, const Cell& frame) {
    std::vector<HalfPlane> hs;
    bool feasible = true;
    for (std::size_t v = 0; v < g.vertices.size() && feasible; ++v) {
        const GaussianInt& a = g.vertices[v];
        const auto& img = g.images[v];
        // gamma^(1)(a) = b1  <=>  floor(s a) = -b1
        // gamma^(2)(a) = b2  <=>  floor(-s a) = b2
        // gamma^(3)(a) = b3  <=>  floor(s conj a) = -conj b3
        // gamma^(4)(a) = b4  <=>  floor(-s conj a) = conj b4
        feasible = floor_equation(a, -img[0], hs) && floor_equation(-a, img[1], hs) &&
                   floor_equation(a.conj(), -img[2].conj(), hs) && floor_equation(-a.conj(), img[3].conj(), hs);
    }
    return solve(std::move(hs), feasible, frame);
}

}  // namespace gsrs
