#include "gsrs/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsrs {

std::optional<HalfPlane> HalfPlane::make(Rational a, Rational b, Rational c, bool strict) {
    Rational lead = sgn(a) != 0 ? a : b;
    if (sgn(lead) == 0) return std::nullopt;
    Rational scale = abs(lead);
    return HalfPlane{a / scale, b / scale, c / scale, strict};
}

bool HalfPlane::constant_holds(const Rational& c, bool strict) { return strict ? sgn(c) > 0 : sgn(c) >= 0; }

bool HalfPlane::contains(const QComplex& p) const {
    int s = sgn(eval(p));
    return strict ? s > 0 : s >= 0;
}

HalfPlane HalfPlane::complement() const { return {-a, -b, -c, !strict}; }

bool operator<(const HalfPlane& x, const HalfPlane& y) {
    if (int k = compare(x.a, y.a)) return k < 0;
    if (int k = compare(x.b, y.b)) return k < 0;
    if (int k = compare(x.c, y.c)) return k < 0;
    return x.strict < y.strict;
}

namespace {

// Removes repeated points and collinear middles from a convex ring; collapses
// degenerate rings to their extreme points.
std::vector<QComplex> normalize_ring(std::vector<QComplex> ring) {
    std::vector<QComplex> out;
    for (auto& p : ring) {
        if (out.empty() || out.back() != p) out.push_back(std::move(p));
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    if (out.size() <= 2) return out;

    bool degenerate = true;
    for (std::size_t i = 0; i < out.size() && degenerate; ++i) {
        const auto& a = out[i];
        const auto& b = out[(i + 1) % out.size()];
        const auto& c = out[(i + 2) % out.size()];
        degenerate = sgn(cross(b - a, c - b)) == 0;
    }
    if (degenerate) {
        auto [lo, hi] = std::minmax_element(out.begin(), out.end());
        return {*lo, *hi};
    }
    std::vector<QComplex> kept;
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& prev = out[(i + n - 1) % n];
        const auto& next = out[(i + 1) % n];
        if (sgn(cross(out[i] - prev, next - out[i])) != 0) kept.push_back(out[i]);
    }
    return kept;
}

Rational twice_signed_area(const std::vector<QComplex>& ring) {
    Rational s = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) s += cross(ring[i], ring[(i + 1) % ring.size()]);
    return s;
}

// Sutherland-Hodgman step against a closed half-plane.
std::vector<QComplex> clip(const std::vector<QComplex>& ring, const HalfPlane& h) {
    const std::size_t k = ring.size();
    std::vector<Rational> val(k);
    bool all_in = true;
    bool all_out = true;
    for (std::size_t i = 0; i < k; ++i) {
        val[i] = h.eval(ring[i]);
        if (sgn(val[i]) < 0) all_in = false;
        else all_out = false;
    }
    if (all_in) return ring;
    if (all_out) return {};
    std::vector<QComplex> out;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = (i + 1) % k;
        int si = sgn(val[i]);
        int sj = sgn(val[j]);
        if (si >= 0) out.push_back(ring[i]);
        if ((si > 0 && sj < 0) || (si < 0 && sj > 0)) {
            Rational t = val[i] / (val[i] - val[j]);
            out.push_back(ring[i] + t * (ring[j] - ring[i]));
        }
    }
    return normalize_ring(std::move(out));
}

HalfPlane edge_constraint(const QComplex& v, const QComplex& w, bool strict) {
    QComplex d = w - v;
    return *HalfPlane::make(-d.im, d.re, d.im * v.re - d.re * v.im, strict);
}

}  // namespace

Cell Cell::point(const QComplex& p) { return from_polygon({p}, {}, {true}); }

Cell Cell::box(const Rational& xlo, const Rational& xhi, const Rational& ylo, const Rational& yhi) {
    if (xlo > xhi || ylo > yhi) return {};
    std::vector<QComplex> ring{{xlo, ylo}, {xhi, ylo}, {xhi, yhi}, {xlo, yhi}};
    ring = normalize_ring(std::move(ring));
    std::vector<bool> solid(ring.size() == 1 ? 0 : ring.size(), true);
    std::vector<bool> member(ring.size(), true);
    return from_polygon(std::move(ring), std::move(solid), std::move(member));
}

Cell Cell::from_polygon(std::vector<QComplex> vertices, std::vector<bool> edge_solid,
                        std::vector<bool> vertex_member) {
    const std::size_t k = vertices.size();
    if (k == 0) return {};
    if (vertex_member.size() != k) throw std::invalid_argument("one membership flag per vertex expected");
    if (k == 1) {
        if (!edge_solid.empty()) throw std::invalid_argument("a point has no edges");
        if (!vertex_member[0]) throw std::invalid_argument("a point cell must contain its vertex");
        Cell c;
        c.kind_ = Kind::Point;
        c.vertices_ = std::move(vertices);
        c.vertex_member_ = {true};
        c.finish();
        return c;
    }
    if (edge_solid.size() != k) throw std::invalid_argument("one solidity flag per edge expected");
    for (std::size_t i = 0; i < k; ++i) {
        if (vertices[i] == vertices[(i + 1) % k]) throw std::invalid_argument("repeated consecutive vertex");
    }
    if (k == 2) {
        if (edge_solid[0] != edge_solid[1]) throw std::invalid_argument("segment edges disagree");
        if (!edge_solid[0]) throw std::invalid_argument("segment with an excluded interior is not convex");
        Cell c;
        c.kind_ = Kind::Segment;
        if (vertices[1] < vertices[0]) {
            std::swap(vertices[0], vertices[1]);
            std::swap(vertex_member[0], vertex_member[1]);
        }
        c.vertices_ = std::move(vertices);
        c.vertex_member_ = std::move(vertex_member);
        c.edge_solid_ = {true};
        c.finish();
        return c;
    }

    Rational area = twice_signed_area(vertices);
    if (sgn(area) == 0) throw std::invalid_argument("degenerate polygon");
    if (sgn(area) < 0) {
        // Reverse orientation; new edge j joins the images of old edge k-2-j.
        std::vector<QComplex> rv(vertices.rbegin(), vertices.rend());
        std::vector<bool> rm(vertex_member.rbegin(), vertex_member.rend());
        std::vector<bool> rs(k);
        for (std::size_t j = 0; j < k; ++j) rs[j] = edge_solid[(2 * k - 2 - j) % k];
        vertices = std::move(rv);
        vertex_member = std::move(rm);
        edge_solid = std::move(rs);
    }
    for (std::size_t i = 0; i < k; ++i) {
        const auto& prev = vertices[(i + k - 1) % k];
        const auto& next = vertices[(i + 1) % k];
        if (sgn(cross(vertices[i] - prev, next - vertices[i])) < 0) throw std::invalid_argument("polygon is not convex");
    }

    // Drop collinear middle vertices when the markup is uniform across them.
    std::vector<QComplex> v;
    std::vector<bool> solid;
    std::vector<bool> member;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& prev = vertices[(i + k - 1) % k];
        const auto& next = vertices[(i + 1) % k];
        bool straight = sgn(cross(vertices[i] - prev, next - vertices[i])) == 0;
        if (straight) {
            bool in_edge = edge_solid[(i + k - 1) % k];
            if (edge_solid[i] != in_edge || vertex_member[i] != in_edge) {
                throw std::invalid_argument("non-uniform markup along a straight edge");
            }
            continue;
        }
        v.push_back(vertices[i]);
        member.push_back(vertex_member[i]);
        solid.push_back(edge_solid[i]);
    }
    // solid[j] belongs to the edge leaving v[j]; after dropping straight
    // vertices that edge keeps the flag of its first piece.
    const std::size_t m = v.size();
    for (std::size_t j = 0; j < m; ++j) {
        if (member[j] && (!solid[j] || !solid[(j + m - 1) % m])) {
            throw std::invalid_argument("member vertex on an excluded edge");
        }
    }
    auto first = std::min_element(v.begin(), v.end()) - v.begin();
    std::rotate(v.begin(), v.begin() + first, v.end());
    std::rotate(member.begin(), member.begin() + first, member.end());
    std::rotate(solid.begin(), solid.begin() + first, solid.end());

    Cell c;
    c.kind_ = Kind::Polygon;
    c.vertices_ = std::move(v);
    c.edge_solid_ = std::move(solid);
    c.vertex_member_ = std::move(member);
    c.finish();
    return c;
}

Cell Cell::from_closure(std::vector<QComplex> ring, std::span<const HalfPlane> constraints) {
    ring = normalize_ring(std::move(ring));
    const std::size_t k = ring.size();
    if (k == 0) return {};
    std::vector<bool> member(k, true);
    std::vector<bool> solid(k == 1 ? 0 : k, true);
    std::vector<char> zero(k);
    for (const auto& h : constraints) {
        if (!h.strict) continue;
        bool all_zero = true;
        for (std::size_t i = 0; i < k; ++i) {
            zero[i] = sgn(h.eval(ring[i])) == 0;
            if (zero[i]) member[i] = false;
            else all_zero = false;
        }
        if (all_zero) return {};
        if (k == 2) continue;  // one zero endpoint cannot exclude the open segment
        for (std::size_t i = 0; k > 2 && i < k; ++i) {
            if (zero[i] && zero[(i + 1) % k]) solid[i] = false;
        }
    }
    if (k == 2) solid = {true, true};
    return from_polygon(std::move(ring), std::move(solid), std::move(member));
}

void Cell::finish() {
    constraints_.clear();
    lo_ = hi_ = vertices_.front();
    for (const auto& p : vertices_) {
        if (p.re < lo_.re) lo_.re = p.re;
        if (p.im < lo_.im) lo_.im = p.im;
        if (p.re > hi_.re) hi_.re = p.re;
        if (p.im > hi_.im) hi_.im = p.im;
    }
    const std::size_t k = vertices_.size();
    if (kind_ == Kind::Point) {
        const auto& p = vertices_[0];
        constraints_.push_back(*HalfPlane::make(1, 0, -p.re, false));
        constraints_.push_back(*HalfPlane::make(-1, 0, p.re, false));
        constraints_.push_back(*HalfPlane::make(0, 1, -p.im, false));
        constraints_.push_back(*HalfPlane::make(0, -1, p.im, false));
    } else if (kind_ == Kind::Segment) {
        const auto& p = vertices_[0];
        const auto& q = vertices_[1];
        QComplex d = q - p;
        HalfPlane line = edge_constraint(p, q, false);
        constraints_.push_back(line);
        constraints_.push_back(*HalfPlane::make(-line.a, -line.b, -line.c, false));
        constraints_.push_back(*HalfPlane::make(d.re, d.im, -dot(d, p), !vertex_member_[0]));
        constraints_.push_back(*HalfPlane::make(-d.re, -d.im, dot(d, q), !vertex_member_[1]));
    } else {
        std::vector<HalfPlane> edges;
        for (std::size_t i = 0; i < k; ++i) {
            edges.push_back(edge_constraint(vertices_[i], vertices_[(i + 1) % k], !edge_solid_[i]));
        }
        constraints_ = edges;
        for (std::size_t i = 0; i < k; ++i) {
            std::size_t prev = (i + k - 1) % k;
            if (vertex_member_[i] || !edge_solid_[i] || !edge_solid_[prev]) continue;
            // Cut the lone vertex with a line touching the closure only there.
            Rational a = edges[prev].a + edges[i].a;
            Rational b = edges[prev].b + edges[i].b;
            const auto& v = vertices_[i];
            constraints_.push_back(*HalfPlane::make(a, b, -(a * v.re + b * v.im), true));
        }
    }
    std::sort(constraints_.begin(), constraints_.end());
}

bool Cell::contains(const QComplex& p) const {
    if (empty()) return false;
    if (p.re < lo_.re || p.re > hi_.re || p.im < lo_.im || p.im > hi_.im) return false;
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const HalfPlane& h) { return h.contains(p); });
}

QComplex Cell::sample_point() const {
    if (empty()) throw std::logic_error("empty cell has no sample point");
    QComplex s;
    for (const auto& p : vertices_) s = s + p;
    return Rational(1, static_cast<unsigned long>(vertices_.size())) * s;
}

Cell Cell::reflected() const {
    if (empty()) return {};
    std::vector<QComplex> v;
    for (const auto& p : vertices_) v.push_back(p.conj());
    return from_polygon(std::move(v), edge_solid_.size() == 1 ? std::vector<bool>{true, true} : edge_solid_,
                        vertex_member_);
}

const Cell& default_frame() {
    static const Cell frame = Cell::box(-2, 2, -2, 2);
    return frame;
}

Cell intersect_halfplanes(std::span<const HalfPlane> hs, const Cell& frame) {
    if (frame.empty()) return {};
    std::vector<QComplex> ring = frame.vertices();
    for (const auto& h : hs) {
        ring = clip(ring, h);
        if (ring.empty()) return {};
    }
    std::vector<HalfPlane> all(frame.constraints().begin(), frame.constraints().end());
    all.insert(all.end(), hs.begin(), hs.end());
    return Cell::from_closure(std::move(ring), all);
}

Cell intersect(const Cell& x, const Cell& y) {
    if (x.empty() || y.empty()) return {};
    if (x.max_x() < y.min_x() || y.max_x() < x.min_x() || x.max_y() < y.min_y() || y.max_y() < x.min_y()) return {};
    return intersect_halfplanes(y.constraints(), x);
}

bool cell_contains(const Cell& c, const QComplex& p) { return c.contains(p); }

std::vector<Cell> subtract_cover(const Cell& target, std::span<const Cell> covers) {
    std::vector<Cell> residual;
    if (!target.empty()) residual.push_back(target);
    for (const auto& cover : covers) {
        if (cover.empty()) continue;
        std::vector<Cell> next;
        for (auto& piece : residual) {
            if (intersect(piece, cover).empty()) {
                next.push_back(std::move(piece));
                continue;
            }
            Cell rest = piece;
            for (const auto& h : cover.constraints()) {
                HalfPlane out = h.complement();
                Cell part = intersect_halfplanes(std::span<const HalfPlane>(&out, 1), rest);
                if (!part.empty()) next.push_back(std::move(part));
                rest = intersect_halfplanes(std::span<const HalfPlane>(&h, 1), rest);
                if (rest.empty()) break;
            }
        }
        residual = std::move(next);
        if (residual.empty()) break;
    }
    return residual;
}

QComplex nearest_to_origin(const Cell& c) {
    if (c.empty()) throw std::logic_error("distance to an empty cell");
    const auto& v = c.vertices();
    auto segment_nearest = [](const QComplex& p, const QComplex& q) -> QComplex {
        QComplex d = q - p;
        Rational t = -dot(p, d) / d.norm2();
        if (t < 0) t = 0;
        if (t > 1) t = 1;
        return p + t * d;
    };
    if (c.kind() == Cell::Kind::Point) return v[0];
    if (c.kind() == Cell::Kind::Segment) return segment_nearest(v[0], v[1]);
    bool inside = true;
    for (std::size_t i = 0; i < v.size() && inside; ++i) {
        inside = sgn(cross(v[(i + 1) % v.size()] - v[i], -v[i])) >= 0;
    }
    if (inside) return QComplex{};
    QComplex best = v[0];
    Rational best_d = best.norm2();
    for (std::size_t i = 0; i < v.size(); ++i) {
        QComplex p = segment_nearest(v[i], v[(i + 1) % v.size()]);
        Rational d = p.norm2();
        if (d < best_d) {
            best_d = d;
            best = p;
        }
    }
    return best;
}

Rational squared_distance_to_origin(const Cell& c) { return nearest_to_origin(c).norm2(); }

DiskRelation disk_separation(const Cell& c, const Rational& radius_sq) {
    if (c.empty()) return DiskRelation::Outside;
    QComplex q = nearest_to_origin(c);
    Rational d = q.norm2();
    if (d > radius_sq) return DiskRelation::Outside;
    // The nearest closure point is unique; on the circle it decides alone.
    if (d == radius_sq && !c.contains(q)) return DiskRelation::Outside;
    bool inside = std::all_of(c.vertices().begin(), c.vertices().end(),
                              [&](const QComplex& p) { return p.norm2() < radius_sq; });
    return inside ? DiskRelation::Inside : DiskRelation::Meets;
}

}  // namespace gsrs
