#include "gsrs/region.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace gsrs {

QComplex vertex(int i, const Integer& n) {
    const Integer n2 = n * n;
    auto om = [](const Integer& k, const Integer& d, const Integer& y) {
        return QComplex{1 - make_rational(k, d), make_rational(y, d)};
    };
    switch (i) {
        case 0:
            if (n == 1) return {Rational(1), Rational(0)};
            if (n == 2) return {make_rational(22, 23), make_rational(4, 23)};
            if (n == 3) return {make_rational(26, 27), make_rational(4, 27)};
            break;
        case 1: return om(2, n2 - 2, n);
        case 2: return om(1, n2 - n - 1, n - 1);
        case 3:
            if (n != 0 && n != 1) return om(1, n2 - n, n - 1);
            break;
        case 4:
            if (n != 0) return om(1, n2, n);
            break;
        case 5: return om(1, n2 + 1, n);
        case 6: return om(1, n2 + n + 1, n + 1);
        case 7: return om(1, n2 + n + 2, n + 1);
        case 8: return om(1, n2 + 2, n);
        case 9: return om(1, n2 + 3, n);
        case 10: return om(2, n2 + n + 6, n + 1);
        default: break;
    }
    throw std::invalid_argument("P_" + std::to_string(i) + "(" + n.get_str() + ") is not defined");
}

QComplex vertex(int i, long n) { return vertex(i, Integer(n)); }

namespace {

struct Entry {
    int i;
    long n;
    bool overline;
    bool solid_next;  // edge to the following entry
};

// Rows of the irregular part, P_0(1) through P_9(7); the last edge leads to P_1(8).
const std::vector<Entry>& prefix_entries() {
    static const std::vector<Entry> rows{
        {0, 1, false, true}, {5, 0, true, true},  {6, 0, false, false}, {5, 1, true, true},
        {6, 1, false, true}, {7, 0, true, false}, {7, 1, false, false},

        {5, 2, true, true},   {6, 2, true, false},  {7, 2, false, false}, {8, 2, true, false},
        {4, 3, false, false}, {5, 3, true, true},   {6, 3, false, false}, {7, 3, false, false},
        {8, 3, true, true},

        {3, 4, true, false}, {4, 4, false, false}, {5, 4, true, true}, {6, 4, false, false},
        {7, 4, false, false}, {8, 4, true, true},

        {3, 5, true, false}, {4, 5, false, false}, {5, 5, true, true}, {6, 5, false, false},
        {7, 5, false, false}, {8, 5, true, true},  {9, 5, true, true},

        {0, 2, true, true},  {2, 6, true, true},   {3, 6, true, false}, {4, 6, false, false},
        {5, 6, true, true},  {6, 6, false, false}, {7, 6, false, false}, {8, 6, true, true},
        {9, 6, true, true},

        {0, 3, true, true},  {2, 7, true, true},   {3, 7, true, false}, {4, 7, false, false},
        {5, 7, true, true},  {6, 7, false, false}, {7, 7, false, false}, {8, 7, true, true},
        {9, 7, true, true},
    };
    return rows;
}

// The regular pike: P_1 - P_2 - P_3 . P_4 . P_5 - P_6 . P_7 . P_8 - P_9 - P_10 .
constexpr bool kRegularOverline[10] = {true, true, true, false, true, false, false, true, true, true};
constexpr bool kRegularSolid[10] = {true, true, false, false, true, false, false, true, true, false};

// A piece of the chain: points, membership flags and edge flags (edge k joins
// k and k+1).
struct Polyline {
    std::vector<QComplex> pts;
    std::vector<bool> member;
    std::vector<bool> solid;

    void push(QComplex p, bool m) {
        pts.push_back(std::move(p));
        member.push_back(m);
    }
};

void append_regular(Polyline& out, const Integer& first, const Integer& last) {
    for (Integer n = first; n <= last; ++n) {
        for (int i = 1; i <= 10; ++i) {
            out.push(vertex(i, n), kRegularOverline[i - 1]);
            out.solid.push_back(kRegularSolid[i - 1]);
        }
    }
    out.push(vertex(1, Integer(last + 1)), true);
}

// From P_6(0) (skipping the two axis edges) through pike `last` >= 8.
Polyline prefix_polyline(long last = 12) {
    Polyline out;
    const auto& rows = prefix_entries();
    for (std::size_t k = 2; k < rows.size(); ++k) {
        out.push(vertex(rows[k].i, rows[k].n), rows[k].overline);
        out.solid.push_back(rows[k].solid_next);
    }
    append_regular(out, 8, last);
    return out;
}

// A polyline whose angular range strictly brackets slope y/x of p, p with x, y > 0.
Polyline local_polyline(const QComplex& p) {
    if (7 * p.im > p.re) return prefix_polyline();
    Integer n0 = floor_of(p.re / p.im);
    if (n0 <= 10) return prefix_polyline();
    Polyline out;
    append_regular(out, n0 - 1, n0 + 1);
    return out;
}

int sign(const Rational& q) { return sgn(q); }

bool on_open_segment(const QComplex& p, const QComplex& a, const QComplex& b) {
    if (sign(cross(b - a, p - a)) != 0) return false;
    return sign(dot(p - a, p - b)) < 0;
}

// Runs are maximal groups of consecutive vertices on one ray from the origin.
template <class F>
void for_each_run(const Polyline& c, F&& f) {
    std::size_t k = 0;
    while (k < c.pts.size()) {
        std::size_t j = k;
        while (j + 1 < c.pts.size() && sign(cross(c.pts[j], c.pts[j + 1])) == 0) ++j;
        f(k, j);
        k = j + 1;
    }
}

bool run_contains(const Polyline& c, std::size_t k, std::size_t j, const QComplex& p) {
    Rational rmin = c.pts[k].norm2();
    Rational rmax = rmin;
    for (std::size_t t = k + 1; t <= j; ++t) {
        rmin = std::min(rmin, c.pts[t].norm2());
        rmax = std::max(rmax, c.pts[t].norm2());
    }
    Rational r = p.norm2();
    if (r < rmin) return true;
    if (r > rmax) return false;
    for (std::size_t t = k; t < j; ++t) {
        if (c.solid[t] && on_open_segment(p, c.pts[t], c.pts[t + 1])) return true;
    }
    for (std::size_t t = k; t <= j; ++t) {
        if (c.pts[t] == p && c.member[t]) return true;
    }
    return false;
}

bool edge_contains(const QComplex& a, const QComplex& b, bool solid, const QComplex& p) {
    int s0 = sign(cross(a, b));  // side of the origin
    int sp = sign(cross(b - a, p - a));
    if (sp == 0) return solid;
    return sp == s0;
}

bool upper_contains(const QComplex& p) {
    Polyline c = local_polyline(p);
    std::optional<std::size_t> prev_last;
    std::optional<bool> result;
    for_each_run(c, [&](std::size_t k, std::size_t j) {
        if (result) return;
        int s = sign(cross(p, c.pts[k]));
        if (s == 0) {
            result = run_contains(c, k, j, p);
        } else if (s < 0) {
            if (!prev_last) throw std::logic_error("chain does not bracket the point");
            result = edge_contains(c.pts[*prev_last], c.pts[k], c.solid[*prev_last], p);
        }
        prev_last = j;
    });
    if (!result) throw std::logic_error("chain does not bracket the point");
    return *result;
}

HalfPlane half_plane(const Rational& a, const Rational& b, const Rational& c, bool strict) {
    auto h = HalfPlane::make(a, b, c, strict);
    if (!h) throw std::logic_error("degenerate half-plane");
    return *h;
}

// {z : cross(u, z) > 0}
HalfPlane left_of_ray(const QComplex& u) { return half_plane(-u.im, u.re, 0, true); }

Cell open_segment(const QComplex& a, const QComplex& b) { return Cell::from_polygon({a, b}, {true, true}, {false, false}); }

// Fan of the region over the polyline: open triangles from the origin, open
// solid edges, open radial segments below each run and member vertices.
std::vector<Cell> fan_cells(const Polyline& c, const Cell& window) {
    std::vector<Cell> out;
    auto add = [&](const Cell& cell) {
        Cell clipped = intersect(cell, window);
        if (clipped.empty()) return;
        if (std::find(out.begin(), out.end(), clipped) != out.end()) return;
        if (clipped.kind() == Cell::Kind::Point) {
            for (const Cell& o : out) {
                if (o.contains(clipped.vertices()[0])) return;
            }
        }
        out.push_back(std::move(clipped));
    };
    const QComplex origin;
    std::optional<std::size_t> prev_last;
    for_each_run(c, [&](std::size_t k, std::size_t j) {
        if (prev_last) {
            const QComplex& a = c.pts[*prev_last];
            const QComplex& b = c.pts[k];
            std::vector<HalfPlane> hs{left_of_ray(b), left_of_ray(-a)};
            // strictly on the origin's side of the line through a and b
            QComplex d = b - a;
            Rational s0 = cross(a, b);
            Rational f = sign(s0) > 0 ? Rational(1) : Rational(-1);
            hs.push_back(half_plane(-d.im * f, d.re * f, (d.im * a.re - d.re * a.im) * f, true));
            std::sort(hs.begin(), hs.end());
            add(intersect_halfplanes(hs));
            if (c.solid[*prev_last]) add(open_segment(a, b));
        }
        std::size_t inner = k;
        for (std::size_t t = k + 1; t <= j; ++t) {
            if (c.pts[t].norm2() < c.pts[inner].norm2()) inner = t;
        }
        add(open_segment(origin, c.pts[inner]));
        for (std::size_t t = k; t < j; ++t) {
            if (c.solid[t] && !(c.pts[t] == c.pts[t + 1])) add(open_segment(c.pts[t], c.pts[t + 1]));
        }
        for (std::size_t t = k; t <= j; ++t) {
            if (c.member[t]) add(Cell::point(c.pts[t]));
        }
        prev_last = j;
    });
    return out;
}

}  // namespace

BoundaryChain boundary_chain(long n_pikes) {
    if (n_pikes < 7) throw std::invalid_argument("boundary_chain needs n_pikes >= 7");
    BoundaryChain out;
    for (const Entry& e : prefix_entries()) {
        out.vertices.push_back({vertex(e.i, e.n), e.overline, e.i, e.n});
        out.edge_solid.push_back(e.solid_next);
    }
    for (long n = 8; n <= n_pikes; ++n) {
        for (int i = 1; i <= 10; ++i) {
            out.vertices.push_back({vertex(i, n), kRegularOverline[i - 1], i, n});
            out.edge_solid.push_back(kRegularSolid[i - 1]);
        }
    }
    out.vertices.push_back({vertex(1, n_pikes + 1), true, 1, n_pikes + 1});
    return out;
}

bool region_contains(const QComplex& p_in, long) {
    QComplex p = sgn(p_in.im) < 0 ? p_in.conj() : p_in;
    if (sgn(p.re) < 0) return false;
    if (sgn(p.im) == 0) return p.re < 1;
    if (sgn(p.re) == 0) return p.im < 1;
    return upper_contains(p);
}

Cell sector_window(long n) {
    if (n < 7) throw std::invalid_argument("sector windows start at n = 7");
    std::vector<HalfPlane> hs{half_plane(-1, n, 0, true), half_plane(1, -(n - 1), 0, false)};
    std::sort(hs.begin(), hs.end());
    return intersect_halfplanes(hs);
}

Cell prefix_window() {
    std::vector<HalfPlane> hs{half_plane(0, 1, 0, false), half_plane(-1, 7, 0, true)};
    std::sort(hs.begin(), hs.end());
    return intersect_halfplanes(hs);
}

std::vector<Cell> local_gc_cells(long n) {
    Cell window = sector_window(n);
    if (n <= 12) return fan_cells(prefix_polyline(), window);
    Polyline c;
    append_regular(c, n - 2, n + 1);
    return fan_cells(c, window);
}

std::vector<Cell> prefix_gc_cells() { return fan_cells(prefix_polyline(), prefix_window()); }

// ---------------------------------------------------------------------------
// Numerics

std::string to_decimal(const Rational& q, int digits, bool round_up) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = q * scale;
    Integer v = round_up ? ceil_of(scaled) : floor_of(scaled);
    bool negative = sgn(v) < 0;
    std::string s = Integer(abs(v)).get_str();
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return negative ? "-" + s : s;
}

Rational squared_edge_length(int i, int j, long n) { return (vertex(j, n) - vertex(i, n)).norm2(); }

namespace {

class Real {
public:
    explicit Real(long bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    ~Real() { mpfr_clear(v_); }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    mpfr_ptr get() { return v_; }
    Rational exact() const {
        Rational q;
        mpfr_get_q(q.get_mpq_t(), v_);
        return q;
    }

private:
    mpfr_t v_;
};

// Directed-rounding accumulator.
class IntervalSum {
public:
    explicit IntervalSum(long bits) : lo_(bits), hi_(bits), t_(bits), bits_(bits) {}

    void add(const Rational& q) {
        mpfr_set_q(t_.get(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_add(lo_.get(), lo_.get(), t_.get(), MPFR_RNDD);
        mpfr_set_q(t_.get(), q.get_mpq_t(), MPFR_RNDU);
        mpfr_add(hi_.get(), hi_.get(), t_.get(), MPFR_RNDU);
    }
    void add_sqrt(const Rational& q) {
        mpfr_set_q(t_.get(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_sqrt(t_.get(), t_.get(), MPFR_RNDD);
        mpfr_add(lo_.get(), lo_.get(), t_.get(), MPFR_RNDD);
        mpfr_set_q(t_.get(), q.get_mpq_t(), MPFR_RNDU);
        mpfr_sqrt(t_.get(), t_.get(), MPFR_RNDU);
        mpfr_add(hi_.get(), hi_.get(), t_.get(), MPFR_RNDU);
    }
    Rational low() const { return lo_.exact(); }
    Rational high() const { return hi_.exact(); }
    long bits() const { return bits_; }

private:
    Real lo_;
    Real hi_;
    Real t_;
    long bits_;
};

// Integer polynomials in n, coefficient k of n^k.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<long> c) {
        for (long x : c) c_.emplace_back(x);
        trim();
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Integer& lead() const { return c_.back(); }
    bool zero() const { return c_.empty(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < a.c_.size(); ++k) r.c_[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) r.c_[k] += b.c_[k];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return {};
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Integer& s, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    /// p(n + s)
    Poly shifted(const Integer& s) const {
        Poly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            r = r * Poly::linear(s) + Poly::constant(*it);
        }
        return r;
    }

    /// All coefficients of p(N + t) are >= 0, so p(n) >= 0 for every n >= N.
    bool nonnegative_from(const Integer& n0) const {
        Poly s = shifted(n0);
        return std::all_of(s.c_.begin(), s.c_.end(), [](const Integer& x) { return sgn(x) >= 0; });
    }

    static Poly constant(const Integer& x) {
        Poly r;
        r.c_.push_back(x);
        r.trim();
        return r;
    }
    // n + s
    static Poly linear(const Integer& s) {
        Poly r;
        r.c_ = {s, Integer(1)};
        r.trim();
        return r;
    }
    static Poly monomial(int k) {
        Poly r;
        r.c_.assign(static_cast<std::size_t>(k) + 1, Integer(0));
        r.c_.back() = 1;
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

// A vertex (X/D, Y/D) with polynomial entries.
struct SymVertex {
    Poly x;
    Poly y;
    Poly d;

    SymVertex shifted(long s) const { return {x.shifted(s), y.shifted(s), d.shifted(s)}; }
};

SymVertex sym_vertex(int i) {
    // (1 - k/D, Y/D) = ((D - k)/D, Y/D)
    auto om = [](long k, Poly d, Poly y) { return SymVertex{d - Poly::constant(k), std::move(y), d}; };
    const Poly n{0, 1};
    switch (i) {
        case 1: return om(2, Poly{-2, 0, 1}, n);
        case 2: return om(1, Poly{-1, -1, 1}, Poly{-1, 1});
        case 3: return om(1, Poly{0, -1, 1}, Poly{-1, 1});
        case 4: return om(1, Poly{0, 0, 1}, n);
        case 5: return om(1, Poly{1, 0, 1}, n);
        case 6: return om(1, Poly{1, 1, 1}, Poly{1, 1});
        case 7: return om(1, Poly{2, 1, 1}, Poly{1, 1});
        case 8: return om(1, Poly{2, 0, 1}, n);
        case 9: return om(1, Poly{3, 0, 1}, n);
        case 10: return om(2, Poly{6, 1, 1}, Poly{1, 1});
        default: throw std::logic_error("no symbolic vertex");
    }
}

// The eleven vertices P_1(n) .. P_10(n), P_1(n+1) of block n.
std::vector<SymVertex> sym_block() {
    std::vector<SymVertex> v;
    for (int i = 1; i <= 10; ++i) v.push_back(sym_vertex(i));
    v.push_back(sym_vertex(1).shifted(1));
    return v;
}

std::vector<QComplex> block(long n) {
    std::vector<QComplex> v;
    v.reserve(11);
    for (int i = 1; i <= 10; ++i) v.push_back(vertex(i, n));
    v.push_back(vertex(1, n + 1));
    return v;
}

// The chain from P_5(0) (area: P_6(0)) through P_1(8).
std::vector<QComplex> prefix_points(bool from_origin) {
    std::vector<QComplex> v;
    const auto& rows = prefix_entries();
    for (std::size_t k = from_origin ? 1 : 2; k < rows.size(); ++k) v.push_back(vertex(rows[k].i, rows[k].n));
    v.push_back(vertex(1, 8));
    return v;
}

// Smallest K (searched from above the limit) with num/den <= K for every
// n >= n0, certified by a nonnegative Taylor expansion of K den - num.
Rational certify_upper(const Poly& num, const Poly& den, const Integer& n0) {
    if (!den.nonnegative_from(n0)) throw std::logic_error("denominator not positive on the tail");
    Rational limit = 0;
    if (num.degree() > den.degree()) throw std::logic_error("unbounded tail term");
    if (num.degree() == den.degree()) limit = make_rational(num.lead(), den.lead());
    Rational slack = make_rational(1, 1000);
    for (int attempt = 0; attempt < 60; ++attempt) {
        Rational k = (limit > 0 ? limit : Rational(0)) * (1 + slack) + slack;
        if ((k.get_num() * den - k.get_den() * num).nonnegative_from(n0)) return k;
        slack *= 2;
    }
    throw std::logic_error("tail bound could not be certified");
}

Rational sqrt_up(const Rational& q, long bits) {
    Real t(bits);
    mpfr_set_q(t.get(), q.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(t.get(), t.get(), MPFR_RNDU);
    return t.exact();
}

}  // namespace

Bracket perimeter_estimate(long n_pikes, long precision_bits) {
    if (n_pikes < 8) throw std::invalid_argument("perimeter_estimate needs n_pikes >= 8");
    IntervalSum sum(precision_bits);
    auto add_path = [&](const std::vector<QComplex>& v) {
        for (std::size_t k = 0; k + 1 < v.size(); ++k) sum.add_sqrt((v[k + 1] - v[k]).norm2());
    };
    add_path(prefix_points(true));
    for (long n = 8; n <= n_pikes; ++n) add_path(block(n));

    // Edge e of block n has length <= sqrt(K_e) / n^2 for n > n_pikes, and
    // the sum of 1/n^2 over n > N is at most 1/N.
    const auto sym = sym_block();
    const Poly n4 = Poly::monomial(4);
    Rational tail = 0;
    for (std::size_t e = 0; e + 1 < sym.size(); ++e) {
        const SymVertex& a = sym[e];
        const SymVertex& b = sym[e + 1];
        Poly dx = b.x * a.d - a.x * b.d;
        Poly dy = b.y * a.d - a.y * b.d;
        Poly dd = a.d * b.d;
        Rational k = certify_upper(n4 * (dx * dx + dy * dy), dd * dd, Integer(n_pikes + 1));
        tail += sqrt_up(k, precision_bits);
    }
    tail /= n_pikes;
    return {2 * sum.low(), 2 * (sum.high() + tail)};
}

Bracket area_estimate(long n_pikes, long precision_bits) {
    if (n_pikes < 8) throw std::invalid_argument("area_estimate needs n_pikes >= 8");
    IntervalSum sum(precision_bits);
    // The chain runs clockwise, so each fan triangle has area -cross/2.
    auto fan = [](const std::vector<QComplex>& v) -> Rational {
        Rational s = 0;
        for (std::size_t k = 0; k + 1 < v.size(); ++k) s -= cross(v[k], v[k + 1]);
        return s / 2;
    };
    sum.add(fan(prefix_points(false)));
    for (long n = 8; n <= n_pikes; ++n) sum.add(fan(block(n)));

    // S(n) = A/B, the fan area of block n, behaves like c/n^2. Certify
    // |n^3 S(n) - c n| <= K on the tail; then the tail lies in
    // [c/(N+1) - K/(2N^2), c/N + K/(2N^2)].
    const auto sym = sym_block();
    Poly num;
    Poly den = Poly::constant(1);
    for (std::size_t e = 0; e + 1 < sym.size(); ++e) {
        const SymVertex& a = sym[e];
        const SymVertex& b = sym[e + 1];
        Poly cn = -(a.x * b.y - a.y * b.x);
        Poly cd = a.d * b.d;
        num = num * cd + cn * den;
        den = den * cd;
    }
    den = Integer(2) * den;
    if (num.degree() + 2 > den.degree()) throw std::logic_error("fan area does not decay like 1/n^2");
    Rational c = num.degree() + 2 == den.degree() ? make_rational(num.lead(), den.lead()) : Rational(0);
    Poly g = c.get_den() * Poly::monomial(3) * num - c.get_num() * Poly::monomial(1) * den;
    Poly h = c.get_den() * den;
    const Integer n0(n_pikes + 1);
    Rational k = std::max(certify_upper(g, h, n0), certify_upper(-g, h, n0));
    const Rational N(n_pikes);
    Rational tail_lo = c / (N + 1) - k / (2 * N * N);
    Rational tail_hi = c / N + k / (2 * N * N);
    return {2 * (sum.low() + tail_lo), 2 * (sum.high() + tail_hi)};
}

// ---------------------------------------------------------------------------
// SVG

std::string boundary_svg(long n_pikes, const std::vector<Cell>& cells, double x0, double y0, double x1, double y1) {
    const double size = 800;
    const double sx = size / (x1 - x0);
    const double sy = size / (y1 - y0);
    auto px = [&](const Rational& x) { return (x.get_d() - x0) * sx; };
    auto py = [&](const Rational& y) { return (y1 - y.get_d()) * sy; };
    std::ostringstream out;
    out << std::setprecision(8);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const Cell& c : cells) {
        const auto& v = c.vertices();
        if (v.empty()) continue;
        if (v.size() == 1) {
            out << "<circle cx=\"" << px(v[0].re) << "\" cy=\"" << py(v[0].im)
                << "\" r=\"3\" fill=\"steelblue\" fill-opacity=\"0.5\"/>\n";
        } else if (v.size() == 2) {
            out << "<line x1=\"" << px(v[0].re) << "\" y1=\"" << py(v[0].im) << "\" x2=\"" << px(v[1].re)
                << "\" y2=\"" << py(v[1].im) << "\" stroke=\"steelblue\" stroke-opacity=\"0.5\"/>\n";
        } else {
            out << "<polygon points=\"";
            for (const auto& p : v) out << px(p.re) << ',' << py(p.im) << ' ';
            out << "\" fill=\"steelblue\" fill-opacity=\"0.25\" stroke=\"steelblue\" stroke-width=\"0.5\"/>\n";
        }
    }
    BoundaryChain chain = boundary_chain(std::max(n_pikes, 7L));
    for (std::size_t k = 0; k + 1 < chain.vertices.size(); ++k) {
        const QComplex& a = chain.vertices[k].point;
        const QComplex& b = chain.vertices[k + 1].point;
        out << "<line x1=\"" << px(a.re) << "\" y1=\"" << py(a.im) << "\" x2=\"" << px(b.re) << "\" y2=\""
            << py(b.im) << "\" stroke=\"black\" stroke-width=\"1.2\"";
        if (!chain.edge_solid[k]) out << " stroke-dasharray=\"4,3\"";
        out << "/>\n";
    }
    for (const auto& v : chain.vertices) {
        out << "<circle cx=\"" << px(v.point.re) << "\" cy=\"" << py(v.point.im) << "\" r=\"2.5\" stroke=\"black\" fill=\""
            << (v.overline ? "black" : "white") << "\"><title>P_" << v.index << '(' << v.pike << ")</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace gsrs
