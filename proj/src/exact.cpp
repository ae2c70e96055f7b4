#include "gsrs/exact.hpp"

#include <stdexcept>

namespace gsrs {

Rational make_rational(const Integer& p, const Integer& q) {
    if (q == 0) throw std::invalid_argument("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

int compare(const Integer& a, const Integer& b) {
    int c = cmp(a, b);
    return (c > 0) - (c < 0);
}

int compare(const Rational& a, const Rational& b) {
    int c = cmp(a, b);
    return (c > 0) - (c < 0);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) {
        throw std::invalid_argument("empty rational");
    }
    if (s.front() == '+') s.erase(s.begin());
    auto slash = s.find('/');
    auto valid_int = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') return false;
        }
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-') {
        throw std::invalid_argument("malformed rational: " + s);
    }
    Integer d(den);
    if (d == 0) {
        throw std::invalid_argument("zero denominator: " + s);
    }
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
}

std::strong_ordering operator<=>(const GaussianInt& a, const GaussianInt& b) {
    int c = compare(a.re, b.re);
    if (c == 0) c = compare(a.im, b.im);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const GaussianInt& g) { return "(" + g.re.get_str() + "," + g.im.get_str() + ")"; }

std::size_t GaussianIntHash::operator()(const GaussianInt& g) const noexcept {
    auto limb_hash = [](const Integer& z) -> std::size_t {
        const mpz_srcptr p = z.get_mpz_t();
        std::size_t h = static_cast<std::size_t>(p->_mp_size) * 0x9e3779b97f4a7c15ULL;
        int n = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
        for (int i = 0; i < n; ++i) {
            h ^= static_cast<std::size_t>(p->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    };
    std::size_t h = limb_hash(g.re);
    return h ^ (limb_hash(g.im) * 0xff51afd7ed558ccdULL + (h << 7));
}

std::strong_ordering operator<=>(const QComplex& a, const QComplex& b) {
    int c = compare(a.re, b.re);
    if (c == 0) c = compare(a.im, b.im);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const QComplex& z) { return to_string(z.re) + "," + to_string(z.im); }

QComplex parse_complex(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw std::invalid_argument("expected re,im: " + std::string(text));
    }
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

GaussianInt complex_floor(const QComplex& z) { return {floor_of(z.re), floor_of(z.im)}; }

QComplex qc_mul(const QComplex& r, const GaussianInt& a) {
    return {r.re * a.re - r.im * a.im, r.re * a.im + r.im * a.re};
}

Rational cross(const QComplex& a, const QComplex& b) { return a.re * b.im - a.im * b.re; }

Rational dot(const QComplex& a, const QComplex& b) { return a.re * b.re + a.im * b.im; }

}  // namespace gsrs
