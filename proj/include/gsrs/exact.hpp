#pragma once

// Exact arithmetic primitives: unbounded integers and rationals (GMP),
// Gaussian integers, and complex numbers with rational parts.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace gsrs {

using Integer = mpz_class;
using Rational = mpq_class;

/// p/q in lowest terms. Unlike the two-argument mpq_class constructor this
/// canonicalizes. Throws std::invalid_argument for q = 0.
Rational make_rational(const Integer& p, const Integer& q = 1);

/// Floor toward negative infinity.
Integer floor_of(const Rational& q);
/// Ceiling toward positive infinity.
Integer ceil_of(const Rational& q);

int compare(const Integer& a, const Integer& b);
int compare(const Rational& a, const Rational& b);

/// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

struct GaussianInt {
    Integer re{0};
    Integer im{0};

    GaussianInt() = default;
    GaussianInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}
    GaussianInt(long r, long i) : re(r), im(i) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GaussianInt conj() const { return {re, -im}; }
    Integer norm() const { return re * re + im * im; }

    friend GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
    friend GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) { return a.re == b.re && a.im == b.im; }
    /// Lexicographic by (re, im).
    friend std::strong_ordering operator<=>(const GaussianInt& a, const GaussianInt& b);
};

std::string to_string(const GaussianInt& g);

struct GaussianIntHash {
    std::size_t operator()(const GaussianInt& g) const noexcept;
};

struct QComplex {
    Rational re{0};
    Rational im{0};

    QComplex() = default;
    QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit QComplex(const GaussianInt& g) : re(g.re), im(g.im) {}

    QComplex conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    friend QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
    friend QComplex operator*(const QComplex& a, const QComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend QComplex operator*(const Rational& s, const QComplex& a) { return {s * a.re, s * a.im}; }
    friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }
    friend std::strong_ordering operator<=>(const QComplex& a, const QComplex& b);
};

std::string to_string(const QComplex& z);
/// Parses "re,im" where both parts are rationals.
QComplex parse_complex(std::string_view text);

/// Component-wise floor: floor(Re z) + i floor(Im z).
GaussianInt complex_floor(const QComplex& z);

/// Exact product r * a.
QComplex qc_mul(const QComplex& r, const GaussianInt& a);

/// 2D cross product a.re * b.im - a.im * b.re.
Rational cross(const QComplex& a, const QComplex& b);
Rational dot(const QComplex& a, const QComplex& b);

}  // namespace gsrs
