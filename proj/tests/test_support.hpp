#pragma once

#include "gsrs/geometry.hpp"

#include <optional>
#include <random>

namespace gsrs::testing {

inline Rational q(long p, long d = 1) { return make_rational(p, d); }

// A random convex combination of the closure vertices, kept only if it lies
// in the cell itself.
inline std::optional<QComplex> random_point_in(const Cell& c, std::mt19937_64& rng, int tries = 20) {
    const auto& v = c.vertices();
    if (v.empty()) return std::nullopt;
    std::uniform_int_distribution<long> w(1, 1000);
    for (int t = 0; t < tries; ++t) {
        Rational total = 0;
        QComplex p;
        for (const auto& x : v) {
            Rational k(w(rng));
            p.re += k * x.re;
            p.im += k * x.im;
            total += k;
        }
        p.re /= total;
        p.im /= total;
        if (c.contains(p)) return p;
    }
    return std::nullopt;
}

inline QComplex random_point(std::mt19937_64& rng, long lo, long hi, long den) {
    std::uniform_int_distribution<long> d(lo * den, hi * den);
    return {q(d(rng), den), q(d(rng), den)};
}

}  // namespace gsrs::testing
