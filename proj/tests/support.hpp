// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <array>
#include <optional>
#include <random>

#include "ecmin/families.hpp"
#include "ecmin/weierstrass.hpp"

namespace ecmin::test {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed = 0x5eedUL) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }
    Int nonzero(long lo, long hi) {
        long v = 0;
        while (v == 0) v = integer(lo, hi);
        return Int(v);
    }
    Rat rational(long mag = 50) {
        const long num = integer(-mag, mag);
        const long den = integer(1, mag);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Rat nonzero_rational(long mag = 50) {
        Rat r = rational(mag);
        while (r == 0) r = rational(mag);
        return r;
    }
};

inline WeierstrassModel make_model(long a1, long a2, long a3, long a4, long a6) {
    return {Rat(a1), Rat(a2), Rat(a3), Rat(a4), Rat(a6)};
}

/// Curve through three given points: random small a1, a2, then (a3, a4, a6)
/// from the 3x3 linear system. Returns nullopt when the system is singular
/// or the curve degenerates.
inline std::optional<WeierstrassModel> curve_through3(Rng& rng, const RationalPoint& p,
                                                      const RationalPoint& q,
                                                      const RationalPoint& r) {
    const Rat a1 = rng.integer(-3, 3), a2 = rng.integer(-3, 3);
    // y^2 + a1 xy - x^3 - a2 x^2 = -a3 y + a4 x + a6 at each point
    const auto row = [&](const RationalPoint& pt) -> std::array<Rat, 4> {
        return {-pt.y, pt.x, Rat(1),
                pt.y * pt.y + a1 * pt.x * pt.y - pt.x * pt.x * pt.x -
                    a2 * pt.x * pt.x};
    };
    const auto r1 = row(p), r2 = row(q), r3 = row(r);
    const auto det3 = [](const std::array<Rat, 4>& x, const std::array<Rat, 4>& y,
                         const std::array<Rat, 4>& z, int c0, int c1, int c2) -> Rat {
        return x[c0] * (y[c1] * z[c2] - y[c2] * z[c1]) -
               x[c1] * (y[c0] * z[c2] - y[c2] * z[c0]) +
               x[c2] * (y[c0] * z[c1] - y[c1] * z[c0]);
    };
    const Rat det = det3(r1, r2, r3, 0, 1, 2);
    if (det == 0) return std::nullopt;
    const Rat a3 = det3(r1, r2, r3, 3, 1, 2) / det;
    const Rat a4 = det3(r1, r2, r3, 0, 3, 2) / det;
    const Rat a6 = det3(r1, r2, r3, 0, 1, 3) / det;
    const WeierstrassModel m{a1, a2, a3, a4, a6};
    if (invariants(m).disc == 0) return std::nullopt;
    return m;
}

/// Curve through two given points with random small a1, a2, a3 (the two
/// linear conditions fix a4, a6).
inline WeierstrassModel curve_through(Rng& rng, const RationalPoint& p,
                                      const RationalPoint& q) {
    while (true) {
        const Rat a1 = rng.integer(-3, 3), a2 = rng.integer(-3, 3),
                  a3 = rng.integer(-3, 3);
        if (p.x == q.x) return make_model(0, 0, 1, 0, 0);  // caller retries
        // note the explicit Rat: a deduced gmpxx expression template would
        // dangle past the lambda return
        const auto lhs = [&](const RationalPoint& pt) -> Rat {
            return pt.y * pt.y + a1 * pt.x * pt.y + a3 * pt.y - pt.x * pt.x * pt.x -
                   a2 * pt.x * pt.x;
        };
        // lhs(pt) = a4 x + a6 at both points
        const Rat a4 = (lhs(p) - lhs(q)) / (p.x - q.x);
        const Rat a6 = lhs(p) - a4 * p.x;
        const WeierstrassModel m{a1, a2, a3, a4, a6};
        if (invariants(m).disc != 0) return m;
    }
}

}  // namespace ecmin::test
