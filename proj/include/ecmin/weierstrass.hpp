// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <optional>

#include "ecmin/numeric.hpp"

namespace ecmin {

/// Long Weierstrass equation y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// over Q. Singular models are representable; curve-level operations reject
/// them.
struct WeierstrassModel {
    Rat a1, a2, a3, a4, a6;

    bool is_integral() const;
    bool operator==(const WeierstrassModel&) const = default;
};

/// c4, c6, discriminant and j of a model. j is absent when disc = 0.
struct CurveInvariants {
    Rat c4, c6, disc;
    std::optional<Rat> j;
};

CurveInvariants invariants(const WeierstrassModel& m);

/// x |-> u^2 x + r, y |-> u^3 y + u^2 s x + w with u != 0.
struct AdmissibleChange {
    Rat u = 1, r = 0, s = 0, w = 0;

    static AdmissibleChange identity() { return {}; }
    static AdmissibleChange scaling(const Rat& u) { return {u, 0, 0, 0}; }
};

WeierstrassModel transform(const WeierstrassModel& m, const AdmissibleChange& c);
AdmissibleChange inverse(const AdmissibleChange& c);
/// Change equivalent to applying `first`, then `then`.
AdmissibleChange compose(const AdmissibleChange& first, const AdmissibleChange& then);

/// Affine rational point or the point at infinity.
struct RationalPoint {
    bool infinity = true;
    Rat x, y;

    static RationalPoint at_infinity() { return {}; }
    static RationalPoint affine(Rat x, Rat y) { return {false, std::move(x), std::move(y)}; }
    bool operator==(const RationalPoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

bool on_curve(const WeierstrassModel& m, const RationalPoint& p);
RationalPoint negate(const WeierstrassModel& m, const RationalPoint& p);
RationalPoint add_points(const WeierstrassModel& m, const RationalPoint& p,
                         const RationalPoint& q);
/// n*P by double-and-add; n may be negative.
RationalPoint scalar_mul(const WeierstrassModel& m, long n, const RationalPoint& p);
/// Smallest n <= bound with n*P = infinity, or nullopt ("exceeds bound").
std::optional<int> point_order(const WeierstrassModel& m, const RationalPoint& p,
                               int bound = 12);

/// Exact p-adic valuation of a nonzero rational; rejects non-prime p.
long valuation(const Rat& n, const Int& p);
/// Same, but permits n = 0 (returning the distinguished infinity).
Valuation valuation_or_infinity(const Rat& n, const Int& p);

/// Unchecked 2-adic and small-prime valuations of integers (p assumed prime).
Valuation val_p(const Int& n, const Int& p);
inline Valuation val2(const Int& n) { return val_p(n, 2); }

}  // namespace ecmin
