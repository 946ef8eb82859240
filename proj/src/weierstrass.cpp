// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ecmin/weierstrass.hpp"

#include "ecmin/factor.hpp"

namespace ecmin {

bool WeierstrassModel::is_integral() const {
    return is_integer(a1) && is_integer(a2) && is_integer(a3) && is_integer(a4) &&
           is_integer(a6);
}

CurveInvariants invariants(const WeierstrassModel& m) {
    const Rat b2 = m.a1 * m.a1 + 4 * m.a2;
    const Rat b4 = 2 * m.a4 + m.a1 * m.a3;
    const Rat b6 = m.a3 * m.a3 + 4 * m.a6;
    const Rat b8 = m.a1 * m.a1 * m.a6 + 4 * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 +
                   m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
    CurveInvariants inv;
    inv.c4 = b2 * b2 - 24 * b4;
    inv.c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    inv.disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    if (inv.disc != 0) inv.j = inv.c4 * inv.c4 * inv.c4 / inv.disc;
    return inv;
}

WeierstrassModel transform(const WeierstrassModel& m, const AdmissibleChange& c) {
    if (c.u == 0) throw DomainError("admissible change requires u != 0");
    const Rat &u = c.u, &r = c.r, &s = c.s, &w = c.w;
    const Rat u2 = u * u, u3 = u2 * u;
    WeierstrassModel out;
    out.a1 = (m.a1 + 2 * s) / u;
    out.a2 = (m.a2 - s * m.a1 + 3 * r - s * s) / u2;
    out.a3 = (m.a3 + r * m.a1 + 2 * w) / u3;
    out.a4 = (m.a4 - s * m.a3 + 2 * r * m.a2 - (w + r * s) * m.a1 + 3 * r * r -
              2 * s * w) /
             (u2 * u2);
    out.a6 = (m.a6 + r * m.a4 + r * r * m.a2 + r * r * r - w * (m.a3 + w + r * m.a1)) /
             (u3 * u3);
    return out;
}

AdmissibleChange inverse(const AdmissibleChange& c) {
    if (c.u == 0) throw DomainError("admissible change requires u != 0");
    const Rat u2 = c.u * c.u;
    return {1 / c.u, -c.r / u2, -c.s / c.u, (c.r * c.s - c.w) / (u2 * c.u)};
}

AdmissibleChange compose(const AdmissibleChange& a, const AdmissibleChange& b) {
    const Rat u1 = a.u, u1sq = a.u * a.u;
    return {a.u * b.u, u1sq * b.r + a.r, u1 * b.s + a.s,
            u1sq * u1 * b.w + u1sq * a.s * b.r + a.w};
}

bool on_curve(const WeierstrassModel& m, const RationalPoint& p) {
    if (p.infinity) return true;
    const Rat lhs = p.y * p.y + m.a1 * p.x * p.y + m.a3 * p.y;
    const Rat rhs = p.x * p.x * p.x + m.a2 * p.x * p.x + m.a4 * p.x + m.a6;
    return lhs == rhs;
}

RationalPoint negate(const WeierstrassModel& m, const RationalPoint& p) {
    if (p.infinity) return p;
    return RationalPoint::affine(p.x, -p.y - m.a1 * p.x - m.a3);
}

RationalPoint add_points(const WeierstrassModel& m, const RationalPoint& p,
                         const RationalPoint& q) {
    if (invariants(m).disc == 0) throw DomainError("add_points: singular model");
    if (!on_curve(m, p) || !on_curve(m, q)) throw DomainError("add_points: point not on curve");
    if (p.infinity) return q;
    if (q.infinity) return p;
    if (q == negate(m, p)) return RationalPoint::at_infinity();

    Rat lam, nu;
    if (p.x != q.x) {
        lam = (q.y - p.y) / (q.x - p.x);
        nu = (p.y * q.x - q.y * p.x) / (q.x - p.x);
    } else {
        const Rat den = 2 * p.y + m.a1 * p.x + m.a3;
        lam = (3 * p.x * p.x + 2 * m.a2 * p.x + m.a4 - m.a1 * p.y) / den;
        nu = (-p.x * p.x * p.x + m.a4 * p.x + 2 * m.a6 - m.a3 * p.y) / den;
    }
    const Rat x3 = lam * lam + m.a1 * lam - m.a2 - p.x - q.x;
    const Rat y3 = -(lam + m.a1) * x3 - nu - m.a3;
    return RationalPoint::affine(x3, y3);
}

RationalPoint scalar_mul(const WeierstrassModel& m, long n, const RationalPoint& p) {
    if (n < 0) return scalar_mul(m, -n, negate(m, p));
    RationalPoint acc = RationalPoint::at_infinity();
    RationalPoint base = p;
    while (n > 0) {
        if (n & 1) acc = add_points(m, acc, base);
        n >>= 1;
        if (n > 0) base = add_points(m, base, base);
    }
    return acc;
}

std::optional<int> point_order(const WeierstrassModel& m, const RationalPoint& p,
                               int bound) {
    if (!on_curve(m, p)) throw DomainError("point_order: point not on curve");
    RationalPoint q = p;
    for (int n = 1; n <= bound; ++n) {
        if (q.infinity) return n;
        q = add_points(m, q, p);
    }
    return std::nullopt;
}

Valuation val_p(const Int& n, const Int& p) {
    if (n == 0) return Valuation::infinity();
    Int rem;
    const auto v = mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    return {static_cast<long>(v), false};
}

Valuation valuation_or_infinity(const Rat& n, const Int& p) {
    if (p < 2 || !is_prime(p)) throw DomainError("valuation: p must be prime");
    if (n == 0) return Valuation::infinity();
    return {val_p(n.get_num(), p).v - val_p(n.get_den(), p).v, false};
}

long valuation(const Rat& n, const Int& p) {
    if (n == 0) throw DomainError("valuation: n must be nonzero");
    return valuation_or_infinity(n, p).v;
}

}  // namespace ecmin
