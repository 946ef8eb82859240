// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include "ecmin/weierstrass.hpp"
#include "support.hpp"

using namespace ecmin;
using ecmin::test::Rng;
using ecmin::test::make_model;

TEST_CASE("invariants of reference models") {
    // y^2 = x(x+6)(x+1) = x^3 + 7x^2 + 6x
    const auto frey = make_model(0, 7, 0, 6, 0);
    CHECK(invariants(frey).disc == Rat(14400));  // 16 * 6^2 * 1^2 * 5^2

    const auto cubic = make_model(0, 0, 1, 0, 0);  // y^2 + y = x^3
    const auto inv = invariants(cubic);
    CHECK(inv.c4 == 0);
    CHECK(inv.c6 == Rat(-216));
    CHECK(inv.disc == Rat(-27));
    CHECK(inv.j.has_value());
    CHECK(*inv.j == 0);

    const auto zero = make_model(0, 0, 0, 0, 0);
    CHECK(invariants(zero).disc == 0);
    CHECK(!invariants(zero).j.has_value());
}

TEST_CASE("1728 disc = c4^3 - c6^2 on arbitrary (including singular) models") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        const WeierstrassModel m{rng.rational(), rng.rational(), rng.rational(),
                                 rng.rational(), rng.rational()};
        const auto inv = invariants(m);
        CHECK(1728 * inv.disc == inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6);
    }
}

TEST_CASE("transform identity and u scaling") {
    const auto m = make_model(1, -2, 3, 4, -6);
    CHECK(transform(m, AdmissibleChange::identity()) == m);

    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const WeierstrassModel r{rng.rational(), rng.rational(), rng.rational(),
                                 rng.rational(), rng.rational()};
        const AdmissibleChange c{rng.nonzero_rational(), rng.rational(),
                                 rng.rational(), rng.rational()};
        const auto inv0 = invariants(r);
        const auto inv1 = invariants(transform(r, c));
        const Rat u4 = pow_rat(c.u, 4);
        CHECK(inv1.c4 == inv0.c4 / u4);
        CHECK(inv1.c6 == inv0.c6 / (u4 * c.u * c.u));
        CHECK(inv1.disc == inv0.disc / pow_rat(c.u, 12));
        if (inv0.disc != 0) CHECK(*inv1.j == *inv0.j);
    }
}

TEST_CASE("transform round-trips through the symbolic inverse") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const WeierstrassModel m{rng.rational(), rng.rational(), rng.rational(),
                                 rng.rational(), rng.rational()};
        const AdmissibleChange c{rng.nonzero_rational(), rng.rational(),
                                 rng.rational(), rng.rational()};
        CHECK(transform(transform(m, c), inverse(c)) == m);

        const AdmissibleChange c2{rng.nonzero_rational(), rng.rational(),
                                  rng.rational(), rng.rational()};
        CHECK(transform(transform(m, c), c2) == transform(m, compose(c, c2)));
    }
}

TEST_CASE("transform rejects u = 0") {
    CHECK_THROWS_AS(transform(make_model(0, 0, 0, 0, 0), AdmissibleChange{0, 0, 0, 0}),
                    DomainError);
}

TEST_CASE("documented transforms of the full 2-torsion family") {
    // x -> x - ad maps E(a,b,d) onto E(b-a,-a,d)
    const Int a = 1, b = 3, d = 1;
    const auto m = build_ET(TorsionFamily::C2xC2, {a, b, d});
    const auto moved = transform(m, {1, Rat(-a * d), 0, 0});
    const auto expect = build_ET(TorsionFamily::C2xC2, {b - a, -a, d});
    CHECK(moved == expect);

    // (u,r,s,w) = (2,0,1,0) with v2(a) >= 4, bd = 1 mod 4
    const auto big = build_ET(TorsionFamily::C2xC2, {16, 1, 1});
    const auto small = transform(big, {2, 0, 1, 0});
    CHECK(small.a1 == 1);
    CHECK(small.a2 == Rat(16 + 1 - 1) / 4);
    CHECK(small.a4 == Rat(16 * 1 * 1) / 16);
    CHECK(small.a3 == 0);
    CHECK(small.a6 == 0);
}

TEST_CASE("p-adic valuation") {
    CHECK(valuation(Rat(36864), 2) == 12);
    CHECK(valuation(Rat(1), 97) == 0);
    CHECK(valuation(Rat(8, 3), 3) == -1);
    CHECK_THROWS_AS(valuation(Rat(12), 4), DomainError);   // not prime
    CHECK_THROWS_AS(valuation(Rat(0), 2), DomainError);    // zero via strict entry
    CHECK(valuation_or_infinity(Rat(0), 5).infinite);
    CHECK(valuation_or_infinity(Rat(-36864), 3) == 2);
}

TEST_CASE("group law basics") {
    const auto e_c2 = build_ET(TorsionFamily::C2, {3, 1, 2});
    const auto origin = RationalPoint::affine(0, 0);
    CHECK(add_points(e_c2, origin, RationalPoint::at_infinity()) == origin);
    CHECK(add_points(e_c2, origin, origin).infinity);  // P = -P at 2-torsion

    const auto e_c5 = build_ET(TorsionFamily::C5, {1, 2});
    CHECK(scalar_mul(e_c5, 5, origin).infinity);
    CHECK(!scalar_mul(e_c5, 3, origin).infinity);

    CHECK_THROWS_AS(add_points(e_c5, RationalPoint::affine(17, 5), origin), DomainError);
}

TEST_CASE("group law properties on random curves through random points") {
    Rng rng(23);
    int done = 0;
    while (done < 40) {
        const RationalPoint p = RationalPoint::affine(rng.rational(8), rng.rational(8));
        const RationalPoint q = RationalPoint::affine(rng.rational(8), rng.rational(8));
        if (p.x == q.x) continue;
        const auto m = ecmin::test::curve_through(rng, p, q);
        ++done;
        CHECK(add_points(m, p, q) == add_points(m, q, p));
        const auto r = add_points(m, p, add_points(m, p, q));
        const auto l = add_points(m, add_points(m, p, p), q);
        CHECK(l == r);
        // double-and-add equals repeated addition
        RationalPoint acc = RationalPoint::at_infinity();
        for (int n = 0; n <= 7; ++n) {
            CHECK(scalar_mul(m, n, p) == acc);
            acc = add_points(m, acc, p);
        }
    }
}

TEST_CASE("group law associativity on independent random triples") {
    Rng rng(41);
    int done = 0;
    while (done < 30) {
        const auto p = RationalPoint::affine(rng.rational(6), rng.rational(6));
        const auto q = RationalPoint::affine(rng.rational(6), rng.rational(6));
        const auto r = RationalPoint::affine(rng.rational(6), rng.rational(6));
        const auto m = ecmin::test::curve_through3(rng, p, q, r);
        if (!m) continue;
        ++done;
        CHECK(add_points(*m, add_points(*m, p, q), r) ==
              add_points(*m, p, add_points(*m, q, r)));
        CHECK(add_points(*m, p, q) == add_points(*m, q, p));
        CHECK(add_points(*m, p, negate(*m, p)).infinity);
    }
}

TEST_CASE("point_order") {
    CHECK(point_order(build_ET(TorsionFamily::C5, {1, 2}),
                      RationalPoint::at_infinity()) == 1);
    CHECK(point_order(build_ET(TorsionFamily::C7, {2, 1}),
                      RationalPoint::affine(0, 0)) == 7);

    // section 8 example: order-4 point on a short Weierstrass curve
    const WeierstrassModel ex1{Rat(0), Rat(0), Rat(0), Rat(Int("-1900650154752")),
                               Rat(Int("990015042347311104"))};
    const auto p = RationalPoint::affine(Rat(222288), Rat(760596480));
    REQUIRE(on_curve(ex1, p));
    CHECK(point_order(ex1, p) == 4);

    // a non-torsion point exceeds the Mazur bound
    const auto gen = make_model(0, 0, 0, 0, 2);  // y^2 = x^3 + 2, rank 1
    const auto g = RationalPoint::affine(-1, 1);
    REQUIRE(on_curve(gen, g));
    CHECK(!point_order(gen, g).has_value());
}
