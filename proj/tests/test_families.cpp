// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include "ecmin/factor.hpp"
#include "ecmin/families.hpp"
#include "support.hpp"

using namespace ecmin;
using ecmin::test::Rng;

namespace {

FamilyParams random_params(Rng& rng, TorsionFamily t, long mag) {
    FamilyParams p{rng.nonzero(-mag, mag)};
    if (family_arity(t) >= 2) p.b = rng.nonzero(-mag, mag);
    if (family_arity(t) == 3) p.d = rng.nonzero(-mag, mag);
    return p;
}

}  // namespace

TEST_CASE("model rows") {
    const auto c3_0 = build_ET(TorsionFamily::C3_0, {1});
    CHECK(c3_0 == WeierstrassModel{Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)});

    const auto full2 = build_ET(TorsionFamily::C2xC2, {2, 5, 3});
    CHECK(full2.a2 == Rat(2 * 3 + 5 * 3));
    CHECK(full2.a4 == Rat(2 * 5 * 9));
    CHECK(full2.a1 == 0);

    const auto ex1 = build_ET(TorsionFamily::C4, {36864, 4585});
    CHECK(ex1.a1 == Rat(36864));
    CHECK(ex1.a2 == Rat(Int(-36864) * 4585));
    CHECK(ex1.a3 == Rat(Int(-36864) * 36864 * 4585));
    CHECK(ex1.a4 == 0);
    CHECK(ex1.a6 == 0);
}

TEST_CASE("table invariants at pinned values") {
    const auto g1 = family_invariants(TorsionFamily::C2xC2, {6, 1, 1});
    CHECK(g1.gamma == Int(16) * 36 * 1 * 1 * 25);  // 14400

    const auto g2 = family_invariants(TorsionFamily::C6, {3, -1});
    CHECK(g2.alpha == 0);
    CHECK(g2.gamma == Int(-432));  // -2^4 3^3

    const auto g3 = family_invariants(TorsionFamily::C5, {1, 0});
    CHECK(g3.gamma == 0);  // singular: (ab)^5 factor
}

TEST_CASE("tables match the generic invariant formulas on random tuples") {
    Rng rng(101);
    for (const auto t : kAllFamilies) {
        for (int i = 0; i < 150; ++i) {
            const auto p = random_params(rng, t, 60);
            const auto fi = family_invariants(t, p);
            const auto inv = invariants(build_ET(t, p));
            CHECK(inv.c4 == fi.alpha);
            CHECK(inv.c6 == fi.beta);
            CHECK(inv.disc == fi.gamma);
            CHECK(fi.alpha * fi.alpha * fi.alpha - fi.beta * fi.beta ==
                  1728 * fi.gamma);
        }
    }
}

TEST_CASE("sign symmetry alpha(-a,b) = alpha(a,-b)") {
    Rng rng(55);
    for (const auto t : kAllFamilies) {
        if (t == TorsionFamily::C2 || t == TorsionFamily::C2xC2 ||
            t == TorsionFamily::C3_0)
            continue;
        for (int i = 0; i < 50; ++i) {
            const Int a = rng.nonzero(-40, 40), b = rng.nonzero(-40, 40);
            const auto lhs = family_invariants(t, {-a, b});
            const auto rhs = family_invariants(t, {a, -b});
            CHECK(lhs.alpha == rhs.alpha);
            CHECK(lhs.beta == rhs.beta);
        }
    }
}

TEST_CASE("universal curves") {
    const auto c4 = universal_curve(TorsionFamily::C4, Rat(3, 5));
    CHECK(c4.a1 == 1);                 // g = 0
    CHECK(c4.a2 == Rat(-3, 5));        // f = t
    CHECK(c4.a3 == Rat(-3, 5));

    const auto ex1 = universal_curve(TorsionFamily::C4, Rat(4585, 36864));
    CHECK(ex1.a3 == Rat(-4585, 36864));

    const auto ex2 = universal_curve(TorsionFamily::C12, Rat(11, 6));
    CHECK(ex2.a1 == Rat(6021, 125));
    CHECK(ex2.a2 == Rat(-430408, 1875));
    CHECK(ex2.a3 == Rat(-430408, 1875));

    const auto c3 = universal_curve(TorsionFamily::C3, Rat(2));
    CHECK(c3.a1 == 1);
    CHECK(c3.a3 == 2);
    CHECK(c3.a2 == 0);

    CHECK_THROWS_AS(universal_curve(TorsionFamily::C8, Rat(0)), DomainError);
    CHECK_THROWS_AS(universal_curve(TorsionFamily::C12, Rat(1)), DomainError);
    CHECK_THROWS_AS(universal_curve(TorsionFamily::C4, Rat(0)), DomainError);  // cusp
    CHECK_THROWS_AS(universal_curve(TorsionFamily::C2, Rat(2)), DomainError);
}

TEST_CASE("w_T rescaling identifies X_{b/a} with E_T") {
    CHECK(rescale_factor_wT(TorsionFamily::C5, 7, 3) == 7);
    CHECK(rescale_factor_wT(TorsionFamily::C9, 2, 9) == 8);
    CHECK(rescale_factor_wT(TorsionFamily::C8, 2, 3) == 6);

    const auto scaled = transform(universal_curve(TorsionFamily::C8, Rat(3, 2)),
                                  AdmissibleChange::scaling(Rat(1, 6)));
    CHECK(scaled == build_ET(TorsionFamily::C8, {2, 3}));

    Rng rng(77);
    for (const auto t : kAllFamilies) {
        if (t == TorsionFamily::C2 || t == TorsionFamily::C2xC2 ||
            t == TorsionFamily::C3_0)
            continue;
        int done = 0;
        while (done < 25) {
            Int a = rng.nonzero(-30, 30), b = rng.nonzero(-30, 30);
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            if (g != 1) continue;
            if (family_invariants(t, {a, b}).gamma == 0) continue;
            Int w;
            try {
                w = rescale_factor_wT(t, a, b);
            } catch (const DomainError&) {
                continue;
            }
            ++done;
            const auto x = universal_curve(t, Rat(b) / Rat(a));
            CHECK(transform(x, AdmissibleChange::scaling(Rat(1) / Rat(w))) ==
                  build_ET(t, {a, b}));
        }
    }
}

TEST_CASE("delta_T and the gcd divisibility consequence") {
    CHECK(delta_constant(TorsionFamily::C5).constant == 5);
    CHECK(delta_constant(TorsionFamily::C5).multiplier == 0);
    CHECK(delta_constant(TorsionFamily::C2xC8).constant == 2);
    CHECK(delta_constant(TorsionFamily::C7).constant == 7);
    CHECK(delta_constant(TorsionFamily::C3).multiplier == 'a');
    CHECK(delta_constant(TorsionFamily::C2xC2).multiplier == 'd');
    CHECK_THROWS_AS(delta_constant(TorsionFamily::C3_0), DomainError);

    // constant-delta families: primes of gcd(alpha,gamma) and gcd(beta,gamma)
    // divide delta_T, for coprime (a,b)
    Rng rng(303);
    for (const auto t : {TorsionFamily::C5, TorsionFamily::C6, TorsionFamily::C7,
                         TorsionFamily::C8, TorsionFamily::C9, TorsionFamily::C10,
                         TorsionFamily::C12, TorsionFamily::C2xC4,
                         TorsionFamily::C2xC6, TorsionFamily::C2xC8}) {
        const Int delta = delta_constant(t).constant;
        int done = 0;
        while (done < 40) {
            const Int a = rng.nonzero(-25, 25), b = rng.nonzero(-25, 25);
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            if (g != 1) continue;
            const auto fi = family_invariants(t, {a, b});
            if (fi.gamma == 0) continue;
            ++done;
            Int g1, g2;
            mpz_gcd(g1.get_mpz_t(), fi.alpha.get_mpz_t(), fi.gamma.get_mpz_t());
            mpz_gcd(g2.get_mpz_t(), fi.beta.get_mpz_t(), fi.gamma.get_mpz_t());
            for (const auto& [p, e] : factor(g1).factors) CHECK(delta % p == 0);
            for (const auto& [p, e] : factor(g2).factors) CHECK(delta % p == 0);
        }
    }
}

TEST_CASE("marked point (0,0) has the family's torsion order") {
    Rng rng(404);
    for (const auto t : kAllFamilies) {
        int done = 0;
        while (done < 15) {
            auto p = random_params(rng, t, 12);
            if (family_arity(t) >= 2) {
                Int g;
                mpz_gcd(g.get_mpz_t(), p.a.get_mpz_t(), p.b.get_mpz_t());
                if (g != 1) continue;
            }
            if (family_invariants(t, p).gamma == 0) continue;
            ++done;
            const auto n = point_order(build_ET(t, p), RationalPoint::affine(0, 0));
            REQUIRE(n.has_value());
            CHECK(*n == marked_point_order(t));
        }
    }
}
