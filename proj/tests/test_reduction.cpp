// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <algorithm>

#include "ecmin/reduction.hpp"
#include "support.hpp"

using namespace ecmin;

namespace {

std::vector<Int> primes_of(const ReductionReport& rep) {
    std::vector<Int> out;
    for (const auto& ap : rep.additive) out.push_back(ap.p);
    return out;
}

CanonicalParams canon(TorsionFamily t, FamilyParams p) { return canonicalize(t, p); }

}  // namespace

TEST_CASE("allowed additive prime sets") {
    CHECK(allowed_additive_primes(TorsionFamily::C7) == std::vector<Int>{7});
    CHECK(allowed_additive_primes(TorsionFamily::C2xC6) == std::vector<Int>{Int(2), Int(3)});
    CHECK(allowed_additive_primes(TorsionFamily::C10) == std::vector<Int>{5});
    CHECK_THROWS_AS(allowed_additive_primes(TorsionFamily::C4), DomainError);
    CHECK_THROWS_AS(allowed_additive_primes(TorsionFamily::C2), DomainError);
}

TEST_CASE("additive primes of the worked examples") {
    CHECK(primes_of(additive_primes(canon(TorsionFamily::C4, {36864, 4585}))) ==
          std::vector<Int>{2});
    CHECK(primes_of(additive_primes(canon(TorsionFamily::C12, {6, 11}))) ==
          std::vector<Int>{3});
    CHECK(additive_primes(canon(TorsionFamily::C2xC8, {3, 1})).additive.empty());
    CHECK(additive_primes(canon(TorsionFamily::C2xC8, {4, 3})).additive.empty());
}

TEST_CASE("semistability rows") {
    CHECK(is_semistable(canon(TorsionFamily::C2xC2, {16, 1, 1})).semistable);
    CHECK(is_semistable(canon(TorsionFamily::C8, {2, 3})).semistable);  // v2(a) = 1
    CHECK(!is_semistable(canon(TorsionFamily::C12, {6, 11})).semistable);
    CHECK(!is_semistable(canon(TorsionFamily::C3_0, {5})).semistable);
    CHECK(is_semistable(canon(TorsionFamily::C2xC8, {7, 2})).semistable);
}

TEST_CASE("gcd-based general oracle") {
    CHECK(additive_primes_general({Rat(0), Rat(0), Rat(0), Rat(0), Rat(30)}) ==
          std::vector<Int>{Int(2), Int(3), Int(5)});

    const auto minimal1 = minimality(canon(TorsionFamily::C4, {36864, 4585}));
    CHECK(additive_primes_general(minimal1.minimal_model) == std::vector<Int>{2});

    CHECK(additive_primes_general({Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)}) ==
          std::vector<Int>{3});
}

TEST_CASE("parity corollary") {
    CHECK(corollary_parity_check(canon(TorsionFamily::C12, {6, 11})));
    CHECK(corollary_parity_check(canon(TorsionFamily::C7, {1, 2})));
    CHECK(corollary_parity_check(canon(TorsionFamily::C9, {2, 1})));
    CHECK_THROWS_AS(corollary_parity_check(canon(TorsionFamily::C5, {1, 2})),
                    DomainError);
}

TEST_CASE("closed form matches the oracle across a small grid") {
    // the full grid runs in the acceptance suite; keep a smoke sample here
    ecmin::test::Rng rng(7);
    for (const auto t : kAllFamilies) {
        int done = 0;
        while (done < 10) {
            FamilyParams raw{rng.nonzero(-20, 20)};
            if (family_arity(t) >= 2) raw.b = rng.nonzero(-20, 20);
            if (family_arity(t) == 3) raw.d = rng.nonzero(-10, 10);
            CanonicalParams cp;
            try {
                cp = canonicalize(t, raw);
            } catch (const DomainError&) {
                continue;
            }
            ++done;
            const auto rep = additive_primes(cp);
            const auto general = additive_primes_general(build_ET(cp.family, cp.params));
            CHECK(primes_of(rep) == general);
            CHECK(is_semistable(cp).semistable == rep.additive.empty());
            if (family_order(cp.family) > 4) {
                REQUIRE(!rep.allowed_set.empty());
                for (const auto& p : primes_of(rep))
                    CHECK(std::find(rep.allowed_set.begin(), rep.allowed_set.end(), p) !=
                          rep.allowed_set.end());
            }
        }
    }
}

TEST_CASE("flexor-oesterle at Q: many additive primes force small torsion") {
    // no-counterexample sweep on random canonical tuples
    ecmin::test::Rng rng(17);
    for (const auto t : kAllFamilies) {
        int done = 0;
        while (done < 15) {
            FamilyParams raw{rng.nonzero(-25, 25)};
            if (family_arity(t) >= 2) raw.b = rng.nonzero(-25, 25);
            if (family_arity(t) == 3) raw.d = rng.nonzero(-12, 12);
            CanonicalParams cp;
            try {
                cp = canonicalize(t, raw);
            } catch (const DomainError&) {
                continue;
            }
            ++done;
            const auto n = additive_primes(cp).additive.size();
            if (n >= 2) {
                const int order = family_order(t);
                CHECK((4 % order == 0 || 6 % order == 0));
            }
            if (n >= 3) {
                CHECK((t == TorsionFamily::C2 || t == TorsionFamily::C3 ||
                       t == TorsionFamily::C3_0 || t == TorsionFamily::C4 ||
                       t == TorsionFamily::C2xC2));
            }
        }
    }
}
