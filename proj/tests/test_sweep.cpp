// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>

#include <set>
#include <string>

#include "ecmin/sweep.hpp"

using namespace ecmin;

TEST_CASE("enumeration yields sorted, unique, canonical tuples") {
    for (const auto t : kAllFamilies) {
        const auto tuples = enumerate_canonical(t, 8, 5);
        CHECK(!tuples.empty());
        for (size_t i = 0; i < tuples.size(); ++i) {
            CHECK(is_canonical(t, tuples[i]));
            if (i > 0) {
                const auto &x = tuples[i - 1], &y = tuples[i];
                CHECK((x.a < y.a || (x.a == y.a && x.b < y.b) ||
                       (x.a == y.a && x.b == y.b && x.d < y.d)));
            }
        }
    }
}

TEST_CASE("branch extras reach the deep 2-adic rows") {
    bool saw_u4 = false, saw_2c = false, saw_u64 = false;
    for (const auto& p : enumerate_canonical(TorsionFamily::C2, 8, 5))
        if (compute_uT(assume_canonical(TorsionFamily::C2, p)).u == 4) saw_u4 = true;
    for (const auto& p : enumerate_canonical(TorsionFamily::C4, 8, 5)) {
        const auto cp = assume_canonical(TorsionFamily::C4, p);
        if (compute_uT(cp).u == 2 * cp.decomposition->c) saw_2c = true;
    }
    for (const auto& p : enumerate_canonical(TorsionFamily::C2xC8, 8, 5))
        if (compute_uT(assume_canonical(TorsionFamily::C2xC8, p)).u == 64)
            saw_u64 = true;
    CHECK(saw_u4);
    CHECK(saw_2c);
    CHECK(saw_u64);
}

TEST_CASE("every u_T branch and every additive-reduction row fires on the grid") {
    std::set<std::string> branches, rules;
    for (const auto t : kAllFamilies) {
        for (const auto& p : enumerate_canonical(t, 16, 8)) {
            const auto cp = assume_canonical(t, p);
            branches.insert(compute_uT(cp).branch);
            for (const auto& ap : additive_primes(cp).additive) rules.insert(ap.rule);
        }
    }
    const char* expected_branches[] = {
        "C5:u1", "C7:u1", "C9:u1", "C3_0:u1", "C3:u=c2d",
        "C4:u=2c:v2(a)>=8even,bd=3(4)", "C4:u=c:default",
        "C2:u4:v2(b2d-a2)>=8,v2(a)=v2(b)=1,a=2(8)",
        "C2:u2:v2(b2d-a2)>=8,v2(a)=v2(b)=1,a=6(8)",
        "C2:u2:4<=v2(b2d-a2)<=7,v2(a)=v2(b)=1", "C2:u2:v2(b)>=3,a=3(4)",
        "C2:u1:default", "C6:u2:v2(a+b)>=3", "C6:u1:v2(a+b)<=2", "C8:u2:v2(a)=1",
        "C8:u1:v2(a)!=1", "C10:u2:v2(a)>=1", "C10:u1:v2(a)=0", "C12:u2:v2(a)>=1",
        "C12:u1:v2(a)=0", "C2xC2:u2:v2(a)>=4,bd=1(4)", "C2xC2:u1:default",
        "C2xC4:u4:v2(a)=2,v2(a+4b)>=4", "C2xC4:u2:v2(a)>=2,v2(a+4b)<=3",
        "C2xC4:u1:v2(a)<=1", "C2xC6:u16:v2(a+b)=1", "C2xC6:u4:v2(a+b)>=2",
        "C2xC6:u1:v2(a+b)=0", "C2xC8:u64:v2(a)>=2", "C2xC8:u16:v2(a)=1",
        "C2xC8:u1:v2(a)=0"};
    for (const auto* b : expected_branches) {
        INFO("missing branch ", b);
        CHECK(branches.count(b) == 1);
    }
    const char* expected_rules[] = {
        "C2:p=2:v2(b2d-a2)>=8,a=6(8)", "C2:p=2:v2(b2d-a2)<=7,v2(a)=v2(b)=1",
        "C2:p=2:v2(b)>=3,a!=3(4)", "C2:p=2:v2(b)=1,v2(a)!=1", "C2:p=2:v2(b)=0,2",
        "C2:p!=2:vp(gcd(a,bd))>=1", "C3_0:p:vp(a)=1,2", "C3_0:p=3:v3(a)=0",
        "C3:p=3:v3(a)>=1", "C3:p!=3:vp(a)!=0(3)", "C4:p=2:v2(a)odd",
        "C4:p=2:v2(a)=2,4,6", "C4:p=2:v2(a)>=8even,bd=1(4)", "C4:p:vp(a)odd",
        "C5:p=5:v5(a+3b)>=1", "C6:p=2:v2(a+b)=1,2", "C6:p=3:v3(a)>=1",
        "C7:p=7:v7(a+4b)>=1", "C8:p=2:v2(a)>=2", "C9:p=3:v3(a+b)>=1",
        "C10:p=5:v5(a+b)>=1", "C12:p=3:v3(a)>=1",
        "C2xC2:p=2:v2(a)=1,2,3_or_bd!=1(4)", "C2xC2:p!=2:vp(d)=1",
        "C2xC4:p=2:v2(a)>=1,v2(a+4b)<=3", "C2xC6:p=3:v3(b)>=1"};
    for (const auto* r : expected_rules) {
        INFO("missing rule ", r);
        CHECK(rules.count(r) == 1);
    }
}

TEST_CASE("sweep results are independent of the worker count") {
    for (const auto t : {TorsionFamily::C6, TorsionFamily::C2xC4}) {
        const auto one = sweep_family(t, 10, kCheckAll, 1);
        const auto many = sweep_family(t, 10, kCheckAll, 4);
        CHECK(one.tuples == many.tuples);
        CHECK(one.checks == many.checks);
        CHECK(one.failures == many.failures);
        CHECK(one.ok());
    }
}
