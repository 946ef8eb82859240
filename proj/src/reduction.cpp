// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ecmin/reduction.hpp"

#include <algorithm>

namespace ecmin {

namespace {

std::vector<Int> odd_prime_divisors(const Int& n) {
    std::vector<Int> out;
    if (n == 0) return out;
    for (const auto& [p, e] : factor(n).factors)
        if (p != 2) out.push_back(p);
    return out;
}

void add(std::vector<AdditivePrime>& v, Int p, std::string rule) {
    v.push_back({std::move(p), std::move(rule)});
}

std::vector<AdditivePrime> additive_c2(const FamilyParams& p) {
    std::vector<AdditivePrime> out;
    const Valuation va = val2(p.a), vb = val2(p.b);
    const Valuation vdiff = val2(p.b * p.b * p.d - p.a * p.a);
    if (vdiff >= 8 && congruent(p.a, 6, 8))
        add(out, 2, "C2:p=2:v2(b2d-a2)>=8,a=6(8)");
    else if (vdiff <= 7 && va == 1 && vb == 1)
        add(out, 2, "C2:p=2:v2(b2d-a2)<=7,v2(a)=v2(b)=1");
    else if (vb >= 3 && !congruent(p.a, 3, 4))
        add(out, 2, "C2:p=2:v2(b)>=3,a!=3(4)");
    else if (vb == 1 && va != 1)
        add(out, 2, "C2:p=2:v2(b)=1,v2(a)!=1");
    else if (vb == 0 || vb == 2)
        add(out, 2, "C2:p=2:v2(b)=0,2");
    for (const auto& q : odd_prime_divisors(gcd(p.a, p.b * p.d)))
        add(out, q, "C2:p!=2:vp(gcd(a,bd))>=1");
    return out;
}

std::vector<AdditivePrime> additive_c4(const FamilyParams& p) {
    std::vector<AdditivePrime> out;
    const Valuation va = val2(p.a);
    const auto [c, d] = squarefree_decompose(p.a);
    if (va.v % 2 == 1)
        add(out, 2, "C4:p=2:v2(a)odd");
    else if (va == 2 || va == 4 || va == 6)
        add(out, 2, "C4:p=2:v2(a)=2,4,6");
    else if (va >= 8 && congruent(p.b * d, 1, 4))
        add(out, 2, "C4:p=2:v2(a)>=8even,bd=1(4)");
    for (const auto& [q, e] : factor(p.a).factors)
        if (q != 2 && e % 2 == 1) add(out, q, "C4:p:vp(a)odd");
    return out;
}

std::vector<AdditivePrime> additive_c3(const FamilyParams& p) {
    std::vector<AdditivePrime> out;
    if (val_p(p.a, 3) >= 1) add(out, 3, "C3:p=3:v3(a)>=1");
    for (const auto& [q, e] : factor(p.a).factors)
        if (q != 3 && e % 3 != 0) add(out, q, "C3:p!=3:vp(a)!=0(3)");
    return out;
}

std::vector<AdditivePrime> additive_c3_0(const FamilyParams& p) {
    std::vector<AdditivePrime> out;
    bool saw3 = false;
    for (const auto& [q, e] : factor(p.a).factors)
        if (e == 1 || e == 2) {
            add(out, q, "C3_0:p:vp(a)=1,2");
            if (q == 3) saw3 = true;
        }
    if (!saw3) add(out, 3, "C3_0:p=3:v3(a)=0");
    return out;
}

}  // namespace

std::vector<Int> allowed_additive_primes(TorsionFamily t) {
    switch (t) {
        case TorsionFamily::C5: return {5};
        case TorsionFamily::C6: return {2, 3};
        case TorsionFamily::C7: return {7};
        case TorsionFamily::C8: return {2};
        case TorsionFamily::C9: return {3};
        case TorsionFamily::C10: return {5};
        case TorsionFamily::C12: return {2, 3};
        case TorsionFamily::C2xC4: return {2};
        case TorsionFamily::C2xC6: return {2, 3};
        case TorsionFamily::C2xC8: return {2};
        default: throw DomainError("allowed_additive_primes: defined for |T| > 4 only");
    }
}

ReductionReport additive_primes(const CanonicalParams& cp) {
    const FamilyParams& p = cp.params;
    if (family_invariants(cp.family, p).gamma == 0)
        throw DomainError("singular: gamma = 0");

    ReductionReport rep;
    auto& out = rep.additive;
    switch (cp.family) {
        case TorsionFamily::C2: out = additive_c2(p); break;
        case TorsionFamily::C3_0: out = additive_c3_0(p); break;
        case TorsionFamily::C3: out = additive_c3(p); break;
        case TorsionFamily::C4: out = additive_c4(p); break;
        case TorsionFamily::C5:
            if (val_p(p.a + 3 * p.b, 5) >= 1) add(out, 5, "C5:p=5:v5(a+3b)>=1");
            break;
        case TorsionFamily::C6:
            if (val2(p.a + p.b) == 1 || val2(p.a + p.b) == 2)
                add(out, 2, "C6:p=2:v2(a+b)=1,2");
            if (val_p(p.a, 3) >= 1) add(out, 3, "C6:p=3:v3(a)>=1");
            break;
        case TorsionFamily::C7:
            if (val_p(p.a + 4 * p.b, 7) >= 1) add(out, 7, "C7:p=7:v7(a+4b)>=1");
            break;
        case TorsionFamily::C8:
            if (val2(p.a) >= 2) add(out, 2, "C8:p=2:v2(a)>=2");
            break;
        case TorsionFamily::C9:
            if (val_p(p.a + p.b, 3) >= 1) add(out, 3, "C9:p=3:v3(a+b)>=1");
            break;
        case TorsionFamily::C10:
            if (val_p(p.a + p.b, 5) >= 1) add(out, 5, "C10:p=5:v5(a+b)>=1");
            break;
        case TorsionFamily::C12:
            if (val_p(p.a, 3) >= 1) add(out, 3, "C12:p=3:v3(a)>=1");
            break;
        case TorsionFamily::C2xC2: {
            const Valuation va = val2(p.a);
            if ((va >= 1 && va <= 3) || !congruent(p.b * p.d, 1, 4))
                add(out, 2, "C2xC2:p=2:v2(a)=1,2,3_or_bd!=1(4)");
            for (const auto& q : odd_prime_divisors(p.d))
                add(out, q, "C2xC2:p!=2:vp(d)=1");
            break;
        }
        case TorsionFamily::C2xC4:
            if (val2(p.a) >= 1 && val2(p.a + 4 * p.b) <= 3)
                add(out, 2, "C2xC4:p=2:v2(a)>=1,v2(a+4b)<=3");
            break;
        case TorsionFamily::C2xC6:
            if (val_p(p.b, 3) >= 1) add(out, 3, "C2xC6:p=3:v3(b)>=1");
            break;
        case TorsionFamily::C2xC8:
            break;  // always semistable
    }
    std::sort(out.begin(), out.end(),
              [](const AdditivePrime& x, const AdditivePrime& y) { return x.p < y.p; });
    rep.semistable = out.empty();
    if (family_order(cp.family) > 4) rep.allowed_set = allowed_additive_primes(cp.family);
    return rep;
}

SemistableResult is_semistable(const CanonicalParams& cp) {
    const FamilyParams& p = cp.params;
    if (family_invariants(cp.family, p).gamma == 0)
        throw DomainError("singular: gamma = 0");
    switch (cp.family) {
        case TorsionFamily::C2: {
            const Int g = gcd(p.a, p.b * p.d);
            const Valuation vdiff = val2(p.b * p.b * p.d - p.a * p.a);
            if (g == 2 && vdiff >= 8 && val2(p.a) == 1 && val2(p.b) == 1 &&
                congruent(p.a, 2, 8))
                return {true, "C2:gcd=2,v2(b2d-a2)>=8,v2(a)=v2(b)=1,a=2(8)"};
            if (g == 1 && val2(p.b) >= 3 && congruent(p.a, 3, 4))
                return {true, "C2:gcd=1,v2(b)>=3,a=3(4)"};
            return {false, "C2:otherwise"};
        }
        case TorsionFamily::C3_0:
            return {false, "C3_0:never"};
        case TorsionFamily::C3: {
            const auto& dec = *cp.decomposition;
            if (dec.d == 1 && dec.e == 1 && val_p(p.a, 3) == 0)
                return {true, "C3:a_cube,v3(a)=0"};
            return {false, "C3:otherwise"};
        }
        case TorsionFamily::C4: {
            const bool square = cp.decomposition->d == 1;
            if (square && val2(p.a) == 0) return {true, "C4:a_odd_square"};
            if (square && val2(p.a) >= 8 && congruent(p.b, 3, 4))
                return {true, "C4:a_square,v2(a)>=8,b=3(4)"};
            return {false, "C4:otherwise"};
        }
        case TorsionFamily::C5:
            return {val_p(p.a + 3 * p.b, 5) == 0, "C5:v5(a+3b)=0"};
        case TorsionFamily::C6:
            return {val_p(p.a, 3) == 0 && val2(p.a + p.b) != 1 && val2(p.a + p.b) != 2,
                    "C6:v3(a)=0,v2(a+b)!=1,2"};
        case TorsionFamily::C7:
            return {val_p(p.a + 4 * p.b, 7) == 0, "C7:v7(a+4b)=0"};
        case TorsionFamily::C8:
            return {val2(p.a) <= 1, "C8:v2(a)<=1"};
        case TorsionFamily::C9:
            return {val_p(p.a + p.b, 3) == 0, "C9:v3(a+b)=0"};
        case TorsionFamily::C10:
            return {val_p(p.a + p.b, 5) == 0, "C10:v5(a+b)=0"};
        case TorsionFamily::C12:
            return {val_p(p.a, 3) == 0, "C12:v3(a)=0"};
        case TorsionFamily::C2xC2:
            return {p.d == 1 && val2(p.a) >= 4 && congruent(p.b, 1, 4),
                    "C2xC2:d=1,v2(a)>=4,b=1(4)"};
        case TorsionFamily::C2xC4: {
            if (val2(p.a) == 0) return {true, "C2xC4:a_odd"};
            if (val2(p.a) == 2 && val2(p.a + 4 * p.b) >= 4)
                return {true, "C2xC4:v2(a)=2,v2(a+4b)>=4"};
            return {false, "C2xC4:otherwise"};
        }
        case TorsionFamily::C2xC6:
            return {val_p(p.b, 3) == 0, "C2xC6:v3(b)=0"};
        case TorsionFamily::C2xC8:
            return {true, "C2xC8:always"};
    }
    throw std::logic_error("unreachable");
}

std::vector<Int> additive_primes_general(const WeierstrassModel& m) {
    const auto res = lkc_minimal_model(m);
    std::vector<Int> out;
    if (res.min_c4 == 0) {
        for (const auto& [p, e] : res.min_disc_factored.factors) out.push_back(p);
        return out;
    }
    for (const auto& [p, e] : res.min_disc_factored.factors)
        if (res.min_c4 % p == 0) out.push_back(p);
    return out;
}

bool corollary_parity_check(const CanonicalParams& cp) {
    switch (cp.family) {
        case TorsionFamily::C7:
        case TorsionFamily::C9:
        case TorsionFamily::C10:
        case TorsionFamily::C12:
        case TorsionFamily::C2xC6:
        case TorsionFamily::C2xC8:
            break;
        default:
            throw DomainError("corollary_parity_check: family not covered");
    }
    const auto res = minimality(cp);
    return mpz_odd_p(res.min_c4.get_mpz_t()) && mpz_odd_p(res.min_c6.get_mpz_t());
}

}  // namespace ecmin
