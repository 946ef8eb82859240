// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ecmin/minimality.hpp"

#include <algorithm>

namespace ecmin {

namespace {

UTResult ut_c2(const FamilyParams& p) {
    const Valuation va = val2(p.a), vb = val2(p.b);
    const Valuation vdiff = val2(p.b * p.b * p.d - p.a * p.a);
    const bool deep = va == 1 && vb == 1 && vdiff >= 8;
    if (deep && congruent(p.a, 2, 8))
        return {4, "C2:u4:v2(b2d-a2)>=8,v2(a)=v2(b)=1,a=2(8)"};
    if (deep && congruent(p.a, 6, 8))
        return {2, "C2:u2:v2(b2d-a2)>=8,v2(a)=v2(b)=1,a=6(8)"};
    if (va == 1 && vb == 1 && vdiff >= 4 && vdiff <= 7)
        return {2, "C2:u2:4<=v2(b2d-a2)<=7,v2(a)=v2(b)=1"};
    if (vb >= 3 && congruent(p.a, 3, 4))
        return {2, "C2:u2:v2(b)>=3,a=3(4)"};
    return {1, "C2:u1:default"};
}

UTResult ut_c4(const CanonicalParams& cp) {
    const Int &c = cp.decomposition->c, &d = cp.decomposition->d;
    const Valuation va = val2(cp.params.a);
    if (va >= 8 && va.v % 2 == 0 && congruent(cp.params.b * d, 3, 4))
        return {2 * c, "C4:u=2c:v2(a)>=8even,bd=3(4)"};
    return {c, "C4:u=c:default"};
}

}  // namespace

UTResult compute_uT(const CanonicalParams& cp) {
    const FamilyParams& p = cp.params;
    if (family_invariants(cp.family, p).gamma == 0)
        throw DomainError("singular: gamma = 0");
    switch (cp.family) {
        case TorsionFamily::C5: return {1, "C5:u1"};
        case TorsionFamily::C7: return {1, "C7:u1"};
        case TorsionFamily::C9: return {1, "C9:u1"};
        case TorsionFamily::C3_0: return {1, "C3_0:u1"};
        case TorsionFamily::C3: {
            const auto& dec = *cp.decomposition;
            return {dec.c * dec.c * dec.d, "C3:u=c2d"};
        }
        case TorsionFamily::C4: return ut_c4(cp);
        case TorsionFamily::C2: return ut_c2(p);
        case TorsionFamily::C6:
            if (val2(p.a + p.b) >= 3) return {2, "C6:u2:v2(a+b)>=3"};
            return {1, "C6:u1:v2(a+b)<=2"};
        case TorsionFamily::C8:
            if (val2(p.a) == 1) return {2, "C8:u2:v2(a)=1"};
            return {1, "C8:u1:v2(a)!=1"};
        case TorsionFamily::C10:
            if (val2(p.a) >= 1) return {2, "C10:u2:v2(a)>=1"};
            return {1, "C10:u1:v2(a)=0"};
        case TorsionFamily::C12:
            if (val2(p.a) >= 1) return {2, "C12:u2:v2(a)>=1"};
            return {1, "C12:u1:v2(a)=0"};
        case TorsionFamily::C2xC2:
            if (val2(p.a) >= 4 && congruent(p.b * p.d, 1, 4))
                return {2, "C2xC2:u2:v2(a)>=4,bd=1(4)"};
            return {1, "C2xC2:u1:default"};
        case TorsionFamily::C2xC4: {
            const Valuation va = val2(p.a);
            if (va == 2 && val2(p.a + 4 * p.b) >= 4)
                return {4, "C2xC4:u4:v2(a)=2,v2(a+4b)>=4"};
            if (va >= 2 && val2(p.a + 4 * p.b) <= 3)
                return {2, "C2xC4:u2:v2(a)>=2,v2(a+4b)<=3"};
            return {1, "C2xC4:u1:v2(a)<=1"};
        }
        case TorsionFamily::C2xC6: {
            const Valuation v = val2(p.a + p.b);
            if (v == 1) return {16, "C2xC6:u16:v2(a+b)=1"};
            if (v >= 2) return {4, "C2xC6:u4:v2(a+b)>=2"};
            return {1, "C2xC6:u1:v2(a+b)=0"};
        }
        case TorsionFamily::C2xC8: {
            const Valuation v = val2(p.a);
            if (v >= 2) return {64, "C2xC8:u64:v2(a)>=2"};
            if (v == 1) return {16, "C2xC8:u16:v2(a)=1"};
            return {1, "C2xC8:u1:v2(a)=0"};
        }
    }
    throw std::logic_error("unreachable");
}

FactoredInteger minimal_discriminant(const CanonicalParams& p) {
    const auto ut = compute_uT(p);
    const Int gamma = family_invariants(p.family, p.params).gamma;
    const Int u12 = pow_int(ut.u, 12);
    if (gamma % u12 != 0)
        throw std::logic_error("uT^12 does not divide gamma");
    return factor(gamma / u12);
}

WeierstrassModel global_minimal_model(const CanonicalParams& cp) {
    const FamilyParams& p = cp.params;
    const auto [u, branch] = compute_uT(cp);

    Rat r = 0, s = 0;
    switch (cp.family) {
        case TorsionFamily::C2: {
            const bool tail = val2(p.b) >= 3;
            if (tail && congruent(p.a, 7, 8)) r = 1;
            if (tail && congruent(p.a, 3, 8)) r = -3;
            if (tail && congruent(p.a, 3, 4)) s = 1;
            if (u != 1 && val2(p.b) == 1) s = 2;
            break;
        }
        case TorsionFamily::C4:
            // the u = 2c branch shears by s = c; s = 2c breaks integrality
            // of a2 exactly when bd = 3 mod 4
            if (u == 2 * cp.decomposition->c) s = Rat(cp.decomposition->c);
            break;
        case TorsionFamily::C2xC2:
            if (u == 2) s = 1;
            break;
        default:
            break;
    }

    const auto model = transform(build_ET(cp.family, p), {Rat(u), r, s, 0});
    if (!model.is_integral())
        throw std::logic_error("global minimal model branch produced a non-integral model");
    return model;
}

MinimalityResult minimality(const CanonicalParams& cp) {
    MinimalityResult out;
    const auto ut = compute_uT(cp);
    out.uT = ut.u;
    out.branch = ut.branch;
    out.minimal_model = global_minimal_model(cp);

    const auto inv = family_invariants(cp.family, cp.params);
    const Int u4 = pow_int(out.uT, 4);
    const Int u6 = u4 * out.uT * out.uT;
    const Int u12 = u6 * u6;
    if (inv.alpha % u4 != 0 || inv.beta % u6 != 0 || inv.gamma % u12 != 0)
        throw std::logic_error("uT does not divide the family invariants");
    out.min_c4 = inv.alpha / u4;
    out.min_c6 = inv.beta / u6;
    out.min_disc = inv.gamma / u12;
    out.min_disc_factored = factor(out.min_disc);

    const auto check = invariants(out.minimal_model);
    if (check.c4 != out.min_c4 || check.c6 != out.min_c6 || check.disc != out.min_disc)
        throw std::logic_error("minimal model invariants disagree with uT scaling");
    return out;
}

bool kraus_admissible(const Int& c4, const Int& c6) {
    const Int q = c4 * c4 * c4 - c6 * c6;
    if (q == 0 || q % 1728 != 0)
        throw DomainError("kraus_admissible: need 1728 | c4^3 - c6^2, nonzero");
    if (val_p(c6, 3) == 2) return false;
    if (congruent(c6, 3, 4)) return true;
    return val2(c4) >= 4 && (mod_pos(c6, 32) == 0 || mod_pos(c6, 32) == 8);
}

WeierstrassModel model_from_c4c6(const Int& c4, const Int& c6) {
    for (int a1 = 0; a1 <= 1; ++a1)
        for (int a2 = -1; a2 <= 1; ++a2)
            for (int a3 = 0; a3 <= 1; ++a3) {
                const Int b2 = a1 * a1 + 4 * a2;
                const Int b4_num = b2 * b2 - c4;
                if (b4_num % 24 != 0) continue;
                const Int b4 = b4_num / 24;
                const Int b6_num = -b2 * b2 * b2 + 36 * b2 * b4 - c6;
                if (b6_num % 216 != 0) continue;
                const Int b6 = b6_num / 216;
                const Int a4_num = b4 - a1 * a3;
                if (a4_num % 2 != 0) continue;
                const Int a6_num = b6 - a3 * a3;
                if (a6_num % 4 != 0) continue;
                const WeierstrassModel m{Rat(a1), Rat(a2), Rat(a3),
                                         Rat(a4_num / 2), Rat(a6_num / 4)};
                const auto inv = invariants(m);
                if (inv.c4 == c4 && inv.c6 == c6) return m;
            }
    throw std::logic_error("no integral model for admissible (c4, c6)");
}

MinimalityResult lkc_minimal_model(const WeierstrassModel& m) {
    if (!m.is_integral()) throw DomainError("lkc_minimal_model: model must be integral");
    const auto inv = invariants(m);
    if (inv.disc == 0) throw DomainError("lkc_minimal_model: singular model");
    const Int c4 = inv.c4.get_num(), c6 = inv.c6.get_num(), disc = inv.disc.get_num();

    // u's primes divide every nonzero member of {c4, c6, disc}
    Int core = abs(disc);
    if (c4 != 0) core = gcd(core, c4);
    if (c6 != 0) core = gcd(core, c6);

    Int u = 1;
    for (const auto& [p, e] : factor(core).factors) {
        long cap = val_p(disc, p).v / 12;
        if (c4 != 0) cap = std::min(cap, val_p(c4, p).v / 4);
        if (c6 != 0) cap = std::min(cap, val_p(c6, p).v / 6);
        if (p == 2 || p == 3) {
            // Kraus admissibility at 2 and 3 is invariant under the other
            // primes' exponents, so each can be fixed independently.
            while (cap > 0) {
                const Int pe = pow_int(p, cap);
                const Int cand4 = c4 / pow_int(pe, 4), cand6 = c6 / pow_int(pe, 6);
                if (kraus_admissible(cand4, cand6)) break;
                --cap;
            }
        }
        if (cap > 0) u *= pow_int(p, cap);
    }

    MinimalityResult out;
    out.uT = u;
    out.branch = "lkc";
    out.min_c4 = c4 / pow_int(u, 4);
    out.min_c6 = c6 / pow_int(u, 6);
    out.min_disc = disc / pow_int(u, 12);
    out.min_disc_factored = factor(out.min_disc);
    out.minimal_model = u == 1 ? m : model_from_c4c6(out.min_c4, out.min_c6);
    return out;
}

FreyResult frey_minimal(const Int& a, const Int& b) {
    if (gcd(a, b) != 1 || a * b * (a - b) == 0)
        throw DomainError("frey_minimal: need coprime a, b with ab(a-b) != 0");
    const auto cp = canonicalize(TorsionFamily::C2xC2, {a, b, 1});
    if (cp.params.d != 1) throw std::logic_error("frey canonicalization left d != 1");

    const bool closed_form_u2 =
        congruent(cp.params.a, 0, 16) && congruent(cp.params.b, 1, 4);
    auto res = minimality(cp);
    if ((res.uT == 2) != closed_form_u2)
        throw std::logic_error("frey closed form disagrees with the C2xC2 table");
    return {std::move(res), cp.params};
}

}  // namespace ecmin
