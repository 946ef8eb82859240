// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ecmin/canonical.hpp"

namespace ecmin {

namespace {

void require_nonsingular(TorsionFamily t, const FamilyParams& p) {
    if (family_invariants(t, p).gamma == 0)
        throw DomainError("singular: gamma = 0");
}

// Weight of the (a,b) grading: deg a1 = D, deg a2 = 2D, deg a3 = 3D. The
// sign flip (a,b) -> (-a,-b) is the identity for even D and u = -1 for odd D.
int family_weight(TorsionFamily t) {
    switch (t) {
        case TorsionFamily::C3:
        case TorsionFamily::C4:
        case TorsionFamily::C5:
        case TorsionFamily::C6:
        case TorsionFamily::C2xC4: return 1;
        case TorsionFamily::C7:
        case TorsionFamily::C8:
        case TorsionFamily::C2xC6: return 2;
        case TorsionFamily::C9:
        case TorsionFamily::C10: return 3;
        case TorsionFamily::C12:
        case TorsionFamily::C2xC8: return 4;
        default: throw std::logic_error("family_weight: 2-parameter families only");
    }
}

CanonicalParams canonicalize_pair(TorsionFamily t, FamilyParams p) {
    require_nonsingular(t, p);
    AdmissibleChange change = AdmissibleChange::identity();

    const Int g = gcd(p.a, p.b);
    if (g > 1) {
        // E_T(a,b) and E_T(a/g, b/g) are both reachable from X_{b/a}(T); the
        // connecting change scales by the ratio of the w_T factors.
        const Int w_old = rescale_factor_wT(t, p.a, p.b);
        p.a /= g;
        p.b /= g;
        const Int w_new = rescale_factor_wT(t, p.a, p.b);
        change = compose(change, AdmissibleChange::scaling(Rat(w_old) / Rat(w_new)));
    }
    if (p.a < 0) {
        // gamma != 0 forces a, b nonzero for every 2-parameter family
        p.a = -p.a;
        p.b = -p.b;
        if (family_weight(t) % 2 == 1)
            change = compose(change, AdmissibleChange::scaling(Rat(-1)));
    }

    CanonicalParams out{t, p, std::nullopt, change};
    if (t == TorsionFamily::C3) {
        auto [c, d, e] = cube_square_decompose(p.a);
        out.decomposition = CubeSquareParts{c, d, e};
    } else if (t == TorsionFamily::C4) {
        auto [c, d] = squarefree_decompose(p.a);
        out.decomposition = CubeSquareParts{c, d, 1};
    }
    return out;
}

CanonicalParams canonicalize_c3_0(FamilyParams p) {
    if (p.a == 0) throw DomainError("singular: gamma = 0");
    AdmissibleChange change = AdmissibleChange::identity();
    if (p.a < 0) {
        p.a = -p.a;
        change = compose(change, AdmissibleChange::scaling(Rat(-1)));
    }
    // strip the cube part: a3 = c^3 * a with a cubefree
    auto [c, d, e] = cube_square_decompose(p.a);
    if (c > 1) {
        p.a = d * d * e;
        change = compose(change, AdmissibleChange::scaling(Rat(c)));
    }
    p.b = 0;
    p.d = 1;
    return {TorsionFamily::C3_0, p, std::nullopt, change};
}

CanonicalParams canonicalize_c2(FamilyParams p) {
    require_nonsingular(TorsionFamily::C2, p);  // b != 0, d != 0, b^2 d != a^2
    AdmissibleChange change = AdmissibleChange::identity();

    // absorb the square part of d into b (same model: a4 depends on b^2 d)
    if (!is_squarefree(p.d)) {
        const int sign = p.d < 0 ? -1 : 1;
        auto [k, m] = squarefree_decompose(abs(p.d));
        p.b *= k;
        p.d = sign * m;
    }
    if (p.d == 1)
        throw DomainError("full 2-torsion (d = 1): use C2xC2");

    const Int g0 = gcd(p.a, p.b);
    auto [g, h] = squarefree_decompose(g0);
    if (g > 1) {
        p.a /= g * g;
        p.b /= g * g;
        change = compose(change, AdmissibleChange::scaling(Rat(g)));
    }
    if (p.b < 0) p.b = -p.b;  // E_C2 depends on b^2 only
    return {TorsionFamily::C2, p, std::nullopt, change};
}

CanonicalParams canonicalize_c2xc2(FamilyParams p) {
    require_nonsingular(TorsionFamily::C2xC2, p);  // a,b,d != 0, a != b
    AdmissibleChange change = AdmissibleChange::identity();

    if (p.d < 0) {  // E(a,b,d) = E(-a,-b,-d) identically
        p.a = -p.a;
        p.b = -p.b;
        p.d = -p.d;
    }
    Int A = p.a * p.d, B = p.b * p.d;
    auto [g, d] = squarefree_decompose(gcd(A, B));
    if (g > 1) change = compose(change, AdmissibleChange::scaling(Rat(g)));
    p.a = A / (g * g * d);
    p.b = B / (g * g * d);
    p.d = d;

    if (mpz_odd_p(p.a.get_mpz_t())) {
        if (mpz_even_p(p.b.get_mpz_t())) {
            std::swap(p.a, p.b);  // same model
        } else {
            // both odd: x -> x - ad sends E(a,b,d) onto E(b-a, -a, d)
            const Int a_old = p.a;
            change = compose(change, AdmissibleChange{1, Rat(-a_old * p.d), 0, 0});
            p.a = p.b - a_old;
            p.b = -a_old;
        }
    }
    return {TorsionFamily::C2xC2, p, std::nullopt, change};
}

}  // namespace

CanonicalParams canonicalize(TorsionFamily t, const FamilyParams& raw) {
    switch (t) {
        case TorsionFamily::C2: return canonicalize_c2(raw);
        case TorsionFamily::C2xC2: return canonicalize_c2xc2(raw);
        case TorsionFamily::C3_0: return canonicalize_c3_0(raw);
        default: return canonicalize_pair(t, raw);
    }
}

bool is_canonical(TorsionFamily t, const FamilyParams& p) {
    if (family_invariants(t, p).gamma == 0) return false;
    switch (t) {
        case TorsionFamily::C2:
            return p.d != 0 && p.d != 1 && is_squarefree(p.d) && p.b > 0 &&
                   is_squarefree(gcd(p.a, p.b));
        case TorsionFamily::C2xC2:
            return p.d > 0 && is_squarefree(p.d) && gcd(p.a, p.b) == 1 &&
                   mpz_even_p(p.a.get_mpz_t());
        case TorsionFamily::C3_0: {
            if (p.a <= 0) return false;
            auto [c, d, e] = cube_square_decompose(p.a);
            return c == 1;
        }
        default:
            return p.a > 0 && gcd(p.a, p.b) == 1 && p.d == 1;
    }
}

CanonicalParams assume_canonical(TorsionFamily t, const FamilyParams& p) {
    if (!is_canonical(t, p)) throw DomainError("parameters are not canonical");
    CanonicalParams out{t, p, std::nullopt, AdmissibleChange::identity()};
    if (t == TorsionFamily::C3) {
        auto [c, d, e] = cube_square_decompose(p.a);
        out.decomposition = CubeSquareParts{c, d, e};
    } else if (t == TorsionFamily::C4) {
        auto [c, d] = squarefree_decompose(p.a);
        out.decomposition = CubeSquareParts{c, d, 1};
    }
    return out;
}

}  // namespace ecmin
