// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ecmin/recognition.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace ecmin {

namespace {

// Dense integer polynomials, coefficients low -> high.
using Poly = std::vector<Int>;

struct RationalFunction {
    Poly num, den;
};

// Universal-curve rows as (f, g) rational functions in t.
struct UniversalRow {
    TorsionFamily family;
    RationalFunction f, g;
};

const std::vector<UniversalRow>& universal_rows() {
    static const std::vector<UniversalRow> rows = [] {
        std::vector<UniversalRow> r;
        const auto I = [](long v) { return Int(v); };
        auto add = [&](TorsionFamily t, Poly fn, Poly fd, Poly gn, Poly gd) {
            r.push_back({t, {std::move(fn), std::move(fd)}, {std::move(gn), std::move(gd)}});
        };
        add(TorsionFamily::C4, {I(0), I(1)}, {I(1)}, {I(0)}, {I(1)});
        add(TorsionFamily::C5, {I(0), I(1)}, {I(1)}, {I(0), I(1)}, {I(1)});
        add(TorsionFamily::C6, {I(0), I(1), I(1)}, {I(1)}, {I(0), I(1)}, {I(1)});
        add(TorsionFamily::C7, {I(0), I(0), I(-1), I(1)}, {I(1)}, {I(0), I(-1), I(1)},
            {I(1)});
        add(TorsionFamily::C8, {I(1), I(-3), I(2)}, {I(1)}, {I(1), I(-3), I(2)},
            {I(0), I(1)});
        add(TorsionFamily::C9, {I(0), I(0), I(-1), I(2), I(-2), I(1)}, {I(1)},
            {I(0), I(0), I(-1), I(1)}, {I(1)});
        add(TorsionFamily::C10, {I(0), I(0), I(0), I(1), I(-3), I(2)},
            {I(1), I(-6), I(11), I(-6), I(1)}, {I(0), I(-1), I(3), I(-2)},
            {I(1), I(-3), I(1)});
        add(TorsionFamily::C12, {I(0), I(-1), I(7), I(-21), I(34), I(-30), I(12)},
            {I(1), I(-4), I(6), I(-4), I(1)}, {I(0), I(1), I(-5), I(9), I(-6)},
            {I(-1), I(3), I(-3), I(1)});
        add(TorsionFamily::C2xC4, {I(0), I(1), I(4)}, {I(1)}, {I(0)}, {I(1)});
        add(TorsionFamily::C2xC6, {I(10), I(-22), I(14), I(-2)},
            {I(81), I(0), I(-18), I(0), I(1)}, {I(10), I(-2)}, {I(-9), I(0), I(1)});
        add(TorsionFamily::C2xC8, {I(1), I(6), I(16), I(16)},
            {I(1), I(0), I(-16), I(0), I(64)}, {I(1), I(6), I(16), I(16)},
            {I(0), I(-2), I(-8), I(16), I(64)});
        return r;
    }();
    return rows;
}

const UniversalRow* find_row(TorsionFamily t) {
    for (const auto& row : universal_rows())
        if (row.family == t) return &row;
    return nullptr;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> out{1};
    for (const auto& [p, e] : factor(n).factors) {
        const size_t base = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

Rat horner(const Poly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

// Rational roots of an integer polynomial; nullopt marks the zero polynomial
// (every t is a root).
std::optional<std::vector<Rat>> rational_roots(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return std::nullopt;

    std::vector<Rat> roots;
    size_t low = 0;
    while (low < p.size() && p[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        p.erase(p.begin(), p.begin() + low);
    }
    if (p.size() <= 1) return roots;

    std::set<std::pair<Int, Int>> seen;
    for (const auto& num : divisors(abs(p.front())))
        for (const auto& den : divisors(abs(p.back()))) {
            Int g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (g != 1) continue;
            for (int sign : {1, -1}) {
                Rat cand(sign * num, den);
                cand.canonicalize();
                if (!seen.insert({cand.get_num(), cand.get_den()}).second) continue;
                if (horner(p, cand) == 0) roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Roots of num(t) - v * den(t) = 0 as an integer polynomial.
std::optional<std::vector<Rat>> solve_equals(const RationalFunction& fn, const Rat& v) {
    const size_t n = std::max(fn.num.size(), fn.den.size());
    Poly p(n, Int(0));
    for (size_t i = 0; i < fn.num.size(); ++i) p[i] += v.get_den() * fn.num[i];
    for (size_t i = 0; i < fn.den.size(); ++i) p[i] -= v.get_num() * fn.den[i];
    return rational_roots(std::move(p));
}

int torsion_order_or_throw(const WeierstrassModel& m, const RationalPoint& p) {
    if (invariants(m).disc == 0) throw DomainError("identify: singular model");
    if (!on_curve(m, p)) throw DomainError("identify: point not on curve");
    if (p.infinity) throw IdentifyError("identify: trivial torsion (point at infinity)");
    const auto n = point_order(m, p);
    if (!n) throw IdentifyError("identify: point order exceeds bound (non-torsion)");
    if (*n == 1) throw IdentifyError("identify: trivial torsion");
    return *n;
}

TorsionFamily cyclic_family(int order) {
    switch (order) {
        case 4: return TorsionFamily::C4;
        case 5: return TorsionFamily::C5;
        case 6: return TorsionFamily::C6;
        case 7: return TorsionFamily::C7;
        case 8: return TorsionFamily::C8;
        case 9: return TorsionFamily::C9;
        case 10: return TorsionFamily::C10;
        case 12: return TorsionFamily::C12;
        default: throw IdentifyError("identify: unsupported torsion order");
    }
}

Identification identify_order2(const WeierstrassModel& m0) {
    // m0 has P = (0,0) of order 2, so a3 = a6 = 0.
    WeierstrassModel m = transform(m0, {1, 0, -m0.a1 / 2, 0});
    m = transform(m, AdmissibleChange::scaling(Rat(1, 2)));
    // now y^2 = x^3 + a2 x^2 + a4 x; clear denominators
    const Int L = lcm(m.a2.get_den(), m.a4.get_den());
    if (L > 1) m = transform(m, AdmissibleChange::scaling(Rat(1) / Rat(L)));

    Int a2 = m.a2.get_num(), a4 = m.a4.get_num();
    Int D = a2 * a2 - 4 * a4;
    if (mpz_perfect_square_p(D.get_mpz_t())) {
        Int root;
        mpz_sqrt(root.get_mpz_t(), D.get_mpz_t());
        const Int A = (a2 + root) / 2, B = (a2 - root) / 2;
        return {2, canonicalize(TorsionFamily::C2xC2, {A, B, 1}), std::nullopt,
                std::nullopt};
    }
    if (mpz_odd_p(a2.get_mpz_t())) {
        a2 *= 4;
        a4 *= 16;
    }
    const Int a = a2 / 2;
    const Int D0 = a * a - a4;  // = b^2 d, not a perfect square
    auto [b, d] = squarefree_decompose(abs(D0));
    if (D0 < 0) d = -d;
    return {2, canonicalize(TorsionFamily::C2, {a, b, d}), std::nullopt, std::nullopt};
}

Identification identify_order3(const WeierstrassModel& m0) {
    // m0 has P = (0,0) of order 3: a6 = 0 and a3 != 0; kill a4, then a2 = 0.
    WeierstrassModel m = transform(m0, {1, 0, m0.a4 / m0.a3, 0});
    if (m.a2 != 0 || m.a4 != 0)
        throw std::logic_error("order-3 normalization left a2 or a4 nonzero");
    if (m.a1 != 0) {
        Rat t = m.a3 / (m.a1 * m.a1 * m.a1);
        return {3, canonicalize(TorsionFamily::C3, {t.get_den(), t.get_num()}),
                std::nullopt, t};
    }
    // j = 0 family: scale a3 to an integer, then strip cubes
    const Int L = m.a3.get_den();
    const Int a = m.a3.get_num() * L * L;
    return {3, canonicalize(TorsionFamily::C3_0, {a}), std::nullopt, std::nullopt};
}

}  // namespace

WeierstrassModel translate_to_origin(const WeierstrassModel& m, const RationalPoint& p) {
    if (p.infinity) throw DomainError("translate_to_origin: point at infinity");
    if (!on_curve(m, p)) throw DomainError("translate_to_origin: point not on curve");
    return transform(m, {1, p.x, 0, p.y});
}

TateNormalForm tate_normal_form(const WeierstrassModel& m, const RationalPoint& p,
                                int order) {
    if (order < 4)
        throw DomainError("tate_normal_form: order must be >= 4 (use the N=2/3 paths)");
    const auto n = point_order(m, p);
    if (!n) throw IdentifyError("tate_normal_form: non-torsion point");
    if (*n != order) throw DomainError("tate_normal_form: point order mismatch");

    WeierstrassModel w = translate_to_origin(m, p);
    w = transform(w, {1, 0, w.a4 / w.a3, 0});  // a3 != 0 for order >= 3
    if (w.a2 == 0) throw std::logic_error("unexpected a2 = 0 for order >= 4");
    w = transform(w, AdmissibleChange::scaling(w.a3 / w.a2));
    if (w.a2 != w.a3 || w.a4 != 0 || w.a6 != 0)
        throw std::logic_error("Tate normal form shape violated");
    TateNormalForm out{-w.a2, 1 - w.a1};
    if (out.f == 0) throw DomainError("tate_normal_form: degenerate (f = 0)");
    return out;
}

std::vector<Rat> recover_t_all(TorsionFamily t, const TateNormalForm& tnf) {
    const UniversalRow* row = find_row(t);
    if (!row) throw DomainError("recover_t: no universal-curve row for this family");

    const auto fs = solve_equals(row->f, tnf.f);
    const auto gs = solve_equals(row->g, tnf.g);
    std::vector<Rat> candidates;
    if (fs && gs) {
        for (const auto& r : *fs)
            if (std::find(gs->begin(), gs->end(), r) != gs->end())
                candidates.push_back(r);
    } else if (fs) {
        candidates = *fs;
    } else if (gs) {
        candidates = *gs;
    } else {
        throw std::logic_error("both universal equations degenerate");
    }

    std::vector<Rat> out;
    for (const auto& cand : candidates) {
        try {
            const auto [f, g] = universal_fg(t, cand);
            if (f == tnf.f && g == tnf.g) out.push_back(cand);
        } catch (const DomainError&) {
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat recover_t(TorsionFamily t, const TateNormalForm& tnf) {
    const auto all = recover_t_all(t, tnf);
    if (all.empty())
        throw DomainError("recover_t: no rational parameter (wrong family guess?)");
    if (all.size() > 1) throw DomainError("recover_t: parameter is ambiguous");
    return all.front();
}

Identification identify(const WeierstrassModel& m, const RationalPoint& p) {
    const int order = torsion_order_or_throw(m, p);
    if (order == 2) return identify_order2(translate_to_origin(m, p));
    if (order == 3) return identify_order3(translate_to_origin(m, p));

    const TorsionFamily family = cyclic_family(order);
    const auto tnf = tate_normal_form(m, p, order);
    const Rat t = recover_t(family, tnf);
    // t = b/a in lowest terms with a > 0
    Identification out{order, canonicalize(family, {t.get_den(), t.get_num()}), tnf, t};
    return out;
}

}  // namespace ecmin
