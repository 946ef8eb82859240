// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ecmin/sweep.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>
#include <thread>

namespace ecmin {

namespace {

std::string tuple_str(TorsionFamily t, const FamilyParams& p) {
    std::ostringstream os;
    os << family_name(t) << "(" << p.a;
    if (family_arity(t) >= 2) os << "," << p.b;
    if (family_arity(t) == 3) os << "," << p.d;
    os << ")";
    return os.str();
}

std::vector<long> squarefree_range(long dbound, bool with_negative) {
    std::vector<long> out;
    for (long d = 2; d <= dbound; ++d)
        if (is_squarefree(Int(d))) out.push_back(d);
    if (with_negative)
        for (long d = -1; d >= -dbound; --d)
            if (is_squarefree(Int(d))) out.push_back(d);
    return out;
}

void push_if_canonical(std::vector<FamilyParams>& out, TorsionFamily t,
                       const FamilyParams& p) {
    if (is_canonical(t, p)) out.push_back(p);
}

void pair_grid(std::vector<FamilyParams>& out, TorsionFamily t, long bound) {
    for (long a = 1; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            if (b == 0) continue;
            if (gcd(Int(a), Int(b)) != 1) continue;
            push_if_canonical(out, t, {a, b, 1});
        }
}

// Branch-boundary extras: 2-adic depth for the u_T splits at v2(a) in {4, 8}
// and beyond.
void pair_extras_pow2(std::vector<FamilyParams>& out, TorsionFamily t) {
    for (long k = 1; k <= 12; ++k)
        for (long m : {1L, 3L, 5L, 9L})
            for (long b : {-7L, -5L, -3L, -1L, 1L, 3L, 5L, 7L}) {
                const long a = (1L << k) * m;
                if (gcd(Int(a), Int(b)) != 1) continue;
                push_if_canonical(out, t, {a, b, 1});
            }
}

void c3_extras(std::vector<FamilyParams>& out) {
    const long cs[] = {1, 2, 3, 4, 6, 10, 30};
    const long ds[] = {1, 2, 3, 5, 7};
    const long es[] = {1, 2, 3, 5, 6, 10};
    for (long c : cs)
        for (long d : ds)
            for (long e : es) {
                if (gcd(Int(d), Int(e)) != 1) continue;
                const long a = c * c * c * d * d * e;
                if (a > 27000) continue;
                for (long b : {-11L, -5L, -2L, -1L, 1L, 2L, 3L, 7L}) {
                    if (gcd(Int(a), Int(b)) != 1) continue;
                    push_if_canonical(out, TorsionFamily::C3, {a, b, 1});
                }
            }
}

void c2_grid(std::vector<FamilyParams>& out, long bound, long dbound) {
    for (long d : squarefree_range(dbound, true))
        for (long a = -bound; a <= bound; ++a)
            for (long b = 1; b <= bound; ++b)
                push_if_canonical(out, TorsionFamily::C2, {a, b, d});
}

// Deep 2-adic C2 rows need v2(b^2 d - a^2) >= 8, which forces |d| beyond the
// small grid; construct a handful per residue class.
void c2_extras(std::vector<FamilyParams>& out) {
    for (long ah : {1L, 3L, 5L, 7L})
        for (long bh : {1L, 3L})
            for (long d = 2; d <= 4500; ++d) {
                if ((bh * bh * d - ah * ah) % 64 != 0) continue;
                if (!is_squarefree(Int(d))) continue;
                const FamilyParams p{2 * ah, 2 * bh, d};
                if (val2(p.b * p.b * p.d - p.a * p.a) >= 8)
                    push_if_canonical(out, TorsionFamily::C2, p);
            }
}

void c2xc2_grid(std::vector<FamilyParams>& out, long bound, long dbound) {
    std::vector<long> ds = squarefree_range(dbound, false);
    ds.push_back(1);
    for (long d : ds)
        for (long a = -bound; a <= bound; a += 2)
            for (long b = -bound; b <= bound; ++b)
                push_if_canonical(out, TorsionFamily::C2xC2, {a, b, d});
}

void c2xc2_extras(std::vector<FamilyParams>& out) {
    for (long k = 1; k <= 12; ++k)
        for (long m : {1L, 3L})
            for (long b : {-7L, -3L, -1L, 1L, 5L, 9L})
                for (long d : {1L, 2L, 3L, 5L, 7L, 10L}) {
                    const long a = (1L << k) * m;
                    push_if_canonical(out, TorsionFamily::C2xC2, {a, b, d});
                }
}

void c3_0_grid(std::vector<FamilyParams>& out, long bound) {
    for (long a = 1; a <= bound; ++a)
        push_if_canonical(out, TorsionFamily::C3_0, {a});
    for (long a : {360L, 1001L, 2023L, 26999L})
        push_if_canonical(out, TorsionFamily::C3_0, {a});
}

struct CheckContext {
    TorsionFamily family;
    FamilyParams params;
    std::vector<std::string> failures;

    void fail(const std::string& check, const std::string& detail) {
        failures.push_back(check + " failed at " + tuple_str(family, params) +
                           (detail.empty() ? "" : ": " + detail));
    }
};

void check_identity(CheckContext& ctx, const FamilyInvariants& fi) {
    const Int lhs = fi.alpha * fi.alpha * fi.alpha - fi.beta * fi.beta;
    if (lhs != 1728 * fi.gamma) ctx.fail("identity", "alpha^3-beta^2 != 1728 gamma");
}

void check_tables(CheckContext& ctx, const FamilyInvariants& fi,
                  const WeierstrassModel& model) {
    const auto inv = invariants(model);
    if (inv.c4 != fi.alpha || inv.c6 != fi.beta || inv.disc != fi.gamma)
        ctx.fail("tables", "table polynomials disagree with model invariants");
}

void check_torsion(CheckContext& ctx, const WeierstrassModel& model) {
    const auto n = point_order(model, RationalPoint::affine(0, 0));
    const int want = marked_point_order(ctx.family);
    if (!n || *n != want) ctx.fail("torsion", "(0,0) order != marked order");
}

bool u_in_family_set(const CanonicalParams& cp, const Int& u) {
    switch (cp.family) {
        case TorsionFamily::C5:
        case TorsionFamily::C7:
        case TorsionFamily::C9:
        case TorsionFamily::C3_0: return u == 1;
        case TorsionFamily::C6:
        case TorsionFamily::C8:
        case TorsionFamily::C10:
        case TorsionFamily::C12:
        case TorsionFamily::C2xC2: return u == 1 || u == 2;
        case TorsionFamily::C2:
        case TorsionFamily::C2xC4: return u == 1 || u == 2 || u == 4;
        case TorsionFamily::C2xC6: return u == 1 || u == 4 || u == 16;
        case TorsionFamily::C2xC8: return u == 1 || u == 16 || u == 64;
        case TorsionFamily::C3: {
            const auto& dec = *cp.decomposition;
            return u == dec.c * dec.c * dec.d;
        }
        case TorsionFamily::C4: {
            const auto& dec = *cp.decomposition;
            return u == dec.c || u == 2 * dec.c;
        }
    }
    return false;
}

void check_oracle(CheckContext& ctx, const CanonicalParams& cp,
                  const WeierstrassModel& model) {
    const auto table = minimality(cp);
    const auto oracle = lkc_minimal_model(model);
    if (!u_in_family_set(cp, table.uT)) {
        ctx.fail("oracle", "uT outside the family's value set");
        return;
    }
    if (table.uT != oracle.uT) {
        ctx.fail("oracle", "uT " + table.uT.get_str() + " != lkc " + oracle.uT.get_str());
        return;
    }
    if (table.min_disc != oracle.min_disc || table.min_c4 != oracle.min_c4 ||
        table.min_c6 != oracle.min_c6) {
        ctx.fail("oracle", "minimal invariants differ from lkc");
        return;
    }
    if (!kraus_admissible(table.min_c4, table.min_c6)) {
        ctx.fail("oracle", "emitted minimal invariants fail Kraus");
        return;
    }
    // No strictly larger u may survive integrality + Kraus.
    for (long k : {2L, 3L}) {
        const Int u = k * table.uT;
        const auto fi = family_invariants(ctx.family, ctx.params);
        if (fi.alpha % pow_int(u, 4) != 0 || fi.beta % pow_int(u, 6) != 0 ||
            fi.gamma % pow_int(u, 12) != 0)
            continue;
        if (kraus_admissible(fi.alpha / pow_int(u, 4), fi.beta / pow_int(u, 6)))
            ctx.fail("oracle", "u = " + u.get_str() + " also admissible (not maximal)");
    }
}

void check_reduction(CheckContext& ctx, const CanonicalParams& cp,
                     const WeierstrassModel& model) {
    const auto rep = additive_primes(cp);
    const auto general = additive_primes_general(model);
    std::vector<Int> table_primes;
    for (const auto& ap : rep.additive) table_primes.push_back(ap.p);
    if (table_primes != general) {
        ctx.fail("reduction", "closed-form additive primes != gcd oracle");
        return;
    }
    const auto ss = is_semistable(cp);
    if (ss.semistable != rep.additive.empty())
        ctx.fail("reduction", "semistability row disagrees with additive primes");
    if (family_order(cp.family) > 4) {
        const auto allowed = allowed_additive_primes(cp.family);
        for (const auto& p : table_primes)
            if (std::find(allowed.begin(), allowed.end(), p) == allowed.end())
                ctx.fail("reduction", "additive prime outside the allowed set");
    }
    switch (cp.family) {
        case TorsionFamily::C7:
        case TorsionFamily::C9:
        case TorsionFamily::C10:
        case TorsionFamily::C12:
        case TorsionFamily::C2xC6:
        case TorsionFamily::C2xC8:
            if (!corollary_parity_check(cp))
                ctx.fail("reduction", "minimal c4/c6 not both odd");
            break;
        default:
            break;
    }
    if (cp.family == TorsionFamily::C12 || cp.family == TorsionFamily::C2xC6 ||
        cp.family == TorsionFamily::C2xC8) {
        const Int dmin = minimality(cp).min_disc;
        if (dmin % 30 != 0) ctx.fail("reduction", "30 does not divide min disc");
        if (cp.family == TorsionFamily::C2xC8 && dmin % 7 != 0)
            ctx.fail("reduction", "7 does not divide min disc");
    }
}

void check_round_trip(CheckContext& ctx, const CanonicalParams& cp,
                      const WeierstrassModel& model) {
    std::optional<Identification> maybe_id;
    try {
        maybe_id = identify(model, RationalPoint::affine(0, 0));
    } catch (const std::exception& e) {
        ctx.fail("round_trip", std::string("identify threw: ") + e.what());
        return;
    }
    const Identification& id = *maybe_id;
    switch (ctx.family) {
        case TorsionFamily::C2xC4:
        case TorsionFamily::C2xC6:
        case TorsionFamily::C2xC8: {
            // identified as the cyclic family of the marked point; demand a
            // Q-isomorphic curve (equal minimal invariants)
            const auto lhs = minimality(cp);
            const auto rhs = minimality(id.canonical);
            if (lhs.min_c4 != rhs.min_c4 || lhs.min_c6 != rhs.min_c6 ||
                lhs.min_disc != rhs.min_disc)
                ctx.fail("round_trip", "identified curve is not Q-isomorphic");
            break;
        }
        default:
            if (id.canonical.family != ctx.family ||
                !(id.canonical.params == ctx.params))
                ctx.fail("round_trip", "recovered " +
                                           tuple_str(id.canonical.family,
                                                     id.canonical.params));
            break;
    }
}

SweepCounts run_range(TorsionFamily t, const std::vector<FamilyParams>& tuples,
                      size_t lo, size_t hi, unsigned checks) {
    SweepCounts counts;
    for (size_t i = lo; i < hi && counts.failures.size() < 5; ++i) {
        CheckContext ctx{t, tuples[i], {}};
        ++counts.tuples;
        try {
            const auto fi = family_invariants(t, tuples[i]);
            const auto model = build_ET(t, tuples[i]);
            const auto cp = assume_canonical(t, tuples[i]);
            if (checks & kCheckIdentity) {
                check_identity(ctx, fi);
                ++counts.checks["identity"];
            }
            if (checks & kCheckTables) {
                check_tables(ctx, fi, model);
                ++counts.checks["tables"];
            }
            if (checks & kCheckTorsion) {
                check_torsion(ctx, model);
                ++counts.checks["torsion"];
            }
            if (checks & kCheckOracle) {
                check_oracle(ctx, cp, model);
                ++counts.checks["oracle"];
            }
            if (checks & kCheckReduction) {
                check_reduction(ctx, cp, model);
                ++counts.checks["reduction"];
            }
            if (checks & kCheckRoundTrip) {
                check_round_trip(ctx, cp, model);
                ++counts.checks["round_trip"];
            }
        } catch (const std::exception& e) {
            ctx.fail("sweep", std::string("exception: ") + e.what());
        }
        for (auto& f : ctx.failures) counts.failures.push_back(std::move(f));
    }
    return counts;
}

}  // namespace

std::vector<FamilyParams> enumerate_canonical(TorsionFamily t, long bound, long dbound,
                                              bool branch_extras) {
    std::vector<FamilyParams> out;
    switch (t) {
        case TorsionFamily::C2:
            c2_grid(out, bound, dbound);
            if (branch_extras) c2_extras(out);
            break;
        case TorsionFamily::C2xC2:
            c2xc2_grid(out, bound, dbound);
            if (branch_extras) c2xc2_extras(out);
            break;
        case TorsionFamily::C3_0:
            c3_0_grid(out, bound);
            break;
        case TorsionFamily::C3:
            pair_grid(out, t, bound);
            if (branch_extras) c3_extras(out);
            break;
        case TorsionFamily::C4:
        case TorsionFamily::C2xC4:
            pair_grid(out, t, bound);
            if (branch_extras) pair_extras_pow2(out, t);
            break;
        default:
            pair_grid(out, t, bound);
            break;
    }
    std::sort(out.begin(), out.end(), [](const FamilyParams& x, const FamilyParams& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.d < y.d;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

SweepCounts sweep_family(TorsionFamily t, long bound, unsigned checks, int jobs,
                         long dbound) {
    const auto tuples = enumerate_canonical(t, bound, dbound);
    int workers = resolve_jobs(jobs);
    if (tuples.size() < static_cast<size_t>(workers))
        workers = static_cast<int>(std::max<size_t>(tuples.size(), 1));
    if (workers <= 1) return run_range(t, tuples, 0, tuples.size(), checks);

    std::vector<std::future<SweepCounts>> parts;
    const size_t chunk = (tuples.size() + workers - 1) / workers;
    for (size_t lo = 0; lo < tuples.size(); lo += chunk) {
        const size_t hi = std::min(lo + chunk, tuples.size());
        parts.push_back(std::async(std::launch::async, [&, lo, hi] {
            return run_range(t, tuples, lo, hi, checks);
        }));
    }
    SweepCounts total;
    for (auto& f : parts) {
        auto part = f.get();
        total.tuples += part.tuples;
        for (const auto& [k, v] : part.checks) total.checks[k] += v;
        for (auto& s : part.failures)
            if (total.failures.size() < 5) total.failures.push_back(std::move(s));
    }
    return total;
}

}  // namespace ecmin
