// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ecmin/record.hpp"

#include <sstream>

namespace ecmin {

namespace {

using nlohmann::json;

std::string str(const Int& n) { return n.get_str(); }
std::string str(const Rat& r) { return r.get_str(); }

json factored_json(const FactoredInteger& f) {
    json factors = json::array();
    for (const auto& [p, e] : f.factors) factors.push_back({str(p), e});
    return {{"sign", f.sign}, {"factors", factors}, {"value", str(f.value())}};
}

// min_c4 / min_c6 vanish on j = 0 / j = 1728 curves
json factored_or_zero(const Int& n) {
    if (n == 0) return {{"sign", 0}, {"factors", json::array()}, {"value", "0"}};
    return factored_json(factor(n));
}

json model_json(const WeierstrassModel& m) {
    return {{"a1", str(m.a1)}, {"a2", str(m.a2)}, {"a3", str(m.a3)},
            {"a4", str(m.a4)}, {"a6", str(m.a6)}};
}

json params_json(TorsionFamily t, const FamilyParams& p) {
    json out{{"a", str(p.a)}};
    if (family_arity(t) >= 2) out["b"] = str(p.b);
    if (family_arity(t) == 3) out["d"] = str(p.d);
    return out;
}

json core_record(const CanonicalParams& cp) {
    const auto fi = family_invariants(cp.family, cp.params);
    const auto res = minimality(cp);
    const auto rep = additive_primes(cp);
    const auto ss = is_semistable(cp);

    json inv{{"c4", str(fi.alpha)},
             {"c6", str(fi.beta)},
             {"disc", str(fi.gamma)}};
    const auto model_inv = invariants(build_ET(cp.family, cp.params));
    inv["j"] = str(*model_inv.j);

    json additive = json::array();
    for (const auto& ap : rep.additive)
        additive.push_back({{"p", str(ap.p)}, {"rule", ap.rule}});

    json rec{{"version", kRecordVersion},
             {"family", std::string(family_name(cp.family))},
             {"params", params_json(cp.family, cp.params)},
             {"invariants", inv},
             {"uT", str(res.uT)},
             {"branch", res.branch},
             {"minimal_model", model_json(res.minimal_model)},
             {"min_disc", factored_json(res.min_disc_factored)},
             {"min_c4", factored_or_zero(res.min_c4)},
             {"min_c6", factored_or_zero(res.min_c6)},
             {"additive_primes", additive},
             {"semistable", ss.semistable},
             {"semistable_rule", ss.rule}};
    return rec;
}

json point_json(const RationalPoint& p) {
    if (p.infinity) return {{"infinity", true}};
    return {{"x", str(p.x)}, {"y", str(p.y)}};
}

json identification_json(const Identification& id) {
    json out{{"order", id.order},
             {"family", std::string(family_name(id.canonical.family))},
             {"params", params_json(id.canonical.family, id.canonical.params)}};
    if (id.t) out["t"] = str(*id.t);
    if (id.tnf) out["tnf"] = {{"f", str(id.tnf->f)}, {"g", str(id.tnf->g)}};
    return out;
}

std::string factored_text(const json& f) {
    if (f["sign"].get<int>() == 0) return "0";
    std::ostringstream os;
    if (f["sign"].get<int>() < 0) os << "-";
    if (f["factors"].empty()) {
        os << "1";
    } else {
        bool first = true;
        for (const auto& pe : f["factors"]) {
            if (!first) os << " * ";
            first = false;
            os << pe[0].get<std::string>();
            if (pe[1].get<unsigned>() > 1) os << "^" << pe[1].get<unsigned>();
        }
    }
    os << " = " << f["value"].get<std::string>();
    return os.str();
}

}  // namespace

json analyze_record(TorsionFamily t, const FamilyParams& raw) {
    const auto cp = canonicalize(t, raw);
    json rec = core_record(cp);
    rec["input"] = {{"family", std::string(family_name(t))},
                    {"params", params_json(t, raw)}};
    return rec;
}

json analyze_record(const WeierstrassModel& m, const RationalPoint& p) {
    const auto id = identify(m, p);
    json rec = core_record(id.canonical);
    rec["input"] = {{"coeffs", model_json(m)}, {"point", point_json(p)}};
    rec["identified"] = identification_json(id);
    return rec;
}

json identify_record(const WeierstrassModel& m, const RationalPoint& p) {
    const auto id = identify(m, p);
    json rec = identification_json(id);
    rec["version"] = kRecordVersion;
    rec["input"] = {{"coeffs", model_json(m)}, {"point", point_json(p)}};
    return rec;
}

std::string record_to_text(const json& rec) {
    std::ostringstream os;
    if (rec.contains("identified")) {
        const auto& id = rec["identified"];
        os << "identified: " << id["family"].get<std::string>() << " params ";
        os << id["params"].dump();
        if (id.contains("t")) os << ", t = " << id["t"].get<std::string>();
        os << "\n";
    }
    if (!rec.contains("uT")) {  // plain identification record
        if (rec.contains("family")) {
            os << "family: " << rec["family"].get<std::string>() << "\n";
            os << "params: " << rec["params"].dump() << "\n";
            if (rec.contains("t")) os << "t: " << rec["t"].get<std::string>() << "\n";
            if (rec.contains("tnf"))
                os << "tate normal form: f = " << rec["tnf"]["f"].get<std::string>()
                   << ", g = " << rec["tnf"]["g"].get<std::string>() << "\n";
        }
        return os.str();
    }
    os << "family: " << rec["family"].get<std::string>() << "  params "
       << rec["params"].dump() << "\n";
    os << "c4 = " << rec["invariants"]["c4"].get<std::string>() << "\n";
    os << "c6 = " << rec["invariants"]["c6"].get<std::string>() << "\n";
    os << "disc = " << rec["invariants"]["disc"].get<std::string>() << "\n";
    os << "j = " << rec["invariants"]["j"].get<std::string>() << "\n";
    os << "uT = " << rec["uT"].get<std::string>() << "  (branch "
       << rec["branch"].get<std::string>() << ")\n";
    const auto& mm = rec["minimal_model"];
    os << "minimal model: [" << mm["a1"].get<std::string>() << ", "
       << mm["a2"].get<std::string>() << ", " << mm["a3"].get<std::string>() << ", "
       << mm["a4"].get<std::string>() << ", " << mm["a6"].get<std::string>() << "]\n";
    os << "min disc = " << factored_text(rec["min_disc"]) << "\n";
    os << "min c4   = " << factored_text(rec["min_c4"]) << "\n";
    os << "min c6   = " << factored_text(rec["min_c6"]) << "\n";
    os << "additive primes:";
    if (rec["additive_primes"].empty()) os << " none";
    for (const auto& ap : rec["additive_primes"])
        os << " " << ap["p"].get<std::string>() << " [" << ap["rule"].get<std::string>()
           << "]";
    os << "\n";
    os << "semistable: " << (rec["semistable"].get<bool>() ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace ecmin
