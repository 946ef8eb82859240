// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
//
// Command-line front end: analyze / identify / verify.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecmin/record.hpp"
#include "ecmin/sweep.hpp"

namespace {

using namespace ecmin;

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw DomainError("not an integer: " + s);
    }
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0 || r.get_den() == 0)
        throw DomainError("not a rational: " + s);
    r.canonicalize();
    return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

WeierstrassModel parse_coeffs(const std::string& s) {
    const auto parts = split(s, ',');
    if (parts.size() != 5)
        throw DomainError("--coeffs needs a1,a2,a3,a4,a6");
    return {parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2]),
            parse_rat(parts[3]), parse_rat(parts[4])};
}

RationalPoint parse_point(const std::string& s) {
    if (s == "inf" || s == "infinity") return RationalPoint::at_infinity();
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw DomainError("--point needs x,y");
    return RationalPoint::affine(parse_rat(parts[0]), parse_rat(parts[1]));
}

void emit(const nlohmann::json& rec, const std::string& format,
          const std::string& output) {
    if (!output.empty()) {
        std::ofstream out(output, std::ios::app);
        if (!out) throw DomainError("cannot open output file: " + output);
        out << rec.dump() << "\n";
    }
    if (format == "json")
        std::cout << rec.dump(2) << "\n";
    else
        std::cout << record_to_text(rec);
}

FamilyParams gather_params(TorsionFamily t, const std::string& a, const std::string& b,
                           const std::string& d) {
    FamilyParams p{parse_int(a)};
    const int arity = family_arity(t);
    if (arity >= 2) {
        if (b.empty()) throw DomainError("family requires --b");
        p.b = parse_int(b);
    } else if (!b.empty()) {
        throw DomainError("family takes no --b");
    }
    if (arity == 3) {
        if (d.empty()) throw DomainError("family requires --d");
        p.d = parse_int(d);
    } else if (!d.empty()) {
        throw DomainError("family takes no --d");
    }
    return p;
}

int run_verify(const std::string& families, long bound, int jobs, long dbound) {
    std::vector<TorsionFamily> list;
    if (families == "all") {
        list.assign(kAllFamilies.begin(), kAllFamilies.end());
    } else {
        for (const auto& name : split(families, ',')) {
            const auto t = family_from_name(name);
            if (!t) throw DomainError("unknown family: " + name);
            list.push_back(*t);
        }
    }
    bool ok = true;
    long total = 0;
    for (const auto t : list) {
        const auto counts = sweep_family(t, bound, kCheckAll, jobs, dbound);
        total += counts.tuples;
        std::cout << family_name(t) << ": " << counts.tuples << " tuples";
        for (const auto& [name, n] : counts.checks) std::cout << " " << name << "=" << n;
        if (counts.ok()) {
            std::cout << "  0 mismatches\n";
        } else {
            ok = false;
            std::cout << "  MISMATCHES\n";
            for (const auto& f : counts.failures) std::cout << "  " << f << "\n";
        }
    }
    std::cout << (ok ? "verify passed" : "verify FAILED") << " (" << total
              << " tuples)\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimal models and reduction data for rational elliptic "
                 "curves with prescribed torsion"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full record for one curve");
    std::string family, a_str, b_str, d_str, coeffs, point;
    std::string format = "text", output;
    analyze->add_option("--family", family, "family tag (C2..C12, C2xC2..C2xC8)");
    analyze->add_option("--a", a_str, "parameter a");
    analyze->add_option("--b", b_str, "parameter b");
    analyze->add_option("--d", d_str, "parameter d");
    analyze->add_option("--coeffs", coeffs, "a1,a2,a3,a4,a6 of a Weierstrass model");
    analyze->add_option("--point", point, "marked torsion point x,y");
    analyze->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    analyze->add_option("--output", output, "append the record as NDJSON");

    // identify
    auto* identify_cmd = app.add_subcommand("identify", "recover (T, a, b) from a model");
    std::string id_coeffs, id_point, id_format = "text", id_output;
    identify_cmd->add_option("--coeffs", id_coeffs, "a1,a2,a3,a4,a6")->required();
    identify_cmd->add_option("--point", id_point, "marked torsion point x,y")->required();
    identify_cmd->add_option("--format", id_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    identify_cmd->add_option("--output", id_output, "append the record as NDJSON");

    // verify
    auto* verify = app.add_subcommand("verify", "oracle-equivalence sweeps");
    std::string families = "all";
    long bound = 30, dbound = -1;
    int jobs = 1;
    verify->add_option("--families", families, "comma list or 'all'");
    verify->add_option("--bound", bound, "|a|,|b| bound");
    verify->add_option("--dbound", dbound,
                       "squarefree |d| bound for C2/C2xC2 (default: --bound)");
    verify->add_option("--jobs", jobs, "worker threads (0 = hardware)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            if (!coeffs.empty() || !point.empty()) {
                if (coeffs.empty() || point.empty())
                    throw DomainError("raw mode needs both --coeffs and --point");
                emit(analyze_record(parse_coeffs(coeffs), parse_point(point)), format,
                     output);
            } else {
                const auto t = family_from_name(family);
                if (!t) throw DomainError("unknown or missing --family");
                if (a_str.empty()) throw DomainError("missing --a");
                emit(analyze_record(*t, gather_params(*t, a_str, b_str, d_str)), format,
                     output);
            }
            return 0;
        }
        if (*identify_cmd) {
            emit(identify_record(parse_coeffs(id_coeffs), parse_point(id_point)),
                 id_format, id_output);
            return 0;
        }
        if (*verify) return run_verify(families, bound, jobs, dbound < 0 ? bound : dbound);
    } catch (const IdentifyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
