// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
//
// Python bindings for the main operations. Exact integers and rationals
// cross the boundary as decimal / "p/q" strings to keep arbitrary precision.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecmin/record.hpp"
#include "ecmin/sweep.hpp"

namespace py = pybind11;
using namespace ecmin;

namespace {

Int to_int(const std::string& s) { return Int(s); }

Rat to_rat(const std::string& s) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0 || r.get_den() == 0)
        throw DomainError("not a rational: " + s);
    r.canonicalize();
    return r;
}

TorsionFamily to_family(const std::string& name) {
    const auto t = family_from_name(name);
    if (!t) throw DomainError("unknown family: " + name);
    return *t;
}

FamilyParams to_params(const std::string& a, const std::string& b,
                       const std::string& d) {
    return {to_int(a), to_int(b), to_int(d)};
}

WeierstrassModel to_model(const std::vector<std::string>& coeffs) {
    if (coeffs.size() != 5) throw DomainError("need [a1,a2,a3,a4,a6]");
    return {to_rat(coeffs[0]), to_rat(coeffs[1]), to_rat(coeffs[2]), to_rat(coeffs[3]),
            to_rat(coeffs[4])};
}

std::vector<std::string> from_model(const WeierstrassModel& m) {
    return {m.a1.get_str(), m.a2.get_str(), m.a3.get_str(), m.a4.get_str(),
            m.a6.get_str()};
}

py::dict json_to_py(const nlohmann::json& j) {
    return py::cast<py::dict>(
        py::module_::import("json").attr("loads")(j.dump()));
}

}  // namespace

PYBIND11_MODULE(_ecmin, m) {
    m.doc() = "exact minimal models of rational elliptic curves with torsion";

    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<IdentifyError>(m, "IdentifyError");

    m.def("families", [] {
        std::vector<std::string> out;
        for (auto t : kAllFamilies) out.emplace_back(family_name(t));
        return out;
    });

    m.def(
        "build_et",
        [](const std::string& family, const std::string& a, const std::string& b,
           const std::string& d) { return from_model(build_ET(to_family(family),
                                                              to_params(a, b, d))); },
        py::arg("family"), py::arg("a"), py::arg("b") = "0", py::arg("d") = "1");

    m.def(
        "family_invariants",
        [](const std::string& family, const std::string& a, const std::string& b,
           const std::string& d) {
            const auto fi = family_invariants(to_family(family), to_params(a, b, d));
            return py::make_tuple(fi.alpha.get_str(), fi.beta.get_str(),
                                  fi.gamma.get_str());
        },
        py::arg("family"), py::arg("a"), py::arg("b") = "0", py::arg("d") = "1");

    m.def("invariants", [](const std::vector<std::string>& coeffs) {
        const auto inv = invariants(to_model(coeffs));
        return py::make_tuple(inv.c4.get_str(), inv.c6.get_str(), inv.disc.get_str());
    });

    m.def(
        "analyze",
        [](const std::string& family, const std::string& a, const std::string& b,
           const std::string& d) {
            return json_to_py(analyze_record(to_family(family), to_params(a, b, d)));
        },
        py::arg("family"), py::arg("a"), py::arg("b") = "0", py::arg("d") = "1");

    m.def("lkc_minimal_model", [](const std::vector<std::string>& coeffs) {
        const auto res = lkc_minimal_model(to_model(coeffs));
        py::dict out;
        out["u"] = res.uT.get_str();
        out["minimal_model"] = from_model(res.minimal_model);
        out["min_disc"] = res.min_disc.get_str();
        out["min_c4"] = res.min_c4.get_str();
        out["min_c6"] = res.min_c6.get_str();
        return out;
    });

    m.def("kraus_admissible", [](const std::string& c4, const std::string& c6) {
        return kraus_admissible(to_int(c4), to_int(c6));
    });

    m.def("identify",
          [](const std::vector<std::string>& coeffs, const std::string& x,
             const std::string& y) {
              return json_to_py(identify_record(
                  to_model(coeffs), RationalPoint::affine(to_rat(x), to_rat(y))));
          });

    m.def("factor", [](const std::string& n) {
        const auto f = ecmin::factor(to_int(n));
        std::vector<std::pair<std::string, unsigned>> out;
        for (const auto& [p, e] : f.factors) out.emplace_back(p.get_str(), e);
        return py::make_tuple(f.sign, out);
    });

    m.def("squarefree_decompose", [](const std::string& n) {
        const auto [g, h] = squarefree_decompose(to_int(n));
        return py::make_tuple(g.get_str(), h.get_str());
    });

    m.def("cube_square_decompose", [](const std::string& n) {
        const auto [c, d, e] = cube_square_decompose(to_int(n));
        return py::make_tuple(c.get_str(), d.get_str(), e.get_str());
    });

    m.def("frey_minimal", [](const std::string& a, const std::string& b) {
        const auto res = frey_minimal(to_int(a), to_int(b));
        py::dict out;
        out["u"] = res.result.uT.get_str();
        out["minimal_model"] = from_model(res.result.minimal_model);
        out["min_disc"] = res.result.min_disc.get_str();
        out["canonical_a"] = res.canonical.a.get_str();
        out["canonical_b"] = res.canonical.b.get_str();
        return out;
    });

    m.def("universal_curve", [](const std::string& family, const std::string& t) {
        return from_model(universal_curve(to_family(family), to_rat(t)));
    });

    m.def("point_order",
          [](const std::vector<std::string>& coeffs, const std::string& x,
             const std::string& y, int bound) {
              const auto n = point_order(to_model(coeffs),
                                         RationalPoint::affine(to_rat(x), to_rat(y)),
                                         bound);
              return n ? py::object(py::int_(*n)) : py::object(py::none());
          },
          py::arg("coeffs"), py::arg("x"), py::arg("y"), py::arg("bound") = 12);

    m.def(
        "verify_family",
        [](const std::string& family, long bound, int jobs) {
            const auto counts = sweep_family(to_family(family), bound, kCheckAll, jobs);
            py::dict out;
            out["tuples"] = counts.tuples;
            out["failures"] = counts.failures;
            return out;
        },
        py::arg("family"), py::arg("bound") = 10, py::arg("jobs") = 1);
}
