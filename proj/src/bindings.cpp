// Python bindings: the main operations are exposed on JSON-string boundaries
// (rationals travel as "p/q" strings), with thin typed helpers for the
// quaternion/octonion arithmetic.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "avalg/suites.hpp"

namespace py = pybind11;

namespace {

using avalg::Json;

avalg::VecQ vec_from_strings(const std::vector<std::string>& v) {
    avalg::VecQ out;
    for (const std::string& s : v) out.push_back(avalg::parse_rat(s));
    return out;
}

std::vector<std::string> vec_to_strings(const avalg::VecQ& v) {
    std::vector<std::string> out;
    for (const avalg::Rat& r : v) out.push_back(avalg::rat_str(r));
    return out;
}

avalg::AlgSpec spec_from_json_text(const std::string& text) {
    return avalg::alg_spec_from_json(Json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic for absolute-valued algebras with left unit";

    m.def("rat_add", [](const std::string& a, const std::string& b) {
        return avalg::rat_str(avalg::parse_rat(a) + avalg::parse_rat(b));
    });
    m.def("rat_mul", [](const std::string& a, const std::string& b) {
        return avalg::rat_str(avalg::parse_rat(a) * avalg::parse_rat(b));
    });

    m.def("quat_mul", [](const std::vector<std::string>& p, const std::vector<std::string>& q) {
        return vec_to_strings((avalg::Quat::from_vec(vec_from_strings(p)) *
                               avalg::Quat::from_vec(vec_from_strings(q)))
                                  .to_vec());
    }, py::arg("p"), py::arg("q"), "Hamilton product of two quaternions given as 4 rational strings");

    m.def("cd_product", [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
        return vec_to_strings((avalg::Oct::from_vec(vec_from_strings(x)) *
                               avalg::Oct::from_vec(vec_from_strings(y)))
                                  .to_vec());
    }, py::arg("x"), py::arg("y"), "Cayley-Dickson octonion product on 8 rational strings");

    m.def("sphere_point", [](const std::vector<std::string>& v) {
        return vec_to_strings(avalg::sphere_point(vec_from_strings(v)).to_vec());
    }, py::arg("v"), "rational unit quaternion from a 3-vector chart");

    m.def("im_sphere_point", [](const std::vector<std::string>& u) {
        return vec_to_strings(avalg::im_sphere_point(vec_from_strings(u)).to_vec());
    }, py::arg("u"), "rational imaginary unit quaternion from a 2-vector chart");

    m.def("conjugator", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return vec_to_strings(avalg::conjugator(avalg::Quat::from_vec(vec_from_strings(a)),
                                                avalg::Quat::from_vec(vec_from_strings(b)))
                                  .to_vec());
    }, py::arg("a"), py::arg("b"), "projective u with u a = b u");

    m.def("associator", [](const std::string& spec_text, const std::vector<std::string>& x,
                           const std::vector<std::string>& y, const std::vector<std::string>& z) {
        avalg::Algebra A = avalg::from_spec(spec_from_json_text(spec_text));
        return vec_to_strings(A.associator(vec_from_strings(x), vec_from_strings(y), vec_from_strings(z)));
    }, py::arg("spec"), py::arg("x"), py::arg("y"), py::arg("z"));

    m.def("product", [](const std::string& spec_text, const std::vector<std::string>& x,
                        const std::vector<std::string>& y) {
        avalg::Algebra A = avalg::from_spec(spec_from_json_text(spec_text));
        return vec_to_strings(A.product(vec_from_strings(x), vec_from_strings(y)));
    }, py::arg("spec"), py::arg("x"), py::arg("y"));

    m.def("is_absolute_valued", [](const std::string& spec_text) {
        return avalg::is_absolute_valued(avalg::from_spec(spec_from_json_text(spec_text))).ok;
    }, py::arg("spec"));

    m.def("left_unit", [](const std::string& spec_text) -> py::object {
        auto e = avalg::left_unit(avalg::from_spec(spec_from_json_text(spec_text)));
        if (!e) return py::none();
        return py::cast(vec_to_strings(*e));
    }, py::arg("spec"));

    m.def("classify_json", [](const std::string& spec_text, int samples, std::uint64_t seed) {
        return avalg::classification_to_json(avalg::classify(spec_from_json_text(spec_text), samples, seed))
            .dump();
    }, py::arg("spec"), py::arg("samples") = 20, py::arg("seed") = 1);

    m.def("fingerprint_json", [](const std::string& spec_text, int samples, std::uint64_t seed) {
        avalg::Algebra A = avalg::from_spec(spec_from_json_text(spec_text));
        return avalg::fingerprint_to_json(avalg::invariant_fingerprint(A, samples, seed)).dump();
    }, py::arg("spec"), py::arg("samples") = 20, py::arg("seed") = 1);

    m.def("identity_reports_json", [](const std::string& spec_text, bool exact_sextic, int samples,
                                      std::uint64_t seed) {
        avalg::Algebra A = avalg::from_spec(spec_from_json_text(spec_text));
        Json j;
        j["quadratic_criterion"] = avalg::identity_report_to_json(avalg::check_quadratic_criterion(A));
        j["linearizations"] =
            avalg::identity_report_to_json(avalg::check_linearizations(A, samples, seed));
        if (exact_sextic) j["sextic"] = avalg::identity_report_to_json(avalg::check_sextic_exact(A));
        return j.dump();
    }, py::arg("spec"), py::arg("exact_sextic") = false, py::arg("samples") = 20, py::arg("seed") = 0);

    m.def("run_suite_json", [](const std::string& id, std::uint64_t seed, int samples) {
        avalg::SuiteConfig cfg{seed, samples};
        return avalg::suite_to_json(avalg::run_suite(id, cfg)).dump();
    }, py::arg("suite"), py::arg("seed") = 0, py::arg("samples") = 20);

    m.def("run_all_suites_json", [](std::uint64_t seed, int samples) {
        avalg::SuiteConfig cfg{seed, samples};
        return avalg::run_report_json(avalg::run_all_suites(cfg), cfg).dump();
    }, py::arg("seed") = 0, py::arg("samples") = 20);

    m.def("tables_json", [](std::uint64_t seed, int samples) {
        avalg::SuiteConfig cfg{seed, samples};
        return avalg::tables_report(cfg).dump();
    }, py::arg("seed") = 0, py::arg("samples") = 20);

    m.def("suite_catalog", [] { return avalg::suite_catalog(); });
}
