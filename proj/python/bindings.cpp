#include "plateau/census.hpp"
#include "plateau/errors.hpp"
#include "plateau/factorization.hpp"
#include "plateau/oracle.hpp"
#include "plateau/rmcode.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace plateau;

namespace {

// Big integers cross into Python as ints via their decimal form.
py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(v).c_str(), nullptr, 10));
}

FamilyId make_family(const std::string& family, std::uint32_t p, std::uint64_t n) {
    FamilyId f{parse_family(family), p, n};
    f.validate();
    return f;
}

py::list coeff_list(const ZPoly& g, std::uint64_t n) {
    py::list out;
    for (std::size_t t = 0; t <= n; ++t) out.append(to_py(g.coeff(t)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Plateau counts of idempotent and p-potent quadratic functions";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_AssertionError);

    m.def(
        "gen_poly",
        [](const std::string& family, std::uint32_t p, std::uint64_t n) {
            const auto f = make_family(family, p, n);
            return coeff_list(gen_poly(f), n);
        },
        py::arg("family"), py::arg("p"), py::arg("n"),
        "Coefficients of the generating polynomial, index t counts (n - t)-plateaued functions.");

    m.def(
        "gen_poly_via_propositions",
        [](const std::string& family, std::uint32_t p, std::uint64_t n) {
            const auto f = make_family(family, p, n);
            return coeff_list(gen_poly_via_propositions(f), n);
        },
        py::arg("family"), py::arg("p"), py::arg("n"));

    m.def(
        "enumerate_distribution",
        [](const std::string& family, std::uint32_t p, std::uint64_t n, std::uint64_t budget, unsigned workers) {
            const auto f = make_family(family, p, n);
            const auto d = enumerate_distribution(f, {budget, workers});
            py::dict out;
            for (const auto& [s, c] : d.counts) out[py::int_(s)] = to_py(c);
            return out;
        },
        py::arg("family"), py::arg("p"), py::arg("n"), py::arg("budget") = kDefaultEnumerationBudget,
        py::arg("workers") = 0u, "Histogram s -> count by exhaustive gcd evaluation.");

    m.def(
        "special_counts",
        [](const std::string& family, std::uint32_t p, std::uint64_t n) {
            const auto sc = special_counts(make_family(family, p, n));
            py::dict out;
            out["bent"] = to_py(sc.bent);
            out["semibent"] = to_py(sc.semibent);
            out["semibent_s"] = sc.semibent_s;
            py::list printed;
            for (const auto& pc : sc.printed) {
                py::dict d;
                d["quantity"] = pc.quantity;
                d["value"] = to_decimal(pc.value);
                d["consistent"] = pc.consistent;
                d["label"] = pc.label;
                printed.append(d);
            }
            out["printed"] = printed;
            return out;
        },
        py::arg("family"), py::arg("p"), py::arg("n"));

    m.def(
        "plateau_s",
        [](const std::string& family, std::uint32_t p, std::uint64_t n, const std::vector<Residue>& coeffs) {
            return plateau_s(QuadraticFunction{make_family(family, p, n), coeffs});
        },
        py::arg("family"), py::arg("p"), py::arg("n"), py::arg("coeffs"));

    m.def(
        "walsh_spectrum",
        [](const std::string& family, std::uint32_t p, std::uint64_t n, const std::vector<Residue>& coeffs) {
            const auto r = walsh_spectrum(QuadraticFunction{make_family(family, p, n), coeffs});
            py::dict out;
            out["s"] = r.s_from_spectrum;
            out["support_size"] = r.support_size;
            out["magnitudes_ok"] = r.magnitudes_ok;
            out["parseval_ok"] = r.parseval_ok;
            return out;
        },
        py::arg("family"), py::arg("p"), py::arg("n"), py::arg("coeffs"));

    m.def(
        "factor",
        [](std::uint32_t p, std::uint64_t n) {
            const PrimeModulus mod(p);
            const auto fs = factor_cyclic(n, mod);
            const auto sr = group_self_reciprocal(fs);
            py::list factors;
            for (const auto& f : fs) {
                std::vector<Residue> c(f.poly.coeffs().begin(), f.poly.coeffs().end());
                py::dict d;
                d["poly"] = c;
                d["degree"] = f.poly.degree();
                d["multiplicity"] = f.multiplicity;
                factors.append(d);
            }
            py::dict out;
            out["v"] = sr.v;
            out["m"] = sr.m;
            out["factors"] = factors;
            out["sr_degrees"] = sr.degrees();
            return out;
        },
        py::arg("p"), py::arg("n"));

    m.def(
        "weight_enumerator",
        [](const std::string& code, std::uint64_t n) {
            const auto we = weight_enumerator(parse_family(code), n);
            py::list rows;
            for (const auto& r : we.rows) rows.append(py::make_tuple(to_py(r.weight), to_py(r.multiplicity)));
            return rows;
        },
        py::arg("code"), py::arg("n"), "Ascending (weight, multiplicity) pairs.");
}
