// Python bindings for the main engine operations. All rationals cross the
// boundary as fractions.Fraction so exactness survives.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mhn/cutjoin.hpp"
#include "mhn/perm_oracle.hpp"
#include "mhn/polystruct.hpp"
#include "mhn/serialize.hpp"
#include "mhn/spectral.hpp"
#include "mhn/verify.hpp"
#include "mhn/wave.hpp"

namespace py = pybind11;
using namespace mhn;

namespace {

py::object to_fraction(const Rational& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_string(r));
}

template <typename Exp>
py::tuple to_tuple(const std::vector<Exp>& v) {
    py::tuple t(v.size());
    for (size_t i = 0; i < v.size(); ++i) t[i] = v[i];
    return t;
}

SpectralCurve named_curve(const std::string& name) {
    if (name == "monotone") return monotone_curve();
    if (name == "airy") return airy_curve();
    throw py::value_error("unknown curve \"" + name +
                          "\"; choose monotone or airy");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact monotone Hurwitz numbers by four independent pipelines";
    m.attr("engine_version") = kEngineVersion;

    m.def(
        "hurwitz",
        [](unsigned g, const std::vector<unsigned>& mu_in,
           const std::string& pipeline) {
            Partition mu = canonical_partition(mu_in);
            if (pipeline == "cutjoin") {
                HurwitzTable table;
                return to_fraction(table.get(g, mu));
            }
            if (pipeline == "tr") {
                OmegaCache cache(monotone_curve());
                return to_fraction(hurwitz_tr(cache, g, mu));
            }
            if (pipeline == "oracle") return to_fraction(oracle_hurwitz(g, mu));
            throw py::value_error("unknown pipeline \"" + pipeline +
                                  "\"; choose oracle, cutjoin, or tr");
        },
        py::arg("g"), py::arg("mu"), py::arg("pipeline") = "cutjoin",
        "One Hurwitz number, exactly, by the chosen pipeline.");

    m.def(
        "omega",
        [](unsigned g, unsigned n, const std::string& curve) {
            OmegaCache cache(named_curve(curve));
            py::dict out;
            for (const auto& [k, c] : cache.omega(g, n).coeffs)
                out[to_tuple(k)] = to_fraction(c);
            return out;
        },
        py::arg("g"), py::arg("n"), py::arg("curve") = "monotone",
        "Correlation differential as {pole-order tuple: coefficient}.");

    m.def(
        "p_table",
        [](unsigned g, unsigned n) {
            OmegaCache cache(monotone_curve());
            py::dict out;
            for (const auto& [a, c] : omega_to_C(cache.omega(g, n)).coeffs)
                out[to_tuple(a)] = to_fraction(c);
            return out;
        },
        py::arg("g"), py::arg("n"),
        "Symmetric-polynomial coefficients as {exponent tuple: coefficient}.");

    m.def(
        "wave_grid",
        [](unsigned D, unsigned M) {
            BivariateSeries z = wave_function_direct(D, M);
            py::list rows;
            for (unsigned d = 0; d <= z.valid_D; ++d) {
                py::list row;
                for (unsigned mm = 0; mm <= z.valid_M; ++mm)
                    row.append(to_fraction(z.at(d, mm)));
                rows.append(row);
            }
            return rows;
        },
        py::arg("D") = 8, py::arg("M") = 8,
        "Wave-function coefficients as a (D+1) x (M+1) grid of fractions.");

    m.def(
        "verify",
        [](const std::string& suite) {
            py::list out;
            for (const auto& r : run_suite(suite)) {
                py::dict d;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all",
        "Run a verification suite; returns one dict per check.");
}
