#include "fforge/json_io.hpp"
#include "fforge/poly.hpp"
#include "fforge/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace fforge;

namespace {

GrMatrix to_matrix(const FiniteAbelianGroup& g, const ResidueRing& k,
                   const std::vector<std::vector<GroupRingElement>>& rows) {
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("matrix must be nonempty");
    GrMatrix m(g, k, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

DecompositionModel catalog_model(const std::string& name, int p) {
    for (const auto& m : default_catalog(p))
        if (m.name == name)
            return m;
    throw std::invalid_argument("no catalog model named " + name);
}

py::dict comparison(const FracIdealComparison& c) {
    py::dict d;
    d["equal"] = c.equal;
    d["projected"] = c.projected;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact group-ring algebra: Fitting ideals and Stickelberger elements";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    py::class_<FiniteAbelianGroup>(m, "Group")
        .def(py::init<std::vector<int>>(), py::arg("cyclic_orders"))
        .def_property_readonly("cyclic_orders", &FiniteAbelianGroup::cyclic_orders)
        .def_property_readonly("order", &FiniteAbelianGroup::order)
        .def("index_of", [](const FiniteAbelianGroup& g, std::vector<int> r) { return g.index_of(r); })
        .def("residues_of", &FiniteAbelianGroup::residues_of)
        .def("__eq__", &FiniteAbelianGroup::operator==)
        .def("__repr__", &FiniteAbelianGroup::to_string);

    py::class_<ResidueRing>(m, "ResidueRing")
        .def(py::init<std::int64_t, int>(), py::arg("p"), py::arg("M"))
        .def_property_readonly("p", &ResidueRing::prime)
        .def_property_readonly("M", &ResidueRing::exponent)
        .def_property_readonly("modulus", &ResidueRing::modulus);

    py::class_<GroupRingElement>(m, "Element")
        .def(py::init([](const FiniteAbelianGroup& g, const ResidueRing& k, std::vector<Residue> c) {
                 return gr_from(g, k, std::move(c));
             }),
             py::arg("group"), py::arg("ring"), py::arg("coeffs"))
        .def_static("one", &gr_one)
        .def_static("basis", &gr_basis)
        .def_property_readonly("coeffs", [](const GroupRingElement& x) { return x.coefficients(); })
        .def_property_readonly("group", &GroupRingElement::group)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("is_unit", [](const GroupRingElement& x) { return is_unit(x); })
        .def("inverse", [](const GroupRingElement& x) { return unit_inverse(x); })
        .def("__repr__", [](const GroupRingElement& x) { return to_string(x); });

    py::class_<IdealCanonical>(m, "Ideal")
        .def("contains", &IdealCanonical::contains)
        .def("is_zero", &IdealCanonical::is_zero)
        .def("is_unit_ideal", &IdealCanonical::is_unit_ideal)
        .def("rows", &IdealCanonical::rows)
        .def("generators", [](const IdealCanonical& I) { return ideal_generators(I); })
        .def("__eq__", &IdealCanonical::operator==);

    m.def("ideal", [](const std::vector<GroupRingElement>& gens) { return ideal_from_gens(gens); }, py::arg("generators"));
    m.def("minors",
          [](const FiniteAbelianGroup& g, const ResidueRing& k, const std::vector<std::vector<GroupRingElement>>& rows,
             std::size_t size) { return minors(to_matrix(g, k, rows), size); },
          py::arg("group"), py::arg("ring"), py::arg("matrix"), py::arg("size"));
    m.def("fitt",
          [](const FiniteAbelianGroup& g, const ResidueRing& k, const std::vector<std::vector<GroupRingElement>>& rows,
             std::size_t e) { return fitt(Presentation{to_matrix(g, k, rows)}, e); },
          py::arg("group"), py::arg("ring"), py::arg("matrix"), py::arg("e") = 0,
          "Fitting ideal of the module presented by the columns of matrix.");
    m.def("fitt_json",
          [](const std::string& doc, std::size_t e) {
              auto I = fitt(presentation_from_json(Json::parse(doc)), e);
              Json out = Json::array();
              for (const auto& r : I.rows())
                  out.push_back(r.coefficients());
              return out.dump();
          },
          py::arg("document"), py::arg("e") = 0);
    m.def("lift_unit",
          [](const FiniteAbelianGroup& source, const FiniteAbelianGroup& target, std::vector<std::size_t> factors,
             const GroupRingElement& u) { return lift_unit(GroupHom::reduction(source, target, factors), u); },
          py::arg("source"), py::arg("target"), py::arg("factor_map"), py::arg("unit"));

    m.def("catalog", [](int p) {
        std::vector<std::string> names;
        for (const auto& x : default_catalog(p))
            names.push_back(x.name);
        return names;
    }, py::arg("p") = 3);
    m.def("shifted_fitting_triangle",
          [](const std::string& name, int M, int p) {
              const auto model = catalog_model(name, p);
              auto res = build_A_Q(model, M);
              auto alt = shifted_fitt1_alternating(res);
              auto rm = rminor_fractional(res);
              auto in = intrinsic_ideal(model, M);
              py::dict d;
              d["alternating_vs_rminor"] = comparison(frac_ideal_eq(alt, rm));
              d["rminor_vs_intrinsic"] = comparison(frac_ideal_eq(rm, in));
              return d;
          },
          py::arg("model"), py::arg("M") = 2, py::arg("p") = 3);
    m.def("verify_minQ_zero", &verify_minQ_zero, py::arg("k"));
    m.def("minor_escapes", [](std::size_t k) { return classify_minor_monomials(k).escapes; }, py::arg("k"));

    m.def("stickelberger_json",
          [](int conductor, std::vector<std::int64_t> S, std::vector<std::int64_t> T) {
              StickelbergerRequest req;
              req.m = conductor;
              req.S.insert(S.begin(), S.end());
              req.T.insert(T.begin(), T.end());
              return stickelberger_to_json(build_stickelberger(req)).dump();
          },
          py::arg("m"), py::arg("S") = std::vector<std::int64_t>{}, py::arg("T") = std::vector<std::int64_t>{});
    m.def("dual_path_agrees", [](int conductor) { return theta_from_characters(conductor) == theta_min(conductor).value; },
          py::arg("m"));

    m.def("verify_json",
          [](const std::string& suite, int p, std::vector<int> M, unsigned jobs) {
              VerifyConfig cfg;
              cfg.p = p;
              cfg.M_values = std::move(M);
              cfg.jobs = jobs;
              VerificationReport rep;
              {
                  py::gil_scoped_release release;
                  rep = run_suite(suite, cfg);
              }
              return report_to_json(rep, false).dump();
          },
          py::arg("suite") = "all", py::arg("p") = 3, py::arg("M") = std::vector<int>{1, 2, 3}, py::arg("jobs") = 1);
}
