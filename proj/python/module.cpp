#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "coxcoh/foxneuwirth.hpp"
#include "coxcoh/hopf_b.hpp"
#include "coxcoh/hopf_d.hpp"
#include "coxcoh/quillen.hpp"
#include "coxcoh/steenrod.hpp"

namespace py = pybind11;
using namespace coxcoh;

namespace {

ElementB block_elt(GatheredBlockB b) {
    auto m = normalize_blocks({std::move(b)});
    return m ? ElementB::monomial(*m) : ElementB::zero();
}

Complex complex_of(const std::string& name) {
    if (name == "B") return Complex::B;
    if (name == "D") return Complex::D;
    if (name == "Dprime") return Complex::Dprime;
    throw std::invalid_argument("complex must be B, D or Dprime");
}

std::vector<std::pair<ElementB, ElementB>> cop_b(const ElementB& x) {
    std::vector<std::pair<ElementB, ElementB>> out;
    for (const auto& [a, b] : coproduct(x).terms)
        out.emplace_back(ElementB::monomial(a), ElementB::monomial(b));
    return out;
}

std::vector<std::pair<ElementD, ElementD>> cop_d(const ElementD& x) {
    std::vector<std::pair<ElementD, ElementD>> out;
    for (const auto& [a, b] : coproduct_d(x).terms)
        out.emplace_back(ElementD::monomial(a), ElementD::monomial(b));
    return out;
}

std::string restrict_elt_b(const ElementB& x, const std::string& label) {
    for (const auto& m : x.mons)
        for (const auto& s : sites_b(static_cast<int>(m.component())))
            if (s.label() == label) {
                Gf2Poly v(s.nvars());
                for (const auto& mm : x.mons) v = v + restrict_b(mm, s);
                return v.str(s.var_names());
            }
    throw std::invalid_argument("no site " + label + " for this element");
}

std::string restrict_elt_d(const ElementD& x, const std::string& label) {
    for (const auto& m : x.mons)
        for (const auto& s : sites_d(static_cast<int>(m.component())))
            if (s.label() == label) {
                Gf2Poly v(s.nvars());
                for (const auto& mm : x.mons) v = v + restrict_d(mm, s);
                return v.str(s.var_names());
            }
    throw std::invalid_argument("no site " + label + " for this element");
}

}  // namespace

PYBIND11_MODULE(_coxcoh, m) {
    m.doc() = "mod-2 cohomology of the signed and even-signed permutation groups";

    py::class_<ElementB>(m, "ElementB")
        .def(py::init<>())
        .def("is_zero", &ElementB::is_zero)
        .def("__add__", [](const ElementB& a, const ElementB& b) { return a + b; })
        .def("__mul__", &cup)
        .def("odot", &odot)
        .def(py::self == py::self)
        .def("__str__", &ElementB::str)
        .def("__repr__", [](const ElementB& x) { return "<ElementB " + x.str() + ">"; })
        .def("__len__", [](const ElementB& x) { return x.mons.size(); })
        .def("monomials",
             [](const ElementB& x) {
                 std::vector<ElementB> out;
                 for (const auto& mm : x.mons) out.push_back(ElementB::monomial(mm));
                 return out;
             })
        .def("component",
             [](const ElementB& x) {
                 if (x.mons.size() != 1)
                     throw std::invalid_argument("component of a non-monomial");
                 return x.mons.begin()->component();
             })
        .def("degree", [](const ElementB& x) {
            if (x.mons.size() != 1)
                throw std::invalid_argument("degree of a non-monomial");
            return x.mons.begin()->degree();
        });

    py::class_<ElementD>(m, "ElementD")
        .def(py::init<>())
        .def("is_zero", &ElementD::is_zero)
        .def("__add__", [](const ElementD& a, const ElementD& b) { return a + b; })
        .def("__mul__", &cup_d)
        .def("odot", &odot_d)
        .def(py::self == py::self)
        .def("__str__", &ElementD::str)
        .def("__repr__", [](const ElementD& x) { return "<ElementD " + x.str() + ">"; })
        .def("__len__", [](const ElementD& x) { return x.mons.size(); });

    // generators
    m.def("one",
          [](long n) { return n == 0 ? ElementB::unit() : block_elt(GatheredBlockB::unit(n)); },
          py::arg("n") = 0, "unit class of one component");
    m.def("delta", [](long n, int t) { return block_elt(GatheredBlockB::delta(n, t)); },
          py::arg("n"), py::arg("t") = 1);
    m.def("gamma",
          [](int k, long mm, int t) { return block_elt(GatheredBlockB::gamma(k, mm, t)); },
          py::arg("k"), py::arg("m"), py::arg("t") = 1);
    m.def("one_plus", &one_plus);
    m.def("one_minus", &one_minus);
    m.def("delta0", &delta0, py::arg("n"), py::arg("m"));
    m.def("gamma_sign", &gamma_sign, py::arg("k"), py::arg("m"), py::arg("minus"));

    // structure maps
    m.def("cup", &cup);
    m.def("odot", &odot);
    m.def("coproduct", &cop_b);
    m.def("cup_d", &cup_d);
    m.def("odot_d", &odot_d);
    m.def("coproduct_d", &cop_d);
    m.def("rho", &rho, "restriction along the index-2 inclusion");
    m.def("tr", &tr_d, "transfer back to the full sign group");
    m.def("iota", &iota_d, "outer conjugation involution");
    m.def("sq", py::overload_cast<int, const ElementB&>(&sq), py::arg("i"), py::arg("x"));
    m.def("sq", py::overload_cast<int, const ElementD&>(&sq), py::arg("i"), py::arg("x"));

    // bases and cellular ranks
    m.def("basis_b", [](int n, int d) {
        std::vector<ElementB> out;
        for (const auto& mm : basis_b(n, d)) out.push_back(ElementB::monomial(mm));
        return out;
    });
    m.def("basis_d", [](int n, int d) {
        std::vector<ElementD> out;
        for (const auto& mm : basis_d(n, d)) out.push_back(ElementD::monomial(mm));
        return out;
    });
    m.def("poincare_b", &poincare_b, py::arg("n"), py::arg("dmax"));
    m.def("poincare_d", &poincare_d, py::arg("n"), py::arg("dmax"));
    m.def("betti", [](const std::string& v, int n, int d) { return betti(complex_of(v), n, d); },
          py::arg("complex"), py::arg("n"), py::arg("d"));

    // detection sites
    m.def("sites_b", [](int n) {
        std::vector<std::string> out;
        for (const auto& s : sites_b(n)) out.push_back(s.label());
        return out;
    });
    m.def("sites_d", [](int n) {
        std::vector<std::string> out;
        for (const auto& s : sites_d(n)) out.push_back(s.label());
        return out;
    });
    m.def("restrict_b", &restrict_elt_b, py::arg("x"), py::arg("site"));
    m.def("restrict_d", &restrict_elt_d, py::arg("x"), py::arg("site"));

    m.def("render_svg", [](const ElementB& x) {
        if (x.mons.size() != 1) throw std::invalid_argument("svg of a non-monomial");
        return render_svg(*x.mons.begin());
    });
}
