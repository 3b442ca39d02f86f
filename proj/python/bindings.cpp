#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schubert/render.hpp"
#include "schubert/report.hpp"

namespace py = pybind11;
using namespace schubert;

namespace {

// Classes cross the boundary as {word: coefficient} in the epsilon basis.
py::dict to_dict(const CohomologyClass& c)
{
    py::dict d;
    for (const auto& [w, x] : c.terms())
        d[py::str(format_word(c.group(), w))] = x;
    return d;
}

py::dict to_dict(const WeylGroup& g, const SparseCoeffs& c)
{
    py::dict d;
    for (const auto& [w, x] : c)
        d[py::str(format_word(g, w))] = x;
    return d;
}

class Flag {
public:
    Flag(const std::string& type, int rank, std::optional<std::string> cache_dir)
    {
        std::optional<TableCache> cache;
        if (cache_dir)
            cache.emplace(*cache_dir);
        e_ = Engine::build(parse_series(type), rank, cache ? &*cache : nullptr, nullptr);
    }

    std::string name() const { return e_.group->name(); }
    std::size_t order() const { return e_.group->order(); }
    int rank() const { return e_.group->rank(); }
    std::string convention() const { return std::string(convention_name(e_.csm->convention())); }

    std::vector<std::string> elements() const
    {
        std::vector<std::string> out;
        for (const auto& w : e_.group->elements())
            out.push_back(format_word(w));
        return out;
    }
    int length(const std::string& w) const { return el(w).length(); }
    std::string canonical(const std::string& w) const { return format_word(el(w)); }
    bool bruhat_leq(const std::string& v, const std::string& w) const { return e_.group->bruhat_leq(el(v), el(w)); }

    py::dict cup(const std::string& u, const std::string& v) const
    {
        return to_dict(e_.h->cup(e_.h->basis(el(u)), e_.h->basis(el(v))));
    }
    Int structure_constant(const std::string& u, const std::string& v, const std::string& w) const
    {
        return e_.h->structure_constant(el(u), el(v), el(w));
    }

    py::dict csm(const std::string& u) const { return to_dict(e_.csm->csm_schubert_cell(el(u))); }
    py::dict csm_opposite(const std::string& v) const { return to_dict(e_.csm->csm_opposite_cell(el(v))); }
    py::dict segre(const std::string& u) const { return to_dict(e_.csm->segre_schubert_cell(el(u))); }
    py::dict tangent_chern() const { return to_dict(e_.csm->tangent_chern()); }

    py::dict csm_richardson(const std::string& u, const std::string& v) const
    {
        return to_dict(e_.rich->csm_richardson(el(u), el(v)));
    }
    py::dict richardson_coeffs(const std::string& u, const std::string& v) const
    {
        return to_dict(*e_.group, e_.rich->richardson_coeffs(el(u), el(v)).c);
    }
    py::dict csm_basis_coeffs(const std::string& u, const std::string& v) const
    {
        return to_dict(*e_.group, e_.rich->richardson_csm_coeffs(el(u), el(v)).d);
    }

    Int chi(const std::string& u, const std::string& v, const std::string& w) const
    {
        return e_.box->chi(el(u), el(v), el(w));
    }
    py::dict box_product(const std::string& u, const std::string& v) const
    {
        return to_dict(e_.box->box_product(el(u), el(v)));
    }
    std::string format(const std::string& what, const std::string& u, const std::string& v) const
    {
        if (what == "csm")
            return format_class(e_.csm->csm_schubert_cell(el(u)));
        if (what == "richardson")
            return format_class(e_.rich->csm_richardson(el(u), el(v)));
        if (what == "box")
            return format_class(e_.box->box_product(el(u), el(v)));
        throw py::value_error("expected csm, richardson or box");
    }

private:
    WeylElement el(const std::string& w) const { return parse_word(*e_.group, w); }

    Engine e_;
};

std::string verify_json(const std::string& type, int rank, std::vector<std::string> suites,
                        std::optional<int> max_length, int jobs)
{
    VerifyOptions o;
    o.series = parse_series(type);
    o.rank = rank;
    o.max_length = max_length;
    o.jobs = jobs;
    if (!suites.empty()) {
        o.suites.clear();
        for (const auto& s : suites) {
            auto p = parse_suite(s);
            if (!p)
                throw py::value_error("unknown suite " + s);
            o.suites.push_back(*p);
        }
    }
    py::gil_scoped_release release;
    return report_to_json(run_verification(o)).dump();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact CSM classes, Richardson coefficients and the box product on G/B";

    py::register_exception<InternalInvariantError>(m, "InternalInvariantError");
    py::register_exception<Error>(m, "SchubertError", PyExc_ValueError);

    py::class_<Flag>(m, "Flag")
        .def(py::init<const std::string&, int, std::optional<std::string>>(), py::arg("type"), py::arg("rank"),
             py::arg("cache_dir") = py::none())
        .def_property_readonly("name", &Flag::name)
        .def_property_readonly("order", &Flag::order)
        .def_property_readonly("rank", &Flag::rank)
        .def_property_readonly("csm_convention", &Flag::convention)
        .def("elements", &Flag::elements)
        .def("length", &Flag::length)
        .def("canonical", &Flag::canonical)
        .def("bruhat_leq", &Flag::bruhat_leq)
        .def("cup", &Flag::cup)
        .def("structure_constant", &Flag::structure_constant)
        .def("csm", &Flag::csm)
        .def("csm_opposite", &Flag::csm_opposite)
        .def("segre", &Flag::segre)
        .def("tangent_chern", &Flag::tangent_chern)
        .def("csm_richardson", &Flag::csm_richardson)
        .def("richardson_coeffs", &Flag::richardson_coeffs)
        .def("csm_basis_coeffs", &Flag::csm_basis_coeffs)
        .def("chi", &Flag::chi)
        .def("box_product", &Flag::box_product)
        .def("format", &Flag::format, py::arg("what"), py::arg("u"), py::arg("v") = "e");

    m.def("verify_json", &verify_json, py::arg("type"), py::arg("rank"), py::arg("suites") = std::vector<std::string>{},
          py::arg("max_length") = py::none(), py::arg("jobs") = 1);
    m.def("version", &tool_version);
}
