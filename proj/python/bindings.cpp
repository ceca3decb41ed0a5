#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "teamproof/checker.hpp"
#include "teamproof/cut_elimination.hpp"
#include "teamproof/errors.hpp"
#include "teamproof/interpolation.hpp"
#include "teamproof/json_io.hpp"
#include "teamproof/normal_form.hpp"
#include "teamproof/prover.hpp"
#include "teamproof/resolutions.hpp"
#include "teamproof/semantics.hpp"
#include "teamproof/syntax.hpp"

namespace py = pybind11;
using namespace teamproof;

// Structured values cross the boundary as JSON text; the Python package decodes them.

namespace {

Derivation load(const std::string& text) {
    try {
        return derivation_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
        throw FormatError(e.what());
    }
}

std::string prove(const std::string& sequent, std::size_t budget) {
    auto out = prove_or_countermodel(parse_plain_sequent(sequent), ProverOptions{budget});
    if (auto* d = std::get_if<Derivation>(&out))
        return Json{{"valid", true}, {"derivation", derivation_to_json(*d)}}.dump();
    return Json{{"valid", false}, {"countermodel", team_to_json(std::get<Team>(out))}}.dump();
}

std::string countermodel(const std::string& sequent, std::size_t max_vars) {
    auto cm = find_countermodel_bruteforce(parse_plain_sequent(sequent), OracleBudget{max_vars});
    return cm ? team_to_json(*cm).dump() : "null";
}

py::tuple check(const std::string& derivation, const std::string& calculus) {
    if (calculus != "gt" && calculus != "gtprime") throw py::value_error("calculus must be 'gt' or 'gtprime'");
    auto r = check_derivation(load(derivation), calculus == "gt" ? Calculus::GT : Calculus::GTPrime);
    return py::make_tuple(r.ok(), r.ok() ? std::string() : describe(*r.violation));
}

std::vector<std::string> resolve_formula(const std::string& formula, std::optional<std::size_t> degree) {
    Formula f = parse_formula(formula);
    std::vector<std::string> out;
    for (const auto& r : degree ? partial_resolutions(f, *degree) : resolutions(f)) out.push_back(render(r));
    return out;
}

py::dict closure(const std::string& formula) {
    auto r = closure_properties(parse_formula(formula));
    py::dict d;
    d["empty_team"] = r.empty_team;
    d["downward_closed"] = r.downward_closed;
    d["union_closed"] = r.union_closed;
    d["flat"] = r.flat;
    return d;
}

std::string interpolate(const std::string& partition, std::size_t budget) {
    PartitionSequent p;
    if (partition.find(';') == std::string::npos) {
        Sequent s = parse_plain_sequent(partition);
        p.gamma1 = s.antecedent;
        p.delta2 = s.succedent;
    } else {
        p = parse_partition_sequent(partition);
    }
    auto out = prove_or_countermodel(p.flatten(), ProverOptions{budget});
    if (auto* t = std::get_if<Team>(&out)) return Json{{"valid", false}, {"countermodel", team_to_json(*t)}}.dump();
    Json j = interpolation_to_json(interpolate_partition(std::get<Derivation>(out), p), false);
    j["valid"] = true;
    return j.dump();
}

}  // namespace

PYBIND11_MODULE(_teamproof, m) {
    m.doc() = "Sequent calculus for propositional team logic with split and global disjunction";

    auto base = py::register_exception<Error>(m, "TeamproofError");
    py::register_exception<SyntaxError>(m, "ParseError", base.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());

    m.def("render_formula", [](const std::string& s) { return render(parse_formula(s)); }, py::arg("formula"));
    m.def("is_classical", [](const std::string& s) { return parse_formula(s).is_classical(); },
          py::arg("formula"));
    m.def("satisfies",
          [](const std::string& formula, const std::string& team) {
              return satisfies(team_from_json(Json::parse(team)), parse_formula(formula));
          },
          py::arg("formula"), py::arg("team_json"));
    m.def("sequent_valid",
          [](const std::string& s, std::size_t max_vars) {
              return sequent_valid(parse_plain_sequent(s), OracleBudget{max_vars});
          },
          py::arg("sequent"), py::arg("max_vars") = OracleBudget{}.max_variables);
    m.def("countermodel", &countermodel, py::arg("sequent"), py::arg("max_vars") = OracleBudget{}.max_variables);
    m.def("closure", &closure, py::arg("formula"));
    m.def("resolutions", &resolve_formula, py::arg("formula"), py::arg("degree") = py::none());
    m.def("prove", &prove, py::arg("sequent"), py::arg("budget") = ProverOptions{}.node_budget);
    m.def("check", &check, py::arg("derivation_json"), py::arg("calculus") = "gt");
    m.def("normalize", [](const std::string& d) { return derivation_to_json(normalize(load(d))).dump(); },
          py::arg("derivation_json"));
    m.def("eliminate_cuts", [](const std::string& d) { return derivation_to_json(eliminate_cuts(load(d))).dump(); },
          py::arg("derivation_json"));
    m.def("resolve", [](const std::string& d) { return normal_form_to_json(resolve_derivation(load(d))).dump(); },
          py::arg("derivation_json"));
    m.def("interpolate", &interpolate, py::arg("partition"), py::arg("budget") = ProverOptions{}.node_budget);
}
