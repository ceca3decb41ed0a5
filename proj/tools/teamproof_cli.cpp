#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "teamproof/checker.hpp"
#include "teamproof/cut_elimination.hpp"
#include "teamproof/errors.hpp"
#include "teamproof/generate.hpp"
#include "teamproof/interpolation.hpp"
#include "teamproof/json_io.hpp"
#include "teamproof/normal_form.hpp"
#include "teamproof/prover.hpp"
#include "teamproof/resolutions.hpp"
#include "teamproof/semantics.hpp"
#include "teamproof/syntax.hpp"

using namespace teamproof;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kBudget = 3 };

struct Globals {
    std::size_t budget = ProverOptions{}.node_budget;
    std::size_t max_vars = OracleBudget{}.max_variables;
    bool json = false;
    std::uint64_t seed = 1;
};

Json read_json(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw FormatError("cannot open " + path);
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string team_text(const Team& t) {
    std::string out = "{";
    for (std::size_t k = 0; k < t.members().size(); ++k) {
        if (k) out += ", ";
        out += "{";
        for (std::size_t i = 0; i < t.domain().size(); ++i) {
            if (i) out += ",";
            out += t.domain()[i] + "=" + (t.value(t.members()[k], t.domain()[i]) ? "1" : "0");
        }
        out += "}";
    }
    return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proof search, proof checking and interpolation for propositional team logic"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--budget", g.budget, "prover node budget");
    app.add_option("--max-vars", g.max_vars, "variable cap for the brute-force oracle");
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--seed", g.seed, "seed for randomized commands");

    int code = kOk;
    std::string text, file, team_file, calculus = "gt", derivation_file;
    std::optional<std::size_t> degree;
    std::size_t count = 100;
    bool verbose = false;

    auto* prove = app.add_subcommand("prove", "derivation (exit 0) or countermodel team (exit 1)");
    prove->add_option("sequent", text)->required();
    auto* check = app.add_subcommand("check", "check a derivation JSON file");
    check->add_option("file", file)->required();
    check->add_option("--calculus", calculus)->check(CLI::IsMember({"gt", "gtprime"}));
    auto* eval = app.add_subcommand("eval", "evaluate a formula on a team");
    eval->add_option("formula", text)->required();
    eval->add_option("--team", team_file)->required();
    auto* valid = app.add_subcommand("valid", "brute-force validity of a sequent");
    valid->add_option("sequent", text)->required();
    auto* res = app.add_subcommand("resolutions", "resolutions or partial resolutions of a formula");
    res->add_option("formula", text)->required();
    res->add_option("--degree", degree);
    auto* closure = app.add_subcommand("closure", "closure properties of a formula");
    closure->add_option("formula", text)->required();
    auto* norm = app.add_subcommand("normalize", "normal form of a cutfree derivation");
    norm->add_option("file", file)->required();
    auto* cutelim = app.add_subcommand("cutelim", "eliminate cuts from a derivation");
    cutelim->add_option("file", file)->required();
    auto* resolve = app.add_subcommand("resolve", "classical leaves and resolution map of a derivation");
    resolve->add_option("file", file)->required();
    auto* interp = app.add_subcommand("interpolate", "sequent interpolant of a partition sequent");
    interp->add_option("partition", text)->required();
    interp->add_option("--derivation", derivation_file, "cutfree derivation to use instead of the prover's");
    interp->add_flag("-v,--verbose", verbose, "print both component derivations");
    auto* fuzz = app.add_subcommand("fuzz", "compare prover and oracle on random sequents");
    fuzz->add_option("--count", count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const ProverOptions popt{g.budget};
    const OracleBudget obudget{g.max_vars};
    try {
        if (prove->parsed()) {
            auto out = prove_or_countermodel(parse_plain_sequent(text), popt);
            if (auto* d = std::get_if<Derivation>(&out)) {
                emit(derivation_to_json(*d));
            } else {
                emit(team_to_json(std::get<Team>(out)));
                code = kInvalid;
            }
        } else if (check->parsed()) {
            Derivation d = derivation_from_json(read_json(file));
            auto r = check_derivation(d, calculus == "gt" ? Calculus::GT : Calculus::GTPrime);
            if (g.json) {
                Json j{{"ok", r.ok()}};
                if (!r.ok()) j["violation"] = {{"rule", r.violation->rule},
                                               {"reason", r.violation->reason},
                                               {"address", r.violation->address}};
                emit(j);
            } else {
                std::cout << (r.ok() ? "ok" : describe(*r.violation)) << "\n";
            }
            code = r.ok() ? kOk : kInvalid;
        } else if (eval->parsed()) {
            bool v = satisfies(team_from_json(read_json(team_file)), parse_formula(text));
            if (g.json) emit(Json{{"satisfied", v}});
            else std::cout << (v ? "true" : "false") << "\n";
            code = v ? kOk : kInvalid;
        } else if (valid->parsed()) {
            Sequent s = parse_plain_sequent(text);
            auto cm = find_countermodel_bruteforce(s, obudget);
            if (g.json) {
                Json j{{"valid", !cm}};
                if (cm) j["countermodel"] = team_to_json(*cm);
                emit(j);
            } else {
                std::cout << (cm ? "invalid " + team_text(*cm) : std::string("valid")) << "\n";
            }
            code = cm ? kInvalid : kOk;
        } else if (res->parsed()) {
            Formula f = parse_formula(text);
            std::vector<Formula> out = degree ? partial_resolutions(f, *degree) : resolutions(f);
            if (g.json) {
                Json a = Json::array();
                for (const auto& x : out) a.push_back(render(x));
                emit(a);
            } else {
                for (const auto& x : out) std::cout << render(x) << "\n";
            }
        } else if (closure->parsed()) {
            auto r = closure_properties(parse_formula(text), {}, obudget);
            Json j{{"empty_team", r.empty_team},
                   {"downward_closed", r.downward_closed},
                   {"union_closed", r.union_closed},
                   {"flat", r.flat}};
            if (g.json) {
                emit(j);
            } else {
                for (auto& [k, v] : j.items()) std::cout << k << " " << (v.get<bool>() ? "true" : "false") << "\n";
            }
        } else if (norm->parsed()) {
            emit(derivation_to_json(normalize(derivation_from_json(read_json(file)))));
        } else if (cutelim->parsed()) {
            emit(derivation_to_json(eliminate_cuts(derivation_from_json(read_json(file)))));
        } else if (resolve->parsed()) {
            emit(normal_form_to_json(resolve_derivation(derivation_from_json(read_json(file)))));
        } else if (interp->parsed()) {
            // no separator: Craig split, whole antecedent left, whole succedent right
            PartitionSequent p;
            if (text.find(';') == std::string::npos) {
                Sequent s = parse_plain_sequent(text);
                p.gamma1 = s.antecedent;
                p.delta2 = s.succedent;
            } else {
                p = parse_partition_sequent(text);
            }
            std::optional<Derivation> d;
            if (!derivation_file.empty()) {
                d = derivation_from_json(read_json(derivation_file));
            } else {
                auto out = prove_or_countermodel(p.flatten(), popt);
                if (auto* t = std::get_if<Team>(&out)) {
                    if (g.json) emit(Json{{"valid", false}, {"countermodel", team_to_json(*t)}});
                    else std::cout << "not valid, countermodel " << team_text(*t) << "\n";
                    return kInvalid;
                }
                d = std::get<Derivation>(out);
            }
            auto r = interpolate_partition(*d, p);
            if (g.json) {
                emit(interpolation_to_json(r, verbose));
            } else {
                std::cout << render(r.interpolant) << "\n";
                if (verbose) {
                    emit(derivation_to_json(r.left_derivation));
                    emit(derivation_to_json(r.right_derivation));
                }
            }
        } else if (fuzz->parsed()) {
            Rng rng(g.seed);
            std::size_t agree = 0;
            for (std::size_t i = 0; i < count; ++i) {
                Sequent s = random_sequent(rng);
                bool oracle = sequent_valid(s, obudget);
                auto out = prove_or_countermodel(s, popt);
                bool ok = std::holds_alternative<Derivation>(out)
                              ? oracle && check_derivation(std::get<Derivation>(out)).ok()
                              : !oracle && is_countermodel(std::get<Team>(out), s);
                if (ok) ++agree;
                else std::cerr << "disagreement on " << render(s) << "\n";
            }
            if (g.json) emit(Json{{"count", count}, {"agree", agree}, {"seed", g.seed}});
            else std::cout << agree << "/" << count << " agree (seed " << g.seed << ")\n";
            code = agree == count ? kOk : kInvalid;
        }
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kBudget;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error at " << e.position() << ": " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return code;
}
