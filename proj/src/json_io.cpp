#include "teamproof/json_io.hpp"

#include "teamproof/errors.hpp"
#include "teamproof/syntax.hpp"

namespace teamproof {

namespace {

const char* op_tag(Op op) {
    switch (op) {
        case Op::Prop: return "prop";
        case Op::Bot: return "bot";
        case Op::Neg: return "neg";
        case Op::And: return "and";
        case Op::Or: return "or";
        case Op::Gd: return "gd";
    }
    return "?";
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json formula_to_json(const Formula& f) {
    Json j{{"op", op_tag(f.op())}};
    switch (f.op()) {
        case Op::Prop: j["name"] = f.name(); break;
        case Op::Bot: break;
        case Op::Neg: j["arg"] = formula_to_json(f.child(0)); break;
        default:
            j["l"] = formula_to_json(f.left());
            j["r"] = formula_to_json(f.right());
    }
    return j;
}

Formula formula_from_json(const Json& j) {
    if (j.is_string()) return parse_formula(j.get<std::string>());
    const auto op = field(j, "op").get<std::string>();
    if (op == "prop") return Formula::prop(field(j, "name").get<std::string>());
    if (op == "bot") return Formula::bot();
    if (op == "neg") return Formula::neg(formula_from_json(field(j, "arg")));
    Formula l = formula_from_json(field(j, "l"));
    Formula r = formula_from_json(field(j, "r"));
    if (op == "and") return Formula::conj(l, r);
    if (op == "or") return Formula::split(l, r);
    if (op == "gd") return Formula::gd(l, r);
    throw FormatError("unknown formula op '" + op + "'");
}

Json formulas_to_json(const FormulaList& xs) {
    Json a = Json::array();
    for (const auto& f : xs) a.push_back(formula_to_json(f));
    return a;
}

FormulaList formulas_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("expected an array of formulas");
    FormulaList xs;
    for (const auto& e : j) xs.push_back(formula_from_json(e));
    return xs;
}

Json sequent_to_json(const Sequent& s) {
    return {{"antecedent", formulas_to_json(s.antecedent)}, {"succedent", formulas_to_json(s.succedent)}};
}

Sequent sequent_from_json(const Json& j) {
    if (j.is_string()) return parse_plain_sequent(j.get<std::string>());
    return {formulas_from_json(field(j, "antecedent")), formulas_from_json(field(j, "succedent"))};
}

Json partition_to_json(const PartitionSequent& p) {
    return {{"gamma1", formulas_to_json(p.gamma1)},
            {"gamma2", formulas_to_json(p.gamma2)},
            {"delta1", formulas_to_json(p.delta1)},
            {"delta2", formulas_to_json(p.delta2)}};
}

Json team_to_json(const Team& t) {
    Json rows = Json::array();
    for (auto v : t.members()) {
        Json row = Json::array();
        for (std::size_t i = 0; i < t.domain().size(); ++i) row.push_back((v >> i) & 1U);
        rows.push_back(row);
    }
    return {{"vars", t.domain()}, {"team", rows}};
}

Team team_from_json(const Json& j) {
    auto vars = field(j, "vars").get<std::vector<std::string>>();
    if (vars.size() > 64) throw FormatError("more than 64 variables");
    std::vector<Valuation> members;
    for (const auto& row : field(j, "team")) {
        if (!row.is_array() || row.size() != vars.size()) throw FormatError("valuation length differs from vars");
        Valuation v = 0;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            auto bit = row[i].get<int>();
            if (bit != 0 && bit != 1) throw FormatError("valuation entries must be 0 or 1");
            if (bit) v |= Valuation{1} << i;
        }
        members.push_back(v);
    }
    return Team(std::move(vars), std::move(members));
}

Json derivation_to_json(const Derivation& d) {
    const RuleApp& r = d.rule();
    Json meta = Json::object();
    if (r.principal) meta["principal"] = *r.principal;
    if (r.succedent_index) meta["succedent_index"] = *r.succedent_index;
    if (r.rule == Rule::LGd || r.rule == Rule::RGd || !r.path.empty()) meta["path"] = r.path;
    if (r.side) meta["side"] = *r.side == Side::L ? "L" : "R";
    if (r.rule == Rule::RAnd || r.rule == Rule::LOr) {
        meta["weakening"] = formulas_to_json(r.weakening);
        meta["context"] = formulas_to_json(r.context);
    }
    if (r.cut_formula) meta["cut_formula"] = formula_to_json(*r.cut_formula);
    if (r.rule == Rule::LOrI || r.rule == Rule::RAndI)
        meta["split"] = {{"antecedent", formulas_to_json(r.split_antecedent)},
                         {"succedent", formulas_to_json(r.split_succedent)}};
    Json premises = Json::array();
    for (const auto& p : d.premises()) premises.push_back(derivation_to_json(p));
    return {{"rule", r.rule == Rule::Unknown ? r.name : rule_name(r.rule)},
            {"conclusion", sequent_to_json(d.conclusion())},
            {"meta", meta},
            {"premises", premises}};
}

Derivation derivation_from_json(const Json& j) {
    RuleApp r;
    r.name = field(j, "rule").get<std::string>();
    r.rule = rule_from_name(r.name);
    Sequent c = sequent_from_json(field(j, "conclusion"));
    const Json meta = j.contains("meta") ? j.at("meta") : Json::object();
    try {
        if (meta.contains("principal")) r.principal = meta.at("principal").get<std::size_t>();
        if (meta.contains("succedent_index")) r.succedent_index = meta.at("succedent_index").get<std::size_t>();
        if (meta.contains("path")) r.path = meta.at("path").get<OccurrencePath>();
        if (meta.contains("side")) {
            auto s = meta.at("side").get<std::string>();
            if (s != "L" && s != "R") throw FormatError("side must be L or R");
            r.side = s == "L" ? Side::L : Side::R;
        }
        if (meta.contains("weakening")) r.weakening = formulas_from_json(meta.at("weakening"));
        if (meta.contains("context")) r.context = formulas_from_json(meta.at("context"));
        if (meta.contains("cut_formula")) r.cut_formula = formula_from_json(meta.at("cut_formula"));
        if (meta.contains("split")) {
            r.split_antecedent = formulas_from_json(field(meta.at("split"), "antecedent"));
            r.split_succedent = formulas_from_json(field(meta.at("split"), "succedent"));
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad meta: ") + e.what());
    }
    std::vector<Derivation> premises;
    if (j.contains("premises"))
        for (const auto& p : j.at("premises")) premises.push_back(derivation_from_json(p));
    return Derivation(std::move(c), std::move(r), std::move(premises));
}

Json normal_form_to_json(const NormalForm& nf) {
    Json leaves = Json::array();
    Json map = Json::array();
    for (const auto& l : nf.leaves) {
        leaves.push_back({{"resolution", formulas_to_json(l.antecedent)},
                          {"image", formulas_to_json(l.succedent)},
                          {"derivation", derivation_to_json(l.proof)}});
        map.push_back({{"from", render(l.antecedent)}, {"to", render(l.succedent)}});
    }
    return {{"endsequent", sequent_to_json(nf.endsequent)}, {"leaves", leaves}, {"map", map}};
}

Json interpolation_to_json(const InterpolationResult& r, bool with_derivations) {
    Json j{{"interpolant", render(r.interpolant)},
           {"interpolant_ast", formula_to_json(r.interpolant)},
           {"polarity",
            {{"positive", r.polarity.interpolant.positive},
             {"negative", r.polarity.interpolant.negative},
             {"allowed_positive", r.polarity.allowed.positive},
             {"allowed_negative", r.polarity.allowed.negative},
             {"ok", r.polarity.ok}}}};
    if (with_derivations) {
        j["left_derivation"] = derivation_to_json(r.left_derivation);
        j["right_derivation"] = derivation_to_json(r.right_derivation);
    }
    return j;
}

}  // namespace teamproof
