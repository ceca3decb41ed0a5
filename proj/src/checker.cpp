#include "teamproof/checker.hpp"

#include "teamproof/syntax.hpp"

namespace teamproof {

namespace {

bool allowed(Rule r, Calculus c) {
    switch (r) {
        case Rule::Unknown: return false;
        case Rule::RAnd:
        case Rule::LOr: return c == Calculus::GT;
        case Rule::LOrI:
        case Rule::RAndI:
        case Rule::LC:
        case Rule::RC: return c == Calculus::GTPrime;
        default: return true;
    }
}

struct Ctx {
    const Sequent& c;
    const RuleApp& app;
    const std::vector<Sequent>& ps;
};

using Reason = std::optional<std::string>;

Reason expect_sequent(const Sequent& got, const FormulaList& ant, const FormulaList& suc, const char* which) {
    if (!same_multiset(got.antecedent, ant))
        return std::string(which) + " antecedent should be [" + render(ant) + "] but is [" +
               render(got.antecedent) + "]";
    if (!same_multiset(got.succedent, suc))
        return std::string(which) + " succedent should be [" + render(suc) + "] but is [" +
               render(got.succedent) + "]";
    return std::nullopt;
}

Reason check_rule(const Ctx& x) {
    const auto& c = x.c;
    const auto& app = x.app;
    Rule r = app.rule;
    if (r == Rule::Cut) {
        if (!app.cut_formula) return "missing cut formula";
        const Formula& f = *app.cut_formula;
        const auto& p1 = x.ps[0];
        const auto& p2 = x.ps[1];
        auto delta = multiset_minus(p1.succedent, {f});
        auto pi = multiset_minus(p2.antecedent, {f});
        if (!delta) return "left premise lacks the cut formula on the right";
        if (!pi) return "right premise lacks the cut formula on the left";
        return expect_sequent(c, concat(*pi, p1.antecedent), concat(*delta, p2.succedent), "conclusion");
    }
    const auto& side = acts_on_left(r) ? c.antecedent : c.succedent;
    if (!app.principal || *app.principal >= side.size()) return "principal position missing or out of range";
    const Formula& p = side[*app.principal];
    FormulaList rest = remove_at(side, *app.principal);
    const FormulaList& G = c.antecedent;
    const FormulaList& D = c.succedent;
    switch (r) {
        case Rule::At: {
            if (p.op() != Op::Prop) return "left principal is not a variable";
            if (!app.succedent_index || *app.succedent_index >= D.size()) return "right position missing";
            if (!(D[*app.succedent_index] == p)) return "right formula differs from " + render(p);
            return std::nullopt;
        }
        case Rule::LBot:
            if (p.op() != Op::Bot) return "principal is not bot";
            return std::nullopt;
        case Rule::LNeg:
            if (p.op() != Op::Neg) return "principal is not a negation";
            return expect_sequent(x.ps[0], rest, concat(D, {p.child(0)}), "premise");
        case Rule::RNeg:
            if (p.op() != Op::Neg) return "principal is not a negation";
            return expect_sequent(x.ps[0], concat(G, {p.child(0)}), rest, "premise");
        case Rule::LAnd:
            if (p.op() != Op::And) return "principal is not a conjunction";
            return expect_sequent(x.ps[0], concat(rest, {p.left(), p.right()}), D, "premise");
        case Rule::ROr:
            if (p.op() != Op::Or) return "principal is not a split disjunction";
            return expect_sequent(x.ps[0], G, concat(rest, {p.left(), p.right()}), "premise");
        case Rule::RAnd:
        case Rule::LOr: {
            if (p.op() != (r == Rule::RAnd ? Op::And : Op::Or)) return "principal has the wrong connective";
            auto lambda = multiset_minus(r == Rule::RAnd ? rest : D, app.weakening);
            if (!lambda) return "implicit weakening is not part of the conclusion succedent";
            if (!same_multiset(*lambda, app.context)) return "declared context does not match";
            if (!all_classical(*lambda)) return "premise right context contains a || formula";
            if (r == Rule::RAnd) {
                if (auto e = expect_sequent(x.ps[0], G, concat({p.left()}, *lambda), "left premise")) return e;
                return expect_sequent(x.ps[1], G, concat({p.right()}, *lambda), "right premise");
            }
            if (auto e = expect_sequent(x.ps[0], concat(rest, {p.left()}), *lambda, "left premise")) return e;
            return expect_sequent(x.ps[1], concat(rest, {p.right()}), *lambda, "right premise");
        }
        case Rule::LGd:
        case Rule::RGd: {
            if (!is_valid_path(p, app.path)) return "path does not address an occurrence";
            const Formula& g = subformula_at(p, app.path);
            if (g.op() != Op::Gd) return "path does not address a || occurrence";
            if (r == Rule::LGd) {
                if (auto e = expect_sequent(x.ps[0], concat(rest, {substitute_at(p, app.path, g.left())}), D,
                                            "left premise"))
                    return e;
                return expect_sequent(x.ps[1], concat(rest, {substitute_at(p, app.path, g.right())}), D,
                                      "right premise");
            }
            if (!app.side) return "missing chosen side";
            return expect_sequent(x.ps[0], G,
                                  concat(rest, {substitute_at(p, app.path, g.child(side_index(*app.side)))}),
                                  "premise");
        }
        case Rule::LOrI:
        case Rule::RAndI: {
            if (p.op() != (r == Rule::LOrI ? Op::Or : Op::And)) return "principal has the wrong connective";
            auto g2 = multiset_minus(r == Rule::LOrI ? rest : G, app.split_antecedent);
            auto d2 = multiset_minus(r == Rule::LOrI ? D : rest, app.split_succedent);
            if (!g2 || !d2) return "declared context split is not part of the conclusion";
            if (r == Rule::LOrI) {
                if (auto e = expect_sequent(x.ps[0], concat(app.split_antecedent, {p.left()}),
                                            app.split_succedent, "left premise"))
                    return e;
                return expect_sequent(x.ps[1], concat(*g2, {p.right()}), *d2, "right premise");
            }
            if (auto e = expect_sequent(x.ps[0], app.split_antecedent,
                                        concat({p.left()}, app.split_succedent), "left premise"))
                return e;
            return expect_sequent(x.ps[1], *g2, concat({p.right()}, *d2), "right premise");
        }
        case Rule::LC: return expect_sequent(x.ps[0], concat(G, {p}), D, "premise");
        case Rule::RC:
            if (!p.is_classical()) return "right contraction of a formula containing ||";
            return expect_sequent(x.ps[0], G, concat(D, {p}), "premise");
        default: return "unknown rule";
    }
}

CheckResult fail(Violation::Kind k, const RuleApp& app, std::string reason) {
    std::string name = app.rule == Rule::Unknown ? (app.name.empty() ? "Unknown" : app.name) : rule_name(app.rule);
    return {Violation{k, std::move(name), std::move(reason), {}}};
}

CheckResult check_at(const Derivation& d, Calculus calc, std::vector<std::size_t>& addr) {
    std::vector<Sequent> ps;
    for (const auto& p : d.premises()) ps.push_back(p.conclusion());
    auto res = check_inference(d.conclusion(), d.rule(), ps, calc);
    if (!res.ok()) {
        res.violation->address = addr;
        return res;
    }
    for (std::size_t i = 0; i < d.premises().size(); ++i) {
        addr.push_back(i);
        auto sub = check_at(d.premises()[i], calc, addr);
        addr.pop_back();
        if (!sub.ok()) return sub;
    }
    return {};
}

}  // namespace

CheckResult check_inference(const Sequent& conclusion, const RuleApp& rule, const std::vector<Sequent>& premises,
                            Calculus calculus) {
    if (rule.rule == Rule::Unknown) return fail(Violation::Kind::RuleViolation, rule, "unknown rule");
    if (!allowed(rule.rule, calculus))
        return fail(Violation::Kind::RuleViolation, rule,
                    std::string("rule not part of ") + (calculus == Calculus::GT ? "GT" : "GT'"));
    if (premises.size() != rule_arity(rule.rule))
        return fail(Violation::Kind::ArityMismatch, rule,
                    "expected " + std::to_string(rule_arity(rule.rule)) + " premises, got " +
                        std::to_string(premises.size()));
    if (auto reason = check_rule({conclusion, rule, premises}))
        return fail(Violation::Kind::RuleViolation, rule, *reason);
    return {};
}

CheckResult check_derivation(const Derivation& d, Calculus calculus) {
    std::vector<std::size_t> addr;
    return check_at(d, calculus, addr);
}

std::string describe(const Violation& v) {
    std::string a = "[";
    for (std::size_t i = 0; i < v.address.size(); ++i) a += (i ? "," : "") + std::to_string(v.address[i]);
    a += "]";
    return "violation at " + a + ": " + v.rule + ": " + v.reason;
}

}  // namespace teamproof
