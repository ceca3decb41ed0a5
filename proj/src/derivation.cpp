#include "teamproof/derivation.hpp"

#include <algorithm>
#include <array>

#include "teamproof/errors.hpp"
#include "teamproof/syntax.hpp"

namespace teamproof {

namespace {

constexpr std::array<const char*, 15> kNames = {"At",  "LBot", "LNeg", "RNeg", "LAnd",
                                               "RAnd", "LOr", "ROr",  "LGd",  "RGd",
                                               "Cut", "LOrI", "RAndI", "LC",  "RC"};

}  // namespace

std::string rule_name(Rule r) {
    auto i = static_cast<std::size_t>(r);
    return i < kNames.size() ? kNames[i] : "Unknown";
}

Rule rule_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kNames.size(); ++i)
        if (name == kNames[i]) return static_cast<Rule>(i);
    return Rule::Unknown;
}

bool acts_on_left(Rule r) {
    switch (r) {
        case Rule::At:
        case Rule::LBot:
        case Rule::LNeg:
        case Rule::LAnd:
        case Rule::LOr:
        case Rule::LGd:
        case Rule::LOrI:
        case Rule::LC: return true;
        default: return false;
    }
}

std::size_t rule_arity(Rule r) {
    switch (r) {
        case Rule::At:
        case Rule::LBot: return 0;
        case Rule::RAnd:
        case Rule::LOr:
        case Rule::LGd:
        case Rule::Cut:
        case Rule::LOrI:
        case Rule::RAndI: return 2;
        default: return 1;
    }
}

Derivation::Derivation(Sequent conclusion, RuleApp rule, std::vector<Derivation> premises) {
    auto n = std::make_shared<Node>();
    n->conclusion = std::move(conclusion);
    n->rule = std::move(rule);
    n->premises = std::move(premises);
    std::size_t h = 0;
    for (const auto& p : n->premises) {
        h = std::max(h, p.height());
        n->nodes += p.node_count();
    }
    n->height = h + 1;
    node_ = std::move(n);
}

const Formula& Derivation::principal_formula() const {
    const auto& r = rule();
    if (!r.principal) throw ShapeMismatch("rule " + rule_name(r.rule) + " has no principal formula");
    const auto& side = acts_on_left(r.rule) ? conclusion().antecedent : conclusion().succedent;
    if (*r.principal >= side.size()) throw ShapeMismatch("principal position out of range");
    return side[*r.principal];
}

std::size_t cutrank(const Derivation& d) {
    std::size_t r = 0;
    if (d.rule().rule == Rule::Cut && d.rule().cut_formula) r = d.rule().cut_formula->size();
    for (const auto& p : d.premises()) r = std::max(r, cutrank(p));
    return r;
}

bool is_cutfree(const Derivation& d) {
    if (d.rule().rule == Rule::Cut) return false;
    return std::all_of(d.premises().begin(), d.premises().end(), is_cutfree);
}

bool uses_only_classical_rules(const Derivation& d) {
    auto r = d.rule().rule;
    if (r == Rule::LGd || r == Rule::RGd) return false;
    return std::all_of(d.premises().begin(), d.premises().end(), uses_only_classical_rules);
}

namespace make {

Derivation at(const Sequent& c, const std::string& atom) {
    Formula p = Formula::prop(atom);
    auto a = index_of(c.antecedent, p);
    auto s = index_of(c.succedent, p);
    if (!a || !s) throw ShapeMismatch("no axiom on " + atom + " in " + render(c));
    RuleApp r;
    r.rule = Rule::At;
    r.principal = a;
    r.succedent_index = s;
    return Derivation(c, std::move(r));
}

Derivation lbot(const Sequent& c) {
    auto a = index_of(c.antecedent, Formula::bot());
    if (!a) throw ShapeMismatch("no bot in the antecedent of " + render(c));
    RuleApp r;
    r.rule = Rule::LBot;
    r.principal = a;
    return Derivation(c, std::move(r));
}

Derivation axiom(const Sequent& c) {
    for (const auto& f : c.antecedent)
        if (f.op() == Op::Prop && index_of(c.succedent, f)) return at(c, f.name());
    return lbot(c);
}

Derivation rule(Rule r, const Sequent& c, const Formula& principal, std::vector<Derivation> premises,
                RuleApp extra) {
    const auto& side = acts_on_left(r) ? c.antecedent : c.succedent;
    auto i = index_of(side, principal);
    if (!i) throw ShapeMismatch("principal " + render(principal) + " missing from " + render(c));
    extra.rule = r;
    extra.principal = i;
    if (r == Rule::RAnd || r == Rule::LOr) {
        auto rest = multiset_minus(r == Rule::RAnd ? remove_at(c.succedent, *i) : c.succedent,
                                   extra.weakening);
        if (!rest) throw ShapeMismatch("implicit weakening not contained in " + render(c));
        extra.context = *rest;
    }
    return Derivation(c, std::move(extra), std::move(premises));
}

Derivation cut(const Sequent& c, const Formula& f, Derivation left, Derivation right) {
    RuleApp r;
    r.rule = Rule::Cut;
    r.cut_formula = f;
    return Derivation(c, std::move(r), {std::move(left), std::move(right)});
}

Derivation rgd_chain(Derivation top, const Sequent& bottom) {
    const FormulaList upper = top.conclusion().succedent;
    if (upper.size() != bottom.succedent.size()) throw ShapeMismatch("succedents are not aligned");
    FormulaList succ = upper;
    for (std::size_t k = upper.size(); k-- > 0;) {
        if (upper[k] == bottom.succedent[k]) continue;
        auto decisions = find_resolution(bottom.succedent[k], upper[k]);
        if (!decisions) throw ShapeMismatch(render(upper[k]) + " is not a resolution of " + render(bottom.succedent[k]));
        auto chain = resolution_chain(bottom.succedent[k], *decisions);
        for (std::size_t j = chain.steps.size(); j-- > 0;) {
            succ[k] = chain.formulas[j];
            RuleApp extra;
            extra.path = chain.steps[j].path;
            extra.side = chain.steps[j].side;
            // locate the principal by position, duplicates elsewhere must not confuse it
            Sequent c{bottom.antecedent, succ};
            extra.rule = Rule::RGd;
            extra.principal = k;
            top = Derivation(std::move(c), std::move(extra), {std::move(top)});
        }
    }
    return top;
}

}  // namespace make

}  // namespace teamproof
