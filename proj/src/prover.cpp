#include "teamproof/prover.hpp"

#include <algorithm>

#include "teamproof/errors.hpp"
#include "teamproof/resolutions.hpp"
#include "teamproof/syntax.hpp"

namespace teamproof {

namespace {

class Budget {
public:
    explicit Budget(std::size_t limit) : limit_(limit) {}
    void tick() {
        if (++used_ > limit_)
            throw ResourceLimit("node budget of " + std::to_string(limit_) + " exhausted");
    }
    std::size_t used() const { return used_; }

private:
    std::size_t limit_;
    std::size_t used_ = 0;
};

std::optional<std::size_t> find_op(const FormulaList& xs, Op op) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i].op() == op) return i;
    return std::nullopt;
}

class ClassicalSearch {
public:
    ClassicalSearch(std::vector<std::string> domain, Budget& budget) : domain_(std::move(domain)), budget_(budget) {
        if (domain_.size() > 64) throw ResourceLimit("more than 64 variables");
    }

    ClassicalOutcome run(const Sequent& s) {
        budget_.tick();
        const auto& G = s.antecedent;
        const auto& D = s.succedent;
        if (index_of(G, Formula::bot())) return make::lbot(s);
        for (const auto& f : G)
            if (f.op() == Op::Prop && index_of(D, f)) return make::at(s, f.name());

        if (auto i = find_op(G, Op::And)) {
            const Formula p = G[*i];
            return unary(Rule::LAnd, s, p, {concat(remove_at(G, *i), {p.left(), p.right()}), D});
        }
        if (auto i = find_op(D, Op::Or)) {
            const Formula p = D[*i];
            return unary(Rule::ROr, s, p, {G, concat(remove_at(D, *i), {p.left(), p.right()})});
        }
        if (auto i = find_op(G, Op::Neg)) {
            const Formula p = G[*i];
            return unary(Rule::LNeg, s, p, {remove_at(G, *i), concat(D, {p.child(0)})});
        }
        if (auto i = find_op(D, Op::Neg)) {
            const Formula p = D[*i];
            return unary(Rule::RNeg, s, p, {concat(G, {p.child(0)}), remove_at(D, *i)});
        }
        if (auto i = find_op(D, Op::And)) {
            const Formula p = D[*i];
            FormulaList rest = remove_at(D, *i);
            return binary(Rule::RAnd, s, p, {G, concat({p.left()}, rest)}, {G, concat({p.right()}, rest)});
        }
        if (auto i = find_op(G, Op::Or)) {
            const Formula p = G[*i];
            FormulaList rest = remove_at(G, *i);
            return binary(Rule::LOr, s, p, {concat(rest, {p.left()}), D}, {concat(rest, {p.right()}), D});
        }
        // atomic and open: v(p) = 1 iff p is in the antecedent
        Valuation v = 0;
        for (std::size_t i = 0; i < domain_.size(); ++i)
            if (index_of(G, Formula::prop(domain_[i]))) v |= Valuation{1} << i;
        return ClassicalCountermodel{Team(domain_, {v}), s, {}};
    }

private:
    ClassicalOutcome unary(Rule r, const Sequent& s, const Formula& p, const Sequent& premise) {
        auto sub = run(premise);
        if (auto* d = std::get_if<Derivation>(&sub)) return make::rule(r, s, p, {*d});
        auto cm = std::get<ClassicalCountermodel>(std::move(sub));
        RuleApp app;
        app.rule = r;
        app.principal = index_of(acts_on_left(r) ? s.antecedent : s.succedent, p);
        cm.team = lift_countermodel(s, app, {cm.team});
        cm.trace.insert(cm.trace.begin(), r);
        return cm;
    }

    ClassicalOutcome binary(Rule r, const Sequent& s, const Formula& p, const Sequent& a, const Sequent& b) {
        auto left = run(a);
        if (auto* cm = std::get_if<ClassicalCountermodel>(&left)) {
            cm->trace.insert(cm->trace.begin(), r);
            return left;  // either premise's team passes through
        }
        auto right = run(b);
        if (auto* cm = std::get_if<ClassicalCountermodel>(&right)) {
            cm->trace.insert(cm->trace.begin(), r);
            return right;
        }
        return make::rule(r, s, p, {std::get<Derivation>(left), std::get<Derivation>(right)});
    }

    std::vector<std::string> domain_;
    Budget& budget_;
};

class GtSearch {
public:
    GtSearch(std::vector<std::string> domain, Budget& budget) : domain_(std::move(domain)), budget_(budget) {}

    // Stage 1: invert L|| until the antecedent is classical.
    ProofOutcome stage1(const Sequent& s) {
        budget_.tick();
        for (std::size_t k = 0; k < s.antecedent.size(); ++k) {
            const Formula chi = s.antecedent[k];
            if (chi.is_classical()) continue;
            OccurrencePath path = gd_paths(chi).front();
            const Formula& g = subformula_at(chi, path);
            Sequent left = s, right = s;
            left.antecedent[k] = substitute_at(chi, path, g.left());
            right.antecedent[k] = substitute_at(chi, path, g.right());
            auto a = stage1(left);
            if (std::holds_alternative<Team>(a)) return a;
            auto b = stage1(right);
            if (std::holds_alternative<Team>(b)) return b;
            RuleApp app;
            app.rule = Rule::LGd;
            app.principal = k;
            app.path = path;
            return Derivation(s, std::move(app), {std::get<Derivation>(a), std::get<Derivation>(b)});
        }
        return stage2(s);
    }

private:
    // Stages 2 and 3: some resolution of the succedent must follow classically.
    ProofOutcome stage2(const Sequent& s) {
        std::optional<Team> lifted;
        for (const auto& lambda : resolution_choices(s.succedent)) {
            budget_.tick();
            Sequent candidate{s.antecedent, lambda};
            ClassicalSearch cs(domain_, budget_);
            auto out = cs.run(candidate);
            if (auto* d = std::get_if<Derivation>(&out)) return make::rgd_chain(*d, s);
            // a countermodel for every candidate: by downward closure their union
            // falsifies every resolution, which is what iterated RGd lifting yields
            const Team& t = std::get<ClassicalCountermodel>(out).team;
            lifted = lifted ? lifted->unite(t) : t;
        }
        return *lifted;
    }

    std::vector<std::string> domain_;
    Budget& budget_;
};

}  // namespace

ClassicalOutcome prove_classical(const Sequent& s, const std::vector<std::string>& domain,
                                 const ProverOptions& options) {
    if (!s.is_classical()) throw NonClassicalInput("prove_classical needs classical formulas");
    Budget budget(options.node_budget);
    std::vector<std::string> dom = domain;
    if (dom.empty()) dom = domain_of(s);
    ClassicalSearch cs(std::move(dom), budget);
    return cs.run(s);
}

ProofOutcome prove_or_countermodel(const Sequent& s, const ProverOptions& options) {
    Budget budget(options.node_budget);
    GtSearch search(domain_of(s), budget);
    return search.stage1(s);
}

Team lift_countermodel(const Sequent& conclusion, const RuleApp& rule, const std::vector<Team>& models) {
    auto need = [&](std::size_t n) {
        if (models.size() != n)
            throw CaseMismatch(rule_name(rule.rule) + " lifting takes " + std::to_string(n) + " team(s)");
    };
    switch (rule.rule) {
        case Rule::LNeg: {
            need(1);
            if (!rule.principal || *rule.principal >= conclusion.antecedent.size())
                throw CaseMismatch("LNeg without a principal formula");
            const Formula& f = conclusion.antecedent[*rule.principal];
            if (f.op() != Op::Neg) throw CaseMismatch("LNeg principal is not a negation");
            std::vector<Valuation> keep;
            for (auto v : models[0].members())
                if (!satisfies(Team(models[0].domain(), {v}), f.child(0))) keep.push_back(v);
            return models[0].filter(keep);
        }
        case Rule::RGd: need(2); return models[0].unite(models[1]);
        case Rule::RNeg:
        case Rule::LAnd:
        case Rule::ROr:
        case Rule::RAnd:
        case Rule::LOr:
        case Rule::LGd: need(1); return models[0];
        default: throw CaseMismatch("no countermodel lifting for " + rule_name(rule.rule));
    }
}

}  // namespace teamproof
