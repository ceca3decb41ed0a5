#include "teamproof/interpolation.hpp"

#include <algorithm>
#include <iterator>

#include "teamproof/checker.hpp"
#include "teamproof/errors.hpp"
#include "teamproof/syntax.hpp"
#include "teamproof/transforms.hpp"

namespace teamproof {

namespace {

using Names = std::set<std::string>;

Names unite(const Names& a, const Names& b) {
    Names r = a;
    r.insert(b.begin(), b.end());
    return r;
}

Names intersect(const Names& a, const Names& b) {
    Names r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
    return r;
}

SignedProps signed_props(const FormulaList& xs) {
    SignedProps out;
    for (const auto& f : xs) {
        auto s = teamproof::signed_props(f);
        out.positive.insert(s.positive.begin(), s.positive.end());
        out.negative.insert(s.negative.begin(), s.negative.end());
    }
    return out;
}

FormulaList minus_one(const FormulaList& xs, const Formula& f) {
    auto i = index_of(xs, f);
    if (!i) throw PartitionMismatch(render(f) + " missing from " + render(xs));
    return remove_at(xs, *i);
}

FormulaList plus(FormulaList xs, const FormulaList& ys) {
    xs.insert(xs.end(), ys.begin(), ys.end());
    return xs;
}

struct Piece {
    Formula phi;
    Derivation left;   // g1 ⇒ l1, phi
    Derivation right;  // g2, phi ⇒ d2
};

Sequent left_of(const PartitionSequent& p, const Formula& phi) { return {p.gamma1, plus(p.delta1, {phi})}; }
Sequent right_of(const PartitionSequent& p, const Formula& phi) { return {plus(p.gamma2, {phi}), p.delta2}; }

Derivation unary(Rule r, const Sequent& c, const Formula& principal, Derivation premise, const RuleApp& src = {}) {
    RuleApp meta;
    meta.path = src.path;
    meta.side = src.side;
    return make::rule(r, c, principal, {std::move(premise)}, std::move(meta));
}

Derivation binary(Rule r, const Sequent& c, const Formula& principal, Derivation a, Derivation b,
                  FormulaList weakening = {}, OccurrencePath path = {}) {
    RuleApp meta;
    meta.weakening = std::move(weakening);
    meta.path = std::move(path);
    return make::rule(r, c, principal, {std::move(a), std::move(b)}, std::move(meta));
}

Piece axiom_piece(const Derivation& d, const PartitionSequent& p) {
    const Formula bot = Formula::bot();
    if (d.rule().rule == Rule::LBot) {
        if (count_of(p.gamma1, bot)) {
            return {bot, make::lbot(left_of(p, bot)), make::lbot(right_of(p, bot))};
        }
        const Formula top = Formula::neg(bot);
        Sequent l1{plus(p.gamma1, {bot}), p.delta1};
        Sequent r1{p.gamma2, plus(p.delta2, {bot})};
        return {top, unary(Rule::RNeg, left_of(p, top), top, make::lbot(l1)),
                unary(Rule::LNeg, right_of(p, top), top, make::lbot(r1))};
    }
    const Formula atom = d.principal_formula();
    const std::string& a = atom.name();
    const bool in_g1 = count_of(p.gamma1, atom) > 0;
    const bool in_l1 = count_of(p.delta1, atom) > 0;
    if (in_g1 && in_l1)
        return {bot, make::at(left_of(p, bot), a), make::lbot(right_of(p, bot))};
    if (in_g1)
        return {atom, make::at(left_of(p, atom), a), make::at(right_of(p, atom), a)};
    if (in_l1) {
        const Formula phi = Formula::neg(atom);
        Sequent l1{plus(p.gamma1, {atom}), p.delta1};
        Sequent r1{p.gamma2, plus(p.delta2, {atom})};
        return {phi, unary(Rule::RNeg, left_of(p, phi), phi, make::at(l1, a)),
                unary(Rule::LNeg, right_of(p, phi), phi, make::at(r1, a))};
    }
    const Formula phi = Formula::neg(bot);
    Sequent l1{plus(p.gamma1, {bot}), p.delta1};
    Sequent r1{p.gamma2, plus(p.delta2, {bot})};
    return {phi, unary(Rule::RNeg, left_of(p, phi), phi, make::lbot(l1)),
            unary(Rule::LNeg, right_of(p, phi), phi, make::at(r1, a))};
}

Piece interp(const Derivation& d, const PartitionSequent& p);

Piece unary_piece(const Derivation& d, const PartitionSequent& p) {
    const Rule r = d.rule().rule;
    const Formula pf = d.principal_formula();
    PartitionSequent q = p;
    bool first_half;  // principal in Γ1 or Λ1
    if (acts_on_left(r)) {
        first_half = count_of(p.gamma1, pf) > 0;
        FormulaList& g = first_half ? q.gamma1 : q.gamma2;
        g = minus_one(g, pf);
        switch (r) {
            case Rule::LNeg: (first_half ? q.delta1 : q.delta2).push_back(pf.child(0)); break;
            case Rule::LAnd: g.push_back(pf.left()); g.push_back(pf.right()); break;
            default: throw UnsupportedRule(rule_name(r));
        }
    } else {
        first_half = count_of(p.delta1, pf) > 0;
        FormulaList& s = first_half ? q.delta1 : q.delta2;
        s = minus_one(s, pf);
        switch (r) {
            case Rule::RNeg: (first_half ? q.gamma1 : q.gamma2).push_back(pf.child(0)); break;
            case Rule::ROr: s.push_back(pf.left()); s.push_back(pf.right()); break;
            case Rule::RGd: {
                const Formula& g = subformula_at(pf, d.rule().path);
                s.push_back(substitute_at(pf, d.rule().path, g.child(side_index(*d.rule().side))));
                break;
            }
            default: throw UnsupportedRule(rule_name(r));
        }
    }
    Piece sub = interp(d.premise(0), q);
    if (first_half)
        sub.left = unary(r, left_of(p, sub.phi), pf, sub.left, d.rule());
    else
        sub.right = unary(r, right_of(p, sub.phi), pf, sub.right, d.rule());
    return sub;
}

// RAnd and LOr: the implicit weakening leaves the premises
void strip_weakening(PartitionSequent& q, const FormulaList& weakening, FormulaList& w1, FormulaList& w2) {
    for (const auto& w : weakening) {
        if (count_of(q.delta2, w)) {
            q.delta2 = minus_one(q.delta2, w);
            w2.push_back(w);
        } else {
            q.delta1 = minus_one(q.delta1, w);
            w1.push_back(w);
        }
    }
}

Piece binary_piece(const Derivation& d, const PartitionSequent& p) {
    const Rule r = d.rule().rule;
    const Formula pf = d.principal_formula();
    const bool first_half = acts_on_left(r) ? count_of(p.gamma1, pf) > 0 : count_of(p.delta1, pf) > 0;
    PartitionSequent base = p;
    if (acts_on_left(r))
        (first_half ? base.gamma1 : base.gamma2) = minus_one(first_half ? p.gamma1 : p.gamma2, pf);
    else
        (first_half ? base.delta1 : base.delta2) = minus_one(first_half ? p.delta1 : p.delta2, pf);
    FormulaList w1, w2;
    if (r == Rule::RAnd || r == Rule::LOr) strip_weakening(base, d.rule().weakening, w1, w2);

    // premise k: the principal replaced by its k-th active formula in the same block
    std::vector<Formula> active;
    for (int k = 0; k < 2; ++k) {
        if (r == Rule::LGd) {
            const Formula& g = subformula_at(pf, d.rule().path);
            active.push_back(substitute_at(pf, d.rule().path, g.child(k)));
        } else {
            active.push_back(pf.child(k));
        }
    }
    std::vector<PartitionSequent> qs(2, base);
    std::vector<Piece> sub;
    for (int k = 0; k < 2; ++k) {
        auto& q = qs[static_cast<std::size_t>(k)];
        if (acts_on_left(r))
            (first_half ? q.gamma1 : q.gamma2).push_back(active[static_cast<std::size_t>(k)]);
        else
            (first_half ? q.delta1 : q.delta2).push_back(active[static_cast<std::size_t>(k)]);
        sub.push_back(interp(d.premise(static_cast<std::size_t>(k)), q));
    }
    const Formula f1 = sub[0].phi, f2 = sub[1].phi;
    auto other = [&](int k) { return k == 0 ? f2 : f1; };
    const PartitionSequent& q0 = qs[0];

    auto weaken_each = [&](Place place, bool left_half) {
        std::vector<Derivation> out;
        for (int k = 0; k < 2; ++k) {
            const Piece& s = sub[static_cast<std::size_t>(k)];
            out.push_back(weaken(left_half ? s.left : s.right, place, other(k)));
        }
        return out;
    };

    if (first_half && (r == Rule::RAnd || r == Rule::LOr || (r == Rule::LGd && all_classical(p.delta2)))) {
        // φ1 ∨ φ2
        const Formula phi = Formula::split(f1, f2);
        auto ls = weaken_each(Place::Succedent, true);
        Sequent mid{p.gamma1, plus(p.delta1, {f1, f2})};
        Derivation left = r == Rule::LGd ? binary(r, mid, pf, ls[0], ls[1], {}, d.rule().path)
                                         : binary(r, mid, pf, ls[0], ls[1], w1);
        left = unary(Rule::ROr, left_of(p, phi), phi, left);
        Derivation right = binary(Rule::LOr, right_of(p, phi), phi, sub[0].right, sub[1].right, w2);
        return {phi, left, right};
    }
    if (first_half) {
        // LGd in Γ1 with nonclassical Δ2: φ1 ⋁ φ2
        const Formula phi = Formula::gd(f1, f2);
        std::vector<Derivation> ls;
        for (int k = 0; k < 2; ++k) {
            const auto& q = qs[static_cast<std::size_t>(k)];
            RuleApp meta;
            meta.side = k == 0 ? Side::L : Side::R;
            ls.push_back(unary(Rule::RGd, left_of(q, phi), phi, sub[static_cast<std::size_t>(k)].left, meta));
        }
        Derivation left = binary(Rule::LGd, left_of(p, phi), pf, ls[0], ls[1], {}, d.rule().path);
        Derivation right = binary(Rule::LGd, right_of(p, phi), phi, sub[0].right, sub[1].right, {}, {});
        return {phi, left, right};
    }
    // second half: φ1 ∧ φ2
    const Formula phi = Formula::conj(f1, f2);
    Derivation left = binary(Rule::RAnd, Sequent{p.gamma1, plus(q0.delta1, plus(w1, {phi}))}, phi,
                             sub[0].left, sub[1].left, w1);
    auto rs = weaken_each(Place::Antecedent, false);
    // premise context of the original rule, with both conjuncts on the left
    Sequent mid{plus(base.gamma2, {f1, f2}), plus(base.delta2, w2)};
    if (r == Rule::RAnd) {
        mid.succedent.push_back(pf);
    } else {
        mid.antecedent.push_back(pf);
    }
    Derivation inner = r == Rule::LGd ? binary(r, mid, pf, rs[0], rs[1], {}, d.rule().path)
                                      : binary(r, mid, pf, rs[0], rs[1], w2);
    Derivation right = unary(Rule::LAnd, right_of(p, phi), phi, inner);
    return {phi, left, right};
}

Piece interp(const Derivation& d, const PartitionSequent& p) {
    if (!(p.flatten() == d.conclusion()))
        throw PartitionMismatch(render(p) + " does not flatten to " + render(d.conclusion()));
    switch (d.rule().rule) {
        case Rule::At:
        case Rule::LBot: return axiom_piece(d, p);
        case Rule::LNeg:
        case Rule::RNeg:
        case Rule::LAnd:
        case Rule::ROr:
        case Rule::RGd: return unary_piece(d, p);
        case Rule::RAnd:
        case Rule::LOr:
        case Rule::LGd: return binary_piece(d, p);
        case Rule::Cut: throw ContainsCut("interpolation needs a cutfree derivation");
        default: throw UnsupportedRule("no interpolation case for " + rule_name(d.rule().rule));
    }
}

}  // namespace

PolarityReport polarity_report(const Formula& phi, const PartitionSequent& p) {
    const auto g1 = signed_props(p.gamma1), g2 = signed_props(p.gamma2);
    const auto l1 = signed_props(p.delta1), d2 = signed_props(p.delta2);
    PolarityReport rep;
    rep.interpolant = teamproof::signed_props(phi);
    rep.allowed.positive = intersect(unite(g1.positive, l1.negative), unite(g2.negative, d2.positive));
    rep.allowed.negative = intersect(unite(g1.negative, l1.positive), unite(g2.positive, d2.negative));
    rep.ok = std::includes(rep.allowed.positive.begin(), rep.allowed.positive.end(),
                           rep.interpolant.positive.begin(), rep.interpolant.positive.end()) &&
             std::includes(rep.allowed.negative.begin(), rep.allowed.negative.end(),
                           rep.interpolant.negative.begin(), rep.interpolant.negative.end());
    return rep;
}

InterpolationResult interpolate_partition(const Derivation& d, const PartitionSequent& p) {
    if (!all_classical(p.delta1)) throw NonClassicalLambda1("the first succedent block must be classical");
    if (!is_cutfree(d)) throw ContainsCut("interpolation needs a cutfree derivation");
    Piece piece = interp(d, p);
    PolarityReport rep = polarity_report(piece.phi, p);
    return {piece.phi, piece.left, piece.right, rep};
}

std::variant<InterpolationResult, NotEntailed> craig_lyndon(const Formula& phi, const Formula& psi,
                                                            const ProverOptions& options) {
    auto out = prove_or_countermodel({{phi}, {psi}}, options);
    if (auto* t = std::get_if<Team>(&out)) return NotEntailed{*t};
    return interpolate_partition(std::get<Derivation>(out), {{phi}, {}, {}, {psi}});
}

InterpolantCheck verify_interpolant(const InterpolationResult& r, const PartitionSequent& p, OracleBudget budget) {
    InterpolantCheck out;
    auto fail = [&](std::string why) {
        out.ok = false;
        out.failures.push_back(std::move(why));
    };
    const Sequent left = left_of(p, r.interpolant);
    const Sequent right = right_of(p, r.interpolant);
    if (!(r.left_derivation.conclusion() == left)) fail("left derivation does not end in " + render(left));
    if (!(r.right_derivation.conclusion() == right)) fail("right derivation does not end in " + render(right));
    for (const auto* d : {&r.left_derivation, &r.right_derivation}) {
        auto c = check_derivation(*d);
        if (!c.ok()) fail("derivation rejected: " + describe(*c.violation));
        if (!is_cutfree(*d)) fail("derivation contains a cut");
    }
    for (const auto& s : {left, right}) {
        if (props(s).size() > budget.max_variables) continue;
        if (!sequent_valid(s, budget)) fail(render(s) + " is not valid");
    }
    if (!polarity_report(r.interpolant, p).ok) fail("polarity inclusion fails for " + render(r.interpolant));
    return out;
}

}  // namespace teamproof
