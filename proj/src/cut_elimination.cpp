#include "teamproof/cut_elimination.hpp"

#include "teamproof/errors.hpp"
#include "teamproof/syntax.hpp"
#include "teamproof/transforms.hpp"

namespace teamproof {

namespace {

Derivation weaken_all(Derivation d, Place place, const FormulaList& xs) {
    for (const auto& f : xs) d = weaken(d, place, f);
    return d;
}

Derivation contract_all(Derivation d, Place place, const FormulaList& xs) {
    for (const auto& f : xs) d = contract(d, place, f);
    return d;
}

FormulaList minus_one(const FormulaList& xs, const Formula& f) {
    auto i = index_of(xs, f);
    if (!i) throw ShapeMismatch(render(f) + " missing from " + render(xs));
    return remove_at(xs, *i);
}

// ⊥ on the right is never principal, so one copy can be dropped everywhere above
Derivation drop_bot(const Derivation& d) {
    const Formula bot = Formula::bot();
    Sequent c{d.conclusion().antecedent, minus_one(d.conclusion().succedent, bot)};
    const Rule r = d.rule().rule;
    if (r == Rule::At || r == Rule::LBot) return reapply(d, c, {});
    if ((r == Rule::RAnd || r == Rule::LOr) && count_of(d.rule().weakening, bot))
        return reapply(d, c, d.premises(), minus_one(d.rule().weakening, bot));
    std::vector<Derivation> ps;
    for (const auto& p : d.premises()) ps.push_back(drop_bot(p));
    return reapply(d, c, std::move(ps));
}

bool principal_right(const Derivation& d, const Formula& f) {
    const Rule r = d.rule().rule;
    return r != Rule::At && r != Rule::LBot && r != Rule::Cut && !acts_on_left(r) && d.principal_formula() == f;
}

bool principal_left(const Derivation& d, const Formula& f) {
    const Rule r = d.rule().rule;
    return r != Rule::At && r != Rule::LBot && r != Rule::Cut && acts_on_left(r) && d.principal_formula() == f;
}

Derivation ccut(const Derivation& d1, const Derivation& d2, const Formula& phi) {
    const Sequent& s1 = d1.conclusion();
    const Sequent& s2 = d2.conclusion();
    const FormulaList pi = minus_one(s2.antecedent, phi);
    const FormulaList delta = minus_one(s1.succedent, phi);
    const Sequent out{concat(s1.antecedent, pi), concat(delta, s2.succedent)};
    const Rule r1 = d1.rule().rule;
    const Rule r2 = d2.rule().rule;

    if (r1 == Rule::LBot) return make::lbot(out);
    if (r1 == Rule::At) {
        const Formula p = d1.principal_formula();
        if (count_of(delta, p)) return make::at(out, p.name());
        Derivation w = weaken_all(d2, Place::Antecedent, minus_one(s1.antecedent, p));
        return reconclude(weaken_all(w, Place::Succedent, delta), out);
    }
    if (r2 == Rule::LBot) {
        if (count_of(pi, Formula::bot())) return make::lbot(out);
        Derivation w = weaken_all(drop_bot(d1), Place::Antecedent, pi);
        return reconclude(weaken_all(w, Place::Succedent, s2.succedent), out);
    }
    if (r2 == Rule::At) {
        const Formula p = d2.principal_formula();
        if (count_of(pi, p)) return make::at(out, p.name());
        Derivation w = weaken_all(d1, Place::Antecedent, pi);
        return reconclude(weaken_all(w, Place::Succedent, minus_one(s2.succedent, p)), out);
    }

    if (!principal_right(d1, phi)) {
        if ((r1 == Rule::RAnd || r1 == Rule::LOr) && count_of(d1.rule().weakening, phi)) {
            std::vector<Derivation> ps;
            for (const auto& p : d1.premises()) ps.push_back(weaken_all(p, Place::Antecedent, pi));
            return reapply(d1, out, std::move(ps), concat(minus_one(d1.rule().weakening, phi), s2.succedent));
        }
        std::vector<Derivation> ps;
        for (const auto& p : d1.premises()) ps.push_back(ccut(p, d2, phi));
        return reapply(d1, out, std::move(ps));
    }
    if (!principal_left(d2, phi)) {
        std::vector<Derivation> ps;
        for (const auto& p : d2.premises()) ps.push_back(ccut(d1, p, phi));
        return reapply(d2, out, std::move(ps));
    }

    switch (phi.op()) {
        case Op::Neg: {
            const Formula& a = phi.child(0);
            return reconclude(ccut(d2.premise(0), d1.premise(0), a), out);
        }
        case Op::And: {
            const Formula &a = phi.left(), &b = phi.right();
            const FormulaList lambda = minus_one(d1.premise(0).conclusion().succedent, a);
            Derivation x = ccut(d1.premise(1), d2.premise(0), b);
            Derivation y = ccut(d1.premise(0), x, a);
            y = contract_all(y, Place::Antecedent, s1.antecedent);
            y = contract_all(y, Place::Succedent, lambda);
            return reconclude(weaken_all(y, Place::Succedent, d1.rule().weakening), out);
        }
        case Op::Or: {
            const Formula &a = phi.left(), &b = phi.right();
            const FormulaList lambda = d2.premise(0).conclusion().succedent;
            Derivation x = ccut(d1.premise(0), d2.premise(0), a);
            Derivation y = ccut(x, d2.premise(1), b);
            y = contract_all(y, Place::Antecedent, pi);
            y = contract_all(y, Place::Succedent, lambda);
            return reconclude(weaken_all(y, Place::Succedent, d2.rule().weakening), out);
        }
        default: throw ShapeMismatch("no principal reduction for " + render(phi));
    }
}

Derivation gt_cut(const Derivation& d1, const Derivation& d2, const Formula& phi, const Sequent& target) {
    const NormalForm n1 = decompose(d1);
    const NormalForm n2 = decompose(d2);
    const std::size_t i = *index_of(d1.conclusion().succedent, phi);
    const std::size_t j = *index_of(d2.conclusion().antecedent, phi);
    NormalForm out{{concat(d1.conclusion().antecedent, remove_at(d2.conclusion().antecedent, j)),
                    concat(remove_at(d1.conclusion().succedent, i), d2.conclusion().succedent)},
                   {}};
    for (const auto& l1 : n1.leaves) {
        const Formula& alpha = l1.succedent[i];
        const FormulaList lambda = remove_at(l1.succedent, i);
        for (const auto& l2 : n2.leaves) {
            if (!(l2.antecedent[j] == alpha)) continue;
            FormulaList key = concat(l1.antecedent, remove_at(l2.antecedent, j));
            bool seen = false;
            for (const auto& l : out.leaves) seen = seen || l.antecedent == key;
            if (seen) continue;
            FormulaList succ = concat(lambda, l2.succedent);
            Derivation x = reconclude(ccut(l1.proof, l2.proof, alpha), {key, succ});
            out.leaves.push_back({std::move(key), std::move(succ), std::move(x)});
        }
    }
    return reconclude(assemble(out), target);
}

Derivation eliminate(const Derivation& d, bool classical) {
    std::vector<Derivation> ps;
    for (const auto& p : d.premises()) ps.push_back(eliminate(p, classical));
    if (d.rule().rule != Rule::Cut) return reapply(d, d.conclusion(), std::move(ps));
    const Formula& phi = *d.rule().cut_formula;
    if (classical || (ps[0].conclusion().is_classical() && ps[1].conclusion().is_classical()))
        return reconclude(ccut(ps[0], ps[1], phi), d.conclusion());
    return gt_cut(ps[0], ps[1], phi, d.conclusion());
}

bool all_nodes_classical(const Derivation& d) {
    if (!d.conclusion().is_classical()) return false;
    for (const auto& p : d.premises())
        if (!all_nodes_classical(p)) return false;
    return true;
}

}  // namespace

Derivation classical_cut(const Derivation& d1, const Derivation& d2, const Formula& phi) {
    if (!d1.conclusion().is_classical() || !d2.conclusion().is_classical())
        throw NonClassicalInput("classical cut on nonclassical sequents");
    if (!is_cutfree(d1) || !is_cutfree(d2)) throw ContainsCut("classical cut needs cutfree premises");
    return ccut(d1, d2, phi);
}

Derivation classical_eliminate_cuts(const Derivation& d) {
    if (!all_nodes_classical(d)) throw NonClassicalInput("classical cut elimination on a nonclassical derivation");
    return eliminate(d, true);
}

Derivation eliminate_cuts(const Derivation& d) { return eliminate(d, false); }

NormalForm resolve_derivation(const Derivation& d) { return decompose(eliminate_cuts(d)); }

}  // namespace teamproof
