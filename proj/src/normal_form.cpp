#include "teamproof/normal_form.hpp"

#include "teamproof/errors.hpp"
#include "teamproof/syntax.hpp"
#include "teamproof/transforms.hpp"

namespace teamproof {

namespace {

std::optional<std::size_t> first_nonclassical(const FormulaList& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (!xs[i].is_classical()) return i;
    return std::nullopt;
}

void resolve_right(const Derivation& d, FormulaList ant, FormulaList suc, std::vector<ResolvedLeaf>& out) {
    if (auto j = first_nonclassical(suc)) {
        const Formula f = suc[*j];
        auto pos = index_of(d.conclusion().succedent, f);
        auto r = invert(d, {Rule::RGd, *pos, gd_paths(f).front()});
        const Formula& g = subformula_at(f, gd_paths(f).front());
        suc[*j] = substitute_at(f, gd_paths(f).front(), g.child(side_index(*r.side)));
        return resolve_right(r.derivations[0], std::move(ant), std::move(suc), out);
    }
    Sequent c{ant, suc};
    out.push_back({std::move(ant), std::move(suc), reconclude(d, c)});
}

void resolve_left(const Derivation& d, const FormulaList& ant, const FormulaList& suc, std::vector<ResolvedLeaf>& out) {
    auto k = first_nonclassical(ant);
    if (!k) return resolve_right(d, ant, suc, out);
    const Formula f = ant[*k];
    const OccurrencePath path = gd_paths(f).front();
    const Formula& g = subformula_at(f, path);
    auto pos = index_of(d.conclusion().antecedent, f);
    auto r = invert(d, {Rule::LGd, *pos, path});
    for (int o = 0; o < 2; ++o) {
        FormulaList next = ant;
        next[*k] = substitute_at(f, path, g.child(o));
        resolve_left(r.derivations[static_cast<std::size_t>(o)], next, suc, out);
    }
}

Derivation build(const NormalForm& nf, const FormulaList& ant) {
    auto k = first_nonclassical(ant);
    if (!k) {
        for (const auto& leaf : nf.leaves)
            if (leaf.antecedent == ant) return make::rgd_chain(leaf.proof, {ant, nf.endsequent.succedent});
        throw ShapeMismatch("no classical leaf for " + render(ant));
    }
    const Formula f = ant[*k];
    const OccurrencePath path = gd_paths(f).front();
    const Formula& g = subformula_at(f, path);
    std::vector<Derivation> ps;
    for (int o = 0; o < 2; ++o) {
        FormulaList next = ant;
        next[*k] = substitute_at(f, path, g.child(o));
        ps.push_back(build(nf, next));
    }
    RuleApp app;
    app.rule = Rule::LGd;
    app.principal = *k;
    app.path = path;
    return Derivation({ant, nf.endsequent.succedent}, std::move(app), std::move(ps));
}

bool phased(const Derivation& d, int stage) {
    const Rule r = d.rule().rule;
    int here;
    if (r == Rule::LGd) here = 0;
    else if (r == Rule::RGd) here = 1;
    else if (r == Rule::Cut) return false;
    else here = 2;
    if (here < stage) return false;
    for (const auto& p : d.premises())
        if (!phased(p, here)) return false;
    return true;
}

}  // namespace

NormalForm decompose(const Derivation& d) {
    if (!is_cutfree(d)) throw ContainsCut("normal form needs a cutfree derivation");
    NormalForm nf{d.conclusion(), {}};
    resolve_left(d, d.conclusion().antecedent, d.conclusion().succedent, nf.leaves);
    return nf;
}

Derivation assemble(const NormalForm& nf) { return build(nf, nf.endsequent.antecedent); }

Derivation normalize(const Derivation& d) { return reconclude(assemble(decompose(d)), d.conclusion()); }

bool is_phase_ordered(const Derivation& d) { return phased(d, 0); }

}  // namespace teamproof
