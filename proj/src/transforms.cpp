#include "teamproof/transforms.hpp"

#include <algorithm>

#include "teamproof/errors.hpp"
#include "teamproof/syntax.hpp"

namespace teamproof {

namespace {

bool is_axiom(Rule r) { return r == Rule::At || r == Rule::LBot; }

bool is_gt_prime_only(Rule r) {
    return r == Rule::LOrI || r == Rule::RAndI || r == Rule::LC || r == Rule::RC;
}

FormulaList& side_of(Sequent& s, Place p) { return p == Place::Antecedent ? s.antecedent : s.succedent; }
const FormulaList& side_of(const Sequent& s, Place p) {
    return p == Place::Antecedent ? s.antecedent : s.succedent;
}

bool has_prefix(const OccurrencePath& p, const OccurrencePath& prefix) {
    return p.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), p.begin());
}

OccurrencePath join(OccurrencePath a, const OccurrencePath& b, std::size_t from) {
    a.insert(a.end(), b.begin() + static_cast<std::ptrdiff_t>(from), b.end());
    return a;
}

Sequent replace_first(const Sequent& s, Place place, const Formula& old, const FormulaList& news) {
    Sequent out = s;
    auto& xs = side_of(out, place);
    auto i = index_of(xs, old);
    if (!i) throw ShapeMismatch(render(old) + " not found in " + render(s));
    xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(*i));
    xs.insert(xs.begin() + static_cast<std::ptrdiff_t>(*i), news.begin(), news.end());
    return out;
}

Derivation reaxiom(const Derivation& d, const Sequent& c) {
    if (d.rule().rule == Rule::At) return make::at(c, d.principal_formula().name());
    return make::lbot(c);
}

Derivation rebuild_with(const Derivation& d, const Sequent& c, std::vector<Derivation> ps,
                        const Formula& principal, RuleApp meta) {
    const Rule r = d.rule().rule;
    if (is_axiom(r)) return reaxiom(d, c);
    if (r == Rule::Cut) return make::cut(c, *d.rule().cut_formula, std::move(ps[0]), std::move(ps[1]));
    meta.principal.reset();
    meta.context.clear();
    return make::rule(r, c, principal, std::move(ps), std::move(meta));
}

Derivation rebuild(const Derivation& d, const Sequent& c, std::vector<Derivation> ps) {
    if (is_axiom(d.rule().rule) || d.rule().rule == Rule::Cut) return rebuild_with(d, c, std::move(ps), Formula::bot(), {});
    return rebuild_with(d, c, std::move(ps), d.principal_formula(), d.rule());
}

Derivation deep(Rule r, const Sequent& c, const Formula& principal, std::vector<Derivation> ps,
                OccurrencePath path, std::optional<Side> side = std::nullopt) {
    RuleApp meta;
    meta.path = std::move(path);
    meta.side = side;
    return make::rule(r, c, principal, std::move(ps), std::move(meta));
}

// ---------------------------------------------------------------- weakening

Derivation weaken_rec(const Derivation& d, Place place, const Formula& f) {
    Sequent c = d.conclusion();
    side_of(c, place).push_back(f);
    const Rule r = d.rule().rule;
    if (is_axiom(r)) return reaxiom(d, c);
    std::vector<Derivation> ps = d.premises();
    RuleApp meta = d.rule();
    if (place == Place::Succedent && (r == Rule::RAnd || r == Rule::LOr)) {
        meta.weakening.push_back(f);
        return rebuild_with(d, c, std::move(ps), d.principal_formula(), std::move(meta));
    }
    if (r == Rule::Cut) {
        std::size_t i = place == Place::Antecedent ? 0 : 1;
        ps[i] = weaken_rec(ps[i], place, f);
        return rebuild(d, c, std::move(ps));
    }
    if (r == Rule::LOrI || r == Rule::RAndI) {
        ps[0] = weaken_rec(ps[0], place, f);
        (place == Place::Antecedent ? meta.split_antecedent : meta.split_succedent).push_back(f);
        return rebuild_with(d, c, std::move(ps), d.principal_formula(), std::move(meta));
    }
    for (auto& p : ps) p = weaken_rec(p, place, f);
    return rebuild(d, c, std::move(ps));
}

// ---------------------------------------------------------------- inversion

struct Target {
    Rule item;
    Place place;
    Formula f;
    OccurrencePath path;
};

std::size_t output_count(Rule item) {
    return item == Rule::RAnd || item == Rule::LOr || item == Rule::LGd ? 2 : 1;
}

Formula resolved(const Target& t, int o) {
    const Formula& g = subformula_at(t.f, t.path);
    return substitute_at(t.f, t.path, g.child(o));
}

Sequent apply_item(const Sequent& s, const Target& t, int o, Side side) {
    const Formula& f = t.f;
    switch (t.item) {
        case Rule::LNeg: {
            Sequent r = replace_first(s, Place::Antecedent, f, {});
            r.succedent.push_back(f.child(0));
            return r;
        }
        case Rule::RNeg: {
            Sequent r = replace_first(s, Place::Succedent, f, {});
            r.antecedent.push_back(f.child(0));
            return r;
        }
        case Rule::LAnd: return replace_first(s, Place::Antecedent, f, {f.left(), f.right()});
        case Rule::ROr: return replace_first(s, Place::Succedent, f, {f.left(), f.right()});
        case Rule::RAnd: return replace_first(s, Place::Succedent, f, {f.child(o)});
        case Rule::LOr: return replace_first(s, Place::Antecedent, f, {f.child(o)});
        case Rule::LGd: return replace_first(s, Place::Antecedent, f, {resolved(t, o)});
        case Rule::RGd: return replace_first(s, Place::Succedent, f, {resolved(t, side_index(side))});
        default: throw UnsupportedRule("not an inversion item: " + rule_name(t.item));
    }
}

InversionResult inv(const Derivation& d, const Target& t);

// the target sits in the implicit weakening of RAnd/LOr
InversionResult inv_weakening(const Derivation& d, const Target& t) {
    InversionResult res;
    const Side side = Side::L;
    for (std::size_t o = 0; o < output_count(t.item); ++o) {
        FormulaList ant_add, suc_add;
        switch (t.item) {
            case Rule::RNeg: ant_add = {t.f.child(0)}; break;
            case Rule::RAnd: suc_add = {t.f.child(static_cast<int>(o))}; break;
            case Rule::ROr: suc_add = {t.f.left(), t.f.right()}; break;
            case Rule::RGd: suc_add = {resolved(t, 0)}; break;
            default: throw ShapeMismatch("left item in a right weakening slot");
        }
        std::vector<Derivation> ps = d.premises();
        for (auto& p : ps)
            for (const auto& a : ant_add) p = weaken_rec(p, Place::Antecedent, a);
        RuleApp meta = d.rule();
        meta.weakening = concat(*multiset_minus(meta.weakening, {t.f}), suc_add);
        res.derivations.push_back(rebuild_with(d, apply_item(d.conclusion(), t, static_cast<int>(o), side),
                                               std::move(ps), d.principal_formula(), std::move(meta)));
    }
    if (t.item == Rule::RGd) res.side = side;
    return res;
}

InversionResult inv_context(const Derivation& d, const Target& t) {
    const Rule r = d.rule().rule;
    std::vector<std::size_t> into;
    if (r == Rule::Cut) {
        const auto& p1 = d.premise(0).conclusion();
        const auto& p2 = d.premise(1).conclusion();
        if (t.place == Place::Antecedent)
            into.push_back(count_of(p1.antecedent, t.f) ? 0 : 1);
        else
            into.push_back(count_of(p2.succedent, t.f) ? 1 : 0);
    } else {
        for (std::size_t i = 0; i < d.premises().size(); ++i) into.push_back(i);
    }
    std::vector<InversionResult> subs;
    std::optional<Side> side;
    for (auto i : into) {
        subs.push_back(inv(d.premise(i), t));
        if (t.item == Rule::RGd) {
            if (side && *side != *subs.back().side) throw ShapeMismatch("premises disagree on the surviving disjunct");
            side = subs.back().side;
        }
    }
    InversionResult res;
    res.side = side;
    for (std::size_t o = 0; o < output_count(t.item); ++o) {
        std::vector<Derivation> ps = d.premises();
        for (std::size_t k = 0; k < into.size(); ++k) ps[into[k]] = subs[k].derivations[o];
        res.derivations.push_back(
            rebuild(d, apply_item(d.conclusion(), t, static_cast<int>(o), side.value_or(Side::L)), std::move(ps)));
    }
    return res;
}

// classical item, deep rule R acting inside the principal formula
InversionResult inv_through_deep(const Derivation& d, const Target& t) {
    const Rule r = d.rule().rule;
    const Formula& T = t.f;
    const OccurrencePath& pr = d.rule().path;
    const int j = pr.front();
    OccurrencePath rest(pr.begin() + 1, pr.end());
    const Formula& comp = T.child(j);
    const Formula& g = subformula_at(T, pr);
    const Sequent& s = d.conclusion();
    InversionResult res;
    if (r == Rule::LGd) {
        auto a = inv(d.premise(0), {t.item, t.place, substitute_at(T, pr, g.left()), {}});
        auto b = inv(d.premise(1), {t.item, t.place, substitute_at(T, pr, g.right()), {}});
        for (std::size_t o = 0; o < output_count(t.item); ++o) {
            if (t.item == Rule::LOr && static_cast<int>(o) != j) {
                res.derivations.push_back(a.derivations[o]);
                continue;
            }
            res.derivations.push_back(deep(Rule::LGd, apply_item(s, t, static_cast<int>(o), Side::L), comp,
                                           {a.derivations[o], b.derivations[o]}, rest));
        }
        return res;
    }
    const Side sr = *d.rule().side;
    auto a = inv(d.premise(0), {t.item, t.place, substitute_at(T, pr, g.child(side_index(sr))), {}});
    for (std::size_t o = 0; o < output_count(t.item); ++o) {
        if (t.item == Rule::RAnd && static_cast<int>(o) != j) {
            res.derivations.push_back(a.derivations[o]);
            continue;
        }
        res.derivations.push_back(deep(Rule::RGd, apply_item(s, t, static_cast<int>(o), Side::L), comp,
                                       {a.derivations[o]}, rest, sr));
    }
    return res;
}

// deep item, classical rule R whose principal formula contains the target
InversionResult inv_deep_through_classical(const Derivation& d, const Target& t) {
    const Rule r = d.rule().rule;
    const int j = t.path.front();
    OccurrencePath rest(t.path.begin() + 1, t.path.end());
    const Formula& comp = t.f.child(j);
    const Sequent& s = d.conclusion();
    InversionResult res;
    if (t.item == Rule::LGd) {
        std::size_t pi = r == Rule::LOr ? static_cast<std::size_t>(j) : 0;
        auto sub = inv(d.premise(pi), {Rule::LGd, Place::Antecedent, comp, rest});
        for (int o = 0; o < 2; ++o) {
            std::vector<Derivation> ps = d.premises();
            ps[pi] = sub.derivations[static_cast<std::size_t>(o)];
            res.derivations.push_back(rebuild_with(d, apply_item(s, t, o, Side::L), std::move(ps), resolved(t, o), d.rule()));
        }
        return res;
    }
    std::size_t pi = r == Rule::RAnd ? static_cast<std::size_t>(j) : 0;
    auto sub = inv(d.premise(pi), {Rule::RGd, Place::Succedent, comp, rest});
    std::vector<Derivation> ps = d.premises();
    ps[pi] = sub.derivations[0];
    res.side = sub.side;
    res.derivations.push_back(rebuild_with(d, apply_item(s, t, 0, *sub.side), std::move(ps),
                                           resolved(t, side_index(*sub.side)), d.rule()));
    return res;
}

InversionResult inv_deep_same(const Derivation& d, const Target& t) {
    const Formula& T = t.f;
    const OccurrencePath& pr = d.rule().path;
    const OccurrencePath& pt = t.path;
    const Formula& gr = subformula_at(T, pr);
    const Sequent& s = d.conclusion();
    InversionResult res;
    if (t.item == Rule::LGd) {
        if (pr == pt) return {d.premises(), std::nullopt};
        auto TL = substitute_at(T, pr, gr.left());
        auto TR = substitute_at(T, pr, gr.right());
        if (has_prefix(pt, pr)) {
            const auto j = static_cast<std::size_t>(pt[pr.size()]);
            auto sub = inv(d.premise(j), {Rule::LGd, Place::Antecedent, j == 0 ? TL : TR, join(pr, pt, pr.size() + 1)});
            for (int o = 0; o < 2; ++o) {
                std::vector<Derivation> ps = d.premises();
                ps[j] = sub.derivations[static_cast<std::size_t>(o)];
                res.derivations.push_back(deep(Rule::LGd, apply_item(s, t, o, Side::L), resolved(t, o), std::move(ps), pr));
            }
            return res;
        }
        auto a = inv(d.premise(0), {Rule::LGd, Place::Antecedent, TL, pt});
        auto b = inv(d.premise(1), {Rule::LGd, Place::Antecedent, TR, pt});
        if (has_prefix(pr, pt)) {
            const int j = pr[pt.size()];
            for (int o = 0; o < 2; ++o) {
                auto uo = static_cast<std::size_t>(o);
                if (o != j) {
                    res.derivations.push_back(a.derivations[uo]);
                    continue;
                }
                res.derivations.push_back(deep(Rule::LGd, apply_item(s, t, o, Side::L), resolved(t, o),
                                               {a.derivations[uo], b.derivations[uo]}, join(pt, pr, pt.size() + 1)));
            }
            return res;
        }
        for (int o = 0; o < 2; ++o) {
            auto uo = static_cast<std::size_t>(o);
            res.derivations.push_back(deep(Rule::LGd, apply_item(s, t, o, Side::L), resolved(t, o),
                                           {a.derivations[uo], b.derivations[uo]}, pr));
        }
        return res;
    }
    const Side sr = *d.rule().side;
    if (pr == pt) return {{d.premise(0)}, sr};
    auto Tp = substitute_at(T, pr, gr.child(side_index(sr)));
    if (has_prefix(pt, pr)) {
        const int j = pt[pr.size()];
        if (j != side_index(sr)) {
            // the target was discarded by R
            res.side = Side::L;
            res.derivations.push_back(deep(Rule::RGd, apply_item(s, t, 0, Side::L), resolved(t, 0), {d.premise(0)}, pr, sr));
            return res;
        }
        auto sub = inv(d.premise(0), {Rule::RGd, Place::Succedent, Tp, join(pr, pt, pr.size() + 1)});
        res.side = sub.side;
        int o = side_index(*sub.side);
        res.derivations.push_back(deep(Rule::RGd, apply_item(s, t, 0, *sub.side), resolved(t, o), {sub.derivations[0]}, pr, sr));
        return res;
    }
    auto sub = inv(d.premise(0), {Rule::RGd, Place::Succedent, Tp, pt});
    res.side = sub.side;
    int o = side_index(*sub.side);
    if (has_prefix(pr, pt)) {
        const int j = pr[pt.size()];
        if (o != j) {
            res.derivations.push_back(sub.derivations[0]);
            return res;
        }
        res.derivations.push_back(deep(Rule::RGd, apply_item(s, t, 0, *sub.side), resolved(t, o), {sub.derivations[0]},
                                       join(pt, pr, pt.size() + 1), sr));
        return res;
    }
    res.derivations.push_back(deep(Rule::RGd, apply_item(s, t, 0, *sub.side), resolved(t, o), {sub.derivations[0]}, pr, sr));
    return res;
}

InversionResult inv_principal(const Derivation& d, const Target& t) {
    const Rule r = d.rule().rule;
    switch (t.item) {
        case Rule::LNeg:
        case Rule::RNeg:
            if (r == t.item) return {{d.premise(0)}, std::nullopt};
            break;
        case Rule::LAnd:
        case Rule::ROr:
            if (r == t.item) return {{d.premise(0)}, std::nullopt};
            if (r == Rule::LGd || r == Rule::RGd) return inv_through_deep(d, t);
            break;
        case Rule::RAnd:
        case Rule::LOr:
            if (r == t.item) {
                InversionResult res;
                for (const auto& p : d.premises()) {
                    Derivation w = p;
                    for (const auto& f : d.rule().weakening) w = weaken_rec(w, Place::Succedent, f);
                    res.derivations.push_back(w);
                }
                return res;
            }
            if (r == Rule::LGd || r == Rule::RGd) return inv_through_deep(d, t);
            break;
        case Rule::LGd:
        case Rule::RGd:
            if (r == t.item) return inv_deep_same(d, t);
            return inv_deep_through_classical(d, t);
        default: break;
    }
    throw ShapeMismatch("rule " + rule_name(r) + " cannot introduce the " + rule_name(t.item) + " target");
}

InversionResult inv(const Derivation& d, const Target& t) {
    const Rule r = d.rule().rule;
    if (is_gt_prime_only(r) || r == Rule::Unknown) throw UnsupportedRule("inversion over " + rule_name(r));
    if (t.item == Rule::RGd && !all_classical(d.conclusion().antecedent))
        throw NonClassicalAntecedent("RGd inversion needs a classical antecedent");
    if (is_axiom(r)) {
        InversionResult res;
        if (t.item == Rule::RGd) res.side = Side::L;
        for (std::size_t o = 0; o < output_count(t.item); ++o)
            res.derivations.push_back(reaxiom(d, apply_item(d.conclusion(), t, static_cast<int>(o), Side::L)));
        return res;
    }
    bool principal = r != Rule::Cut && acts_on_left(r) == (t.place == Place::Antecedent) &&
                     d.principal_formula() == t.f;
    if (principal) return inv_principal(d, t);
    if (t.place == Place::Succedent && (r == Rule::RAnd || r == Rule::LOr) && count_of(d.rule().weakening, t.f))
        return inv_weakening(d, t);
    return inv_context(d, t);
}

Op item_op(Rule item) {
    switch (item) {
        case Rule::LNeg:
        case Rule::RNeg: return Op::Neg;
        case Rule::LAnd:
        case Rule::RAnd: return Op::And;
        case Rule::LOr:
        case Rule::ROr: return Op::Or;
        default: return Op::Gd;
    }
}

// ---------------------------------------------------------------- contraction

Derivation con(const Derivation& d, Place place, const Formula& f);

Sequent drop_one(const Sequent& s, Place place, const Formula& f) { return replace_first(s, place, f, {}); }

Derivation con_principal(const Derivation& d, Place place, const Formula& f) {
    const Rule r = d.rule().rule;
    const Sequent c = drop_one(d.conclusion(), place, f);
    auto first = [](InversionResult&& x, std::size_t i) { return x.derivations[i]; };
    switch (r) {
        case Rule::LNeg: {
            auto a = first(inv(d.premise(0), {Rule::LNeg, Place::Antecedent, f, {}}), 0);
            return rebuild(d, c, {con(a, Place::Succedent, f.child(0))});
        }
        case Rule::RNeg: {
            auto a = first(inv(d.premise(0), {Rule::RNeg, Place::Succedent, f, {}}), 0);
            return rebuild(d, c, {con(a, Place::Antecedent, f.child(0))});
        }
        case Rule::LAnd:
        case Rule::ROr: {
            Place p = r == Rule::LAnd ? Place::Antecedent : Place::Succedent;
            auto a = first(inv(d.premise(0), {r, p, f, {}}), 0);
            a = con(con(a, p, f.left()), p, f.right());
            return rebuild(d, c, {a});
        }
        case Rule::LOr:
        case Rule::RAnd: {
            Place p = r == Rule::LOr ? Place::Antecedent : Place::Succedent;
            std::vector<Derivation> ps;
            for (std::size_t i = 0; i < 2; ++i) {
                auto a = first(inv(d.premise(i), {r, p, f, {}}), i);
                ps.push_back(con(a, p, f.child(static_cast<int>(i))));
            }
            return rebuild(d, c, std::move(ps));
        }
        case Rule::LGd: {
            const auto& path = d.rule().path;
            const Formula& g = subformula_at(f, path);
            std::vector<Derivation> ps;
            for (std::size_t i = 0; i < 2; ++i) {
                auto a = first(inv(d.premise(i), {Rule::LGd, Place::Antecedent, f, path}), i);
                ps.push_back(con(a, Place::Antecedent, substitute_at(f, path, g.child(static_cast<int>(i)))));
            }
            return rebuild(d, c, std::move(ps));
        }
        default: throw ShapeMismatch("unexpected principal rule " + rule_name(r) + " in contraction");
    }
}

Derivation con(const Derivation& d, Place place, const Formula& f) {
    const Rule r = d.rule().rule;
    if (is_gt_prime_only(r) || r == Rule::Unknown) throw UnsupportedRule("contraction over " + rule_name(r));
    if (count_of(side_of(d.conclusion(), place), f) < 2)
        throw FormulaNotDuplicated(render(f) + " does not occur twice");
    const Sequent c = drop_one(d.conclusion(), place, f);
    if (is_axiom(r)) return reaxiom(d, c);
    if (place == Place::Succedent && (r == Rule::RAnd || r == Rule::LOr) && count_of(d.rule().weakening, f)) {
        RuleApp meta = d.rule();
        meta.weakening = *multiset_minus(meta.weakening, {f});
        return rebuild_with(d, c, d.premises(), d.principal_formula(), std::move(meta));
    }
    bool principal = r != Rule::Cut && acts_on_left(r) == (place == Place::Antecedent) &&
                     d.principal_formula() == f;
    if (principal) return con_principal(d, place, f);
    std::vector<Derivation> ps = d.premises();
    if (r == Rule::Cut) {
        std::size_t i = count_of(side_of(ps[0].conclusion(), place), f) >= 2 ? 0 : 1;
        std::size_t need = 2 + (*d.rule().cut_formula == f ? 1 : 0);
        std::size_t have = count_of(side_of(ps[i].conclusion(), place), f);
        bool on_cut_side = (i == 0) == (place == Place::Succedent);
        if (have < (on_cut_side ? need : 2)) throw ContainsCut("duplicates are separated by a cut");
        ps[i] = con(ps[i], place, f);
        return rebuild(d, c, std::move(ps));
    }
    for (auto& p : ps) p = con(p, place, f);
    return rebuild(d, c, std::move(ps));
}

}  // namespace

Derivation weaken(const Derivation& d, Place place, const Formula& f) { return weaken_rec(d, place, f); }

InversionResult invert(const Derivation& d, const InversionItem& item) {
    Place place = acts_on_left(item.rule) ? Place::Antecedent : Place::Succedent;
    switch (item.rule) {
        case Rule::LNeg: case Rule::RNeg: case Rule::LAnd: case Rule::RAnd:
        case Rule::LOr: case Rule::ROr: case Rule::LGd: case Rule::RGd: break;
        default: throw UnsupportedRule("no inversion item for " + rule_name(item.rule));
    }
    const auto& xs = side_of(d.conclusion(), place);
    if (item.position >= xs.size()) throw ShapeMismatch("inversion position out of range");
    const Formula& f = xs[item.position];
    Target t{item.rule, place, f, {}};
    if (item.rule == Rule::LGd || item.rule == Rule::RGd) {
        if (!is_valid_path(f, item.path) || subformula_at(f, item.path).op() != Op::Gd)
            throw ShapeMismatch("path does not address a || occurrence of " + render(f));
        t.path = item.path;
    } else if (f.op() != item_op(item.rule)) {
        throw ShapeMismatch(render(f) + " is not a target of " + rule_name(item.rule));
    }
    if (item.rule == Rule::RGd && !all_classical(d.conclusion().antecedent))
        throw NonClassicalAntecedent("RGd inversion needs a classical antecedent");
    return inv(d, t);
}

Derivation reapply(const Derivation& d, const Sequent& conclusion, std::vector<Derivation> premises,
                   std::optional<FormulaList> weakening) {
    if (!weakening) return rebuild(d, conclusion, std::move(premises));
    RuleApp meta = d.rule();
    meta.weakening = std::move(*weakening);
    return rebuild_with(d, conclusion, std::move(premises), d.principal_formula(), std::move(meta));
}

Derivation reconclude(const Derivation& d, const Sequent& conclusion) {
    if (!(d.conclusion() == conclusion))
        throw ShapeMismatch(render(conclusion) + " differs from " + render(d.conclusion()));
    return rebuild(d, conclusion, d.premises());
}

Derivation contract(const Derivation& d, Place place, const Formula& f) {
    if (place == Place::Succedent && !f.is_classical())
        throw NonClassicalRightContraction("right contraction of " + render(f));
    return con(d, place, f);
}

}  // namespace teamproof
