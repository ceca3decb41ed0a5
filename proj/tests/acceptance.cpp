// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support/golden.hpp"
#include "support/oracles.hpp"
#include "teamproof/checker.hpp"
#include "teamproof/cut_elimination.hpp"
#include "teamproof/errors.hpp"
#include "teamproof/generate.hpp"
#include "teamproof/interpolation.hpp"
#include "teamproof/normal_form.hpp"
#include "teamproof/prover.hpp"
#include "teamproof/resolutions.hpp"
#include "teamproof/syntax.hpp"
#include "teamproof/transforms.hpp"

using namespace teamproof;

namespace {

// time limits in seconds
constexpr double kLimitCountermodel = 1.0;
constexpr double kLimitWitness = 10.0;
constexpr double kLimitRandomSuite = 300.0;
constexpr double kLimitImpossibility = 120.0;

constexpr int kRandomSequents = 1000;
constexpr int kStructural = 300;
constexpr int kNormalize = 200;
constexpr int kCuts = 200;
constexpr int kClassicalRandom = 1000;

constexpr std::uint64_t kSeedRandomSuite = 20240501;
constexpr std::uint64_t kSeedStructural = 20240502;
constexpr std::uint64_t kSeedNormalize = 20240503;
constexpr std::uint64_t kSeedCuts = 20240504;
constexpr std::uint64_t kSeedClassical = 20240505;

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) note << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Formula f(const char* s) { return parse_formula(s); }

std::set<Formula> fset(std::initializer_list<const char*> xs) {
    std::set<Formula> out;
    for (auto x : xs) out.insert(f(x));
    return out;
}

std::vector<Derivation> prover_corpus(std::uint64_t seed, int n) {
    Rng rng(seed);
    std::vector<Derivation> out;
    while (static_cast<int>(out.size()) < n) {
        auto r = prove_or_countermodel(random_sequent(rng));
        if (auto* d = std::get_if<Derivation>(&r)) out.push_back(*d);
    }
    return out;
}

bool checks(const Derivation& d) { return check_derivation(d).ok(); }

// -------------------------------------------------------------------------

void golden_countermodel(Outcome& o) {
    auto t0 = Clock::now();
    Sequent s = parse_plain_sequent("p||(p|~p) => p||~p");
    auto r = prove_or_countermodel(s);
    double dt = seconds_since(t0);
    o.require(std::holds_alternative<Team>(r), "prover returned a derivation");
    if (!o.pass) return;
    const Team& t = std::get<Team>(r);
    o.require(t.domain() == std::vector<std::string>{"p"}, "domain is not {p}");
    o.require(t.members() == std::vector<Valuation>{0, 1}, "team is not {v_p, v_not_p}");
    o.require(oracle::is_countermodel(t, s), "oracle rejects the team");
    o.require(dt < kLimitCountermodel, "too slow");
    o.note << "team of " << t.size() << " valuations in " << dt << "s";
}

void golden_witness(Outcome& o) {
    auto t0 = Clock::now();
    Sequent s = parse_plain_sequent("(r&x)|(((p&x)||(q&x))|(y&x)) => (x&(r|(p|y)))||(x&(r|(q|y)))");
    auto r = prove_or_countermodel(s);
    double dt = seconds_since(t0);
    o.require(std::holds_alternative<Derivation>(r), "no derivation");
    if (!o.pass) return;
    const auto& d = std::get<Derivation>(r);
    o.require(d.conclusion() == s, "wrong endsequent");
    o.require(is_cutfree(d), "derivation has a cut");
    o.require(checks(d), "checker rejects the derivation");
    o.require(dt < kLimitWitness, "too slow");
    o.note << d.node_count() << " nodes, height " << d.height() << ", " << dt << "s";
}

void golden_interpolant(Outcome& o) {
    auto p = golden::interpolation_partition();
    auto r = interpolate_partition(golden::interpolation_example(), p);
    o.require(r.interpolant == f("(p|bot)||(q|bot)"), "interpolant is " + render(r.interpolant));
    auto v = verify_interpolant(r, p);
    o.require(v.ok, v.failures.empty() ? "verify failed" : v.failures.front());
    o.note << "interpolant " << render(r.interpolant);
}

void golden_resolutions(Outcome& o) {
    Formula g = f("p||(q||r)");
    auto as_set = [](const std::vector<Formula>& xs) { return std::set<Formula>(xs.begin(), xs.end()); };
    o.require(as_set(partial_resolutions(g, 0)) == fset({"p||(q||r)"}), "PR0");
    o.require(as_set(partial_resolutions(g, 1)) == fset({"p", "q||r", "p||q", "p||r"}), "PR1");
    o.require(as_set(partial_resolutions(g, 2)) == fset({"p", "q", "r"}), "PR2");
    auto rm = resolutions_multiset({g, f("s||r")});
    std::set<FormulaList> got;
    for (const auto& m : rm) got.insert(canonical(m));
    std::set<FormulaList> want;
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"p", "s"}, {"p", "r"}, {"q", "s"}, {"q", "r"}, {"r", "s"}, {"r", "r"}})
        want.insert(canonical({f(a), f(b)}));
    o.require(rm.size() == 6 && got == want, "R({p||(q||r), s||r}) differs");
    o.note << "|PR1| = " << partial_resolutions(g, 1).size() << ", |R| = " << rm.size();
}

void random_suite(Outcome& o) {
    auto t0 = Clock::now();
    Rng rng(kSeedRandomSuite);
    int valid = 0, invalid = 0;
    for (int i = 0; i < kRandomSequents; ++i) {
        Sequent s = random_sequent(rng);
        bool expect = oracle::team_valid(s);
        auto r = prove_or_countermodel(s);
        if (auto* d = std::get_if<Derivation>(&r)) {
            ++valid;
            o.require(expect, "derivation for invalid " + render(s));
            o.require(d->conclusion() == s && is_cutfree(*d) && checks(*d), "bad derivation for " + render(s));
        } else {
            ++invalid;
            o.require(!expect, "countermodel for valid " + render(s));
            o.require(oracle::is_countermodel(std::get<Team>(r), s), "team fails for " + render(s));
        }
    }
    double dt = seconds_since(t0);
    o.require(dt < kLimitRandomSuite, "too slow");
    o.note << valid << " valid, " << invalid << " invalid, " << dt << "s";
}

std::vector<InversionItem> items_for(const Sequent& s) {
    std::vector<InversionItem> out;
    auto add = [&](bool left, std::size_t i, const Formula& g) {
        switch (g.op()) {
            case Op::And: out.push_back({left ? Rule::LAnd : Rule::RAnd, i}); break;
            case Op::Or: out.push_back({left ? Rule::LOr : Rule::ROr, i}); break;
            case Op::Neg: out.push_back({left ? Rule::LNeg : Rule::RNeg, i}); break;
            default: break;
        }
        for (const auto& path : gd_paths(g)) out.push_back({left ? Rule::LGd : Rule::RGd, i, path});
    };
    for (std::size_t i = 0; i < s.antecedent.size(); ++i) add(true, i, s.antecedent[i]);
    for (std::size_t i = 0; i < s.succedent.size(); ++i) add(false, i, s.succedent[i]);
    return out;
}

// premises expected from the rule shape, computed directly
std::vector<Sequent> expected_inversion(const Sequent& s, const InversionItem& it, std::optional<Side> side) {
    bool left = acts_on_left(it.rule);
    const Formula g = (left ? s.antecedent : s.succedent)[it.position];
    FormulaList G = s.antecedent, D = s.succedent;
    (left ? G : D) = remove_at(left ? G : D, it.position);
    switch (it.rule) {
        case Rule::LAnd: return {{concat(G, {g.left(), g.right()}), D}};
        case Rule::LOr: return {{concat(G, {g.left()}), D}, {concat(G, {g.right()}), D}};
        case Rule::LNeg: return {{G, concat(D, {g.child(0)})}};
        case Rule::RAnd: return {{G, concat(D, {g.left()})}, {G, concat(D, {g.right()})}};
        case Rule::ROr: return {{G, concat(D, {g.left(), g.right()})}};
        case Rule::RNeg: return {{concat(G, {g.child(0)}), D}};
        case Rule::LGd: {
            const Formula& h = subformula_at(g, it.path);
            return {{concat(G, {substitute_at(g, it.path, h.left())}), D},
                    {concat(G, {substitute_at(g, it.path, h.right())}), D}};
        }
        case Rule::RGd: {
            const Formula& h = subformula_at(g, it.path);
            return {{G, concat(D, {substitute_at(g, it.path, h.child(side_index(side.value())))})}};
        }
        default: return {};
    }
}

void structural_suite(Outcome& o) {
    Rng rng(kSeedStructural);
    GeneratorOptions opt;
    std::size_t weakenings = 0, inversions = 0, contractions = 0, injected = 0, rejected = 0;
    for (const auto& d : prover_corpus(kSeedStructural, kStructural)) {
        const Sequent& s = d.conclusion();
        const std::string tag = render(s);
        std::size_t budget = 1;
        Formula nu = random_formula(rng, opt, 2, budget);
        for (Place pl : {Place::Antecedent, Place::Succedent}) {
            Derivation w = weaken(d, pl, nu);
            Sequent want = s;
            (pl == Place::Antecedent ? want.antecedent : want.succedent).push_back(nu);
            o.require(w.height() <= d.height() && w.conclusion() == want && checks(w), "weaken on " + tag);
            ++weakenings;
        }
        for (const auto& it : items_for(s)) {
            if (it.rule == Rule::RGd && !all_classical(s.antecedent)) {
                bool threw = false;
                try {
                    invert(d, it);
                } catch (const NonClassicalAntecedent&) {
                    threw = true;
                }
                o.require(threw, "RGd inversion with a || antecedent on " + tag);
                continue;
            }
            auto r = invert(d, it);
            auto want = expected_inversion(s, it, r.side);
            bool ok = r.derivations.size() == want.size();
            for (std::size_t k = 0; ok && k < want.size(); ++k)
                ok = r.derivations[k].conclusion() == want[k] && r.derivations[k].height() <= d.height() &&
                     checks(r.derivations[k]);
            o.require(ok, rule_name(it.rule) + " inversion on " + tag);
            ++inversions;
        }
        for (const auto& g : s.antecedent) {
            Derivation twice = weaken(d, Place::Antecedent, g);
            Derivation once = contract(twice, Place::Antecedent, g);
            o.require(once.conclusion() == s && once.height() <= twice.height() && checks(once),
                      "left contraction on " + tag);
            ++contractions;
        }
        for (const auto& g : s.succedent) {
            Derivation twice = weaken(d, Place::Succedent, g);
            if (g.is_classical()) {
                Derivation once = contract(twice, Place::Succedent, g);
                o.require(once.conclusion() == s && once.height() <= twice.height() && checks(once),
                          "right contraction on " + tag);
                ++contractions;
                continue;
            }
            ++injected;
            try {
                contract(twice, Place::Succedent, g);
            } catch (const NonClassicalRightContraction&) {
                ++rejected;
            }
        }
    }
    o.require(injected > 0 && rejected == injected, "nonclassical right contraction accepted");
    o.note << weakenings << " weakenings, " << inversions << " inversions, " << contractions
           << " contractions, " << rejected << "/" << injected << " || right contractions rejected";
}

void normal_form_suite(Outcome& o) {
    int n = 0;
    for (const auto& d : prover_corpus(kSeedNormalize, kNormalize)) {
        Derivation nf = normalize(d);
        o.require(nf.conclusion() == d.conclusion() && is_phase_ordered(nf) && checks(nf),
                  "normalize on " + render(d.conclusion()));
        ++n;
    }
    NormalForm ex = decompose(golden::normal_form_example());
    bool pair = ex.leaves.size() == 2 && ex.leaves[0].antecedent == FormulaList{f("x&(~x|(~q|p))")} &&
                ex.leaves[1].antecedent == FormulaList{f("x&(~x|(~q|r))")} &&
                ex.leaves[0].succedent == FormulaList{f("p|~q")} && ex.leaves[1].succedent == FormulaList{f("r|~q")};
    o.require(pair, "worked example resolution pair");
    Derivation exn = normalize(golden::normal_form_example());
    o.require(is_phase_ordered(exn) && checks(exn), "worked example normal form");
    o.note << n << " derivations normalized; example leaves " << render(ex.leaves.at(0).antecedent) << " / "
           << render(ex.leaves.at(1).antecedent);
}

void cut_suite(Outcome& o) {
    std::mt19937_64 rng(kSeedCuts);
    std::vector<Derivation> inputs = {golden::cut_example()};
    int k = 0;
    for (const auto& d : prover_corpus(kSeedCuts, kCuts - 1)) {
        Derivation c = oracle::inject_cut(d, rng, k++ % 3);
        if (k % 4 == 0) c = oracle::inject_cut(c, rng, 0);  // nested
        inputs.push_back(c);
    }
    std::size_t cuts = 0;
    for (const auto& c : inputs) {
        cuts += oracle::count_rule(c, Rule::Cut);
        o.require(checks(c), "injected derivation does not check");
        Derivation e = eliminate_cuts(c);
        const std::string tag = render(c.conclusion());
        o.require(oracle::count_rule(e, Rule::Cut) == 0 && e.conclusion() == c.conclusion() && checks(e),
                  "cut elimination on " + tag);
        auto vars = oracle::vars_of(e.conclusion());
        if (vars.size() <= 3) o.require(oracle::team_valid(e.conclusion()), "oracle rejects " + tag);
    }
    Derivation ex = eliminate_cuts(golden::cut_example());
    o.require(ex.conclusion() == parse_plain_sequent("a|(p||q), b => a, (b&p)||(b&q)"), "worked cut");
    o.note << inputs.size() << " derivations, " << cuts << " cuts removed";
}

void impossibility(Outcome& o) {
    auto t0 = Clock::now();
    std::string text = oracle::expand_questions("?p ; ?q => ?p & ?q & r ; ?p & ?q & ~r");
    PartitionSequent p = parse_partition_sequent(text);
    o.require(oracle::team_valid(p.flatten()), "the sequent itself should be valid");
    bool rejected = false;
    try {
        interpolate_partition(make::at(parse_plain_sequent("p => p"), "p"), p);
    } catch (const NonClassicalLambda1&) {
        rejected = true;
    }
    o.require(rejected, "partition not rejected");
    auto search = oracle::search_interpolant(p.gamma1, p.gamma2, p.delta1, p.delta2, {"p", "q", "r"});
    o.require(!search.witness, search.witness ? "interpolant found: " + render(*search.witness) : "");
    double dt = seconds_since(t0);
    o.require(dt < kLimitImpossibility, "too slow");
    o.note << search.classes_depth2 << " semantic classes at depth 2, " << search.candidates_checked
           << " candidates, none interpolates, " << dt << "s";
}

void classical_agreement(Outcome& o) {
    const std::vector<std::string> vars = {"p", "q"};
    std::size_t n = 0;
    auto run = [&](const Sequent& s) {
        ++n;
        bool proved = std::holds_alternative<Derivation>(prove_classical(s));
        if (proved != oracle::classical_valid(s)) o.require(false, "disagreement on " + render(s));
    };
    // every  => φ  with depth(φ) <= 3 over {p, q, bot}
    auto level2 = oracle::enumerate(vars, 2, true);
    for (const auto& a : oracle::enumerate(vars, 0, true)) run({{}, {a}});
    for (const auto& a : level2) run({{}, {Formula::neg(a)}});
    for (const auto& a : level2)
        for (const auto& b : level2) {
            run({{}, {Formula::conj(a, b)}});
            run({{}, {Formula::split(a, b)}});
        }
    // every  φ => ψ  with both of depth <= 2
    for (const auto& a : level2)
        for (const auto& b : level2) run({{a}, {b}});
    std::size_t exhaustive = n;

    Rng rng(kSeedClassical);
    GeneratorOptions opt;
    opt.max_formulas_per_side = 3;
    for (int i = 0; i < kClassicalRandom; ++i) run(random_classical_sequent(rng, opt));
    o.note << exhaustive << " exhaustive + " << n - exhaustive << " random sequents";
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> all = {
        {1, "golden countermodel", golden_countermodel},
        {2, "golden validity", golden_witness},
        {3, "golden interpolant", golden_interpolant},
        {4, "golden resolutions", golden_resolutions},
        {5, "random soundness and completeness", random_suite},
        {6, "structural rules", structural_suite},
        {7, "normal form", normal_form_suite},
        {8, "cut elimination", cut_suite},
        {9, "interpolation counterexample", impossibility},
        {10, "classical agreement", classical_agreement},
    };
    int failed = 0;
    for (const auto& c : all) {
        Outcome o;
        auto t0 = Clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::printf("criterion %2d %s  %-34s %7.2fs  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                    seconds_since(t0), o.note.str().c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
