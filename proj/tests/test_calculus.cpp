#include <doctest.h>

#include "support/golden.hpp"
#include "support/oracles.hpp"
#include "teamproof/checker.hpp"
#include "teamproof/generate.hpp"
#include "teamproof/prover.hpp"
#include "teamproof/syntax.hpp"

using namespace teamproof;

namespace {

Formula f(const char* s) { return parse_formula(s); }
Sequent seq(const char* s) { return parse_plain_sequent(s); }

// At on the first antecedent and first succedent formula, unchecked
Derivation raw_at(const Sequent& c) {
    RuleApp app;
    app.rule = Rule::At;
    app.principal = 0;
    app.succedent_index = 0;
    return Derivation(c, app, {});
}

std::vector<Sequent> premises_of(const Derivation& d) {
    std::vector<Sequent> out;
    for (const auto& p : d.premises()) out.push_back(p.conclusion());
    return out;
}

// first node (pre-order) satisfying pred
template <class Pred>
const Derivation* find_node(const Derivation& d, Pred pred) {
    if (pred(d)) return &d;
    for (const auto& p : d.premises())
        if (auto* hit = find_node(p, pred)) return hit;
    return nullptr;
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

}  // namespace

TEST_SUITE("calculus") {

TEST_CASE("deep left rule instance") {
    Sequent c{{f("t"), f("p & ((q|r) || (s || (q & ~p)))")}, {f("u")}};
    RuleApp app;
    app.rule = Rule::LGd;
    app.principal = 1;
    app.path = {1};
    std::vector<Sequent> ps = {Sequent{{f("t"), f("p & (q|r)")}, {f("u")}},
                               Sequent{{f("t"), f("p & (s || (q & ~p))")}, {f("u")}}};
    CHECK(check_inference(c, app, ps).ok());

    app.path = {0};
    CHECK_FALSE(check_inference(c, app, ps).ok());
    app.path = {1};
    std::swap(ps[0], ps[1]);
    CHECK_FALSE(check_inference(c, app, ps).ok());
}

TEST_CASE("split rules demand a classical right context") {
    Sequent c = seq("p | q => p || ~p");
    RuleApp app;
    app.rule = Rule::LOr;
    app.principal = 0;
    app.context = {f("p || ~p")};
    auto res = check_inference(c, app, {seq("p => p || ~p"), seq("q => p || ~p")});
    REQUIRE_FALSE(res.ok());
    CHECK(res.violation->rule == "LOr");
}

TEST_CASE("RGd imposes no antecedent restriction") {
    Sequent c = seq("p || q => p || q");
    RuleApp app;
    app.rule = Rule::RGd;
    app.principal = 0;
    app.side = Side::L;
    CHECK(check_inference(c, app, {seq("p || q => p")}).ok());
}

TEST_CASE("right contraction is classical only") {
    RuleApp app;
    app.rule = Rule::RC;
    app.principal = 0;
    CHECK_FALSE(check_inference(seq("=> p || ~p"), app, {seq("=> p || ~p, p || ~p")}, Calculus::GTPrime).ok());
    CHECK(check_inference(seq("=> p | ~p"), app, {seq("=> p | ~p, p | ~p")}, Calculus::GTPrime).ok());
    CHECK_FALSE(check_inference(seq("=> p | ~p"), app, {seq("=> p | ~p, p | ~p")}, Calculus::GT).ok());
}

TEST_CASE("whole derivations") {
    CHECK(check_derivation(golden::normal_form_example()).ok());
    CHECK(check_derivation(make::at(seq("p => p"), "p")).ok());
    CHECK(check_derivation(make::lbot(seq("bot => q"))).ok());
    CHECK_FALSE(check_derivation(raw_at(seq("p => q"))).ok());

    RuleApp dstr;
    dstr.name = "LDstr";
    Derivation naive(seq("p & (q || r) => (p & q) || (p & r)"), dstr,
                     {make::at(seq("p, q => p"), "p")});
    auto res = check_derivation(naive);
    REQUIRE_FALSE(res.ok());
    CHECK(res.violation->rule == "LDstr");
    CHECK(res.violation->reason.find("unknown") != std::string::npos);

    Derivation arity(seq("p => p"), make::at(seq("p => p"), "p").rule(), {make::at(seq("p => p"), "p")});
    REQUIRE_FALSE(check_derivation(arity).ok());
    CHECK(check_derivation(arity).violation->kind == Violation::Kind::ArityMismatch);
}

TEST_CASE("violations are located") {
    Derivation mid = make::rule(Rule::LAnd, seq("p & r => q"), f("p & r"), {raw_at(seq("p, r => q"))});
    auto res = check_derivation(mid);
    REQUIRE_FALSE(res.ok());
    CHECK(res.violation->address == std::vector<std::size_t>{0});
    CHECK(describe(*res.violation).find("[0]") != std::string::npos);
}

TEST_CASE("height and cut rank") {
    Derivation ax = make::at(seq("p => p"), "p");
    CHECK(ax.height() == 1);
    Derivation un = make::rule(Rule::LAnd, seq("p & q => p"), f("p & q"), {make::at(seq("p, q => p"), "p")});
    CHECK(un.height() == 2);
    Derivation tall = make::rule(Rule::LAnd, seq("p & q & r => p"), f("p & q & r"),
                                 {make::rule(Rule::LAnd, seq("p, q & r => p"), f("q & r"),
                                             {make::at(seq("p, q, r => p"), "p")})});
    CHECK(tall.height() == 3);
    Derivation bin = make::rule(Rule::RAnd, seq("p, q & (r & s) => p & q"), f("p & q"),
                                {make::at(seq("p, q & (r & s) => p"), "p"),
                                 make::rule(Rule::LAnd, seq("p, q & (r & s) => q"), f("q & (r & s)"),
                                            {make::rule(Rule::LAnd, seq("p, q, r & s => q"), f("r & s"),
                                                        {make::at(seq("p, q, r, s => q"), "q")})})});
    CHECK(bin.premise(0).height() == 1);
    CHECK(bin.premise(1).height() == 3);
    CHECK(bin.height() == 4);
    CHECK(check_derivation(bin).ok());

    CHECK(cutrank(ax) == 0);
    CHECK(is_cutfree(ax));
    Derivation c1 = make::cut(seq("p => p"), f("p"), ax, ax);
    CHECK(cutrank(c1) == 1);
    // p, q => p through a cut on p, lifted to p & q => p & q, then cut against an identity on p & q
    Derivation leaf = make::cut(seq("q, p => p"), f("p"), ax, make::at(seq("p, q => p"), "p"));
    Derivation conj = make::rule(Rule::RAnd, seq("p, q => p & q"), f("p & q"),
                                 {leaf, make::at(seq("p, q => q"), "q")});
    Derivation lifted = make::rule(Rule::LAnd, seq("p & q => p & q"), f("p & q"), {conj});
    Derivation c2 = make::cut(seq("p & q => p & q"), f("p & q"), lifted, oracle::identity(f("p & q")));
    CHECK(check_derivation(c2).ok());
    CHECK(cutrank(c2) == 3);
    CHECK_FALSE(is_cutfree(c2));
}

TEST_CASE("mutated prover derivations are rejected") {
    auto corpus = prover_corpus(31, 120);
    int mutated = 0;
    for (const auto& d : corpus) {
        REQUIRE(check_derivation(d).ok());
        // extra formula in a non-axiom conclusion
        if (d.premises().size() > 0) {
            Sequent c = d.conclusion();
            c.succedent.push_back(f("zz"));
            CHECK_FALSE(check_inference(c, d.rule(), premises_of(d)).ok());
            ++mutated;
        }
        // widen the classical context of a split rule by a || formula
        if (auto* n = find_node(d, [](const Derivation& x) {
                return x.rule().rule == Rule::RAnd || x.rule().rule == Rule::LOr;
            })) {
            Formula g = f("p || ~p");
            Sequent c = n->conclusion();
            c.succedent.push_back(g);
            RuleApp app = n->rule();
            app.context.push_back(g);
            auto ps = premises_of(*n);
            for (auto& p : ps) p.succedent.push_back(g);
            CHECK_FALSE(check_inference(c, app, ps).ok());
            ++mutated;
        }
        // move a deep-rule path off its || node
        if (auto* n = find_node(d, [](const Derivation& x) {
                return x.rule().rule == Rule::LGd || x.rule().rule == Rule::RGd;
            })) {
            RuleApp app = n->rule();
            const Formula& p = n->principal_formula();
            OccurrencePath moved = {9};
            for (int k : {0, 1}) {
                OccurrencePath cand = app.path;
                cand.push_back(k);
                if (subformula_at(p, cand).op() != Op::Gd) moved = cand;
            }
            app.path = moved;
            CHECK_FALSE(check_inference(n->conclusion(), app, premises_of(*n)).ok());
            ++mutated;
        }
    }
    CHECK(mutated > 150);
}

TEST_CASE("soundness of checked derivations") {
    for (const auto& d : prover_corpus(32, 150)) CHECK(oracle::team_valid(d.conclusion()));
}

TEST_CASE("GT' rules") {
    RuleApp app;
    app.rule = Rule::RAndI;
    app.principal = 0;
    app.split_antecedent = {f("p")};
    app.split_succedent = {};
    Sequent c = seq("p, q => p & q");
    CHECK(check_inference(c, app, {seq("p => p"), seq("q => q")}, Calculus::GTPrime).ok());
    CHECK_FALSE(check_inference(c, app, {seq("p => p"), seq("q => q")}, Calculus::GT).ok());
    app.split_antecedent = {f("q")};
    CHECK_FALSE(check_inference(c, app, {seq("p => p"), seq("q => q")}, Calculus::GTPrime).ok());

    RuleApp lc;
    lc.rule = Rule::LC;
    lc.principal = 0;
    CHECK(check_inference(seq("p || q => p"), lc, {seq("p || q, p || q => p")}, Calculus::GTPrime).ok());
}

TEST_CASE("GT' conversion of prover derivations") {
    int with_split_rules = 0;
    for (const auto& d : prover_corpus(33, 150)) {
        Derivation g = oracle::to_gt_prime(d);
        CAPTURE(render(d.conclusion()));
        CHECK(g.conclusion() == d.conclusion());
        auto res = check_derivation(g, Calculus::GTPrime);
        CHECK_MESSAGE(res.ok(), (res.ok() ? "" : describe(*res.violation)));
        CHECK(oracle::team_valid(g.conclusion()));
        bool split = oracle::count_rule(d, Rule::RAnd) + oracle::count_rule(d, Rule::LOr) > 0;
        with_split_rules += split;
        CHECK(check_derivation(g, Calculus::GT).ok() == !split);
        // and back: the GT prover re-derives the same endsequent
        CHECK(std::holds_alternative<Derivation>(prove_or_countermodel(g.conclusion())));
    }
    CHECK(with_split_rules > 20);
}

}
