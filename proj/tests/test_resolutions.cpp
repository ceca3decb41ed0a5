#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "teamproof/errors.hpp"
#include "teamproof/generate.hpp"
#include "teamproof/resolutions.hpp"
#include "teamproof/syntax.hpp"

using namespace teamproof;

namespace {

Formula f(const char* s) { return parse_formula(s); }

std::set<Formula> as_set(const std::vector<Formula>& xs) { return {xs.begin(), xs.end()}; }

std::set<Formula> as_set(std::initializer_list<const char*> xs) {
    std::set<Formula> out;
    for (auto x : xs) out.insert(f(x));
    return out;
}

// textbook recursion, independent of the library's enumeration
std::set<Formula> ref_resolutions(const Formula& g) {
    switch (g.op()) {
        case Op::Prop:
        case Op::Bot:
        case Op::Neg: return {g};
        case Op::Gd: {
            auto l = ref_resolutions(g.left());
            auto r = ref_resolutions(g.right());
            l.insert(r.begin(), r.end());
            return l;
        }
        default: {
            std::set<Formula> out;
            for (const auto& a : ref_resolutions(g.left()))
                for (const auto& b : ref_resolutions(g.right())) out.insert(Formula::binary(g.op(), a, b));
            return out;
        }
    }
}

std::set<FormulaList> multisets(const std::vector<FormulaList>& xs) {
    std::set<FormulaList> out;
    for (const auto& x : xs) out.insert(canonical(x));
    return out;
}

std::set<FormulaList> multisets(std::initializer_list<std::initializer_list<const char*>> xs) {
    std::set<FormulaList> out;
    for (auto x : xs) {
        FormulaList l;
        for (auto y : x) l.push_back(f(y));
        out.insert(canonical(l));
    }
    return out;
}

}  // namespace

TEST_SUITE("resolutions") {

TEST_CASE("resolutions of single formulas") {
    CHECK(as_set(resolutions(f("p || (q || r)"))) == as_set({"p", "q", "r"}));
    CHECK(as_set(resolutions(f("p & ~q"))) == as_set({"p & ~q"}));
    CHECK(as_set(resolutions(f("(p||q) | s"))) == as_set({"p | s", "q | s"}));
}

TEST_CASE("resolutions of multisets") {
    auto r = resolutions_multiset({f("p||(q||r)"), f("s||r")});
    CHECK(r.size() == 6);
    CHECK(multisets(r) == multisets({{"p", "s"}, {"p", "r"}, {"q", "s"}, {"q", "r"}, {"r", "s"}, {"r", "r"}}));
    CHECK(multisets(resolutions_multiset({f("p & q")})) == multisets({{"p & q"}}));
    CHECK(multisets(resolutions_multiset({f("p||q"), f("p||q")})) ==
          multisets({{"p", "p"}, {"p", "q"}, {"q", "q"}}));
    CHECK(resolution_choices({f("p||q"), f("p||q")}).size() == 3);
}

TEST_CASE("partial resolutions of p || (q || r)") {
    Formula g = f("p||(q||r)");
    CHECK(as_set(partial_resolutions(g, 0)) == as_set({"p||(q||r)"}));
    CHECK(as_set(partial_resolutions(g, 1)) == as_set({"p", "q||r", "p||q", "p||r"}));
    CHECK(as_set(partial_resolutions(g, 2)) == as_set({"p", "q", "r"}));
    CHECK_THROWS_AS(partial_resolutions(g, 3), DegreeOutOfRange);
}

TEST_CASE("labelled resolution steps") {
    auto lf = gd_label(f("p||(q||r)"));
    CHECK(lf.labels.at({}) == 0);
    CHECK(lf.labels.at({1}) == 1);
    auto r0 = apply_resolution_step(lf, {Side::R, 0});
    CHECK(r0.formula == f("q||r"));
    CHECK(r0.labels.at({}) == 1);
    auto l1 = apply_resolution_step(lf, {Side::L, 1});
    CHECK(l1.formula == f("p||q"));
    CHECK(apply_resolution_step(r0, {Side::L, 1}).formula == f("q"));
    // commuting steps on disjoint labels
    CHECK(apply_resolution_step(l1, {Side::R, 0}).formula == f("q"));
    // the second label was discarded along with the left disjunct's sibling
    CHECK_THROWS_AS(apply_resolution_step(apply_resolution_step(lf, {Side::L, 0}), {Side::L, 1}), LabelAbsent);
}

TEST_CASE("witnesses and chains") {
    Formula g = f("(p||q) & (r||s)");
    auto dec = find_resolution(g, f("q & r"));
    REQUIRE(dec);
    auto chain = resolution_chain(g, *dec);
    CHECK(chain.formulas.front() == g);
    CHECK(chain.formulas.back() == f("q & r"));
    CHECK(chain.steps.size() == 2);
    CHECK_FALSE(find_resolution(g, f("p & q")));
    CHECK(resolution_witnesses(g).size() == 4);
}

TEST_CASE("resolutions agree with the textbook recursion") {
    Rng rng(21);
    GeneratorOptions opt;
    for (int i = 0; i < 300; ++i) {
        std::size_t budget = 3;
        Formula g = random_formula(rng, opt, 4, budget);
        CAPTURE(render(g));
        auto rs = resolutions(g);
        CHECK(as_set(rs) == ref_resolutions(g));
        for (const auto& r : rs) CHECK(r.is_classical());
        std::size_t m = g.gd_count();
        CHECK(partial_resolutions(g, m).size() <= (std::size_t{1} << m));
        CHECK(as_set(partial_resolutions(g, m)) == ref_resolutions(g));
    }
}

TEST_CASE("normal form: a team satisfies f iff it satisfies a resolution") {
    Rng rng(22);
    GeneratorOptions opt;
    const oracle::Teams naive({"p", "q", "r"});
    for (int i = 0; i < 80; ++i) {
        std::size_t budget = 3;
        Formula g = random_formula(rng, opt, 4, budget);
        CAPTURE(render(g));
        auto sat = naive.sat(g);
        std::vector<bool> any(sat.size(), false);
        for (const auto& r : resolutions(g)) {
            auto s = naive.sat(r);
            for (std::size_t t = 0; t < s.size(); ++t) any[t] = any[t] || s[t];
        }
        CHECK(sat == any);
    }
}

TEST_CASE("split property and resolution theorem") {
    Rng rng(23);
    GeneratorOptions opt;
    opt.max_formulas_per_side = 2;
    for (int i = 0; i < 200; ++i) {
        Sequent s = random_sequent(rng, opt);
        if (s.succedent.size() != 1) continue;
        CAPTURE(render(s));
        const Formula& psi = s.succedent[0];
        bool valid = oracle::team_valid(s);
        bool by_resolutions = true;
        for (const auto& lam : resolutions_multiset(s.antecedent)) {
            bool some = false;
            for (const auto& a : resolutions(psi)) some = some || oracle::team_valid(Sequent{lam, {a}});
            by_resolutions = by_resolutions && some;
        }
        CHECK(valid == by_resolutions);

        if (all_classical(s.antecedent) && psi.op() == Op::Gd) {
            bool either = oracle::team_valid(Sequent{s.antecedent, {psi.left()}}) ||
                          oracle::team_valid(Sequent{s.antecedent, {psi.right()}});
            CHECK(valid == either);
        }
    }
}

}
