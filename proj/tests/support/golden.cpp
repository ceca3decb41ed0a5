#include "golden.hpp"

#include "teamproof/prover.hpp"
#include "teamproof/syntax.hpp"

namespace golden {

using namespace teamproof;

namespace {

Formula f(const char* text) { return parse_formula(text); }

Derivation prove(const char* text) {
    return std::get<Derivation>(prove_or_countermodel(parse_plain_sequent(text)));
}

}  // namespace

Derivation normal_form_example() {
    const Formula goal = f("p||r");
    auto leaf = [&](const char* classical, Side side) {
        Derivation d = prove(classical);
        Sequent c{d.conclusion().antecedent, {goal}};
        RuleApp extra;
        extra.side = side;
        return make::rule(Rule::RGd, c, goal, {d}, extra);
    };
    Derivation d1 = leaf("x, ~x|(~q|p), q => p", Side::L);
    Derivation d2 = leaf("x, ~x|(~q|r), q => r", Side::R);

    const Formula body = f("~x|(~q|(p||r))");
    RuleApp lgd;
    lgd.path = {1, 1};
    Derivation s1 = make::rule(Rule::LGd, Sequent{{f("x"), body, f("q")}, {goal}}, body, {d1, d2}, lgd);
    Derivation s2 = make::rule(Rule::RNeg, Sequent{{f("x"), body}, {goal, f("~q")}}, f("~q"), {s1});
    Derivation s3 = make::rule(Rule::ROr, Sequent{{f("x"), body}, {f("(p||r)|~q")}}, f("(p||r)|~q"), {s2});
    return make::rule(Rule::LAnd, Sequent{{f("x&(~x|(~q|(p||r)))")}, {f("(p||r)|~q")}},
                      f("x&(~x|(~q|(p||r)))"), {s3});
}

Derivation cut_example() {
    Derivation d1 = prove("a|(p||q) => p||q, a");
    Derivation d2 = prove("b, p||q => (b&p)||(b&q)");
    Sequent c = parse_plain_sequent("a|(p||q), b => a, (b&p)||(b&q)");
    return make::cut(c, f("p||q"), d1, d2);
}

Derivation interpolation_example() {
    const Formula notp = f("~p"), rs = f("r|s"), qx = f("q||x");
    auto branch = [&](const char* atom) {
        const Formula a = Formula::prop(atom);
        const Formula ar = Formula::split(a, f("r"));
        const FormulaList lambda = {f("q"), f("r"), f("s"), f("p")};
        Derivation left = make::at(Sequent{{a}, lambda}, atom);
        Derivation right = make::at(Sequent{{f("r")}, lambda}, "r");
        Derivation s1 = make::rule(Rule::LOr, Sequent{{ar}, lambda}, ar, {left, right});
        Derivation s2 = make::rule(Rule::LNeg, Sequent{{ar, notp}, {f("q"), f("r"), f("s")}}, notp, {s1});
        Derivation s3 = make::rule(Rule::ROr, Sequent{{ar, notp}, {rs, f("q")}}, rs, {s2});
        RuleApp extra;
        extra.side = Side::L;
        return make::rule(Rule::RGd, Sequent{{ar, notp}, {rs, qx}}, qx, {s3}, extra);
    };
    const Formula root = f("(p||q)|r");
    RuleApp lgd;
    lgd.path = {0};
    return make::rule(Rule::LGd, Sequent{{root, notp}, {rs, qx}}, root, {branch("p"), branch("q")}, lgd);
}

PartitionSequent interpolation_partition() { return parse_partition_sequent("(p||q)|r ; ~p => r|s ; q||x"); }

}  // namespace golden
