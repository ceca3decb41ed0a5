#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "teamproof/formula.hpp"
#include "teamproof/resolutions.hpp"
#include "teamproof/sequent.hpp"

namespace teamproof {

enum class Rule : std::uint8_t {
    At, LBot, LNeg, RNeg, LAnd, RAnd, LOr, ROr, LGd, RGd, Cut,
    LOrI, RAndI, LC, RC,  // GT′
    Unknown
};

std::string rule_name(Rule r);
Rule rule_from_name(const std::string& name);  // Unknown for anything else
bool acts_on_left(Rule r);                      // principal sits in the antecedent
std::size_t rule_arity(Rule r);

struct RuleApp {
    Rule rule = Rule::Unknown;
    std::string name;                            // original tag when Unknown
    std::optional<std::size_t> principal;        // position on the side the rule acts on
    std::optional<std::size_t> succedent_index;  // At: the p on the right
    OccurrencePath path;                         // LGd, RGd
    std::optional<Side> side;                    // RGd
    FormulaList weakening;                       // RAnd, LOr: implicit weakening Δ
    FormulaList context;                         // RAnd, LOr: classical context Λ
    std::optional<Formula> cut_formula;          // Cut
    FormulaList split_antecedent;                // LOrI, RAndI: first premise's context
    FormulaList split_succedent;
};

class Derivation {
public:
    Derivation(Sequent conclusion, RuleApp rule, std::vector<Derivation> premises = {});

    const Sequent& conclusion() const { return node_->conclusion; }
    const RuleApp& rule() const { return node_->rule; }
    const std::vector<Derivation>& premises() const { return node_->premises; }
    const Derivation& premise(std::size_t i) const { return node_->premises.at(i); }
    std::size_t height() const { return node_->height; }
    std::size_t node_count() const { return node_->nodes; }

    // principal formula, when the rule has one
    const Formula& principal_formula() const;

private:
    struct Node {
        Sequent conclusion;
        RuleApp rule;
        std::vector<Derivation> premises;
        std::size_t height = 1;
        std::size_t nodes = 1;
    };
    std::shared_ptr<const Node> node_;
};

inline std::size_t height(const Derivation& d) { return d.height(); }
std::size_t cutrank(const Derivation& d);
bool is_cutfree(const Derivation& d);
bool uses_only_classical_rules(const Derivation& d);  // no LGd, RGd

// Builders. Positions are located by value in the given conclusion.
namespace make {

Derivation axiom(const Sequent& conclusion);  // At on the first shared atom, else LBot
Derivation at(const Sequent& conclusion, const std::string& atom);
Derivation lbot(const Sequent& conclusion);
Derivation rule(Rule r, const Sequent& conclusion, const Formula& principal,
                std::vector<Derivation> premises, RuleApp extra = {});
Derivation cut(const Sequent& conclusion, const Formula& cut_formula, Derivation left, Derivation right);

// RGd steps from top (succedent a position-wise resolution of bottom's) down to bottom.
Derivation rgd_chain(Derivation top, const Sequent& bottom);

}  // namespace make

}  // namespace teamproof
