#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "teamproof/derivation.hpp"
#include "teamproof/semantics.hpp"

namespace teamproof {

struct ProverOptions {
    std::size_t node_budget = 1'000'000;
};

struct ClassicalCountermodel {
    Team team;
    Sequent leaf;             // the failing atomic sequent
    std::vector<Rule> trace;  // rules from the root down to the leaf
};

using ClassicalOutcome = std::variant<Derivation, ClassicalCountermodel>;
using ProofOutcome = std::variant<Derivation, Team>;

// G3cp backward search. The countermodel lives on `domain` (default: the sequent's variables).
ClassicalOutcome prove_classical(const Sequent& s, const std::vector<std::string>& domain = {},
                                 const ProverOptions& options = {});

// Cutfree GT derivation, or a countermodel team over the sequent's variables.
ProofOutcome prove_or_countermodel(const Sequent& s, const ProverOptions& options = {});

// Countermodel for the conclusion from countermodels of premises.
// RGd takes the teams of both resolution candidates.
Team lift_countermodel(const Sequent& conclusion, const RuleApp& rule, const std::vector<Team>& premise_models);

}  // namespace teamproof
