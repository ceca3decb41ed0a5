#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "teamproof/formula.hpp"
#include "teamproof/sequent.hpp"

namespace teamproof {

struct GeneratorOptions {
    std::vector<std::string> variables = {"p", "q", "r"};
    std::size_t max_depth = 4;
    std::size_t max_gd_per_side = 2;
    std::size_t max_formulas_per_side = 2;
    bool allow_bot = true;
};

using Rng = std::mt19937_64;

// Depth exactly bounded by max_depth; at most gd_budget || nodes (decremented).
Formula random_formula(Rng& rng, const GeneratorOptions& opt, std::size_t max_depth, std::size_t& gd_budget);
Formula random_classical_formula(Rng& rng, const GeneratorOptions& opt, std::size_t max_depth);
Sequent random_sequent(Rng& rng, const GeneratorOptions& opt = {});
Sequent random_classical_sequent(Rng& rng, const GeneratorOptions& opt = {});

}  // namespace teamproof
