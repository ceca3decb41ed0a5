#include "teamproof/generate.hpp"

namespace teamproof {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Formula leaf(Rng& rng, const GeneratorOptions& opt) {
    std::size_t n = opt.variables.size() + (opt.allow_bot ? 1 : 0);
    std::size_t k = uniform(rng, 0, n - 1);
    if (k == opt.variables.size()) return Formula::bot();
    return Formula::prop(opt.variables[k]);
}

}  // namespace

Formula random_formula(Rng& rng, const GeneratorOptions& opt, std::size_t max_depth, std::size_t& gd_budget) {
    if (max_depth == 0 || uniform(rng, 0, 3) == 0) return leaf(rng, opt);
    // 0 neg, 1 and, 2 or, 3 gd
    std::size_t op = uniform(rng, 0, gd_budget > 0 ? 3 : 2);
    if (op == 0) {
        std::size_t none = 0;
        return Formula::neg(random_formula(rng, opt, max_depth - 1, none));
    }
    if (op == 3) --gd_budget;
    Formula l = random_formula(rng, opt, max_depth - 1, gd_budget);
    Formula r = random_formula(rng, opt, max_depth - 1, gd_budget);
    switch (op) {
        case 1: return Formula::conj(l, r);
        case 2: return Formula::split(l, r);
        default: return Formula::gd(l, r);
    }
}

Formula random_classical_formula(Rng& rng, const GeneratorOptions& opt, std::size_t max_depth) {
    std::size_t none = 0;
    return random_formula(rng, opt, max_depth, none);
}

Sequent random_sequent(Rng& rng, const GeneratorOptions& opt) {
    Sequent s;
    for (auto* side : {&s.antecedent, &s.succedent}) {
        std::size_t budget = opt.max_gd_per_side;
        std::size_t n = uniform(rng, side == &s.antecedent ? 0 : 1, opt.max_formulas_per_side);
        for (std::size_t i = 0; i < n; ++i) side->push_back(random_formula(rng, opt, opt.max_depth, budget));
    }
    return s;
}

Sequent random_classical_sequent(Rng& rng, const GeneratorOptions& opt) {
    GeneratorOptions o = opt;
    o.max_gd_per_side = 0;
    return random_sequent(rng, o);
}

}  // namespace teamproof
