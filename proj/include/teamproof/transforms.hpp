#pragma once

#include <optional>
#include <vector>

#include "teamproof/derivation.hpp"

namespace teamproof {

enum class Place { Antecedent, Succedent };

// Height-preserving weakening; on the right, RAnd/LOr absorb f into their implicit weakening.
Derivation weaken(const Derivation& d, Place place, const Formula& f);

// One item of the height-preserving inversion lemma. `position` indexes the
// antecedent for LNeg/LAnd/LOr/LGd and the succedent for RNeg/RAnd/ROr/RGd;
// `path` addresses the || occurrence for LGd/RGd.
struct InversionItem {
    Rule rule;
    std::size_t position = 0;
    OccurrencePath path = {};
};

struct InversionResult {
    std::vector<Derivation> derivations;  // two for RAnd, LOr and LGd
    std::optional<Side> side;             // RGd: the disjunct that survived
};

InversionResult invert(const Derivation& d, const InversionItem& item);

// Height-preserving contraction of one duplicate of f. Right contraction is
// restricted to classical f.
Derivation contract(const Derivation& d, Place place, const Formula& f);

// Last inference of d (rule, principal value, path, side, splits) re-applied to a
// new conclusion and premises; positions are located again by value.
Derivation reapply(const Derivation& d, const Sequent& conclusion, std::vector<Derivation> premises,
                   std::optional<FormulaList> weakening = std::nullopt);

// Same last inference, conclusion replaced by a multiset-equal sequent (e.g. reordered).
Derivation reconclude(const Derivation& d, const Sequent& conclusion);

}  // namespace teamproof
