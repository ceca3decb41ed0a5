#pragma once

#include <vector>

#include "teamproof/derivation.hpp"

namespace teamproof {

// Classical leaf Ξ ⇒ f[Ξ]; both sides are aligned position-wise with the endsequent.
struct ResolvedLeaf {
    FormulaList antecedent;  // Ξ ∈ R(Γ)
    FormulaList succedent;   // f[Ξ] ∈ R(Δ)
    Derivation proof;        // cutfree, classical rules only
};

struct NormalForm {
    Sequent endsequent;
    std::vector<ResolvedLeaf> leaves;  // in LGd split order
};

// Cutfree d into classical leaves by LGd then RGd inversion. Throws ContainsCut.
NormalForm decompose(const Derivation& d);

// LGd tree over the endsequent antecedent, RGd chains over each leaf.
Derivation assemble(const NormalForm& nf);

Derivation normalize(const Derivation& d);

// LGd* RGd* G3cp* along every root-to-leaf path, no cuts
bool is_phase_ordered(const Derivation& d);

}  // namespace teamproof
