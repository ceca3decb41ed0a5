#pragma once

#include "teamproof/derivation.hpp"
#include "teamproof/normal_form.hpp"

namespace teamproof {

// G3cp cut elimination; every formula in d must be classical (NonClassicalInput).
Derivation classical_eliminate_cuts(const Derivation& d);

// One classical cut on phi between cutfree d1 (phi on the right) and d2 (phi on the left).
// Conclusion: Γ, Π ⇒ Δ, Σ in that order, one phi removed from each side.
Derivation classical_cut(const Derivation& d1, const Derivation& d2, const Formula& phi);

// Cutfree derivation of the same endsequent.
Derivation eliminate_cuts(const Derivation& d);

// Cut elimination followed by decomposition into classical leaves; the leaf
// table is the map Ξ ↦ f[Ξ]. assemble() goes back.
NormalForm resolve_derivation(const Derivation& d);

}  // namespace teamproof
