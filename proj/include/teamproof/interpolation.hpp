#pragma once

#include <string>
#include <variant>
#include <vector>

#include "teamproof/derivation.hpp"
#include "teamproof/prover.hpp"
#include "teamproof/semantics.hpp"

namespace teamproof {

struct PolarityReport {
    SignedProps interpolant;
    SignedProps allowed;  // (P^i(Γ1) ∪ P^j(Λ1)) ∩ (P^j(Γ2) ∪ P^i(Δ2))
    bool ok = false;
};

struct InterpolationResult {
    Formula interpolant;
    Derivation left_derivation;   // Γ1 ⇒ Λ1, φ
    Derivation right_derivation;  // Γ2, φ ⇒ Δ2
    PolarityReport polarity;
};

PolarityReport polarity_report(const Formula& phi, const PartitionSequent& p);

// Throws NonClassicalLambda1, ContainsCut, PartitionMismatch (in that order of checking).
InterpolationResult interpolate_partition(const Derivation& d, const PartitionSequent& p);

struct NotEntailed {
    Team countermodel;
};

std::variant<InterpolationResult, NotEntailed> craig_lyndon(const Formula& phi, const Formula& psi,
                                                            const ProverOptions& options = {});

struct InterpolantCheck {
    bool ok = true;
    std::vector<std::string> failures;
    explicit operator bool() const { return ok; }
};

// Both derivations, both sequents by the oracle (when small enough), and the polarity inclusions.
InterpolantCheck verify_interpolant(const InterpolationResult& r, const PartitionSequent& p,
                                    OracleBudget budget = {});

}  // namespace teamproof
