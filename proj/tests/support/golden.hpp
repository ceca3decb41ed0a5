#pragma once

#include "teamproof/derivation.hpp"
#include "teamproof/sequent.hpp"

namespace golden {

// x&(~x|(~q|(p||r))) => (p||r)|~q, built bottom-up as LAnd, ROr, RNeg, LGd,
// then RGd over two classical prover derivations
teamproof::Derivation normal_form_example();

// the two cut premises a|(p||q) => p||q, a and b, p||q => (b&p)||(b&q) joined by Cut
teamproof::Derivation cut_example();

// (p||q)|r, ~p => r|s, q||x with LGd at the root, then per branch RGd, ROr,
// LNeg and LOr over two At axioms
teamproof::Derivation interpolation_example();
teamproof::PartitionSequent interpolation_partition();

}  // namespace golden
