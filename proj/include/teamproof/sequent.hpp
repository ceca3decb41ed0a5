#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "teamproof/formula.hpp"

namespace teamproof {

// Multiset of formulas. Stored order is kept (rule metadata indexes into it),
// but equality is order-insensitive.
using FormulaList = std::vector<Formula>;

bool same_multiset(const FormulaList& a, const FormulaList& b);
// a minus b, or nullopt when b is not a sub-multiset of a
std::optional<FormulaList> multiset_minus(const FormulaList& a, const FormulaList& b);
FormulaList remove_at(const FormulaList& xs, std::size_t i);
FormulaList concat(const FormulaList& a, const FormulaList& b);
std::optional<std::size_t> index_of(const FormulaList& xs, const Formula& f);
std::size_t count_of(const FormulaList& xs, const Formula& f);
bool all_classical(const FormulaList& xs);
// sorted by rendered string, ties by insertion index
FormulaList canonical(const FormulaList& xs);

struct Sequent {
    FormulaList antecedent;
    FormulaList succedent;

    bool is_classical() const { return all_classical(antecedent) && all_classical(succedent); }
};

bool operator==(const Sequent& a, const Sequent& b);
inline bool operator!=(const Sequent& a, const Sequent& b) { return !(a == b); }

std::set<std::string> props(const Sequent& s);
std::set<std::string> props(const FormulaList& xs);

struct PartitionSequent {
    FormulaList gamma1, gamma2;
    FormulaList delta1, delta2;

    Sequent flatten() const { return {concat(gamma1, gamma2), concat(delta1, delta2)}; }
};

}  // namespace teamproof
