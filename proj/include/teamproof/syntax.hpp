#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "teamproof/formula.hpp"
#include "teamproof/sequent.hpp"

namespace teamproof {

// Grammar: atoms [a-z][a-zA-Z0-9_]*, `bot`, `~`, `&`, `|`, `||`, parentheses.
// Precedence ~ > & > | > ||, binary operators associate to the right.
Formula parse_formula(std::string_view text);

// `Γ => Δ`, or the partition form `Γ1 ; Γ2 => Δ1 ; Δ2`.
std::variant<Sequent, PartitionSequent> parse_sequent(std::string_view text);
Sequent parse_plain_sequent(std::string_view text);
PartitionSequent parse_partition_sequent(std::string_view text);

std::string render(const Formula& f);
std::string render(const FormulaList& xs);
std::string render(const Sequent& s);
std::string render(const PartitionSequent& s);

}  // namespace teamproof
