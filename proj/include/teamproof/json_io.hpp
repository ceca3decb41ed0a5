#pragma once

#include <json.hpp>

#include "teamproof/derivation.hpp"
#include "teamproof/interpolation.hpp"
#include "teamproof/normal_form.hpp"
#include "teamproof/semantics.hpp"

namespace teamproof {

using Json = nlohmann::json;

// Formulas: {"op":"prop","name":"p"}, {"op":"bot"}, {"op":"neg","arg":…},
// {"op":"and"|"or"|"gd","l":…,"r":…}. Readers also accept surface syntax strings.
Json formula_to_json(const Formula& f);
Formula formula_from_json(const Json& j);

Json formulas_to_json(const FormulaList& xs);
FormulaList formulas_from_json(const Json& j);

// {"antecedent":[…],"succedent":[…]}; readers also accept a sequent string.
Json sequent_to_json(const Sequent& s);
Sequent sequent_from_json(const Json& j);

Json partition_to_json(const PartitionSequent& p);

// {"vars":["p","q"],"team":[[1,0],[0,1]]}
Json team_to_json(const Team& t);
Team team_from_json(const Json& j);

// {"rule":…,"conclusion":…,"meta":{…},"premises":[…]}
Json derivation_to_json(const Derivation& d);
Derivation derivation_from_json(const Json& j);

Json normal_form_to_json(const NormalForm& nf);
Json interpolation_to_json(const InterpolationResult& r, bool with_derivations);

}  // namespace teamproof
