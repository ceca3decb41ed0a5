#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "teamproof/formula.hpp"
#include "teamproof/sequent.hpp"

namespace teamproof {

enum class Side : std::uint8_t { L, R };

inline int side_index(Side s) { return s == Side::L ? 0 : 1; }
inline Side other(Side s) { return s == Side::L ? Side::R : Side::L; }

// One resolved Gd occurrence; the path is into the unresolved formula.
struct GdDecision {
    OccurrencePath path;
    Side side;
};

struct Resolution {
    Formula result;
    std::vector<GdDecision> decisions;  // outermost first
};

// Enumerated by choice vectors over the labels, label 0 most significant,
// left disjunct before right; duplicates dropped.
std::vector<Resolution> resolution_witnesses(const Formula& f);
std::vector<Formula> resolutions(const Formula& f);

// Position-aligned resolutions of a list, distinct as multisets.
std::vector<FormulaList> resolution_choices(const FormulaList& xs);
// Same set, each member in canonical order.
std::vector<FormulaList> resolutions_multiset(const FormulaList& xs);

// Decisions leading from f to the resolution target, if target ∈ R(f).
std::optional<std::vector<GdDecision>> find_resolution(const Formula& f, const Formula& target);
// Formulas f = f_0, f_1, ..., f_m = target with f_{k+1} = f_k[side_k at path_k];
// the returned paths address the current formula f_k.
struct ResolutionChain {
    std::vector<Formula> formulas;
    std::vector<GdDecision> steps;
};
ResolutionChain resolution_chain(const Formula& f, const std::vector<GdDecision>& decisions);

struct LabelledFormula {
    Formula formula;
    std::map<OccurrencePath, int> labels;
};

// Labels 0..|f|-1 assigned left to right.
LabelledFormula gd_label(const Formula& f);

struct ResolutionStep {
    Side side;
    int label;
    std::size_t target = 0;  // formula position for multisets (canonical order)
};

// throws LabelAbsent when the label is no longer present
LabelledFormula apply_resolution_step(const LabelledFormula& lf, const ResolutionStep& step);

// PR_n(f); a step naming an already discarded label leaves the formula unchanged.
std::vector<Formula> partial_resolutions(const Formula& f, std::size_t n);
std::vector<FormulaList> partial_resolutions_multiset(const FormulaList& xs, std::size_t n);

}  // namespace teamproof
