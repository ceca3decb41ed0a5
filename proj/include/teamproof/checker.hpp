#pragma once

#include <optional>
#include <string>
#include <vector>

#include "teamproof/derivation.hpp"

namespace teamproof {

enum class Calculus { GT, GTPrime };

struct Violation {
    enum class Kind { RuleViolation, ArityMismatch } kind = Kind::RuleViolation;
    std::string rule;
    std::string reason;
    std::vector<std::size_t> address;  // premise indices from the root
};

struct CheckResult {
    std::optional<Violation> violation;
    bool ok() const { return !violation; }
};

CheckResult check_inference(const Sequent& conclusion, const RuleApp& rule,
                            const std::vector<Sequent>& premises, Calculus calculus = Calculus::GT);
CheckResult check_derivation(const Derivation& d, Calculus calculus = Calculus::GT);

std::string describe(const Violation& v);

}  // namespace teamproof
