#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teamproof/formula.hpp"
#include "teamproof/sequent.hpp"

namespace teamproof {

// Bit i holds the value of domain[i].
using Valuation = std::uint64_t;

class Team {
public:
    Team() = default;
    Team(std::vector<std::string> domain, std::vector<Valuation> members);

    const std::vector<std::string>& domain() const { return domain_; }
    const std::vector<Valuation>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Valuation v) const;
    bool value(Valuation v, const std::string& var) const;

    Team unite(const Team& other) const;
    Team filter(const std::vector<Valuation>& keep) const;

    friend bool operator==(const Team& a, const Team& b) {
        return a.domain_ == b.domain_ && a.members_ == b.members_;
    }

private:
    std::vector<std::string> domain_;
    std::vector<Valuation> members_;  // sorted, unique
};

std::vector<std::string> domain_of(const Sequent& s);

// Direct reading of the team-semantic clauses on a single team.
bool satisfies(const Team& t, const Formula& f);
bool satisfies_all(const Team& t, const FormulaList& xs);
// t |= ⋁Δ with commas read as split disjunction
bool satisfies_split(const Team& t, const FormulaList& xs);
bool is_countermodel(const Team& t, const Sequent& s);

struct OracleBudget {
    std::size_t max_variables = 4;
};

// Evaluates formulas on every team over a small domain at once.
class TeamLattice {
public:
    using TeamSet = std::vector<std::uint64_t>;  // bit t set iff team t satisfies

    explicit TeamLattice(std::vector<std::string> domain, OracleBudget budget = {});

    const std::vector<std::string>& domain() const { return domain_; }
    std::size_t valuations() const { return n_; }
    std::size_t teams() const { return std::size_t{1} << n_; }

    TeamSet sat(const Formula& f) const;
    TeamSet sat_all(const FormulaList& xs) const;
    TeamSet sat_split(const FormulaList& xs) const;

    TeamSet empty_set() const { return TeamSet((teams() + 63) / 64, 0); }
    TeamSet full_set() const;
    static bool test(const TeamSet& s, std::size_t t) { return (s[t >> 6] >> (t & 63)) & 1U; }
    static void set(TeamSet& s, std::size_t t) { s[t >> 6] |= std::uint64_t{1} << (t & 63); }
    TeamSet union_product(const TeamSet& a, const TeamSet& b) const;
    Team team_at(std::size_t t) const;

private:
    std::vector<std::string> domain_;
    std::size_t n_;  // number of valuations
};

bool sequent_valid(const Sequent& s, OracleBudget budget = {});
// first countermodel in order of size, then lexicographic membership
std::optional<Team> find_countermodel_bruteforce(const Sequent& s, OracleBudget budget = {});

struct ClosureReport {
    bool empty_team = false;
    bool downward_closed = false;
    bool union_closed = false;
    bool flat = false;
};

ClosureReport closure_properties(const Formula& f, std::vector<std::string> domain = {},
                                 OracleBudget budget = {});

}  // namespace teamproof
