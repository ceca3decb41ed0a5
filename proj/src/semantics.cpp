#include "teamproof/semantics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "teamproof/errors.hpp"

namespace teamproof {

Team::Team(std::vector<std::string> domain, std::vector<Valuation> members)
    : domain_(std::move(domain)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Team::contains(Valuation v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

bool Team::value(Valuation v, const std::string& var) const {
    auto it = std::find(domain_.begin(), domain_.end(), var);
    if (it == domain_.end()) throw DomainMismatch("variable " + var + " outside the team domain");
    return (v >> (it - domain_.begin())) & 1U;
}

Team Team::unite(const Team& other) const {
    if (other.domain_ != domain_) throw DomainMismatch("teams over different domains");
    auto m = members_;
    m.insert(m.end(), other.members_.begin(), other.members_.end());
    return Team(domain_, std::move(m));
}

Team Team::filter(const std::vector<Valuation>& keep) const {
    std::vector<Valuation> m;
    for (auto v : members_)
        if (std::find(keep.begin(), keep.end(), v) != keep.end()) m.push_back(v);
    return Team(domain_, std::move(m));
}

std::vector<std::string> domain_of(const Sequent& s) {
    auto p = props(s);
    return {p.begin(), p.end()};
}

namespace {

void check_domain(const std::vector<std::string>& domain, const Formula& f) {
    for (const auto& p : props(f))
        if (std::find(domain.begin(), domain.end(), p) == domain.end())
            throw DomainMismatch("variable " + p + " outside the team domain");
}

// Subteams are bitmasks over the positions of t's members.
class TeamEvaluator {
public:
    explicit TeamEvaluator(const Team& t) : team_(t) {
        if (t.size() > 63) throw ResourceLimit("team too large for the direct evaluator");
    }

    bool eval(const Formula& f, std::uint64_t mask) {
        auto key = std::make_pair(&f, mask);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool r = compute(f, mask);
        memo_[key] = r;
        return r;
    }

private:
    bool compute(const Formula& f, std::uint64_t mask) {
        const auto& ms = team_.members();
        switch (f.op()) {
            case Op::Prop:
                for (std::size_t i = 0; i < ms.size(); ++i)
                    if (((mask >> i) & 1U) && !team_.value(ms[i], f.name())) return false;
                return true;
            case Op::Bot: return mask == 0;
            case Op::Neg:
                for (std::size_t i = 0; i < ms.size(); ++i)
                    if (((mask >> i) & 1U) && eval(f.child(0), std::uint64_t{1} << i)) return false;
                return true;
            case Op::And: return eval(f.left(), mask) && eval(f.right(), mask);
            case Op::Gd: return eval(f.left(), mask) || eval(f.right(), mask);
            case Op::Or: {
                // s ranges over subteams of t, u over supersets of t\s inside t
                for (std::uint64_t s = mask;; s = (s - 1) & mask) {
                    if (eval(f.left(), s)) {
                        std::uint64_t rest = mask & ~s;
                        for (std::uint64_t w = s;; w = (w - 1) & s) {
                            if (eval(f.right(), rest | w)) return true;
                            if (w == 0) break;
                        }
                    }
                    if (s == 0) break;
                }
                return false;
            }
        }
        return false;
    }

    const Team& team_;
    std::map<std::pair<const Formula*, std::uint64_t>, bool> memo_;
};

std::uint64_t full_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

bool satisfies(const Team& t, const Formula& f) {
    check_domain(t.domain(), f);
    TeamEvaluator ev(t);
    return ev.eval(f, full_mask(t.size()));
}

bool satisfies_all(const Team& t, const FormulaList& xs) {
    for (const auto& f : xs)
        if (!satisfies(t, f)) return false;
    return true;
}

bool satisfies_split(const Team& t, const FormulaList& xs) {
    if (xs.empty()) return t.empty();
    Formula big = xs.back();
    for (std::size_t i = xs.size() - 1; i-- > 0;) big = Formula::split(xs[i], big);
    return satisfies(t, big);
}

bool is_countermodel(const Team& t, const Sequent& s) {
    return satisfies_all(t, s.antecedent) && !satisfies_split(t, s.succedent);
}

TeamLattice::TeamLattice(std::vector<std::string> domain, OracleBudget budget)
    : domain_(std::move(domain)) {
    std::size_t cap = std::min<std::size_t>(budget.max_variables, 4);
    if (domain_.size() > cap)
        throw ResourceLimit("oracle budget exceeded: " + std::to_string(domain_.size()) +
                            " variables, cap " + std::to_string(cap));
    n_ = std::size_t{1} << domain_.size();
}

TeamLattice::TeamSet TeamLattice::full_set() const {
    TeamSet s = empty_set();
    for (std::size_t t = 0; t < teams(); ++t) set(s, t);
    return s;
}

Team TeamLattice::team_at(std::size_t t) const {
    std::vector<Valuation> m;
    for (std::size_t v = 0; v < n_; ++v)
        if ((t >> v) & 1U) m.push_back(v);
    return Team(domain_, std::move(m));
}

TeamLattice::TeamSet TeamLattice::union_product(const TeamSet& a, const TeamSet& b) const {
    // counts pairs (s,u) with s ∪ u = t via subset sums and Moebius inversion
    const std::size_t T = teams();
    std::vector<std::int64_t> fa(T), fb(T);
    for (std::size_t t = 0; t < T; ++t) {
        fa[t] = test(a, t);
        fb[t] = test(b, t);
    }
    for (std::size_t bit = 1; bit < T; bit <<= 1)
        for (std::size_t t = 0; t < T; ++t)
            if (t & bit) {
                fa[t] += fa[t ^ bit];
                fb[t] += fb[t ^ bit];
            }
    for (std::size_t t = 0; t < T; ++t) fa[t] *= fb[t];
    for (std::size_t bit = 1; bit < T; bit <<= 1)
        for (std::size_t t = 0; t < T; ++t)
            if (t & bit) fa[t] -= fa[t ^ bit];
    TeamSet out = empty_set();
    for (std::size_t t = 0; t < T; ++t)
        if (fa[t] > 0) set(out, t);
    return out;
}

TeamLattice::TeamSet TeamLattice::sat(const Formula& f) const {
    check_domain(domain_, f);
    TeamSet out = empty_set();
    switch (f.op()) {
        case Op::Prop: {
            std::size_t idx = std::find(domain_.begin(), domain_.end(), f.name()) - domain_.begin();
            std::size_t truth = 0;
            for (std::size_t v = 0; v < n_; ++v)
                if ((v >> idx) & 1U) truth |= std::size_t{1} << v;
            for (std::size_t t = 0; t < teams(); ++t)
                if ((t & ~truth) == 0) set(out, t);
            return out;
        }
        case Op::Bot: set(out, 0); return out;
        case Op::Neg: {
            TeamSet c = sat(f.child(0));
            std::size_t allowed = 0;
            for (std::size_t v = 0; v < n_; ++v)
                if (!test(c, std::size_t{1} << v)) allowed |= std::size_t{1} << v;
            for (std::size_t t = 0; t < teams(); ++t)
                if ((t & ~allowed) == 0) set(out, t);
            return out;
        }
        case Op::And:
        case Op::Gd: {
            TeamSet l = sat(f.left()), r = sat(f.right());
            for (std::size_t i = 0; i < l.size(); ++i) out[i] = f.op() == Op::And ? (l[i] & r[i]) : (l[i] | r[i]);
            return out;
        }
        case Op::Or: return union_product(sat(f.left()), sat(f.right()));
    }
    return out;
}

TeamLattice::TeamSet TeamLattice::sat_all(const FormulaList& xs) const {
    TeamSet out = full_set();
    for (const auto& f : xs) {
        TeamSet s = sat(f);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] &= s[i];
    }
    return out;
}

TeamLattice::TeamSet TeamLattice::sat_split(const FormulaList& xs) const {
    TeamSet out = empty_set();
    set(out, 0);  // ⋁∅ = ⊥
    if (xs.empty()) return out;
    out = sat(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) out = union_product(out, sat(xs[i]));
    return out;
}

std::optional<Team> find_countermodel_bruteforce(const Sequent& s, OracleBudget budget) {
    TeamLattice lat(domain_of(s), budget);
    auto ant = lat.sat_all(s.antecedent);
    auto suc = lat.sat_split(s.succedent);
    const std::size_t n = lat.valuations();
    // combinations of valuation indices, by size then lexicographically
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::size_t t = 0;
            for (auto i : idx) t |= std::size_t{1} << i;
            if (TeamLattice::test(ant, t) && !TeamLattice::test(suc, t)) return lat.team_at(t);
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

bool sequent_valid(const Sequent& s, OracleBudget budget) {
    TeamLattice lat(domain_of(s), budget);
    auto ant = lat.sat_all(s.antecedent);
    auto suc = lat.sat_split(s.succedent);
    for (std::size_t i = 0; i < ant.size(); ++i)
        if (ant[i] & ~suc[i]) return false;
    return true;
}

ClosureReport closure_properties(const Formula& f, std::vector<std::string> domain, OracleBudget budget) {
    if (domain.empty()) {
        auto p = props(f);
        domain.assign(p.begin(), p.end());
    }
    TeamLattice lat(domain, budget);
    auto sat = lat.sat(f);
    const std::size_t T = lat.teams();
    ClosureReport r;
    r.empty_team = TeamLattice::test(sat, 0);
    r.downward_closed = true;
    r.flat = true;
    for (std::size_t t = 0; t < T; ++t) {
        bool in = TeamLattice::test(sat, t);
        if (in) {
            for (std::size_t v = 0; v < lat.valuations(); ++v)
                if (((t >> v) & 1U) && !TeamLattice::test(sat, t & ~(std::size_t{1} << v)))
                    r.downward_closed = false;
        }
        bool pointwise = true;
        for (std::size_t v = 0; v < lat.valuations(); ++v)
            if (((t >> v) & 1U) && !TeamLattice::test(sat, std::size_t{1} << v)) pointwise = false;
        if (pointwise != in) r.flat = false;
    }
    auto unions = lat.union_product(sat, sat);
    r.union_closed = true;
    for (std::size_t i = 0; i < sat.size(); ++i)
        if (unions[i] & ~sat[i]) r.union_closed = false;
    return r;
}

}  // namespace teamproof
