#include "teamproof/sequent.hpp"

#include <algorithm>
#include <numeric>

#include "teamproof/syntax.hpp"

namespace teamproof {

namespace {

std::vector<Formula> sorted(const FormulaList& xs) {
    std::vector<Formula> v = xs;
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

bool same_multiset(const FormulaList& a, const FormulaList& b) {
    if (a.size() != b.size()) return false;
    auto x = sorted(a), y = sorted(b);
    return std::equal(x.begin(), x.end(), y.begin());
}

std::optional<FormulaList> multiset_minus(const FormulaList& a, const FormulaList& b) {
    std::vector<bool> used(a.size(), false);
    for (const auto& f : b) {
        bool found = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!used[i] && a[i] == f) {
                used[i] = found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    FormulaList out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!used[i]) out.push_back(a[i]);
    return out;
}

FormulaList remove_at(const FormulaList& xs, std::size_t i) {
    FormulaList out = xs;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

FormulaList concat(const FormulaList& a, const FormulaList& b) {
    FormulaList out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::optional<std::size_t> index_of(const FormulaList& xs, const Formula& f) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] == f) return i;
    return std::nullopt;
}

std::size_t count_of(const FormulaList& xs, const Formula& f) {
    return static_cast<std::size_t>(std::count(xs.begin(), xs.end(), f));
}

bool all_classical(const FormulaList& xs) {
    return std::all_of(xs.begin(), xs.end(), [](const Formula& f) { return f.is_classical(); });
}

FormulaList canonical(const FormulaList& xs) {
    std::vector<std::pair<std::string, std::size_t>> keys;
    for (std::size_t i = 0; i < xs.size(); ++i) keys.emplace_back(render(xs[i]), i);
    std::sort(keys.begin(), keys.end());
    FormulaList out;
    for (auto& [_, i] : keys) out.push_back(xs[i]);
    return out;
}

bool operator==(const Sequent& a, const Sequent& b) {
    return same_multiset(a.antecedent, b.antecedent) && same_multiset(a.succedent, b.succedent);
}

std::set<std::string> props(const FormulaList& xs) {
    std::set<std::string> out;
    for (const auto& f : xs) {
        auto p = props(f);
        out.insert(p.begin(), p.end());
    }
    return out;
}

std::set<std::string> props(const Sequent& s) {
    auto out = props(s.antecedent);
    auto r = props(s.succedent);
    out.insert(r.begin(), r.end());
    return out;
}

}  // namespace teamproof
