#include "teamproof/resolutions.hpp"

#include <algorithm>
#include <set>

#include "teamproof/errors.hpp"
#include "teamproof/syntax.hpp"

namespace teamproof {

namespace {

Formula resolve_with(const Formula& f, const std::vector<Side>& choice, std::size_t base,
                     OccurrencePath& path, std::vector<GdDecision>& out) {
    if (f.is_classical()) return f;
    const Formula& l = f.left();
    const Formula& r = f.right();
    if (f.op() == Op::Gd) {
        Side s = choice[base + l.gd_count()];
        out.push_back({path, s});
        path.push_back(side_index(s));
        Formula res = s == Side::L ? resolve_with(l, choice, base, path, out)
                                   : resolve_with(r, choice, base + l.gd_count() + 1, path, out);
        path.pop_back();
        return res;
    }
    path.push_back(0);
    Formula a = resolve_with(l, choice, base, path, out);
    path.back() = 1;
    Formula b = resolve_with(r, choice, base + l.gd_count(), path, out);
    path.pop_back();
    return Formula::binary(f.op(), a, b);
}

std::vector<Formula> sorted_key(const FormulaList& xs) {
    std::vector<Formula> k = xs;
    std::sort(k.begin(), k.end());
    return k;
}

bool has_prefix(const OccurrencePath& p, const OccurrencePath& prefix) {
    return p.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), p.begin());
}

// identity when the label is absent
LabelledFormula step_or_identity(const LabelledFormula& lf, Side side, int label) {
    const OccurrencePath* at = nullptr;
    for (const auto& [p, l] : lf.labels)
        if (l == label) at = &p;
    if (!at) return lf;
    OccurrencePath pi = *at;
    const Formula& gd = subformula_at(lf.formula, pi);
    LabelledFormula out{substitute_at(lf.formula, pi, gd.child(side_index(side))), {}};
    OccurrencePath kept = pi, dropped = pi;
    kept.push_back(side_index(side));
    dropped.push_back(1 - side_index(side));
    for (const auto& [p, l] : lf.labels) {
        if (l == label || has_prefix(p, dropped)) continue;
        if (has_prefix(p, kept)) {
            OccurrencePath q = pi;
            q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(kept.size()), p.end());
            out.labels[q] = l;
        } else {
            out.labels[p] = l;
        }
    }
    return out;
}

using LabelKey = std::pair<Formula, std::vector<std::pair<OccurrencePath, int>>>;

LabelKey key_of(const LabelledFormula& lf) {
    return {lf.formula, {lf.labels.begin(), lf.labels.end()}};
}

}  // namespace

std::vector<Resolution> resolution_witnesses(const Formula& f) {
    const std::size_t k = f.gd_count();
    if (k > 24) throw ResourceLimit("too many || occurrences to enumerate resolutions");
    std::vector<Resolution> out;
    std::set<Formula> seen;
    std::vector<Side> choice(k, Side::L);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << k); ++c) {
        for (std::size_t j = 0; j < k; ++j)
            choice[j] = ((c >> (k - 1 - j)) & 1U) ? Side::R : Side::L;
        OccurrencePath path;
        Resolution r{f, {}};
        r.result = resolve_with(f, choice, 0, path, r.decisions);
        if (seen.insert(r.result).second) out.push_back(std::move(r));
    }
    return out;
}

std::vector<Formula> resolutions(const Formula& f) {
    std::vector<Formula> out;
    for (auto& r : resolution_witnesses(f)) out.push_back(r.result);
    return out;
}

std::vector<FormulaList> resolution_choices(const FormulaList& xs) {
    std::vector<std::vector<Formula>> per;
    for (const auto& x : xs) per.push_back(resolutions(x));
    std::vector<FormulaList> out;
    std::set<std::vector<Formula>> seen;
    FormulaList cur(xs.size(), Formula::bot());
    std::vector<std::size_t> idx(xs.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < xs.size(); ++i) cur[i] = per[i][idx[i]];
        if (seen.insert(sorted_key(cur)).second) out.push_back(cur);
        std::size_t i = xs.size();
        while (i > 0) {
            --i;
            if (++idx[i] < per[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (xs.empty()) return out;
    }
}

std::vector<FormulaList> resolutions_multiset(const FormulaList& xs) {
    auto out = resolution_choices(xs);
    for (auto& m : out) m = canonical(m);
    return out;
}

namespace {

bool match(const Formula& f, const Formula& target, OccurrencePath& path, std::vector<GdDecision>& out) {
    if (f.is_classical()) return f == target;
    if (f.op() == Op::Gd) {
        for (Side s : {Side::L, Side::R}) {
            out.push_back({path, s});
            path.push_back(side_index(s));
            bool ok = match(f.child(side_index(s)), target, path, out);
            path.pop_back();
            if (ok) return true;
            out.pop_back();
        }
        return false;
    }
    if (target.op() != f.op()) return false;
    std::size_t mark = out.size();
    path.push_back(0);
    bool ok = match(f.left(), target.left(), path, out);
    path.back() = 1;
    ok = ok && match(f.right(), target.right(), path, out);
    path.pop_back();
    if (!ok) out.resize(mark);
    return ok;
}

}  // namespace

std::optional<std::vector<GdDecision>> find_resolution(const Formula& f, const Formula& target) {
    if (!target.is_classical()) return std::nullopt;
    OccurrencePath path;
    std::vector<GdDecision> out;
    if (match(f, target, path, out)) return out;
    return std::nullopt;
}

ResolutionChain resolution_chain(const Formula& f, const std::vector<GdDecision>& decisions) {
    ResolutionChain chain{{f}, {}};
    std::vector<std::size_t> done;  // indices of applied decisions
    for (std::size_t k = 0; k < decisions.size(); ++k) {
        const auto& d = decisions[k];
        // drop the step index of every already resolved ancestor
        std::vector<bool> skip(d.path.size(), false);
        for (auto j : done) {
            const auto& a = decisions[j].path;
            if (a.size() < d.path.size() && has_prefix(d.path, a)) skip[a.size()] = true;
        }
        OccurrencePath cur;
        for (std::size_t i = 0; i < d.path.size(); ++i)
            if (!skip[i]) cur.push_back(d.path[i]);
        const Formula& host = chain.formulas.back();
        const Formula& g = subformula_at(host, cur);
        if (g.op() != Op::Gd) throw InvalidPath("resolution decision does not address a || node");
        chain.formulas.push_back(substitute_at(host, cur, g.child(side_index(d.side))));
        chain.steps.push_back({cur, d.side});
        done.push_back(k);
    }
    return chain;
}

LabelledFormula gd_label(const Formula& f) {
    LabelledFormula lf{f, {}};
    auto paths = gd_paths(f);
    for (std::size_t i = 0; i < paths.size(); ++i) lf.labels[paths[i]] = static_cast<int>(i);
    return lf;
}

LabelledFormula apply_resolution_step(const LabelledFormula& lf, const ResolutionStep& step) {
    bool present = std::any_of(lf.labels.begin(), lf.labels.end(),
                               [&](const auto& e) { return e.second == step.label; });
    if (!present) throw LabelAbsent("label " + std::to_string(step.label) + " is not present");
    return step_or_identity(lf, step.side, step.label);
}

std::vector<Formula> partial_resolutions(const Formula& f, std::size_t n) {
    const std::size_t m = f.gd_count();
    if (n > m) throw DegreeOutOfRange("degree exceeds the number of || occurrences");
    std::vector<Formula> out;
    std::set<Formula> seen;
    std::set<std::pair<LabelKey, std::vector<bool>>> visited;
    std::vector<bool> used(m, false);
    auto dfs = [&](auto&& self, const LabelledFormula& cur, std::size_t depth) -> void {
        if (!visited.insert({key_of(cur), used}).second) return;
        if (depth == n) {
            if (seen.insert(cur.formula).second) out.push_back(cur.formula);
            return;
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (used[j]) continue;
            used[j] = true;
            for (Side s : {Side::L, Side::R}) self(self, step_or_identity(cur, s, static_cast<int>(j)), depth + 1);
            used[j] = false;
        }
    };
    dfs(dfs, gd_label(f), 0);
    return out;
}

std::vector<FormulaList> partial_resolutions_multiset(const FormulaList& xs, std::size_t n) {
    FormulaList ordered = canonical(xs);
    std::vector<std::pair<std::size_t, int>> slots;  // (target, label)
    std::vector<LabelledFormula> start;
    for (std::size_t k = 0; k < ordered.size(); ++k) {
        start.push_back(gd_label(ordered[k]));
        for (std::size_t j = 0; j < ordered[k].gd_count(); ++j) slots.emplace_back(k, static_cast<int>(j));
    }
    if (n > slots.size()) throw DegreeOutOfRange("degree exceeds the number of || occurrences");
    std::vector<FormulaList> out;
    std::set<std::vector<Formula>> seen;
    std::vector<bool> used(slots.size(), false);
    std::set<std::pair<std::vector<LabelKey>, std::vector<bool>>> visited;
    auto dfs = [&](auto&& self, std::vector<LabelledFormula>& cur, std::size_t depth) -> void {
        std::vector<LabelKey> key;
        for (auto& lf : cur) key.push_back(key_of(lf));
        if (!visited.insert({key, used}).second) return;
        if (depth == n) {
            FormulaList fl;
            for (auto& lf : cur) fl.push_back(lf.formula);
            if (seen.insert(sorted_key(fl)).second) out.push_back(canonical(fl));
            return;
        }
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            auto [k, label] = slots[i];
            for (Side s : {Side::L, Side::R}) {
                LabelledFormula saved = cur[k];
                cur[k] = step_or_identity(saved, s, label);
                self(self, cur, depth + 1);
                cur[k] = saved;
            }
            used[i] = false;
        }
    };
    dfs(dfs, start, 0);
    return out;
}

}  // namespace teamproof
