#include "teamproof/formula.hpp"

#include <algorithm>
#include <functional>

#include "teamproof/errors.hpp"

namespace teamproof {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::prop(std::string name) {
    auto n = std::make_shared<Node>();
    n->op = Op::Prop;
    n->hash = mix(1, std::hash<std::string>{}(name));
    n->name = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::bot() {
    static const Formula b = [] {
        auto n = std::make_shared<Node>();
        n->op = Op::Bot;
        n->hash = 2;
        return Formula(std::move(n));
    }();
    return b;
}

Formula Formula::neg(const Formula& child) {
    if (!child.is_classical()) throw NonClassicalNegation("negation of a formula containing ||");
    auto n = std::make_shared<Node>();
    n->op = Op::Neg;
    n->kids = {child};
    n->size = child.size() + 1;
    n->depth = child.depth() + 1;
    n->hash = mix(3, child.hash());
    return Formula(std::move(n));
}

Formula Formula::binary(Op op, const Formula& l, const Formula& r) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->kids = {l, r};
    n->gd_count = l.gd_count() + r.gd_count() + (op == Op::Gd ? 1 : 0);
    n->size = l.size() + r.size() + 1;
    n->depth = std::max(l.depth(), r.depth()) + 1;
    n->hash = mix(mix(static_cast<std::size_t>(op) * 7919, l.hash()), r.hash());
    return Formula(std::move(n));
}

Formula Formula::conj(const Formula& l, const Formula& r) { return binary(Op::And, l, r); }
Formula Formula::split(const Formula& l, const Formula& r) { return binary(Op::Or, l, r); }
Formula Formula::gd(const Formula& l, const Formula& r) { return binary(Op::Gd, l, r); }

const Formula& Formula::left() const { return node_->kids.at(0); }
const Formula& Formula::right() const { return node_->kids.at(1); }
const Formula& Formula::child(int i) const { return node_->kids.at(static_cast<std::size_t>(i)); }
int Formula::arity() const { return static_cast<int>(node_->kids.size()); }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.op() != b.op() || a.size() != b.size()) return false;
    if (a.op() == Op::Prop) return a.name() == b.name();
    for (int i = 0; i < a.arity(); ++i)
        if (!(a.child(i) == b.child(i))) return false;
    return true;
}

int Formula::compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
    if (a.op() == Op::Prop) return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
    for (int i = 0; i < a.arity(); ++i) {
        int c = compare(a.child(i), b.child(i));
        if (c != 0) return c;
    }
    return 0;
}

bool is_classical(const Formula& f) { return f.is_classical(); }

namespace {

void collect_props(const Formula& f, bool positive, std::set<std::string>* all, SignedProps* sp) {
    if (f.op() == Op::Prop) {
        if (all) all->insert(f.name());
        if (sp) (positive ? sp->positive : sp->negative).insert(f.name());
        return;
    }
    for (int i = 0; i < f.arity(); ++i)
        collect_props(f.child(i), f.op() == Op::Neg ? !positive : positive, all, sp);
}

void collect_gd(const Formula& f, OccurrencePath& cur, std::vector<OccurrencePath>& out) {
    if (f.arity() == 2) {
        cur.push_back(0);
        collect_gd(f.left(), cur, out);
        cur.pop_back();
        if (f.op() == Op::Gd) out.push_back(cur);
        cur.push_back(1);
        collect_gd(f.right(), cur, out);
        cur.pop_back();
    } else if (f.arity() == 1) {
        cur.push_back(0);
        collect_gd(f.child(0), cur, out);
        cur.pop_back();
    }
}

Formula rebuild(const Formula& host, int i, const Formula& kid) {
    if (host.op() == Op::Neg) return Formula::neg(kid);
    return i == 0 ? Formula::binary(host.op(), kid, host.right())
                  : Formula::binary(host.op(), host.left(), kid);
}

Formula substitute_from(const Formula& host, const OccurrencePath& path, std::size_t at,
                        const Formula& replacement) {
    if (at == path.size()) return replacement;
    int i = path[at];
    if (i < 0 || i >= host.arity()) throw InvalidPath("path step out of range");
    return rebuild(host, i, substitute_from(host.child(i), path, at + 1, replacement));
}

}  // namespace

std::set<std::string> props(const Formula& f) {
    std::set<std::string> out;
    collect_props(f, true, &out, nullptr);
    return out;
}

SignedProps signed_props(const Formula& f) {
    SignedProps sp;
    collect_props(f, true, nullptr, &sp);
    return sp;
}

bool is_valid_path(const Formula& host, const OccurrencePath& path) {
    const Formula* cur = &host;
    for (int i : path) {
        if (i < 0 || i >= cur->arity()) return false;
        cur = &cur->child(i);
    }
    return true;
}

const Formula& subformula_at(const Formula& host, const OccurrencePath& path) {
    const Formula* cur = &host;
    for (int i : path) {
        if (i < 0 || i >= cur->arity()) throw InvalidPath("path step out of range");
        cur = &cur->child(i);
    }
    return *cur;
}

Formula substitute_at(const Formula& host, const OccurrencePath& path, const Formula& replacement) {
    return substitute_from(host, path, 0, replacement);
}

std::vector<OccurrencePath> gd_paths(const Formula& f) {
    std::vector<OccurrencePath> out;
    OccurrencePath cur;
    collect_gd(f, cur, out);
    return out;
}

}  // namespace teamproof
