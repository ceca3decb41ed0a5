#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace teamproof {

enum class Op : std::uint8_t { Prop, Bot, Neg, And, Or, Gd };

// Child-index address of a subformula occurrence (0 = left or only child).
using OccurrencePath = std::vector<int>;

class Formula {
public:
    static Formula prop(std::string name);
    static Formula bot();
    static Formula neg(const Formula& child);  // throws NonClassicalNegation
    static Formula conj(const Formula& l, const Formula& r);
    static Formula split(const Formula& l, const Formula& r);
    static Formula gd(const Formula& l, const Formula& r);
    static Formula binary(Op op, const Formula& l, const Formula& r);

    Op op() const;
    const std::string& name() const;
    const Formula& left() const;
    const Formula& right() const;
    const Formula& child(int i) const;
    int arity() const;

    bool is_classical() const;
    std::size_t gd_count() const;
    // connectives plus atoms (and bot); parentheses are not symbols
    std::size_t size() const;
    std::size_t depth() const;
    std::size_t hash() const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
    // structural total order, used for map keys
    friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }
    static int compare(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    Op op;
    std::string name;
    std::vector<Formula> kids;
    std::size_t gd_count = 0;
    std::size_t size = 1;
    std::size_t depth = 0;
    std::size_t hash = 0;
};

inline Op Formula::op() const { return node_->op; }
inline const std::string& Formula::name() const { return node_->name; }
inline bool Formula::is_classical() const { return node_->gd_count == 0; }
inline std::size_t Formula::gd_count() const { return node_->gd_count; }
inline std::size_t Formula::size() const { return node_->size; }
inline std::size_t Formula::depth() const { return node_->depth; }
inline std::size_t Formula::hash() const { return node_->hash; }

struct SignedProps {
    std::set<std::string> positive;
    std::set<std::string> negative;
};

bool is_classical(const Formula& f);
std::set<std::string> props(const Formula& f);
SignedProps signed_props(const Formula& f);

const Formula& subformula_at(const Formula& host, const OccurrencePath& path);
Formula substitute_at(const Formula& host, const OccurrencePath& path, const Formula& replacement);
bool is_valid_path(const Formula& host, const OccurrencePath& path);

// Gd occurrences in left-to-right (in-order) position; index = the ⋁-label.
std::vector<OccurrencePath> gd_paths(const Formula& f);

}  // namespace teamproof

template <>
struct std::hash<teamproof::Formula> {
    std::size_t operator()(const teamproof::Formula& f) const noexcept { return f.hash(); }
};
