#include "teamproof/syntax.hpp"

#include <cctype>
#include <vector>

#include "teamproof/errors.hpp"

namespace teamproof {

namespace {

enum class Tok { Ident, Bot, Not, And, Or, Gd, LParen, RParen, Comma, Semi, Arrow, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (c >= 'a' && c <= 'z') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            std::string word(s.substr(start, i - start));
            out.push_back({word == "bot" ? Tok::Bot : Tok::Ident, word, start});
            continue;
        }
        switch (c) {
            case '~': out.push_back({Tok::Not, "~", start}); ++i; break;
            case '&': out.push_back({Tok::And, "&", start}); ++i; break;
            case '(': out.push_back({Tok::LParen, "(", start}); ++i; break;
            case ')': out.push_back({Tok::RParen, ")", start}); ++i; break;
            case ',': out.push_back({Tok::Comma, ",", start}); ++i; break;
            case ';': out.push_back({Tok::Semi, ";", start}); ++i; break;
            case '|':
                if (i + 1 < s.size() && s[i + 1] == '|') {
                    out.push_back({Tok::Gd, "||", start});
                    i += 2;
                } else {
                    out.push_back({Tok::Or, "|", start});
                    ++i;
                }
                break;
            case '=':
                if (i + 1 < s.size() && s[i + 1] == '>') {
                    out.push_back({Tok::Arrow, "=>", start});
                    i += 2;
                    break;
                }
                throw SyntaxError(start, "'=>'");
            default:
                throw SyntaxError(start, "a formula token");
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view s) : toks_(tokenize(s)) {}

    Formula formula() { return gd(); }

    FormulaList list() {
        FormulaList out;
        if (!starts_formula()) return out;
        out.push_back(formula());
        while (peek().kind == Tok::Comma) {
            ++at_;
            out.push_back(formula());
        }
        return out;
    }

    const Token& peek() const { return toks_[at_]; }
    void expect(Tok k, const char* what) {
        if (peek().kind != k) throw SyntaxError(peek().pos, what);
        ++at_;
    }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++at_;
        return true;
    }

private:
    bool starts_formula() const {
        auto k = peek().kind;
        return k == Tok::Ident || k == Tok::Bot || k == Tok::Not || k == Tok::LParen;
    }

    Formula gd() {
        Formula l = split();
        if (accept(Tok::Gd)) return Formula::gd(l, gd());
        return l;
    }
    Formula split() {
        Formula l = conj();
        if (accept(Tok::Or)) return Formula::split(l, split());
        return l;
    }
    Formula conj() {
        Formula l = unary();
        if (accept(Tok::And)) return Formula::conj(l, conj());
        return l;
    }
    Formula unary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Not: {
                std::size_t pos = t.pos;
                ++at_;
                Formula c = unary();
                if (!c.is_classical())
                    throw NonClassicalNegation("'~' at position " + std::to_string(pos) +
                                               " scopes over '||'");
                return Formula::neg(c);
            }
            case Tok::Ident: ++at_; return Formula::prop(t.text);
            case Tok::Bot: ++at_; return Formula::bot();
            case Tok::LParen: {
                ++at_;
                Formula f = gd();
                expect(Tok::RParen, "')'");
                return f;
            }
            default: throw SyntaxError(t.pos, "atom, 'bot', '~' or '('");
        }
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

int level(const Formula& f) {
    switch (f.op()) {
        case Op::Gd: return 1;
        case Op::Or: return 2;
        case Op::And: return 3;
        default: return 4;
    }
}

void render_to(const Formula& f, std::string& out) {
    auto wrapped = [&out](const Formula& g, bool paren) {
        if (paren) out += '(';
        render_to(g, out);
        if (paren) out += ')';
    };
    switch (f.op()) {
        case Op::Prop: out += f.name(); return;
        case Op::Bot: out += "bot"; return;
        case Op::Neg:
            out += '~';
            wrapped(f.child(0), level(f.child(0)) < 4);
            return;
        default: break;
    }
    int lv = level(f);
    wrapped(f.left(), level(f.left()) <= lv);
    out += f.op() == Op::Gd ? " || " : f.op() == Op::Or ? " | " : " & ";
    wrapped(f.right(), level(f.right()) < lv);
}

}  // namespace

Formula parse_formula(std::string_view text) {
    Parser p(text);
    Formula f = p.formula();
    p.expect(Tok::End, "end of input");
    return f;
}

std::variant<Sequent, PartitionSequent> parse_sequent(std::string_view text) {
    Parser p(text);
    FormulaList a1 = p.list(), a2;
    bool left_split = p.accept(Tok::Semi);
    if (left_split) a2 = p.list();
    p.expect(Tok::Arrow, left_split ? "'=>'" : "',', ';' or '=>'");
    FormulaList s1 = p.list(), s2;
    bool right_split = false;
    if (left_split) {
        p.expect(Tok::Semi, "';' (partition sequents split both sides)");
        right_split = true;
        s2 = p.list();
    }
    p.expect(Tok::End, right_split ? "end of input" : "',' or end of input");
    if (left_split) return PartitionSequent{a1, a2, s1, s2};
    return Sequent{a1, s1};
}

Sequent parse_plain_sequent(std::string_view text) {
    auto v = parse_sequent(text);
    if (auto* s = std::get_if<Sequent>(&v)) return *s;
    throw SyntaxError(0, "a plain sequent without ';'");
}

PartitionSequent parse_partition_sequent(std::string_view text) {
    auto v = parse_sequent(text);
    if (auto* s = std::get_if<PartitionSequent>(&v)) return *s;
    throw SyntaxError(0, "a partition sequent 'G1 ; G2 => D1 ; D2'");
}

std::string render(const Formula& f) {
    std::string out;
    render_to(f, out);
    return out;
}

std::string render(const FormulaList& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += render(xs[i]);
    }
    return out;
}

std::string render(const Sequent& s) {
    std::string a = render(s.antecedent), d = render(s.succedent);
    return (a.empty() ? "" : a + " ") + "=>" + (d.empty() ? "" : " " + d);
}

std::string render(const PartitionSequent& s) {
    return render(s.gamma1) + " ; " + render(s.gamma2) + " => " + render(s.delta1) + " ; " +
           render(s.delta2);
}

}  // namespace teamproof
