#include "scr/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace scr {

std::string sig_name(Sig s) {
    switch (s) {
        case Sig::SI: return "si";
        case Sig::MD: return "md";
        case Sig::BSI: return "bsi";
        case Sig::TEN: return "ten";
        case Sig::MSI: return "msi";
    }
    return "?";
}

Sig parse_sig(const std::string& s) {
    std::string t;
    for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "si") return Sig::SI;
    if (t == "md") return Sig::MD;
    if (t == "bsi") return Sig::BSI;
    if (t == "ten") return Sig::TEN;
    if (t == "msi") return Sig::MSI;
    throw Error("unknown signature '" + s + "'");
}

bool licensed(Sig s, Op op) {
    switch (op) {
        case Op::Atom:
        case Op::Bot:
        case Op::Top:
        case Op::And:
        case Op::Or: return true;
        case Op::Imp: return s == Sig::SI || s == Sig::BSI || s == Sig::MSI;
        case Op::Coimp: return s == Sig::BSI;
        case Op::Neg: return s == Sig::MD || s == Sig::TEN;
        case Op::Box: return s == Sig::MD;
        case Op::BoxF:
        case Op::DiaP: return s == Sig::TEN;
        case Op::BoxDot: return s == Sig::MSI;
    }
    return false;
}

int arity(Op op) {
    switch (op) {
        case Op::Atom:
        case Op::Bot:
        case Op::Top: return 0;
        case Op::Neg:
        case Op::Box:
        case Op::BoxF:
        case Op::DiaP:
        case Op::BoxDot: return 1;
        default: return 2;
    }
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : Error("position " + std::to_string(pos) + ": " + msg), position(pos) {}

namespace {

const char* op_symbol(Op op) {
    switch (op) {
        case Op::And: return "&";
        case Op::Or: return "|";
        case Op::Imp: return "->";
        case Op::Coimp: return "-<";
        case Op::Neg: return "~";
        case Op::Box: return "[]";
        case Op::BoxF: return "[F]";
        case Op::DiaP: return "<P>";
        case Op::BoxDot: return "[x]";
        default: return "?";
    }
}

Formula make_node(Op op, Sig s, int atom, Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->sig = s;
    n->atom = atom;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

}  // namespace

Formula mk_atom(Sig s, int index) {
    if (index < 0) throw Error("negative atom index");
    return make_node(Op::Atom, s, index, nullptr, nullptr);
}
Formula mk_bot(Sig s) { return make_node(Op::Bot, s, -1, nullptr, nullptr); }
Formula mk_top(Sig s) { return make_node(Op::Top, s, -1, nullptr, nullptr); }

Formula mk_const(Sig s, Op op) {
    if (op == Op::Bot) return mk_bot(s);
    if (op == Op::Top) return mk_top(s);
    throw Error("not a constant");
}

Formula mk(Op op, Formula a, Formula b) {
    if (!a) throw Error("missing operand");
    Sig s = a->sig;
    if (!licensed(s, op))
        throw Error(std::string("connective '") + op_symbol(op) + "' not available in signature " +
                    sig_name(s));
    if (arity(op) == 2) {
        if (!b) throw Error("missing operand");
        if (b->sig != s) throw Error("signature mismatch between operands");
        return make_node(op, s, -1, std::move(a), std::move(b));
    }
    if (arity(op) != 1) throw Error("mk expects a connective");
    return make_node(op, s, -1, std::move(a), nullptr);
}

Formula mk_implies(Sig s, Formula a, Formula b) {
    if (licensed(s, Op::Imp)) return mk(Op::Imp, a, b);
    return mk(Op::Or, mk(Op::Neg, a), b);
}

Formula mk_iff(Sig s, Formula a, Formula b) {
    return mk(Op::And, mk_implies(s, a, b), mk_implies(s, b, a));
}

Formula mk_boxplus(Formula a) { return mk(Op::And, mk(Op::Box, a), a); }

int compare(const Formula& x, const Formula& y) {
    if (x.get() == y.get()) return 0;
    if (x->op != y->op) return static_cast<int>(x->op) < static_cast<int>(y->op) ? -1 : 1;
    if (x->sig != y->sig) return static_cast<int>(x->sig) < static_cast<int>(y->sig) ? -1 : 1;
    if (x->op == Op::Atom) return x->atom == y->atom ? 0 : (x->atom < y->atom ? -1 : 1);
    int ar = arity(x->op);
    if (ar >= 1) {
        int c = compare(x->a, y->a);
        if (c != 0) return c;
    }
    if (ar == 2) return compare(x->b, y->b);
    return 0;
}

bool equal(const Formula& x, const Formula& y) { return compare(x, y) == 0; }

std::size_t formula_size(const Formula& f) {
    std::size_t n = 1;
    if (f->a) n += formula_size(f->a);
    if (f->b) n += formula_size(f->b);
    return n;
}

void collect_atoms(const Formula& f, std::set<int>& out) {
    if (f->op == Op::Atom) out.insert(f->atom);
    if (f->a) collect_atoms(f->a, out);
    if (f->b) collect_atoms(f->b, out);
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok {
    Atom, True, False, Tilde, Box, Dia, BoxF, DiaF, BoxP, DiaP, BoxDot,
    And, Or, Imp, Coimp, Iff, LParen, RParen, Slash, Comma, End
};

struct Token {
    Tok kind;
    std::size_t pos;
    int atom = -1;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts = [&](const char* lit) { return s.compare(i, std::char_traits<char>::length(lit), lit) == 0; };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (c == 'p' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            ++i;
            long v = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + (s[i] - '0');
                if (v > 1000000) throw ParseError("atom index too large", start);
                ++i;
            }
            out.push_back({Tok::Atom, start, static_cast<int>(v)});
            continue;
        }
        struct Lit { const char* text; Tok kind; };
        static const Lit lits[] = {
            {"true", Tok::True}, {"false", Tok::False}, {"<->", Tok::Iff}, {"->", Tok::Imp},
            {"-<", Tok::Coimp}, {"[]", Tok::Box}, {"<>", Tok::Dia}, {"[F]", Tok::BoxF},
            {"<F>", Tok::DiaF}, {"[P]", Tok::BoxP}, {"<P>", Tok::DiaP}, {"[x]", Tok::BoxDot},
            {"~", Tok::Tilde}, {"&", Tok::And}, {"|", Tok::Or}, {"(", Tok::LParen},
            {")", Tok::RParen}, {"/", Tok::Slash}, {",", Tok::Comma},
        };
        bool matched = false;
        for (const auto& l : lits) {
            if (starts(l.text)) {
                std::size_t len = std::char_traits<char>::length(l.text);
                if ((l.kind == Tok::True || l.kind == Tok::False) && i + len < s.size() &&
                    std::isalnum(static_cast<unsigned char>(s[i + len])))
                    continue;
                out.push_back({l.kind, start});
                i += len;
                matched = true;
                break;
            }
        }
        if (!matched) throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({Tok::End, s.size()});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> toks, Sig sig) : toks_(std::move(toks)), sig_(sig) {}

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }
    bool at(Tok k) const { return peek().kind == k; }

    Formula formula() { return iff(); }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Sig sig_;

    void require(Op op, const Token& t, const char* sym) {
        if (!licensed(sig_, op))
            throw ParseError(std::string("connective '") + sym + "' not available in signature " +
                                 sig_name(sig_),
                             t.pos);
    }

    Formula iff() {
        Formula lhs = imp();
        while (at(Tok::Iff)) {
            next();
            Formula rhs = imp();
            lhs = mk_iff(sig_, lhs, rhs);
        }
        return lhs;
    }

    Formula imp() {
        Formula lhs = coimp();
        if (at(Tok::Imp)) {
            next();
            Formula rhs = imp();
            return mk_implies(sig_, lhs, rhs);
        }
        return lhs;
    }

    Formula coimp() {
        Formula lhs = disj();
        while (at(Tok::Coimp)) {
            Token t = next();
            require(Op::Coimp, t, "-<");
            lhs = mk(Op::Coimp, lhs, disj());
        }
        return lhs;
    }

    Formula disj() {
        Formula lhs = conj();
        while (at(Tok::Or)) {
            next();
            lhs = mk(Op::Or, lhs, conj());
        }
        return lhs;
    }

    Formula conj() {
        Formula lhs = unary();
        while (at(Tok::And)) {
            next();
            lhs = mk(Op::And, lhs, unary());
        }
        return lhs;
    }

    Formula unary() {
        Token t = next();
        switch (t.kind) {
            case Tok::Atom: return mk_atom(sig_, t.atom);
            case Tok::True: return mk_top(sig_);
            case Tok::False: return mk_bot(sig_);
            case Tok::Tilde: require(Op::Neg, t, "~"); return mk(Op::Neg, unary());
            case Tok::Box: require(Op::Box, t, "[]"); return mk(Op::Box, unary());
            case Tok::Dia:
                require(Op::Box, t, "<>");
                return mk(Op::Neg, mk(Op::Box, mk(Op::Neg, unary())));
            case Tok::BoxF: require(Op::BoxF, t, "[F]"); return mk(Op::BoxF, unary());
            case Tok::DiaF:
                require(Op::BoxF, t, "<F>");
                return mk(Op::Neg, mk(Op::BoxF, mk(Op::Neg, unary())));
            case Tok::DiaP: require(Op::DiaP, t, "<P>"); return mk(Op::DiaP, unary());
            case Tok::BoxP:
                require(Op::DiaP, t, "[P]");
                return mk(Op::Neg, mk(Op::DiaP, mk(Op::Neg, unary())));
            case Tok::BoxDot: require(Op::BoxDot, t, "[x]"); return mk(Op::BoxDot, unary());
            case Tok::LParen: {
                Formula f = iff();
                if (!at(Tok::RParen)) throw ParseError("expected ')'", peek().pos);
                next();
                return f;
            }
            case Tok::RParen: throw ParseError("unbalanced ')'", t.pos);
            case Tok::End: throw ParseError("unexpected end of input", t.pos);
            default: throw ParseError("expected a formula", t.pos);
        }
    }
};

int precedence(Op op) {
    switch (op) {
        case Op::And: return 5;
        case Op::Or: return 4;
        case Op::Coimp: return 3;
        case Op::Imp: return 2;
        default: return 6;
    }
}

void print_into(const Formula& f, std::string& out) {
    switch (f->op) {
        case Op::Atom: out += "p" + std::to_string(f->atom); return;
        case Op::Bot: out += "false"; return;
        case Op::Top: out += "true"; return;
        default: break;
    }
    auto sub = [&](const Formula& g, bool paren) {
        if (paren) out += "(";
        print_into(g, out);
        if (paren) out += ")";
    };
    int p = precedence(f->op);
    if (arity(f->op) == 1) {
        out += op_symbol(f->op);
        sub(f->a, precedence(f->a->op) < 6);
        return;
    }
    int pl = precedence(f->a->op), pr = precedence(f->b->op);
    bool left_paren, right_paren;
    if (f->op == Op::Imp) {
        left_paren = pl <= p;
        right_paren = pr < p;
    } else {
        left_paren = pl < p;
        right_paren = pr <= p;
    }
    sub(f->a, left_paren);
    out += " ";
    out += op_symbol(f->op);
    out += " ";
    sub(f->b, right_paren);
}

}  // namespace

Formula parse_formula(const std::string& text, Sig sig) {
    Parser p(lex(text), sig);
    Formula f = p.formula();
    if (!p.at(Tok::End)) {
        if (p.at(Tok::RParen)) throw ParseError("unbalanced ')'", p.peek().pos);
        throw ParseError("unexpected token after formula", p.peek().pos);
    }
    return f;
}

std::string print_formula(const Formula& f) {
    std::string out;
    print_into(f, out);
    return out;
}

Rule parse_rule(const std::string& text, Sig sig) {
    Parser p(lex(text), sig);
    Rule r;
    r.sig = sig;
    auto side = [&](std::vector<Formula>& dest, Tok stop) {
        if (p.at(stop)) return;
        while (true) {
            dest.push_back(p.formula());
            if (p.at(Tok::Comma)) {
                p.next();
                continue;
            }
            break;
        }
    };
    side(r.premises, Tok::Slash);
    if (!p.at(Tok::Slash)) throw ParseError("expected '/' in rule", p.peek().pos);
    p.next();
    side(r.conclusions, Tok::End);
    if (!p.at(Tok::End)) throw ParseError("unexpected token in rule", p.peek().pos);
    return r;
}

std::string print_rule(const Rule& r) {
    std::string out;
    for (std::size_t i = 0; i < r.premises.size(); ++i) {
        if (i) out += ", ";
        out += print_formula(r.premises[i]);
    }
    out += r.premises.empty() ? "/" : " /";
    for (std::size_t i = 0; i < r.conclusions.size(); ++i) {
        out += i ? ", " : " ";
        out += print_formula(r.conclusions[i]);
    }
    return out;
}

std::set<int> rule_atoms(const Rule& r) {
    std::set<int> out;
    for (auto& f : r.premises) collect_atoms(f, out);
    for (auto& f : r.conclusions) collect_atoms(f, out);
    return out;
}

Formula substitute(const Formula& f, const Substitution& s) {
    for (auto& [k, v] : s)
        if (v->sig != f->sig) throw Error("substitution signature mismatch");
    std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
        switch (arity(g->op)) {
            case 0: {
                if (g->op == Op::Atom) {
                    auto it = s.find(g->atom);
                    if (it != s.end()) return it->second;
                }
                return g;
            }
            case 1: {
                Formula a = go(g->a);
                return a == g->a ? g : mk(g->op, a);
            }
            default: {
                Formula a = go(g->a), b = go(g->b);
                return (a == g->a && b == g->b) ? g : mk(g->op, a, b);
            }
        }
    };
    return go(f);
}

Rule substitute(const Rule& r, const Substitution& s) {
    Rule out;
    out.sig = r.sig;
    for (auto& f : r.premises) out.premises.push_back(substitute(f, s));
    for (auto& f : r.conclusions) out.conclusions.push_back(substitute(f, s));
    return out;
}

namespace {
void collect_subformulas(const Formula& f, FormulaSet& seen, std::vector<Formula>& out) {
    if (seen.count(f)) return;
    if (f->a) collect_subformulas(f->a, seen, out);
    if (f->b) collect_subformulas(f->b, seen, out);
    if (seen.insert(f).second) out.push_back(f);
}
}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
    FormulaSet seen;
    std::vector<Formula> out;
    collect_subformulas(f, seen, out);
    return out;
}

std::vector<Formula> subformula_closure(const std::vector<Formula>& fs) {
    FormulaSet seen;
    std::vector<Formula> out;
    for (auto& f : fs) collect_subformulas(f, seen, out);
    return out;
}

std::vector<Formula> subformula_closure(const Rule& r) {
    std::vector<Formula> all = r.premises;
    all.insert(all.end(), r.conclusions.begin(), r.conclusions.end());
    return subformula_closure(all);
}

bool is_subformula_closed(const std::vector<Formula>& fs) {
    FormulaSet s(fs.begin(), fs.end());
    for (auto& f : fs) {
        if (f->a && !s.count(f->a)) return false;
        if (f->b && !s.count(f->b)) return false;
    }
    return true;
}

}  // namespace scr
