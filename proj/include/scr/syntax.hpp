#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "scr/common.hpp"

namespace scr {

enum class Sig { SI, MD, BSI, TEN, MSI };

enum class Op { Atom, Bot, Top, And, Or, Imp, Coimp, Neg, Box, BoxF, DiaP, BoxDot };

std::string sig_name(Sig s);
Sig parse_sig(const std::string& s);  // case-insensitive "si", "md", ...
bool licensed(Sig s, Op op);
int arity(Op op);

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
    Op op;
    Sig sig;
    int atom = -1;
    Formula a, b;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos);
};

// Constructors check that the connective is licensed by the signature and that
// children share it.
Formula mk_atom(Sig s, int index);
Formula mk_bot(Sig s);
Formula mk_top(Sig s);
Formula mk(Op op, Formula a, Formula b = nullptr);
Formula mk_const(Sig s, Op op);

// Derived connectives that respect the signature's primitives: in MD/TEN an
// implication is rewritten as ~a | b.
Formula mk_implies(Sig s, Formula a, Formula b);
Formula mk_iff(Sig s, Formula a, Formula b);
Formula mk_boxplus(Formula a);  // []a & a

int compare(const Formula& x, const Formula& y);
bool equal(const Formula& x, const Formula& y);
struct FormulaLess {
    bool operator()(const Formula& x, const Formula& y) const { return compare(x, y) < 0; }
};
using FormulaSet = std::set<Formula, FormulaLess>;

std::size_t formula_size(const Formula& f);
void collect_atoms(const Formula& f, std::set<int>& out);

Formula parse_formula(const std::string& text, Sig sig);
std::string print_formula(const Formula& f);

struct Rule {
    Sig sig = Sig::SI;
    std::vector<Formula> premises;
    std::vector<Formula> conclusions;
};

Rule parse_rule(const std::string& text, Sig sig);
std::string print_rule(const Rule& r);
std::set<int> rule_atoms(const Rule& r);

using Substitution = std::map<int, Formula>;
Formula substitute(const Formula& f, const Substitution& s);
Rule substitute(const Rule& r, const Substitution& s);

// Subformulas in order of first discovery (post-order), without duplicates.
std::vector<Formula> subformulas(const Formula& f);
std::vector<Formula> subformula_closure(const Rule& r);
std::vector<Formula> subformula_closure(const std::vector<Formula>& fs);
bool is_subformula_closed(const std::vector<Formula>& fs);

}  // namespace scr
