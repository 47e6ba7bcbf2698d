#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scr/common.hpp"
#include "scr/syntax.hpp"

namespace scr {

enum class AlgClass { DL, HA, BIHA, MA, TEN, FRT, MAG };

std::string class_name(AlgClass c);
AlgClass parse_class(const std::string& s);

// Carrier is 0..n-1. Binary tables are row-major n*n, unary tables have n
// entries; absent tables are empty. The order is read off the meet table.
struct FiniteAlgebra {
    AlgClass cls = AlgClass::DL;
    int n = 0;
    int zero = 0;
    int one = 0;
    std::vector<int> meet, join, imp, coimp;
    std::vector<int> neg, box, boxF, diaP, boxdot;

    int m(int a, int b) const { return meet[a * n + b]; }
    int j(int a, int b) const { return join[a * n + b]; }
    int im(int a, int b) const { return imp[a * n + b]; }
    int co(int a, int b) const { return coimp[a * n + b]; }
    bool leq(int a, int b) const { return meet[a * n + b] == a; }
    // []a & a
    int boxplus(int a) const { return m(box[a], a); }
};

bool operator==(const FiniteAlgebra& x, const FiniteAlgebra& y);

using Valuation = std::map<int, int>;

// True if the algebra carries every table needed to interpret the signature.
bool supports(const FiniteAlgebra& alg, Sig s);
Sig default_signature(AlgClass c);

int evaluate(const FiniteAlgebra& alg, const Valuation& v, const Formula& f);

struct ValidateOptions {
    int max_atoms = 8;
};

struct Verdict {
    bool valid = true;
    Valuation witness;  // set when refuted
};

Verdict validates(const FiniteAlgebra& alg, const Rule& r, const ValidateOptions& opt = {});
// Premises all evaluate to 1 and no conclusion does.
bool refutes_under(const FiniteAlgebra& alg, const Rule& r, const Valuation& v);

struct ClassCheck {
    bool ok = true;
    std::string failure;
};

// Names: DL BA HA BIHA MA K4 S4 GRZ TEN GRZ.T FRT MAG.
ClassCheck check_class(const FiniteAlgebra& alg, const std::string& cls);
ClassCheck check_class(const FiniteAlgebra& alg);  // against alg.cls

std::vector<int> generated_bounded_sublattice(const FiniteAlgebra& alg, const std::vector<int>& seed);
std::vector<int> generated_boolean_subalgebra(const FiniteAlgebra& alg, const std::vector<int>& seed);
// Lattice reduct restricted to a sorted subset closed under meet/join (and neg
// if keep_neg). Element i of the result is elems[i].
FiniteAlgebra restrict_lattice(const FiniteAlgebra& alg, const std::vector<int>& elems, bool keep_neg);

bool is_distributive(const FiniteAlgebra& alg);

enum class ExpandMode { Imp, Coimp, Both };
FiniteAlgebra heyting_expand(const FiniteAlgebra& lattice, ExpandMode mode);
FiniteAlgebra fronton_expand(const FiniteAlgebra& ha);

std::vector<int> join_irreducibles(const FiniteAlgebra& alg);
std::vector<int> lattice_atoms(const FiniteAlgebra& alg);

struct BooleanExtension {
    FiniteAlgebra ba;              // element index = bitmask over join_irreducibles
    std::vector<int> embedding;    // lattice element -> ba element
    std::vector<int> join_irreducibles;
};
BooleanExtension free_boolean_extension(const FiniteAlgebra& lattice);

std::vector<int> open_elements(const FiniteAlgebra& alg);

// Enumerates bijections commuting with every table present in both algebras.
// The callback returns true to stop.
void for_each_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                          const std::function<bool(const std::vector<int>&)>& cb);
std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);

// H_n: the n-element Heyting chain 0 < 1 < ... < n-1.
FiniteAlgebra chain_heyting(int n);
// Relabel elements: result element perm[i] plays the role of i.
FiniteAlgebra relabel(const FiniteAlgebra& alg, const std::vector<int>& perm);

}  // namespace scr
