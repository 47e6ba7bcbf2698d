#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scr/algebra.hpp"
#include "scr/syntax.hpp"

namespace scr {

// SI -> MD:  T(p) = []p,          T(a -> b) = [](~Ta | Tb)
// BSI -> TEN: T(p) = [F]p,        T(a -> b) = [F](~Ta | Tb), T(a -< b) = <P>(Ta & ~Tb)
// MSI -> MD:  T(p) = []+p,        T(a -> b) = []+(~Ta | Tb), T([x]a) = []Ta
// where []+x abbreviates []x & x. Other connectives are translated homomorphically.
Formula godel_translate(const Formula& f, Sig from);
Rule godel_translate(const Rule& r);
Sig translation_target(Sig from);

// HA -> MA (Grz), BIHA -> TEN (Grz.t), FRT -> MAG, all over the free Boolean
// extension whose elements are sets of join-irreducibles.
FiniteAlgebra sigma_algebra(const FiniteAlgebra& h);
// MA (S4) -> HA, TEN -> BIHA, MAG -> FRT on the open elements.
FiniteAlgebra rho_algebra(const FiniteAlgebra& a);
// rho_algebra together with the inclusion of its elements into `a`.
std::pair<FiniteAlgebra, std::vector<int>> rho_algebra_with_inclusion(const FiniteAlgebra& a);

struct CompanionReport {
    std::string lemma;
    std::string left, right;
    bool agree = false;
    std::string note;
    std::optional<Valuation> left_witness, right_witness;
    std::vector<int> map;  // isomorphism or embedding, when one was found
};

// validates(a, T(r)) against validates(rho a, r).
CompanionReport check_gtskeleton(const FiniteAlgebra& a, const Rule& r);
// rho sigma x ~ x for HA/BIHA/FRT; sigma rho x embeds into x for MA/TEN/MAG.
CompanionReport check_skeleton_identities(const FiniteAlgebra& x);
// validates(a, r) against validates(sigma rho a, r) on Grz / Grz.t / Magari algebras.
CompanionReport check_main_lemma(const FiniteAlgebra& a, const Rule& r);
// rho a validates every rule.
bool tau_member(const FiniteAlgebra& a, const std::vector<Rule>& rules);

}  // namespace scr
