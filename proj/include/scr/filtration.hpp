#pragma once

#include <string>
#include <vector>

#include "scr/algebra.hpp"
#include "scr/domains.hpp"
#include "scr/syntax.hpp"

namespace scr {

enum class FiltrationMethod { SI, S4, BSI, TENSE, FRT_WEAK, MAG_WEAK };

std::string method_name(FiltrationMethod m);
FiltrationMethod parse_method(const std::string& s);
Variant variant_of(FiltrationMethod m);
// Method used to rewrite a rule of signature s refuted on an algebra of class c.
FiltrationMethod method_for(Sig s, AlgClass c);

struct FiltrationResult {
    FiniteAlgebra alg;
    Valuation val;
    std::vector<int> inclusion;  // filtered element -> source element
    DomainSpec domains;
};

// theta must be subformula closed and v total on its atoms.
FiltrationResult filtrate(const FiniteAlgebra& alg, const Valuation& v, const std::vector<Formula>& theta,
                          FiltrationMethod method);

}  // namespace scr
