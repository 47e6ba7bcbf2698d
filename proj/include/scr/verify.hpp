#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "scr/algebra.hpp"
#include "scr/canonical.hpp"
#include "scr/gen.hpp"
#include "scr/syntax.hpp"

namespace scr {

struct SuiteResult {
    std::string name;
    long checked = 0;
    long failed = 0;
    std::string first_failure;
    std::vector<std::pair<std::string, long>> counts;

    bool ok() const { return failed == 0 && checked > 0; }
    void check(bool cond, const std::string& what);
    void count(const std::string& key, long by = 1);
    void merge(const SuiteResult& other);
};

// Twenty fixed rules per signature, each with at most five subformulas.
const std::vector<Rule>& rule_corpus(Sig s);

// Empty when h is a stable (pre-stable for MSI/MODPLUS) embedding of H into K
// meeting the domain conditions; otherwise the first violated condition.
std::string embedding_violation(const FiniteAlgebra& H, const FiniteAlgebra& K, const DomainSpec& d,
                                const std::vector<int>& h);

DomainSpec random_domains(const FiniteAlgebra& alg, Variant v, Lcg& rng);
Formula random_formula(Sig s, int depth, int atoms, Lcg& rng, bool boxplus = false);

SuiteResult suite_duality(int max_poset, int max_preorder, int max_strict);
SuiteResult suite_filtration(int instances, std::uint64_t seed, int max_algebra_size = 8, int max_theta = 6);
SuiteResult suite_scr(int samples_per_variant, std::uint64_t seed, int max_target, int max_source);
SuiteResult suite_rewrite(int bound, int max_target_points);
SuiteResult suite_translation(int max_s4, int max_ten, int max_mag, int max_ha);
SuiteResult suite_skeleton(int max_poset, int max_preorder);
SuiteResult suite_collapse(int max_preorder, int samples_per_source, int max_expanded, std::uint64_t seed);
SuiteResult suite_kmgl(int max_size);

std::vector<std::string> suite_names();
// Runs a named suite with sizes scaled from max_size.
SuiteResult run_suite(const std::string& name, int max_size, std::uint64_t seed);

}  // namespace scr
