#include <doctest.h>

#include "fixtures.hpp"
#include "scr/canonical.hpp"
#include "scr/verify.hpp"

using namespace scr;

TEST_CASE("duality round trips up to four points") {
    SuiteResult r = suite_duality(4, 3, 3);
    CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("self refutation and cross oracle on small sizes") {
    SuiteResult r = suite_scr(40, 77, 5, 3);
    CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("collapse and expansion on small sizes") {
    SuiteResult r = suite_collapse(3, 4, 5, 9);
    CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("KM and GL structure on small sizes") {
    SuiteResult r = suite_kmgl(3);
    CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("every corpus rule has at most five subformulas") {
    for (Sig s : {Sig::SI, Sig::BSI, Sig::MSI, Sig::MD, Sig::TEN}) {
        CHECK(rule_corpus(s).size() == 20);
        for (auto& r : rule_corpus(s)) CHECK_MESSAGE(subformula_closure(r).size() <= 5, print_rule(r));
    }
}

TEST_CASE("rewritten rules are sound on every frame up to four points") {
    ValidateOptions opt;
    opt.max_atoms = 16;
    for (auto [sig, kind] : {std::pair{Sig::SI, FrameKind::POSET}, std::pair{Sig::MD, FrameKind::PREORDER}}) {
        std::vector<FiniteAlgebra> targets;
        for (auto& fr : enumerate_frames_upto(4, kind)) targets.push_back(dual_algebra(fr));
        for (auto& r : rule_corpus(sig)) {
            auto xi = rewrite_rule_bounded(r, 6);
            for (auto& k : targets)
                for (auto& x : xi)
                    if (refutes_scr(k, x)) CHECK_MESSAGE(!validates(k, r, opt).valid, print_rule(r));
        }
    }
}

TEST_CASE("random domains respect the msi closure") {
    Lcg rng(1);
    for (int i = 0; i < 50; ++i) {
        DomainSpec d = random_domains(fx::FH3(), Variant::MSI, rng);
        CHECK_NOTHROW(build_scr(fx::FH3(), d));
    }
}
