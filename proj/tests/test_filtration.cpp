#include <doctest.h>

#include "fixtures.hpp"
#include "scr/filtration.hpp"
#include "scr/verify.hpp"

using namespace scr;

TEST_CASE("si filtration of the three-chain") {
    FiniteAlgebra h3 = fx::H3();
    Rule em = parse_rule("/ p1 | (p1 -> false)", Sig::SI);
    FiltrationResult f = filtrate(h3, {{1, 1}}, subformula_closure(em), FiltrationMethod::SI);
    CHECK(find_isomorphism(f.alg, h3).has_value());
    CHECK(map_domains(f.domains, f.inclusion).imp == PairSet{{1, 0}});
    for (auto& phi : subformula_closure(em)) CHECK(f.inclusion[evaluate(f.alg, f.val, phi)] == evaluate(h3, {{1, 1}}, phi));
}

TEST_CASE("transitive filtration of the cluster") {
    FiniteAlgebra c2 = fx::C2();
    std::vector<Formula> theta = subformula_closure(parse_rule("/ []p1", Sig::MD));
    FiltrationResult f = filtrate(c2, {{1, 1}}, theta, FiltrationMethod::S4);
    CHECK(f.alg.n == 4);
    CHECK(check_class(f.alg, "S4").ok);
    CHECK(f.inclusion[evaluate(f.alg, f.val, parse_formula("[]p1", Sig::MD))] == 0);
}

TEST_CASE("weak fronton filtration") {
    FiniteAlgebra fh3 = fx::FH3();
    std::vector<Formula> theta = subformula_closure(parse_rule("/ [x]p1", Sig::MSI));
    FiltrationResult f = filtrate(fh3, {{1, 1}}, theta, FiltrationMethod::FRT_WEAK);
    CHECK(find_isomorphism(f.alg, fh3).has_value());
    int a = -1;
    for (int i = 0; i < f.alg.n; ++i)
        if (f.inclusion[i] == 1) a = i;
    REQUIRE(a >= 0);
    CHECK(f.inclusion[f.alg.boxdot[a]] == 2);
    for (int d : f.domains.boxdot)
        for (int b = 0; b < f.alg.n; ++b) CHECK(f.domains.imp.count({b, d}));
}

TEST_CASE("filtration preconditions") {
    FiniteAlgebra h3 = fx::H3();
    CHECK_THROWS_AS(filtrate(h3, {{1, 1}}, {parse_formula("p1 & p2", Sig::SI)}, FiltrationMethod::SI), Error);
    CHECK_THROWS_AS(filtrate(h3, {{1, 1}}, {parse_formula("p1", Sig::MD)}, FiltrationMethod::SI), Error);
    CHECK_THROWS_AS(filtrate(h3, {{1, 1}}, {parse_formula("p1", Sig::MD)}, FiltrationMethod::S4), Error);
    CHECK_THROWS_AS(parse_method("nope"), Error);
}

TEST_CASE("method selection") {
    CHECK(method_for(Sig::SI, AlgClass::HA) == FiltrationMethod::SI);
    CHECK(method_for(Sig::MD, AlgClass::MA) == FiltrationMethod::S4);
    CHECK(method_for(Sig::MD, AlgClass::MAG) == FiltrationMethod::MAG_WEAK);
    CHECK(method_for(Sig::MSI, AlgClass::FRT) == FiltrationMethod::FRT_WEAK);
    CHECK(method_for(Sig::TEN, AlgClass::TEN) == FiltrationMethod::TENSE);
    for (auto m : {FiltrationMethod::SI, FiltrationMethod::S4, FiltrationMethod::BSI, FiltrationMethod::TENSE,
                   FiltrationMethod::FRT_WEAK, FiltrationMethod::MAG_WEAK})
        CHECK(parse_method(method_name(m)) == m);
}

TEST_CASE("seeded filtration instances agree on theta and embed stably") {
    SuiteResult r = suite_filtration(120, 4242);
    CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("tense filtration keeps the residual pair") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Lcg rng(seed);
        auto pool = bounded_algebras(Sig::TEN, 16);
        const FiniteAlgebra& a = pool[rng.below(static_cast<int>(pool.size()))];
        std::vector<Formula> theta = subformula_closure(std::vector<Formula>{random_formula(Sig::TEN, 3, 2, rng)});
        Valuation v{{1, rng.below(a.n)}, {2, rng.below(a.n)}};
        FiltrationResult f = filtrate(a, v, theta, FiltrationMethod::TENSE);
        for (int x = 0; x < f.alg.n; ++x)
            for (int y = 0; y < f.alg.n; ++y)
                CHECK(f.alg.leq(f.alg.diaP[x], y) == f.alg.leq(x, f.alg.boxF[y]));
    }
}
