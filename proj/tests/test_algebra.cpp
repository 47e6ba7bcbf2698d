#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "scr/canonical.hpp"
#include "scr/gen.hpp"

using namespace scr;

TEST_CASE("evaluate on chains and clusters") {
    FiniteAlgebra h3 = fx::H3();
    CHECK(evaluate(h3, {{1, 1}}, parse_formula("p1 | (p1 -> false)", Sig::SI)) == 1);
    CHECK(evaluate(fx::H2(), {{1, 1}}, parse_formula("p1 -> p1", Sig::SI)) == 1);
    FiniteAlgebra c2 = fx::C2();
    CHECK(evaluate(c2, {{1, 1}}, parse_formula("[]p1", Sig::MD)) == 0);
}

TEST_CASE("validates") {
    Rule em = parse_rule("/ p1 | (p1 -> false)", Sig::SI);
    CHECK(validates(fx::H2(), em).valid);
    Verdict v = validates(fx::H3(), em);
    REQUIRE_FALSE(v.valid);
    CHECK(v.witness.at(1) == 1);
    for (auto& a : {fx::H2(), fx::H3(), fx::C2(), fx::MAG1(), fx::FH3()})
        CHECK(validates(a, parse_rule("p1 / p1", default_signature(a.cls))).valid);
}

TEST_CASE("validates rejects rules over the atom cap") {
    Rule r = parse_rule("/ p1 | p2 | p3 | p4", Sig::SI);
    ValidateOptions opt;
    opt.max_atoms = 3;
    CHECK_THROWS_AS(validates(fx::H2(), r, opt), Error);
    CHECK_THROWS_AS(validates(fx::H2(), parse_rule("/ []p1", Sig::MD)), Error);
}

TEST_CASE("check_class") {
    CHECK(check_class(fx::H3(), "HA").ok);
    CHECK(check_class(fx::C2(), "S4").ok);
    CHECK_FALSE(check_class(fx::C2(), "GRZ").ok);
    CHECK(check_class(fx::MAG1(), "MAG").ok);
    CHECK_FALSE(check_class(fx::MAG1(), "S4").ok);
    CHECK(check_class(fx::FH3(), "FRT").ok);

    FiniteAlgebra broken = fx::H3();
    broken.imp[1 * 3 + 0] = 1;
    ClassCheck c = check_class(broken, "HA");
    CHECK_FALSE(c.ok);
    CHECK_FALSE(c.failure.empty());
}

TEST_CASE("generated sublattices") {
    FiniteAlgebra h3 = fx::H3();
    CHECK(generated_bounded_sublattice(h3, {1}) == std::vector<int>{0, 1, 2});
    CHECK(generated_bounded_sublattice(h3, {}) == std::vector<int>{0, 2});
    FiniteAlgebra b4 = fx::B4id();
    CHECK(generated_bounded_sublattice(b4, {1}) == std::vector<int>{0, 1, 3});
    CHECK(generated_boolean_subalgebra(b4, {1}) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("heyting_expand") {
    FiniteAlgebra h3 = fx::H3();
    FiniteAlgebra lat = h3;
    lat.imp.clear();
    lat.cls = AlgClass::DL;
    FiniteAlgebra e = heyting_expand(lat, ExpandMode::Imp);
    CHECK(e.im(1, 0) == 0);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (e.leq(x, y)) CHECK(e.im(x, y) == e.one);
    FiniteAlgebra b4 = fx::B4id();
    FiniteAlgebra bl = b4;
    bl.cls = AlgClass::DL;
    bl.neg.clear();
    bl.box.clear();
    FiniteAlgebra be = heyting_expand(bl, ExpandMode::Imp);
    CHECK(be.im(1, 0) == 2);
}

TEST_CASE("heyting_expand matches the brute-force residual on every lattice up to size 8") {
    int seen = 0;
    std::vector<FiniteAlgebra> lattices{chain_heyting(8)};
    for (auto& fr : enumerate_frames_upto(6, FrameKind::POSET)) lattices.push_back(dual_algebra(fr));
    for (auto& a : lattices) {
        if (a.n > 8) continue;
        FiniteAlgebra lat = a;
        lat.cls = AlgClass::DL;
        lat.imp.clear();
        FiniteAlgebra e = heyting_expand(lat, ExpandMode::Both);
        for (int x = 0; x < a.n; ++x)
            for (int y = 0; y < a.n; ++y) {
                CHECK(e.im(x, y) == oracle::heyting_imp(a, x, y));
                CHECK(e.co(x, y) == oracle::heyting_coimp(a, x, y));
            }
        ++seen;
    }
    CHECK(seen > 20);
}

TEST_CASE("fronton_expand") {
    FiniteAlgebra f2 = fronton_expand(fx::H2());
    CHECK(f2.boxdot == std::vector<int>{1, 1});
    CHECK(fx::FH3().boxdot == std::vector<int>{1, 2, 2});
}

TEST_CASE("free_boolean_extension") {
    auto e2 = free_boolean_extension(fx::H2());
    CHECK(e2.ba.n == 2);
    CHECK(e2.embedding == std::vector<int>{0, 1});
    auto e3 = free_boolean_extension(fx::H3());
    CHECK(e3.ba.n == 4);
    CHECK(e3.embedding == std::vector<int>{0, 1, 3});
    FiniteAlgebra b4 = fx::B4id();
    auto eb = free_boolean_extension(b4);
    CHECK(eb.ba.n == 4);
    CHECK(oracle::isomorphic(restrict_lattice(eb.ba, {0, 1, 2, 3}, false), restrict_lattice(b4, {0, 1, 2, 3}, false)));
}

TEST_CASE("open_elements") {
    CHECK(open_elements(fx::C2()) == std::vector<int>{0, 3});
    CHECK(open_elements(fx::B4id()) == std::vector<int>{0, 1, 2, 3});
    CHECK(open_elements(fx::MAG1()) == std::vector<int>{0, 1});
}

TEST_CASE("find_isomorphism") {
    FiniteAlgebra h3 = fx::H3();
    FiniteAlgebra r = relabel(h3, {2, 0, 1});
    auto iso = find_isomorphism(h3, r);
    REQUIRE(iso);
    CHECK(*iso == std::vector<int>{2, 0, 1});
    CHECK_FALSE(find_isomorphism(fx::H2(), h3));
    CHECK_FALSE(find_isomorphism(fx::C2(), fx::B4id()));
}

TEST_CASE("find_isomorphism agrees with brute force on small algebras") {
    std::vector<FiniteAlgebra> as;
    for (auto& fr : enumerate_frames_upto(4, FrameKind::POSET)) {
        FiniteAlgebra a = dual_algebra(fr);
        if (a.n <= 7) as.push_back(a);
    }
    for (auto& fr : enumerate_frames_upto(2, FrameKind::PREORDER)) as.push_back(dual_algebra(fr));
    for (auto& a : as)
        for (auto& b : as) CHECK(find_isomorphism(a, b).has_value() == oracle::isomorphic(a, b));
    Lcg rng(3);
    for (auto& a : as) {
        std::vector<int> p(a.n);
        for (int i = 0; i < a.n; ++i) p[i] = i;
        for (int i = a.n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
        CHECK(find_isomorphism(a, relabel(a, p)).has_value());
    }
}

TEST_CASE("residuation and class axioms on enumerated duals") {
    for (auto& fr : enumerate_frames_upto(4, FrameKind::BI)) {
        FiniteAlgebra a = dual_algebra(fr);
        for (int x = 0; x < a.n; ++x)
            for (int y = 0; y < a.n; ++y)
                for (int c = 0; c < a.n; ++c) {
                    CHECK(a.leq(c, a.im(x, y)) == a.leq(a.m(x, c), y));
                    CHECK(a.leq(a.co(x, y), c) == a.leq(x, a.j(y, c)));
                }
    }
}
