#include <doctest.h>

#include "fixtures.hpp"
#include "scr/gen.hpp"
#include "scr/verify.hpp"

using namespace scr;

TEST_CASE("frame invariants") {
    CHECK_FALSE(frame_violation(make_frame(FrameKind::POSET, {{1, 1}, {1, 1}})).empty());
    CHECK_FALSE(frame_violation(make_frame(FrameKind::PREORDER, {{0}})).empty());
    CHECK_FALSE(frame_violation(make_frame(FrameKind::STRICT, {{1}})).empty());
    CHECK(frame_violation(make_frame(FrameKind::KRIPKE, {{0, 1}, {1, 0}})).empty());
    CHECK_THROWS_AS(make_frame(FrameKind::POSET, {{1, 0}}), Error);
}

TEST_CASE("extremal points") {
    FiniteFrame c = fx::chain2();
    CHECK(extremal_points(c, 0b11, Extremal::Max) == 0b10);
    FiniteFrame cl = fx::cluster2();
    CHECK(extremal_points(cl, 0b11, Extremal::QMax) == 0b11);
    CHECK(extremal_points(cl, 0b11, Extremal::Max) == 0);
    CHECK(extremal_points(c, 0b01, Extremal::Pas) == 0b01);
}

TEST_CASE("clusters") {
    CHECK(clusters(fx::cluster2()) == std::vector<std::vector<int>>{{0, 1}});
    CHECK(clusters(fx::chain2()) == std::vector<std::vector<int>>{{0}, {1}});
    FiniteFrame f = make_frame(FrameKind::PREORDER, {{1, 1, 1}, {1, 1, 1}, {0, 0, 1}});
    CHECK(clusters(f) == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("skeleton_frame") {
    Skeleton s = skeleton_frame(fx::cluster2());
    CHECK(s.frame.n == 1);
    CHECK(s.frame.kind == FrameKind::POSET);
    CHECK(s.map == std::vector<int>{0, 0});

    Skeleton p = skeleton_frame(fx::chain2());
    CHECK(p.frame == fx::chain2());

    FiniteFrame f = make_frame(FrameKind::PREORDER, {{1, 1, 1}, {1, 1, 1}, {0, 0, 1}});
    Skeleton q = skeleton_frame(f);
    CHECK(find_frame_isomorphism(q.frame, fx::chain2()).has_value());
    CHECK(q.map[0] == q.map[1]);
    CHECK(q.map[0] != q.map[2]);
}

TEST_CASE("cluster_expansion") {
    Expansion e = cluster_expansion(fx::point_poset(), {2});
    CHECK(find_frame_isomorphism(e.frame, fx::cluster2()).has_value());
    Expansion b = cluster_expansion(fx::chain2(), {2, 1});
    CHECK(b.frame.n == 3);
    auto cl = clusters(b.frame);
    CHECK(cl.size() == 2);
    Expansion id = cluster_expansion(fx::chain2(), {1, 1});
    CHECK(find_frame_isomorphism(id.frame, make_frame(FrameKind::PREORDER, {{1, 1}, {0, 1}})).has_value());
    CHECK_THROWS_AS(cluster_expansion(fx::chain2(), {0, 1}), Error);
}

TEST_CASE("frame_validates") {
    FrameVerdict v = frame_validates(fx::chain2(), parse_rule("/ p1 | (p1 -> false)", Sig::SI));
    REQUIRE_FALSE(v.valid);
    CHECK(v.witness.at(1) == 0b10);
    CHECK(frame_validates(fx::reflexive_point(), parse_rule("/ []p1 -> p1", Sig::MD)).valid);
    CHECK(frame_validates(fx::irreflexive_point(), parse_rule("/ [](([]p1) -> p1) -> []p1", Sig::MD)).valid);
}

TEST_CASE("dual frames and algebras") {
    CHECK(find_frame_isomorphism(dual_frame(fx::H3()), fx::chain2()).has_value());
    CHECK(find_isomorphism(dual_algebra(fx::chain2()), fx::H3()).has_value());
    FiniteFrame c = dual_frame(fx::C2());
    CHECK(c.kind == FrameKind::PREORDER);
    CHECK(find_frame_isomorphism(c, fx::cluster2()).has_value());
    CHECK(dual_frame(fx::H2()).n == 1);
    CHECK(dual_frame(fx::MAG1()).kind == FrameKind::STRICT);
    FiniteFrame km = dual_frame(fx::FH3());
    CHECK(km.kind == FrameKind::KM);
    CHECK(km.rel2.size() == 2);
}

TEST_CASE("frame and algebra validity coincide on duals") {
    ValidateOptions opt;
    opt.max_atoms = 16;
    struct Case {
        FrameKind kind;
        int max;
        Sig sig;
    };
    for (const Case& c : {Case{FrameKind::POSET, 3, Sig::SI}, Case{FrameKind::BI, 3, Sig::BSI},
                          Case{FrameKind::KM, 3, Sig::MSI}, Case{FrameKind::PREORDER, 2, Sig::MD},
                          Case{FrameKind::STRICT, 3, Sig::MD}, Case{FrameKind::TENSE, 2, Sig::TEN}})
        for (auto& fr : enumerate_frames_upto(c.max, c.kind)) {
            FiniteAlgebra a = dual_algebra(fr);
            for (auto& r : rule_corpus(c.sig))
                CHECK_MESSAGE(frame_validates(fr, r, opt).valid == validates(a, r, opt).valid, print_rule(r));
        }
}

TEST_CASE("frame_evaluate agrees with evaluate through the dual") {
    Lcg rng(17);
    for (auto& fr : enumerate_frames_upto(3, FrameKind::TENSE)) {
        DualAlgebra da = dual_algebra_full(fr);
        for (int i = 0; i < 30; ++i) {
            Formula f = random_formula(Sig::TEN, 3, 2, rng);
            PointValuation pv;
            Valuation v;
            for (int p = 1; p <= 2; ++p) {
                Mask m = rng.below(1 << fr.n);
                pv[p] = m;
                v[p] = da.index_of(m);
            }
            CHECK(da.sets[evaluate(da.alg, v, f)] == frame_evaluate(fr, pv, f));
        }
    }
}
