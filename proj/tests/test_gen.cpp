#include <doctest.h>

#include "oracles.hpp"
#include "fixtures.hpp"
#include "scr/gen.hpp"

using namespace scr;

namespace {

oracle::Matrix matrix_of(const FiniteFrame& fr) {
    oracle::Matrix m(fr.n * fr.n);
    for (int x = 0; x < fr.n; ++x)
        for (int y = 0; y < fr.n; ++y) m[x * fr.n + y] = fr.r(x, y);
    return m;
}

}  // namespace

TEST_CASE("enumeration sizes") {
    CHECK(enumerate_frames(3, FrameKind::POSET).size() == 5);
    CHECK(enumerate_frames(2, FrameKind::PREORDER).size() == 3);
    CHECK(enumerate_frames(2, FrameKind::STRICT).size() == 2);
}

TEST_CASE("poset counts match the brute-force oracle") {
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<long>(enumerate_frames(n, FrameKind::POSET).size()) == oracle::count_classes(n, oracle::Kind::Poset));
    for (int n = 1; n <= 4; ++n) {
        CHECK(static_cast<long>(enumerate_frames(n, FrameKind::PREORDER).size()) ==
              oracle::count_classes(n, oracle::Kind::Preorder));
        CHECK(static_cast<long>(enumerate_frames(n, FrameKind::STRICT).size()) ==
              oracle::count_classes(n, oracle::Kind::Strict));
    }
}

TEST_CASE("no two enumerated frames are isomorphic") {
    for (FrameKind k : {FrameKind::POSET, FrameKind::PREORDER, FrameKind::STRICT, FrameKind::KRIPKE})
        for (int n = 1; n <= (k == FrameKind::KRIPKE ? 3 : 4); ++n) {
            auto fs = enumerate_frames(n, k);
            std::set<std::uint64_t> codes;
            for (auto& f : fs) {
                CHECK(frame_violation(f).empty());
                codes.insert(oracle::min_code(matrix_of(f), n));
            }
            CHECK(codes.size() == fs.size());
        }
}

TEST_CASE("every frame is in canonical form and the order is by code") {
    for (int n = 1; n <= 4; ++n) {
        auto fs = enumerate_frames(n, FrameKind::PREORDER);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            CHECK(canonical_code(fs[i]) == oracle::min_code(matrix_of(fs[i]), n));
            CHECK(canonical_form(fs[i]) == fs[i]);
            if (i) CHECK(canonical_code(fs[i - 1]) < canonical_code(fs[i]));
        }
    }
}

TEST_CASE("enumeration cap") {
    EnumerationRequest req;
    req.n = 7;
    req.kind = FrameKind::POSET;
    CHECK_THROWS_AS(enumerate_frames(req), Error);
    req.n = 5;
    req.kind = FrameKind::KRIPKE;
    CHECK_THROWS_AS(enumerate_frames(req), Error);
    req.n = 0;
    CHECK_THROWS_AS(enumerate_frames(req), Error);
}

TEST_CASE("the generator sequence is the documented LCG") {
    Lcg g(7);
    std::uint64_t s = 7;
    for (int i = 0; i < 5; ++i) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        CHECK(g.next() == static_cast<std::uint32_t>(s >> 33));
    }
}

TEST_CASE("random_model") {
    FiniteAlgebra h3 = fx::H3();
    CHECK(random_model(h3, 1, 7) == random_model(h3, 1, 7));
    std::uint64_t s = 7 * 6364136223846793005ULL + 1442695040888963407ULL;
    CHECK(random_model(h3, 1, 7).at(1) == static_cast<int>((s >> 33) % 3));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Valuation v = random_model(fx::H2(), 2, seed);
        CHECK(v.size() == 2);
        for (auto [p, a] : v) CHECK((a == 0 || a == 1));
    }
}

TEST_CASE("random_point_model draws upsets on posets") {
    for (auto& fr : enumerate_frames_upto(4, FrameKind::POSET))
        for (std::uint64_t seed = 0; seed < 5; ++seed)
            for (auto [p, m] : random_point_model(fr, 2, seed)) CHECK(is_upset(fr, m));
}
