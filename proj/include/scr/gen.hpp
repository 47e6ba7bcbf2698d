#pragma once

#include <cstdint>
#include <vector>

#include "scr/algebra.hpp"
#include "scr/frames.hpp"

namespace scr {

struct EnumerationRequest {
    int n = 1;
    FrameKind kind = FrameKind::POSET;
    int cap = 6;  // KRIPKE is capped at 4 regardless
};

// One representative per isomorphism class, each in its canonical labeling,
// sorted by canonical code. BI/KM/TENSE reuse the POSET/PREORDER classes.
std::vector<FiniteFrame> enumerate_frames(const EnumerationRequest& req);
std::vector<FiniteFrame> enumerate_frames(int n, FrameKind kind);
std::vector<FiniteFrame> enumerate_frames_upto(int max_n, FrameKind kind);

// Smallest row-major relation code over all relabelings; entry (0,0) is the
// most significant bit. rel2 (KM) is ignored since it is determined by rel.
std::uint64_t canonical_code(const FiniteFrame& fr);
FiniteFrame canonical_form(const FiniteFrame& fr);

// 64-bit LCG: state = state * 6364136223846793005 + 1442695040888963407,
// output = state >> 33, state initialised to the seed.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint32_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint32_t>(state_ >> 33);
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint32_t>(bound)); }

private:
    std::uint64_t state_;
};

// V(p1..p_atoms): the i-th draw modulo the carrier size.
Valuation random_model(const FiniteAlgebra& alg, int atoms, std::uint64_t seed);
// Frame-side variant: upsets for POSET/BI/KM, arbitrary sets otherwise.
PointValuation random_point_model(const FiniteFrame& fr, int atoms, std::uint64_t seed);

}  // namespace scr
