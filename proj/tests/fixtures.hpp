#pragma once

#include "scr/algebra.hpp"
#include "scr/frames.hpp"

namespace fx {

using namespace scr;

inline FiniteFrame point_poset() { return make_frame(FrameKind::POSET, {{1}}); }
// 0 < 1
inline FiniteFrame chain2() { return make_frame(FrameKind::POSET, {{1, 1}, {0, 1}}); }
inline FiniteFrame antichain2() { return make_frame(FrameKind::POSET, {{1, 0}, {0, 1}}); }
inline FiniteFrame cluster2() { return make_frame(FrameKind::PREORDER, {{1, 1}, {1, 1}}); }
inline FiniteFrame discrete2() { return make_frame(FrameKind::PREORDER, {{1, 0}, {0, 1}}); }
inline FiniteFrame irreflexive_point() { return make_frame(FrameKind::STRICT, {{0}}); }
inline FiniteFrame reflexive_point() { return make_frame(FrameKind::PREORDER, {{1}}); }
// 0 sees 1, strictly
inline FiniteFrame strict_chain2() { return make_frame(FrameKind::STRICT, {{0, 1}, {0, 0}}); }

inline FiniteAlgebra H2() { return chain_heyting(2); }
inline FiniteAlgebra H3() { return chain_heyting(3); }
// Powerset of the two-point cluster: 0 = {}, 1 = {x}, 2 = {y}, 3 = X.
inline FiniteAlgebra C2() { return dual_algebra(cluster2()); }
// Four-element Boolean algebra with box the identity.
inline FiniteAlgebra B4id() { return dual_algebra(discrete2()); }
inline FiniteAlgebra MAG1() { return dual_algebra(irreflexive_point()); }
inline FiniteAlgebra FH3() { return fronton_expand(H3()); }

}  // namespace fx
