#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scr/algebra.hpp"
#include "scr/common.hpp"
#include "scr/syntax.hpp"

namespace scr {

// KRIPKE is an arbitrary relation, used for duals of modal algebras that are
// neither preorders nor strict orders.
enum class FrameKind { POSET, PREORDER, STRICT, BI, TENSE, KM, KRIPKE };

std::string kind_name(FrameKind k);
FrameKind parse_kind(const std::string& s);

// rel[x] is the bitmask of successors of x. For KM frames rel is <= and rel2
// is the second relation; rel2 is empty for every other kind.
struct FiniteFrame {
    FrameKind kind = FrameKind::POSET;
    int n = 0;
    std::vector<Mask> rel;
    std::vector<Mask> rel2;

    bool r(int x, int y) const { return has(rel[x], y); }
    Mask all() const { return full_mask(n); }
};

bool operator==(const FiniteFrame& a, const FiniteFrame& b);

FiniteFrame make_frame(FrameKind kind, const std::vector<std::vector<int>>& matrix);
std::vector<std::vector<int>> to_matrix(const std::vector<Mask>& rel, int n);

std::vector<Mask> converse(const std::vector<Mask>& rel);
// Image R[U] and preimage R^-1[U].
Mask image(const std::vector<Mask>& rel, Mask u);
Mask preimage(const std::vector<Mask>& rel, Mask u);
Mask up_closure(const FiniteFrame& fr, Mask u);
Mask down_closure(const FiniteFrame& fr, Mask u);
bool is_upset(const FiniteFrame& fr, Mask u);
// Upsets of rel in increasing mask order.
std::vector<Mask> upsets(const FiniteFrame& fr);

bool is_reflexive(const std::vector<Mask>& rel);
bool is_irreflexive(const std::vector<Mask>& rel);
bool is_transitive(const std::vector<Mask>& rel);
bool is_antisymmetric(const std::vector<Mask>& rel);

// Empty string when the frame satisfies the invariants of its kind.
std::string frame_violation(const FiniteFrame& fr);

enum class Extremal { QMax, Max, QMin, Min, Pas, PasConverse };
Extremal parse_extremal(const std::string& s);
Mask extremal_points(const FiniteFrame& fr, Mask u, Extremal kind);

// Classes of x~y iff x=y or (Rxy and Ryx), ordered by least member.
std::vector<std::vector<int>> clusters(const FiniteFrame& fr);

struct Skeleton {
    FiniteFrame frame;
    std::vector<int> map;  // point -> skeleton point
};
// PREORDER -> POSET, TENSE -> BI, any transitive STRICT/KRIPKE -> KM with
// <= from the reflexive closure and the second relation from R.
// POSET, BI and KM inputs are returned unchanged with the identity map.
Skeleton skeleton_frame(const FiniteFrame& fr);

struct Expansion {
    FiniteFrame frame;
    std::vector<int> projection;
};
Expansion cluster_expansion(const FiniteFrame& poset, const std::vector<int>& sizes);

using PointValuation = std::map<int, Mask>;

struct FrameVerdict {
    bool valid = true;
    PointValuation witness;
};

bool frame_supports(const FiniteFrame& fr, Sig s);
// Truth set of f under v.
Mask frame_evaluate(const FiniteFrame& fr, const PointValuation& v, const Formula& f);
// Uniform reading: whenever every premise is true everywhere, some single
// conclusion is true everywhere. Valuations range over upsets for SI/BSI/MSI.
FrameVerdict frame_validates(const FiniteFrame& fr, const Rule& r, const ValidateOptions& opt = {});

struct DualFrame {
    FiniteFrame frame;
    std::vector<int> points;  // algebra element represented by each point
    std::vector<Mask> beta;   // algebra element -> set of points
};
// HA/DL -> POSET, BIHA -> BI, FRT -> KM (join-irreducibles, x <= y iff
// J[y] <= J[x]); MA -> PREORDER/STRICT/KRIPKE, MAG -> STRICT, TEN -> TENSE
// (atoms, Rxy iff x <= <>y).
DualFrame dual_frame_full(const FiniteAlgebra& alg);
FiniteFrame dual_frame(const FiniteAlgebra& alg);

struct DualAlgebra {
    FiniteAlgebra alg;
    std::vector<Mask> sets;  // algebra element -> set of points
    int index_of(Mask m) const;
};
DualAlgebra dual_algebra_full(const FiniteFrame& fr);
FiniteAlgebra dual_algebra(const FiniteFrame& fr);

std::optional<std::vector<int>> find_frame_isomorphism(const FiniteFrame& a, const FiniteFrame& b);
FiniteFrame relabel_frame(const FiniteFrame& fr, const std::vector<int>& perm);

}  // namespace scr
