#pragma once

#include <optional>
#include <vector>

#include "scr/algebra.hpp"
#include "scr/domains.hpp"
#include "scr/frames.hpp"
#include "scr/syntax.hpp"

namespace scr {

Sig variant_signature(Variant v);
Variant default_variant(AlgClass c);

struct StableCanonicalRule {
    FiniteAlgebra alg;
    DomainSpec domains;
    Rule rule;  // atom p<i> stands for element i
};

StableCanonicalRule build_scr(const FiniteAlgebra& alg, const DomainSpec& d);

// Stable: the embedding kind of the variant (pre-stable for MSI/MODPLUS) with
// equality on the domains. Full: every operation is preserved exactly.
enum class EmbedMode { Stable, Full };

// Returns h with h[a] the image of source element a.
std::optional<std::vector<int>> find_stable_embedding(const FiniteAlgebra& src, const FiniteAlgebra& tgt,
                                                      const DomainSpec& d, EmbedMode mode = EmbedMode::Stable);
bool refutes_scr(const FiniteAlgebra& tgt, const StableCanonicalRule& scr);

// Point sets over the dual frame of the source algebra, grouped by the
// condition a stable surjection onto that frame must meet.
struct GeometricDomains {
    Variant variant = Variant::SI;
    std::vector<Mask> up_back;         // imp pairs and imp regions
    std::vector<Mask> down_back;       // coimp pairs and coimp regions
    std::vector<Mask> r_back;          // MOD box, TEN boxF
    std::vector<Mask> conv_back;       // TEN diaP
    std::vector<Mask> sq_back_forth;   // MSI boxdot
    std::vector<Mask> plus_back;       // MODPLUS boxplus
    std::vector<Mask> r_back_forth;    // MODPLUS box
};

GeometricDomains geometric_domains(const FiniteAlgebra& alg, const DomainSpec& d);

// f[x] is the image of point x; surjective onto `f`.
std::optional<std::vector<int>> find_stable_surjection(const FiniteFrame& x, const FiniteFrame& f,
                                                       const GeometricDomains& g);

StableCanonicalRule rewrite_rule(const Rule& r, const FiniteAlgebra& alg, const Valuation& v);

// Algebras of the class matching s with at most size_bound elements, one per
// isomorphism class, built as duals of enumerated frames. For MD the class is
// S4 unless cls is MAG.
std::vector<FiniteAlgebra> bounded_algebras(Sig s, int size_bound, std::optional<AlgClass> cls = std::nullopt);

std::vector<StableCanonicalRule> rewrite_rule_bounded(const Rule& r, int size_bound,
                                                      std::optional<AlgClass> cls = std::nullopt);

// Same algebra and domains up to a relabelling.
bool isomorphic_scr(const StableCanonicalRule& a, const StableCanonicalRule& b);

// MOD rule over a preorder dual -> SI rule with imp regions over the
// skeleton; TEN rule -> BSI rule with imp and coimp regions.
StableCanonicalRule collapse_scr(const StableCanonicalRule& scr);

}  // namespace scr
