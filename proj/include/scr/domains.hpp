#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scr/common.hpp"

namespace scr {

enum class Variant { SI, MOD, BSI, TEN, MSI, MODPLUS };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

using PairSet = std::set<std::pair<int, int>>;
using ElemSet = std::set<int>;

// Parameter sets of a stable canonical rule, in algebra element indices.
//   SI       imp (D)
//   MOD      box (D)
//   BSI      imp (D->), coimp (D<-)
//   TEN      boxF (D[F]), diaP (D<P>)
//   MSI      imp (D->), boxdot (D[x])
//   MODPLUS  boxplus (D[]+), box (D[])
// SI and BSI rules may also carry collapsed regions: sets of dual points
// (join-irreducible element indices). An imp region d is met by a stable
// surjection at x when the image of the upset of x meets d whenever the
// upset of f(x) does; coimp regions are the order-dual condition.
struct DomainSpec {
    Variant variant = Variant::SI;
    PairSet imp, coimp;
    ElemSet box, boxF, diaP, boxdot, boxplus;
    std::vector<std::vector<int>> imp_regions, coimp_regions;
};

bool operator==(const DomainSpec& a, const DomainSpec& b);
bool operator<(const DomainSpec& a, const DomainSpec& b);

// Relabel every element index through h.
DomainSpec map_domains(const DomainSpec& d, const std::vector<int>& h);

}  // namespace scr
