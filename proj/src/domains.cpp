#include "scr/domains.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace scr {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::SI: return "SI";
        case Variant::MOD: return "MOD";
        case Variant::BSI: return "BSI";
        case Variant::TEN: return "TEN";
        case Variant::MSI: return "MSI";
        case Variant::MODPLUS: return "MODPLUS";
    }
    return "?";
}

Variant parse_variant(const std::string& s) {
    std::string t;
    for (char c : s) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (Variant v : {Variant::SI, Variant::MOD, Variant::BSI, Variant::TEN, Variant::MSI, Variant::MODPLUS})
        if (variant_name(v) == t) return v;
    throw Error("unknown rule variant '" + s + "'");
}

namespace {
auto tie_all(const DomainSpec& d) {
    return std::tie(d.variant, d.imp, d.coimp, d.box, d.boxF, d.diaP, d.boxdot, d.boxplus, d.imp_regions,
                    d.coimp_regions);
}
}  // namespace

bool operator==(const DomainSpec& a, const DomainSpec& b) { return tie_all(a) == tie_all(b); }
bool operator<(const DomainSpec& a, const DomainSpec& b) { return tie_all(a) < tie_all(b); }

DomainSpec map_domains(const DomainSpec& d, const std::vector<int>& h) {
    DomainSpec out;
    out.variant = d.variant;
    auto pairs = [&](const PairSet& s) {
        PairSet r;
        for (auto [a, b] : s) r.insert({h[a], h[b]});
        return r;
    };
    auto elems = [&](const ElemSet& s) {
        ElemSet r;
        for (int a : s) r.insert(h[a]);
        return r;
    };
    auto regions = [&](const std::vector<std::vector<int>>& rs) {
        std::vector<std::vector<int>> r;
        for (auto& reg : rs) {
            std::vector<int> m;
            for (int a : reg) m.push_back(h[a]);
            std::sort(m.begin(), m.end());
            r.push_back(m);
        }
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    };
    out.imp = pairs(d.imp);
    out.coimp = pairs(d.coimp);
    out.box = elems(d.box);
    out.boxF = elems(d.boxF);
    out.diaP = elems(d.diaP);
    out.boxdot = elems(d.boxdot);
    out.boxplus = elems(d.boxplus);
    out.imp_regions = regions(d.imp_regions);
    out.coimp_regions = regions(d.coimp_regions);
    return out;
}

}  // namespace scr
