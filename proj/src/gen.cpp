#include "scr/gen.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace scr {

namespace {

std::uint64_t code_under(const std::vector<Mask>& rel, int n, const std::vector<int>& perm) {
    // perm[x] is the new label of x; build the relabelled matrix row by row.
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x) inv[perm[x]] = x;
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) code = (code << 1) | (has(rel[inv[i]], inv[j]) ? 1u : 0u);
    return code;
}

std::pair<std::uint64_t, std::vector<int>> canonical(const std::vector<Mask>& rel, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> best_perm = perm;
    do {
        std::uint64_t c = code_under(rel, n, perm);
        if (c < best) {
            best = c;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, best_perm};
}

std::vector<Mask> from_code(std::uint64_t code, int n) {
    std::vector<Mask> rel(n, 0);
    for (int i = n - 1; i >= 0; --i)
        for (int j = n - 1; j >= 0; --j) {
            if (code & 1u) rel[i] |= bit(j);
            code >>= 1;
        }
    return rel;
}

std::set<std::uint64_t> poset_codes_uncached(int n) {
    // Naturally labelled posets: x < y only if x < y as integers.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    std::set<std::uint64_t> codes;
    int s = static_cast<int>(slots.size());
    std::vector<Mask> rel(n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << s); ++m) {
        for (int x = 0; x < n; ++x) rel[x] = bit(x);
        for (int t = 0; t < s; ++t)
            if ((m >> t) & 1u) rel[slots[t].first] |= bit(slots[t].second);
        if (!is_transitive(rel)) continue;
        codes.insert(canonical(rel, n).first);
    }
    return codes;
}

std::set<std::uint64_t> poset_codes(int n) {
    static std::mutex mu;
    static std::map<int, std::set<std::uint64_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, poset_codes_uncached(n)).first;
    return it->second;
}

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int v = 1; v <= total - (parts - 1); ++v) {
        cur.push_back(v);
        compositions(total - v, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::set<std::uint64_t> preorder_codes(int n) {
    std::set<std::uint64_t> codes;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(n, k, cur, comps);
        for (std::uint64_t pc : poset_codes(k)) {
            FiniteFrame p{FrameKind::POSET, k, from_code(pc, k), {}};
            for (auto& sizes : comps) {
                auto e = cluster_expansion(p, sizes);
                codes.insert(canonical(e.frame.rel, n).first);
            }
        }
    }
    return codes;
}

std::set<std::uint64_t> kripke_codes(int n) {
    std::set<std::uint64_t> codes;
    int bits = n * n;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m)
        codes.insert(canonical(from_code(m, n), n).first);
    return codes;
}

}  // namespace

std::uint64_t canonical_code(const FiniteFrame& fr) { return canonical(fr.rel, fr.n).first; }

FiniteFrame canonical_form(const FiniteFrame& fr) {
    auto [code, perm] = canonical(fr.rel, fr.n);
    (void)code;
    return relabel_frame(fr, perm);
}

std::vector<FiniteFrame> enumerate_frames(const EnumerationRequest& req) {
    if (req.n < 1) throw Error("frame size must be at least 1");
    if (req.n > req.cap) throw Error("frame size " + std::to_string(req.n) + " exceeds the cap " + std::to_string(req.cap));
    std::set<std::uint64_t> codes;
    switch (req.kind) {
        case FrameKind::POSET:
        case FrameKind::BI:
        case FrameKind::KM:
        case FrameKind::STRICT: codes = poset_codes(req.n); break;
        case FrameKind::PREORDER:
        case FrameKind::TENSE: codes = preorder_codes(req.n); break;
        case FrameKind::KRIPKE:
            if (req.n > 4) throw Error("KRIPKE enumeration is capped at 4 points");
            codes = kripke_codes(req.n);
            break;
    }
    std::vector<FiniteFrame> out;
    for (std::uint64_t c : codes) {
        FiniteFrame fr{req.kind, req.n, from_code(c, req.n), {}};
        if (req.kind == FrameKind::STRICT)
            for (int x = 0; x < fr.n; ++x) fr.rel[x] &= ~bit(x);
        if (req.kind == FrameKind::KM) {
            fr.rel2 = fr.rel;
            for (int x = 0; x < fr.n; ++x) fr.rel2[x] &= ~bit(x);
        }
        out.push_back(std::move(fr));
    }
    if (req.kind == FrameKind::STRICT) {
        // Removing the diagonal changes codes uniformly, but keep the contract
        // that each emitted matrix is itself canonical.
        for (auto& fr : out) fr = canonical_form(fr);
        std::sort(out.begin(), out.end(), [](const FiniteFrame& a, const FiniteFrame& b) {
            return canonical_code(a) < canonical_code(b);
        });
    }
    return out;
}

std::vector<FiniteFrame> enumerate_frames(int n, FrameKind kind) { return enumerate_frames(EnumerationRequest{n, kind}); }

std::vector<FiniteFrame> enumerate_frames_upto(int max_n, FrameKind kind) {
    std::vector<FiniteFrame> out;
    for (int n = 1; n <= max_n; ++n) {
        auto part = enumerate_frames(n, kind);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Valuation random_model(const FiniteAlgebra& alg, int atoms, std::uint64_t seed) {
    if (atoms < 1) throw Error("random_model needs at least one atom");
    Lcg g(seed);
    Valuation v;
    for (int i = 1; i <= atoms; ++i) v[i] = g.below(alg.n);
    return v;
}

PointValuation random_point_model(const FiniteFrame& fr, int atoms, std::uint64_t seed) {
    if (atoms < 1) throw Error("random_point_model needs at least one atom");
    Lcg g(seed);
    PointValuation v;
    bool up = fr.kind == FrameKind::POSET || fr.kind == FrameKind::BI || fr.kind == FrameKind::KM;
    std::vector<Mask> ups;
    if (up) ups = upsets(fr);
    for (int i = 1; i <= atoms; ++i) {
        if (up) {
            v[i] = ups[g.below(static_cast<int>(ups.size()))];
        } else {
            Mask m = 0;
            for (int x = 0; x < fr.n; ++x)
                if (g.next() & 1u) m |= bit(x);
            v[i] = m;
        }
    }
    return v;
}

}  // namespace scr
