#pragma once

// Brute-force reference computations. Nothing here calls the search code of
// the library; only the data types are shared.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "scr/algebra.hpp"
#include "scr/domains.hpp"
#include "scr/frames.hpp"

namespace oracle {

using scr::FiniteAlgebra;

// Relation on n points as an n*n 0/1 matrix, row-major.
using Matrix = std::vector<int>;

inline bool reflexive(const Matrix& m, int n) {
    for (int i = 0; i < n; ++i)
        if (!m[i * n + i]) return false;
    return true;
}

inline bool irreflexive(const Matrix& m, int n) {
    for (int i = 0; i < n; ++i)
        if (m[i * n + i]) return false;
    return true;
}

inline bool transitive(const Matrix& m, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i * n + j])
                for (int k = 0; k < n; ++k)
                    if (m[j * n + k] && !m[i * n + k]) return false;
    return true;
}

inline bool antisymmetric(const Matrix& m, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && m[i * n + j] && m[j * n + i]) return false;
    return true;
}

inline std::uint64_t code_under(const Matrix& m, int n, const std::vector<int>& p) {
    std::uint64_t c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c = (c << 1) | static_cast<std::uint64_t>(m[p[i] * n + p[j]]);
    return c;
}

inline std::uint64_t min_code(const Matrix& m, int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do best = std::min(best, code_under(m, n, p));
    while (std::next_permutation(p.begin(), p.end()));
    return best;
}

enum class Kind { Poset, Preorder, Strict };

// Number of relations of the kind on n points up to isomorphism, by
// enumerating every matrix and rejecting isomorphic copies.
inline long count_classes(int n, Kind kind) {
    std::set<std::uint64_t> seen;
    int free_bits = n * n - n;
    Matrix m(n * n, 0);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free_bits); ++bits) {
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    m[i * n + j] = kind == Kind::Strict ? 0 : 1;
                else
                    m[i * n + j] = static_cast<int>((bits >> b++) & 1u);
            }
        if (!transitive(m, n)) continue;
        if (kind != Kind::Preorder && !antisymmetric(m, n)) continue;
        seen.insert(min_code(m, n));
    }
    return static_cast<long>(seen.size());
}

inline bool same_table2(const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& p, int n) {
    if (x.empty() != y.empty()) return false;
    if (x.empty()) return true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p[x[a * n + b]] != y[p[a] * n + p[b]]) return false;
    return true;
}

inline bool same_table1(const std::vector<int>& x, const std::vector<int>& y, const std::vector<int>& p, int n) {
    if (x.empty() != y.empty()) return false;
    for (int a = 0; a < n && !x.empty(); ++a)
        if (p[x[a]] != y[p[a]]) return false;
    return true;
}

// Tries all n! bijections.
inline bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.n != b.n) return false;
    int n = a.n;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (p[a.zero] != b.zero || p[a.one] != b.one) continue;
        if (same_table2(a.meet, b.meet, p, n) && same_table2(a.join, b.join, p, n) && same_table2(a.imp, b.imp, p, n) &&
            same_table2(a.coimp, b.coimp, p, n) && same_table1(a.neg, b.neg, p, n) && same_table1(a.box, b.box, p, n) &&
            same_table1(a.boxF, b.boxF, p, n) && same_table1(a.diaP, b.diaP, p, n) &&
            same_table1(a.boxdot, b.boxdot, p, n))
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline bool leq(const FiniteAlgebra& a, int x, int y) { return a.meet[x * a.n + y] == x; }

// a -> b as the largest c with a & c <= b.
inline int heyting_imp(const FiniteAlgebra& a, int x, int y) {
    int best = -1;
    for (int c = 0; c < a.n; ++c)
        if (leq(a, a.meet[x * a.n + c], y) && (best < 0 || leq(a, best, c))) best = c;
    return best;
}

// a -< b as the smallest c with a <= b | c.
inline int heyting_coimp(const FiniteAlgebra& a, int x, int y) {
    int best = -1;
    for (int c = 0; c < a.n; ++c)
        if (leq(a, x, a.join[y * a.n + c]) && (best < 0 || leq(a, c, best))) best = c;
    return best;
}

// Stable embedding with the domain conditions, straight from the
// definitions, over every injective map. Regions are not handled.
inline bool stable_embedding_exists(const FiniteAlgebra& H, const FiniteAlgebra& K, const scr::DomainSpec& d) {
    using scr::Variant;
    if (H.n > K.n) return false;
    bool boolean = d.variant == Variant::MOD || d.variant == Variant::TEN || d.variant == Variant::MODPLUS;
    std::vector<int> h(H.n, 0);
    auto ok = [&]() {
        for (int a = 0; a < H.n; ++a)
            for (int b = a + 1; b < H.n; ++b)
                if (h[a] == h[b]) return false;
        if (h[H.zero] != K.zero || h[H.one] != K.one) return false;
        for (int a = 0; a < H.n; ++a)
            for (int b = 0; b < H.n; ++b)
                if (h[H.meet[a * H.n + b]] != K.meet[h[a] * K.n + h[b]] ||
                    h[H.join[a * H.n + b]] != K.join[h[a] * K.n + h[b]])
                    return false;
        if (boolean)
            for (int a = 0; a < H.n; ++a)
                if (h[H.neg[a]] != K.neg[h[a]]) return false;
        auto kleq = [&](int x, int y) { return leq(K, x, y); };
        auto kbp = [&](int x) { return K.meet[K.box[x] * K.n + x]; };
        for (auto [a, b] : d.imp)
            if (h[H.imp[a * H.n + b]] != K.imp[h[a] * K.n + h[b]]) return false;
        for (auto [a, b] : d.coimp)
            if (h[H.coimp[a * H.n + b]] != K.coimp[h[a] * K.n + h[b]]) return false;
        for (int a : d.boxdot)
            if (h[H.boxdot[a]] != K.boxdot[h[a]]) return false;
        switch (d.variant) {
            case Variant::MOD:
                for (int a = 0; a < H.n; ++a)
                    if (!kleq(h[H.box[a]], K.box[h[a]])) return false;
                for (int a : d.box)
                    if (h[H.box[a]] != K.box[h[a]]) return false;
                break;
            case Variant::TEN:
                for (int a = 0; a < H.n; ++a) {
                    if (!kleq(h[H.boxF[a]], K.boxF[h[a]])) return false;
                    if (!kleq(K.diaP[h[a]], h[H.diaP[a]])) return false;
                }
                for (int a : d.boxF)
                    if (h[H.boxF[a]] != K.boxF[h[a]]) return false;
                for (int a : d.diaP)
                    if (h[H.diaP[a]] != K.diaP[h[a]]) return false;
                break;
            case Variant::MODPLUS:
                for (int a = 0; a < H.n; ++a)
                    if (!kleq(h[H.meet[H.box[a] * H.n + a]], kbp(h[a]))) return false;
                for (int a : d.boxplus)
                    if (h[H.meet[H.box[a] * H.n + a]] != kbp(h[a])) return false;
                for (int a : d.box)
                    if (h[H.box[a]] != K.box[h[a]]) return false;
                break;
            default: break;
        }
        return true;
    };
    for (;;) {
        if (ok()) return true;
        int i = 0;
        while (i < H.n && ++h[i] == K.n) h[i++] = 0;
        if (i == H.n) return false;
    }
}

}  // namespace oracle
