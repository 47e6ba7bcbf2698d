#include "scr/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "scr/filtration.hpp"
#include "scr/gen.hpp"

namespace scr {

Sig variant_signature(Variant v) {
    switch (v) {
        case Variant::SI: return Sig::SI;
        case Variant::BSI: return Sig::BSI;
        case Variant::MSI: return Sig::MSI;
        case Variant::MOD:
        case Variant::MODPLUS: return Sig::MD;
        case Variant::TEN: return Sig::TEN;
    }
    return Sig::SI;
}

Variant default_variant(AlgClass c) {
    switch (c) {
        case AlgClass::DL:
        case AlgClass::HA: return Variant::SI;
        case AlgClass::BIHA: return Variant::BSI;
        case AlgClass::FRT: return Variant::MSI;
        case AlgClass::MA: return Variant::MOD;
        case AlgClass::TEN: return Variant::TEN;
        case AlgClass::MAG: return Variant::MODPLUS;
    }
    return Variant::SI;
}

namespace {

bool boolean_variant(Variant v) { return v == Variant::MOD || v == Variant::TEN || v == Variant::MODPLUS; }

void check_domains(const FiniteAlgebra& alg, const DomainSpec& d) {
    auto in = [&](int a) { return a >= 0 && a < alg.n; };
    for (auto [a, b] : d.imp)
        if (!in(a) || !in(b)) throw Error("domain pair out of range");
    for (auto [a, b] : d.coimp)
        if (!in(a) || !in(b)) throw Error("domain pair out of range");
    for (const ElemSet* s : {&d.box, &d.boxF, &d.diaP, &d.boxdot, &d.boxplus})
        for (int a : *s)
            if (!in(a)) throw Error("domain element out of range");
    bool lattice = !boolean_variant(d.variant);
    if (!lattice && (!d.imp_regions.empty() || !d.coimp_regions.empty()))
        throw Error("regions are only meaningful for SI and BSI rules");
    if ((d.variant == Variant::SI || d.variant == Variant::MSI) && !d.coimp.empty())
        throw Error("coimplication domain given to a rule without coimplication");
    if ((!d.coimp_regions.empty()) && d.variant != Variant::BSI) throw Error("coimp regions need a BSI rule");
    if (!d.imp_regions.empty() || !d.coimp_regions.empty()) {
        auto ji = join_irreducibles(alg);
        for (auto* rs : {&d.imp_regions, &d.coimp_regions})
            for (auto& reg : *rs)
                for (int a : reg)
                    if (std::find(ji.begin(), ji.end(), a) == ji.end())
                        throw Error("region member " + std::to_string(a) + " is not join-irreducible");
    }
    if (d.variant == Variant::MSI)
        for (int a : d.boxdot)
            for (int b = 0; b < alg.n; ++b)
                if (!d.imp.count({b, a}))
                    throw Error("MSI closure condition fails: " + std::to_string(a) + " is in the boxdot domain but (" +
                                std::to_string(b) + "," + std::to_string(a) + ") is not in the implication domain");
}

void require_variant_support(const FiniteAlgebra& alg, Variant v, const char* role) {
    if (!supports(alg, variant_signature(v)))
        throw Error(std::string(role) + " algebra of class " + class_name(alg.cls) + " cannot carry a " +
                    variant_name(v) + " rule");
    if (boolean_variant(v) && alg.neg.empty())
        throw Error(std::string(role) + " algebra has no negation");
}

int lower_cover(const FiniteAlgebra& alg, int j) {
    int acc = alg.zero;
    for (int y = 0; y < alg.n; ++y)
        if (y != j && alg.leq(y, j)) acc = alg.j(acc, y);
    return acc;
}

// Element whose dual set is the complement of the downset of the region.
int region_imp_target(const FiniteAlgebra& alg, const DualFrame& df, const std::vector<int>& reg) {
    Mask pts = 0;
    for (int a : reg)
        for (int x = 0; x < df.frame.n; ++x)
            if (df.points[x] == a) pts |= bit(x);
    Mask want = df.frame.all() & ~down_closure(df.frame, pts);
    for (int a = 0; a < alg.n; ++a)
        if (df.beta[a] == want) return a;
    throw Error("region target is not an element");
}

int region_coimp_source(const FiniteAlgebra& alg, const std::vector<int>& reg) {
    int acc = alg.zero;
    for (int a : reg) acc = alg.j(acc, a);
    return acc;
}

}  // namespace

StableCanonicalRule build_scr(const FiniteAlgebra& alg, const DomainSpec& d) {
    require_variant_support(alg, d.variant, "source");
    check_domains(alg, d);
    StableCanonicalRule out;
    out.alg = alg;
    out.domains = d;
    Sig s = variant_signature(d.variant);
    Rule& r = out.rule;
    r.sig = s;
    auto P = [&](int i) { return mk_atom(s, i); };
    auto iff = [&](Formula a, Formula b) { return mk_iff(s, std::move(a), std::move(b)); };
    auto imp = [&](Formula a, Formula b) { return mk_implies(s, std::move(a), std::move(b)); };
    int n = alg.n;
    auto lattice_clauses = [&]() {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                r.premises.push_back(iff(P(alg.m(a, b)), mk(Op::And, P(a), P(b))));
                r.premises.push_back(iff(P(alg.j(a, b)), mk(Op::Or, P(a), P(b))));
            }
    };
    if (!boolean_variant(d.variant)) {
        r.premises.push_back(iff(P(alg.zero), mk_bot(s)));
        r.premises.push_back(iff(P(alg.one), mk_top(s)));
        lattice_clauses();
        for (auto [a, b] : d.imp) r.premises.push_back(iff(P(alg.im(a, b)), mk(Op::Imp, P(a), P(b))));
        for (auto [a, b] : d.coimp) r.premises.push_back(iff(P(alg.co(a, b)), mk(Op::Coimp, P(a), P(b))));
        for (int a : d.boxdot) r.premises.push_back(iff(P(alg.boxdot[a]), mk(Op::BoxDot, P(a))));
        if (!d.imp_regions.empty() || !d.coimp_regions.empty()) {
            DualFrame df = dual_frame_full(alg);
            for (auto& reg : d.imp_regions) {
                Formula acc = mk_top(s);
                bool first = true;
                for (int j : reg) {
                    Formula c = mk(Op::Imp, P(j), P(lower_cover(alg, j)));
                    acc = first ? c : mk(Op::And, acc, c);
                    first = false;
                }
                r.premises.push_back(mk(Op::Imp, acc, P(region_imp_target(alg, df, reg))));
            }
            for (auto& reg : d.coimp_regions) {
                Formula acc = mk_bot(s);
                bool first = true;
                for (int j : reg) {
                    Formula c = mk(Op::Coimp, P(j), P(lower_cover(alg, j)));
                    acc = first ? c : mk(Op::Or, acc, c);
                    first = false;
                }
                r.premises.push_back(mk(Op::Imp, P(region_coimp_source(alg, reg)), acc));
            }
        }
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) r.conclusions.push_back(iff(P(a), P(b)));
    } else {
        for (int a = 0; a < n; ++a) r.premises.push_back(iff(P(alg.neg[a]), mk(Op::Neg, P(a))));
        lattice_clauses();
        switch (d.variant) {
            case Variant::MOD:
                for (int a = 0; a < n; ++a) r.premises.push_back(imp(P(alg.box[a]), mk(Op::Box, P(a))));
                for (int a : d.box) r.premises.push_back(imp(mk(Op::Box, P(a)), P(alg.box[a])));
                break;
            case Variant::TEN:
                for (int a = 0; a < n; ++a) r.premises.push_back(imp(P(alg.boxF[a]), mk(Op::BoxF, P(a))));
                for (int a : d.boxF) r.premises.push_back(imp(mk(Op::BoxF, P(a)), P(alg.boxF[a])));
                for (int a = 0; a < n; ++a) r.premises.push_back(imp(mk(Op::DiaP, P(a)), P(alg.diaP[a])));
                for (int a : d.diaP) r.premises.push_back(imp(P(alg.diaP[a]), mk(Op::DiaP, P(a))));
                break;
            case Variant::MODPLUS:
                for (int a = 0; a < n; ++a) r.premises.push_back(imp(P(alg.boxplus(a)), mk_boxplus(P(a))));
                for (int a : d.boxplus) r.premises.push_back(imp(mk_boxplus(P(a)), P(alg.boxplus(a))));
                for (int a : d.box) r.premises.push_back(iff(P(alg.box[a]), mk(Op::Box, P(a))));
                break;
            default: break;
        }
        for (int a = 0; a < n; ++a)
            if (a != alg.one) r.conclusions.push_back(P(a));
    }
    return out;
}

// ---------------------------------------------------------------- embeddings

std::optional<std::vector<int>> find_stable_embedding(const FiniteAlgebra& H, const FiniteAlgebra& K,
                                                      const DomainSpec& d, EmbedMode mode) {
    require_variant_support(H, d.variant, "source");
    require_variant_support(K, d.variant, "target");
    check_domains(H, d);
    bool boolean = boolean_variant(d.variant);
    bool full = mode == EmbedMode::Full;

    // Units generate the source by joins: atoms (Boolean) or join-irreducibles,
    // listed along a linear extension of the order.
    std::vector<int> units = boolean ? lattice_atoms(H) : join_irreducibles(H);
    auto height = [&](int x) {
        int c = 0;
        for (int y = 0; y < H.n; ++y) c += H.leq(y, x);
        return c;
    };
    std::stable_sort(units.begin(), units.end(), [&](int a, int b) { return height(a) < height(b); });
    int k = static_cast<int>(units.size());
    std::vector<std::vector<int>> below(H.n);
    std::vector<int> level(H.n, -1);
    for (int x = 0; x < H.n; ++x)
        for (int u = 0; u < k; ++u)
            if (H.leq(units[u], x)) {
                below[x].push_back(u);
                level[x] = u;
            }
    std::vector<std::vector<int>> born(k);  // elements whose image is fixed once unit u is placed
    std::vector<int> zero_level;
    for (int x = 0; x < H.n; ++x)
        if (level[x] >= 0) born[level[x]].push_back(x);

    using Check = std::function<bool(const std::vector<int>&)>;
    std::vector<std::vector<Check>> checks(k + 1);  // index level+1
    auto add = [&](std::initializer_list<int> elems, Check c) {
        int lv = -1;
        for (int e : elems) lv = std::max(lv, level[e]);
        checks[lv + 1].push_back(std::move(c));
    };

    if (!boolean) {
        PairSet imps = d.imp, coimps = d.coimp;
        ElemSet bds = d.boxdot;
        if (full) {
            imps.clear();
            coimps.clear();
            bds.clear();
            for (int a = 0; a < H.n; ++a) {
                for (int b = 0; b < H.n; ++b) {
                    if (!H.imp.empty()) imps.insert({a, b});
                    if (!H.coimp.empty() && !K.coimp.empty()) coimps.insert({a, b});
                }
                if (!H.boxdot.empty() && !K.boxdot.empty()) bds.insert(a);
            }
        }
        for (auto [a, b] : imps) {
            int c = H.im(a, b);
            add({a, b, c}, [&K, a, b, c](const std::vector<int>& h) { return h[c] == K.im(h[a], h[b]); });
        }
        for (auto [a, b] : coimps) {
            if (K.coimp.empty()) throw Error("target has no coimplication");
            int c = H.co(a, b);
            add({a, b, c}, [&K, a, b, c](const std::vector<int>& h) { return h[c] == K.co(h[a], h[b]); });
        }
        for (int a : bds) {
            if (K.boxdot.empty()) throw Error("target has no boxdot");
            int c = H.boxdot[a];
            add({a, c}, [&K, a, c](const std::vector<int>& h) { return h[c] == K.boxdot[h[a]]; });
        }
        if (!d.imp_regions.empty() || !d.coimp_regions.empty()) {
            DualFrame df = dual_frame_full(H);
            std::vector<int> all(H.n);
            std::iota(all.begin(), all.end(), 0);
            for (auto& reg : d.imp_regions) {
                int e = region_imp_target(H, df, reg);
                std::vector<std::pair<int, int>> js;
                for (int j : reg) js.push_back({j, lower_cover(H, j)});
                checks[k].push_back([&K, e, js](const std::vector<int>& h) {
                    int acc = K.one;
                    for (auto [j, l] : js) acc = K.m(acc, K.im(h[j], h[l]));
                    return K.leq(acc, h[e]);
                });
            }
            for (auto& reg : d.coimp_regions) {
                if (K.coimp.empty()) throw Error("target has no coimplication");
                int e = region_coimp_source(H, reg);
                std::vector<std::pair<int, int>> js;
                for (int j : reg) js.push_back({j, lower_cover(H, j)});
                checks[k].push_back([&K, e, js](const std::vector<int>& h) {
                    int acc = K.zero;
                    for (auto [j, l] : js) acc = K.j(acc, K.co(h[j], h[l]));
                    return K.leq(h[e], acc);
                });
            }
        }
    } else {
        auto in_or_full = [&](const ElemSet& s, int a) { return full || s.count(a) > 0; };
        for (int a = 0; a < H.n; ++a) {
            switch (d.variant) {
                case Variant::MOD: {
                    int c = H.box[a];
                    bool eq = in_or_full(d.box, a);
                    add({a, c}, [&K, a, c, eq](const std::vector<int>& h) {
                        return eq ? h[c] == K.box[h[a]] : K.leq(h[c], K.box[h[a]]);
                    });
                    break;
                }
                case Variant::TEN: {
                    int c = H.boxF[a];
                    bool eq = in_or_full(d.boxF, a);
                    add({a, c}, [&K, a, c, eq](const std::vector<int>& h) {
                        return eq ? h[c] == K.boxF[h[a]] : K.leq(h[c], K.boxF[h[a]]);
                    });
                    int e = H.diaP[a];
                    bool eq2 = in_or_full(d.diaP, a);
                    add({a, e}, [&K, a, e, eq2](const std::vector<int>& h) {
                        return eq2 ? h[e] == K.diaP[h[a]] : K.leq(K.diaP[h[a]], h[e]);
                    });
                    break;
                }
                case Variant::MODPLUS: {
                    int c = H.boxplus(a);
                    bool eq = in_or_full(d.boxplus, a);
                    add({a, c}, [&K, a, c, eq](const std::vector<int>& h) {
                        return eq ? h[c] == K.boxplus(h[a]) : K.leq(h[c], K.boxplus(h[a]));
                    });
                    if (in_or_full(d.box, a)) {
                        int e = H.box[a];
                        add({a, e}, [&K, a, e](const std::vector<int>& h) { return h[e] == K.box[h[a]]; });
                    }
                    break;
                }
                default: break;
            }
        }
    }

    std::vector<int> h(H.n, -1);
    h[H.zero] = K.zero;
    std::vector<int> img(k, -1);
    auto ok_at = [&](int lv) {
        for (auto& c : checks[lv])
            if (!c(h)) return false;
        return true;
    };
    if (!ok_at(0)) return std::nullopt;
    std::optional<std::vector<int>> result;
    int placed_join = K.zero;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) {
            if (h[H.one] != K.one) return false;
            if (!boolean) {
                std::vector<char> seen(K.n, 0);
                for (int x = 0; x < H.n; ++x) {
                    if (seen[h[x]]) return false;
                    seen[h[x]] = 1;
                }
            }
            return true;
        }
        int saved_join = placed_join;
        for (int c = 0; c < K.n; ++c) {
            if (c == K.zero) continue;
            if (boolean) {
                if (K.m(c, placed_join) != K.zero) continue;
                if (i == k - 1 && K.j(c, placed_join) != K.one) continue;
            } else {
                bool ok = true;
                for (int t = 0; t < i && ok; ++t) {
                    int ut = units[t], ui = units[i];
                    if (H.leq(ut, ui) != K.leq(img[t], c)) ok = false;
                    else if (H.leq(ui, ut) != K.leq(c, img[t])) ok = false;
                }
                if (!ok) continue;
            }
            img[i] = c;
            for (int x : born[i]) {
                int acc = K.zero;
                for (int u : below[x]) acc = K.j(acc, img[u]);
                h[x] = acc;
            }
            bool ok = true;
            if (!boolean) {
                // Meets of units are generated by earlier units.
                for (int t = 0; t < i && ok; ++t) {
                    int mm = H.m(units[t], units[i]);
                    if (h[mm] != K.m(img[t], c)) ok = false;
                }
            }
            if (ok && ok_at(i + 1)) {
                placed_join = K.j(saved_join, c);
                if (self(self, i + 1)) return true;
                placed_join = saved_join;
            }
        }
        img[i] = -1;
        return false;
    };
    if (rec(rec, 0)) result = h;
    return result;
}

bool refutes_scr(const FiniteAlgebra& tgt, const StableCanonicalRule& scr) {
    return find_stable_embedding(scr.alg, tgt, scr.domains).has_value();
}

// ---------------------------------------------------------------- geometry

GeometricDomains geometric_domains(const FiniteAlgebra& alg, const DomainSpec& d) {
    check_domains(alg, d);
    DualFrame df = dual_frame_full(alg);
    GeometricDomains g;
    g.variant = d.variant;
    Mask all = df.frame.all();
    auto region = [&](const std::vector<int>& reg) {
        Mask m = 0;
        for (int a : reg)
            for (int x = 0; x < df.frame.n; ++x)
                if (df.points[x] == a) m |= bit(x);
        return m;
    };
    for (auto [a, b] : d.imp) g.up_back.push_back(df.beta[a] & ~df.beta[b]);
    for (auto& reg : d.imp_regions) g.up_back.push_back(region(reg));
    for (auto [a, b] : d.coimp) g.down_back.push_back(df.beta[a] & ~df.beta[b]);
    for (auto& reg : d.coimp_regions) g.down_back.push_back(region(reg));
    for (int a : d.boxdot) g.sq_back_forth.push_back(all & ~df.beta[a]);
    switch (d.variant) {
        case Variant::MOD:
            for (int a : d.box) g.r_back.push_back(all & ~df.beta[a]);
            break;
        case Variant::TEN:
            for (int a : d.boxF) g.r_back.push_back(all & ~df.beta[a]);
            for (int a : d.diaP) g.conv_back.push_back(df.beta[a]);
            break;
        case Variant::MODPLUS:
            for (int a : d.boxplus) g.plus_back.push_back(all & ~df.beta[a]);
            for (int a : d.box) g.r_back_forth.push_back(all & ~df.beta[a]);
            break;
        default: break;
    }
    return g;
}

std::optional<std::vector<int>> find_stable_surjection(const FiniteFrame& X, const FiniteFrame& F,
                                                       const GeometricDomains& g) {
    bool lattice = !boolean_variant(g.variant);
    bool plus = g.variant == Variant::MODPLUS;
    bool need_sq = !g.sq_back_forth.empty();
    if (need_sq && (X.rel2.empty() || F.rel2.empty())) throw Error("boxdot domains need KM frames");
    if (lattice) {
        if (!frame_supports(X, Sig::SI) || !frame_supports(F, Sig::SI))
            throw Error("si-style surjections need order frames");
    } else if ((X.kind == FrameKind::POSET) != (F.kind == FrameKind::POSET) || X.kind == FrameKind::POSET) {
        throw Error("modal surjections need relational frames");
    }
    auto reflexive_closure = [](const FiniteFrame& fr) {
        std::vector<Mask> r = fr.rel;
        for (int x = 0; x < fr.n; ++x) r[x] |= bit(x);
        return r;
    };
    std::vector<Mask> RX = plus ? reflexive_closure(X) : X.rel;
    std::vector<Mask> RF = plus ? reflexive_closure(F) : F.rel;
    std::vector<Mask> RXc = converse(X.rel), RFc = converse(F.rel);
    std::vector<int> f(X.n, -1);
    auto img = [&](Mask s) {
        Mask out = 0;
        for (int y : mask_elements(s)) out |= bit(f[y]);
        return out;
    };
    auto back = [&](const std::vector<Mask>& TX, const std::vector<Mask>& TF, Mask dset) {
        for (int x = 0; x < X.n; ++x)
            if ((TF[f[x]] & dset) && !(img(TX[x]) & dset)) return false;
        return true;
    };
    auto forth = [&](const std::vector<Mask>& TX, const std::vector<Mask>& TF, Mask dset) {
        for (int x = 0; x < X.n; ++x)
            if ((img(TX[x]) & dset) && !(TF[f[x]] & dset)) return false;
        return true;
    };
    auto leaf = [&]() {
        Mask hit = 0;
        for (int x = 0; x < X.n; ++x) hit |= bit(f[x]);
        if (hit != F.all()) return false;
        for (Mask m : g.up_back)
            if (!back(X.rel, F.rel, m)) return false;
        for (Mask m : g.down_back)
            if (!back(RXc, RFc, m)) return false;
        for (Mask m : g.r_back)
            if (!back(X.rel, F.rel, m)) return false;
        for (Mask m : g.conv_back)
            if (!back(RXc, RFc, m)) return false;
        for (Mask m : g.sq_back_forth)
            if (!back(X.rel2, F.rel2, m) || !forth(X.rel2, F.rel2, m)) return false;
        for (Mask m : g.plus_back)
            if (!back(RX, RF, m)) return false;
        for (Mask m : g.r_back_forth)
            if (!back(X.rel, F.rel, m) || !forth(X.rel, F.rel, m)) return false;
        return true;
    };
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == X.n) return leaf();
        for (int c = 0; c < F.n; ++c) {
            bool ok = true;
            for (int t = 0; t <= i && ok; ++t) {
                int ft = t == i ? c : f[t];
                if (has(RX[i], t) && !has(RF[c], ft)) ok = false;
                if (has(RX[t], i) && !has(RF[ft], c)) ok = false;
            }
            if (!ok) continue;
            f[i] = c;
            if (self(self, i + 1)) return true;
        }
        f[i] = -1;
        return false;
    };
    if (rec(rec, 0)) return f;
    return std::nullopt;
}

// ---------------------------------------------------------------- rewriting

StableCanonicalRule rewrite_rule(const Rule& r, const FiniteAlgebra& alg, const Valuation& v) {
    if (!refutes_under(alg, r, v)) throw Error("the countermodel does not refute the rule");
    FiltrationMethod m = method_for(r.sig, alg.cls);
    FiltrationResult f = filtrate(alg, v, subformula_closure(r), m);
    return build_scr(f.alg, f.domains);
}

std::vector<FiniteAlgebra> bounded_algebras(Sig s, int size_bound, std::optional<AlgClass> cls) {
    if (size_bound < 2) throw Error("size bound must be at least 2");
    std::vector<FiniteAlgebra> out;
    auto from_kind = [&](FrameKind k, int max_points) {
        for (int n = 1; n <= max_points; ++n)
            for (auto& fr : enumerate_frames(n, k)) {
                if (k == FrameKind::POSET || k == FrameKind::BI || k == FrameKind::KM) {
                    if (static_cast<int>(upsets(fr).size()) > size_bound) continue;
                } else if ((1 << n) > size_bound) {
                    continue;
                }
                out.push_back(dual_algebra(fr));
            }
    };
    int order_points = std::min(size_bound - 1, 6);
    int bool_points = 0;
    while ((1 << (bool_points + 1)) <= size_bound && bool_points < 6) ++bool_points;
    switch (s) {
        case Sig::SI: from_kind(FrameKind::POSET, order_points); break;
        case Sig::BSI: from_kind(FrameKind::BI, order_points); break;
        case Sig::MSI: from_kind(FrameKind::KM, order_points); break;
        case Sig::TEN: from_kind(FrameKind::TENSE, bool_points); break;
        case Sig::MD:
            from_kind(cls && *cls == AlgClass::MAG ? FrameKind::STRICT : FrameKind::PREORDER, bool_points);
            break;
    }
    return out;
}

bool isomorphic_scr(const StableCanonicalRule& a, const StableCanonicalRule& b) {
    if (a.domains.variant != b.domains.variant || a.alg.n != b.alg.n) return false;
    bool found = false;
    for_each_isomorphism(a.alg, b.alg, [&](const std::vector<int>& h) {
        if (map_domains(a.domains, h) == b.domains) found = true;
        return found;
    });
    return found;
}

std::vector<StableCanonicalRule> rewrite_rule_bounded(const Rule& r, int size_bound, std::optional<AlgClass> cls) {
    std::vector<StableCanonicalRule> out;
    std::set<int> atoms = rule_atoms(r);
    std::vector<int> order(atoms.begin(), atoms.end());
    std::vector<Formula> theta = subformula_closure(r);
    for (const FiniteAlgebra& alg : bounded_algebras(r.sig, size_bound, cls)) {
        FiltrationMethod m = method_for(r.sig, alg.cls);
        std::vector<int> vals(order.size(), 0);
        std::set<std::pair<std::vector<int>, DomainSpec>> seen;
        for (;;) {
            Valuation v;
            for (std::size_t i = 0; i < order.size(); ++i) v[order[i]] = vals[i];
            if (refutes_under(alg, r, v)) {
                FiltrationResult f = filtrate(alg, v, theta, m);
                if (seen.insert({f.inclusion, f.domains}).second) {
                    StableCanonicalRule s = build_scr(f.alg, f.domains);
                    bool dup = false;
                    for (auto& o : out)
                        if (isomorphic_scr(o, s)) {
                            dup = true;
                            break;
                        }
                    if (!dup) out.push_back(std::move(s));
                }
            }
            std::size_t i = 0;
            while (i < vals.size() && ++vals[i] == alg.n) vals[i++] = 0;
            if (i == vals.size()) break;
        }
    }
    return out;
}

// ---------------------------------------------------------------- collapse

StableCanonicalRule collapse_scr(const StableCanonicalRule& scr) {
    const DomainSpec& d = scr.domains;
    if (d.variant != Variant::MOD && d.variant != Variant::TEN)
        throw Error("collapse needs a MOD or TEN rule");
    DualFrame df = dual_frame_full(scr.alg);
    if (d.variant == Variant::MOD && df.frame.kind != FrameKind::PREORDER)
        throw Error("collapse needs a source algebra whose dual is a preorder");
    if (d.variant == Variant::TEN && df.frame.kind != FrameKind::TENSE)
        throw Error("collapse needs a tense source algebra");
    if (!is_reflexive(df.frame.rel) || !is_transitive(df.frame.rel))
        throw Error("collapse needs a reflexive transitive dual");
    Skeleton sk = skeleton_frame(df.frame);
    DualAlgebra da = dual_algebra_full(sk.frame);
    auto rho_region = [&](Mask pts) {
        std::vector<int> reg;
        Mask img = 0;
        for (int x : mask_elements(pts)) img |= bit(sk.map[x]);
        for (int p : mask_elements(img)) reg.push_back(da.index_of(up_closure(sk.frame, bit(p))));
        std::sort(reg.begin(), reg.end());
        return reg;
    };
    DomainSpec out;
    out.variant = d.variant == Variant::MOD ? Variant::SI : Variant::BSI;
    Mask all = df.frame.all();
    const ElemSet& boxes = d.variant == Variant::MOD ? d.box : d.boxF;
    for (int a : boxes) out.imp_regions.push_back(rho_region(all & ~df.beta[a]));
    for (int a : d.diaP) out.coimp_regions.push_back(rho_region(df.beta[a]));
    auto norm = [](std::vector<std::vector<int>>& rs) {
        std::sort(rs.begin(), rs.end());
        rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    };
    norm(out.imp_regions);
    norm(out.coimp_regions);
    return build_scr(da.alg, out);
}

}  // namespace scr
