#include "scr/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "scr/companions.hpp"
#include "scr/filtration.hpp"
#include "scr/frames.hpp"

namespace scr {

void SuiteResult::check(bool cond, const std::string& what) {
    ++checked;
    if (!cond) {
        if (failed == 0) first_failure = what;
        ++failed;
    }
}

void SuiteResult::count(const std::string& key, long by) {
    for (auto& [k, v] : counts)
        if (k == key) {
            v += by;
            return;
        }
    counts.emplace_back(key, by);
}

void SuiteResult::merge(const SuiteResult& o) {
    if (failed == 0 && o.failed > 0) first_failure = o.first_failure;
    checked += o.checked;
    failed += o.failed;
    for (auto& [k, v] : o.counts) count(k, v);
}

// ---------------------------------------------------------------- corpora

namespace {

std::vector<Rule> parse_all(Sig s, const std::vector<const char*>& texts) {
    std::vector<Rule> out;
    for (const char* t : texts) out.push_back(parse_rule(t, s));
    return out;
}

}  // namespace

const std::vector<Rule>& rule_corpus(Sig s) {
    static const std::vector<Rule> si = parse_all(Sig::SI, {
        "/ p1 | (p1 -> false)",
        "/ p1",
        "p1 / p1",
        "/ ((p1 -> p2) -> p1) -> p1",
        "/ (p1 -> p2) | (p2 -> p1)",
        "p1 | p2 / p1, p2",
        "(p1 -> false) -> p1 / p1",
        "/ (p1 -> false) | ((p1 -> false) -> false)",
        "p1 -> false / p1",
        "/ p1 -> p1",
        "/ false",
        "true / false",
        "p1, p1 -> p2 / p2",
        "/ p1 | (p1 -> p2)",
        "p1 -> p2 / p2 -> p1",
        "/ (p1 -> p2) | p1",
        "p1 & p2 / p1",
        "/ p1 & p2",
        "(p1 -> p2) -> p2 / p1 | p2",
        "p1 | (p1 -> false) / p1, p1 -> false",
    });
    static const std::vector<Rule> bsi = parse_all(Sig::BSI, {
        "/ p1 | (p1 -> false)",
        "/ (p1 -> p2) | (p2 -> p1)",
        "/ (true -< p1) -> false",
        "p1 -< p2 / p1",
        "/ p1 | (true -< p1)",
        "true -< p1 / p1 -> false",
        "p1 -< p2 / p2 -< p1",
        "/ (p1 -< p2) -> false",
        "p1 | p2 / p1, p2",
        "/ p1",
        "p1 / p1",
        "/ ((p1 -> p2) -> p1) -> p1",
        "p1 -> false / p1",
        "(p1 -< p2) -< p1 / p1",
        "/ (p1 -> false) | ((p1 -> false) -> false)",
        "p1 & (true -< p1) / false",
        "p1 -> p2 / p2 -> p1",
        "/ p1 -> (p2 | (p1 -< p2))",
        "true -< (true -< p1) / p1",
        "/ false",
    });
    static const std::vector<Rule> md = parse_all(Sig::MD, {
        "[]p1 / p1",
        "/ []p1 | ~p1",
        "p1 / []p1",
        "/ ~[]p1 | [][]p1",
        "/ ~[]p1 | p1",
        "/ []p1 | []~[]p1",
        "/ p1 | ~p1",
        "~[]p1 / p1",
        "[]p1 | []p2 / []p1, []p2",
        "/ ~[]false",
        "[]false / false",
        "/ []p1",
        "p1 / false",
        "[]p1 / [][]p1",
        "/ [](~[]p1 | p1)",
        "[](~[]p1 | p1) / p1",
        "~p1 / []~p1",
        "p1 | p2 / p1, p2",
        "/ []p1 | []~p1",
        "~[]p1 / ~p1",
    });
    static const std::vector<Rule> ten = parse_all(Sig::TEN, {
        "/ [F]p1 | ~[F]p1",
        "[F]p1 / p1",
        "/ ~[F]p1 | p1",
        "/ ~[F]p1 | [F][F]p1",
        "<P>p1 / p1",
        "/ ~p1 | <P>p1",
        "/ ~<P><P>p1 | <P>p1",
        "p1 / [F]p1",
        "p1 / ~<P>~p1",
        "/ ~p1 | [F]<P>p1",
        "/ ~p1 | [F]p1",
        "/ ~<P>p1 | [F]<P>p1",
        "[F]p1 | [F]p2 / [F]p1, [F]p2",
        "p1 | p2 / p1, p2",
        "/ p1",
        "p1 / p1",
        "<P>p1 / [F]p1",
        "/ ~[F]p1 | <P>p1",
        "p1 / false",
        "~[F]p1 / ~p1",
    });
    static const std::vector<Rule> msi = parse_all(Sig::MSI, {
        "/ [x]p1 -> p1",
        "/ p1 -> [x]p1",
        "/ ([x]p1 -> p1) -> p1",
        "[x]p1 / p1",
        "/ [x]p1 | ([x]p1 -> p1)",
        "/ p1 | (p1 -> false)",
        "/ [x]false",
        "[x]false / false",
        "/ (p1 -> p2) | (p2 -> p1)",
        "p1 | p2 / p1, p2",
        "/ p1",
        "p1 / p1",
        "/ [x][x]p1 -> [x]p1",
        "[x]p1 -> p1 / p1",
        "p1 -> false / p1",
        "/ ((p1 -> p2) -> p1) -> p1",
        "/ [x]p1 | ([x]p1 -> false)",
        "[x]p1 / [x]false",
        "p1 -> p2 / p2 -> p1",
        "/ false",
    });
    switch (s) {
        case Sig::SI: return si;
        case Sig::BSI: return bsi;
        case Sig::MD: return md;
        case Sig::TEN: return ten;
        case Sig::MSI: return msi;
    }
    return si;
}

// ---------------------------------------------------------------- embeddings

std::string embedding_violation(const FiniteAlgebra& H, const FiniteAlgebra& K, const DomainSpec& d,
                                const std::vector<int>& h) {
    if (static_cast<int>(h.size()) != H.n) return "map has the wrong length";
    for (int x : h)
        if (x < 0 || x >= K.n) return "map value out of range";
    for (int a = 0; a < H.n; ++a)
        for (int b = a + 1; b < H.n; ++b)
            if (h[a] == h[b]) return "not injective at " + std::to_string(a) + "," + std::to_string(b);
    if (h[H.zero] != K.zero || h[H.one] != K.one) return "bounds not preserved";
    for (int a = 0; a < H.n; ++a)
        for (int b = 0; b < H.n; ++b) {
            if (h[H.m(a, b)] != K.m(h[a], h[b])) return "meet not preserved";
            if (h[H.j(a, b)] != K.j(h[a], h[b])) return "join not preserved";
        }
    bool boolean = d.variant == Variant::MOD || d.variant == Variant::TEN || d.variant == Variant::MODPLUS;
    if (boolean)
        for (int a = 0; a < H.n; ++a)
            if (h[H.neg[a]] != K.neg[h[a]]) return "negation not preserved";
    StableCanonicalRule s = build_scr(H, d);
    Valuation v;
    for (int a = 0; a < H.n; ++a) v[a] = h[a];
    for (auto& p : s.rule.premises)
        if (evaluate(K, v, p) != K.one) return "premise fails: " + print_formula(p);
    return "";
}

namespace {

// Exact homomorphism on every table both algebras carry.
std::string homomorphism_violation(const FiniteAlgebra& H, const FiniteAlgebra& K, const std::vector<int>& h) {
    if (static_cast<int>(h.size()) != H.n) return "map has the wrong length";
    for (int a = 0; a < H.n; ++a)
        for (int b = a + 1; b < H.n; ++b)
            if (h[a] == h[b]) return "not injective";
    if (h[H.zero] != K.zero || h[H.one] != K.one) return "bounds not preserved";
    auto bin = [&](const std::vector<int>& hs, const std::vector<int>& ks, const char* name) -> std::string {
        if (hs.empty() || ks.empty()) return "";
        for (int a = 0; a < H.n; ++a)
            for (int b = 0; b < H.n; ++b)
                if (h[hs[a * H.n + b]] != ks[h[a] * K.n + h[b]]) return std::string(name) + " not preserved";
        return "";
    };
    auto un = [&](const std::vector<int>& hs, const std::vector<int>& ks, const char* name) -> std::string {
        if (hs.empty() || ks.empty()) return "";
        for (int a = 0; a < H.n; ++a)
            if (h[hs[a]] != ks[h[a]]) return std::string(name) + " not preserved";
        return "";
    };
    for (std::string e : {bin(H.meet, K.meet, "meet"), bin(H.join, K.join, "join"), bin(H.imp, K.imp, "imp"),
                          bin(H.coimp, K.coimp, "coimp"), un(H.neg, K.neg, "neg"), un(H.box, K.box, "box"),
                          un(H.boxF, K.boxF, "boxF"), un(H.diaP, K.diaP, "diaP"), un(H.boxdot, K.boxdot, "boxdot")})
        if (!e.empty()) return e;
    return "";
}

std::vector<FiniteAlgebra> duals(FrameKind k, int max_points) {
    std::vector<FiniteAlgebra> out;
    for (auto& fr : enumerate_frames_upto(max_points, k)) out.push_back(dual_algebra(fr));
    return out;
}

std::string describe(const FiniteAlgebra& a) { return class_name(a.cls) + "(" + std::to_string(a.n) + ")"; }

std::string describe(const FiniteFrame& fr) {
    std::ostringstream s;
    s << kind_name(fr.kind) << "[";
    for (int x = 0; x < fr.n; ++x) s << (x ? " " : "") << fr.rel[x];
    s << "]";
    return s.str();
}

bool boolean_variant(Variant v) { return v == Variant::MOD || v == Variant::TEN || v == Variant::MODPLUS; }

}  // namespace

DomainSpec random_domains(const FiniteAlgebra& alg, Variant v, Lcg& rng) {
    static const int densities[] = {0, 25, 50, 100};
    int pct = densities[rng.below(4)];
    auto pick = [&]() { return rng.below(100) < pct; };
    DomainSpec d;
    d.variant = v;
    auto pairs = [&](PairSet& s) {
        for (int a = 0; a < alg.n; ++a)
            for (int b = 0; b < alg.n; ++b)
                if (pick()) s.insert({a, b});
    };
    auto elems = [&](ElemSet& s) {
        for (int a = 0; a < alg.n; ++a)
            if (pick()) s.insert(a);
    };
    switch (v) {
        case Variant::SI: pairs(d.imp); break;
        case Variant::BSI: pairs(d.imp); pairs(d.coimp); break;
        case Variant::MSI:
            pairs(d.imp);
            elems(d.boxdot);
            for (int a : d.boxdot)
                for (int b = 0; b < alg.n; ++b) d.imp.insert({b, a});
            break;
        case Variant::MOD: elems(d.box); break;
        case Variant::TEN: elems(d.boxF); elems(d.diaP); break;
        case Variant::MODPLUS: elems(d.boxplus); elems(d.box); break;
    }
    return d;
}

Formula random_formula(Sig s, int depth, int atoms, Lcg& rng, bool boxplus) {
    std::vector<Op> ops;
    for (Op op : {Op::And, Op::Or, Op::Imp, Op::Coimp, Op::Neg, Op::Box, Op::BoxF, Op::DiaP, Op::BoxDot})
        if (licensed(s, op)) ops.push_back(op);
    auto leaf = [&]() -> Formula {
        int r = rng.below(atoms + 1);
        if (r < atoms) return mk_atom(s, r + 1);
        return rng.below(2) ? mk_bot(s) : mk_top(s);
    };
    if (depth <= 0 || rng.below(4) == 0) return leaf();
    if (boxplus && rng.below(4) == 0) return mk_boxplus(random_formula(s, depth - 1, atoms, rng, boxplus));
    Op op = ops[rng.below(static_cast<int>(ops.size()))];
    Formula a = random_formula(s, depth - 1, atoms, rng, boxplus);
    if (arity(op) == 1) return mk(op, a);
    return mk(op, a, random_formula(s, depth - 1, atoms, rng, boxplus));
}

// ---------------------------------------------------------------- suites

SuiteResult suite_duality(int max_poset, int max_preorder, int max_strict) {
    SuiteResult res;
    res.name = "duality";
    struct Case {
        FrameKind kind;
        int max;
        const char* cls;
    };
    const Case cases[] = {{FrameKind::POSET, max_poset, "HA"},      {FrameKind::BI, max_poset, "BIHA"},
                          {FrameKind::KM, max_poset, "FRT"},        {FrameKind::PREORDER, max_preorder, "S4"},
                          {FrameKind::TENSE, max_preorder, "TEN"},  {FrameKind::STRICT, max_strict, "MAG"}};
    for (const Case& c : cases) {
        for (int n = 1; n <= c.max; ++n) {
            auto frames = enumerate_frames(n, c.kind);
            res.count(kind_name(c.kind) + " n=" + std::to_string(n), static_cast<long>(frames.size()));
            for (auto& fr : frames) {
                std::string where = describe(fr);
                res.check(frame_violation(fr).empty(), "enumerated frame violates its kind: " + where);
                FiniteAlgebra A = dual_algebra(fr);
                ClassCheck cc = check_class(A, c.cls);
                res.check(cc.ok, "dual algebra of " + where + " fails " + c.cls + ": " + cc.failure);
                if (c.kind == FrameKind::PREORDER) {
                    bool proper = false;
                    for (auto& cl : clusters(fr)) proper |= cl.size() > 1;
                    res.check(check_class(A, "GRZ").ok == !proper, "GRZ membership disagrees with clusters: " + where);
                }
                FiniteFrame back = dual_frame(A);
                res.check(back.kind == fr.kind && find_frame_isomorphism(back, fr).has_value(),
                          "dual_frame(dual_algebra(F)) is not F: " + where);
                res.check(find_isomorphism(dual_algebra(back), A).has_value(),
                          "dual_algebra(dual_frame(A)) is not A: " + where);
            }
        }
    }
    return res;
}

namespace {

Sig method_sig(FiltrationMethod m) {
    switch (m) {
        case FiltrationMethod::SI: return Sig::SI;
        case FiltrationMethod::BSI: return Sig::BSI;
        case FiltrationMethod::FRT_WEAK: return Sig::MSI;
        case FiltrationMethod::TENSE: return Sig::TEN;
        default: return Sig::MD;
    }
}

const char* method_class(FiltrationMethod m) {
    switch (m) {
        case FiltrationMethod::SI: return "HA";
        case FiltrationMethod::BSI: return "BIHA";
        case FiltrationMethod::FRT_WEAK: return "FRT";
        case FiltrationMethod::S4: return "S4";
        case FiltrationMethod::TENSE: return "TEN";
        case FiltrationMethod::MAG_WEAK: return "K4";
    }
    return "";
}

std::vector<FiniteAlgebra> method_pool(FiltrationMethod m, int max_size) {
    switch (m) {
        case FiltrationMethod::MAG_WEAK: return bounded_algebras(Sig::MD, max_size, AlgClass::MAG);
        default: return bounded_algebras(method_sig(m), max_size);
    }
}

}  // namespace

SuiteResult suite_filtration(int instances, std::uint64_t seed, int max_algebra_size, int max_theta) {
    SuiteResult res;
    res.name = "filtration";
    const FiltrationMethod methods[] = {FiltrationMethod::SI,    FiltrationMethod::BSI,   FiltrationMethod::FRT_WEAK,
                                        FiltrationMethod::S4,    FiltrationMethod::TENSE, FiltrationMethod::MAG_WEAK};
    std::map<FiltrationMethod, std::vector<FiniteAlgebra>> pools;
    for (auto m : methods) pools[m] = method_pool(m, max_algebra_size);
    Lcg rng(seed);
    for (int i = 0; i < instances; ++i) {
        FiltrationMethod m = methods[i % 6];
        const auto& pool = pools[m];
        const FiniteAlgebra& alg = pool[rng.below(static_cast<int>(pool.size()))];
        Sig s = method_sig(m);
        std::vector<Formula> theta;
        do {
            int k = 1 + rng.below(2);
            std::vector<Formula> fs;
            for (int t = 0; t < k; ++t) fs.push_back(random_formula(s, 3, 2, rng, m == FiltrationMethod::MAG_WEAK));
            theta = subformula_closure(fs);
        } while (static_cast<int>(theta.size()) > max_theta);
        std::set<int> atoms;
        for (auto& f : theta) collect_atoms(f, atoms);
        Valuation v;
        for (int p : atoms) v[p] = rng.below(alg.n);
        std::string where = method_name(m) + " instance " + std::to_string(i) + " on " + describe(alg);
        FiltrationResult f;
        try {
            f = filtrate(alg, v, theta, m);
        } catch (const Error& e) {
            res.check(false, where + ": " + e.what());
            continue;
        }
        res.count(method_name(m));
        for (auto& phi : theta)
            res.check(f.inclusion[evaluate(f.alg, f.val, phi)] == evaluate(alg, v, phi),
                      where + ": values differ on " + print_formula(phi));
        ClassCheck cc = check_class(f.alg, method_class(m));
        res.check(cc.ok, where + ": output fails " + method_class(m) + ": " + cc.failure);
        std::string bad = embedding_violation(f.alg, alg, f.domains, f.inclusion);
        res.check(bad.empty(), where + ": inclusion is not stable: " + bad);
    }
    return res;
}

namespace {

struct VariantPools {
    Variant v;
    std::vector<FiniteAlgebra> sources, targets, samples;
};

std::vector<FiniteAlgebra> variant_algebras(Variant v, int size_bound) {
    switch (v) {
        case Variant::SI: return bounded_algebras(Sig::SI, size_bound);
        case Variant::BSI: return bounded_algebras(Sig::BSI, size_bound);
        case Variant::MSI: return bounded_algebras(Sig::MSI, size_bound);
        case Variant::TEN: return bounded_algebras(Sig::TEN, size_bound);
        case Variant::MODPLUS: return bounded_algebras(Sig::MD, size_bound, AlgClass::MAG);
        case Variant::MOD: {
            auto out = bounded_algebras(Sig::MD, size_bound);
            // Arbitrary relations, not only preorders.
            for (int n = 1; (1 << n) <= size_bound && n <= 2; ++n)
                for (auto& fr : enumerate_frames(n, FrameKind::KRIPKE)) {
                    if (is_reflexive(fr.rel) && is_transitive(fr.rel)) continue;
                    out.push_back(dual_algebra(fr));
                }
            return out;
        }
    }
    return {};
}

}  // namespace

SuiteResult suite_scr(int samples_per_variant, std::uint64_t seed, int max_target, int max_source) {
    SuiteResult res;
    res.name = "scr";
    Lcg rng(seed);
    for (Variant v : {Variant::SI, Variant::MOD, Variant::BSI, Variant::TEN, Variant::MSI, Variant::MODPLUS}) {
        std::string vn = variant_name(v);
        auto samples = variant_algebras(v, 8);
        for (int i = 0; i < samples_per_variant; ++i) {
            const FiniteAlgebra& alg = samples[rng.below(static_cast<int>(samples.size()))];
            DomainSpec d = random_domains(alg, v, rng);
            StableCanonicalRule s = build_scr(alg, d);
            Valuation id;
            for (int a = 0; a < alg.n; ++a) id[a] = a;
            std::string where = vn + " sample " + std::to_string(i) + " on " + describe(alg);
            res.check(refutes_under(alg, s.rule, id), where + ": identity valuation does not refute the rule");
            res.check(refutes_scr(alg, s), where + ": refutes_scr is false on the own algebra");
            res.count(vn + " self");
        }
        auto targets = variant_algebras(v, max_target);
        if (boolean_variant(v))
            for (auto& a : variant_algebras(v, 8))
                if (a.n == 8) targets.push_back(a);
        auto sources = variant_algebras(v, max_source);
        for (std::size_t si = 0; si < sources.size(); ++si) {
            const FiniteAlgebra& H = sources[si];
            std::vector<DomainSpec> specs;
            DomainSpec empty;
            empty.variant = v;
            specs.push_back(empty);
            for (int k = 0; k < 4; ++k) specs.push_back(random_domains(H, v, rng));
            for (auto& d : specs) {
                StableCanonicalRule s = build_scr(H, d);
                FiniteFrame hf = dual_frame(H);
                GeometricDomains g = geometric_domains(H, d);
                for (auto& K : targets) {
                    bool alg_side = refutes_scr(K, s);
                    ValidateOptions opt;
                    opt.max_atoms = 16;
                    bool brute = !validates(K, s.rule, opt).valid;
                    std::string where = vn + " source " + describe(H) + " target " + describe(K);
                    res.check(alg_side == brute, where + ": refutes_scr disagrees with validates");
                    bool geo = find_stable_surjection(dual_frame(K), hf, g).has_value();
                    res.check(geo == alg_side, where + ": stable surjection search disagrees with the embedding");
                    res.count(vn + " cross");
                }
            }
        }
    }
    return res;
}

namespace {

struct SigCase {
    Sig sig;
    std::optional<AlgClass> cls;
    FrameKind kind;
    const char* label;
};

const std::vector<SigCase>& sig_cases() {
    static const std::vector<SigCase> cases = {
        {Sig::SI, std::nullopt, FrameKind::POSET, "SI"},     {Sig::BSI, std::nullopt, FrameKind::BI, "BSI"},
        {Sig::MSI, std::nullopt, FrameKind::KM, "MSI"},      {Sig::MD, std::nullopt, FrameKind::PREORDER, "MD/S4"},
        {Sig::MD, AlgClass::MAG, FrameKind::STRICT, "MD/MAG"}, {Sig::TEN, std::nullopt, FrameKind::TENSE, "TEN"}};
    return cases;
}

}  // namespace

SuiteResult suite_rewrite(int bound, int max_target_points) {
    SuiteResult res;
    res.name = "rewrite";
    ValidateOptions opt;
    opt.max_atoms = 16;
    for (const SigCase& c : sig_cases()) {
        auto targets = duals(c.kind, max_target_points);
        const auto& corpus = rule_corpus(c.sig);
        for (std::size_t ri = 0; ri < corpus.size(); ++ri) {
            const Rule& r = corpus[ri];
            res.check(subformula_closure(r).size() <= 5, std::string(c.label) + " corpus rule " + print_rule(r) +
                                                             " has more than five subformulas");
            auto xi = rewrite_rule_bounded(r, bound, c.cls);
            res.count(std::string(c.label) + " scrs", static_cast<long>(xi.size()));
            for (auto& K : targets) {
                bool refuted = !validates(K, r, opt).valid;
                bool by_scr = false;
                for (auto& s : xi)
                    if (refutes_scr(K, s)) {
                        by_scr = true;
                        break;
                    }
                res.check(refuted == by_scr, std::string(c.label) + " rule " + print_rule(r) + " on " + describe(K) +
                                                 (refuted ? ": refuted but no rewritten rule is" : ": valid but a rewritten rule is refuted"));
                res.count(std::string(c.label) + " checks");
            }
        }
    }
    return res;
}

SuiteResult suite_translation(int max_s4, int max_ten, int max_mag, int max_ha) {
    SuiteResult res;
    res.name = "translation";
    struct Case {
        FrameKind kind;
        int max;
        Sig sig;
        const char* label;
    };
    for (const Case& c : {Case{FrameKind::PREORDER, max_s4, Sig::SI, "S4"}, Case{FrameKind::TENSE, max_ten, Sig::BSI, "TEN"},
                          Case{FrameKind::STRICT, max_mag, Sig::MSI, "MAG"}}) {
        for (auto& a : duals(c.kind, c.max))
            for (auto& r : rule_corpus(c.sig)) {
                CompanionReport rep = check_gtskeleton(a, r);
                res.check(rep.agree, std::string(c.label) + " " + describe(a) + " rule " + print_rule(r) + ": T(r) " +
                                         rep.left + " but rho " + rep.right);
                res.count(c.label);
            }
    }
    // The translation is faithful on the intuitionistic side as well.
    for (const Case& c : {Case{FrameKind::POSET, max_ha, Sig::SI, "HA"}, Case{FrameKind::BI, max_ha - 1, Sig::BSI, "BIHA"},
                          Case{FrameKind::KM, max_ha, Sig::MSI, "FRT"}}) {
        for (auto& h : duals(c.kind, c.max)) {
            FiniteAlgebra s = sigma_algebra(h);
            for (auto& r : rule_corpus(c.sig)) {
                bool l = validates(h, r).valid;
                bool rr = validates(s, godel_translate(r)).valid;
                res.check(l == rr, std::string(c.label) + " " + describe(h) + " rule " + print_rule(r) +
                                       ": validity not preserved by sigma and T");
                res.count(std::string(c.label) + " faithful");
            }
        }
    }
    return res;
}

SuiteResult suite_skeleton(int max_poset, int max_preorder) {
    SuiteResult res;
    res.name = "skeleton";
    struct Case {
        FrameKind kind;
        int max;
        const char* sigma_cls;
    };
    for (const Case& c : {Case{FrameKind::POSET, max_poset, "GRZ"}, Case{FrameKind::BI, max_poset, "GRZ.T"},
                          Case{FrameKind::KM, max_poset, "MAG"}}) {
        for (auto& x : duals(c.kind, c.max)) {
            CompanionReport rep = check_skeleton_identities(x);
            res.check(rep.left == "holds", "rho sigma is not the identity on " + describe(x));
            FiniteAlgebra s = sigma_algebra(x);
            ClassCheck cc = check_class(s, c.sigma_cls);
            res.check(cc.ok, "sigma of " + describe(x) + " fails " + c.sigma_cls + ": " + cc.failure);
            res.count(class_name(x.cls));
        }
    }
    for (auto [kind, max] : {std::pair{FrameKind::PREORDER, max_preorder}, std::pair{FrameKind::TENSE, max_preorder},
                             std::pair{FrameKind::STRICT, max_preorder}}) {
        for (auto& x : duals(kind, max)) {
            CompanionReport rep = check_skeleton_identities(x);
            std::string where = describe(x);
            res.check(rep.left == "holds", "sigma rho does not embed into " + where);
            if (rep.left == "holds") {
                std::string bad = homomorphism_violation(sigma_algebra(rho_algebra(x)), x, rep.map);
                res.check(bad.empty(), "sigma rho witness for " + where + " is not an embedding: " + bad);
            }
            res.count(class_name(x.cls));
        }
    }
    return res;
}

SuiteResult suite_collapse(int max_preorder, int samples_per_source, int max_expanded, std::uint64_t seed) {
    SuiteResult res;
    res.name = "collapse";
    Lcg rng(seed);
    struct Case {
        FrameKind kind;
        Variant v;
        int source_max, target_max;
    };
    for (const Case& c : {Case{FrameKind::PREORDER, Variant::MOD, std::min(3, max_preorder), max_preorder},
                          Case{FrameKind::TENSE, Variant::TEN, std::min(2, max_preorder), std::min(3, max_preorder)}}) {
        std::vector<StableCanonicalRule> rules;
        for (auto& src : duals(c.kind, c.source_max)) {
            DomainSpec empty;
            empty.variant = c.v;
            rules.push_back(build_scr(src, empty));
            for (int k = 0; k < samples_per_source; ++k) rules.push_back(build_scr(src, random_domains(src, c.v, rng)));
        }
        std::vector<StableCanonicalRule> collapsed;
        for (auto& s : rules) collapsed.push_back(collapse_scr(s));
        for (auto& X : enumerate_frames_upto(c.target_max, c.kind)) {
            FiniteAlgebra xa = dual_algebra(X);
            FiniteAlgebra ska = dual_algebra(skeleton_frame(X).frame);
            for (std::size_t i = 0; i < rules.size(); ++i) {
                if (!refutes_scr(xa, rules[i])) continue;
                res.check(refutes_scr(ska, collapsed[i]), "skeleton of " + describe(X) +
                                                              " validates the collapse of a rule the frame refutes");
                res.count(variant_name(c.v) + " refuted pairs");
            }
        }
    }
    // Cluster expansion followed by the skeleton gives the poset back along the projection.
    for (auto& P : enumerate_frames_upto(max_expanded, FrameKind::POSET)) {
        std::vector<int> sizes(P.n, 1);
        std::function<void(int, int)> go = [&](int i, int total) {
            if (i == P.n) {
                Expansion e = cluster_expansion(P, sizes);
                Skeleton sk = skeleton_frame(e.frame);
                std::vector<int> q(sk.frame.n, -1);
                bool ok = sk.frame.n == P.n;
                for (int x = 0; x < e.frame.n && ok; ++x) {
                    int& slot = q[sk.map[x]];
                    if (slot >= 0 && slot != e.projection[x]) ok = false;
                    slot = e.projection[x];
                }
                if (ok) {
                    std::vector<bool> used(P.n, false);
                    for (int s : q) {
                        if (s < 0 || used[s]) ok = false;
                        else used[s] = true;
                    }
                }
                for (int s = 0; s < sk.frame.n && ok; ++s)
                    for (int t = 0; t < sk.frame.n && ok; ++t)
                        if (sk.frame.r(s, t) != P.r(q[s], q[t])) ok = false;
                res.check(ok, "skeleton of the expansion of " + describe(P) + " is not the poset");
                res.count("expansions");
                return;
            }
            for (int k = 1; total + k + (P.n - i - 1) <= max_expanded; ++k) {
                sizes[i] = k;
                go(i + 1, total + k);
            }
        };
        go(0, 0);
    }
    return res;
}

SuiteResult suite_kmgl(int max_size) {
    SuiteResult res;
    res.name = "kmgl";
    for (auto& fr : enumerate_frames_upto(max_size, FrameKind::STRICT)) {
        FiniteAlgebra a = dual_algebra(fr);
        res.check(is_irreflexive(dual_frame(a).rel), "dual of the MAG algebra of " + describe(fr) + " is reflexive somewhere");
        res.count("MAG duals");
    }
    for (auto& fr : enumerate_frames_upto(max_size, FrameKind::KM)) {
        FiniteAlgebra a = dual_algebra(fr);
        FiniteFrame d = dual_frame(a);
        bool strict = static_cast<int>(d.rel2.size()) == d.n;
        for (int x = 0; x < d.n && strict; ++x) strict = d.rel2[x] == (d.rel[x] & ~bit(x));
        res.check(strict, "second relation of the FRT dual of " + describe(fr) + " is not the strict order");
        res.check(is_irreflexive(dual_frame(sigma_algebra(a)).rel), "sigma of " + describe(a) + " has a reflexive dual point");

        FiniteAlgebra ha = a;
        ha.cls = AlgClass::HA;
        ha.boxdot.clear();
        FiniteAlgebra fe = fronton_expand(ha);
        res.check(fe.boxdot == a.boxdot, "fronton_expand differs from the dual operator on " + describe(fr));
        // Pointwise KM conditions leave exactly one value for every element.
        bool unique = true;
        for (int x = 0; x < a.n && unique; ++x) {
            int hits = 0;
            for (int c = 0; c < a.n; ++c) {
                bool ok = a.leq(x, c) && a.leq(a.im(c, x), x);
                for (int b = 0; b < a.n && ok; ++b) ok = a.leq(c, a.j(b, a.im(b, x)));
                if (ok) hits += c == fe.boxdot[x] ? 1 : 2;
            }
            unique = hits == 1;
        }
        res.check(unique, "KM conditions admit a second operator on " + describe(fr));
        res.check(find_isomorphism(rho_algebra(sigma_algebra(a)), a).has_value(),
                  "rho sigma is not the identity on the fronton of " + describe(fr));
        res.count("FRT duals");
    }
    for (auto& fr : enumerate_frames_upto(max_size, FrameKind::STRICT)) {
        FiniteAlgebra a = dual_algebra(fr);
        for (auto& r : rule_corpus(Sig::MSI)) {
            CompanionReport rep = check_gtskeleton(a, r);
            res.check(rep.agree, "translation disagrees on " + describe(fr) + " for " + print_rule(r));
        }
        res.count("MAG translation checks", static_cast<long>(rule_corpus(Sig::MSI).size()));
    }
    return res;
}

std::vector<std::string> suite_names() {
    return {"duality", "filtration", "scr", "rewrite", "translation", "skeleton", "collapse", "kmgl"};
}

SuiteResult run_suite(const std::string& name, int max_size, std::uint64_t seed) {
    auto pick = [&](int dflt) { return max_size > 0 ? max_size : dflt; };
    if (name == "duality") {
        int m = pick(5);
        return suite_duality(m, m - 1, m - 1);
    }
    if (name == "filtration") return suite_filtration(600, seed, pick(8), 6);
    if (name == "scr") return suite_scr(200, seed, pick(6), std::min(4, pick(6)));
    if (name == "rewrite") return suite_rewrite(6, pick(4));
    if (name == "translation") {
        int m = pick(4);
        return suite_translation(m, m - 1, m, m);
    }
    if (name == "skeleton") {
        int m = pick(5);
        return suite_skeleton(m, m - 1);
    }
    if (name == "collapse") return suite_collapse(pick(4), 8, 6, seed);
    if (name == "kmgl") return suite_kmgl(pick(4));
    throw Error("unknown suite '" + name + "'");
}

}  // namespace scr
