#include "scr/companions.hpp"

#include <algorithm>

#include "scr/canonical.hpp"

namespace scr {

Sig translation_target(Sig from) {
    switch (from) {
        case Sig::SI:
        case Sig::MSI: return Sig::MD;
        case Sig::BSI: return Sig::TEN;
        default: throw Error("no Goedel translation from signature " + sig_name(from));
    }
}

Formula godel_translate(const Formula& f, Sig from) {
    if (f->sig != from) throw Error("formula signature does not match the translation source");
    Sig to = translation_target(from);
    auto box = [&](Formula x) {
        switch (from) {
            case Sig::SI: return mk(Op::Box, std::move(x));
            case Sig::BSI: return mk(Op::BoxF, std::move(x));
            default: return mk_boxplus(std::move(x));
        }
    };
    auto go = [&](auto&& self, const Formula& g) -> Formula {
        switch (g->op) {
            case Op::Atom: return box(mk_atom(to, g->atom));
            case Op::Bot: return mk_bot(to);
            case Op::Top: return mk_top(to);
            case Op::And: return mk(Op::And, self(self, g->a), self(self, g->b));
            case Op::Or: return mk(Op::Or, self(self, g->a), self(self, g->b));
            case Op::Imp: return box(mk(Op::Or, mk(Op::Neg, self(self, g->a)), self(self, g->b)));
            case Op::Coimp: return mk(Op::DiaP, mk(Op::And, self(self, g->a), mk(Op::Neg, self(self, g->b))));
            case Op::BoxDot: return mk(Op::Box, self(self, g->a));
            default: throw Error("connective outside the translation source");
        }
    };
    return go(go, f);
}

Rule godel_translate(const Rule& r) {
    Rule out;
    out.sig = translation_target(r.sig);
    for (auto& g : r.premises) out.premises.push_back(godel_translate(g, r.sig));
    for (auto& d : r.conclusions) out.conclusions.push_back(godel_translate(d, r.sig));
    return out;
}

FiniteAlgebra sigma_algebra(const FiniteAlgebra& h) {
    if (h.cls != AlgClass::HA && h.cls != AlgClass::BIHA && h.cls != AlgClass::FRT)
        throw Error("sigma needs an HA, BIHA or FRT algebra");
    BooleanExtension ext = free_boolean_extension(h);
    FiniteAlgebra B = ext.ba;
    int n = B.n;
    B.imp.clear();
    // Largest image below a, smallest image above a.
    std::vector<int> interior(n), closure(n);
    for (int a = 0; a < n; ++a) {
        int lo = -1, hi = -1;
        for (int x = 0; x < h.n; ++x) {
            int e = ext.embedding[x];
            if ((e & ~a) == 0 && (lo < 0 || h.leq(lo, x))) lo = x;
            if ((a & ~e) == 0 && (hi < 0 || h.leq(x, hi))) hi = x;
        }
        interior[a] = lo;
        closure[a] = hi;
    }
    switch (h.cls) {
        case AlgClass::HA:
            B.cls = AlgClass::MA;
            B.box.resize(n);
            for (int a = 0; a < n; ++a) B.box[a] = ext.embedding[interior[a]];
            break;
        case AlgClass::BIHA:
            B.cls = AlgClass::TEN;
            B.boxF.resize(n);
            B.diaP.resize(n);
            for (int a = 0; a < n; ++a) {
                B.boxF[a] = ext.embedding[interior[a]];
                B.diaP[a] = ext.embedding[closure[a]];
            }
            break;
        default:
            B.cls = AlgClass::MAG;
            B.box.resize(n);
            for (int a = 0; a < n; ++a) B.box[a] = ext.embedding[h.boxdot[interior[a]]];
            break;
    }
    return B;
}

std::pair<FiniteAlgebra, std::vector<int>> rho_algebra_with_inclusion(const FiniteAlgebra& a) {
    AlgClass out_cls;
    switch (a.cls) {
        case AlgClass::MA: {
            ClassCheck c = check_class(a, "S4");
            if (!c.ok) throw Error("rho needs an S4 algebra: " + c.failure);
            out_cls = AlgClass::HA;
            break;
        }
        case AlgClass::TEN: out_cls = AlgClass::BIHA; break;
        case AlgClass::MAG: out_cls = AlgClass::FRT; break;
        default: throw Error("rho needs an MA, TEN or MAG algebra");
    }
    std::vector<int> O = open_elements(a);
    FiniteAlgebra R = restrict_lattice(a, O, false);
    R.cls = out_cls;
    std::vector<int> idx(a.n, -1);
    for (std::size_t i = 0; i < O.size(); ++i) idx[O[i]] = static_cast<int>(i);
    int m = static_cast<int>(O.size());
    auto at = [&](int x) {
        if (idx[x] < 0) throw Error("rho: operation leaves the open elements");
        return idx[x];
    };
    auto interior = [&](int x) {
        if (a.cls == AlgClass::MA) return a.box[x];
        if (a.cls == AlgClass::TEN) return a.boxF[x];
        return a.boxplus(x);
    };
    R.imp.resize(std::size_t(m) * m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) R.imp[i * m + k] = at(interior(a.j(a.neg[O[i]], O[k])));
    if (a.cls == AlgClass::TEN) {
        R.coimp.resize(std::size_t(m) * m);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) R.coimp[i * m + k] = at(a.diaP[a.m(O[i], a.neg[O[k]])]);
    }
    if (a.cls == AlgClass::MAG) {
        R.boxdot.resize(m);
        for (int i = 0; i < m; ++i) R.boxdot[i] = at(a.box[O[i]]);
    }
    return {R, O};
}

FiniteAlgebra rho_algebra(const FiniteAlgebra& a) { return rho_algebra_with_inclusion(a).first; }

namespace {

std::string verdict_word(const Verdict& v) { return v.valid ? "valid" : "refuted"; }

void require_pair(const FiniteAlgebra& a, const Rule& r) {
    bool ok = (a.cls == AlgClass::MA && r.sig == Sig::SI) || (a.cls == AlgClass::TEN && r.sig == Sig::BSI) ||
              (a.cls == AlgClass::MAG && r.sig == Sig::MSI);
    if (!ok)
        throw Error("algebra of class " + class_name(a.cls) + " does not pair with a " + sig_name(r.sig) + " rule");
}

}  // namespace

CompanionReport check_gtskeleton(const FiniteAlgebra& a, const Rule& r) {
    require_pair(a, r);
    CompanionReport rep;
    rep.lemma = "gtskeleton";
    Verdict l = validates(a, godel_translate(r));
    Verdict rr = validates(rho_algebra(a), r);
    rep.left = verdict_word(l);
    rep.right = verdict_word(rr);
    rep.agree = l.valid == rr.valid;
    if (!l.valid) rep.left_witness = l.witness;
    if (!rr.valid) rep.right_witness = rr.witness;
    return rep;
}

CompanionReport check_skeleton_identities(const FiniteAlgebra& x) {
    CompanionReport rep;
    rep.lemma = "skeleton";
    rep.right = "holds";
    switch (x.cls) {
        case AlgClass::HA:
        case AlgClass::BIHA:
        case AlgClass::FRT: {
            FiniteAlgebra back = rho_algebra(sigma_algebra(x));
            auto iso = find_isomorphism(back, x);
            rep.note = "rho sigma is isomorphic to the input";
            rep.left = iso ? "holds" : "fails";
            if (iso) rep.map = *iso;
            break;
        }
        case AlgClass::MA:
        case AlgClass::TEN:
        case AlgClass::MAG: {
            FiniteAlgebra sr = sigma_algebra(rho_algebra(x));
            DomainSpec d;
            d.variant = default_variant(x.cls);
            auto emb = find_stable_embedding(sr, x, d, EmbedMode::Full);
            rep.note = "sigma rho embeds into the input";
            rep.left = emb ? "holds" : "fails";
            if (emb) rep.map = *emb;
            break;
        }
        default: throw Error("skeleton identities need an HA, BIHA, FRT, MA, TEN or MAG algebra");
    }
    rep.agree = rep.left == rep.right;
    return rep;
}

CompanionReport check_main_lemma(const FiniteAlgebra& a, const Rule& r) {
    const char* need = a.cls == AlgClass::MA ? "GRZ" : a.cls == AlgClass::TEN ? "GRZ.T" : a.cls == AlgClass::MAG ? "MAG" : nullptr;
    if (!need) throw Error("main lemma needs a GRZ, GRZ.T or MAG algebra");
    ClassCheck c = check_class(a, need);
    if (!c.ok) throw Error(std::string("main lemma precondition: not a ") + need + " algebra: " + c.failure);
    Sig want = a.cls == AlgClass::TEN ? Sig::TEN : Sig::MD;
    if (r.sig != want) throw Error("main lemma rule must be in signature " + sig_name(want));
    CompanionReport rep;
    rep.lemma = "mainlemma";
    Verdict l = validates(a, r);
    Verdict rr = validates(sigma_algebra(rho_algebra(a)), r);
    rep.left = verdict_word(l);
    rep.right = verdict_word(rr);
    rep.agree = l.valid == rr.valid;
    rep.note = "finite duals in this class have no proper clusters, so agreement is expected";
    if (!l.valid) rep.left_witness = l.witness;
    if (!rr.valid) rep.right_witness = rr.witness;
    return rep;
}

bool tau_member(const FiniteAlgebra& a, const std::vector<Rule>& rules) {
    if (a.cls != AlgClass::MA && a.cls != AlgClass::TEN) throw Error("tau_member needs an S4 or TEN algebra");
    Sig want = a.cls == AlgClass::MA ? Sig::SI : Sig::BSI;
    FiniteAlgebra r = rho_algebra(a);
    for (auto& rule : rules) {
        if (rule.sig != want) throw Error("tau_member rule must be in signature " + sig_name(want));
        if (!validates(r, rule).valid) return false;
    }
    return true;
}

}  // namespace scr
