#include "scr/filtration.hpp"

#include <algorithm>
#include <cctype>

namespace scr {

std::string method_name(FiltrationMethod m) {
    switch (m) {
        case FiltrationMethod::SI: return "SI";
        case FiltrationMethod::S4: return "S4";
        case FiltrationMethod::BSI: return "BSI";
        case FiltrationMethod::TENSE: return "TENSE";
        case FiltrationMethod::FRT_WEAK: return "FRT_WEAK";
        case FiltrationMethod::MAG_WEAK: return "MAG_WEAK";
    }
    return "?";
}

FiltrationMethod parse_method(const std::string& s) {
    std::string t;
    for (char c : s) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (FiltrationMethod m : {FiltrationMethod::SI, FiltrationMethod::S4, FiltrationMethod::BSI,
                               FiltrationMethod::TENSE, FiltrationMethod::FRT_WEAK, FiltrationMethod::MAG_WEAK})
        if (method_name(m) == t) return m;
    throw Error("unknown filtration method '" + s + "'");
}

Variant variant_of(FiltrationMethod m) {
    switch (m) {
        case FiltrationMethod::SI: return Variant::SI;
        case FiltrationMethod::S4: return Variant::MOD;
        case FiltrationMethod::BSI: return Variant::BSI;
        case FiltrationMethod::TENSE: return Variant::TEN;
        case FiltrationMethod::FRT_WEAK: return Variant::MSI;
        case FiltrationMethod::MAG_WEAK: return Variant::MODPLUS;
    }
    return Variant::SI;
}

FiltrationMethod method_for(Sig s, AlgClass c) {
    switch (s) {
        case Sig::SI: return FiltrationMethod::SI;
        case Sig::BSI: return FiltrationMethod::BSI;
        case Sig::TEN: return FiltrationMethod::TENSE;
        case Sig::MSI: return FiltrationMethod::FRT_WEAK;
        case Sig::MD: return c == AlgClass::MAG ? FiltrationMethod::MAG_WEAK : FiltrationMethod::S4;
    }
    return FiltrationMethod::SI;
}

namespace {

Sig method_signature(FiltrationMethod m) {
    switch (m) {
        case FiltrationMethod::SI: return Sig::SI;
        case FiltrationMethod::BSI: return Sig::BSI;
        case FiltrationMethod::S4:
        case FiltrationMethod::MAG_WEAK: return Sig::MD;
        case FiltrationMethod::TENSE: return Sig::TEN;
        case FiltrationMethod::FRT_WEAK: return Sig::MSI;
    }
    return Sig::SI;
}

const char* required_class(FiltrationMethod m) {
    switch (m) {
        case FiltrationMethod::SI: return "HA";
        case FiltrationMethod::BSI: return "BIHA";
        case FiltrationMethod::S4: return "S4";
        case FiltrationMethod::TENSE: return "TEN";
        case FiltrationMethod::FRT_WEAK: return "FRT";
        case FiltrationMethod::MAG_WEAK: return "MAG";
    }
    return "";
}

bool is_boxplus(const Formula& f) {
    return f->op == Op::And && f->a->op == Op::Box && equal(f->a->a, f->b);
}

// Transitive filtration of an interior-like operator: the join of every
// op(a) with a, op(a) in K and op(a) <= op(b).
std::vector<int> filtered_box(const FiniteAlgebra& A, const std::vector<int>& op, const std::vector<int>& K,
                              const std::vector<int>& idx) {
    std::vector<int> out(K.size());
    for (std::size_t i = 0; i < K.size(); ++i) {
        int acc = A.zero;
        for (int a : K)
            if (idx[op[a]] >= 0 && A.leq(op[a], op[K[i]])) acc = A.j(acc, op[a]);
        out[i] = idx[acc];
    }
    return out;
}

std::vector<int> filtered_diamond(const FiniteAlgebra& A, const std::vector<int>& op, const std::vector<int>& K,
                                  const std::vector<int>& idx) {
    std::vector<int> out(K.size());
    for (std::size_t i = 0; i < K.size(); ++i) {
        int acc = A.one;
        for (int a : K)
            if (idx[op[a]] >= 0 && A.leq(op[K[i]], op[a])) acc = A.m(acc, op[a]);
        out[i] = idx[acc];
    }
    return out;
}

}  // namespace

FiltrationResult filtrate(const FiniteAlgebra& alg, const Valuation& v, const std::vector<Formula>& theta,
                          FiltrationMethod method) {
    if (!is_subformula_closed(theta)) throw Error("filtration set is not subformula closed");
    Sig sig = method_signature(method);
    for (auto& f : theta)
        if (f->sig != sig)
            throw Error("formula of signature " + sig_name(f->sig) + " given to method " + method_name(method));
    ClassCheck cc = check_class(alg, required_class(method));
    if (!cc.ok)
        throw Error(std::string("method ") + method_name(method) + " needs a " + required_class(method) +
                    " algebra: " + cc.failure);

    std::vector<int> values;
    for (auto& f : theta) values.push_back(evaluate(alg, v, f));

    std::vector<int> K;
    bool boolean = false;
    switch (method) {
        case FiltrationMethod::SI:
        case FiltrationMethod::BSI: K = generated_bounded_sublattice(alg, values); break;
        case FiltrationMethod::FRT_WEAK: {
            std::vector<int> targets;
            for (std::size_t i = 0; i < theta.size(); ++i)
                if (theta[i]->op == Op::BoxDot) targets.push_back(evaluate(alg, v, theta[i]->a));
            K = generated_bounded_sublattice(alg, values);
            // Close under b -> a for a in the boxdot domain so that the
            // relative implication agrees with the source on those pairs.
            for (;;) {
                std::vector<int> seed = K;
                for (int b : K)
                    for (int a : targets) seed.push_back(alg.im(b, a));
                std::vector<int> next = generated_bounded_sublattice(alg, seed);
                if (next == K) break;
                K = next;
            }
            break;
        }
        case FiltrationMethod::S4:
        case FiltrationMethod::TENSE:
        case FiltrationMethod::MAG_WEAK:
            K = generated_boolean_subalgebra(alg, values);
            boolean = true;
            break;
    }
    std::vector<int> idx(alg.n, -1);
    for (std::size_t i = 0; i < K.size(); ++i) idx[K[i]] = static_cast<int>(i);

    FiltrationResult res;
    FiniteAlgebra L = restrict_lattice(alg, K, boolean);
    switch (method) {
        case FiltrationMethod::SI: res.alg = heyting_expand(L, ExpandMode::Imp); break;
        case FiltrationMethod::BSI: res.alg = heyting_expand(L, ExpandMode::Both); break;
        case FiltrationMethod::FRT_WEAK: res.alg = fronton_expand(heyting_expand(L, ExpandMode::Imp)); break;
        case FiltrationMethod::S4:
        case FiltrationMethod::MAG_WEAK:
            res.alg = L;
            res.alg.cls = AlgClass::MA;
            res.alg.box = filtered_box(alg, alg.box, K, idx);
            break;
        case FiltrationMethod::TENSE:
            res.alg = L;
            res.alg.cls = AlgClass::TEN;
            res.alg.boxF = filtered_box(alg, alg.boxF, K, idx);
            res.alg.diaP = filtered_diamond(alg, alg.diaP, K, idx);
            break;
    }
    res.inclusion = K;

    std::set<int> atoms;
    for (auto& f : theta) collect_atoms(f, atoms);
    for (int p : atoms) res.val[p] = idx[v.at(p)];

    DomainSpec& d = res.domains;
    d.variant = variant_of(method);
    auto val_of = [&](const Formula& f) { return idx[evaluate(alg, v, f)]; };
    for (auto& f : theta) {
        switch (f->op) {
            case Op::Imp: d.imp.insert({val_of(f->a), val_of(f->b)}); break;
            case Op::Coimp: d.coimp.insert({val_of(f->a), val_of(f->b)}); break;
            case Op::Box: d.box.insert(val_of(f->a)); break;
            case Op::BoxF: d.boxF.insert(val_of(f->a)); break;
            case Op::DiaP: d.diaP.insert(val_of(f->a)); break;
            case Op::BoxDot: d.boxdot.insert(val_of(f->a)); break;
            case Op::And:
                if (method == FiltrationMethod::MAG_WEAK && is_boxplus(f)) d.boxplus.insert(val_of(f->b));
                break;
            default: break;
        }
    }
    if (method == FiltrationMethod::FRT_WEAK)
        for (int a : d.boxdot)
            for (int b = 0; b < res.alg.n; ++b) d.imp.insert({b, a});
    return res;
}

}  // namespace scr
