#include "scr/frames.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "program.hpp"

namespace scr {

std::string kind_name(FrameKind k) {
    switch (k) {
        case FrameKind::POSET: return "POSET";
        case FrameKind::PREORDER: return "PREORDER";
        case FrameKind::STRICT: return "STRICT";
        case FrameKind::BI: return "BI";
        case FrameKind::TENSE: return "TENSE";
        case FrameKind::KM: return "KM";
        case FrameKind::KRIPKE: return "KRIPKE";
    }
    return "?";
}

FrameKind parse_kind(const std::string& s) {
    std::string t;
    for (char c : s) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (FrameKind k : {FrameKind::POSET, FrameKind::PREORDER, FrameKind::STRICT, FrameKind::BI,
                        FrameKind::TENSE, FrameKind::KM, FrameKind::KRIPKE})
        if (kind_name(k) == t) return k;
    throw Error("unknown frame kind '" + s + "'");
}

bool operator==(const FiniteFrame& a, const FiniteFrame& b) {
    return a.kind == b.kind && a.n == b.n && a.rel == b.rel && a.rel2 == b.rel2;
}

namespace {

std::vector<Mask> from_matrix(const std::vector<std::vector<int>>& m, int n) {
    if (static_cast<int>(m.size()) != n) throw Error("relation matrix has wrong number of rows");
    std::vector<Mask> rel(n, 0);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(m[x].size()) != n) throw Error("relation matrix row has wrong length");
        for (int y = 0; y < n; ++y) {
            if (m[x][y] != 0 && m[x][y] != 1) throw Error("relation matrix entries must be 0 or 1");
            if (m[x][y]) rel[x] |= bit(y);
        }
    }
    return rel;
}

}  // namespace

FiniteFrame make_frame(FrameKind kind, const std::vector<std::vector<int>>& matrix) {
    FiniteFrame fr;
    fr.kind = kind;
    fr.n = static_cast<int>(matrix.size());
    if (fr.n > 20) throw Error("frame too large");
    fr.rel = from_matrix(matrix, fr.n);
    return fr;
}

std::vector<std::vector<int>> to_matrix(const std::vector<Mask>& rel, int n) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) m[x][y] = has(rel[x], y);
    return m;
}

std::vector<Mask> converse(const std::vector<Mask>& rel) {
    int n = static_cast<int>(rel.size());
    std::vector<Mask> out(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (has(rel[x], y)) out[y] |= bit(x);
    return out;
}

Mask image(const std::vector<Mask>& rel, Mask u) {
    Mask out = 0;
    for (int x : mask_elements(u)) out |= rel[x];
    return out;
}

Mask preimage(const std::vector<Mask>& rel, Mask u) {
    Mask out = 0;
    for (std::size_t x = 0; x < rel.size(); ++x)
        if (rel[x] & u) out |= bit(static_cast<int>(x));
    return out;
}

Mask up_closure(const FiniteFrame& fr, Mask u) { return u | image(fr.rel, u); }
Mask down_closure(const FiniteFrame& fr, Mask u) { return u | preimage(fr.rel, u); }
bool is_upset(const FiniteFrame& fr, Mask u) { return up_closure(fr, u) == u; }

std::vector<Mask> upsets(const FiniteFrame& fr) {
    if (fr.n > 20) throw Error("frame too large to enumerate upsets");
    std::vector<Mask> out;
    for (Mask u = 0; u <= fr.all(); ++u)
        if (is_upset(fr, u)) out.push_back(u);
    return out;
}

bool is_reflexive(const std::vector<Mask>& rel) {
    for (std::size_t x = 0; x < rel.size(); ++x)
        if (!has(rel[x], static_cast<int>(x))) return false;
    return true;
}

bool is_irreflexive(const std::vector<Mask>& rel) {
    for (std::size_t x = 0; x < rel.size(); ++x)
        if (has(rel[x], static_cast<int>(x))) return false;
    return true;
}

bool is_transitive(const std::vector<Mask>& rel) {
    for (std::size_t x = 0; x < rel.size(); ++x)
        if ((image(rel, rel[x]) & ~rel[x]) != 0) return false;
    return true;
}

bool is_antisymmetric(const std::vector<Mask>& rel) {
    for (std::size_t x = 0; x < rel.size(); ++x)
        for (std::size_t y = 0; y < rel.size(); ++y)
            if (x != y && has(rel[x], static_cast<int>(y)) && has(rel[y], static_cast<int>(x))) return false;
    return true;
}

std::string frame_violation(const FiniteFrame& fr) {
    if (static_cast<int>(fr.rel.size()) != fr.n) return "relation has wrong size";
    for (Mask m : fr.rel)
        if (m & ~fr.all()) return "relation mentions points outside the carrier";
    bool refl = is_reflexive(fr.rel), trans = is_transitive(fr.rel), anti = is_antisymmetric(fr.rel);
    switch (fr.kind) {
        case FrameKind::POSET:
        case FrameKind::BI:
        case FrameKind::KM:
            if (!refl) return "relation is not reflexive";
            if (!trans) return "relation is not transitive";
            if (!anti) return "relation is not antisymmetric";
            break;
        case FrameKind::PREORDER:
        case FrameKind::TENSE:
            if (!refl) return "relation is not reflexive";
            if (!trans) return "relation is not transitive";
            break;
        case FrameKind::STRICT:
            if (!is_irreflexive(fr.rel)) return "relation is not irreflexive";
            if (!trans) return "relation is not transitive";
            break;
        case FrameKind::KRIPKE: break;
    }
    if (fr.kind == FrameKind::KM) {
        if (static_cast<int>(fr.rel2.size()) != fr.n) return "KM frame needs a second relation";
        for (int x = 0; x < fr.n; ++x)
            if (fr.rel2[x] != (fr.rel[x] & ~bit(x))) return "second relation is not the strict order";
    } else if (!fr.rel2.empty()) {
        return "only KM frames carry a second relation";
    }
    return "";
}

Extremal parse_extremal(const std::string& s) {
    if (s == "qmax") return Extremal::QMax;
    if (s == "max") return Extremal::Max;
    if (s == "qmin") return Extremal::QMin;
    if (s == "min") return Extremal::Min;
    if (s == "pas") return Extremal::Pas;
    if (s == "pas_converse") return Extremal::PasConverse;
    throw Error("unknown extremal kind '" + s + "'");
}

Mask extremal_points(const FiniteFrame& fr, Mask u, Extremal kind) {
    const std::vector<Mask> conv = converse(fr.rel);
    bool down = kind == Extremal::QMin || kind == Extremal::Min || kind == Extremal::PasConverse;
    const std::vector<Mask>& R = down ? conv : fr.rel;
    const std::vector<Mask>& Rc = down ? fr.rel : conv;
    Mask out = 0;
    for (int x : mask_elements(u)) {
        bool keep = true;
        Mask succ = R[x];
        switch (kind) {
            case Extremal::QMax:
            case Extremal::QMin:
                keep = (succ & u & ~Rc[x]) == 0;
                break;
            case Extremal::Max:
            case Extremal::Min:
                keep = (succ & u & ~bit(x)) == 0;
                break;
            case Extremal::Pas:
            case Extremal::PasConverse:
                for (int y : mask_elements(succ & ~u))
                    if (R[y] & u) keep = false;
                break;
        }
        if (keep) out |= bit(x);
    }
    return out;
}

std::vector<std::vector<int>> clusters(const FiniteFrame& fr) {
    std::vector<int> cls(fr.n, -1);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < fr.n; ++x) {
        if (cls[x] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.push_back({x});
        cls[x] = id;
        for (int y = x + 1; y < fr.n; ++y)
            if (cls[y] < 0 && fr.r(x, y) && fr.r(y, x)) {
                cls[y] = id;
                out[id].push_back(y);
            }
    }
    return out;
}

Skeleton skeleton_frame(const FiniteFrame& fr) {
    Skeleton s;
    if (fr.kind == FrameKind::POSET || fr.kind == FrameKind::BI || fr.kind == FrameKind::KM) {
        s.frame = fr;
        s.map.resize(fr.n);
        std::iota(s.map.begin(), s.map.end(), 0);
        return s;
    }
    if (!is_transitive(fr.rel)) throw Error("skeleton needs a transitive relation");
    auto cl = clusters(fr);
    int m = static_cast<int>(cl.size());
    s.map.assign(fr.n, 0);
    for (int c = 0; c < m; ++c)
        for (int x : cl[c]) s.map[x] = c;
    FiniteFrame& q = s.frame;
    q.n = m;
    q.rel.assign(m, 0);
    bool gl = fr.kind == FrameKind::STRICT || fr.kind == FrameKind::KRIPKE;
    if (gl) q.rel2.assign(m, 0);
    for (int x = 0; x < fr.n; ++x)
        for (int y = 0; y < fr.n; ++y) {
            if (gl && fr.r(x, y)) q.rel2[s.map[x]] |= bit(s.map[y]);
            if (fr.r(x, y) || (gl && x == y)) q.rel[s.map[x]] |= bit(s.map[y]);
        }
    q.kind = fr.kind == FrameKind::PREORDER ? FrameKind::POSET
             : fr.kind == FrameKind::TENSE  ? FrameKind::BI
                                            : FrameKind::KM;
    return s;
}

Expansion cluster_expansion(const FiniteFrame& poset, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != poset.n) throw Error("cluster sizes must be given for every point");
    Expansion e;
    for (int y = 0; y < poset.n; ++y) {
        if (sizes[y] < 1) throw Error("cluster sizes must be positive");
        for (int i = 0; i < sizes[y]; ++i) e.projection.push_back(y);
    }
    int n = static_cast<int>(e.projection.size());
    if (n > 20) throw Error("expanded frame too large");
    e.frame.kind = FrameKind::PREORDER;
    e.frame.n = n;
    e.frame.rel.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (e.projection[a] == e.projection[b] || poset.r(e.projection[a], e.projection[b]))
                e.frame.rel[a] |= bit(b);
    return e;
}

// ---------------------------------------------------------------- semantics

bool frame_supports(const FiniteFrame& fr, Sig s) {
    switch (s) {
        case Sig::SI: return fr.kind == FrameKind::POSET || fr.kind == FrameKind::BI || fr.kind == FrameKind::KM;
        case Sig::BSI: return fr.kind == FrameKind::POSET || fr.kind == FrameKind::BI;
        case Sig::MSI: return fr.kind == FrameKind::KM;
        case Sig::MD:
            return fr.kind == FrameKind::PREORDER || fr.kind == FrameKind::STRICT || fr.kind == FrameKind::KRIPKE;
        case Sig::TEN: return fr.kind == FrameKind::TENSE;
    }
    return false;
}

namespace {

struct Semantics {
    const FiniteFrame& fr;
    std::vector<Mask> conv, conv2;
    Mask all;

    explicit Semantics(const FiniteFrame& f) : fr(f), conv(converse(f.rel)), all(f.all()) {
        if (!f.rel2.empty()) conv2 = converse(f.rel2);
    }
    // {x : R[x] subset of u}
    Mask box(const std::vector<Mask>& R, Mask u) const {
        Mask out = 0;
        for (int x = 0; x < fr.n; ++x)
            if ((R[x] & ~u) == 0) out |= bit(x);
        return out;
    }
    Mask apply(Op op, Mask a, Mask b) const {
        switch (op) {
            case Op::Bot: return 0;
            case Op::Top: return all;
            case Op::And: return a & b;
            case Op::Or: return a | b;
            case Op::Imp: return all & ~image(conv, a & ~b) & ~(a & ~b);
            case Op::Coimp: return image(fr.rel, a & ~b) | (a & ~b);
            case Op::Neg: return all & ~a;
            case Op::Box:
            case Op::BoxF: return box(fr.rel, a);
            case Op::DiaP: return image(fr.rel, a);
            case Op::BoxDot: return box(fr.rel2, a);
            default: throw Error("bad opcode");
        }
    }
    Mask run(const detail::Program& p, const std::vector<Mask>& vals) const {
        thread_local std::vector<Mask> reg;
        reg.resize(p.code.size());
        for (std::size_t i = 0; i < p.code.size(); ++i) {
            const auto& ins = p.code[i];
            if (ins.op == Op::Atom)
                reg[i] = vals[ins.slot];
            else
                reg[i] = apply(ins.op, ins.a >= 0 ? reg[ins.a] : 0, ins.b >= 0 ? reg[ins.b] : 0);
        }
        return reg.back();
    }
};

void require_frame_support(const FiniteFrame& fr, Sig s) {
    if (!frame_supports(fr, s))
        throw Error("frame of kind " + kind_name(fr.kind) + " does not interpret signature " + sig_name(s));
}

bool intuitionistic(Sig s) { return s == Sig::SI || s == Sig::BSI || s == Sig::MSI; }

}  // namespace

Mask frame_evaluate(const FiniteFrame& fr, const PointValuation& v, const Formula& f) {
    require_frame_support(fr, f->sig);
    std::set<int> atoms;
    collect_atoms(f, atoms);
    std::map<int, int> slot;
    std::vector<Mask> vals;
    for (int a : atoms) {
        auto it = v.find(a);
        if (it == v.end()) throw Error("valuation misses atom p" + std::to_string(a));
        if (it->second & ~fr.all()) throw Error("valuation mentions points outside the frame");
        if (intuitionistic(f->sig) && !is_upset(fr, it->second)) throw Error("valuation is not an upset");
        slot[a] = static_cast<int>(vals.size());
        vals.push_back(it->second);
    }
    Semantics sem(fr);
    return sem.run(detail::compile(f, slot), vals);
}

FrameVerdict frame_validates(const FiniteFrame& fr, const Rule& r, const ValidateOptions& opt) {
    require_frame_support(fr, r.sig);
    std::set<int> atoms = rule_atoms(r);
    if (static_cast<int>(atoms.size()) > opt.max_atoms)
        throw Error("rule has " + std::to_string(atoms.size()) + " atoms, above the exhaustion bound " +
                    std::to_string(opt.max_atoms));
    std::vector<int> order(atoms.begin(), atoms.end());
    std::map<int, int> slot;
    for (std::size_t i = 0; i < order.size(); ++i) slot[order[i]] = static_cast<int>(i);
    std::vector<detail::Program> prem, conc;
    for (auto& g : r.premises) prem.push_back(detail::compile(g, slot));
    for (auto& d : r.conclusions) conc.push_back(detail::compile(d, slot));
    std::vector<Mask> admissible;
    if (intuitionistic(r.sig)) {
        admissible = upsets(fr);
    } else {
        if (fr.n > 16) throw Error("frame too large for exhaustive valuation search");
        for (Mask u = 0; u <= fr.all(); ++u) admissible.push_back(u);
    }
    std::vector<std::vector<Mask>> cand(order.size(), admissible);
    Semantics sem(fr);
    auto is_top = [&](const detail::Program& p, const std::vector<Mask>& vals) {
        return sem.run(p, vals) == sem.all;
    };
    std::vector<Mask> found;
    FrameVerdict out;
    if (detail::search_refutation(cand, prem, conc, is_top, found)) {
        out.valid = false;
        for (std::size_t i = 0; i < order.size(); ++i) out.witness[order[i]] = found[i];
    }
    return out;
}

// ---------------------------------------------------------------- duality

DualFrame dual_frame_full(const FiniteAlgebra& alg) {
    DualFrame d;
    FiniteFrame& fr = d.frame;
    switch (alg.cls) {
        case AlgClass::DL:
        case AlgClass::HA:
        case AlgClass::BIHA:
        case AlgClass::FRT: {
            d.points = join_irreducibles(alg);
            int k = static_cast<int>(d.points.size());
            if (k > 20) throw Error("dual frame too large");
            fr.n = k;
            fr.rel.assign(k, 0);
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y)
                    if (alg.leq(d.points[y], d.points[x])) fr.rel[x] |= bit(y);
            fr.kind = alg.cls == AlgClass::BIHA ? FrameKind::BI
                      : alg.cls == AlgClass::FRT ? FrameKind::KM
                                                 : FrameKind::POSET;
            break;
        }
        case AlgClass::MA:
        case AlgClass::TEN:
        case AlgClass::MAG: {
            d.points = lattice_atoms(alg);
            int k = static_cast<int>(d.points.size());
            if (k > 20) throw Error("dual frame too large");
            const std::vector<int>& bx = alg.cls == AlgClass::TEN ? alg.boxF : alg.box;
            if (alg.neg.empty() || bx.empty()) throw Error("dual frame needs negation and box tables");
            fr.n = k;
            fr.rel.assign(k, 0);
            for (int x = 0; x < k; ++x)
                for (int y = 0; y < k; ++y) {
                    int dia = alg.neg[bx[alg.neg[d.points[y]]]];
                    if (alg.leq(d.points[x], dia)) fr.rel[x] |= bit(y);
                }
            if (alg.cls == AlgClass::TEN) fr.kind = FrameKind::TENSE;
            else if (alg.cls == AlgClass::MAG) fr.kind = FrameKind::STRICT;
            else if (is_reflexive(fr.rel) && is_transitive(fr.rel)) fr.kind = FrameKind::PREORDER;
            else if (is_irreflexive(fr.rel) && is_transitive(fr.rel)) fr.kind = FrameKind::STRICT;
            else fr.kind = FrameKind::KRIPKE;
            break;
        }
    }
    d.beta.assign(alg.n, 0);
    for (int a = 0; a < alg.n; ++a)
        for (int x = 0; x < fr.n; ++x)
            if (alg.leq(d.points[x], a)) d.beta[a] |= bit(x);
    if (fr.kind == FrameKind::KM) {
        // x sq y iff x is not in beta(boxdot c_y), where beta(c_y) is the
        // complement of the downset of y.
        fr.rel2.assign(fr.n, 0);
        std::vector<int> elem_of(std::size_t(1) << fr.n, -1);
        for (int a = 0; a < alg.n; ++a) elem_of[d.beta[a]] = a;
        for (int y = 0; y < fr.n; ++y) {
            Mask target = fr.all() & ~down_closure(fr, bit(y));
            int c = elem_of[target];
            if (c < 0) throw Error("dual frame: missing element for a complement of a principal downset");
            Mask b = d.beta[alg.boxdot[c]];
            for (int x = 0; x < fr.n; ++x)
                if (!has(b, x)) fr.rel2[x] |= bit(y);
        }
    }
    return d;
}

FiniteFrame dual_frame(const FiniteAlgebra& alg) { return dual_frame_full(alg).frame; }

int DualAlgebra::index_of(Mask m) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), m);
    if (it == sets.end() || *it != m) throw Error("set is not an element of the dual algebra");
    return static_cast<int>(it - sets.begin());
}

DualAlgebra dual_algebra_full(const FiniteFrame& fr) {
    DualAlgebra d;
    FiniteAlgebra& A = d.alg;
    bool upset_kind = fr.kind == FrameKind::POSET || fr.kind == FrameKind::BI || fr.kind == FrameKind::KM;
    if (upset_kind) {
        d.sets = upsets(fr);
    } else {
        if (fr.n > 12) throw Error("frame too large for its powerset algebra");
        for (Mask u = 0; u <= fr.all(); ++u) d.sets.push_back(u);
    }
    int n = static_cast<int>(d.sets.size());
    A.n = n;
    A.zero = 0;
    A.one = n - 1;
    A.meet.resize(std::size_t(n) * n);
    A.join.resize(std::size_t(n) * n);
    Semantics sem(fr);
    auto idx = [&](Mask m) { return d.index_of(m); };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            A.meet[a * n + b] = idx(d.sets[a] & d.sets[b]);
            A.join[a * n + b] = idx(d.sets[a] | d.sets[b]);
        }
    auto bin = [&](std::vector<int>& t, Op op) {
        t.resize(std::size_t(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t[a * n + b] = idx(sem.apply(op, d.sets[a], d.sets[b]));
    };
    auto un = [&](std::vector<int>& t, Op op) {
        t.resize(n);
        for (int a = 0; a < n; ++a) t[a] = idx(sem.apply(op, d.sets[a], 0));
    };
    switch (fr.kind) {
        case FrameKind::POSET:
            A.cls = AlgClass::HA;
            bin(A.imp, Op::Imp);
            break;
        case FrameKind::BI:
            A.cls = AlgClass::BIHA;
            bin(A.imp, Op::Imp);
            bin(A.coimp, Op::Coimp);
            break;
        case FrameKind::KM:
            A.cls = AlgClass::FRT;
            bin(A.imp, Op::Imp);
            un(A.boxdot, Op::BoxDot);
            break;
        case FrameKind::PREORDER:
        case FrameKind::KRIPKE:
        case FrameKind::STRICT:
            A.cls = fr.kind == FrameKind::STRICT ? AlgClass::MAG : AlgClass::MA;
            un(A.neg, Op::Neg);
            un(A.box, Op::Box);
            break;
        case FrameKind::TENSE:
            A.cls = AlgClass::TEN;
            un(A.neg, Op::Neg);
            un(A.boxF, Op::BoxF);
            un(A.diaP, Op::DiaP);
            break;
    }
    return d;
}

FiniteAlgebra dual_algebra(const FiniteFrame& fr) { return dual_algebra_full(fr).alg; }

FiniteFrame relabel_frame(const FiniteFrame& fr, const std::vector<int>& perm) {
    FiniteFrame out = fr;
    auto move = [&](const std::vector<Mask>& src, std::vector<Mask>& dst) {
        if (src.empty()) return;
        dst.assign(fr.n, 0);
        for (int x = 0; x < fr.n; ++x)
            for (int y : mask_elements(src[x])) dst[perm[x]] |= bit(perm[y]);
    };
    move(fr.rel, out.rel);
    move(fr.rel2, out.rel2);
    return out;
}

std::optional<std::vector<int>> find_frame_isomorphism(const FiniteFrame& a, const FiniteFrame& b) {
    if (a.kind != b.kind || a.n != b.n || a.rel2.empty() != b.rel2.empty()) return std::nullopt;
    int n = a.n;
    auto degs = [](const FiniteFrame& f, int x) {
        Mask in = 0;
        for (int y = 0; y < f.n; ++y)
            if (f.r(y, x)) in |= bit(y);
        return std::pair<int, int>{popcount(f.rel[x]), popcount(in)};
    };
    std::vector<int> pi(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int c = 0; c < n; ++c) {
            if (used[c] || degs(a, i) != degs(b, c)) continue;
            bool ok = true;
            for (int t = 0; t <= i && ok; ++t) {
                int ct = t == i ? c : pi[t];
                if (a.r(i, t) != b.r(c, ct) || a.r(t, i) != b.r(ct, c)) ok = false;
                if (!a.rel2.empty() && (has(a.rel2[i], t) != has(b.rel2[c], ct) ||
                                        has(a.rel2[t], i) != has(b.rel2[ct], c)))
                    ok = false;
            }
            if (!ok) continue;
            used[c] = 1;
            pi[i] = c;
            if (self(self, i + 1)) return true;
            used[c] = 0;
        }
        return false;
    };
    if (rec(rec, 0)) return pi;
    return std::nullopt;
}

}  // namespace scr
