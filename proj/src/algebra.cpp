#include "scr/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "program.hpp"

namespace scr {

std::string class_name(AlgClass c) {
    switch (c) {
        case AlgClass::DL: return "DL";
        case AlgClass::HA: return "HA";
        case AlgClass::BIHA: return "BIHA";
        case AlgClass::MA: return "MA";
        case AlgClass::TEN: return "TEN";
        case AlgClass::FRT: return "FRT";
        case AlgClass::MAG: return "MAG";
    }
    return "?";
}

AlgClass parse_class(const std::string& s) {
    std::string t;
    for (char c : s) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (t == "DL") return AlgClass::DL;
    if (t == "HA") return AlgClass::HA;
    if (t == "BIHA") return AlgClass::BIHA;
    if (t == "MA") return AlgClass::MA;
    if (t == "TEN") return AlgClass::TEN;
    if (t == "FRT") return AlgClass::FRT;
    if (t == "MAG") return AlgClass::MAG;
    throw Error("unknown algebra class '" + s + "'");
}

bool operator==(const FiniteAlgebra& x, const FiniteAlgebra& y) {
    return x.cls == y.cls && x.n == y.n && x.zero == y.zero && x.one == y.one && x.meet == y.meet &&
           x.join == y.join && x.imp == y.imp && x.coimp == y.coimp && x.neg == y.neg &&
           x.box == y.box && x.boxF == y.boxF && x.diaP == y.diaP && x.boxdot == y.boxdot;
}

bool supports(const FiniteAlgebra& alg, Sig s) {
    switch (s) {
        case Sig::SI: return !alg.imp.empty();
        case Sig::BSI: return !alg.imp.empty() && !alg.coimp.empty();
        case Sig::MSI: return !alg.imp.empty() && !alg.boxdot.empty();
        case Sig::MD: return !alg.neg.empty() && !alg.box.empty();
        case Sig::TEN: return !alg.neg.empty() && !alg.boxF.empty() && !alg.diaP.empty();
    }
    return false;
}

Sig default_signature(AlgClass c) {
    switch (c) {
        case AlgClass::DL:
        case AlgClass::HA: return Sig::SI;
        case AlgClass::BIHA: return Sig::BSI;
        case AlgClass::FRT: return Sig::MSI;
        case AlgClass::MA:
        case AlgClass::MAG: return Sig::MD;
        case AlgClass::TEN: return Sig::TEN;
    }
    return Sig::SI;
}

namespace {

int apply(const FiniteAlgebra& A, Op op, int x, int y) {
    switch (op) {
        case Op::Bot: return A.zero;
        case Op::Top: return A.one;
        case Op::And: return A.m(x, y);
        case Op::Or: return A.j(x, y);
        case Op::Imp: return A.im(x, y);
        case Op::Coimp: return A.co(x, y);
        case Op::Neg: return A.neg[x];
        case Op::Box: return A.box[x];
        case Op::BoxF: return A.boxF[x];
        case Op::DiaP: return A.diaP[x];
        case Op::BoxDot: return A.boxdot[x];
        default: throw Error("bad opcode");
    }
}

int run(const FiniteAlgebra& A, const detail::Program& p, const std::vector<int>& vals) {
    thread_local std::vector<int> reg;
    reg.resize(p.code.size());
    for (std::size_t i = 0; i < p.code.size(); ++i) {
        const auto& ins = p.code[i];
        if (ins.op == Op::Atom)
            reg[i] = vals[ins.slot];
        else
            reg[i] = apply(A, ins.op, ins.a >= 0 ? reg[ins.a] : 0, ins.b >= 0 ? reg[ins.b] : 0);
    }
    return reg.back();
}

void require_support(const FiniteAlgebra& alg, Sig s) {
    if (!supports(alg, s))
        throw Error("algebra of class " + class_name(alg.cls) + " does not interpret signature " +
                    sig_name(s));
}

}  // namespace

int evaluate(const FiniteAlgebra& alg, const Valuation& v, const Formula& f) {
    require_support(alg, f->sig);
    std::set<int> atoms;
    collect_atoms(f, atoms);
    std::map<int, int> slot;
    std::vector<int> vals;
    for (int a : atoms) {
        auto it = v.find(a);
        if (it == v.end()) throw Error("valuation misses atom p" + std::to_string(a));
        if (it->second < 0 || it->second >= alg.n) throw Error("valuation value out of range");
        slot[a] = static_cast<int>(vals.size());
        vals.push_back(it->second);
    }
    return run(alg, detail::compile(f, slot), vals);
}

bool refutes_under(const FiniteAlgebra& alg, const Rule& r, const Valuation& v) {
    for (auto& g : r.premises)
        if (evaluate(alg, v, g) != alg.one) return false;
    for (auto& d : r.conclusions)
        if (evaluate(alg, v, d) == alg.one) return false;
    return true;
}

Verdict validates(const FiniteAlgebra& alg, const Rule& r, const ValidateOptions& opt) {
    require_support(alg, r.sig);
    for (auto& f : r.premises)
        if (f->sig != r.sig) throw Error("rule member outside the rule's signature");
    for (auto& f : r.conclusions)
        if (f->sig != r.sig) throw Error("rule member outside the rule's signature");
    std::set<int> atoms = rule_atoms(r);
    if (static_cast<int>(atoms.size()) > opt.max_atoms)
        throw Error("rule has " + std::to_string(atoms.size()) + " atoms, above the exhaustion bound " +
                    std::to_string(opt.max_atoms));
    std::map<int, int> slot;
    std::vector<int> order(atoms.begin(), atoms.end());
    for (std::size_t i = 0; i < order.size(); ++i) slot[order[i]] = static_cast<int>(i);
    std::vector<detail::Program> prem, conc;
    for (auto& g : r.premises) prem.push_back(detail::compile(g, slot));
    for (auto& d : r.conclusions) conc.push_back(detail::compile(d, slot));
    std::vector<int> all(alg.n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> cand(order.size(), all);
    std::vector<int> found;
    auto is_top = [&](const detail::Program& p, const std::vector<int>& vals) {
        return run(alg, p, vals) == alg.one;
    };
    Verdict out;
    if (detail::search_refutation(cand, prem, conc, is_top, found)) {
        out.valid = false;
        for (std::size_t i = 0; i < order.size(); ++i) out.witness[order[i]] = found[i];
    }
    return out;
}

// ---------------------------------------------------------------- classes

namespace {

struct Checker {
    const FiniteAlgebra& A;
    ClassCheck res;
    bool fail(const std::string& msg) {
        if (res.ok) {
            res.ok = false;
            res.failure = msg;
        }
        return false;
    }
    bool table(const std::vector<int>& t, std::size_t size, const char* name) {
        if (t.size() != size) return fail(std::string("missing or malformed table ") + name);
        for (int v : t)
            if (v < 0 || v >= A.n) return fail(std::string("entry out of range in ") + name);
        return true;
    }
    static std::string tup(std::initializer_list<int> xs) {
        std::ostringstream os;
        os << "(";
        bool first = true;
        for (int x : xs) {
            if (!first) os << ",";
            os << x;
            first = false;
        }
        os << ")";
        return os.str();
    }

    bool lattice() {
        int n = A.n;
        if (n < 1) return fail("empty carrier");
        if (A.zero < 0 || A.zero >= n || A.one < 0 || A.one >= n) return fail("bounds out of range");
        if (!table(A.meet, std::size_t(n) * n, "meet") || !table(A.join, std::size_t(n) * n, "join"))
            return false;
        for (int a = 0; a < n; ++a) {
            if (A.m(a, a) != a || A.j(a, a) != a) return fail("idempotence fails at " + tup({a}));
            if (A.m(a, A.zero) != A.zero || A.j(a, A.one) != A.one || A.m(a, A.one) != a ||
                A.j(a, A.zero) != a)
                return fail("bounds fail at " + tup({a}));
            for (int b = 0; b < n; ++b) {
                if (A.m(a, b) != A.m(b, a) || A.j(a, b) != A.j(b, a))
                    return fail("commutativity fails at " + tup({a, b}));
                if (A.m(a, A.j(a, b)) != a || A.j(a, A.m(a, b)) != a)
                    return fail("absorption fails at " + tup({a, b}));
                for (int c = 0; c < n; ++c) {
                    if (A.m(a, A.m(b, c)) != A.m(A.m(a, b), c) || A.j(a, A.j(b, c)) != A.j(A.j(a, b), c))
                        return fail("associativity fails at " + tup({a, b, c}));
                    if (A.m(a, A.j(b, c)) != A.j(A.m(a, b), A.m(a, c)))
                        return fail("distributivity fails at " + tup({a, b, c}));
                }
            }
        }
        return true;
    }

    bool boolean() {
        if (!lattice()) return false;
        if (!table(A.neg, A.n, "neg")) return false;
        for (int a = 0; a < A.n; ++a)
            if (A.m(a, A.neg[a]) != A.zero || A.j(a, A.neg[a]) != A.one)
                return fail("neg is not a complement at " + tup({a}));
        return true;
    }

    bool heyting() {
        if (!lattice() || !table(A.imp, std::size_t(A.n) * A.n, "imp")) return false;
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b)
                for (int c = 0; c < A.n; ++c)
                    if (A.leq(c, A.im(a, b)) != A.leq(A.m(a, c), b))
                        return fail("residuation fails at " + tup({a, b, c}));
        return true;
    }

    bool coheyting() {
        if (!table(A.coimp, std::size_t(A.n) * A.n, "coimp")) return false;
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b)
                for (int c = 0; c < A.n; ++c)
                    if (A.leq(A.co(a, b), c) != A.leq(a, A.j(b, c)))
                        return fail("co-residuation fails at " + tup({a, b, c}));
        return true;
    }

    int bimp(int a, int b) const { return A.j(A.neg[a], b); }

    bool normal_box(const std::vector<int>& bx, const char* name) {
        if (!table(bx, A.n, name)) return false;
        if (bx[A.one] != A.one) return fail(std::string(name) + "(1) != 1");
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b)
                if (bx[A.m(a, b)] != A.m(bx[a], bx[b]))
                    return fail(std::string(name) + " does not preserve meets at " + tup({a, b}));
        return true;
    }
    bool k4(const std::vector<int>& bx, const char* name) {
        for (int a = 0; a < A.n; ++a)
            if (!A.leq(bx[a], bx[bx[a]])) return fail(std::string(name) + " fails 4 at " + tup({a}));
        return true;
    }
    bool t(const std::vector<int>& bx, const char* name) {
        for (int a = 0; a < A.n; ++a)
            if (!A.leq(bx[a], a)) return fail(std::string(name) + " fails T at " + tup({a}));
        return true;
    }
    bool grz(const std::vector<int>& bx, const char* name) {
        for (int a = 0; a < A.n; ++a) {
            int inner = bx[bimp(bx[bimp(a, bx[a])], a)];
            if (!A.leq(inner, a)) return fail(std::string(name) + " fails Grz at " + tup({a}));
        }
        return true;
    }

    bool tense() {
        if (!boolean() || !normal_box(A.boxF, "boxF") || !k4(A.boxF, "boxF") || !t(A.boxF, "boxF"))
            return false;
        if (!table(A.diaP, A.n, "diaP")) return false;
        for (int a = 0; a < A.n; ++a)
            for (int b = 0; b < A.n; ++b)
                if (A.leq(A.diaP[a], b) != A.leq(a, A.boxF[b]))
                    return fail("residuation of diaP and boxF fails at " + tup({a, b}));
        std::vector<int> boxP(A.n);
        for (int a = 0; a < A.n; ++a) boxP[a] = A.neg[A.diaP[A.neg[a]]];
        return normal_box(boxP, "boxP") && k4(boxP, "boxP") && t(boxP, "boxP");
    }

    bool fronton() {
        if (!heyting() || !table(A.boxdot, A.n, "boxdot")) return false;
        const auto& bd = A.boxdot;
        if (bd[A.one] != A.one) return fail("boxdot(1) != 1");
        for (int a = 0; a < A.n; ++a) {
            if (!A.leq(a, bd[a])) return fail("a <= boxdot a fails at " + tup({a}));
            if (A.im(bd[a], a) != a) return fail("boxdot a -> a = a fails at " + tup({a}));
            for (int b = 0; b < A.n; ++b) {
                if (bd[A.m(a, b)] != A.m(bd[a], bd[b]))
                    return fail("boxdot does not preserve meets at " + tup({a, b}));
                if (!A.leq(bd[a], A.j(b, A.im(b, a))))
                    return fail("boxdot a <= b | (b -> a) fails at " + tup({a, b}));
            }
        }
        return true;
    }

    bool magari() {
        if (!boolean() || !normal_box(A.box, "box")) return false;
        for (int a = 0; a < A.n; ++a)
            if (A.box[bimp(A.box[a], a)] != A.box[a]) return fail("Loeb equation fails at " + tup({a}));
        return true;
    }
};

}  // namespace

ClassCheck check_class(const FiniteAlgebra& alg, const std::string& cls) {
    Checker c{alg, {}};
    std::string k;
    for (char ch : cls) k += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (k == "DL") c.lattice();
    else if (k == "BA") c.boolean();
    else if (k == "HA") c.heyting();
    else if (k == "BIHA") c.heyting() && c.coheyting();
    else if (k == "MA") c.boolean() && c.normal_box(alg.box, "box");
    else if (k == "K4") c.boolean() && c.normal_box(alg.box, "box") && c.k4(alg.box, "box");
    else if (k == "S4")
        c.boolean() && c.normal_box(alg.box, "box") && c.k4(alg.box, "box") && c.t(alg.box, "box");
    else if (k == "GRZ")
        c.boolean() && c.normal_box(alg.box, "box") && c.k4(alg.box, "box") && c.t(alg.box, "box") &&
            c.grz(alg.box, "box");
    else if (k == "TEN") c.tense();
    else if (k == "GRZ.T") {
        if (c.tense()) {
            std::vector<int> boxP(alg.n);
            for (int a = 0; a < alg.n; ++a) boxP[a] = alg.neg[alg.diaP[alg.neg[a]]];
            c.grz(alg.boxF, "boxF") && c.grz(boxP, "boxP");
        }
    } else if (k == "FRT") c.fronton();
    else if (k == "MAG") c.magari();
    else throw Error("unknown class name '" + cls + "'");
    return c.res;
}

ClassCheck check_class(const FiniteAlgebra& alg) { return check_class(alg, class_name(alg.cls)); }

// ---------------------------------------------------------------- subalgebras

namespace {

std::vector<int> close_under(const FiniteAlgebra& alg, std::vector<int> seed, bool with_neg) {
    std::vector<char> in(alg.n, 0);
    std::vector<int> members, work;
    auto add = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
            work.push_back(x);
        }
    };
    add(alg.zero);
    add(alg.one);
    for (int s : seed) {
        if (s < 0 || s >= alg.n) throw Error("seed element out of range");
        add(s);
    }
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        if (with_neg) add(alg.neg[x]);
        for (std::size_t i = 0; i < members.size(); ++i) {
            int y = members[i];
            add(alg.m(x, y));
            add(alg.j(x, y));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

std::vector<int> generated_bounded_sublattice(const FiniteAlgebra& alg, const std::vector<int>& seed) {
    return close_under(alg, seed, false);
}

std::vector<int> generated_boolean_subalgebra(const FiniteAlgebra& alg, const std::vector<int>& seed) {
    if (alg.neg.empty()) throw Error("Boolean subalgebra requested on an algebra without negation");
    return close_under(alg, seed, true);
}

FiniteAlgebra restrict_lattice(const FiniteAlgebra& alg, const std::vector<int>& elems, bool keep_neg) {
    std::vector<int> idx(alg.n, -1);
    for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
    FiniteAlgebra out;
    out.cls = AlgClass::DL;
    out.n = static_cast<int>(elems.size());
    auto at = [&](int x) {
        if (idx[x] < 0) throw Error("subset is not closed under the lattice operations");
        return idx[x];
    };
    out.zero = at(alg.zero);
    out.one = at(alg.one);
    out.meet.resize(std::size_t(out.n) * out.n);
    out.join.resize(std::size_t(out.n) * out.n);
    for (int i = 0; i < out.n; ++i)
        for (int k = 0; k < out.n; ++k) {
            out.meet[i * out.n + k] = at(alg.m(elems[i], elems[k]));
            out.join[i * out.n + k] = at(alg.j(elems[i], elems[k]));
        }
    if (keep_neg) {
        out.neg.resize(out.n);
        for (int i = 0; i < out.n; ++i) out.neg[i] = at(alg.neg[elems[i]]);
    }
    return out;
}

bool is_distributive(const FiniteAlgebra& alg) {
    for (int a = 0; a < alg.n; ++a)
        for (int b = 0; b < alg.n; ++b)
            for (int c = 0; c < alg.n; ++c)
                if (alg.m(a, alg.j(b, c)) != alg.j(alg.m(a, b), alg.m(a, c))) return false;
    return true;
}

FiniteAlgebra heyting_expand(const FiniteAlgebra& lattice, ExpandMode mode) {
    if (!check_class(lattice, "DL").ok) throw Error("heyting_expand: input is not a bounded distributive lattice");
    FiniteAlgebra out = lattice;
    int n = lattice.n;
    if (mode != ExpandMode::Coimp) {
        out.imp.assign(std::size_t(n) * n, lattice.zero);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int acc = lattice.zero;
                for (int c = 0; c < n; ++c)
                    if (lattice.leq(lattice.m(a, c), b)) acc = lattice.j(acc, c);
                out.imp[a * n + b] = acc;
            }
    }
    if (mode != ExpandMode::Imp) {
        out.coimp.assign(std::size_t(n) * n, lattice.one);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int acc = lattice.one;
                for (int c = 0; c < n; ++c)
                    if (lattice.leq(a, lattice.j(b, c))) acc = lattice.m(acc, c);
                out.coimp[a * n + b] = acc;
            }
    }
    if (mode == ExpandMode::Imp) out.cls = AlgClass::HA;
    else if (mode == ExpandMode::Both) out.cls = AlgClass::BIHA;
    return out;
}

FiniteAlgebra fronton_expand(const FiniteAlgebra& ha) {
    if (ha.imp.empty()) throw Error("fronton_expand needs a Heyting algebra");
    FiniteAlgebra out = ha;
    out.boxdot.assign(ha.n, ha.one);
    for (int a = 0; a < ha.n; ++a) {
        int acc = ha.one;
        for (int b = 0; b < ha.n; ++b) acc = ha.m(acc, ha.j(b, ha.im(b, a)));
        out.boxdot[a] = acc;
    }
    out.cls = AlgClass::FRT;
    return out;
}

std::vector<int> join_irreducibles(const FiniteAlgebra& alg) {
    std::vector<int> out;
    for (int x = 0; x < alg.n; ++x) {
        if (x == alg.zero) continue;
        int below = alg.zero;
        for (int y = 0; y < alg.n; ++y)
            if (y != x && alg.leq(y, x)) below = alg.j(below, y);
        if (below != x) out.push_back(x);
    }
    return out;
}

std::vector<int> lattice_atoms(const FiniteAlgebra& alg) {
    std::vector<int> out;
    for (int x = 0; x < alg.n; ++x) {
        if (x == alg.zero) continue;
        bool atom = true;
        for (int y = 0; y < alg.n && atom; ++y)
            if (y != x && y != alg.zero && alg.leq(y, x)) atom = false;
        if (atom) out.push_back(x);
    }
    return out;
}

BooleanExtension free_boolean_extension(const FiniteAlgebra& lattice) {
    BooleanExtension out;
    out.join_irreducibles = join_irreducibles(lattice);
    int k = static_cast<int>(out.join_irreducibles.size());
    if (k > 12) throw Error("free Boolean extension too large");
    int n = 1 << k;
    FiniteAlgebra& B = out.ba;
    B.cls = AlgClass::HA;
    B.n = n;
    B.zero = 0;
    B.one = n - 1;
    B.meet.resize(std::size_t(n) * n);
    B.join.resize(std::size_t(n) * n);
    B.imp.resize(std::size_t(n) * n);
    B.neg.resize(n);
    for (int x = 0; x < n; ++x) {
        B.neg[x] = (n - 1) & ~x;
        for (int y = 0; y < n; ++y) {
            B.meet[x * n + y] = x & y;
            B.join[x * n + y] = x | y;
            B.imp[x * n + y] = ((n - 1) & ~x) | y;
        }
    }
    out.embedding.resize(lattice.n);
    for (int a = 0; a < lattice.n; ++a) {
        int mask = 0;
        for (int i = 0; i < k; ++i)
            if (lattice.leq(out.join_irreducibles[i], a)) mask |= 1 << i;
        out.embedding[a] = mask;
    }
    return out;
}

std::vector<int> open_elements(const FiniteAlgebra& alg) {
    std::vector<int> out;
    for (int a = 0; a < alg.n; ++a) {
        bool open;
        if (alg.cls == AlgClass::TEN) open = alg.boxF[a] == a;
        else if (alg.cls == AlgClass::MAG) open = alg.boxplus(a) == a;
        else if (!alg.box.empty()) open = alg.box[a] == a;
        else throw Error("open_elements needs a modal algebra");
        if (open) out.push_back(a);
    }
    return out;
}

// ---------------------------------------------------------------- isomorphism

namespace {

bool same_shape(const std::vector<int>& x, const std::vector<int>& y) { return x.empty() == y.empty(); }

bool commutes(const FiniteAlgebra& a, const FiniteAlgebra& b, const std::vector<int>& h) {
    int n = a.n;
    if (h[a.zero] != b.zero || h[a.one] != b.one) return false;
    auto bin = [&](const std::vector<int>& ta, const std::vector<int>& tb) {
        if (ta.empty()) return true;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (h[ta[x * n + y]] != tb[h[x] * n + h[y]]) return false;
        return true;
    };
    auto un = [&](const std::vector<int>& ta, const std::vector<int>& tb) {
        if (ta.empty()) return true;
        for (int x = 0; x < n; ++x)
            if (h[ta[x]] != tb[h[x]]) return false;
        return true;
    };
    return bin(a.meet, b.meet) && bin(a.join, b.join) && bin(a.imp, b.imp) && bin(a.coimp, b.coimp) &&
           un(a.neg, b.neg) && un(a.box, b.box) && un(a.boxF, b.boxF) && un(a.diaP, b.diaP) &&
           un(a.boxdot, b.boxdot);
}

}  // namespace

void for_each_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                          const std::function<bool(const std::vector<int>&)>& cb) {
    if (a.n != b.n) return;
    if (!same_shape(a.imp, b.imp) || !same_shape(a.coimp, b.coimp) || !same_shape(a.neg, b.neg) ||
        !same_shape(a.box, b.box) || !same_shape(a.boxF, b.boxF) || !same_shape(a.diaP, b.diaP) ||
        !same_shape(a.boxdot, b.boxdot))
        return;
    std::vector<int> ja = join_irreducibles(a), jb = join_irreducibles(b);
    if (ja.size() != jb.size()) return;
    int k = static_cast<int>(ja.size());
    auto below_count = [](const FiniteAlgebra& A, int x) {
        int c = 0;
        for (int y = 0; y < A.n; ++y) c += A.leq(y, x);
        return c;
    };
    std::vector<int> ca(k), cbv(k);
    for (int i = 0; i < k; ++i) {
        ca[i] = below_count(a, ja[i]);
        cbv[i] = below_count(b, jb[i]);
    }
    std::vector<int> pi(k, -1);
    std::vector<char> used(k, 0);
    std::vector<int> h(a.n);
    bool stop = false;
    auto rec = [&](auto&& self, int i) -> void {
        if (stop) return;
        if (i == k) {
            std::vector<char> hit(b.n, 0);
            for (int x = 0; x < a.n; ++x) {
                int acc = b.zero;
                for (int t = 0; t < k; ++t)
                    if (a.leq(ja[t], x)) acc = b.j(acc, jb[pi[t]]);
                if (hit[acc]) return;
                hit[acc] = 1;
                h[x] = acc;
            }
            if (commutes(a, b, h)) stop = cb(h);
            return;
        }
        for (int c = 0; c < k; ++c) {
            if (used[c] || ca[i] != cbv[c]) continue;
            bool ok = true;
            for (int t = 0; t < i && ok; ++t)
                if (a.leq(ja[t], ja[i]) != b.leq(jb[pi[t]], jb[c]) || a.leq(ja[i], ja[t]) != b.leq(jb[c], jb[pi[t]]))
                    ok = false;
            if (!ok) continue;
            used[c] = 1;
            pi[i] = c;
            self(self, i + 1);
            used[c] = 0;
            if (stop) return;
        }
    };
    rec(rec, 0);
}

std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    std::optional<std::vector<int>> out;
    for_each_isomorphism(a, b, [&](const std::vector<int>& h) {
        out = h;
        return true;
    });
    return out;
}

FiniteAlgebra chain_heyting(int n) {
    if (n < 1) throw Error("chain needs at least one element");
    FiniteAlgebra A;
    A.cls = AlgClass::HA;
    A.n = n;
    A.zero = 0;
    A.one = n - 1;
    A.meet.resize(std::size_t(n) * n);
    A.join.resize(std::size_t(n) * n);
    A.imp.resize(std::size_t(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            A.meet[x * n + y] = std::min(x, y);
            A.join[x * n + y] = std::max(x, y);
            A.imp[x * n + y] = x <= y ? n - 1 : y;
        }
    return A;
}

FiniteAlgebra relabel(const FiniteAlgebra& alg, const std::vector<int>& perm) {
    int n = alg.n;
    if (static_cast<int>(perm.size()) != n) throw Error("relabel: permutation size mismatch");
    FiniteAlgebra out = alg;
    out.zero = perm[alg.zero];
    out.one = perm[alg.one];
    auto bin = [&](const std::vector<int>& src, std::vector<int>& dst) {
        if (src.empty()) return;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) dst[perm[x] * n + perm[y]] = perm[src[x * n + y]];
    };
    auto un = [&](const std::vector<int>& src, std::vector<int>& dst) {
        if (src.empty()) return;
        for (int x = 0; x < n; ++x) dst[perm[x]] = perm[src[x]];
    };
    bin(alg.meet, out.meet);
    bin(alg.join, out.join);
    bin(alg.imp, out.imp);
    bin(alg.coimp, out.coimp);
    un(alg.neg, out.neg);
    un(alg.box, out.box);
    un(alg.boxF, out.boxF);
    un(alg.diaP, out.diaP);
    un(alg.boxdot, out.boxdot);
    return out;
}

}  // namespace scr
