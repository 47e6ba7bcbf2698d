#pragma once

// Internal: formulas flattened to register programs, plus the backtracking
// refutation search shared by algebraic and Kripke validity.

#include <algorithm>
#include <map>
#include <vector>

#include "scr/syntax.hpp"

namespace scr::detail {

struct Instr {
    Op op;
    int a = -1, b = -1;  // register operands
    int slot = -1;       // atom slot for Op::Atom
};

struct Program {
    std::vector<Instr> code;  // result is the last register
    int level = -1;           // highest atom slot read
};

inline Program compile(const Formula& f, const std::map<int, int>& slot_of) {
    Program p;
    std::map<const Node*, int> memo;
    auto go = [&](auto&& self, const Formula& g) -> int {
        auto it = memo.find(g.get());
        if (it != memo.end()) return it->second;
        Instr ins{g->op};
        if (g->op == Op::Atom) {
            ins.slot = slot_of.at(g->atom);
            p.level = std::max(p.level, ins.slot);
        }
        if (g->a) ins.a = self(self, g->a);
        if (g->b) ins.b = self(self, g->b);
        p.code.push_back(ins);
        int r = static_cast<int>(p.code.size()) - 1;
        memo[g.get()] = r;
        return r;
    };
    go(go, f);
    return p;
}

// Search for an assignment of candidate values to slots 0..k-1 under which
// every premise is top and no conclusion is top. is_top(program, values)
// evaluates one program. Returns true and fills `found` on success.
template <class Value, class IsTop>
bool search_refutation(const std::vector<std::vector<Value>>& candidates,
                       const std::vector<Program>& premises, const std::vector<Program>& conclusions,
                       IsTop is_top, std::vector<Value>& found) {
    int k = static_cast<int>(candidates.size());
    std::vector<std::vector<const Program*>> prem_at(k + 1), conc_at(k + 1);
    for (auto& p : premises) prem_at[p.level + 1].push_back(&p);
    for (auto& c : conclusions) conc_at[c.level + 1].push_back(&c);
    std::vector<Value> vals(k);
    auto ok_at = [&](int lvl) {
        for (auto* p : prem_at[lvl])
            if (!is_top(*p, vals)) return false;
        for (auto* c : conc_at[lvl])
            if (is_top(*c, vals)) return false;
        return true;
    };
    if (!ok_at(0)) return false;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) return true;
        for (const Value& v : candidates[i]) {
            vals[i] = v;
            if (ok_at(i + 1) && self(self, i + 1)) return true;
        }
        return false;
    };
    if (rec(rec, 0)) {
        found = vals;
        return true;
    }
    return false;
}

}  // namespace scr::detail
