// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Usage: acceptance [criterion ...]   (default: all eight)

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "scr/gen.hpp"
#include "scr/verify.hpp"

using namespace scr;

namespace {

constexpr std::uint64_t kSeed = 20261014;

struct Outcome {
    bool pass;
    std::string summary;
    std::vector<std::string> notes;
};

Outcome from_suite(const SuiteResult& r, const std::string& what) {
    Outcome o;
    o.pass = r.ok();
    std::ostringstream s;
    s << what << ": " << r.checked << " checks, " << r.failed << " failed";
    o.summary = s.str();
    if (r.failed) o.notes.push_back("first counterexample: " + r.first_failure);
    return o;
}

Outcome criterion1() {
    SuiteResult r = suite_duality(5, 4, 4);
    struct Count {
        FrameKind kind;
        oracle::Kind ok;
        int max;
    };
    std::ostringstream counts;
    for (const Count& c : {Count{FrameKind::POSET, oracle::Kind::Poset, 5}, Count{FrameKind::PREORDER, oracle::Kind::Preorder, 4},
                           Count{FrameKind::STRICT, oracle::Kind::Strict, 4}}) {
        counts << " " << kind_name(c.kind) << "=";
        for (int n = 1; n <= c.max; ++n) {
            long got = static_cast<long>(enumerate_frames(n, c.kind).size());
            long want = oracle::count_classes(n, c.ok);
            r.check(got == want, kind_name(c.kind) + " count at n=" + std::to_string(n) + " is " + std::to_string(got) +
                                     ", oracle says " + std::to_string(want));
            counts << (n > 1 ? "+" : "") << got;
        }
    }
    Outcome o = from_suite(r, "duality round trips, class axioms and oracle counts");
    o.summary += ";" + counts.str();
    return o;
}

Outcome criterion2() {
    return from_suite(suite_filtration(600, kSeed, 8, 6), "600 seeded filtrations over all six methods");
}

Outcome criterion3() {
    return from_suite(suite_scr(200, kSeed, 6, 4), "self-refutation (200 per variant) and cross-oracle");
}

Outcome criterion4() {
    SuiteResult r = suite_rewrite(6, 4);
    Outcome o = from_suite(r, "rewrite equivalence at bound 6 on frames up to 4 points");
    if (!r.ok()) {
        SuiteResult wide = suite_rewrite(16, 4);
        o.notes.push_back("with bound 16 the same corpus and targets give " + std::to_string(wide.failed) +
                          " failures in " + std::to_string(wide.checked) + " checks");
        o.notes.push_back("Boolean filtrations through five formulas can need 8 or 16 elements, above bound 6");
    }
    return o;
}

Outcome criterion5() {
    return from_suite(suite_translation(4, 3, 4, 4), "translation lemmas on S4<=4, TEN<=3, MAG<=4 points");
}

Outcome criterion6() { return from_suite(suite_skeleton(5, 4), "skeleton identities, posets<=5, preorders<=4"); }

Outcome criterion7() { return from_suite(suite_collapse(4, 8, 6, kSeed), "rule collapse and cluster expansion"); }

Outcome criterion8() { return from_suite(suite_kmgl(4), "KM/GL structure on frames up to 4 points"); }

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> all = {
        {"duality", criterion1},    {"filtration", criterion2}, {"scr", criterion3},      {"rewrite", criterion4},
        {"translation", criterion5}, {"skeleton", criterion6},  {"collapse", criterion7}, {"kmgl", criterion8}};
    std::vector<int> chosen;
    for (int i = 1; i < argc; ++i) {
        int k = std::atoi(argv[i]);
        if (k < 1 || k > 8) {
            std::cerr << "criterion must be 1..8, got '" << argv[i] << "'\n";
            return 2;
        }
        chosen.push_back(k);
    }
    if (chosen.empty())
        for (int k = 1; k <= 8; ++k) chosen.push_back(k);

    bool ok = true;
    for (int k : chosen) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = all[k - 1].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what(), {}};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << k << " (" << all[k - 1].first << ") " << o.summary
                  << " [" << static_cast<int>(secs * 1000) << " ms]\n";
        for (auto& n : o.notes) std::cout << "      " << n << "\n";
        ok = ok && o.pass;
    }
    return ok ? 0 : 1;
}
