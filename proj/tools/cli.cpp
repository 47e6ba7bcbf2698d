#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iomanip>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "scr/algebra.hpp"
#include "scr/canonical.hpp"
#include "scr/companions.hpp"
#include "scr/filtration.hpp"
#include "scr/frames.hpp"
#include "scr/gen.hpp"
#include "scr/io.hpp"
#include "scr/syntax.hpp"
#include "scr/verify.hpp"

namespace scr {

namespace {

struct Options {
    std::string algebra, frame, rule, from = "si", method, theta, sig, valuation, domains, target, kind = "POSET",
                suite, cls, text, variant;
    int bound = 6, max_atoms = 8, size = 0, max_size = 0;
    std::uint64_t seed = 1;
    bool json = false, upto = false;
};

std::string trim(std::string s) {
    auto sp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && sp(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && sp(s[i])) ++i;
    return s.substr(i);
}

// A rule argument is either the rule text or the path of a file holding it.
std::string rule_text(const std::string& arg) {
    std::error_code ec;
    if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) return trim(read_file(arg));
    return arg;
}

Sig frame_sig(FrameKind k) {
    switch (k) {
        case FrameKind::POSET: return Sig::SI;
        case FrameKind::BI: return Sig::BSI;
        case FrameKind::KM: return Sig::MSI;
        case FrameKind::TENSE: return Sig::TEN;
        default: return Sig::MD;
    }
}

Valuation parse_valuation(const std::string& text, int carrier) {
    Valuation v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos || item.size() < 2 || item[0] != 'p')
            throw Error("valuation entries look like p1=2, got '" + item + "'");
        int atom, value;
        try {
            atom = std::stoi(item.substr(1, eq - 1));
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw Error("malformed valuation entry '" + item + "'");
        }
        if (value < 0 || value >= carrier) throw Error("valuation value out of range in '" + item + "'");
        v[atom] = value;
    }
    return v;
}

std::string valuation_text(const Valuation& v) {
    std::string out;
    for (auto [p, a] : v) out += (out.empty() ? "" : ", ") + ("V(p" + std::to_string(p) + ") = " + std::to_string(a));
    return out;
}

std::string point_valuation_text(const PointValuation& v) {
    std::string out;
    for (auto [p, m] : v) {
        out += (out.empty() ? "" : ", ") + ("V(p" + std::to_string(p) + ") = {");
        bool first = true;
        for (int x : mask_elements(m)) {
            out += (first ? "" : ",") + std::to_string(x);
            first = false;
        }
        out += "}";
    }
    return out;
}

FiniteAlgebra load_algebra(const std::string& path) {
    if (path.empty()) throw Error("--algebra is required");
    return algebra_from_json(read_json_file(path));
}

int cmd_parse(const Options& o, std::ostream& out) {
    Sig s = parse_sig(o.sig.empty() ? "si" : o.sig);
    std::string text = rule_text(o.text);
    if (text.find('/') != std::string::npos) {
        Rule r = parse_rule(text, s);
        auto sf = subformula_closure(r);
        if (o.json) {
            Json j{{"sig", sig_name(s)}, {"rule", print_rule(r)}, {"subformulas", sf.size()}};
            out << j.dump() << "\n";
        } else {
            out << print_rule(r) << "\n";
        }
        return 0;
    }
    Formula f = parse_formula(text, s);
    if (o.json) {
        Json j{{"sig", sig_name(s)}, {"formula", print_formula(f)}, {"subformulas", subformulas(f).size()}};
        out << j.dump() << "\n";
    } else {
        out << print_formula(f) << "\n";
    }
    return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
    if (o.rule.empty()) throw Error("--rule is required");
    ValidateOptions opt;
    opt.max_atoms = o.max_atoms;
    if (!o.frame.empty()) {
        FiniteFrame fr = frame_from_json(read_json_file(o.frame));
        Sig s = o.sig.empty() ? frame_sig(fr.kind) : parse_sig(o.sig);
        Rule r = parse_rule(rule_text(o.rule), s);
        FrameVerdict v = frame_validates(fr, r, opt);
        if (o.json) {
            Json j{{"result", v.valid ? "valid" : "refuted"}};
            if (!v.valid) j["witness"] = point_valuation_to_json(v.witness);
            out << j.dump() << "\n";
        } else {
            out << (v.valid ? "valid" : "refuted") << "\n";
            if (!v.valid) out << "witness: " << point_valuation_text(v.witness) << "\n";
        }
        return v.valid ? 0 : 1;
    }
    FiniteAlgebra alg = load_algebra(o.algebra);
    Sig s = o.sig.empty() ? default_signature(alg.cls) : parse_sig(o.sig);
    Rule r = parse_rule(rule_text(o.rule), s);
    bool valid;
    Valuation witness;
    if (!o.valuation.empty()) {
        witness = parse_valuation(o.valuation, alg.n);
        valid = !refutes_under(alg, r, witness);
    } else {
        Verdict v = validates(alg, r, opt);
        valid = v.valid;
        witness = v.witness;
    }
    if (o.json) {
        Json j{{"result", valid ? "valid" : "refuted"}};
        if (!valid) j["witness"] = valuation_to_json(witness);
        out << j.dump() << "\n";
    } else {
        out << (valid ? "valid" : "refuted") << "\n";
        if (!valid) out << "witness: " << valuation_text(witness) << "\n";
    }
    return valid ? 0 : 1;
}

int cmd_translate(const Options& o, std::ostream& out) {
    Sig from = parse_sig(o.from);
    std::string text = rule_text(o.text);
    std::string result;
    if (text.find('/') != std::string::npos)
        result = print_rule(godel_translate(parse_rule(text, from)));
    else
        result = print_formula(godel_translate(parse_formula(text, from), from));
    if (o.json)
        out << Json{{"from", sig_name(from)}, {"to", sig_name(translation_target(from))}, {"result", result}}.dump() << "\n";
    else
        out << result << "\n";
    return 0;
}

int cmd_scr(const Options& o, std::ostream& out) {
    FiniteAlgebra alg = load_algebra(o.algebra);
    DomainSpec d;
    if (!o.domains.empty()) {
        d = domains_from_json(read_json_file(o.domains));
    } else {
        d.variant = o.variant.empty() ? default_variant(alg.cls) : parse_variant(o.variant);
    }
    StableCanonicalRule s = build_scr(alg, d);
    if (o.target.empty()) {
        if (o.json)
            out << scr_to_json(s).dump() << "\n";
        else
            out << print_rule(s.rule) << "\n";
        return 0;
    }
    FiniteAlgebra tgt = load_algebra(o.target);
    auto h = find_stable_embedding(alg, tgt, d);
    if (o.json) {
        Json j{{"result", h ? "refuted" : "valid"}};
        if (h) j["embedding"] = *h;
        out << j.dump() << "\n";
    } else {
        out << (h ? "refuted" : "valid") << "\n";
        if (h) {
            out << "embedding:";
            for (int x : *h) out << " " << x;
            out << "\n";
        }
    }
    return h ? 1 : 0;
}

int cmd_rewrite(const Options& o, std::ostream& out) {
    if (o.rule.empty()) throw Error("--rule is required");
    Sig s = parse_sig(o.sig.empty() ? "si" : o.sig);
    Rule r = parse_rule(rule_text(o.rule), s);
    std::optional<AlgClass> cls;
    if (!o.cls.empty()) cls = parse_class(o.cls);
    auto xi = rewrite_rule_bounded(r, o.bound, cls);
    if (o.json) {
        Json arr = Json::array();
        for (auto& x : xi) arr.push_back(scr_to_json(x));
        out << arr.dump() << "\n";
    } else {
        out << xi.size() << " stable canonical rule" << (xi.size() == 1 ? "" : "s") << " within bound " << o.bound << "\n";
        for (std::size_t i = 0; i < xi.size(); ++i)
            out << "  [" << i << "] " << class_name(xi[i].alg.cls) << " of size " << xi[i].alg.n << ", domains "
                << domains_to_json(xi[i].domains).dump() << "\n";
    }
    return 0;
}

void print_report(const CompanionReport& rep, bool json, std::ostream& out) {
    if (json) {
        out << report_to_json(rep).dump() << "\n";
        return;
    }
    out << rep.lemma << ": left " << rep.left << ", right " << rep.right << (rep.agree ? " (agree)" : " (DISAGREE)") << "\n";
    if (!rep.note.empty()) out << "  " << rep.note << "\n";
    if (rep.left_witness) out << "  left witness: " << valuation_text(*rep.left_witness) << "\n";
    if (rep.right_witness) out << "  right witness: " << valuation_text(*rep.right_witness) << "\n";
    if (!rep.map.empty()) {
        out << "  map:";
        for (int x : rep.map) out << " " << x;
        out << "\n";
    }
}

int cmd_skeleton(const Options& o, std::ostream& out) {
    if (!o.frame.empty()) {
        FiniteFrame fr = frame_from_json(read_json_file(o.frame));
        Skeleton sk = skeleton_frame(fr);
        Json j = frame_to_json(sk.frame);
        j["map"] = sk.map;
        out << (o.json ? j.dump() : j.dump(2)) << "\n";
        return 0;
    }
    FiniteAlgebra alg = load_algebra(o.algebra);
    if (o.rule.empty()) {
        CompanionReport rep = check_skeleton_identities(alg);
        print_report(rep, o.json, out);
        return rep.agree ? 0 : 1;
    }
    std::string text = rule_text(o.rule);
    CompanionReport rep;
    Sig s;
    if (!o.sig.empty()) {
        s = parse_sig(o.sig);
    } else {
        s = alg.cls == AlgClass::TEN ? Sig::BSI : alg.cls == AlgClass::MAG ? Sig::MSI : Sig::SI;
    }
    if (s == Sig::MD || s == Sig::TEN)
        rep = check_main_lemma(alg, parse_rule(text, s));
    else
        rep = check_gtskeleton(alg, parse_rule(text, s));
    print_report(rep, o.json, out);
    return rep.agree ? 0 : 1;
}

int cmd_filtrate(const Options& o, std::ostream& out) {
    FiniteAlgebra alg = load_algebra(o.algebra);
    FiltrationMethod m = o.method.empty() ? method_for(default_signature(alg.cls), alg.cls) : parse_method(o.method);
    Sig s = variant_signature(variant_of(m));
    if (o.theta.empty()) throw Error("--theta is required");
    std::vector<Formula> fs;
    std::stringstream ss(o.theta);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!trim(item).empty()) fs.push_back(parse_formula(trim(item), s));
    std::vector<Formula> theta = subformula_closure(fs);
    std::set<int> atoms;
    for (auto& f : theta) collect_atoms(f, atoms);
    Valuation v;
    if (!o.valuation.empty()) {
        v = parse_valuation(o.valuation, alg.n);
    } else {
        int top = atoms.empty() ? 1 : *atoms.rbegin();
        v = random_model(alg, top, o.seed);
    }
    for (int p : atoms)
        if (!v.count(p)) throw Error("valuation misses atom p" + std::to_string(p));
    FiltrationResult f = filtrate(alg, v, theta, m);
    if (o.json) {
        out << filtration_to_json(f).dump() << "\n";
    } else {
        out << method_name(m) << " filtration: " << class_name(f.alg.cls) << " of size " << f.alg.n << "\n";
        out << "inclusion:";
        for (int x : f.inclusion) out << " " << x;
        out << "\n";
        out << "valuation: " << valuation_text(f.val) << "\n";
        out << "domains: " << domains_to_json(f.domains).dump() << "\n";
    }
    return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    if (o.size < 1) throw Error("--size must be at least 1");
    FrameKind k = parse_kind(o.kind);
    EnumerationRequest req;
    req.kind = k;
    for (int n = o.upto ? 1 : o.size; n <= o.size; ++n) {
        req.n = n;
        for (auto& fr : enumerate_frames(req)) out << frame_to_json(fr).dump() << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<std::string> names;
    if (o.suite == "all")
        names = suite_names();
    else
        names.push_back(o.suite);
    bool all_ok = true;
    Json arr = Json::array();
    if (!o.json) out << std::left << std::setw(14) << "suite" << std::setw(10) << "checked" << "failed\n";
    for (auto& name : names) {
        SuiteResult r = run_suite(name, o.max_size, o.seed);
        all_ok = all_ok && r.ok();
        if (o.json) {
            Json counts = Json::object();
            for (auto& [k, v] : r.counts) counts[k] = v;
            Json j{{"suite", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"counts", counts}};
            if (r.failed) j["first_failure"] = r.first_failure;
            arr.push_back(j);
            continue;
        }
        out << std::left << std::setw(14) << r.name << std::setw(10) << r.checked << r.failed << "\n";
        for (auto& [k, v] : r.counts) out << "    " << k << ": " << v << "\n";
        if (r.failed) out << "    first counterexample: " << r.first_failure << "\n";
    }
    if (o.json) out << arr.dump() << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Stable canonical rules for finite algebras and frames"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all");

    auto common = [&](CLI::App* c) {
        c->add_flag("--json", o.json, "JSON output");
        c->add_option("--sig", o.sig, "signature: si, bsi, msi, md, ten");
    };
    auto* parse = app.add_subcommand("parse", "Parse and pretty-print a formula or rule");
    common(parse);
    parse->add_option("text", o.text, "formula or rule")->required();

    auto* check = app.add_subcommand("check", "Decide validity of a rule on an algebra or frame");
    common(check);
    check->add_option("--algebra", o.algebra, "algebra JSON");
    check->add_option("--frame", o.frame, "frame JSON");
    check->add_option("--rule", o.rule, "rule text or path")->required();
    check->add_option("--max-atoms", o.max_atoms, "exhaustive search cap");
    check->add_option("--valuation", o.valuation, "fixed valuation, e.g. p1=2,p2=0");

    auto* translate = app.add_subcommand("translate", "Goedel translation of a formula or rule");
    translate->add_flag("--json", o.json, "JSON output");
    translate->add_option("--from", o.from, "source signature: si, bsi, msi");
    translate->add_option("text", o.text, "formula or rule")->required();

    auto* scrc = app.add_subcommand("scr", "Build a stable canonical rule, optionally test it on a target");
    common(scrc);
    scrc->add_option("--algebra", o.algebra, "source algebra JSON")->required();
    scrc->add_option("--domains", o.domains, "domain JSON");
    scrc->add_option("--variant", o.variant, "rule variant when no domains are given");
    scrc->add_option("--target", o.target, "target algebra JSON");

    auto* rewrite = app.add_subcommand("rewrite", "Rewrite a rule into stable canonical rules");
    common(rewrite);
    rewrite->add_option("--rule", o.rule, "rule text or path")->required();
    rewrite->add_option("--bound", o.bound, "algebra size bound");
    rewrite->add_option("--class", o.cls, "algebra class for md rules (MA or MAG)");

    auto* skeleton = app.add_subcommand("skeleton", "Skeleton identities and translation lemmas");
    common(skeleton);
    skeleton->add_option("--algebra", o.algebra, "algebra JSON");
    skeleton->add_option("--frame", o.frame, "frame JSON whose skeleton is printed");
    skeleton->add_option("--rule", o.rule, "rule for the translation or main lemma");

    auto* filt = app.add_subcommand("filtrate", "Filtrate a model through a set of formulas");
    common(filt);
    filt->add_option("--algebra", o.algebra, "algebra JSON")->required();
    filt->add_option("--method", o.method, "SI, S4, BSI, TENSE, FRT_WEAK, MAG_WEAK");
    filt->add_option("--theta", o.theta, "formulas separated by ';' (closed under subformulas)")->required();
    filt->add_option("--valuation", o.valuation, "valuation, e.g. p1=2,p2=0");
    filt->add_option("--seed", o.seed, "seed for a random valuation");

    auto* en = app.add_subcommand("enumerate", "Emit frames up to isomorphism as JSON lines");
    en->add_option("--kind", o.kind, "POSET, PREORDER, STRICT, BI, TENSE, KM, KRIPKE");
    en->add_option("--size", o.size, "number of points")->required();
    en->add_flag("--upto", o.upto, "all sizes from 1");

    auto* ver = app.add_subcommand("verify", "Run a property suite");
    ver->add_flag("--json", o.json, "JSON output");
    ver->add_option("--suite", o.suite, "duality, filtration, scr, rewrite, translation, skeleton, collapse, kmgl, all")
        ->required();
    ver->add_option("--max-size", o.max_size, "size cap (suite default when omitted)");
    ver->add_option("--seed", o.seed, "seed");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*parse) return cmd_parse(o, out);
        if (*check) {
            if (o.algebra.empty() == o.frame.empty()) throw Error("give exactly one of --algebra and --frame");
            return cmd_check(o, out);
        }
        if (*translate) return cmd_translate(o, out);
        if (*scrc) return cmd_scr(o, out);
        if (*rewrite) return cmd_rewrite(o, out);
        if (*skeleton) {
            if (o.algebra.empty() == o.frame.empty()) throw Error("give exactly one of --algebra and --frame");
            return cmd_skeleton(o, out);
        }
        if (*filt) return cmd_filtrate(o, out);
        if (*en) return cmd_enumerate(o, out);
        if (*ver) return cmd_verify(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace scr
