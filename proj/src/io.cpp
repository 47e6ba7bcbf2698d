#include "scr/io.hpp"

#include <fstream>
#include <sstream>

namespace scr {

namespace {

Json table2(const std::vector<int>& t, int n) {
    Json rows = Json::array();
    for (int a = 0; a < n; ++a) {
        Json row = Json::array();
        for (int b = 0; b < n; ++b) row.push_back(t[a * n + b]);
        rows.push_back(row);
    }
    return rows;
}

std::vector<int> read_table2(const Json& j, int n, const char* name) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw Error(std::string("table ") + name + " must have " + std::to_string(n) + " rows");
    std::vector<int> t;
    for (auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw Error(std::string("table ") + name + " has a row of wrong length");
        for (auto& v : row) {
            if (!v.is_number_integer()) throw Error(std::string("table ") + name + " has a non-integer entry");
            t.push_back(v.get<int>());
        }
    }
    return t;
}

std::vector<int> read_table1(const Json& j, int n, const char* name) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw Error(std::string("table ") + name + " must have " + std::to_string(n) + " entries");
    std::vector<int> t;
    for (auto& v : j) {
        if (!v.is_number_integer()) throw Error(std::string("table ") + name + " has a non-integer entry");
        t.push_back(v.get<int>());
    }
    return t;
}

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw Error(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

}  // namespace

Json algebra_to_json(const FiniteAlgebra& a) {
    Json j;
    j["class"] = class_name(a.cls);
    j["size"] = a.n;
    j["zero"] = a.zero;
    j["one"] = a.one;
    j["meet"] = table2(a.meet, a.n);
    j["join"] = table2(a.join, a.n);
    if (!a.imp.empty()) j["imp"] = table2(a.imp, a.n);
    if (!a.coimp.empty()) j["coimp"] = table2(a.coimp, a.n);
    if (!a.neg.empty()) j["neg"] = a.neg;
    if (!a.box.empty()) j["box"] = a.box;
    if (!a.boxF.empty()) j["boxF"] = a.boxF;
    if (!a.diaP.empty()) j["diaP"] = a.diaP;
    if (!a.boxdot.empty()) j["boxdot"] = a.boxdot;
    return j;
}

FiniteAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw Error("algebra JSON must be an object");
    if (!j.contains("class") || !j["class"].is_string()) throw Error("missing field 'class'");
    FiniteAlgebra a;
    a.cls = parse_class(j["class"].get<std::string>());
    a.n = get_int(j, "size");
    if (a.n < 1 || a.n > 4096) throw Error("algebra size out of range");
    a.zero = get_int(j, "zero");
    a.one = get_int(j, "one");
    if (!j.contains("meet") || !j.contains("join")) throw Error("algebra needs meet and join tables");
    a.meet = read_table2(j["meet"], a.n, "meet");
    a.join = read_table2(j["join"], a.n, "join");
    if (j.contains("imp")) a.imp = read_table2(j["imp"], a.n, "imp");
    if (j.contains("coimp")) a.coimp = read_table2(j["coimp"], a.n, "coimp");
    if (j.contains("neg")) a.neg = read_table1(j["neg"], a.n, "neg");
    if (j.contains("box")) a.box = read_table1(j["box"], a.n, "box");
    if (j.contains("boxF")) a.boxF = read_table1(j["boxF"], a.n, "boxF");
    if (j.contains("diaP")) a.diaP = read_table1(j["diaP"], a.n, "diaP");
    if (j.contains("boxdot")) a.boxdot = read_table1(j["boxdot"], a.n, "boxdot");
    ClassCheck c = check_class(a);
    if (!c.ok) throw Error("algebra fails the " + class_name(a.cls) + " axioms: " + c.failure);
    return a;
}

Json frame_to_json(const FiniteFrame& fr) {
    Json j;
    j["kind"] = kind_name(fr.kind);
    j["size"] = fr.n;
    j["rel"] = to_matrix(fr.rel, fr.n);
    if (!fr.rel2.empty()) j["rel2"] = to_matrix(fr.rel2, fr.n);
    return j;
}

FiniteFrame frame_from_json(const Json& j) {
    if (!j.is_object()) throw Error("frame JSON must be an object");
    if (!j.contains("kind") || !j["kind"].is_string()) throw Error("missing field 'kind'");
    if (!j.contains("rel")) throw Error("missing field 'rel'");
    FrameKind k = parse_kind(j["kind"].get<std::string>());
    std::vector<std::vector<int>> m;
    try {
        m = j["rel"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception&) {
        throw Error("field 'rel' must be a 0/1 matrix");
    }
    FiniteFrame fr = make_frame(k, m);
    if (j.contains("size") && get_int(j, "size") != fr.n) throw Error("frame 'size' does not match 'rel'");
    if (j.contains("rel2")) {
        std::vector<std::vector<int>> m2;
        try {
            m2 = j["rel2"].get<std::vector<std::vector<int>>>();
        } catch (const nlohmann::json::exception&) {
            throw Error("field 'rel2' must be a 0/1 matrix");
        }
        fr.rel2 = make_frame(k, m2).rel;
        if (static_cast<int>(fr.rel2.size()) != fr.n) throw Error("'rel2' has the wrong size");
    } else if (k == FrameKind::KM) {
        fr.rel2 = fr.rel;
        for (int x = 0; x < fr.n; ++x) fr.rel2[x] &= ~bit(x);
    }
    std::string bad = frame_violation(fr);
    if (!bad.empty()) throw Error("frame violates the " + kind_name(k) + " invariants: " + bad);
    return fr;
}

Json domains_to_json(const DomainSpec& d) {
    Json j;
    j["variant"] = variant_name(d.variant);
    auto pairs = [](const PairSet& s) {
        Json a = Json::array();
        for (auto [x, y] : s) a.push_back({x, y});
        return a;
    };
    auto elems = [](const ElemSet& s) { return Json(std::vector<int>(s.begin(), s.end())); };
    if (!d.imp.empty()) j["imp"] = pairs(d.imp);
    if (!d.coimp.empty()) j["coimp"] = pairs(d.coimp);
    if (!d.box.empty()) j["box"] = elems(d.box);
    if (!d.boxF.empty()) j["boxF"] = elems(d.boxF);
    if (!d.diaP.empty()) j["diaP"] = elems(d.diaP);
    if (!d.boxdot.empty()) j["boxdot"] = elems(d.boxdot);
    if (!d.boxplus.empty()) j["boxplus"] = elems(d.boxplus);
    if (!d.imp_regions.empty()) j["imp_regions"] = d.imp_regions;
    if (!d.coimp_regions.empty()) j["coimp_regions"] = d.coimp_regions;
    return j;
}

DomainSpec domains_from_json(const Json& j) {
    if (!j.is_object()) throw Error("domains must be an object");
    DomainSpec d;
    if (!j.contains("variant") || !j["variant"].is_string()) throw Error("domains need a 'variant'");
    d.variant = parse_variant(j["variant"].get<std::string>());
    try {
        auto pairs = [&](const char* key, PairSet& out) {
            if (!j.contains(key)) return;
            for (auto& p : j[key]) {
                auto v = p.get<std::vector<int>>();
                if (v.size() != 2) throw Error(std::string("entries of '") + key + "' must be pairs");
                out.insert({v[0], v[1]});
            }
        };
        auto elems = [&](const char* key, ElemSet& out) {
            if (!j.contains(key)) return;
            for (int v : j[key].get<std::vector<int>>()) out.insert(v);
        };
        pairs("imp", d.imp);
        pairs("coimp", d.coimp);
        elems("box", d.box);
        elems("boxF", d.boxF);
        elems("diaP", d.diaP);
        elems("boxdot", d.boxdot);
        elems("boxplus", d.boxplus);
        if (j.contains("imp_regions")) d.imp_regions = j["imp_regions"].get<std::vector<std::vector<int>>>();
        if (j.contains("coimp_regions")) d.coimp_regions = j["coimp_regions"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed domains: ") + e.what());
    }
    return d;
}

Json scr_to_json(const StableCanonicalRule& s) {
    Json j = algebra_to_json(s.alg);
    j["domains"] = domains_to_json(s.domains);
    j["rule"] = print_rule(s.rule);
    return j;
}

StableCanonicalRule scr_from_json(const Json& j) {
    if (!j.contains("domains")) throw Error("stable canonical rule JSON needs 'domains'");
    return build_scr(algebra_from_json(j), domains_from_json(j["domains"]));
}

Json valuation_to_json(const Valuation& v) {
    Json j = Json::object();
    for (auto [p, a] : v) j["p" + std::to_string(p)] = a;
    return j;
}

Json point_valuation_to_json(const PointValuation& v) {
    Json j = Json::object();
    for (auto [p, m] : v) j["p" + std::to_string(p)] = mask_elements(m);
    return j;
}

Json report_to_json(const CompanionReport& r) {
    Json j;
    j["lemma"] = r.lemma;
    j["left"] = r.left;
    j["right"] = r.right;
    j["agree"] = r.agree;
    if (r.left_witness) j["left_witness"] = valuation_to_json(*r.left_witness);
    if (r.right_witness) j["right_witness"] = valuation_to_json(*r.right_witness);
    if (!r.map.empty()) j["map"] = r.map;
    return j;
}

Json filtration_to_json(const FiltrationResult& f) {
    Json j = algebra_to_json(f.alg);
    j["inclusion"] = f.inclusion;
    j["valuation"] = valuation_to_json(f.val);
    j["domains"] = domains_to_json(f.domains);
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string& path) {
    std::string text = read_file(path);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("malformed JSON in '" + path + "': " + e.what());
    }
}

}  // namespace scr
