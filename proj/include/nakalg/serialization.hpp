#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nakalg/homological.hpp"
#include "nakalg/invariants.hpp"
#include "nakalg/monomial.hpp"

namespace nakalg {

using Json = nlohmann::json;

// Matrices serialize as arrays of arrays of decimal integer strings.
inline Json matrix_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& q = m(i, j);
            if (!is_integer(q)) throw std::invalid_argument("matrix serialization expects integer entries");
            row.push_back(q.get_num().get_str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string kupisch_str(const KupischSeries& k) {
    std::string s = (k.orientation == Orientation::Cyclic ? "cyclic:" : "linear:");
    for (size_t i = 0; i < k.c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k.c[i]);
    }
    return s;
}

// Text format: "linear:4,4,3,2,1" / "cyclic:2,3,3".
inline KupischSeries parse_kupisch(const std::string& text) {
    KupischSeries k;
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("Kupisch text needs 'linear:' or 'cyclic:' prefix: " + text);
    const std::string head = text.substr(0, colon);
    if (head == "linear") {
        k.orientation = Orientation::Linear;
    } else if (head == "cyclic") {
        k.orientation = Orientation::Cyclic;
    } else {
        throw std::invalid_argument("unknown orientation '" + head + "' in: " + text);
    }
    size_t pos = colon + 1;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad entry '" + tok + "' at position " + std::to_string(pos) + " in: " + text);
        k.c.push_back(std::stol(tok));
        pos = next + 1;
    }
    if (k.c.empty()) throw std::invalid_argument("empty Kupisch series in: " + text);
    return k;
}

inline Json kupisch_json(const KupischSeries& k) {
    return Json{{"orientation", k.orientation == Orientation::Cyclic ? "cyclic" : "linear"},
                {"kupisch", k.c}};
}

inline KupischSeries kupisch_from_json(const Json& j) {
    KupischSeries k;
    const std::string o = j.at("orientation").get<std::string>();
    if (o == "linear") {
        k.orientation = Orientation::Linear;
    } else if (o == "cyclic") {
        k.orientation = Orientation::Cyclic;
    } else {
        throw std::invalid_argument("unknown orientation '" + o + "'");
    }
    k.c = j.at("kupisch").get<std::vector<long>>();
    return k;
}

inline MonomialPresentation quiver_from_json(const Json& j) {
    MonomialPresentation p;
    p.vertices = j.at("vertices").get<int>();
    for (const Json& a : j.at("arrows"))
        p.arrows.push_back(Arrow{a.at("name").get<std::string>(), a.at("from").get<int>(), a.at("to").get<int>()});
    if (j.contains("relations"))
        for (const Json& r : j.at("relations"))
            p.relations.push_back(r.get<std::vector<std::string>>());
    return p;
}

inline Json quiver_json(const MonomialPresentation& p) {
    Json arrows = Json::array();
    for (const Arrow& a : p.arrows) arrows.push_back(Json{{"name", a.name}, {"from", a.from}, {"to", a.to}});
    Json rels = Json::array();
    for (const auto& r : p.relations) rels.push_back(r);
    return Json{{"vertices", p.vertices}, {"arrows", arrows}, {"relations", rels}};
}

struct AlgebraReport {
    std::string algebra;
    std::optional<ExactMatrix> cartan;
    std::optional<ExactMatrix> coxeter;
    std::optional<Permutation> coxeter_permutation;
    std::optional<Permutation> ringel;
    std::optional<Permutation> ar_permutation;
    std::optional<std::vector<long>> e;
    std::optional<std::vector<long>> del;
    std::optional<std::vector<ExtNat>> grade;
    std::optional<bool> auslander_gorenstein;
    std::optional<bool> auslander_regular;
    bool methods_agreed = true;
};

inline AlgebraReport build_report(const Nakayama& A) {
    AlgebraReport r;
    r.algebra = A.str();
    r.cartan = A.cartan();
    if (global_dimension(A).is_finite()) {
        r.coxeter = coxeter_matrix(A);
        r.coxeter_permutation = coxeter_permutation(A);
    }
    r.ringel = ringel_permutation(A);
    r.ar_permutation = ar_map(A).perm;
    std::vector<long> e, del;
    std::vector<ExtNat> gr;
    for (int j = 1; j <= A.n(); ++j) {
        e.push_back(e_invariant(A, j));
        del.push_back(delooping_level(A, j));
        gr.push_back(grade(A, j));
    }
    r.e = std::move(e);
    r.del = std::move(del);
    r.grade = std::move(gr);
    const AgCheck ag = auslander_gorenstein_check(A);
    r.auslander_gorenstein = ag.gorenstein;
    r.auslander_regular = ag.gorenstein && global_dimension(A).is_finite();
    r.methods_agreed = true;  // cross-checked paths raise before reaching here
    return r;
}

namespace detail {

inline Json perm_json(const std::optional<Permutation>& p) {
    if (!p) return nullptr;
    return p->images();
}

inline Json extnat_json(const ExtNat& v) {
    if (!v.is_finite()) return "inf";
    return v.value();
}

}  // namespace detail

inline Json report_json(const AlgebraReport& r) {
    Json j;
    j["algebra"] = r.algebra;
    j["cartan"] = r.cartan ? matrix_json(*r.cartan) : Json(nullptr);
    j["coxeter"] = r.coxeter ? matrix_json(*r.coxeter) : Json(nullptr);
    j["coxeter_permutation"] = detail::perm_json(r.coxeter_permutation);
    j["ringel"] = detail::perm_json(r.ringel);
    j["ar_permutation"] = detail::perm_json(r.ar_permutation);
    j["e"] = r.e ? Json(*r.e) : Json(nullptr);
    j["del"] = r.del ? Json(*r.del) : Json(nullptr);
    if (r.grade) {
        Json g = Json::array();
        for (const ExtNat& v : *r.grade) g.push_back(detail::extnat_json(v));
        j["grade"] = std::move(g);
    } else {
        j["grade"] = nullptr;
    }
    j["auslander_gorenstein"] = r.auslander_gorenstein ? Json(*r.auslander_gorenstein) : Json(nullptr);
    j["auslander_regular"] = r.auslander_regular ? Json(*r.auslander_regular) : Json(nullptr);
    j["methods_agreed"] = r.methods_agreed;
    return j;
}

namespace detail {

inline std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::string join_longs(const std::vector<long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ";";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace detail

// CSV flattening: permutations and vectors semicolon-joined; matrices are
// JSON-only and omitted here.
inline std::string report_csv_header() {
    return "algebra,coxeter_permutation,ringel,ar_permutation,e,del,grade,"
           "auslander_gorenstein,auslander_regular,methods_agreed";
}

inline std::string report_csv_row(const AlgebraReport& r) {
    const auto perm = [](const std::optional<Permutation>& p) {
        return p ? detail::join_ints(p->images()) : std::string();
    };
    std::string grade_s;
    if (r.grade)
        for (size_t i = 0; i < r.grade->size(); ++i) {
            if (i) grade_s += ";";
            grade_s += (*r.grade)[i].str();
        }
    const auto tf = [](const std::optional<bool>& b) {
        return b ? std::string(*b ? "true" : "false") : std::string();
    };
    return r.algebra + "," + perm(r.coxeter_permutation) + "," + perm(r.ringel) + "," +
           perm(r.ar_permutation) + "," + (r.e ? detail::join_longs(*r.e) : std::string()) + "," +
           (r.del ? detail::join_longs(*r.del) : std::string()) + "," + grade_s + "," +
           tf(r.auslander_gorenstein) + "," + tf(r.auslander_regular) + "," +
           (r.methods_agreed ? "true" : "false");
}

}  // namespace nakalg
