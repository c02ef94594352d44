#pragma once

// JSON forms of tableaux, matrices, posets, components and polynomials.
// nlohmann::json keeps object keys sorted, so output is canonical.

#include <json.hpp>
#include <string>
#include <vector>

#include "supercrystal/characters.hpp"
#include "supercrystal/crystal.hpp"
#include "supercrystal/insertion.hpp"
#include "supercrystal/kite.hpp"
#include "supercrystal/matrix.hpp"
#include "supercrystal/poset.hpp"
#include "supercrystal/tableau.hpp"

namespace supercrystal {

using Json = nlohmann::json;

namespace detail {

inline std::vector<int> int_array(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError(std::string(what) + " must be an array of integers");
        v.push_back(x.get<int>());
    }
    return v;
}

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace detail

inline Json shape_to_json(const Shape& s) {
    switch (s.kind) {
        case TableauKind::QuasiRibbon: return s.tail.parts();
        case TableauKind::Semistandard: return s.body.parts();
        case TableauKind::Kite: return Json{{"body", s.body.parts()}, {"tail", s.tail.parts()}, {"m", s.m}};
    }
    return nullptr;
}

inline Shape shape_from_json(TableauKind kind, const Json& j) {
    switch (kind) {
        case TableauKind::QuasiRibbon: return Shape::ribbon(Composition(detail::int_array(j, "shape")));
        case TableauKind::Semistandard: return Shape::young(Partition(detail::int_array(j, "shape")));
        case TableauKind::Kite: {
            Partition body(detail::int_array(detail::field(j, "body"), "body"));
            Composition tail(detail::int_array(detail::field(j, "tail"), "tail"));
            int m = j.contains("m") ? j.at("m").get<int>() : body.length();
            return Shape::kite(KiteShape{body, tail, m});
        }
    }
    throw InputError("unknown tableau kind");
}

inline TableauKind kind_from_name(const std::string& s) {
    if (s == "qr") return TableauKind::QuasiRibbon;
    if (s == "ssyt") return TableauKind::Semistandard;
    if (s == "kite") return TableauKind::Kite;
    throw InputError("unknown tableau kind \"" + s + "\"");
}

inline Json tableau_to_json(const GradedAlphabet& a, const Tableau& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows()) {
        Json row = Json::array();
        for (Letter l : r) row.push_back(a.display(l));
        rows.push_back(row);
    }
    return Json{{"kind", kind_name(t.kind())}, {"shape", shape_to_json(t.shape())}, {"rows", rows}};
}

/// Reads and validates a tableau; throws InputError on any violation.
inline Tableau tableau_from_json(const GradedAlphabet& a, const Json& j) {
    TableauKind kind = kind_from_name(detail::field(j, "kind").get<std::string>());
    Shape shape = shape_from_json(kind, detail::field(j, "shape"));
    std::vector<Letter> entries;
    for (const auto& row : detail::field(j, "rows")) {
        if (!row.is_array()) throw InputError("rows must be arrays of letters");
        for (const auto& x : row) entries.push_back(a.parse_letter(x.get<std::string>()));
    }
    Tableau t(shape, entries);
    auto rows = t.rows();
    const Json& given = j.at("rows");
    bool same = rows.size() == given.size();
    for (std::size_t k = 0; same && k < rows.size(); ++k) same = rows[k].size() == given[k].size();
    if (!same) throw InputError("row lengths do not match the shape");
    auto v = validate(a, t);
    if (!v.ok)
        throw InputError("invalid tableau at (" + std::to_string(v.row) + "," + std::to_string(v.col) + "): " +
                         v.violation);
    return t;
}

inline Json ribbon_tableau_to_json(const StandardRibbonTableau& q) {
    return Json{{"shape", q.shape.parts()}, {"rows", q.rows()}};
}

// ---------------------------------------------------------------------------

inline Json matrix_to_json(const GradedAlphabet& a, const SuperMatrix& m) {
    Json e = Json::array();
    for (int r = 0; r < m.dim(); ++r)
        for (int s = 0; s < m.dim(); ++s)
            if (int v = m.at(Letter(r), Letter(s)))
                e.push_back(Json::array({a.display(Letter(r)), a.display(Letter(s)), v}));
    return Json{{"entries", e}};
}

inline SuperMatrix matrix_from_json(const GradedAlphabet& a, const Json& j) {
    SuperMatrix m(a.size());
    for (const auto& e : detail::field(j, "entries")) {
        if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer())
            throw InputError("matrix entries must be [row, column, count]");
        m.add(a.parse_letter(e[0].get<std::string>()), a.parse_letter(e[1].get<std::string>()), e[2].get<int>());
    }
    m.validate(a);
    return m;
}

// ---------------------------------------------------------------------------

inline Json poset_to_json(const LabeledPoset& p) {
    Json covers = Json::array(), gamma = Json::object();
    for (int x = 0; x < p.size(); ++x) {
        gamma[p.name(x)] = p.gamma(x);
        for (int y = 0; y < p.size(); ++y) {
            if (!p.less(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < p.size() && cover; ++z)
                if (p.less(x, z) && p.less(z, y)) cover = false;
            if (cover) covers.push_back(Json::array({p.name(x), p.name(y)}));
        }
    }
    return Json{{"elements", p.names()}, {"covers", covers}, {"gamma", gamma}};
}

inline LabeledPoset poset_from_json(const Json& j) {
    std::vector<std::string> names;
    for (const auto& x : detail::field(j, "elements")) names.push_back(x.get<std::string>());
    std::vector<std::pair<std::string, std::string>> covers;
    if (j.contains("covers"))
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2) throw InputError("covers must be pairs");
            covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
        }
    const Json& g = detail::field(j, "gamma");
    std::vector<int> gamma;
    for (const auto& n : names) {
        if (!g.contains(n)) throw InputError("no label for " + n);
        gamma.push_back(g.at(n).get<int>());
    }
    return LabeledPoset(names, covers, gamma);
}

// ---------------------------------------------------------------------------

/// {"terms":[{"coefficient":"3","monomial":{"1/2":2}}]}; coefficients are
/// strings so any size survives.
inline Json poly_to_json(const CharacterPoly& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.terms()) {
        Json mono = Json::object();
        for (const auto& [k, e] : m) mono[format_key(k)] = e;
        terms.push_back(Json{{"coefficient", c.str()}, {"monomial", mono}});
    }
    return Json{{"terms", terms}, {"text", f.to_string()}};
}

inline CharacterPoly poly_from_json(const Json& j) {
    CharacterPoly f;
    for (const auto& t : detail::field(j, "terms")) {
        Monomial m;
        for (const auto& [k, e] : detail::field(t, "monomial").items()) m[parse_key(k)] = e.get<int>();
        f.add_term(m, BigInt(detail::field(t, "coefficient").get<std::string>()));
    }
    return f;
}

// ---------------------------------------------------------------------------

inline Json component_to_json(const GradedAlphabet& a, const CrystalComponent& c) {
    Json el = Json::array(), ed = Json::array(), hi = Json::array();
    for (const auto& w : c.elements) el.push_back(format_word(a, w));
    for (const auto& e : c.edges) ed.push_back(Json::array({e.source, a.root_label(a.roots()[e.root]), e.target}));
    for (int h : c.highest) hi.push_back(format_word(a, c.elements[h]));
    return Json{{"elements", el}, {"edges", ed}, {"highest", hi}, {"truncated", c.truncated}};
}

inline Json kite_to_json(const KiteShape& k) {
    return Json{{"body", k.body.parts()}, {"tail", k.tail.parts()}, {"m", k.m}};
}

}  // namespace supercrystal
