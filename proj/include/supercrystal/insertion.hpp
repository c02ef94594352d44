#pragma once

// Quasi-ribbon insertion with its recording tableau, and column bumping
// insertion for semistandard tableaux.

#include <optional>
#include <set>
#include <vector>

#include "supercrystal/alphabet.hpp"
#include "supercrystal/crystal.hpp"
#include "supercrystal/shapes.hpp"
#include "supercrystal/tableau.hpp"

namespace supercrystal {

namespace detail {

/// A ribbon filling as a NW->SE sequence plus the positions i after which
/// a new row starts.
struct RibbonSeq {
    std::vector<Letter> nodes;
    std::set<int> breaks;
    std::vector<int> labels;  // recording data, parallel to nodes

    static RibbonSeq of(const Tableau& t) {
        if (t.kind() != TableauKind::QuasiRibbon) throw InputError("quasi-ribbon tableau expected");
        return {t.entries(), subset_from_comp(t.shape().tail), {}};
    }
    Composition shape() const { return comp_from_subset(breaks, static_cast<int>(nodes.size())); }
    Tableau tableau() const { return Tableau(Shape::ribbon(shape()), nodes); }
};

inline void insert_into(const GradedAlphabet& a, RibbonSeq& t, Letter b, int label) {
    const int s = static_cast<int>(t.nodes.size());
    int k = 0;  // 1-based; 0 = none
    for (int i = 1; i <= s; ++i) {
        Letter x = t.nodes[i - 1];
        if (a.is_even(b) ? b <= x : b < x) {
            k = i;
            break;
        }
    }
    if (k == 0) {
        if (s > 0) t.breaks.insert(s);
        t.nodes.push_back(b);
        t.labels.push_back(label);
        return;
    }
    std::set<int> nb;
    for (int j : t.breaks) nb.insert(j >= k ? j + 1 : j);
    if (k > 1) nb.insert(k - 1);
    t.breaks = std::move(nb);
    t.nodes.insert(t.nodes.begin() + (k - 1), b);
    t.labels.insert(t.labels.begin() + (k - 1), label);
}

}  // namespace detail

/// b -> T: b goes in front of the first node it may precede (weakly for
/// even b, strictly for odd b), starting a new row below the nodes before
/// it.  With no such node b starts a new row below the last node.
inline Tableau qr_insert(const GradedAlphabet& a, Letter b, const Tableau& t) {
    auto s = detail::RibbonSeq::of(t);
    s.labels.assign(s.nodes.size(), 0);
    detail::insert_into(a, s, b, 0);
    return s.tableau();
}

struct QrPair {
    Tableau P;
    StandardRibbonTableau Q;
};

/// (P(w), Q(w)) with P(w) = w_r -> ( ... -> (w_2 -> w_1)).  Node i of Q
/// records which letter of w sits at that node of P.
inline QrPair qr_insertion(const GradedAlphabet& a, const Word& w) {
    detail::RibbonSeq s;
    for (std::size_t i = 0; i < w.size(); ++i) detail::insert_into(a, s, w[i], static_cast<int>(i) + 1);
    return {s.tableau(), StandardRibbonTableau{s.shape(), s.labels}};
}

inline Tableau qr_P(const GradedAlphabet& a, const Word& w) { return qr_insertion(a, w).P; }
inline StandardRibbonTableau qr_Q(const GradedAlphabet& a, const Word& w) { return qr_insertion(a, w).Q; }

// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<Letter>> columns_of(const Tableau& t) {
    std::vector<std::vector<Letter>> cols;
    const auto& d = t.diagram();
    for (std::size_t i = 0; i < d.size(); ++i) {
        int c = d.cells[i].second;
        if (static_cast<int>(cols.size()) < c) cols.resize(c);
        cols[c - 1].push_back(t.entries()[i]);
    }
    return cols;
}

inline Tableau from_columns(const std::vector<std::vector<Letter>>& cols) {
    std::vector<int> rows;
    for (const auto& col : cols)
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (rows.size() <= i) rows.push_back(0);
            ++rows[i];
        }
    Partition p(rows);
    std::vector<Letter> e;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rows[i]; ++j) e.push_back(cols[j][i]);
    return Tableau(Shape::young(p), e);
}

}  // namespace detail

/// Column bumping: b replaces the topmost y of the current column with
/// b < y, or b = y for even b; y moves on to the next column.  With no such
/// y, b is placed at the bottom of the column.
inline Tableau column_insert(const GradedAlphabet& a, Letter b, const Tableau& t) {
    if (t.kind() != TableauKind::Semistandard) throw InputError("semistandard tableau expected");
    auto cols = detail::columns_of(t);
    for (std::size_t c = 0;; ++c) {
        if (c == cols.size()) cols.emplace_back();
        auto& col = cols[c];
        auto it = std::find_if(col.begin(), col.end(), [&](Letter y) { return b < y || (b == y && a.is_even(b)); });
        if (it == col.end()) {
            col.push_back(b);
            break;
        }
        std::swap(b, *it);
    }
    return detail::from_columns(cols);
}

/// bold P(w) = w_r => ( ... (w_2 => w_1)).
inline Tableau bold_P(const GradedAlphabet& a, const Word& w) {
    Tableau t(Shape::young({}), {});
    for (Letter l : w) t = column_insert(a, l, t);
    return t;
}

}  // namespace supercrystal
