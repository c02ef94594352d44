#pragma once

// Quasi-ribbon, semistandard and kite tableaux: validation, reading words,
// highest tableaux, enumeration and the induced crystal structure.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "supercrystal/alphabet.hpp"
#include "supercrystal/crystal.hpp"
#include "supercrystal/shapes.hpp"

namespace supercrystal {

/// A filled diagram.  `entries` follows the row-major cell order of the
/// shape's Diagram.
class Tableau {
public:
    Tableau(Shape shape, std::vector<Letter> entries) : shape_(std::move(shape)), diagram_(Diagram::of(shape_)), entries_(std::move(entries)) {
        if (entries_.size() != diagram_.size()) throw InputError("tableau entry count does not match its shape");
    }

    /// Reinterprets a reading word in the given shape.
    static Tableau from_reading(const Shape& shape, const Word& w) {
        Diagram d = Diagram::of(shape);
        if (w.size() != d.size()) throw InputError("reading word length does not match the shape");
        std::vector<Letter> e(d.size());
        for (std::size_t k = 0; k < w.size(); ++k) e[d.reading[k]] = w[k];
        return Tableau(shape, std::move(e));
    }

    const Shape& shape() const { return shape_; }
    const Diagram& diagram() const { return diagram_; }
    const std::vector<Letter>& entries() const { return entries_; }
    TableauKind kind() const { return shape_.kind; }

    /// Rows top to bottom, each right to left.
    Word reading_word() const {
        Word w;
        w.reserve(entries_.size());
        for (int c : diagram_.reading) w.push_back(entries_[c]);
        return w;
    }

    /// Entries grouped by row, left to right.
    std::vector<std::vector<Letter>> rows() const {
        std::vector<std::vector<Letter>> out;
        int last = 0;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            int r = diagram_.cells[i].first;
            if (out.empty() || r != last) out.emplace_back();
            out.back().push_back(entries_[i]);
            last = r;
        }
        return out;
    }

    bool operator==(const Tableau& o) const { return shape_ == o.shape_ && entries_ == o.entries_; }

private:
    Shape shape_;
    Diagram diagram_;
    std::vector<Letter> entries_;
};

/// Second reading for Young shapes: columns right to left, each top to
/// bottom.  Only used to check that the crystal does not depend on the
/// reading.
inline Word column_reading_word(const Tableau& t) {
    if (t.kind() != TableauKind::Semistandard) throw InputError("column reading is defined for Young shapes only");
    const Diagram& d = t.diagram();
    const Partition& l = t.shape().body;
    Word w;
    for (int c = l.part(1); c >= 1; --c)
        for (int r = 1; r <= l.length() && l.part(r) >= c; ++r) w.push_back(t.entries()[d.find(r, c)]);
    return w;
}

inline Tableau from_column_reading(const Shape& shape, const Word& w) {
    if (shape.kind != TableauKind::Semistandard) throw InputError("column reading is defined for Young shapes only");
    Diagram d = Diagram::of(shape);
    if (w.size() != d.size()) throw InputError("reading word length does not match the shape");
    std::vector<Letter> e(d.size());
    std::size_t k = 0;
    for (int c = shape.body.part(1); c >= 1; --c)
        for (int r = 1; r <= shape.body.length() && shape.body.part(r) >= c; ++r) e[d.find(r, c)] = w[k++];
    return Tableau(shape, std::move(e));
}

struct Validation {
    bool ok = true;
    std::string violation;
    int row = 0;
    int col = 0;
};

/// Checks every constraint of the tableau's species and reports the first
/// failure.  Never throws.
inline Validation validate(const GradedAlphabet& a, const Tableau& t) {
    const Diagram& d = t.diagram();
    const auto& e = t.entries();
    auto fail = [&](int cell, std::string why) {
        return Validation{false, std::move(why), d.cells[cell].first, d.cells[cell].second};
    };
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i].pos >= a.size()) return fail(static_cast<int>(i), "entry outside the alphabet");
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (int j = d.right[i]; j >= 0) {
            if (e[j] < e[i]) return fail(j, "row not weakly increasing");
            if (e[j] == e[i] && !a.is_even(e[i])) return fail(j, "odd letter repeated in a row");
        }
        if (int j = d.below[i]; j >= 0) {
            if (e[j] < e[i]) return fail(j, "column not weakly increasing");
            if (e[j] == e[i] && a.is_even(e[i])) return fail(j, "even letter repeated in a column");
        }
    }
    if (t.kind() == TableauKind::Kite && d.joint >= 0) {
        Letter b = e[d.joint];
        for (int i = 0; i < d.body_cells; ++i) {
            if (a.is_even(b) ? !(e[i] < b) : !(e[i] <= b))
                return fail(i, "body entry not below the joint entry " + a.display(b));
        }
    }
    return {};
}

/// Every valid filling, sorted lexicographically by reading word.
inline std::vector<Tableau> enumerate(const Shape& shape, const GradedAlphabet& a) {
    if (shape.kind == TableauKind::Kite) shape.as_kite().validate();
    const Diagram d = Diagram::of(shape);
    const int n = static_cast<int>(d.size());
    // left/above neighbours of each cell
    std::vector<int> left(n, -1), above(n, -1);
    for (int i = 0; i < n; ++i) {
        if (d.right[i] >= 0) left[d.right[i]] = i;
        if (d.below[i] >= 0) above[d.below[i]] = i;
    }
    std::vector<Word> words;
    std::vector<Letter> cur(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            Word w;
            for (int c : d.reading) w.push_back(cur[c]);
            words.push_back(std::move(w));
            return;
        }
        int lo = 0;
        if (left[i] >= 0) {
            Letter l = cur[left[i]];
            lo = std::max(lo, l.pos + (a.is_even(l) ? 0 : 1));
        }
        if (above[i] >= 0) {
            Letter u = cur[above[i]];
            lo = std::max(lo, u.pos + (a.is_even(u) ? 1 : 0));
        }
        for (int v = lo; v < a.size(); ++v) {
            cur[i] = Letter(v);
            if (i == d.joint) {
                bool ok = true;
                for (int j = 0; j < d.body_cells && ok; ++j)
                    ok = a.is_even(cur[i]) ? cur[j] < cur[i] : cur[j] <= cur[i];
                if (!ok) continue;
            }
            if (left[i] >= 0 && cur[left[i]] == cur[i] && !a.is_even(cur[i])) continue;
            if (above[i] >= 0 && cur[above[i]] == cur[i] && a.is_even(cur[i])) continue;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(words.begin(), words.end());
    std::vector<Tableau> out;
    out.reserve(words.size());
    for (const auto& w : words) out.push_back(Tableau::from_reading(shape, w));
    return out;
}

inline std::vector<Word> enumerate_words(const Shape& shape, const GradedAlphabet& a) {
    std::vector<Word> out;
    for (const auto& t : enumerate(shape, a)) out.push_back(t.reading_word());
    return out;
}

namespace detail {

/// Smallest filling of a ribbon starting at position `start`: each node
/// repeats its predecessor when the parity allows, otherwise moves to the
/// next letter.
inline std::vector<Letter> greedy_ribbon(const GradedAlphabet& a, const Composition& c, int start) {
    std::vector<Letter> out;
    int v = start;
    for (int i = 0; i < c.length(); ++i) {
        for (int j = 0; j < c.parts()[i]; ++j) {
            if (!out.empty()) {
                bool same_row = j > 0;
                bool can_repeat = same_row ? a.is_even(Letter(v)) : !a.is_even(Letter(v));
                if (!can_repeat) ++v;
            }
            if (v >= a.size())
                throw InputError("shape " + c.to_string() + " is not admissible over " + a.spec());
            out.push_back(Letter(v));
        }
    }
    return out;
}

/// Body rows filled with the leading even letters, row i with the i-th.
inline std::vector<Letter> constant_rows(const GradedAlphabet& a, const Partition& l) {
    std::vector<Letter> out;
    for (int i = 1; i <= l.length(); ++i) {
        if (i > a.size() || !a.is_even(Letter(i - 1)))
            throw InputError("body " + l.to_string() + " is not admissible over " + a.spec());
        for (int j = 0; j < l.part(i); ++j) out.push_back(Letter(i - 1));
    }
    return out;
}

inline int leading_even(const GradedAlphabet& a) {
    int e = 0;
    while (e < a.size() && a.is_even(Letter(e))) ++e;
    return e;
}

}  // namespace detail

/// H_alpha, H_lambda or H_(lambda,alpha).
///
/// Ribbons get the smallest filling from the first letter.  Young shapes
/// over an alphabet of the form (evens, then odds) get constant rows of the
/// m even letters on top and the remaining cells column-filled by the odd
/// letters.  Kites glue the body H_lambda to the tail ribbon filled from
/// the first letter after the m even letters.
inline Tableau highest_tableau(const Shape& shape, const GradedAlphabet& a) {
    switch (shape.kind) {
        case TableauKind::QuasiRibbon:
            return Tableau(shape, detail::greedy_ribbon(a, shape.tail, 0));
        case TableauKind::Kite: {
            shape.as_kite().validate();
            if (detail::leading_even(a) < shape.m)
                throw InputError("kite needs m even letters at the start of " + a.spec());
            std::vector<Letter> e = detail::constant_rows(a, shape.body);
            auto tail = detail::greedy_ribbon(a, shape.tail, shape.m);
            e.insert(e.end(), tail.begin(), tail.end());
            return Tableau(shape, e);
        }
        case TableauKind::Semistandard: {
            const int m = detail::leading_even(a);
            const Partition& l = shape.body;
            if (l.length() <= m) return Tableau(shape, detail::constant_rows(a, l));
            for (int p = m; p < a.size(); ++p)
                if (a.is_even(Letter(p)))
                    throw InputError("highest tableau of " + l.to_string() + " needs a standard ordering");
            const int n = a.size() - m;
            if (!l.is_hook(m, n)) throw InputError(l.to_string() + " is not an (m,n)-hook shape");
            std::vector<Letter> e;
            for (int i = 1; i <= l.length(); ++i)
                for (int j = 1; j <= l.part(i); ++j) e.push_back(i <= m ? Letter(i - 1) : Letter(m + j - 1));
            return Tableau(shape, e);
        }
    }
    throw InternalError("unknown tableau kind");
}

/// x_r T: the operator applied to the reading word, read back in the same
/// shape.  A result violating the shape's constraints is a closure failure.
inline std::optional<Tableau> tableau_apply(const GradedAlphabet& a, Op x, const SimpleRoot& r, const Tableau& t) {
    auto w = apply(a, x, r, t.reading_word());
    if (!w) return std::nullopt;
    Tableau out = Tableau::from_reading(t.shape(), *w);
    if (auto v = validate(a, out); !v.ok)
        throw InternalError("operator left the tableau crystal: " + v.violation + " at (" + std::to_string(v.row) +
                            "," + std::to_string(v.col) + ")");
    return out;
}

// ---------------------------------------------------------------------------
// Standard tableaux.

/// A standard filling of a (skew) Young diagram: numbers[i] labels cell i
/// of `cells` (row-major).
struct StandardTableau {
    std::vector<std::pair<int, int>> cells;
    std::vector<int> numbers;
    std::set<int> descents;
    Composition descent_composition;
    bool one_in_first_column = false;

    /// Cell carrying k (1-based).
    std::pair<int, int> cell_of(int k) const {
        for (std::size_t i = 0; i < numbers.size(); ++i)
            if (numbers[i] == k) return cells[i];
        throw InputError("number not in tableau");
    }
};

/// Standard tableaux of shape lambda/mu with descent data: k is a descent
/// when k+1 sits in a column weakly left of k.
inline std::vector<StandardTableau> standard_tableaux(const Partition& lambda, const Partition& mu = {}) {
    if (!lambda.contains(mu)) throw InputError(mu.to_string() + " is not inside " + lambda.to_string());
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = mu.part(i) + 1; j <= lambda.part(i); ++j) cells.emplace_back(i, j);
    const int n = static_cast<int>(cells.size());
    auto index = [&](int r, int c) {
        for (int i = 0; i < n; ++i)
            if (cells[i] == std::make_pair(r, c)) return i;
        return -1;
    };
    std::vector<int> left(n), above(n);
    for (int i = 0; i < n; ++i) {
        left[i] = index(cells[i].first, cells[i].second - 1);
        above[i] = index(cells[i].first - 1, cells[i].second);
    }
    std::vector<StandardTableau> out;
    std::vector<int> num(n, 0);
    std::vector<int> order;
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            StandardTableau t;
            t.cells = cells;
            t.numbers = num;
            for (int j = 1; j < n; ++j)
                if (cells[order[j - 1]].second >= cells[order[j]].second) t.descents.insert(j);
            t.descent_composition = comp_from_subset(t.descents, n);
            t.one_in_first_column = n > 0 && cells[order[0]].second == 1;
            out.push_back(std::move(t));
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (num[i]) continue;
            if (left[i] >= 0 && !num[left[i]]) continue;
            if (above[i] >= 0 && !num[above[i]]) continue;
            num[i] = k;
            order.push_back(i);
            self(self, k + 1);
            order.pop_back();
            num[i] = 0;
        }
    };
    rec(rec, 1);
    return out;
}

/// Standard filling of a ribbon: numbers[i] labels the i-th node from the
/// northwest; rows decrease left to right, columns increase downward.
struct StandardRibbonTableau {
    Composition shape;
    std::vector<int> numbers;

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out;
        std::size_t k = 0;
        for (int p : shape.parts()) {
            out.emplace_back(numbers.begin() + k, numbers.begin() + k + p);
            k += p;
        }
        return out;
    }
    auto operator<=>(const StandardRibbonTableau&) const = default;
};

inline bool is_standard_ribbon(const StandardRibbonTableau& t) {
    const int n = t.shape.size();
    if (static_cast<int>(t.numbers.size()) != n) return false;
    std::vector<int> sorted = t.numbers;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i + 1) return false;
    auto breaks = subset_from_comp(t.shape);
    for (int i = 1; i < n; ++i) {
        bool down = breaks.count(i) > 0;
        if (down ? t.numbers[i] < t.numbers[i - 1] : t.numbers[i] > t.numbers[i - 1]) return false;
    }
    return true;
}

inline std::vector<StandardRibbonTableau> standard_ribbon_tableaux(const Composition& a) {
    const int n = a.size();
    std::vector<StandardRibbonTableau> out;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
        StandardRibbonTableau t{a, perm};
        if (is_standard_ribbon(t)) out.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace supercrystal
