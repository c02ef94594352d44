#pragma once

// Matrices with the two crystal structures coming from their biwords, the
// map to pairs of quasi-ribbon tableaux, and the descent-pair count.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "supercrystal/alphabet.hpp"
#include "supercrystal/crystal.hpp"
#include "supercrystal/insertion.hpp"
#include "supercrystal/tableau.hpp"

namespace supercrystal {

/// Square matrix indexed by the letters of an alphabet; a_rs <= 1 whenever
/// r and s have different parity.
class SuperMatrix {
public:
    explicit SuperMatrix(int dim = 0) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0) {}

    int dim() const { return dim_; }
    int at(Letter r, Letter s) const { return a_[idx(r, s)]; }
    void set(Letter r, Letter s, int v) {
        if (v < 0) throw InputError("matrix entries must be nonnegative");
        a_[idx(r, s)] = v;
    }
    void add(Letter r, Letter s, int v) { set(r, s, at(r, s) + v); }
    int total() const { return std::accumulate(a_.begin(), a_.end(), 0); }
    const std::vector<int>& data() const { return a_; }

    /// Throws on a violated entry bound.
    void validate(const GradedAlphabet& a) const {
        if (dim_ != a.size()) throw InputError("matrix size does not match alphabet " + a.spec());
        for (int r = 0; r < dim_; ++r)
            for (int s = 0; s < dim_; ++s)
                if (a.parity(Letter(r)) != a.parity(Letter(s)) && at(Letter(r), Letter(s)) > 1)
                    throw InputError("entry (" + a.display(Letter(r)) + "," + a.display(Letter(s)) +
                                     ") exceeds 1 for letters of different parity");
    }

    auto operator<=>(const SuperMatrix&) const = default;

private:
    std::size_t idx(Letter r, Letter s) const {
        if (r.pos >= dim_ || s.pos >= dim_) throw InputError("matrix index outside alphabet");
        return static_cast<std::size_t>(r.pos) * dim_ + s.pos;
    }
    int dim_;
    std::vector<int> a_;
};

struct Biword {
    Word top;
    Word bottom;
    bool operator==(const Biword&) const = default;
};

namespace detail {

/// Super lexicographic order on pairs (i, j): by j, then by i descending
/// for even j and ascending for odd j.
inline bool super_lex_less(const GradedAlphabet& a, std::pair<Letter, Letter> x, std::pair<Letter, Letter> y) {
    if (x.second != y.second) return x.second < y.second;
    return a.is_even(x.second) ? x.first > y.first : x.first < y.first;
}

inline std::vector<std::pair<Letter, Letter>> pairs_of(const SuperMatrix& m, bool transpose) {
    std::vector<std::pair<Letter, Letter>> p;
    for (int r = 0; r < m.dim(); ++r)
        for (int s = 0; s < m.dim(); ++s)
            for (int c = 0; c < m.at(Letter(r), Letter(s)); ++c)
                p.emplace_back(transpose ? Letter(s) : Letter(r), transpose ? Letter(r) : Letter(s));
    return p;
}

inline bool in_omega(const GradedAlphabet& a, const Word& i, const Word& j) {
    if (i.size() != j.size()) return false;
    for (std::size_t t = 1; t < i.size(); ++t) {
        std::pair<Letter, Letter> x{i[t - 1], j[t - 1]}, y{i[t], j[t]};
        if (super_lex_less(a, y, x)) return false;
        if (x == y && a.parity(x.first) != a.parity(x.second)) return false;
    }
    return true;
}

}  // namespace detail

/// The element (i, j) of Omega with A(i, j) = A: i lists row letters, j
/// column letters.
inline Biword omega_biword(const GradedAlphabet& a, const SuperMatrix& m) {
    m.validate(a);
    auto p = detail::pairs_of(m, false);
    std::stable_sort(p.begin(), p.end(), [&](auto x, auto y) { return detail::super_lex_less(a, x, y); });
    Biword b;
    for (auto [i, j] : p) {
        b.top.push_back(i);
        b.bottom.push_back(j);
    }
    return b;
}

/// The element (k, l) of Omega* with A(k, l) = A, i.e. (l, k) in Omega: k
/// lists row letters, l column letters.
inline Biword omega_star_biword(const GradedAlphabet& a, const SuperMatrix& m) {
    m.validate(a);
    auto p = detail::pairs_of(m, true);  // (s, r)
    std::stable_sort(p.begin(), p.end(), [&](auto x, auto y) { return detail::super_lex_less(a, x, y); });
    Biword b;
    for (auto [l, k] : p) {
        b.top.push_back(k);
        b.bottom.push_back(l);
    }
    return b;
}

/// A(rows, cols): entry (r, s) counts the positions t with (rows_t, cols_t) = (r, s).
inline SuperMatrix matrix_of(const GradedAlphabet& a, const Word& rows, const Word& cols) {
    if (rows.size() != cols.size()) throw InputError("biword rows have different lengths");
    SuperMatrix m(a.size());
    for (std::size_t t = 0; t < rows.size(); ++t) m.add(rows[t], cols[t], 1);
    m.validate(a);
    return m;
}

/// x_i A: acts on the row word of the Omega biword.
inline std::optional<SuperMatrix> matrix_apply(const GradedAlphabet& a, Op x, const SimpleRoot& r, const SuperMatrix& m) {
    Biword b = omega_biword(a, m);
    auto i = apply(a, x, r, b.top);
    if (!i) return std::nullopt;
    if (!detail::in_omega(a, *i, b.bottom)) throw InternalError("row operator left Omega");
    return matrix_of(a, *i, b.bottom);
}

/// x_j* A: acts on the column word of the Omega* biword.
inline std::optional<SuperMatrix> matrix_apply_star(const GradedAlphabet& a, Op x, const SimpleRoot& r,
                                                    const SuperMatrix& m) {
    Biword b = omega_star_biword(a, m);
    auto l = apply(a, x, r, b.bottom);
    if (!l) return std::nullopt;
    if (!detail::in_omega(a, *l, b.top)) throw InternalError("column operator left Omega*");
    return matrix_of(a, b.top, *l);
}

/// wt(A): row sums.
inline Weight row_weight(const SuperMatrix& m) {
    Weight w;
    for (int r = 0; r < m.dim(); ++r)
        for (int s = 0; s < m.dim(); ++s) w.add(Letter(r), m.at(Letter(r), Letter(s)));
    return w;
}

/// wt*(A): column sums.
inline Weight column_weight(const SuperMatrix& m) {
    Weight w;
    for (int r = 0; r < m.dim(); ++r)
        for (int s = 0; s < m.dim(); ++s) w.add(Letter(s), m.at(Letter(r), Letter(s)));
    return w;
}

/// (P(i), P(l)).
inline std::pair<Tableau, Tableau> rsk(const GradedAlphabet& a, const SuperMatrix& m) {
    return {qr_P(a, omega_biword(a, m).top), qr_P(a, omega_star_biword(a, m).bottom)};
}

/// (bold P(i), bold P(l)).
inline std::pair<Tableau, Tableau> rsk_semistandard(const GradedAlphabet& a, const SuperMatrix& m) {
    return {bold_P(a, omega_biword(a, m).top), bold_P(a, omega_star_biword(a, m).bottom)};
}

/// All matrices over the alphabet with entry sum k, in lexicographic order
/// of their entry vectors.
inline std::vector<SuperMatrix> enumerate_matrices(const GradedAlphabet& a, int k) {
    const int d = a.size();
    std::vector<SuperMatrix> out;
    SuperMatrix cur(d);
    auto rec = [&](auto&& self, int cell, int left) -> void {
        if (cell == d * d) {
            if (left == 0) out.push_back(cur);
            return;
        }
        Letter r(cell / d), s(cell % d);
        int hi = a.parity(r) == a.parity(s) ? left : std::min(left, 1);
        for (int v = 0; v <= hi; ++v) {
            cur.set(r, s, v);
            self(self, cell + 1, left - v);
        }
        cur.set(r, s, 0);
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool matrix_is_highest(const GradedAlphabet& a, const SuperMatrix& m) {
    for (const auto& r : a.roots())
        if (matrix_apply(a, Op::E, r, m) || matrix_apply_star(a, Op::E, r, m)) return false;
    return true;
}

// ---------------------------------------------------------------------------

/// D(sigma) for a permutation of 1..k in one-line notation.
inline std::set<int> permutation_descents(const std::vector<int>& sigma) {
    std::set<int> d;
    for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
        if (sigma[i] > sigma[i + 1]) d.insert(static_cast<int>(i) + 1);
    return d;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& sigma) {
    std::vector<int> inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

struct GesselCount {
    long permutations = 0;
    long matrices = 0;
};

/// #{sigma in S_k : D(sigma) = S, D(sigma^-1) = S'} and #{A with sum k
/// killed by every e_i and e_j*, wt(A) = wt(H_alpha(S)), wt*(A) =
/// wt(H_alpha(S'))}, the latter over the given truncation.
inline GesselCount gessel_count(const GradedAlphabet& a, const std::set<int>& S, const std::set<int>& S2, int k) {
    Composition al = comp_from_subset(S, k), be = comp_from_subset(S2, k);
    Weight w1, w2;
    try {
        w1 = weight_of(highest_tableau(Shape::ribbon(al), a).reading_word());
        w2 = weight_of(highest_tableau(Shape::ribbon(be), a).reading_word());
    } catch (const InputError&) {
        throw InputError("truncation " + a.spec() + " too small for the weights of " + al.to_string() + " and " +
                         be.to_string());
    }
    GesselCount g;
    std::vector<int> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        if (permutation_descents(sigma) == S && permutation_descents(inverse_permutation(sigma)) == S2)
            ++g.permutations;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    for (const auto& m : enumerate_matrices(a, k))
        if (row_weight(m) == w1 && column_weight(m) == w2 && matrix_is_highest(a, m)) ++g.matrices;
    return g;
}

}  // namespace supercrystal
