#pragma once

// Brute-force reference implementations used only by the tests.  They share
// data types with the library but none of its algorithms: operators come
// from the bracket (signature) rule, tableaux from exhaustive fillings
// checked cell by cell, and characters from those fillings.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "supercrystal.hpp"

namespace oracle {

using namespace supercrystal;

inline std::vector<Word> words(const GradedAlphabet& a, int len) {
    std::vector<Word> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (int p = 0; p < a.size(); ++p) {
                Word v = w;
                v.push_back(Letter(p));
                next.push_back(v);
            }
        out = std::move(next);
    }
    return out;
}

inline std::vector<Word> words_up_to(const GradedAlphabet& a, int len) {
    std::vector<Word> out;
    for (int k = 0; k <= len; ++k) {
        auto w = words(a, k);
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Operators by the signature rule.

struct Signature {
    std::vector<int> plus;   // positions holding lo, uncancelled
    std::vector<int> minus;  // positions holding hi, uncancelled
};

/// For ell = +1 a lo to the left of a hi cancels; for ell = -1 a hi to the
/// left of a lo cancels.
inline Signature signature(const SimpleRoot& r, const Word& w) {
    Signature s;
    std::vector<int> open;
    const bool plus_opens = r.ell == 1;
    std::vector<int> unmatched_close;
    for (int k = 0; k < static_cast<int>(w.size()); ++k) {
        bool is_lo = w[k] == r.lo, is_hi = w[k] == r.hi;
        if (!is_lo && !is_hi) continue;
        bool opener = plus_opens ? is_lo : is_hi;
        if (opener) {
            open.push_back(k);
        } else if (!open.empty()) {
            open.pop_back();
        } else {
            unmatched_close.push_back(k);
        }
    }
    if (plus_opens) {
        s.plus = open;
        s.minus = unmatched_close;
    } else {
        s.minus = open;
        s.plus = unmatched_close;
    }
    return s;
}

/// Position where x acts, or -1.
inline int acting_position(Op x, const SimpleRoot& r, const Word& w) {
    if (r.isotropic) {
        int pos = -1;
        for (int k = 0; k < static_cast<int>(w.size()); ++k)
            if (w[k] == r.lo || w[k] == r.hi) {
                pos = k;
                if (r.ell == 1) break;
            }
        if (pos < 0) return -1;
        if (x == Op::F && w[pos] != r.lo) return -1;
        if (x == Op::E && w[pos] != r.hi) return -1;
        return pos;
    }
    Signature s = signature(r, w);
    if (r.ell == 1) {
        // uncancelled: hi...hi lo...lo
        if (x == Op::F) return s.plus.empty() ? -1 : s.plus.front();
        return s.minus.empty() ? -1 : s.minus.back();
    }
    // uncancelled: lo...lo hi...hi
    if (x == Op::F) return s.plus.empty() ? -1 : s.plus.back();
    return s.minus.empty() ? -1 : s.minus.front();
}

inline std::optional<Word> apply(Op x, const SimpleRoot& r, const Word& w) {
    int k = acting_position(x, r, w);
    if (k < 0) return std::nullopt;
    Word v = w;
    v[k] = x == Op::F ? r.hi : r.lo;
    return v;
}

/// (eps, phi): string lengths for non-isotropic roots, 0/1 for isotropic.
inline std::pair<int, int> eps_phi(const SimpleRoot& r, const Word& w) {
    if (r.isotropic) return {apply(Op::E, r, w) ? 1 : 0, apply(Op::F, r, w) ? 1 : 0};
    Signature s = signature(r, w);
    return {static_cast<int>(s.minus.size()), static_cast<int>(s.plus.size())};
}

inline bool is_highest(const GradedAlphabet& a, const Word& w) {
    for (const auto& r : a.roots())
        if (apply(Op::E, r, w)) return false;
    return true;
}

/// Connected component by BFS with the oracle operators.
inline std::set<Word> component(const GradedAlphabet& a, const Word& seed) {
    std::set<Word> seen{seed};
    std::vector<Word> todo{seed};
    while (!todo.empty()) {
        Word w = todo.back();
        todo.pop_back();
        for (const auto& r : a.roots())
            for (Op x : {Op::E, Op::F})
                if (auto v = apply(x, r, w); v && seen.insert(*v).second) todo.push_back(*v);
    }
    return seen;
}

inline std::vector<std::set<Word>> components(const GradedAlphabet& a, const std::vector<Word>& ws) {
    std::vector<std::set<Word>> out;
    std::set<Word> done;
    for (const auto& w : ws) {
        if (done.count(w)) continue;
        auto c = component(a, w);
        done.insert(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

/// Colored-graph isomorphism test by exhaustive matching from the given
/// base points; used on components of at most a few hundred elements.
inline bool isomorphic_from(const GradedAlphabet& a, const Word& u, const GradedAlphabet& b, const Word& v) {
    if (a.roots().size() != b.roots().size()) return false;
    std::map<Word, Word> fwd;
    std::map<Word, Word> bwd;
    std::vector<std::pair<Word, Word>> todo{{u, v}};
    fwd[u] = v;
    bwd[v] = u;
    while (!todo.empty()) {
        auto [x, y] = todo.back();
        todo.pop_back();
        for (std::size_t i = 0; i < a.roots().size(); ++i)
            for (Op op : {Op::E, Op::F}) {
                auto x2 = apply(op, a.roots()[i], x);
                auto y2 = apply(op, b.roots()[i], y);
                if (x2.has_value() != y2.has_value()) return false;
                if (!x2) continue;
                auto fi = fwd.find(*x2);
                auto bi = bwd.find(*y2);
                if (fi != fwd.end() || bi != bwd.end()) {
                    if (fi == fwd.end() || bi == bwd.end() || fi->second != *y2) return false;
                    continue;
                }
                fwd[*x2] = *y2;
                bwd[*y2] = *x2;
                todo.emplace_back(*x2, *y2);
            }
    }
    return true;
}

inline std::vector<long> content(const GradedAlphabet& a, const Word& w) {
    std::vector<long> c(a.size(), 0);
    for (Letter l : w) ++c[l.pos];
    return c;
}

/// Equivalence: same content, isomorphic components from the two points.
inline bool equivalent(const GradedAlphabet& a, const Word& u, const Word& v) {
    return content(a, u) == content(a, v) && isomorphic_from(a, u, a, v);
}

// ---------------------------------------------------------------------------
// Diagrams built directly from the shape data.

struct Cells {
    std::vector<std::pair<int, int>> rc;  // row-major
    int body = 0;                         // kites: cells [0, body) are the body
    bool kite = false;
    bool ribbon = false;
};

inline Cells ribbon_cells(const Composition& c, int first_row = 1) {
    Cells out;
    out.ribbon = true;
    int col = 1;
    for (int i = 0; i < c.length(); ++i) {
        for (int j = 0; j < c.parts()[i]; ++j) out.rc.emplace_back(first_row + i, col + j);
        col += c.parts()[i] - 1;
    }
    return out;
}

inline Cells young_cells(const Partition& l) {
    Cells out;
    for (int i = 1; i <= l.length(); ++i)
        for (int j = 1; j <= l.part(i); ++j) out.rc.emplace_back(i, j);
    return out;
}

inline Cells kite_cells(const KiteShape& k) {
    Cells out = young_cells(k.body);
    out.body = static_cast<int>(out.rc.size());
    out.kite = true;
    Cells t = ribbon_cells(k.tail, k.m + 1);
    out.rc.insert(out.rc.end(), t.rc.begin(), t.rc.end());
    return out;
}

/// Reading word: rows top to bottom, each right to left.
inline Word reading(const Cells& c, const std::vector<Letter>& e) {
    std::vector<int> idx(c.rc.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        if (c.rc[x].first != c.rc[y].first) return c.rc[x].first < c.rc[y].first;
        return c.rc[x].second > c.rc[y].second;
    });
    Word w;
    for (int i : idx) w.push_back(e[i]);
    return w;
}

inline bool valid(const GradedAlphabet& a, const Cells& c, const std::vector<Letter>& e) {
    std::map<std::pair<int, int>, Letter> at;
    for (std::size_t i = 0; i < c.rc.size(); ++i) at[c.rc[i]] = e[i];
    for (const auto& [rc, x] : at) {
        auto right = at.find({rc.first, rc.second + 1});
        if (right != at.end()) {
            Letter y = right->second;
            if (y < x || (y == x && !a.is_even(x))) return false;
        }
        auto down = at.find({rc.first + 1, rc.second});
        if (down != at.end()) {
            Letter y = down->second;
            if (y < x || (y == x && a.is_even(x))) return false;
        }
    }
    if (c.kite && c.body > 0 && c.body < static_cast<int>(c.rc.size())) {
        Letter j = e[c.body];
        for (int i = 0; i < c.body; ++i) {
            if (a.is_even(j) ? !(e[i] < j) : (j < e[i])) return false;
        }
    }
    return true;
}

/// Reading words of all valid fillings, sorted.
inline std::vector<Word> fillings(const GradedAlphabet& a, const Cells& c) {
    std::vector<Word> out;
    const int n = static_cast<int>(c.rc.size());
    std::vector<Letter> e(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (valid(a, c, e)) out.push_back(reading(c, e));
            return;
        }
        for (int p = 0; p < a.size(); ++p) {
            e[i] = Letter(p);
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline CharacterPoly character(const GradedAlphabet& a, const std::vector<Word>& ws) {
    CharacterPoly f;
    for (const auto& w : ws) {
        Monomial m;
        for (Letter l : w) ++m[a.key(l)];
        f.add_term(m, 1);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Permutations, standard tableaux, posets.

inline std::vector<std::vector<int>> permutations(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    std::vector<std::vector<int>> out;
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

inline std::set<int> descent_set(const std::vector<int>& s) {
    std::set<int> d;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] > s[i + 1]) d.insert(static_cast<int>(i + 1));
    return d;
}

/// alpha of a descent set in {1..r-1}.
inline Composition composition_of(const std::set<int>& d, int r) {
    std::vector<int> p;
    int last = 0;
    for (int x : d) {
        p.push_back(x - last);
        last = x;
    }
    if (r > 0) p.push_back(r - last);
    return Composition(p);
}

/// Descent compositions of all standard Young tableaux of shape lambda:
/// k is a descent when k+1 lies in a column weakly left of k.
inline std::map<Composition, int> syt_descents(const Partition& lambda) {
    std::map<Composition, int> out;
    const int r = lambda.size();
    Cells c = young_cells(lambda);
    for (const auto& s : permutations(r)) {
        // s[i] numbers cell i
        std::map<std::pair<int, int>, int> num;
        for (int i = 0; i < r; ++i) num[c.rc[i]] = s[i];
        bool ok = true;
        for (const auto& [rc, v] : num) {
            auto rt = num.find({rc.first, rc.second + 1});
            auto dn = num.find({rc.first + 1, rc.second});
            if ((rt != num.end() && rt->second < v) || (dn != num.end() && dn->second < v)) ok = false;
        }
        if (!ok) continue;
        std::vector<int> col(r + 1);
        for (const auto& [rc, v] : num) col[v] = rc.second;
        std::set<int> d;
        for (int k = 1; k < r; ++k)
            if (col[k + 1] <= col[k]) d.insert(k);
        ++out[composition_of(d, r)];
    }
    return out;
}

/// Linear extensions of a poset by filtering all permutations.
inline std::vector<std::vector<int>> linear_extensions(const LabeledPoset& p) {
    std::vector<std::vector<int>> out;
    const int n = p.size();
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (p.less(s[j], s[i])) ok = false;
        if (ok) out.push_back(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

inline Composition extension_composition(const LabeledPoset& p, const std::vector<int>& w) {
    std::set<int> d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (p.gamma(w[i]) > p.gamma(w[i + 1])) d.insert(static_cast<int>(i + 1));
    return composition_of(d, static_cast<int>(w.size()));
}

/// Enriched P-partitions by checking every map X -> A.
inline std::vector<std::vector<Letter>> enriched(const LabeledPoset& p, const GradedAlphabet& a) {
    std::vector<std::vector<Letter>> out;
    const int n = p.size();
    std::vector<Letter> s(n);
    auto ok = [&]() {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (!p.less(x, y)) continue;
                if (s[y] < s[x]) return false;
                if (s[x] == s[y]) {
                    if (a.is_even(s[x]) && !(p.gamma(x) < p.gamma(y))) return false;
                    if (!a.is_even(s[x]) && !(p.gamma(x) > p.gamma(y))) return false;
                }
            }
        return true;
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (ok()) out.push_back(s);
            return;
        }
        for (int q = 0; q < a.size(); ++q) {
            s[i] = Letter(q);
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// Letters in decreasing order of label.
inline Word embed(const LabeledPoset& p, const std::vector<Letter>& s) {
    std::vector<int> idx(p.size());
    for (int i = 0; i < p.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return p.gamma(x) > p.gamma(y); });
    Word w;
    for (int i : idx) w.push_back(s[i]);
    return w;
}

// ---------------------------------------------------------------------------

/// Classical Littlewood-Richardson coefficient c^lambda_{mu nu} in m
/// variables by peeling leading monomials off s_mu s_nu.
inline long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, int m) {
    GradedAlphabet a = build_alphabet(MnSpec{m, 0});
    auto schur = [&](const Partition& l) { return oracle::character(a, fillings(a, young_cells(l))); };
    CharacterPoly f = schur(mu) * schur(nu);
    long found = 0;
    while (!f.is_zero()) {
        // leading monomial: lexicographically largest exponent vector from -m up
        std::vector<int> best;
        Monomial bm;
        for (const auto& [mono, c] : f.terms()) {
            std::vector<int> v(m, 0);
            for (const auto& [k, e] : mono) v[k / 2 + m] = e;
            if (best.empty() || v > best) {
                best = v;
                bm = mono;
            }
        }
        Partition lead{std::vector<int>(best.begin(), best.end())};
        BigInt c = f.coefficient(bm);
        if (lead == lambda) found = static_cast<long>(c);
        f = f - CharacterPoly::constant(c) * schur(lead);
    }
    return found;
}

}  // namespace oracle
