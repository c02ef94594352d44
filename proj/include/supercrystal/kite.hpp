#pragma once

// Kite shapes as components: identifying a component by its highest
// element, the standard-tableau branching rules, Littlewood-Richardson
// tableaux, and tensor product multiplicities of kite crystals.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supercrystal/alphabet.hpp"
#include "supercrystal/crystal.hpp"
#include "supercrystal/poset.hpp"
#include "supercrystal/shapes.hpp"
#include "supercrystal/tableau.hpp"

namespace supercrystal {

/// The ribbon whose highest tableau, filled from position `start`, has the
/// given letter counts; nullopt when no ribbon does.
inline std::optional<Composition> decode_ribbon_content(const GradedAlphabet& a, const std::vector<int>& counts,
                                                        int start) {
    std::vector<int> seq;
    for (int p = start; p < a.size(); ++p)
        for (int c = 0; c < counts[p]; ++c) seq.push_back(p);
    if (seq.empty()) return Composition{};
    if (seq.front() != start) return std::nullopt;
    std::set<int> breaks;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        int x = seq[i - 1], y = seq[i];
        bool even = a.is_even(Letter(x));
        if (y == x) {
            if (!even) breaks.insert(static_cast<int>(i));
        } else if (y == x + 1) {
            if (even) breaks.insert(static_cast<int>(i));
        } else {
            return std::nullopt;
        }
    }
    return comp_from_subset(breaks, static_cast<int>(seq.size()));
}

/// The kite (lambda, alpha) with m body rows whose highest tableau has
/// weight w, if any.
inline std::optional<KiteShape> decode_kite_weight(const GradedAlphabet& a, const Weight& w, int m) {
    std::vector<int> counts(a.size(), 0);
    for (const auto& [l, c] : w.coeffs()) {
        if (c < 0) return std::nullopt;
        counts[l.pos] = static_cast<int>(c);
    }
    if (m > a.size()) return std::nullopt;
    std::vector<int> body;
    for (int i = 0; i < m; ++i) {
        if (i > 0 && counts[i] > counts[i - 1]) return std::nullopt;
        if (counts[i] > 0 && !a.is_even(Letter(i))) return std::nullopt;
        body.push_back(counts[i]);
    }
    auto tail = decode_ribbon_content(a, counts, m);
    if (!tail) return std::nullopt;
    KiteShape k{Partition(body), *tail, m};
    if (!tail->empty() && k.body.length() != m) return std::nullopt;
    return k;
}

inline Word highest_word(const KiteShape& k, const GradedAlphabet& a) {
    return highest_tableau(Shape::kite(k), a).reading_word();
}

/// Names the kite crystal a component is isomorphic to: the candidate is
/// read off the weight of a highest element and confirmed by equivalence
/// with the highest tableau.  nullopt when the component has no highest
/// element of kite type.
inline std::optional<KiteShape> identify_component(const GradedAlphabet& a, const CrystalComponent& c, int m,
                                                   std::size_t cap = kDefaultCap) {
    for (int h : c.highest) {
        auto k = decode_kite_weight(a, weight_of(c.elements[h]), m);
        if (!k) continue;
        if (equivalent(a, c.elements[h], highest_word(*k, a), cap)) return k;
    }
    return std::nullopt;
}

/// Component multiset of a closed set of words, as kite shapes with m body
/// rows.  Unidentified components are counted under `unidentified`.
struct KiteMultiset {
    std::map<KiteShape, int> counts;
    int unidentified = 0;
    bool operator==(const KiteMultiset&) const = default;
};

inline KiteMultiset classify(const GradedAlphabet& a, const std::vector<CrystalComponent>& comps, int m) {
    KiteMultiset out;
    for (const auto& c : comps) {
        if (auto k = identify_component(a, c, m)) ++out.counts[*k];
        else ++out.unidentified;
    }
    return out;
}

/// True when the kite crystal is nonempty over the alphabet.
inline bool kite_fits(const KiteShape& k, const GradedAlphabet& a) {
    try {
        highest_tableau(Shape::kite(k), a);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

// ---------------------------------------------------------------------------

/// {alpha(T) : T in ST(lambda)}, restricted to ribbons that fit the
/// alphabet.
inline KiteMultiset syt_branching(const Partition& lambda, const GradedAlphabet& a) {
    KiteMultiset out;
    for (const auto& t : standard_tableaux(lambda)) {
        KiteShape k{{}, t.descent_composition, 0};
        if (kite_fits(k, a)) ++out.counts[k];
    }
    return out;
}

/// Kites (mu, alpha(T)) over mu in lambda with at most m rows and T in
/// ST(lambda/mu) whose entry 1 lies in the first column (T empty allowed),
/// restricted to kites that fit the alphabet.
inline KiteMultiset kite_branching(const Partition& lambda, int m, const GradedAlphabet& a) {
    KiteMultiset out;
    for (const auto& mu : subpartitions(lambda)) {
        if (mu.length() > m) continue;
        for (const auto& t : standard_tableaux(lambda, mu)) {
            if (!t.numbers.empty() && (!t.one_in_first_column || mu.length() != m)) continue;
            KiteShape k{mu, t.descent_composition, m};
            if (kite_fits(k, a)) ++out.counts[k];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

/// Semistandard tableaux S of shape nu over [m|0] with H_mu (x) S
/// equivalent to H_lambda.
inline std::vector<Tableau> lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu, int m) {
    if (lambda.size() != mu.size() + nu.size()) return {};
    if (lambda.length() > m || mu.length() > m || nu.length() > m) return {};
    if (nu.empty()) {
        if (lambda != mu) return {};
        return {Tableau(Shape::young(nu), {})};
    }
    GradedAlphabet a = build_alphabet(MnSpec{m, 0});
    Word hl = highest_tableau(Shape::young(lambda), a).reading_word();
    Word hm = highest_tableau(Shape::young(mu), a).reading_word();
    std::vector<Tableau> out;
    for (const auto& s : enumerate(Shape::young(nu), a)) {
        Word w = hm;
        Word sw = s.reading_word();
        w.insert(w.end(), sw.begin(), sw.end());
        if (weight_of(w) == weight_of(hl) && equivalent(a, w, hl)) out.push_back(s);
    }
    return out;
}

struct TensorMultiplicity {
    long crystal = 0;     ///< highest elements of the tensor crystal equivalent to H
    long quadruples = 0;  ///< |LR~| by the quadruple conditions
    long crystal_next = 0;  ///< the crystal count one letter further out
    bool stable() const { return crystal == crystal_next; }
};

namespace detail {

inline std::vector<Word> kite_words(const KiteShape& k, const GradedAlphabet& a) {
    return enumerate_words(Shape::kite(k), a);
}

inline long count_tensor_highest(const KiteShape& target, const KiteShape& k1, const KiteShape& k2,
                                 const GradedAlphabet& a) {
    if (!kite_fits(target, a)) return 0;
    Word h = highest_word(target, a);
    Weight wh = weight_of(h);
    long n = 0;
    auto w1s = kite_words(k1, a), w2s = kite_words(k2, a);
    for (const auto& u : w1s)
        for (const auto& v : w2s) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            if (weight_of(w) != wh || !is_highest(a, w)) continue;
            if (equivalent(a, w, h)) ++n;
        }
    return n;
}

/// The next larger truncation of a mixed alphabet.
inline GradedAlphabet grow(const GradedAlphabet& a, int m) {
    int top = a.key(Letter(a.size() - 1));
    if (top < 0) return build_alphabet(MixedTruncSpec{m, 1});
    return build_alphabet(MixedTruncSpec{m, top + 1});
}

/// Position, in the reading word of the kite, of every diagram cell.
inline std::vector<int> reading_position(const Diagram& d) {
    std::vector<int> pos(d.size());
    for (std::size_t k = 0; k < d.reading.size(); ++k) pos[d.reading[k]] = static_cast<int>(k);
    return pos;
}

/// Cell of the kite diagram (mu, tail) that chain node i (0-based) of the
/// chain alpha(T)·tail stands for: first the cells of mu/eta by their
/// number in T, then the tail nodes.
inline int chain_cell(const Diagram& d, const StandardTableau& t, int i) {
    const int r = static_cast<int>(t.numbers.size());
    if (i < r) return d.find(t.cell_of(i + 1).first, t.cell_of(i + 1).second);
    return d.body_cells + (i - r);
}

}  // namespace detail

/// Multiplicity of B(lambda, alpha) in B(mu, beta) (x) B(nu, gamma), all
/// kites with m body rows, counted on the tensor crystal over the
/// truncation (and over the next truncation) and by the quadruple rule.
inline TensorMultiplicity kite_tensor_multiplicity(const KiteShape& target, const KiteShape& k1, const KiteShape& k2,
                                                   int m, const GradedAlphabet& trunc) {
    for (const auto* k : {&target, &k1, &k2}) {
        if (k->m != m) throw InputError("kite " + k->to_string() + " does not have m = " + std::to_string(m));
        k->validate();
    }
    TensorMultiplicity out;
    out.crystal = detail::count_tensor_highest(target, k1, k2, trunc);
    out.crystal_next = detail::count_tensor_highest(target, k1, k2, detail::grow(trunc, m));

    if (target.size() != k1.size() + k2.size()) return out;
    const int mm1 = m > 0 ? m - 1 : -1;  // position of -1 in N(m)
    Diagram d1 = Diagram::of(Shape::kite(k1)), d2 = Diagram::of(Shape::kite(k2));
    auto pos1 = detail::reading_position(d1), pos2 = detail::reading_position(d2);
    const int off = static_cast<int>(d1.size());

    for (const auto& eta : subpartitions(k1.body)) {
        auto t1s = standard_tableaux(k1.body, eta);
        for (const auto& zeta : subpartitions(k2.body)) {
            auto ss = lr_tableaux(target.body, eta, zeta, m);
            if (ss.empty()) continue;
            auto t2s = standard_tableaux(k2.body, zeta);
            for (const auto& s : ss) {
                // earliest -1 in the reading of T1 (x) T2
                int first_minus = 1 << 30;
                if (m > 0) {
                    for (int i = 1; i <= eta.length(); ++i)
                        if (i == m)
                            for (int j = 1; j <= eta.part(i); ++j)
                                first_minus = std::min(first_minus, pos1[d1.find(i, j)]);
                    Diagram ds = s.diagram();
                    for (std::size_t c = 0; c < ds.size(); ++c)
                        if (s.entries()[c].pos == mm1)
                            first_minus = std::min(first_minus,
                                                   off + pos2[d2.find(ds.cells[c].first, ds.cells[c].second)]);
                }
                for (const auto& t1 : t1s)
                    for (const auto& t2 : t2s) {
                        Composition c1 = t1.descent_composition.concat(k1.tail);
                        Composition c2 = t2.descent_composition.concat(k2.tail);
                        LabeledPoset p = shuffle_poset(c1, c2);
                        for (const auto& w : linear_extensions(p)) {
                            if (descent_composition(p, w) != target.tail) continue;
                            if (m > 0 && !w.empty()) {
                                int x = w.front();
                                int at = x < c1.size() ? pos1[detail::chain_cell(d1, t1, x)]
                                                       : off + pos2[detail::chain_cell(d2, t2, x - c1.size())];
                                if (!(first_minus < at)) continue;
                            }
                            ++out.quadruples;
                        }
                    }
            }
        }
    }
    return out;
}

}  // namespace supercrystal
