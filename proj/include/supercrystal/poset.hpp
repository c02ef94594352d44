#pragma once

// Labeled posets and enriched P-partitions, linear extensions with their
// descent compositions, and shuffles of labeled chains.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "supercrystal/alphabet.hpp"
#include "supercrystal/crystal.hpp"
#include "supercrystal/shapes.hpp"

namespace supercrystal {

/// Finite strict partial order with an injective positive labeling.
/// Elements are indexed 0..n-1 in the order given.
class LabeledPoset {
public:
    LabeledPoset() = default;

    /// `covers` lists pairs (x, y) with x < y; the transitive closure is
    /// taken.  Throws on unknown names, duplicate names, cycles, or a
    /// labeling that is not injective and positive.
    LabeledPoset(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& covers,
                 std::vector<int> gamma)
        : names_(std::move(names)), gamma_(std::move(gamma)) {
        const int n = size();
        if (static_cast<int>(gamma_.size()) != n) throw InputError("every poset element needs a label");
        std::map<std::string, int> idx;
        for (int i = 0; i < n; ++i)
            if (!idx.emplace(names_[i], i).second) throw InputError("duplicate poset element " + names_[i]);
        std::set<int> seen;
        for (int g : gamma_) {
            if (g <= 0) throw InputError("labels must be positive");
            if (!seen.insert(g).second) throw InputError("labeling is not injective");
        }
        less_.assign(static_cast<std::size_t>(n) * n, false);
        for (const auto& [x, y] : covers) {
            auto ix = idx.find(x), iy = idx.find(y);
            if (ix == idx.end() || iy == idx.end()) throw InputError("cover mentions unknown element");
            less_[ix->second * n + iy->second] = true;
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (less_[i * n + k])
                    for (int j = 0; j < n; ++j)
                        if (less_[k * n + j]) less_[i * n + j] = true;
        for (int i = 0; i < n; ++i)
            if (less_[i * n + i]) throw InputError("cover relation has a cycle through " + names_[i]);
    }

    int size() const { return static_cast<int>(names_.size()); }
    bool less(int x, int y) const { return less_[x * size() + y]; }
    int gamma(int x) const { return gamma_[x]; }
    const std::vector<int>& gammas() const { return gamma_; }
    const std::string& name(int x) const { return names_[x]; }
    const std::vector<std::string>& names() const { return names_; }

    /// Elements in decreasing label order: the letter order of psi.
    std::vector<int> reading_order() const {
        std::vector<int> o(size());
        std::iota(o.begin(), o.end(), 0);
        std::sort(o.begin(), o.end(), [&](int x, int y) { return gamma_[x] > gamma_[y]; });
        return o;
    }

    /// Disjoint union; the second poset's names get a prefix when they
    /// clash.
    LabeledPoset disjoint_union(const LabeledPoset& o) const {
        std::vector<std::string> names = names_;
        std::vector<int> gamma = gamma_;
        std::vector<std::pair<std::string, std::string>> covers = cover_pairs();
        std::set<std::string> used(names.begin(), names.end());
        std::vector<std::string> renamed;
        for (const auto& s : o.names_) {
            std::string t = s;
            while (used.count(t)) t = "'" + t;
            used.insert(t);
            renamed.push_back(t);
        }
        names.insert(names.end(), renamed.begin(), renamed.end());
        gamma.insert(gamma.end(), o.gamma_.begin(), o.gamma_.end());
        for (int i = 0; i < o.size(); ++i)
            for (int j = 0; j < o.size(); ++j)
                if (o.less(i, j)) covers.emplace_back(renamed[i], renamed[j]);
        return LabeledPoset(names, covers, gamma);
    }

    /// Same order with every label raised by t.
    LabeledPoset shifted(int t) const {
        std::vector<int> g = gamma_;
        for (int& v : g) v += t;
        return LabeledPoset(names_, cover_pairs(), g);
    }

private:
    std::vector<std::pair<std::string, std::string>> cover_pairs() const {
        std::vector<std::pair<std::string, std::string>> c;
        for (int i = 0; i < size(); ++i)
            for (int j = 0; j < size(); ++j)
                if (less(i, j)) c.emplace_back(names_[i], names_[j]);
        return c;
    }

    std::vector<std::string> names_;
    std::vector<int> gamma_;
    std::vector<bool> less_;
};

/// sigma[x] is the value at element x.
using EnrichedPartition = std::vector<Letter>;

inline bool is_enriched(const LabeledPoset& p, const GradedAlphabet& a, const EnrichedPartition& s) {
    if (static_cast<int>(s.size()) != p.size()) return false;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            if (!p.less(x, y)) continue;
            if (s[y] < s[x]) return false;
            if (s[x] == s[y]) {
                if (a.is_even(s[x]) && !(p.gamma(x) < p.gamma(y))) return false;
                if (!a.is_even(s[x]) && !(p.gamma(x) > p.gamma(y))) return false;
            }
        }
    return true;
}

/// E(P, gamma) over a finite alphabet, sorted lexicographically.
inline std::vector<EnrichedPartition> enumerate_enriched(const LabeledPoset& p, const GradedAlphabet& a) {
    std::vector<EnrichedPartition> out;
    EnrichedPartition cur(p.size());
    auto rec = [&](auto&& self, int x) -> void {
        if (x == p.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v < a.size(); ++v) {
            cur[x] = Letter(v);
            bool ok = true;
            for (int y = 0; y < x && ok; ++y) {
                int lo = p.less(y, x) ? y : p.less(x, y) ? x : -1;
                if (lo < 0) continue;
                int hi = lo == y ? x : y;
                if (cur[hi] < cur[lo]) ok = false;
                else if (cur[hi] == cur[lo])
                    ok = a.is_even(cur[lo]) ? p.gamma(lo) < p.gamma(hi) : p.gamma(lo) > p.gamma(hi);
            }
            if (ok) self(self, x + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// psi(sigma): the values read in decreasing label order.
inline Word embed_word(const LabeledPoset& p, const EnrichedPartition& s) {
    Word w;
    for (int x : p.reading_order()) w.push_back(s.at(x));
    return w;
}

/// Inverse of embed_word on words of the right length.
inline EnrichedPartition unembed_word(const LabeledPoset& p, const Word& w) {
    if (static_cast<int>(w.size()) != p.size()) throw InputError("word length does not match the poset");
    EnrichedPartition s(p.size());
    auto order = p.reading_order();
    for (std::size_t k = 0; k < w.size(); ++k) s[order[k]] = w[k];
    return s;
}

/// All linear extensions, each a sequence of elements, lexicographic.
inline std::vector<std::vector<int>> linear_extensions(const LabeledPoset& p) {
    const int n = p.size();
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x < n; ++x) {
            if (used[x]) continue;
            bool ready = true;
            for (int y = 0; y < n && ready; ++y)
                if (!used[y] && p.less(y, x)) ready = false;
            if (!ready) continue;
            used[x] = true;
            cur.push_back(x);
            self(self);
            cur.pop_back();
            used[x] = false;
        }
    };
    rec(rec);
    return out;
}

/// D(w, gamma) = {i : gamma(w_i) > gamma(w_{i+1})}.
inline std::set<int> descents(const LabeledPoset& p, const std::vector<int>& w) {
    std::set<int> d;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (p.gamma(w[i]) > p.gamma(w[i + 1])) d.insert(static_cast<int>(i) + 1);
    return d;
}

inline Composition descent_composition(const LabeledPoset& p, const std::vector<int>& w) {
    return comp_from_subset(descents(p, w), static_cast<int>(w.size()));
}

/// pi(sigma): elements by increasing value; equal even values by
/// increasing label, equal odd values by decreasing label.
inline std::vector<int> pi_decompose(const LabeledPoset& p, const GradedAlphabet& a, const EnrichedPartition& s) {
    if (!is_enriched(p, a, s)) throw InputError("not an enriched P-partition");
    std::vector<int> w(p.size());
    std::iota(w.begin(), w.end(), 0);
    std::sort(w.begin(), w.end(), [&](int x, int y) {
        if (s[x] != s[y]) return s[x] < s[y];
        return a.is_even(s[x]) ? p.gamma(x) < p.gamma(y) : p.gamma(x) > p.gamma(y);
    });
    return w;
}

/// Multiset {alpha(D(w, gamma)) : w in L(P)} as counts.
inline std::map<Composition, int> extension_multiset(const LabeledPoset& p) {
    std::map<Composition, int> m;
    for (const auto& w : linear_extensions(p)) ++m[descent_composition(p, w)];
    return m;
}

// ---------------------------------------------------------------------------

/// The chain w_alpha = x_1 < ... < x_r (nodes from the northwest) with the
/// canonical labeling gamma_alpha(x_i) = r - k + 1 when x_i is read k-th.
inline LabeledPoset ribbon_chain(const Composition& alpha, const std::string& prefix = "x") {
    const int r = alpha.size();
    Diagram d = Diagram::of(Shape::ribbon(alpha));
    std::vector<std::string> names;
    std::vector<int> gamma(r);
    std::vector<std::pair<std::string, std::string>> covers;
    for (int i = 0; i < r; ++i) names.push_back(prefix + std::to_string(i + 1));
    for (int k = 0; k < r; ++k) gamma[d.reading[k]] = r - k;
    for (int i = 0; i + 1 < r; ++i) covers.emplace_back(names[i], names[i + 1]);
    return LabeledPoset(names, covers, gamma);
}

/// (w_alpha u w_beta, gamma_alpha^[s] u gamma_beta) with s = |beta|.
inline LabeledPoset shuffle_poset(const Composition& alpha, const Composition& beta) {
    return ribbon_chain(alpha, "a").shifted(beta.size()).disjoint_union(ribbon_chain(beta, "b"));
}

/// Descent compositions of all shuffles of alpha and beta, sorted.
inline std::vector<Composition> shuffle_decompose(const Composition& alpha, const Composition& beta) {
    LabeledPoset p = shuffle_poset(alpha, beta);
    std::vector<Composition> out;
    for (const auto& w : linear_extensions(p)) out.push_back(descent_composition(p, w));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace supercrystal
