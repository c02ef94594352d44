#pragma once

// Kashiwara operators on words, component exploration, decomposition and
// crystal equivalence.
//
// A word w_1 ... w_r is the tensor w_1 (x) ... (x) w_r, folded left to
// right: ((w_1 (x) w_2) (x) ...) (x) w_r.  Every operator application is a
// single linear scan that carries (eps, phi, pairing) of the processed
// prefix together with the positions where e and f would act on it.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "supercrystal/alphabet.hpp"
#include "supercrystal/error.hpp"

namespace supercrystal {

using Word = std::vector<Letter>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Letter l : w) {
            h ^= l.pos;
            h *= 1099511628211ull;
        }
        h ^= w.size();
        return h;
    }
};

enum class Op { E, F };

inline constexpr std::size_t kDefaultCap = 1000000;

inline std::string format_word(const GradedAlphabet& a, const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += a.display(w[i]);
    }
    return s;
}

inline Word parse_word(const GradedAlphabet& a, std::string_view text) {
    Word w;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) w.push_back(a.parse_letter(tok));
    return w;
}

inline Weight weight_of(const Word& w) {
    Weight wt;
    for (Letter l : w) wt.add(l, 1);
    return wt;
}

/// Letter multiplicities indexed by position; the dense form of weight_of.
inline std::vector<int> content_of(const GradedAlphabet& a, const Word& w) {
    std::vector<int> c(a.size(), 0);
    for (Letter l : w) ++c[l.pos];
    return c;
}

namespace detail {

struct FoldState {
    int eps = 0;
    int phi = 0;
    long pair = 0;  // (wt, alpha)
    int epos = -1;  // where e acts, -1 for null
    int fpos = -1;  // where f acts
};

inline FoldState letter_state(const GradedAlphabet& a, const SimpleRoot& r, Letter l, int k) {
    FoldState s;
    if (l == r.lo) {
        s.phi = 1;
        s.fpos = k;
        s.pair = sign_of(a.parity(r.lo));
    } else if (l == r.hi) {
        s.eps = 1;
        s.epos = k;
        s.pair = -sign_of(a.parity(r.hi));
    }
    return s;
}

inline FoldState combine(const SimpleRoot& r, const FoldState& b1, const FoldState& b2) {
    FoldState out;
    out.pair = b1.pair + b2.pair;
    if (r.isotropic) {
        bool first = (r.ell == 1 && b1.pair != 0) || (r.ell == -1 && b2.pair == 0);
        const FoldState& src = first ? b1 : b2;
        out.eps = src.eps;
        out.phi = src.phi;
        out.epos = src.epos;
        out.fpos = src.fpos;
        return out;
    }
    const long l = r.ell;
    if (l == 1) {
        out.eps = static_cast<int>(std::max<long>(b1.eps, b2.eps - l * b1.pair));
        out.phi = static_cast<int>(std::max<long>(b1.phi + l * b2.pair, b2.phi));
        out.epos = b1.phi >= b2.eps ? b1.epos : b2.epos;
        out.fpos = b1.phi > b2.eps ? b1.fpos : b2.fpos;
    } else {
        out.phi = static_cast<int>(std::max<long>(b1.phi, b2.phi + l * b1.pair));
        out.eps = static_cast<int>(std::max<long>(b1.eps - l * b2.pair, b2.eps));
        out.epos = b2.phi < b1.eps ? b1.epos : b2.epos;
        out.fpos = b2.phi <= b1.eps ? b1.fpos : b2.fpos;
    }
    return out;
}

inline FoldState fold(const GradedAlphabet& a, const SimpleRoot& r, const Word& w) {
    FoldState acc;
    for (std::size_t k = 0; k < w.size(); ++k) {
        FoldState s = letter_state(a, r, w[k], static_cast<int>(k));
        acc = k == 0 ? s : combine(r, acc, s);
    }
    return acc;
}

inline void check_root(const GradedAlphabet& a, const SimpleRoot& r) {
    if (r.index < 0 || r.index + 1 >= a.size() || a.roots()[r.index] != r)
        throw InputError("simple root does not belong to alphabet " + a.spec());
}

}  // namespace detail

/// e_alpha or f_alpha applied to a word; nullopt is the formal zero.
inline std::optional<Word> apply(const GradedAlphabet& a, Op x, const SimpleRoot& r, const Word& w) {
    detail::check_root(a, r);
    detail::FoldState s = detail::fold(a, r, w);
    int pos = x == Op::E ? s.epos : s.fpos;
    if (pos < 0) return std::nullopt;
    Word out = w;
    out[pos] = x == Op::E ? r.lo : r.hi;
    return out;
}

inline std::optional<Word> apply(const GradedAlphabet& a, Op x, int root_index, const Word& w) {
    return apply(a, x, a.roots().at(root_index), w);
}

/// (eps_alpha(w), phi_alpha(w)).
inline std::pair<int, int> eps_phi(const GradedAlphabet& a, const SimpleRoot& r, const Word& w) {
    detail::check_root(a, r);
    detail::FoldState s = detail::fold(a, r, w);
    return {s.eps, s.phi};
}

/// The scan rule for alphabets whose roots are all isotropic (the
/// half-integer truncations): for lo even act at the first letter with
/// nonzero pairing, for lo odd at the last one.
inline std::optional<Word> apply_isotropic_scan(const GradedAlphabet& a, Op x, int root_index, const Word& w) {
    if (a.family() != AlphabetFamily::Half) throw InputError("scan rule needs a half-integer truncation");
    const SimpleRoot& r = a.roots().at(root_index);
    int k = -1;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] == r.lo || w[i] == r.hi) {
            k = i;
            if (r.ell == 1) break;
        }
    }
    if (k < 0) return std::nullopt;
    Word out = w;
    if (x == Op::E) {
        if (w[k] != r.hi) return std::nullopt;
        out[k] = r.lo;
    } else {
        if (w[k] != r.lo) return std::nullopt;
        out[k] = r.hi;
    }
    return out;
}

inline bool is_highest(const GradedAlphabet& a, const Word& w) {
    for (const auto& r : a.roots())
        if (apply(a, Op::E, r, w)) return false;
    return true;
}

// ---------------------------------------------------------------------------

struct Edge {
    int source = 0;
    int root = 0;
    int target = 0;
    auto operator<=>(const Edge&) const = default;
};

/// A connected piece of a crystal: elements sorted lexicographically, the
/// f-edges among them, and the elements killed by every e.
struct CrystalComponent {
    std::vector<Word> elements;
    std::vector<Edge> edges;
    std::vector<int> highest;
    bool truncated = false;

    int index_of(const Word& w) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), w);
        if (it == elements.end() || *it != w) return -1;
        return static_cast<int>(it - elements.begin());
    }
    std::size_t size() const { return elements.size(); }
};

namespace detail {

inline void finish_component(const GradedAlphabet& a, CrystalComponent& c) {
    std::sort(c.elements.begin(), c.elements.end());
    c.edges.clear();
    c.highest.clear();
    for (int i = 0; i < static_cast<int>(c.elements.size()); ++i) {
        bool top = true;
        for (const auto& r : a.roots()) {
            if (auto t = apply(a, Op::F, r, c.elements[i])) {
                int j = c.index_of(*t);
                if (j >= 0) c.edges.push_back({i, r.index, j});
            }
            if (apply(a, Op::E, r, c.elements[i])) top = false;
        }
        if (top) c.highest.push_back(i);
    }
    std::sort(c.edges.begin(), c.edges.end());
}

}  // namespace detail

/// BFS closure of `seed` under all e and f.  More than `cap` elements gives
/// a partial component with `truncated` set.
inline CrystalComponent explore_component(const GradedAlphabet& a, const Word& seed, std::size_t cap = kDefaultCap) {
    CrystalComponent c;
    std::unordered_map<Word, bool, WordHash> seen;
    std::deque<Word> queue;
    seen.emplace(seed, true);
    queue.push_back(seed);
    c.elements.push_back(seed);
    while (!queue.empty() && !c.truncated) {
        Word w = std::move(queue.front());
        queue.pop_front();
        for (const auto& r : a.roots()) {
            for (Op x : {Op::E, Op::F}) {
                auto n = apply(a, x, r, w);
                if (!n || seen.count(*n)) continue;
                if (c.elements.size() >= cap) {
                    c.truncated = true;
                    break;
                }
                seen.emplace(*n, true);
                c.elements.push_back(*n);
                queue.push_back(std::move(*n));
            }
            if (c.truncated) break;
        }
    }
    detail::finish_component(a, c);
    return c;
}

/// Splits an operator-closed set of words into connected components,
/// ordered by their smallest element.  Throws if the set is not closed.
inline std::vector<CrystalComponent> decompose(const GradedAlphabet& a, std::vector<Word> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    const int n = static_cast<int>(elements.size());
    std::unordered_map<Word, int, WordHash> index;
    index.reserve(elements.size() * 2);
    for (int i = 0; i < n; ++i) index.emplace(elements[i], i);

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < n; ++i) {
        for (const auto& r : a.roots()) {
            for (Op x : {Op::E, Op::F}) {
                auto t = apply(a, x, r, elements[i]);
                if (!t) continue;
                auto it = index.find(*t);
                if (it == index.end())
                    throw InputError("set is not closed: " + format_word(a, elements[i]) + " maps to " +
                                     format_word(a, *t));
                int u = find(i), v = find(it->second);
                if (u != v) parent[std::max(u, v)] = std::min(u, v);
            }
        }
    }
    std::map<int, CrystalComponent> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].elements.push_back(elements[i]);
    std::vector<CrystalComponent> out;
    for (auto& [root, comp] : groups) {
        detail::finish_component(a, comp);
        out.push_back(std::move(comp));
    }
    return out;
}

/// (highest weight, size) for each component; components with several
/// killed-by-all-e elements contribute one entry per such element.
inline std::multiset<std::pair<Weight, std::size_t>> component_summary(const std::vector<CrystalComponent>& comps) {
    std::multiset<std::pair<Weight, std::size_t>> out;
    for (const auto& c : comps)
        for (int h : c.highest) out.emplace(weight_of(c.elements[h]), c.size());
    return out;
}

// ---------------------------------------------------------------------------

struct MatchOptions {
    bool weights = true;  ///< demand equal weights at every matched pair
    bool eps_phi = true;  ///< demand equal (eps, phi) for every root
    std::size_t cap = kDefaultCap;
};

/// Paired exploration from (u, v): apply identical operator strings to
/// both and require simultaneous null.  Returns the induced bijection
/// C(u) -> C(v) when it is an isomorphism of colored graphs (with the
/// requested labels), nullopt otherwise.  The alphabets must have the same
/// parity pattern; words are compared position by position.
inline std::optional<std::unordered_map<Word, Word, WordHash>> match_components(const GradedAlphabet& a, const Word& u,
                                                                                const GradedAlphabet& b, const Word& v,
                                                                                const MatchOptions& opt = {}) {
    if (!a.isomorphic_to(b)) throw InputError("equivalence needs isomorphic alphabets");
    std::unordered_map<Word, Word, WordHash> fwd, bwd;
    std::deque<std::pair<Word, Word>> queue;
    auto same_labels = [&](const Word& x, const Word& y) {
        if (opt.weights && content_of(a, x) != content_of(b, y)) return false;
        if (opt.eps_phi) {
            for (std::size_t i = 0; i < a.roots().size(); ++i)
                if (eps_phi(a, a.roots()[i], x) != eps_phi(b, b.roots()[i], y)) return false;
        }
        return true;
    };
    if (!same_labels(u, v)) return std::nullopt;
    fwd.emplace(u, v);
    bwd.emplace(v, u);
    queue.emplace_back(u, v);
    while (!queue.empty()) {
        auto [x, y] = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < a.roots().size(); ++i) {
            for (Op op : {Op::E, Op::F}) {
                auto x2 = apply(a, op, a.roots()[i], x);
                auto y2 = apply(b, op, b.roots()[i], y);
                if (x2.has_value() != y2.has_value()) return std::nullopt;
                if (!x2) continue;
                auto f = fwd.find(*x2);
                auto g = bwd.find(*y2);
                if (f != fwd.end() || g != bwd.end()) {
                    if (f == fwd.end() || g == bwd.end() || f->second != *y2 || g->second != *x2) return std::nullopt;
                    continue;
                }
                if (!same_labels(*x2, *y2)) return std::nullopt;
                if (fwd.size() >= opt.cap)
                    throw IndeterminateError("equivalence undecided: more than " + std::to_string(opt.cap) +
                                             " paired states");
                fwd.emplace(*x2, *y2);
                bwd.emplace(*y2, *x2);
                queue.emplace_back(std::move(*x2), std::move(*y2));
            }
        }
    }
    return fwd;
}

/// gl_S-equivalence: an isomorphism C(u) -> C(v) preserving wt, eps, phi
/// and sending u to v.
inline bool equivalent(const GradedAlphabet& a, const Word& u, const Word& v, std::size_t cap = kDefaultCap) {
    return match_components(a, u, a, v, MatchOptions{true, true, cap}).has_value();
}

inline bool equivalent(const GradedAlphabet& a, const Word& u, const GradedAlphabet& b, const Word& v,
                       std::size_t cap = kDefaultCap) {
    return match_components(a, u, b, v, MatchOptions{true, true, cap}).has_value();
}

// ---------------------------------------------------------------------------

inline std::string to_dot(const GradedAlphabet& a, const CrystalComponent& c, const std::string& name = "crystal") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t i = 0; i < c.elements.size(); ++i) {
        os << "  n" << i << " [label=\"" << format_word(a, c.elements[i]) << "\"";
        if (std::find(c.highest.begin(), c.highest.end(), static_cast<int>(i)) != c.highest.end())
            os << ", shape=box";
        os << "];\n";
    }
    for (const auto& e : c.edges)
        os << "  n" << e.source << " -> n" << e.target << " [label=\"a[" << a.root_label(a.roots()[e.root])
           << "]\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace supercrystal
