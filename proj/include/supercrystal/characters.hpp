#pragma once

// Characters of finite crystals, hook Schur polynomials, the factorization
// and cancellation identities, the membership test for super
// quasi-symmetric polynomials, and expansion in the kite basis.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "supercrystal/alphabet.hpp"
#include "supercrystal/crystal.hpp"
#include "supercrystal/kite.hpp"
#include "supercrystal/polynomial.hpp"
#include "supercrystal/shapes.hpp"
#include "supercrystal/tableau.hpp"

namespace supercrystal {

using BigRational = boost::multiprecision::cpp_rational;

inline Monomial monomial_of(const GradedAlphabet& a, const Weight& w) {
    Monomial m;
    for (const auto& [l, c] : w.coeffs()) {
        if (c < 0) throw InputError("negative weight has no monomial");
        m[a.key(l)] = static_cast<int>(c);
    }
    return m;
}

inline CharacterPoly character(const GradedAlphabet& a, const std::vector<Word>& elements) {
    CharacterPoly p;
    for (const auto& w : elements) p.add_term(monomial_of(a, weight_of(w)), 1);
    return p;
}

inline CharacterPoly character(const GradedAlphabet& a, const Shape& shape) {
    return character(a, enumerate_words(shape, a));
}

/// hs_lambda(z_-m, ..., z_-1; z_1, ..., z_n); zero off the hook.
inline CharacterPoly hook_schur(const Partition& lambda, int m, int n) {
    return character(build_alphabet(MnSpec{m, n}), Shape::young(lambda));
}

/// ch B over the alphabet of the kite (lambda, alpha); zero when it does
/// not fit.
inline CharacterPoly kite_character(const KiteShape& k, const GradedAlphabet& a) {
    return character(a, Shape::kite(k));
}

// ---------------------------------------------------------------------------

struct FactorizationCheck {
    bool hook_times_ribbon = false;  ///< ch B(lambda, alpha) = hs_lambda(..; z_1/2) ch B(alpha)
    bool zigzag_product = false;     ///< ... = z^mu hs_lambda(..; z_1/2) prod (z_i + z_{i+1/2})
    CharacterPoly lhs;
    CharacterPoly rhs1;
    CharacterPoly rhs2;
    bool ok() const { return hook_times_ribbon && zigzag_product; }
};

/// The zigzag ribbon (2^{q-1}, 1).
inline Composition zigzag(int q) {
    std::vector<int> p(q - 1, 2);
    p.push_back(1);
    return Composition(p);
}

/// Both factorizations of ch B_{N(p)^{<=q}}(lambda, alpha) for alpha with
/// 2q-1 or 2q corners, as exact identities.
inline FactorizationCheck factorization_check(const Partition& lambda, const Composition& alpha, int p, int q) {
    if (q < 1) throw InputError("q must be positive");
    int c = corners(alpha);
    if (c != 2 * q - 1 && c != 2 * q)
        throw InputError(alpha.to_string() + " has " + std::to_string(c) + " corners, not 2q-1 or 2q");
    KiteShape k{lambda, alpha, p};
    k.validate();
    GradedAlphabet full = build_alphabet(MixedTruncSpec{p, 2 * q});
    GradedAlphabet half = build_alphabet(HalfTruncSpec{2 * q});
    GradedAlphabet low = build_alphabet(MixedTruncSpec{p, 1});

    FactorizationCheck r;
    r.lhs = kite_character(k, full);
    CharacterPoly hs = character(low, Shape::young(lambda));
    CharacterPoly ribbon = character(half, Shape::ribbon(alpha));
    r.rhs1 = hs * ribbon;
    r.hook_times_ribbon = r.lhs == r.rhs1;

    Weight mu = weight_of(highest_tableau(Shape::ribbon(alpha), half).reading_word()) -
                weight_of(highest_tableau(Shape::ribbon(zigzag(q)), half).reading_word());
    bool nonneg = true;
    for (const auto& [l, v] : mu.coeffs()) nonneg = nonneg && v >= 0;
    if (!nonneg) return r;
    CharacterPoly prod = CharacterPoly::constant(1);
    for (int i = 1; i < 2 * q; ++i) prod = prod * (CharacterPoly::variable(i) + CharacterPoly::variable(i + 1));
    CharacterPoly zmu;
    zmu.add_term(monomial_of(half, mu), 1);
    r.rhs2 = zmu * hs * prod;
    r.zigzag_product = r.lhs == r.rhs2;
    return r;
}

// ---------------------------------------------------------------------------

/// f with z_r = t and z_s = -t, as coefficients by power of t.
inline std::map<int, CharacterPoly> cancel_substitute(const CharacterPoly& f, int r_key, int s_key) {
    std::map<int, CharacterPoly> out;
    for (const auto& [m, c] : f.terms()) {
        Monomial rest = m;
        int a = 0, b = 0;
        if (auto it = rest.find(r_key); it != rest.end()) {
            a = it->second;
            rest.erase(it);
        }
        if (auto it = rest.find(s_key); it != rest.end()) {
            b = it->second;
            rest.erase(it);
        }
        out[a + b].add_term(rest, b % 2 ? BigInt(-c) : c);
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

inline bool t_independent(const CharacterPoly& f, int r_key, int s_key) {
    for (const auto& [d, p] : cancel_substitute(f, r_key, s_key))
        if (d > 0) return false;
    return true;
}

/// The t-free part of f at z_r = -z_s = t.
inline CharacterPoly t_constant_part(const CharacterPoly& f, int r_key, int s_key) {
    auto sub = cancel_substitute(f, r_key, s_key);
    auto it = sub.find(0);
    return it == sub.end() ? CharacterPoly{} : it->second;
}

struct Membership {
    bool member = true;
    std::string witness;  ///< first failed condition
};

/// Symmetry in z_-m, ..., z_-1 and t-independence at (r, s) = (-1, 1/2)
/// and (r, r + 1/2) for every r inside the truncation N(m)^{<= n}.
inline Membership qsym_membership(const CharacterPoly& f, int m, int n2) {
    Membership r;
    for (const auto& [mono, c] : f.terms())
        for (const auto& [k, e] : mono) {
            bool ok = (k < 0 && k >= -2 * m && k % 2 == 0) || (k > 0 && k <= n2);
            if (!ok) {
                r.member = false;
                r.witness = "variable z[" + format_key(k) + "] outside the truncation";
                return r;
            }
        }
    for (int i = m; i >= 2; --i) {
        if (f.swapped(-2 * i, -2 * (i - 1)) != f) {
            r.member = false;
            r.witness = "not symmetric in z[" + format_key(-2 * i) + "], z[" + format_key(-2 * (i - 1)) + "]";
            return r;
        }
    }
    std::vector<std::pair<int, int>> pairs;
    if (m >= 1) pairs.emplace_back(-2, 1);
    for (int k = 1; k + 1 <= n2; ++k) pairs.emplace_back(k, k + 1);
    for (auto [rk, sk] : pairs) {
        if (!t_independent(f, rk, sk)) {
            r.member = false;
            r.witness = "depends on t at z[" + format_key(rk) + "] = -z[" + format_key(sk) + "] = t";
            return r;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

struct Expansion {
    bool ok = false;
    std::map<KiteShape, BigInt> coefficients;
    std::string failure;
    bool boundary = false;  ///< some leading term used the last letter of the truncation
};

namespace detail {

inline std::vector<long> exponent_vector(const GradedAlphabet& a, const Monomial& m) {
    std::vector<long> v(a.size(), 0);
    for (const auto& [k, e] : m) {
        auto l = a.find(k);
        if (!l) throw InputError("variable z[" + format_key(k) + "] not in " + a.spec());
        v[l->pos] = e;
    }
    return v;
}

inline Weight weight_from(const std::vector<long>& v) {
    Weight w;
    for (std::size_t i = 0; i < v.size(); ++i) w.add(Letter(static_cast<int>(i)), v[i]);
    return w;
}

}  // namespace detail

/// Leading-term elimination against ch B(lambda, alpha) over the
/// truncation: the leading monomial is one no other monomial dominates in
/// the weight order, the lexicographically largest exponent vector among
/// those.  Succeeds when the residual reaches zero.
inline Expansion expand_in_basis(const CharacterPoly& f, int m, const GradedAlphabet& trunc, int max_steps = 100000) {
    Expansion out;
    CharacterPoly g = f;
    std::map<KiteShape, CharacterPoly> cache;
    for (int step = 0; step < max_steps; ++step) {
        if (g.is_zero()) {
            out.ok = true;
            for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
                it = it->second == 0 ? out.coefficients.erase(it) : std::next(it);
            return out;
        }
        std::vector<std::pair<std::vector<long>, BigInt>> terms;
        for (const auto& [mono, c] : g.terms()) terms.emplace_back(detail::exponent_vector(trunc, mono), c);
        int best = -1;
        for (int i = 0; i < static_cast<int>(terms.size()); ++i) {
            Weight wi = detail::weight_from(terms[i].first);
            bool dominated = false;
            for (int j = 0; j < static_cast<int>(terms.size()) && !dominated; ++j)
                if (j != i && weight_order_geq(detail::weight_from(terms[j].first), wi, trunc)) dominated = true;
            if (dominated) continue;
            if (best < 0 || terms[i].first > terms[best].first) best = i;
        }
        if (best < 0) {
            out.failure = "no maximal monomial";
            return out;
        }
        const auto& [vec, coef] = terms[best];
        Weight w = detail::weight_from(vec);
        auto k = decode_kite_weight(trunc, w, m);
        if (!k || !kite_fits(*k, trunc)) {
            Monomial mono;
            for (std::size_t i = 0; i < vec.size(); ++i)
                if (vec[i]) mono[trunc.key(Letter(static_cast<int>(i)))] = static_cast<int>(vec[i]);
            out.failure = "leading monomial " + monomial_string(mono) + " is not the weight of a highest kite tableau";
            return out;
        }
        if (vec.back() != 0) out.boundary = true;
        auto it = cache.find(*k);
        if (it == cache.end()) it = cache.emplace(*k, kite_character(*k, trunc)).first;
        out.coefficients[*k] += coef;
        g -= coef * it->second;
    }
    out.failure = "step limit reached";
    return out;
}

// ---------------------------------------------------------------------------

/// Expansion in {ch B(lambda)} over an alphabet by exact linear algebra,
/// one degree at a time.  nullopt when f is outside the rational span or
/// needs non-integral coefficients.
inline std::optional<std::map<Partition, BigInt>> expand_in_schur(const CharacterPoly& f, const GradedAlphabet& a) {
    std::map<int, CharacterPoly> by_degree;
    for (const auto& [m, c] : f.terms()) by_degree[CharacterPoly::degree(m)].add_term(m, c);
    std::map<Partition, BigInt> out;
    for (const auto& [d, part] : by_degree) {
        std::vector<Partition> basis;
        std::vector<CharacterPoly> chars;
        for (const auto& l : partitions_of(d)) {
            CharacterPoly ch = character(a, Shape::young(l));
            if (ch.is_zero()) continue;
            basis.push_back(l);
            chars.push_back(std::move(ch));
        }
        std::map<Monomial, int> row;
        for (const auto& ch : chars)
            for (const auto& [m, c] : ch.terms()) row.emplace(m, 0);
        for (const auto& [m, c] : part.terms()) row.emplace(m, 0);
        int r = 0;
        for (auto& [m, idx] : row) idx = r++;
        const int ncol = static_cast<int>(basis.size());
        std::vector<std::vector<BigRational>> mat(r, std::vector<BigRational>(ncol + 1));
        for (int j = 0; j < ncol; ++j)
            for (const auto& [m, c] : chars[j].terms()) mat[row[m]][j] = BigRational(c);
        for (const auto& [m, c] : part.terms()) mat[row[m]][ncol] = BigRational(c);
        // row reduction
        std::vector<int> pivot_col;
        int pr = 0;
        for (int j = 0; j < ncol && pr < r; ++j) {
            int piv = -1;
            for (int i = pr; i < r; ++i)
                if (mat[i][j] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            std::swap(mat[pr], mat[piv]);
            for (int i = 0; i < r; ++i) {
                if (i == pr || mat[i][j] == 0) continue;
                BigRational fct = mat[i][j] / mat[pr][j];
                for (int k = j; k <= ncol; ++k) mat[i][k] -= fct * mat[pr][k];
            }
            pivot_col.push_back(j);
            ++pr;
        }
        for (int i = pr; i < r; ++i)
            if (mat[i][ncol] != 0) return std::nullopt;
        for (int i = 0; i < pr; ++i) {
            BigRational v = mat[i][ncol] / mat[i][pivot_col[i]];
            if (denominator(v) != 1) return std::nullopt;
            if (v != 0) out[basis[pivot_col[i]]] = numerator(v);
        }
    }
    return out;
}

/// Rewrites a polynomial over one alphabet as one over an alphabet of the
/// same size, matching letters by position.
inline CharacterPoly relabel_by_position(const CharacterPoly& f, const GradedAlphabet& from, const GradedAlphabet& to) {
    if (from.size() != to.size()) throw InputError("alphabets differ in size");
    std::map<int, int> map;
    for (int i = 0; i < from.size(); ++i) map[from.key(Letter(i))] = to.key(Letter(i));
    return f.relabeled(map);
}

}  // namespace supercrystal
