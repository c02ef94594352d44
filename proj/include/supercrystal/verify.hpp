#pragma once

// Named verification suites.  Each is an exhaustive check at a fixed small
// scale with a wall-clock limit; run_suite reports pass/fail and timing.

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "supercrystal/characters.hpp"
#include "supercrystal/insertion.hpp"
#include "supercrystal/kite.hpp"
#include "supercrystal/matrix.hpp"
#include "supercrystal/poset.hpp"
#include "supercrystal/tableau.hpp"

namespace supercrystal {

struct SuiteResult {
    std::string name;
    bool ok = false;          ///< every check held
    bool in_time = false;     ///< finished under the limit
    double seconds = 0;
    double limit = 0;
    long cases = 0;
    std::string detail;       ///< summary, or the first failure
    bool pass() const { return ok && in_time; }
};

namespace detail {

/// Collects case counts and the first few failures of a suite.
class Tally {
public:
    void check(bool cond, const std::string& what) {
        ++cases_;
        if (cond) return;
        ++failed_;
        if (failures_.size() < 3) failures_.push_back(what);
    }
    void note(const std::string& s) { notes_.push_back(s); }
    bool ok() const { return failed_ == 0; }
    long cases() const { return cases_; }
    std::string summary() const {
        std::ostringstream os;
        if (failed_ == 0) {
            os << cases_ << " checks";
        } else {
            os << failed_ << " of " << cases_ << " checks failed";
            for (const auto& f : failures_) os << "; " << f;
        }
        for (const auto& n : notes_) os << "; " << n;
        return os.str();
    }

private:
    long cases_ = 0;
    long failed_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

inline std::vector<Word> all_words(const GradedAlphabet& a, int len) {
    std::vector<Word> out{{}};
    for (int k = 0; k < len; ++k) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (int p = 0; p < a.size(); ++p) {
                Word v = w;
                v.push_back(Letter(p));
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

inline std::string show(const std::map<KiteShape, int>& m) {
    std::string s = "{";
    for (const auto& [k, c] : m) s += (s.size() > 1 ? " " : "") + k.to_string() + "x" + std::to_string(c);
    return s + "}";
}

inline std::map<KiteShape, int> ribbon_counts(const std::vector<Composition>& cs, const GradedAlphabet& a) {
    std::map<KiteShape, int> m;
    for (const auto& c : cs) {
        KiteShape k{{}, c, 0};
        if (kite_fits(k, a)) ++m[k];
    }
    return m;
}

inline GradedAlphabet omega_alphabet(int m, int n) {
    auto ps = std::make_shared<PermutedSpec>();
    ps->base = MnSpec{m, n};
    ps->omega = true;
    return build_alphabet(ps);
}

// ---------------------------------------------------------------------------

inline Word fig2_highest(const GradedAlphabet& a) {
    return highest_tableau(Shape::ribbon(Composition{2, 1}), a).reading_word();
}

inline void suite_fig2(Tally& t) {
    GradedAlphabet a = parse_alphabet("half:2");
    Word h = fig2_highest(a);
    auto comps = decompose(a, enumerate_words(Shape::ribbon(Composition{2, 1}), a));
    t.check(comps.size() == 1, "B((2,1)) has " + std::to_string(comps.size()) + " components");
    if (comps.size() != 1) return;
    const auto& c = comps[0];
    t.check(c.size() == 8, "B((2,1)) has " + std::to_string(c.size()) + " elements");
    t.check(c.highest.size() == 1 && c.elements[c.highest[0]] == h, "highest element is not H_(2,1)");
    // f_{1/2}^{m1} f_1^{m2} f_{3/2}^{m3} H, applied right to left
    std::set<Word> reached;
    for (int mask = 0; mask < 8; ++mask) {
        std::optional<Word> w = h;
        for (int root = 2; root >= 0 && w; --root)
            if (mask >> root & 1) w = apply(a, Op::F, root, *w);
        t.check(w.has_value(), "f-string with mask " + std::to_string(mask) + " is null");
        if (w) reached.insert(*w);
    }
    t.check(reached == std::set<Word>(c.elements.begin(), c.elements.end()),
            "f-strings do not reach every element exactly once");
}

inline void suite_stability(Tally& t) {
    GradedAlphabet a = parse_alphabet("half:2");
    Word ref = fig2_highest(a);
    for (int r = 1; r <= 8; ++r)
        for (const auto& al : compositions_of(r)) {
            int c = corners(al);
            if (c != 3 && c != 4) continue;
            auto words = enumerate_words(Shape::ribbon(al), a);
            t.check(words.size() == 8, al.to_string() + " has " + std::to_string(words.size()) + " elements");
            if (words.empty()) continue;
            Word h = highest_tableau(Shape::ribbon(al), a).reading_word();
            auto m = match_components(a, h, a, ref, MatchOptions{false, false, kDefaultCap});
            t.check(m && m->size() == 8, al.to_string() + " is not isomorphic to B((2,1)) by f-strings");
        }
}

inline void suite_qr_connectivity(Tally& t) {
    GradedAlphabet a = parse_alphabet("half:3");
    long empty = 0;
    for (int r = 1; r <= 6; ++r)
        for (const auto& al : compositions_of(r)) {
            auto words = enumerate_words(Shape::ribbon(al), a);
            if (words.empty()) {
                ++empty;
                continue;
            }
            auto comps = decompose(a, words);
            Word h = highest_tableau(Shape::ribbon(al), a).reading_word();
            bool ok = comps.size() == 1 && comps[0].highest.size() == 1 && comps[0].elements[comps[0].highest[0]] == h;
            t.check(ok, al.to_string() + ": " + std::to_string(comps.size()) + " components");
        }
    t.note(std::to_string(empty) + " compositions empty over N^{<=3}");
}

inline void suite_insertion_equivalence(Tally& t) {
    GradedAlphabet a = parse_alphabet("half:2");
    for (int len = 0; len <= 5; ++len)
        for (const auto& w : all_words(a, len)) {
            auto [P, Q] = qr_insertion(a, w);
            t.check(validate(a, P).ok && equivalent(a, w, P.reading_word()),
                    "w = " + format_word(a, w) + " is not equivalent to qr_P(w)");
            for (const auto& r : a.roots())
                for (Op x : {Op::E, Op::F})
                    if (auto v = apply(a, x, r, w))
                        t.check(qr_Q(a, *v) == Q, "Q changes under an operator at w = " + format_word(a, w));
        }
    for (int r = 0; r <= 4; ++r)
        for (const auto& al : compositions_of(r))
            for (const auto& T : enumerate(Shape::ribbon(al), a))
                for (int p = 0; p < a.size(); ++p) {
                    Word tb = T.reading_word();
                    tb.push_back(Letter(p));
                    Tableau ins = qr_insert(a, Letter(p), T);
                    t.check(validate(a, ins).ok && equivalent(a, tb, ins.reading_word()),
                            "inserting " + a.display(Letter(p)) + " into " + format_word(a, T.reading_word()));
                }
}

inline void suite_syt_decomposition(Tally& t) {
    GradedAlphabet a = parse_alphabet("half:2");
    for (int r = 1; r <= 5; ++r)
        for (const auto& l : partitions_of(r)) {
            auto got = classify(a, decompose(a, enumerate_words(Shape::young(l), a)), 0);
            auto want = syt_branching(l, a);
            t.check(got == want, l.to_string() + ": " + show(got.counts) + " (" + std::to_string(got.unidentified) +
                                     " unidentified) vs " + show(want.counts));
        }
}

inline void suite_shuffle_tensor(Tally& t) {
    GradedAlphabet a = parse_alphabet("half:2");
    for (int r = 2; r <= 4; ++r)
        for (int s = 1; s < r; ++s)
            for (const auto& al : compositions_of(s))
                for (const auto& be : compositions_of(r - s)) {
                    auto u = enumerate_words(Shape::ribbon(al), a);
                    auto v = enumerate_words(Shape::ribbon(be), a);
                    std::vector<Word> tensor;
                    for (const auto& x : u)
                        for (const auto& y : v) {
                            Word w = x;
                            w.insert(w.end(), y.begin(), y.end());
                            tensor.push_back(std::move(w));
                        }
                    auto got = classify(a, decompose(a, tensor), 0);
                    auto want = ribbon_counts(shuffle_decompose(al, be), a);
                    t.check(got.unidentified == 0 && got.counts == want,
                            al.to_string() + " x " + be.to_string() + ": " + show(got.counts) + " vs " + show(want));
                }
}

inline void suite_rsk_gessel(Tally& t) {
    GradedAlphabet a = parse_alphabet("half:2");
    for (int k = 1; k <= 4; ++k) {
        // sigma -> (alpha(sigma), alpha(sigma^-1)) multiplicities
        std::map<std::pair<Composition, Composition>, long> perm;
        std::vector<int> s(k);
        std::iota(s.begin(), s.end(), 1);
        do {
            ++perm[{comp_from_subset(permutation_descents(s), k),
                    comp_from_subset(permutation_descents(inverse_permutation(s)), k)}];
        } while (std::next_permutation(s.begin(), s.end()));

        std::map<std::pair<Word, Word>, long> fibre;
        std::map<std::pair<Word, Word>, std::pair<Composition, Composition>> shape_of;
        bool valid = true;
        for (const auto& m : enumerate_matrices(a, k)) {
            auto [p, q] = rsk(a, m);
            valid = valid && validate(a, p).ok && validate(a, q).ok && weight_of(p.reading_word()) == row_weight(m) &&
                    weight_of(q.reading_word()) == column_weight(m);
            ++fibre[{p.reading_word(), q.reading_word()}];
            shape_of[{p.reading_word(), q.reading_word()}] = {p.shape().tail, q.shape().tail};
        }
        t.check(valid, "k = " + std::to_string(k) + ": an image pair is invalid or has the wrong weights");
        // every pair in B(alpha) x B(beta) is hit exactly #{sigma} times
        long expected_pairs = 0;
        for (const auto& [ab, cnt] : perm) {
            auto u = enumerate_words(Shape::ribbon(ab.first), a);
            auto v = enumerate_words(Shape::ribbon(ab.second), a);
            for (const auto& x : u)
                for (const auto& y : v) {
                    ++expected_pairs;
                    auto it = fibre.find({x, y});
                    long got = it == fibre.end() ? 0 : it->second;
                    t.check(got == cnt, "k = " + std::to_string(k) + ": fibre over (" + format_word(a, x) + ", " +
                                            format_word(a, y) + ") has " + std::to_string(got) + ", want " +
                                            std::to_string(cnt));
                }
        }
        t.check(static_cast<long>(fibre.size()) == expected_pairs,
                "k = " + std::to_string(k) + ": image has pairs outside the disjoint union");
        for (unsigned m1 = 0; m1 < (1u << (k - 1)); ++m1)
            for (unsigned m2 = 0; m2 < (1u << (k - 1)); ++m2) {
                std::set<int> S, S2;
                for (int i = 1; i < k; ++i) {
                    if (m1 >> (i - 1) & 1) S.insert(i);
                    if (m2 >> (i - 1) & 1) S2.insert(i);
                }
                auto g = gessel_count(a, S, S2, k);
                t.check(g.permutations == g.matrices,
                        "k = " + std::to_string(k) + ": " + std::to_string(g.permutations) + " permutations vs " +
                            std::to_string(g.matrices) + " matrices");
            }
    }
}

inline void suite_bicrystal(Tally& t) {
    GradedAlphabet a = parse_alphabet("half:1");
    for (int k = 0; k <= 3; ++k)
        for (const auto& m : enumerate_matrices(a, k))
            for (const auto& r : a.roots())
                for (const auto& r2 : a.roots())
                    for (Op x : {Op::E, Op::F})
                        for (Op y : {Op::E, Op::F}) {
                            std::optional<SuperMatrix> u2, v2;
                            if (auto u = matrix_apply(a, x, r, m)) u2 = matrix_apply_star(a, y, r2, *u);
                            if (auto v = matrix_apply_star(a, y, r2, m)) v2 = matrix_apply(a, x, r, *v);
                            t.check(u2 == v2, "operators do not commute on a matrix of sum " + std::to_string(k));
                        }
}

inline void suite_kite(Tally& t) {
    for (int m = 0; m <= 2; ++m) {
        GradedAlphabet a = build_alphabet(MixedTruncSpec{m, 4});
        for (int r = 1; r <= 6; ++r)
            for (const auto& k : kite_shapes_of(m, r)) {
                if (k.body.size() > 3 || k.tail.size() > 3) continue;
                auto words = enumerate_words(Shape::kite(k), a);
                if (words.empty()) continue;
                auto comps = decompose(a, words);
                Word h = highest_word(k, a);
                bool ok = comps.size() == 1 && comps[0].highest.size() == 1 && comps[0].elements[comps[0].highest[0]] == h;
                t.check(ok, "m = " + std::to_string(m) + ", " + k.to_string() + ": " + std::to_string(comps.size()) +
                                " components");
            }
    }
    for (int m = 1; m <= 2; ++m)
        for (int n2 : {2, 4}) {
            GradedAlphabet a = build_alphabet(MixedTruncSpec{m, n2});
            for (int r = 1; r <= 5; ++r)
                for (const auto& l : partitions_of(r)) {
                    auto got = classify(a, decompose(a, enumerate_words(Shape::young(l), a)), m);
                    auto want = kite_branching(l, m, a);
                    t.check(got == want, a.spec() + " " + l.to_string() + ": " + show(got.counts) + " vs " +
                                             show(want.counts));
                }
        }
    GradedAlphabet om = omega_alphabet(2, 1);
    GradedAlphabet mix = build_alphabet(MixedTruncSpec{1, 2});
    t.check(om.isomorphic_to(mix), "[2|1]^omega does not have the parity pattern of N(1)^{<=1}");
    for (int r = 1; r <= 5; ++r)
        for (const auto& l : partitions_of(r)) {
            auto got = classify(mix, decompose(mix, enumerate_words(Shape::young(l), om)), 1);
            auto want = kite_branching(l, 1, mix);
            t.check(got == want, "[2|1]^omega " + l.to_string() + ": " + show(got.counts) + " vs " + show(want.counts));
        }
}

/// (target, first, second, m); the truncation is N(m)^{<=3/2}.
inline std::vector<std::tuple<KiteShape, KiteShape, KiteShape, int>> structure_triples() {
    auto K = [](std::vector<int> b, std::vector<int> c, int m) { return KiteShape{Partition(b), Composition(c), m}; };
    return {
        {K({}, {2}, 0), K({}, {1}, 0), K({}, {1}, 0), 0},
        {K({}, {2, 1}, 0), K({}, {2}, 0), K({}, {1}, 0), 0},
        {K({}, {1, 2, 1}, 0), K({}, {1, 1}, 0), K({}, {1, 1}, 0), 0},
        {K({}, {3, 1}, 0), K({}, {2}, 0), K({}, {1, 1}, 0), 0},
        {K({}, {4}, 0), K({}, {1, 1}, 0), K({}, {1, 1}, 0), 0},
        {K({2}, {}, 1), K({1}, {}, 1), K({1}, {}, 1), 1},
        {K({1}, {2, 1}, 1), K({1}, {1}, 1), K({1}, {1}, 1), 1},
        {K({2}, {2}, 1), K({2}, {}, 1), K({2}, {}, 1), 1},
        {K({1}, {3}, 1), K({1}, {1}, 1), K({2}, {}, 1), 1},
        {K({2}, {1, 1}, 1), K({2}, {}, 1), K({1}, {1}, 1), 1},
    };
}

inline void suite_characters(Tally& t) {
    // factorization
    for (int p = 0; p <= 1; ++p)
        for (int q = 1; q <= 2; ++q)
            for (int r = 1; r <= 6; ++r)
                for (const auto& k : kite_shapes_of(p, r)) {
                    if (k.tail.empty() || k.body.size() > 3) continue;
                    int c = corners(k.tail);
                    if (c != 2 * q - 1 && c != 2 * q) continue;
                    auto f = factorization_check(k.body, k.tail, p, q);
                    t.check(f.ok(), "factorization p = " + std::to_string(p) + ", q = " + std::to_string(q) + ", " +
                                        k.to_string());
                }
    // basis characters: cancellation, restriction and the membership test
    for (int p = 0; p <= 1; ++p)
        for (int q = 1; q <= 2; ++q) {
            GradedAlphabet a = build_alphabet(MixedTruncSpec{p, 2 * q});
            for (int r = 1; r <= 4; ++r)
                for (const auto& k : kite_shapes_of(p, r)) {
                    if (!kite_fits(k, a)) continue;
                    CharacterPoly ch = kite_character(k, a);
                    auto mem = qsym_membership(ch, p, 2 * q);
                    t.check(mem.member, a.spec() + " " + k.to_string() + " rejected: " + mem.witness);
                    std::vector<std::pair<int, int>> pairs;
                    if (p >= 1) pairs.emplace_back(-2, 1);
                    for (int s = 1; s + 1 <= 2 * q; ++s) pairs.emplace_back(s, s + 1);
                    for (auto [rk, sk] : pairs) {
                        // nothing fills a nonempty shape once every letter is gone
                        CharacterPoly rest = a.size() > 2 ? kite_character(k, a.without({rk, sk})) : CharacterPoly{};
                        t.check(t_independent(ch, rk, sk) && t_constant_part(ch, rk, sk) == rest,
                                a.spec() + " " + k.to_string() + " at z[" + format_key(rk) + "] = -z[" +
                                    format_key(sk) + "]");
                    }
                }
        }
    // hook Schur polynomials are unchanged by the reordering
    GradedAlphabet om = omega_alphabet(2, 1);
    for (int r = 1; r <= 4; ++r)
        for (const auto& l : partitions_of(r))
            t.check(character(om, Shape::young(l)) == hook_schur(l, 2, 1),
                    "hs" + l.to_string() + " changes under the reordering");
    // structure constants
    for (const auto& [target, k1, k2, m] : structure_triples()) {
        GradedAlphabet a = build_alphabet(MixedTruncSpec{m, 3});
        auto ex = expand_in_basis(kite_character(k1, a) * kite_character(k2, a), m, a);
        auto tm = kite_tensor_multiplicity(target, k1, k2, m, a);
        BigInt coef = ex.ok && ex.coefficients.count(target) ? ex.coefficients.at(target) : BigInt(0);
        t.check(ex.ok && coef == tm.crystal && tm.crystal == tm.quadruples,
                target.to_string() + " in " + k1.to_string() + " x " + k2.to_string() + ": expansion " + coef.str() +
                    ", crystal " + std::to_string(tm.crystal) + ", quadruples " + std::to_string(tm.quadruples));
    }
}

struct SuiteDef {
    const char* name;
    double limit;
    void (*run)(Tally&);
};

inline const std::vector<SuiteDef>& suite_table() {
    static const std::vector<SuiteDef> table = {
        {"fig2", 1, suite_fig2},
        {"stability", 10, suite_stability},
        {"qr-connectivity", 60, suite_qr_connectivity},
        {"insertion-equivalence", 120, suite_insertion_equivalence},
        {"syt-decomposition", 60, suite_syt_decomposition},
        {"shuffle-tensor", 60, suite_shuffle_tensor},
        {"rsk-gessel", 300, suite_rsk_gessel},
        {"bicrystal", 30, suite_bicrystal},
        {"kite", 300, suite_kite},
        {"characters", 300, suite_characters},
    };
    return table;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : detail::suite_table()) out.push_back(s.name);
    return out;
}

/// Runs one suite.  Exceptions inside a suite count as failures.
inline SuiteResult run_suite(const std::string& name) {
    for (const auto& s : detail::suite_table()) {
        if (name != s.name) continue;
        SuiteResult r;
        r.name = s.name;
        r.limit = s.limit;
        detail::Tally t;
        auto start = std::chrono::steady_clock::now();
        try {
            s.run(t);
            r.ok = t.ok();
            r.detail = t.summary();
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.in_time = r.seconds < r.limit;
        r.cases = t.cases();
        return r;
    }
    throw InputError("unknown suite \"" + name + "\"");
}

}  // namespace supercrystal
