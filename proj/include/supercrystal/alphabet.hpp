#pragma once

// Z2-graded linearly ordered alphabets, weights, simple roots and the
// signed bilinear form.
//
// Letters are named by their doubled value ("key"): the display "3/2" has
// key 3, "-1" has key -2, "2" has key 4.  Inside an alphabet a letter is
// identified by its position, so the ordering is integer comparison and
// words are plain byte strings.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "supercrystal/error.hpp"

namespace supercrystal {

/// A letter of some alphabet, identified by its position in the order.
struct Letter {
    std::uint8_t pos = 0;

    constexpr Letter() = default;
    constexpr explicit Letter(int p) : pos(static_cast<std::uint8_t>(p)) {}

    constexpr auto operator<=>(const Letter&) const = default;
};

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int sign_of(Parity p) { return p == Parity::Even ? 1 : -1; }

// ---------------------------------------------------------------------------
// Letter display grammar: -?[0-9]+ for integers, [0-9]+/2 (odd numerator)
// for half-integers.

inline std::string format_key(int key) {
    if (key % 2 == 0) return std::to_string(key / 2);
    return std::to_string(key) + "/2";
}

inline int parse_key(std::string_view s) {
    auto fail = [&]() -> int { throw InputError("malformed letter '" + std::string(s) + "'"); };
    if (s.empty()) return fail();
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    bool neg = !num.empty() && num.front() == '-';
    std::string_view digits = neg ? num.substr(1) : num;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return fail();
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || value > 1000000) return fail();
    if (slash == std::string_view::npos) return neg ? -2 * value : 2 * value;
    if (neg || s.substr(slash) != "/2" || value % 2 == 0) return fail();
    return value;
}

// ---------------------------------------------------------------------------

/// Which construction produced an alphabet.  Permuted alphabets keep the
/// family of their base for root labelling purposes only.
enum class AlphabetFamily { Standard, Half, Mixed, Permuted, Custom };

class GradedAlphabet;

/// A simple root eps_lo - eps_hi for a successive pair lo < hi.
struct SimpleRoot {
    int index = 0;  ///< position of lo; hi is index + 1
    Letter lo;
    Letter hi;
    bool isotropic = false;
    int ell = 1;    ///< (-1)^{|lo|}

    auto operator<=>(const SimpleRoot&) const = default;
};

class GradedAlphabet {
public:
    GradedAlphabet(std::vector<int> keys, std::vector<Parity> parities, AlphabetFamily family,
                   std::string spec)
        : keys_(std::move(keys)), parities_(std::move(parities)), family_(family), spec_(std::move(spec)) {
        if (keys_.empty()) throw InputError("empty alphabet");
        if (keys_.size() > 255) throw InputError("alphabet too large (max 255 letters)");
        if (keys_.size() != parities_.size()) throw InputError("every letter needs a parity");
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            if (!index_.emplace(keys_[i], static_cast<int>(i)).second)
                throw InputError("duplicate letter " + format_key(keys_[i]));
        }
        for (int i = 0; i + 1 < size(); ++i) {
            SimpleRoot r;
            r.index = i;
            r.lo = Letter(i);
            r.hi = Letter(i + 1);
            r.isotropic = parities_[i] != parities_[i + 1];
            r.ell = sign_of(parities_[i]);
            roots_.push_back(r);
        }
    }

    int size() const { return static_cast<int>(keys_.size()); }
    Parity parity(Letter a) const { return parities_[a.pos]; }
    bool is_even(Letter a) const { return parities_[a.pos] == Parity::Even; }
    int key(Letter a) const { return keys_[a.pos]; }
    std::string display(Letter a) const { return format_key(keys_[a.pos]); }
    AlphabetFamily family() const { return family_; }
    const std::string& spec() const { return spec_; }
    const std::vector<int>& keys() const { return keys_; }
    const std::vector<Parity>& parities() const { return parities_; }

    Letter letter(int pos) const { return Letter(pos); }

    std::optional<Letter> find(int key) const {
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return Letter(it->second);
    }

    Letter parse_letter(std::string_view s) const {
        int k = parse_key(s);
        auto l = find(k);
        if (!l) throw InputError("letter " + std::string(s) + " is not in alphabet " + spec_);
        return *l;
    }

    const std::vector<SimpleRoot>& roots() const { return roots_; }

    /// Root label: the index convention of the half-integer alphabets
    /// (alpha_r = eps_r - eps_{r+1/2}, alpha_0 = eps_{-1} - eps_{1/2},
    /// alpha_i = eps_{i-1} - eps_i for negative i); "lo,hi" otherwise.
    std::string root_label(const SimpleRoot& r) const {
        int lo = key(r.lo), hi = key(r.hi);
        if (family_ == AlphabetFamily::Half || family_ == AlphabetFamily::Mixed) {
            if (lo > 0) return format_key(lo);
            if (lo == -2 && hi == 1) return "0";
            if (hi < 0) return format_key(hi);
        }
        return format_key(lo) + "," + format_key(hi);
    }

    /// Same ordered parity pattern: the two alphabets are isomorphic and a
    /// word over one is a word over the other, position by position.
    bool isomorphic_to(const GradedAlphabet& other) const { return parities_ == other.parities_; }

    bool operator==(const GradedAlphabet& other) const {
        return keys_ == other.keys_ && parities_ == other.parities_;
    }

    /// This alphabet with the given letters (by key) removed; order and
    /// parities of the rest are kept.
    GradedAlphabet without(const std::vector<int>& removed_keys) const {
        std::vector<int> k;
        std::vector<Parity> p;
        for (int i = 0; i < size(); ++i) {
            if (std::find(removed_keys.begin(), removed_keys.end(), keys_[i]) != removed_keys.end()) continue;
            k.push_back(keys_[i]);
            p.push_back(parities_[i]);
        }
        std::string s = "custom:";
        for (std::size_t i = 0; i < k.size(); ++i)
            s += (i ? "," : "") + format_key(k[i]) + (p[i] == Parity::Even ? "e" : "o");
        return GradedAlphabet(std::move(k), std::move(p), AlphabetFamily::Custom, s);
    }

private:
    std::vector<int> keys_;
    std::vector<Parity> parities_;
    AlphabetFamily family_;
    std::string spec_;
    std::map<int, int> index_;
    std::vector<SimpleRoot> roots_;
};

using AlphabetPtr = std::shared_ptr<const GradedAlphabet>;

// ---------------------------------------------------------------------------
// Alphabet specifications.  Truncation bounds are half-integers, stored
// doubled (n2 = 2n).

struct MnSpec {
    int m = 0, n = 0;
};
struct HalfTruncSpec {
    int n2 = 1;
};
struct MixedTruncSpec {
    int m = 0, n2 = 1;
};
struct CustomSpec {
    std::vector<std::pair<std::string, Parity>> letters;
};
struct PermutedSpec;

using AlphabetSpec = std::variant<MnSpec, HalfTruncSpec, MixedTruncSpec, CustomSpec, std::shared_ptr<PermutedSpec>>;

/// Base alphabet reordered: `order` lists the letters (by key) in the new
/// order, i.e. order[i] = sigma(b_i) for the base letters b_1 < b_2 < ...
/// An empty order with `omega` set selects the maximal-odd-root shuffle.
struct PermutedSpec {
    AlphabetSpec base;
    std::vector<int> order;
    bool omega = false;
};

namespace detail {

inline std::string mn_name(int m, int n) { return "mn:" + std::to_string(m) + "," + std::to_string(n); }

inline std::vector<int> omega_order(int m, int n) {
    if (m < n) throw InputError("omega shuffle needs m >= n");
    std::vector<int> order;
    for (int i = m; i > n; --i) order.push_back(-2 * i);
    for (int j = 1; j <= n; ++j) {
        order.push_back(2 * j);
        order.push_back(-2 * (n - j + 1));
    }
    return order;
}

}  // namespace detail

inline GradedAlphabet build_alphabet(const AlphabetSpec& spec);

inline GradedAlphabet build_permuted(const PermutedSpec& ps) {
    GradedAlphabet base = build_alphabet(ps.base);
    std::vector<int> order = ps.order;
    if (ps.omega) {
        const auto* mn = std::get_if<MnSpec>(&ps.base);
        if (!mn) throw InputError("omega is defined only for mn alphabets");
        order = detail::omega_order(mn->m, mn->n);
    }
    if (static_cast<int>(order.size()) != base.size()) throw InputError("sigma is not a permutation of the base letters");
    std::vector<int> sorted_new = order, sorted_base = base.keys();
    std::sort(sorted_new.begin(), sorted_new.end());
    std::sort(sorted_base.begin(), sorted_base.end());
    if (sorted_new != sorted_base) throw InputError("sigma is not a permutation of the base letters");
    std::vector<Parity> par;
    for (int k : order) par.push_back(base.parity(*base.find(k)));
    std::string name = "perm:" + base.spec() + ":";
    if (ps.omega) {
        name += "omega";
    } else {
        for (std::size_t i = 0; i < order.size(); ++i) name += (i ? "," : "") + format_key(order[i]);
    }
    return GradedAlphabet(std::move(order), std::move(par), AlphabetFamily::Permuted, name);
}

inline GradedAlphabet build_alphabet(const AlphabetSpec& spec) {
    return std::visit(
        [](const auto& s) -> GradedAlphabet {
            using T = std::decay_t<decltype(s)>;
            std::vector<int> keys;
            std::vector<Parity> par;
            if constexpr (std::is_same_v<T, MnSpec>) {
                if (s.m < 0 || s.n < 0) throw InputError("negative alphabet size");
                for (int i = s.m; i >= 1; --i) {
                    keys.push_back(-2 * i);
                    par.push_back(Parity::Even);
                }
                for (int j = 1; j <= s.n; ++j) {
                    keys.push_back(2 * j);
                    par.push_back(Parity::Odd);
                }
                return GradedAlphabet(keys, par, AlphabetFamily::Standard, detail::mn_name(s.m, s.n));
            } else if constexpr (std::is_same_v<T, HalfTruncSpec> || std::is_same_v<T, MixedTruncSpec>) {
                int m = 0;
                if constexpr (std::is_same_v<T, MixedTruncSpec>) m = s.m;
                if (m < 0) throw InputError("negative alphabet size");
                for (int i = m; i >= 1; --i) {
                    keys.push_back(-2 * i);
                    par.push_back(Parity::Even);
                }
                for (int k = 1; k <= s.n2; ++k) {
                    keys.push_back(k);
                    par.push_back(k % 2 == 0 ? Parity::Even : Parity::Odd);
                }
                if constexpr (std::is_same_v<T, HalfTruncSpec>) {
                    return GradedAlphabet(keys, par, AlphabetFamily::Half, "half:" + format_key(s.n2));
                } else {
                    return GradedAlphabet(keys, par, AlphabetFamily::Mixed,
                                          "mixed:" + std::to_string(s.m) + "," + format_key(s.n2));
                }
            } else if constexpr (std::is_same_v<T, CustomSpec>) {
                std::string name = "custom:";
                bool first = true;
                for (const auto& [disp, p] : s.letters) {
                    keys.push_back(parse_key(disp));
                    par.push_back(p);
                    name += (first ? "" : ",") + disp + (p == Parity::Even ? "e" : "o");
                    first = false;
                }
                return GradedAlphabet(keys, par, AlphabetFamily::Custom, name);
            } else {
                if (!s) throw InputError("null permuted spec");
                return build_permuted(*s);
            }
        },
        spec);
}

// ---------------------------------------------------------------------------
// CLI spec strings: mn:4,2  half:2  half:3/2  mixed:1,2  perm:mn:4,2:omega
// perm:mn:2,1:-2,1,-1  custom:-1e,1/2o,1e

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto p = s.find(sep, start);
        out.emplace_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) break;
        start = p + 1;
    }
    return out;
}

inline int parse_count(const std::string& s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) throw InputError("bad count '" + s + "'");
    return v;
}

inline int parse_half_bound(const std::string& s) {
    int k = parse_key(s);
    if (k <= 0) throw InputError("truncation bound must be positive: " + s);
    return k;
}

}  // namespace detail

inline AlphabetSpec parse_alphabet_spec(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw InputError("alphabet spec needs a kind prefix: " + std::string(text));
    std::string kind(text.substr(0, colon));
    std::string rest(text.substr(colon + 1));
    if (kind == "mn") {
        auto parts = detail::split(rest, ',');
        if (parts.size() != 2) throw InputError("mn spec is mn:m,n");
        return MnSpec{detail::parse_count(parts[0]), detail::parse_count(parts[1])};
    }
    if (kind == "half") return HalfTruncSpec{detail::parse_half_bound(rest)};
    if (kind == "mixed") {
        auto parts = detail::split(rest, ',');
        if (parts.size() != 2) throw InputError("mixed spec is mixed:m,n");
        return MixedTruncSpec{detail::parse_count(parts[0]), detail::parse_half_bound(parts[1])};
    }
    if (kind == "custom") {
        CustomSpec cs;
        for (const auto& item : detail::split(rest, ',')) {
            if (item.size() < 2 || (item.back() != 'e' && item.back() != 'o'))
                throw InputError("custom letters are written <display>e or <display>o");
            cs.letters.emplace_back(item.substr(0, item.size() - 1), item.back() == 'e' ? Parity::Even : Parity::Odd);
        }
        return cs;
    }
    if (kind == "perm") {
        auto last = rest.rfind(':');
        if (last == std::string::npos) throw InputError("perm spec is perm:<base>:<order|omega>");
        auto ps = std::make_shared<PermutedSpec>();
        ps->base = parse_alphabet_spec(rest.substr(0, last));
        std::string tail = rest.substr(last + 1);
        if (tail == "omega") {
            ps->omega = true;
        } else {
            for (const auto& item : detail::split(tail, ',')) ps->order.push_back(parse_key(item));
        }
        return ps;
    }
    throw InputError("unknown alphabet kind '" + kind + "'");
}

inline GradedAlphabet parse_alphabet(std::string_view text) { return build_alphabet(parse_alphabet_spec(text)); }

inline std::vector<SimpleRoot> simple_roots(const GradedAlphabet& a) { return a.roots(); }

// ---------------------------------------------------------------------------

/// Integer combination of the eps_b, zero coefficients never stored.
class Weight {
public:
    Weight() = default;

    static Weight unit(Letter a) {
        Weight w;
        w.coeffs_[a] = 1;
        return w;
    }

    long operator[](Letter a) const {
        auto it = coeffs_.find(a);
        return it == coeffs_.end() ? 0 : it->second;
    }

    void add(Letter a, long c) {
        if (c == 0) return;
        auto& v = coeffs_[a];
        v += c;
        if (v == 0) coeffs_.erase(a);
    }

    Weight& operator+=(const Weight& o) {
        for (const auto& [l, c] : o.coeffs_) add(l, c);
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (const auto& [l, c] : o.coeffs_) add(l, -c);
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Letter, long>& coeffs() const { return coeffs_; }

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight& o) const { return coeffs_ <=> o.coeffs_; }

    std::string to_string(const GradedAlphabet& a) const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [l, c] : coeffs_) {
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            long ac = c < 0 ? -c : c;
            if (ac != 1) os << ac << "*";
            os << "e[" << a.display(l) << "]";
            first = false;
        }
        return os.str();
    }

private:
    std::map<Letter, long> coeffs_;
};

/// (w, eps_lo - eps_hi) under (eps_a, eps_b) = (-1)^{|a|} delta_ab.
inline long pairing(const GradedAlphabet& a, const Weight& w, const SimpleRoot& r) {
    if (r.hi.pos >= a.size()) throw InputError("root does not belong to alphabet");
    for (const auto& [l, c] : w.coeffs())
        if (l.pos >= a.size()) throw InputError("weight letter outside alphabet");
    return w[r.lo] * sign_of(a.parity(r.lo)) - w[r.hi] * sign_of(a.parity(r.hi));
}

/// x >= y iff x - y is a nonnegative combination of simple roots: every
/// prefix sum of the difference (in alphabet order) is >= 0 and the total
/// is 0.
inline bool weight_order_geq(const Weight& x, const Weight& y, const GradedAlphabet& a) {
    Weight d = x - y;
    long prefix = 0;
    for (int i = 0; i < a.size(); ++i) {
        prefix += d[Letter(i)];
        if (prefix < 0) return false;
    }
    return prefix == 0;
}

}  // namespace supercrystal
