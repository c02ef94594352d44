#pragma once

// Exact multivariate polynomials with integer coefficients.  Variables are
// named by letter keys (doubled values), so polynomials built over
// different alphabets containing the same letters compare directly.

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "supercrystal/alphabet.hpp"
#include "supercrystal/error.hpp"

namespace supercrystal {

using BigInt = boost::multiprecision::cpp_int;

/// key -> exponent, exponents positive.
using Monomial = std::map<int, int>;

class CharacterPoly {
public:
    CharacterPoly() = default;

    static CharacterPoly constant(const BigInt& c) {
        CharacterPoly p;
        p.add_term({}, c);
        return p;
    }
    static CharacterPoly variable(int key, int exp = 1) {
        CharacterPoly p;
        Monomial m;
        if (exp > 0) m[key] = exp;
        p.add_term(m, 1);
        return p;
    }

    void add_term(const Monomial& m, const BigInt& c) {
        if (c == 0) return;
        auto& v = terms_[m];
        v += c;
        if (v == 0) terms_.erase(m);
    }

    const std::map<Monomial, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    BigInt coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    CharacterPoly& operator+=(const CharacterPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    CharacterPoly& operator-=(const CharacterPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend CharacterPoly operator+(CharacterPoly a, const CharacterPoly& b) { return a += b; }
    friend CharacterPoly operator-(CharacterPoly a, const CharacterPoly& b) { return a -= b; }

    friend CharacterPoly operator*(const CharacterPoly& a, const CharacterPoly& b) {
        CharacterPoly out;
        for (const auto& [m1, c1] : a.terms_)
            for (const auto& [m2, c2] : b.terms_) {
                Monomial m = m1;
                for (const auto& [k, e] : m2) m[k] += e;
                out.add_term(m, c1 * c2);
            }
        return out;
    }
    friend CharacterPoly operator*(const BigInt& s, const CharacterPoly& a) {
        CharacterPoly out;
        if (s == 0) return out;
        for (const auto& [m, c] : a.terms_) out.terms_[m] = c * s;
        return out;
    }

    /// Exchanges two variables.
    CharacterPoly swapped(int k1, int k2) const {
        CharacterPoly out;
        for (const auto& [m, c] : terms_) {
            Monomial n;
            for (const auto& [k, e] : m) n[k == k1 ? k2 : k == k2 ? k1 : k] = e;
            out.add_term(n, c);
        }
        return out;
    }

    /// Renames variables through `map` (keys absent from the map stay).
    CharacterPoly relabeled(const std::map<int, int>& map) const {
        CharacterPoly out;
        for (const auto& [m, c] : terms_) {
            Monomial n;
            for (const auto& [k, e] : m) {
                auto it = map.find(k);
                n[it == map.end() ? k : it->second] += e;
            }
            out.add_term(n, c);
        }
        return out;
    }

    bool operator==(const CharacterPoly&) const = default;

    /// `3*z[1/2]^2*z[-1] + z[1] - 2`; terms in descending degree, then by
    /// monomial order; "0" for the zero polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, BigInt>> v(terms_.begin(), terms_.end());
        std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return degree(x.first) > degree(y.first); });
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : v) {
            BigInt ac = c < 0 ? BigInt(-c) : c;
            if (first) os << (c < 0 ? "-" : "");
            else os << (c < 0 ? " - " : " + ");
            first = false;
            bool need_star = false;
            if (ac != 1 || m.empty()) {
                os << ac;
                need_star = true;
            }
            for (const auto& [k, e] : m) {
                if (need_star) os << "*";
                os << "z[" << format_key(k) << "]";
                if (e != 1) os << "^" << e;
                need_star = true;
            }
        }
        return os.str();
    }

    static int degree(const Monomial& m) {
        int d = 0;
        for (const auto& [k, e] : m) d += e;
        return d;
    }

private:
    std::map<Monomial, BigInt> terms_;
};

inline std::string monomial_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (const auto& [k, e] : m) {
        if (!s.empty()) s += "*";
        s += "z[" + format_key(k) + "]";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

/// Parses the text format written by to_string.  Whitespace is free.
inline CharacterPoly parse_poly(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) -> CharacterPoly {
        throw InputError("bad polynomial at offset " + std::to_string(i) + ": " + why);
    };
    auto read_int = [&]() -> BigInt {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("expected a number");
        BigInt v(s.substr(i, j - i));
        i = j;
        return v;
    };
    CharacterPoly out;
    if (s == "0") return out;
    if (s.empty()) return fail("empty");
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            return fail("expected + or -");
        }
        first = false;
        BigInt coef = 1;
        Monomial m;
        bool have_factor = false;
        while (true) {
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coef *= read_int();
            } else if (s.compare(i, 2, "z[") == 0) {
                i += 2;
                auto close = s.find(']', i);
                if (close == std::string::npos) return fail("unclosed z[");
                int key = parse_key(s.substr(i, close - i));
                i = close + 1;
                int e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    BigInt ev = read_int();
                    if (ev > 1000) return fail("exponent too large");
                    e = static_cast<int>(ev);
                }
                if (e > 0) m[key] += e;
            } else {
                return fail("expected a coefficient or z[...]");
            }
            have_factor = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!have_factor) return fail("empty term");
        out.add_term(m, sign * coef);
    }
    return out;
}

}  // namespace supercrystal
