#pragma once

// Partitions, compositions (ribbon diagrams) and kite shapes, and the cell
// geometry shared by every tableau species.

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "supercrystal/error.hpp"

namespace supercrystal {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw InputError("partition parts must be positive");
            if (i && parts_[i] > parts_[i - 1]) throw InputError("partition parts must weakly decrease");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }
    /// lambda_i with 1-based i; 0 beyond the length.
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    Partition transpose() const {
        std::vector<int> t;
        for (int j = 1; j <= part(1); ++j) {
            int c = 0;
            for (int p : parts_) c += p >= j;
            t.push_back(c);
        }
        return Partition(t);
    }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    /// (m,n)-hook condition lambda_{m+1} <= n.
    bool is_hook(int m, int n) const { return part(m + 1) <= n; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions of r, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int r) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, r, r);
    return out;
}

/// All partitions contained in lambda.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i, int cap) -> void {
        out.emplace_back(cur);
        if (i > lambda.length()) return;
        for (int p = 1; p <= std::min(cap, lambda.part(i)); ++p) {
            cur.push_back(p);
            self(self, i + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 1, lambda.part(1));
    std::sort(out.begin(), out.end());
    return out;
}

class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0) throw InputError("composition parts must be positive");
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    Composition concat(const Composition& o) const {
        std::vector<int> p = parts_;
        p.insert(p.end(), o.parts_.begin(), o.parts_.end());
        return Composition(p);
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

/// alpha(S) for S a subset of {1..r-1}.
inline Composition comp_from_subset(const std::set<int>& s, int r) {
    if (r == 0) {
        if (!s.empty()) throw InputError("descent set of an empty sequence must be empty");
        return Composition{};
    }
    std::vector<int> parts;
    int prev = 0;
    for (int i : s) {
        if (i <= prev || i >= r) throw InputError("subset must lie in {1..r-1}");
        parts.push_back(i - prev);
        prev = i;
    }
    parts.push_back(r - prev);
    return Composition(parts);
}

/// S(alpha): the proper partial sums.
inline std::set<int> subset_from_comp(const Composition& a) {
    std::set<int> s;
    int acc = 0;
    for (int i = 0; i + 1 < a.length(); ++i) s.insert(acc += a.parts()[i]);
    return s;
}

/// All compositions of r (2^{r-1} of them), ordered by their subset.
inline std::vector<Composition> compositions_of(int r) {
    std::vector<Composition> out;
    if (r == 0) return {Composition{}};
    for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
        std::set<int> s;
        for (int i = 1; i < r; ++i)
            if (mask & (1u << (i - 1))) s.insert(i);
        out.push_back(comp_from_subset(s, r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Leftmost and rightmost node of each row with at least two nodes, plus
/// the last node of the ribbon (counted once).
inline int corners(const Composition& a) {
    if (a.empty()) return 0;
    int c = 0;
    for (int p : a.parts()) c += p >= 2 ? 2 : 0;
    if (a.parts().back() == 1) c += 1;
    return c;
}

/// Body partition with at most m rows, ribbon tail hanging from the first
/// column of row m.
struct KiteShape {
    Partition body;
    Composition tail;
    int m = 0;

    void validate() const {
        if (body.length() > m) throw InputError("kite body " + body.to_string() + " has more than m rows");
        if (!tail.empty() && body.length() != m)
            throw InputError("kite tail needs a body with exactly m = " + std::to_string(m) + " rows");
    }
    int size() const { return body.size() + tail.size(); }
    std::string to_string() const { return "[" + body.to_string() + "," + tail.to_string() + "]"; }
    auto operator<=>(const KiteShape&) const = default;
};

/// All kite shapes with m rows of body and total size r.
inline std::vector<KiteShape> kite_shapes_of(int m, int r) {
    std::vector<KiteShape> out;
    for (int b = 0; b <= r; ++b) {
        for (const auto& lam : partitions_of(b)) {
            if (lam.length() > m) continue;
            if (r - b > 0 && lam.length() != m) continue;
            for (const auto& a : compositions_of(r - b)) out.push_back({lam, a, m});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

enum class TableauKind { QuasiRibbon, Semistandard, Kite };

inline std::string kind_name(TableauKind k) {
    switch (k) {
        case TableauKind::QuasiRibbon: return "qr";
        case TableauKind::Semistandard: return "ssyt";
        case TableauKind::Kite: return "kite";
    }
    return "?";
}

/// Shape of a tableau of any species.  A quasi-ribbon shape keeps its
/// composition in `tail` with an empty body; a Young shape keeps its
/// partition in `body`.
struct Shape {
    TableauKind kind = TableauKind::QuasiRibbon;
    Partition body;
    Composition tail;
    int m = 0;

    static Shape ribbon(Composition a) { return {TableauKind::QuasiRibbon, {}, std::move(a), 0}; }
    static Shape young(Partition l) { return {TableauKind::Semistandard, std::move(l), {}, 0}; }
    static Shape kite(const KiteShape& k) {
        k.validate();
        return {TableauKind::Kite, k.body, k.tail, k.m};
    }

    KiteShape as_kite() const { return {body, tail, m}; }
    int size() const { return body.size() + tail.size(); }
    std::string to_string() const {
        switch (kind) {
            case TableauKind::QuasiRibbon: return tail.to_string();
            case TableauKind::Semistandard: return body.to_string();
            case TableauKind::Kite: return as_kite().to_string();
        }
        return "";
    }
    auto operator<=>(const Shape&) const = default;
};

/// Cell geometry of a shape.  Cells are listed in row-major order (rows top
/// to bottom, each left to right), which for a ribbon is the northwest to
/// southeast enumeration.  Rows and columns are 1-based.
struct Diagram {
    std::vector<std::pair<int, int>> cells;
    std::vector<int> right;    ///< cell index of the right neighbour or -1
    std::vector<int> below;    ///< cell index of the neighbour below or -1
    std::vector<int> reading;  ///< reading[k] = cell read k-th
    int joint = -1;            ///< kites: first tail cell
    int body_cells = 0;        ///< kites: cells [0, body_cells) form the body

    std::size_t size() const { return cells.size(); }

    int find(int row, int col) const {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i] == std::make_pair(row, col)) return static_cast<int>(i);
        return -1;
    }

    static Diagram of(const Shape& s) {
        Diagram d;
        int row = 0;
        for (int i = 1; i <= s.body.length(); ++i) {
            ++row;
            for (int j = 1; j <= s.body.part(i); ++j) d.cells.emplace_back(row, j);
        }
        d.body_cells = static_cast<int>(d.cells.size());
        if (s.kind == TableauKind::Kite && s.m > 0) row = s.m;
        int col = 1;
        for (int i = 0; i < s.tail.length(); ++i) {
            ++row;
            if (i == 0) d.joint = static_cast<int>(d.cells.size());
            for (int j = 0; j < s.tail.parts()[i]; ++j) d.cells.emplace_back(row, col + j);
            col += s.tail.parts()[i] - 1;
        }
        if (s.kind != TableauKind::Kite) d.joint = -1;
        const int n = static_cast<int>(d.cells.size());
        d.right.assign(n, -1);
        d.below.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            auto [r, c] = d.cells[i];
            d.right[i] = d.find(r, c + 1);
            d.below[i] = d.find(r + 1, c);
        }
        // rows top to bottom, each right to left
        int start = 0;
        while (start < n) {
            int end = start;
            while (end < n && d.cells[end].first == d.cells[start].first) ++end;
            for (int k = end - 1; k >= start; --k) d.reading.push_back(k);
            start = end;
        }
        return d;
    }
};

}  // namespace supercrystal
