#pragma once

// Slow reference implementations used to cross-check the library.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/poset.hpp"

namespace oracle {

using Cells = std::set<std::pair<int, int>>;  // (row, col)

inline Cells cells_of(const kohnert::Diagram& d) {
    Cells s;
    for (const auto& c : d) s.insert({c.row, c.col});
    return s;
}

inline kohnert::Diagram diagram_of(const Cells& s) {
    std::vector<kohnert::Cell> v;
    for (auto [r, c] : s) v.push_back({r, c});
    return kohnert::Diagram(v);
}

// Straight from the definition: rightmost cell of the row falls to the first
// free position below it.
inline std::optional<Cells> move(const Cells& d, int r) {
    int col = -1;
    for (auto [rr, c] : d)
        if (rr == r) col = std::max(col, c);
    if (col < 0) return std::nullopt;
    for (int y = r - 1; y >= 1; --y) {
        if (!d.count({y, col})) {
            Cells out = d;
            out.erase({r, col});
            out.insert({y, col});
            return out;
        }
    }
    return std::nullopt;
}

inline std::set<Cells> closure(const Cells& d) {
    std::set<Cells> seen{d};
    std::vector<Cells> stack{d};
    while (!stack.empty()) {
        Cells cur = stack.back();
        stack.pop_back();
        int top = 0;
        for (auto [r, c] : cur) top = std::max(top, r);
        for (int r = 1; r <= top; ++r)
            if (auto n = move(cur, r); n && seen.insert(*n).second) stack.push_back(*n);
    }
    return seen;
}

// Does `lower` arise from `upper` by a nonempty sequence of moves.
inline bool reachable(const Cells& upper, const Cells& lower) {
    if (upper == lower) return false;
    return closure(upper).count(lower) > 0;
}

using Facet = std::vector<int>;

inline Facet intersect(const Facet& a, const Facet& b) {
    Facet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool subset(const Facet& a, const Facet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// Definition of a shelling: each earlier intersection F_i ∩ F_k sits inside some
// F_j ∩ F_k of size |F_k| - 1 with j < k.
inline bool is_shelling(const std::vector<Facet>& f, const std::vector<int>& order) {
    for (std::size_t k = 1; k < order.size(); ++k) {
        const Facet& fk = f[order[k]];
        for (std::size_t i = 0; i < k; ++i) {
            const Facet ik = intersect(f[order[i]], fk);
            bool ok = false;
            for (std::size_t j = 0; j < k && !ok; ++j) {
                const Facet jk = intersect(f[order[j]], fk);
                ok = jk.size() + 1 == fk.size() && subset(ik, jk);
            }
            if (!ok) return false;
        }
    }
    return true;
}

// Tries every order; only for a handful of facets.
inline bool shellable_by_permutation(const std::vector<Facet>& f) {
    std::vector<int> order(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) order[i] = static_cast<int>(i);
    do {
        if (is_shelling(f, order)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

// Maximal chains from x to y, each as a list of elements bottom to top.
inline std::vector<std::vector<kohnert::Id>> chains_between(const kohnert::Poset& p, kohnert::Id x, kohnert::Id y) {
    std::vector<std::vector<kohnert::Id>> out;
    std::vector<kohnert::Id> cur{x};
    auto rec = [&](auto&& self, kohnert::Id z) -> void {
        if (z == y) {
            out.push_back(cur);
            return;
        }
        for (kohnert::Id w : p.upper_covers(z)) {
            if (!p.leq(w, y)) continue;
            cur.push_back(w);
            self(self, w);
            cur.pop_back();
        }
    };
    rec(rec, x);
    return out;
}

// Diagrams with at most max_cells cells inside rows x cols.
inline std::vector<kohnert::Diagram> box(int rows, int cols, int max_cells) {
    std::vector<kohnert::Diagram> out;
    const int spots = rows * cols;
    for (unsigned mask = 0; mask < (1U << spots); ++mask) {
        if (__builtin_popcount(mask) > max_cells) continue;
        std::vector<kohnert::Cell> v;
        for (int b = 0; b < spots; ++b)
            if (mask >> b & 1U) v.push_back({b / cols + 1, b % cols + 1});
        out.emplace_back(v);
    }
    return out;
}

}  // namespace oracle
