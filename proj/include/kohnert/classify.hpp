#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/shellability.hpp"

namespace kohnert {

enum class PatternKind {
    strucasc,
    strucblock,
    comp_a_i,
    comp_a_ii,
    comp_b_i,
    comp_b_ii,
    comp_b_iii,
    comp_b_iv,
    pure_1,
    pure_2,
    pure_3,
    mf_1,
    mf_2,
    mf_3,
    mf_4,
    mf_5,
};

inline std::string_view to_string(PatternKind k) {
    switch (k) {
        case PatternKind::strucasc: return "strucasc";
        case PatternKind::strucblock: return "strucblock";
        case PatternKind::comp_a_i: return "comp-a-i";
        case PatternKind::comp_a_ii: return "comp-a-ii";
        case PatternKind::comp_b_i: return "comp-b-i";
        case PatternKind::comp_b_ii: return "comp-b-ii";
        case PatternKind::comp_b_iii: return "comp-b-iii";
        case PatternKind::comp_b_iv: return "comp-b-iv";
        case PatternKind::pure_1: return "pure-1";
        case PatternKind::pure_2: return "pure-2";
        case PatternKind::pure_3: return "pure-3";
        case PatternKind::mf_1: return "mf-1";
        case PatternKind::mf_2: return "mf-2";
        case PatternKind::mf_3: return "mf-3";
        case PatternKind::mf_4: return "mf-4";
        case PatternKind::mf_5: return "mf-5";
    }
    return "unknown";
}

inline std::size_t pattern_arity(PatternKind k) {
    switch (k) {
        case PatternKind::comp_a_i:
        case PatternKind::comp_a_ii:
        case PatternKind::pure_1:
        case PatternKind::pure_2:
        case PatternKind::pure_3:
        case PatternKind::mf_1: return 3;
        case PatternKind::strucasc: return 3;    // r, c1, c2
        case PatternKind::strucblock: return 4;  // r, r*, c, c*
        default: return 4;
    }
}

// Inequalities of the composition patterns, on the values at the chosen
// positions (in increasing position order).
inline bool composition_pattern_holds(PatternKind k, const std::vector<int>& v) {
    if (v.size() != pattern_arity(k)) return false;
    switch (k) {
        case PatternKind::comp_a_i:
        case PatternKind::pure_1:
        case PatternKind::mf_1: return v[0] < v[1] && v[1] < v[2];
        case PatternKind::comp_a_ii: return v[0] <= v[2] - 3 && v[2] - 3 <= v[1] - 3;
        case PatternKind::pure_2: return v[0] < v[2] && v[2] < v[1];
        case PatternKind::pure_3: return v[0] + 1 < v[1] && v[1] == v[2];
        case PatternKind::comp_b_i: return v[0] <= v[1] && v[1] < v[2] - 1 && v[2] - 1 <= v[3] - 1;
        case PatternKind::comp_b_ii: return v[0] <= v[1] && v[1] < v[3] && v[3] < v[2];
        case PatternKind::comp_b_iii: return v[1] < v[0] && v[0] < v[3] && v[3] < v[2];
        case PatternKind::comp_b_iv: return v[1] < v[0] && v[0] < v[2] && v[2] <= v[3];
        case PatternKind::mf_2: return v[0] == v[1] && v[1] < v[2] - 1 && v[2] - 1 <= v[3] - 1;
        case PatternKind::mf_3: return v[0] == v[1] && v[1] < v[3] && v[3] < v[2];
        case PatternKind::mf_4: return v[1] < v[0] && v[0] < v[3] && v[3] < v[2];
        case PatternKind::mf_5: return v[1] < v[0] && v[0] < v[2] && v[2] == v[3];
        default: return false;
    }
}

// Conditions on D* for the ascending-step configuration at (r, c1, c2).
inline bool strucasc_holds(const Diagram& d, int r, int c1, int c2) {
    return r >= 1 && c1 >= 1 && c1 < c2 && d.contains(r + 1, c1) && d.contains(r + 2, c2) &&
           !d.row_has_cell_right_of(r + 2, c2) && !d.contains(r, c2) &&
           !d.row_has_cell_right_of(r + 1, c1) && !d.contains(r, c1);
}

// Conditions on D* for the blocked-column configuration at (r, r*, c, c*).
inline bool strucblock_holds(const Diagram& d, int r, int rs, int c, int cs) {
    if (r < 1 || c < 1 || !(c < cs - 1) || !(r < rs - 1)) return false;
    if (!d.contains(rs, cs) || d.row_has_cell_right_of(rs, cs)) return false;
    bool middle = false;
    for (int x : d.row(rs)) middle = middle || (c < x && x < cs);
    if (!middle) return false;
    for (int y = r + 1; y <= rs; ++y)
        if (!d.contains(y, c)) return false;
    if (d.contains(r, c) || d.row_has_cell_right_of(rs - 1, c)) return false;
    for (int y = r + 1; y < rs - 1; ++y)
        if (!d.row_has_cell_right_of(y, c)) return false;
    return true;
}

// A witnessed pattern occurrence. Indices are 1-based composition positions,
// or (r, c1, c2) / (r, r*, c, c*) for the diagram configurations.
class PatternHit {
public:
    static PatternHit in_composition(PatternKind k, const WeakComposition& a, std::vector<int> idx) {
        if (k == PatternKind::strucasc || k == PatternKind::strucblock)
            throw PreconditionError("diagram pattern given to the composition constructor");
        std::vector<int> vals;
        for (std::size_t t = 0; t < idx.size(); ++t) {
            if (idx[t] < 1 || static_cast<std::size_t>(idx[t]) > a.size() || (t && idx[t] <= idx[t - 1]))
                throw PreconditionError("pattern positions must be increasing and in range");
            vals.push_back(a[static_cast<std::size_t>(idx[t]) - 1]);
        }
        if (!composition_pattern_holds(k, vals))
            throw PreconditionError(std::string("values do not satisfy pattern ") + std::string(to_string(k)));
        return PatternHit(k, std::move(idx), std::nullopt);
    }

    static PatternHit strucasc(const Diagram& element, int r, int c1, int c2) {
        if (!strucasc_holds(element, r, c1, c2)) throw PreconditionError("strucasc conditions fail");
        return PatternHit(PatternKind::strucasc, {r, c1, c2}, element);
    }

    static PatternHit strucblock(const Diagram& element, int r, int rs, int c, int cs) {
        if (!strucblock_holds(element, r, rs, c, cs)) throw PreconditionError("strucblock conditions fail");
        return PatternHit(PatternKind::strucblock, {r, rs, c, cs}, element);
    }

    PatternKind kind() const noexcept { return kind_; }
    const std::vector<int>& indices() const noexcept { return idx_; }
    const std::optional<Diagram>& element() const noexcept { return element_; }
    // The blocked-column hit with r* = r + 2.
    bool two_row_case() const { return kind_ == PatternKind::strucblock && idx_[1] == idx_[0] + 2; }

private:
    PatternHit(PatternKind k, std::vector<int> idx, std::optional<Diagram> el)
        : kind_(k), idx_(std::move(idx)), element_(std::move(el)) {}

    PatternKind kind_;
    std::vector<int> idx_;
    std::optional<Diagram> element_;
};

// First D* in BFS order from d carrying the ascending-step configuration.
inline std::optional<PatternHit> detect_strucasc(const Diagram& d, std::size_t closure_budget = kDefaultClosureBudget) {
    for (const Diagram& e : explore_closure(d, closure_budget).nodes) {
        for (int r = 1; r + 2 <= e.max_row(); ++r) {
            const auto upper = e.row(r + 2);
            const auto lower = e.row(r + 1);
            if (upper.empty() || lower.empty()) continue;
            if (strucasc_holds(e, r, lower.back(), upper.back()))
                return PatternHit::strucasc(e, r, lower.back(), upper.back());
        }
    }
    return std::nullopt;
}

// First D* in BFS order from d carrying the blocked-column configuration.
inline std::optional<PatternHit> detect_strucblock(const Diagram& d, std::size_t closure_budget = kDefaultClosureBudget) {
    for (const Diagram& e : explore_closure(d, closure_budget).nodes) {
        for (int rs = 3; rs <= e.max_row(); ++rs) {
            const auto top = e.row(rs);
            if (top.empty()) continue;
            const int cs = top.back();
            for (int c = 1; c < cs - 1; ++c) {
                int y = rs;
                while (y >= 1 && e.contains(y, c)) --y;
                if (y == rs || y < 1) continue;
                if (strucblock_holds(e, y, rs, c, cs)) return PatternHit::strucblock(e, y, rs, c, cs);
            }
        }
    }
    return std::nullopt;
}

inline void require_one_cell_per_column(const Diagram& d) {
    for (int c : d.columns())
        if (d.column(c).size() > 1) throw PreconditionError("a column holds more than one cell");
}

// Shellability for diagrams with at most one cell per column.
inline bool shellable_onecell_columns(const Diagram& d) {
    require_one_cell_per_column(d);
    const Diagram s = strip_row_one(d);
    return s.empty() || is_hook(s);
}

inline void require_rows12_empty(const Diagram& d) {
    for (const Cell& c : d)
        if (c.row <= 2) throw PreconditionError("a cell lies in row 1 or 2");
}

// Shellability for diagrams whose rows 1 and 2 are empty.
inline bool shellable_rows12_empty(const Diagram& d) {
    require_rows12_empty(d);
    return is_hook(d);
}

namespace detail {

template <class F>
void for_each_increasing(std::size_t n, std::size_t k, F&& f) {
    if (k > n) return;
    std::vector<int> idx(k);
    for (std::size_t t = 0; t < k; ++t) idx[t] = static_cast<int>(t) + 1;
    while (true) {
        if (!f(idx)) return;
        std::size_t t = k;
        while (t > 0 && idx[t - 1] == static_cast<int>(n - k + t)) --t;
        if (t == 0) return;
        ++idx[t - 1];
        for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
}

inline std::vector<int> values_at(const WeakComposition& a, const std::vector<int>& idx) {
    std::vector<int> v;
    for (int i : idx) v.push_back(a[static_cast<std::size_t>(i) - 1]);
    return v;
}

// All hits of the given kinds, kinds in the given order, positions lexicographic.
inline std::vector<PatternHit> all_hits(const WeakComposition& a, std::initializer_list<PatternKind> kinds,
                                        std::size_t max_hits) {
    std::vector<PatternHit> out;
    for (PatternKind k : kinds) {
        for_each_increasing(a.size(), pattern_arity(k), [&](const std::vector<int>& idx) {
            if (composition_pattern_holds(k, values_at(a, idx))) out.push_back(PatternHit::in_composition(k, a, idx));
            return out.size() < max_hits;
        });
        if (out.size() >= max_hits) break;
    }
    return out;
}

}  // namespace detail

inline constexpr std::size_t kDefaultMaxHits = 10'000;

// Absent when a is pure; otherwise the first violating triple.
inline std::optional<PatternHit> is_pure_composition(const WeakComposition& a) {
    std::optional<PatternHit> hit;
    detail::for_each_increasing(a.size(), 3, [&](const std::vector<int>& idx) {
        const auto v = detail::values_at(a, idx);
        for (PatternKind k : {PatternKind::pure_1, PatternKind::pure_2, PatternKind::pure_3}) {
            if (composition_pattern_holds(k, v)) {
                hit = PatternHit::in_composition(k, a, idx);
                return false;
            }
        }
        return true;
    });
    return hit;
}

inline bool is_pure(const WeakComposition& a) { return !is_pure_composition(a).has_value(); }

enum class BasicType { I, II, III, IV };

inline std::string_view to_string(BasicType t) {
    switch (t) {
        case BasicType::I: return "I";
        case BasicType::II: return "II";
        case BasicType::III: return "III";
        case BasicType::IV: return "IV";
    }
    return "?";
}

inline std::optional<BasicType> basic_type(const WeakComposition& a) {
    const auto& v = a.parts();
    const std::size_t n = v.size();
    auto decreasing = [&](std::size_t from, std::size_t to) {
        for (std::size_t i = from + 1; i < to; ++i)
            if (v[i] > v[i - 1]) return false;
        return true;
    };
    if (decreasing(0, n)) return BasicType::I;
    const int p = v[0];
    bool only_p = true, has_p1 = false;
    for (int x : v) {
        only_p = only_p && (x == p || x == p + 1);
        has_p1 = has_p1 || x == p + 1;
    }
    if (only_p && has_p1) return BasicType::II;
    if (n >= 2 && decreasing(0, n - 1) && v[n - 2] < v[n - 1] - 1) return BasicType::III;
    if (n >= 4 && v[n - 1] == p + 1) {
        std::size_t s = 0;  // 0-based position of the first entry below p
        while (s < n && (v[s] == p || v[s] == p + 1)) ++s;
        bool both = false;
        for (std::size_t i = 0; i < s; ++i) both = both || v[i] == p + 1;
        if (both && s >= 2 && s + 1 < n && v[s] < p && decreasing(s, n - 1)) return BasicType::IV;
    }
    return std::nullopt;
}

struct PureDecomposition {
    std::vector<WeakComposition> blocks;
    std::vector<BasicType> types;

    // 0-based start position of each block.
    std::vector<std::size_t> offsets() const {
        std::vector<std::size_t> out;
        std::size_t at = 0;
        for (const auto& b : blocks) {
            out.push_back(at);
            at += b.size();
        }
        return out;
    }
};

// Empty string when valid, otherwise what is wrong.
inline std::string certify_decomposition(const WeakComposition& a, const PureDecomposition& dec) {
    if (dec.blocks.size() != dec.types.size()) return "block and type counts differ";
    std::vector<int> joined;
    for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
        const auto& b = dec.blocks[j];
        if (b.empty()) return "empty block";
        auto t = basic_type(b);
        if (!t || *t != dec.types[j]) return "block " + std::to_string(j + 1) + " does not have its declared type";
        if (j > 0 && dec.blocks[j - 1].min() < b.max())
            return "block " + std::to_string(j + 1) + " exceeds the minimum of the previous block";
        joined.insert(joined.end(), b.parts().begin(), b.parts().end());
    }
    if (joined != a.parts()) return "blocks do not concatenate to the composition";
    return {};
}

// Some valid decomposition, preferring long leading blocks.
inline PureDecomposition pure_decomposition(const WeakComposition& a) {
    if (!is_pure(a)) throw PreconditionError("composition " + to_string(a) + " is not pure");
    const std::size_t n = a.size();
    std::vector<int> suffix_max(n + 1, -1);
    for (std::size_t i = n; i-- > 0;) suffix_max[i] = std::max(suffix_max[i + 1], a[i]);
    std::vector<std::optional<bool>> memo(n + 1);
    std::vector<std::size_t> cut(n + 1, 0);
    auto solve = [&](auto&& self, std::size_t i) -> bool {
        if (i == n) return true;
        if (memo[i]) return *memo[i];
        bool ok = false;
        for (std::size_t j = n; j > i && !ok; --j) {
            const WeakComposition block = a.slice(i, j);
            if (!basic_type(block) || block.min() < suffix_max[j]) continue;
            if (self(self, j)) {
                cut[i] = j;
                ok = true;
            }
        }
        memo[i] = ok;
        return ok;
    };
    PureDecomposition dec;
    if (n == 0) return dec;
    if (!solve(solve, 0)) throw std::logic_error("no pure decomposition found for " + to_string(a));
    for (std::size_t i = 0; i < n; i = cut[i]) {
        dec.blocks.push_back(a.slice(i, cut[i]));
        dec.types.push_back(*basic_type(dec.blocks.back()));
    }
    return dec;
}

inline std::vector<PatternHit> keynecrank_patterns(const WeakComposition& a, std::size_t max_hits = kDefaultMaxHits) {
    using K = PatternKind;
    return detail::all_hits(a, {K::comp_a_i, K::comp_a_ii, K::comp_b_i, K::comp_b_ii, K::comp_b_iii, K::comp_b_iv},
                            max_hits);
}

inline std::vector<PatternHit> key_mf_patterns(const WeakComposition& a, std::size_t max_hits = kDefaultMaxHits) {
    using K = PatternKind;
    return detail::all_hits(a, {K::mf_1, K::mf_2, K::mf_3, K::mf_4, K::mf_5}, max_hits);
}

// Experimental: the conjectured pattern list for shellability of key posets.
inline std::vector<PatternHit> conjecture_key_patterns(const WeakComposition& a,
                                                       std::size_t max_hits = kDefaultMaxHits) {
    return keynecrank_patterns(a, max_hits);
}

inline bool key_graded_el_shellable(const WeakComposition& a) { return is_pure(a); }

// Cuts d into the row blocks of the decomposition, each shifted to start at row 1.
inline std::vector<Diagram> split_by_decomposition(const Diagram& d, const WeakComposition& a,
                                                   const PureDecomposition& dec) {
    std::size_t total = 0;
    for (const auto& b : dec.blocks) total += b.size();
    if (total != a.size()) throw PreconditionError("block sizes do not sum to the composition length");
    std::vector<std::vector<Cell>> parts(dec.blocks.size());
    const auto offs = dec.offsets();
    for (const Cell& c : d) {
        if (static_cast<std::size_t>(c.row) > total) throw PreconditionError("cell above the last row block");
        std::size_t j = 0;
        while (j + 1 < offs.size() && offs[j + 1] < static_cast<std::size_t>(c.row)) ++j;
        parts[j].push_back(Cell{c.row - static_cast<int>(offs[j]), c.col});
    }
    std::vector<Diagram> out;
    for (auto& p : parts) out.emplace_back(std::move(p));
    return out;
}

inline Diagram join_blocks(const std::vector<Diagram>& blocks, const PureDecomposition& dec) {
    if (blocks.size() != dec.blocks.size()) throw PreconditionError("block count mismatch");
    const auto offs = dec.offsets();
    std::vector<Cell> cells;
    for (std::size_t j = 0; j < blocks.size(); ++j)
        for (const Cell& c : blocks[j]) cells.push_back(Cell{c.row + static_cast<int>(offs[j]), c.col});
    return Diagram(std::move(cells));
}

// Cells of the key diagram below row n whose column is filled from row 1 up to
// them. They never move, and removing them leaves a hook diagram.
inline Diagram fixed_cells(const WeakComposition& a) {
    const Diagram d = key_diagram(a);
    std::vector<Cell> cells;
    for (const Cell& c : d) {
        if (static_cast<std::size_t>(c.row) >= a.size()) continue;
        bool filled = true;
        for (int y = 1; y < c.row && filled; ++y) filled = d.contains(y, c.col);
        if (filled) cells.push_back(c);
    }
    return Diagram(std::move(cells));
}

inline Diagram remove_cells(const Diagram& d, const Diagram& r) {
    std::vector<Cell> cells;
    std::set_difference(d.begin(), d.end(), r.begin(), r.end(), std::back_inserter(cells));
    return Diagram(std::move(cells));
}

// P(D(a)) for a basic a of type II-IV, identified with [bottom, hook] in P(hook).
struct HookEmbedding {
    Diagram fixed;
    Diagram hook;
    Diagram bottom;
    KohnertPoset key_poset;
    KohnertPoset hook_poset;
    Interval interval;
    std::vector<Id> image;  // key element id -> hook poset id
    bool certified = false;
    std::string failure;
};

inline HookEmbedding hook_embedding(const WeakComposition& a, std::size_t closure_budget = kDefaultClosureBudget) {
    const auto t = basic_type(a);
    if (!t) throw PreconditionError(to_string(a) + " is not a basic pure composition");
    if (*t == BasicType::I) throw PreconditionError("type I compositions give singleton posets");

    HookEmbedding e;
    e.fixed = fixed_cells(a);
    const Diagram top = key_diagram(a);
    e.hook = remove_cells(top, e.fixed);
    auto sorted = a.parts();
    std::sort(sorted.rbegin(), sorted.rend());
    e.bottom = remove_cells(key_diagram(WeakComposition(sorted)), e.fixed);
    e.key_poset = build_poset(top, closure_budget);
    e.hook_poset = build_poset(e.hook, closure_budget);

    auto fail = [&](std::string why) {
        e.failure = std::move(why);
        return e;
    };
    if (!is_hook(e.hook)) return fail("remaining cells do not form a hook diagram");
    auto lo = e.hook_poset.find(e.bottom);
    if (!lo) return fail("bottom diagram is not in the hook poset");
    if (!e.hook_poset.order.leq(*lo, e.hook_poset.generator)) return fail("bottom is not below the hook");
    e.interval = interval(e.hook_poset.order, *lo, e.hook_poset.generator);

    e.image.resize(e.key_poset.size());
    std::vector<bool> hit(e.hook_poset.size(), false);
    for (Id x = 0; x < e.key_poset.size(); ++x) {
        const Diagram& dx = e.key_poset[x];
        if (!std::includes(dx.begin(), dx.end(), e.fixed.begin(), e.fixed.end()))
            return fail("element " + to_string(dx) + " lost a fixed cell");
        auto y = e.hook_poset.find(remove_cells(dx, e.fixed));
        if (!y || !e.interval.local(*y)) return fail("image of " + to_string(dx) + " is outside the interval");
        if (hit[*y]) return fail("two elements share an image");
        hit[*y] = true;
        e.image[x] = *y;
    }
    if (e.key_poset.size() != e.interval.members.size()) return fail("map does not reach the whole interval");
    for (Id x = 0; x < e.key_poset.size(); ++x)
        for (Id y = 0; y < e.key_poset.size(); ++y)
            if (e.key_poset.order.leq(x, y) != e.hook_poset.order.leq(e.image[x], e.image[y]))
                return fail("map does not preserve the order");
    e.certified = true;
    return e;
}

// Block posets of a pure composition and the coordinates of each element.
struct ProductSplit {
    PureDecomposition decomposition;
    std::vector<KohnertPoset> blocks;
    std::vector<std::vector<Id>> coords;  // element id -> per-block element ids
    bool certified = false;
    std::string failure;
};

// Checks that splitting rows by the decomposition is an order isomorphism
// from P(D(a)) onto the product of the block posets.
inline ProductSplit split_into_product(const KohnertPoset& kp, const WeakComposition& a,
                                       std::size_t closure_budget = kDefaultClosureBudget) {
    ProductSplit s;
    s.decomposition = pure_decomposition(a);
    for (const auto& b : s.decomposition.blocks) s.blocks.push_back(build_poset(key_diagram(b), closure_budget));
    std::size_t product_size = 1;
    for (const auto& b : s.blocks) product_size *= b.size();
    auto fail = [&](std::string why) {
        s.failure = std::move(why);
        return s;
    };
    if (product_size != kp.size()) return fail("sizes differ");
    std::map<std::vector<Id>, Id> seen;
    for (Id x = 0; x < kp.size(); ++x) {
        auto parts = split_by_decomposition(kp[x], a, s.decomposition);
        std::vector<Id> c;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            auto id = s.blocks[j].find(parts[j]);
            if (!id) return fail("block of " + to_string(kp[x]) + " is not in its block poset");
            c.push_back(*id);
        }
        if (!seen.emplace(c, x).second) return fail("two elements split identically");
        s.coords.push_back(std::move(c));
    }
    for (Id x = 0; x < kp.size(); ++x)
        for (Id y = 0; y < kp.size(); ++y) {
            bool prod = true;
            for (std::size_t j = 0; j < s.blocks.size() && prod; ++j)
                prod = s.blocks[j].order.leq(s.coords[x][j], s.coords[y][j]);
            if (prod != kp.order.leq(x, y)) return fail("splitting does not preserve the order");
        }
    s.certified = true;
    return s;
}

inline Poset product_of_blocks(const ProductSplit& s) {
    Poset p = Poset::chain(1);
    for (const auto& b : s.blocks) p = direct_product(p, b.order);
    return p;
}

// Edge labeling of P(D(a)) for pure a: each cover changes one block, and gets
// that block's hook label shifted so that later blocks use larger labels.
inline EdgeLabeling el_labeling_key(const KohnertPoset& kp, const WeakComposition& a,
                                    std::size_t closure_budget = kDefaultClosureBudget) {
    const ProductSplit split = split_into_product(kp, a, closure_budget);
    if (!split.certified) throw std::logic_error("row blocks do not split the poset: " + split.failure);
    const auto& dec = split.decomposition;
    std::vector<std::optional<HookEmbedding>> emb(dec.blocks.size());
    std::vector<EdgeLabeling> hook_labels(dec.blocks.size());
    int span = 1;
    for (std::size_t j = 0; j < dec.blocks.size(); ++j) {
        if (dec.types[j] == BasicType::I) continue;
        emb[j] = hook_embedding(dec.blocks[j], closure_budget);
        if (!emb[j]->certified) throw std::logic_error("hook embedding failed: " + emb[j]->failure);
        hook_labels[j] = el_labeling_hook(emb[j]->hook_poset);
        for (const auto& [edge, l] : hook_labels[j].labels()) span = std::max(span, l + 1);
    }
    EdgeLabeling out;
    for (const Edge& e : kp.order.covers()) {
        const auto& lo = split.coords[e.lower];
        const auto& hi = split.coords[e.upper];
        std::size_t j = 0;
        while (j < lo.size() && lo[j] == hi[j]) ++j;
        if (j == lo.size() || !emb[j]) throw std::logic_error("cover does not change a movable block");
        const Edge h{emb[j]->image[lo[j]], emb[j]->image[hi[j]]};
        out.set(e, hook_labels[j].at(h) + static_cast<int>(j) * span);
    }
    return out;
}

}  // namespace kohnert
