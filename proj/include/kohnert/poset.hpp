#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <numeric>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"

namespace kohnert {

using Id = std::size_t;
using Bits = boost::dynamic_bitset<>;

// Cover edge: lower is covered by upper.
struct Edge {
    Id lower = 0;
    Id upper = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Chain = std::vector<Id>;

// Finite poset on 0..n-1 with the order stored as up-set bitsets.
class Poset {
public:
    Poset() = default;

    // Pairs (x, y) mean x < y. Any relation whose transitive closure is
    // antisymmetric is accepted.
    static Poset from_relation(std::size_t n, const std::vector<Edge>& less) {
        std::vector<std::vector<Id>> succ(n);
        std::vector<std::size_t> indeg(n, 0);
        for (const Edge& e : less) {
            if (e.lower >= n || e.upper >= n) throw PreconditionError("relation index out of range");
            if (e.lower == e.upper) continue;
            succ[e.lower].push_back(e.upper);
            ++indeg[e.upper];
        }
        std::vector<Id> topo;
        topo.reserve(n);
        for (Id x = 0; x < n; ++x)
            if (indeg[x] == 0) topo.push_back(x);
        for (std::size_t h = 0; h < topo.size(); ++h)
            for (Id y : succ[topo[h]])
                if (--indeg[y] == 0) topo.push_back(y);
        if (topo.size() != n) throw PreconditionError("relation has a cycle");

        std::vector<Bits> up(n, Bits(n));
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
            up[*it].set(*it);
            for (Id y : succ[*it]) up[*it] |= up[y];
        }
        return from_up_sets(std::move(up));
    }

    // up[x] = {y : x <= y}; must already be reflexive and transitive.
    static Poset from_up_sets(std::vector<Bits> up) {
        Poset p;
        p.up_ = std::move(up);
        p.finish();
        return p;
    }

    static Poset chain(std::size_t k) {
        std::vector<Edge> rel;
        for (Id i = 0; i + 1 < k; ++i) rel.push_back({i, i + 1});
        return from_relation(k, rel);
    }

    std::size_t size() const noexcept { return up_.size(); }
    bool leq(Id x, Id y) const { return up_[x].test(y); }
    bool less(Id x, Id y) const { return x != y && up_[x].test(y); }
    bool comparable(Id x, Id y) const { return leq(x, y) || leq(y, x); }
    const Bits& up(Id x) const { return up_[x]; }
    const Bits& down(Id y) const { return down_[y]; }

    const std::vector<Edge>& covers() const noexcept { return covers_; }
    const std::vector<Id>& upper_covers(Id x) const { return upper_[x]; }
    const std::vector<Id>& lower_covers(Id y) const { return lower_[y]; }
    bool is_cover(Id x, Id y) const {
        return std::binary_search(upper_[x].begin(), upper_[x].end(), y);
    }

    // Bottom-up order: a strictly larger down-set always comes later.
    std::vector<Id> linear_extension() const {
        std::vector<Id> ids(size());
        std::iota(ids.begin(), ids.end(), Id{0});
        std::stable_sort(ids.begin(), ids.end(),
                         [&](Id a, Id b) { return down_[a].count() < down_[b].count(); });
        return ids;
    }

private:
    void finish() {
        const std::size_t n = up_.size();
        down_.assign(n, Bits(n));
        for (Id x = 0; x < n; ++x)
            for (Id y = up_[x].find_first(); y != Bits::npos; y = up_[x].find_next(y)) down_[y].set(x);
        for (Id x = 0; x < n; ++x) {
            if (!up_[x].test(x)) throw PreconditionError("order is not reflexive");
            if ((up_[x] & down_[x]).count() != 1) throw PreconditionError("relation is not antisymmetric");
        }

        upper_.assign(n, {});
        lower_.assign(n, {});
        covers_.clear();
        for (Id x = 0; x < n; ++x) {
            Bits strict = up_[x];
            strict.reset(x);
            Bits implied(n);
            for (Id z = strict.find_first(); z != Bits::npos; z = strict.find_next(z)) {
                Bits above = up_[z];
                above.reset(z);
                implied |= above;
            }
            strict -= implied;
            for (Id z = strict.find_first(); z != Bits::npos; z = strict.find_next(z)) {
                upper_[x].push_back(z);
                lower_[z].push_back(x);
                covers_.push_back({x, z});
            }
        }
        for (auto& v : lower_) std::sort(v.begin(), v.end());
        std::sort(covers_.begin(), covers_.end());
    }

    std::vector<Bits> up_;
    std::vector<Bits> down_;
    std::vector<std::vector<Id>> upper_;
    std::vector<std::vector<Id>> lower_;
    std::vector<Edge> covers_;
};

inline std::vector<Id> minimal_elements(const Poset& p) {
    std::vector<Id> out;
    for (Id x = 0; x < p.size(); ++x)
        if (p.lower_covers(x).empty()) out.push_back(x);
    return out;
}

inline std::vector<Id> maximal_elements(const Poset& p) {
    std::vector<Id> out;
    for (Id x = 0; x < p.size(); ++x)
        if (p.upper_covers(x).empty()) out.push_back(x);
    return out;
}

inline bool is_bounded(const Poset& p) {
    return minimal_elements(p).size() == 1 && maximal_elements(p).size() == 1;
}

// A rank function normalized to 0 at the lowest element of each component.
inline std::optional<std::vector<int>> rank_function(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<int> rho(n, 0);
    std::vector<bool> seen(n, false);
    for (Id start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<Id> component{start};
        seen[start] = true;
        for (std::size_t h = 0; h < component.size(); ++h) {
            const Id x = component[h];
            for (Id y : p.upper_covers(x)) {
                if (!seen[y]) {
                    seen[y] = true;
                    rho[y] = rho[x] + 1;
                    component.push_back(y);
                } else if (rho[y] != rho[x] + 1) {
                    return std::nullopt;
                }
            }
            for (Id y : p.lower_covers(x)) {
                if (!seen[y]) {
                    seen[y] = true;
                    rho[y] = rho[x] - 1;
                    component.push_back(y);
                } else if (rho[y] != rho[x] - 1) {
                    return std::nullopt;
                }
            }
        }
        int lo = rho[start];
        for (Id x : component) lo = std::min(lo, rho[x]);
        for (Id x : component) rho[x] -= lo;
    }
    return rho;
}

inline bool is_ranked(const Poset& p) { return rank_function(p).has_value(); }

// All maximal chains have the same length.
inline bool is_pure(const Poset& p) {
    const std::size_t n = p.size();
    if (n == 0) return true;
    std::vector<int> lo(n, 0), hi(n, 0);
    for (Id x : p.linear_extension()) {
        const auto& below = p.lower_covers(x);
        if (below.empty()) continue;
        lo[x] = hi[x] = -1;
        for (Id y : below) {
            lo[x] = lo[x] < 0 ? lo[y] + 1 : std::min(lo[x], lo[y] + 1);
            hi[x] = std::max(hi[x], hi[y] + 1);
        }
    }
    std::optional<int> len;
    for (Id m : maximal_elements(p)) {
        if (lo[m] != hi[m]) return false;
        if (len && *len != lo[m]) return false;
        len = lo[m];
    }
    return true;
}

inline bool is_graded(const Poset& p) { return is_bounded(p) && is_pure(p); }

// Maximal chains, found by DFS along upper covers from each minimal element.
inline std::vector<Chain> maximal_chains(const Poset& p) {
    std::vector<Chain> out;
    Chain cur;
    auto dfs = [&](auto&& self, Id x) -> void {
        cur.push_back(x);
        if (p.upper_covers(x).empty()) {
            out.push_back(cur);
        } else {
            for (Id y : p.upper_covers(x)) self(self, y);
        }
        cur.pop_back();
    };
    for (Id m : minimal_elements(p)) dfs(dfs, m);
    return out;
}

// [bottom, top] as its own poset; local index i stands for members[i].
struct Interval {
    Id bottom = 0;
    Id top = 0;
    std::vector<Id> members;
    Poset poset;

    std::optional<Id> local(Id global) const {
        auto it = std::lower_bound(members.begin(), members.end(), global);
        if (it == members.end() || *it != global) return std::nullopt;
        return static_cast<Id>(it - members.begin());
    }
    Id global(Id local) const { return members[local]; }
};

inline Interval interval(const Poset& p, Id x, Id y) {
    if (x >= p.size() || y >= p.size() || !p.leq(x, y))
        throw PreconditionError("interval endpoints are not ordered");
    Interval iv;
    iv.bottom = x;
    iv.top = y;
    Bits m = p.up(x) & p.down(y);
    for (Id z = m.find_first(); z != Bits::npos; z = m.find_next(z)) iv.members.push_back(z);
    const std::size_t k = iv.members.size();
    std::vector<Bits> up(k, Bits(k));
    for (Id i = 0; i < k; ++i)
        for (Id j = 0; j < k; ++j)
            if (p.leq(iv.members[i], iv.members[j])) up[i].set(j);
    iv.poset = Poset::from_up_sets(std::move(up));
    return iv;
}

// Elements are pairs (i, j) encoded as i * |q| + j.
inline Poset direct_product(const Poset& p, const Poset& q) {
    const std::size_t m = q.size();
    const std::size_t n = p.size() * m;
    std::vector<Bits> up(n, Bits(n));
    for (Id a = 0; a < p.size(); ++a)
        for (Id b = 0; b < m; ++b)
            for (Id c = p.up(a).find_first(); c != Bits::npos; c = p.up(a).find_next(c))
                for (Id d = q.up(b).find_first(); d != Bits::npos; d = q.up(b).find_next(d))
                    up[a * m + b].set(c * m + d);
    return Poset::from_up_sets(std::move(up));
}

// Order isomorphism p -> q by backtracking over a bottom-up order of p,
// pruned by per-element degree data. Throws BudgetExceeded past `budget` nodes.
inline std::optional<std::vector<Id>> find_isomorphism(const Poset& p, const Poset& q,
                                                       std::size_t budget = kDefaultIsomorphismBudget) {
    const std::size_t n = p.size();
    if (q.size() != n || p.covers().size() != q.covers().size()) return std::nullopt;
    using Sig = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;
    auto sig = [](const Poset& s, Id x) {
        return Sig{s.down(x).count(), s.up(x).count(), s.lower_covers(x).size(), s.upper_covers(x).size()};
    };
    std::vector<Sig> sp(n), sq(n);
    for (Id x = 0; x < n; ++x) {
        sp[x] = sig(p, x);
        sq[x] = sig(q, x);
    }
    {
        auto a = sp, b = sq;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    const std::vector<Id> order = p.linear_extension();
    std::vector<Id> f(n, n);
    std::vector<bool> used(n, false);
    std::size_t nodes = 0;
    auto place = [&](auto&& self, std::size_t k) -> bool {
        if (k == n) return true;
        const Id x = order[k];
        for (Id y = 0; y < n; ++y) {
            if (used[y] || sq[y] != sp[x]) continue;
            if (++nodes > budget) throw BudgetExceeded("isomorphism budget exceeded", nodes);
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) {
                const Id u = order[i];
                ok = p.leq(u, x) == q.leq(f[u], y) && p.leq(x, u) == q.leq(y, f[u]);
            }
            if (!ok) continue;
            f[x] = y;
            used[y] = true;
            if (self(self, k + 1)) return true;
            used[y] = false;
            f[x] = n;
        }
        return false;
    };
    if (!place(place, 0)) return std::nullopt;
    return f;
}

inline bool are_isomorphic(const Poset& p, const Poset& q, std::size_t budget = kDefaultIsomorphismBudget) {
    return find_isomorphism(p, q, budget).has_value();
}

// KD(d) ordered by reachability; element ids index the canonically sorted list.
struct KohnertPoset {
    std::vector<Diagram> elements;
    Poset order;
    Id generator = 0;
    std::unordered_map<Diagram, Id, DiagramHash> index;

    std::size_t size() const noexcept { return elements.size(); }
    std::optional<Id> find(const Diagram& d) const {
        auto it = index.find(d);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
    const Diagram& operator[](Id i) const { return elements[i]; }
};

inline KohnertPoset build_poset(const Diagram& d, std::size_t closure_budget = kDefaultClosureBudget) {
    MoveGraph g = explore_closure(d, closure_budget);
    const std::size_t n = g.nodes.size();
    std::vector<Id> perm(n);
    std::iota(perm.begin(), perm.end(), Id{0});
    std::sort(perm.begin(), perm.end(), [&](Id a, Id b) { return g.nodes[a] < g.nodes[b]; });
    std::vector<Id> id_of(n);
    for (Id i = 0; i < n; ++i) id_of[perm[i]] = i;

    KohnertPoset kp;
    kp.elements.reserve(n);
    for (Id i = 0; i < n; ++i) kp.elements.push_back(g.nodes[perm[i]]);
    std::vector<Edge> rel;
    for (Id v = 0; v < n; ++v)
        for (Id w : g.successors[v]) rel.push_back({id_of[w], id_of[v]});
    kp.order = Poset::from_relation(n, rel);
    kp.generator = id_of[0];
    for (Id i = 0; i < n; ++i) kp.index.emplace(kp.elements[i], i);
    return kp;
}

// For d2 a single-move image of d1 (cell (r,c) dropped to (r-j,c)):
// d2 is covered by d1 iff every row strictly between has a cell right of c in d1.
inline bool cover_check_single_move(const Diagram& d1, const Diagram& d2) {
    auto m = single_move_between(d1, d2);
    if (!m) throw PreconditionError("second diagram is not a single Kohnert move image of the first");
    for (int r = m->to.row + 1; r < m->from.row; ++r)
        if (!d1.row_has_cell_right_of(r, m->from.col)) return false;
    return true;
}

}  // namespace kohnert
