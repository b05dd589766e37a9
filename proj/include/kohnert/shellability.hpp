#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"
#include "kohnert/poset.hpp"

namespace kohnert {

enum class Decision { yes, no, undecided };

inline std::string_view to_string(Decision d) {
    switch (d) {
        case Decision::yes: return "true";
        case Decision::no: return "false";
        case Decision::undecided: return "undecided";
    }
    return "undecided";
}

// Simplicial complex given by its facets, each a sorted vertex list.
struct OrderComplex {
    std::size_t vertex_count = 0;
    std::vector<std::vector<Id>> facets;
};

inline OrderComplex order_complex(const Poset& p) {
    OrderComplex c;
    c.vertex_count = p.size();
    for (Chain ch : maximal_chains(p)) {
        std::sort(ch.begin(), ch.end());
        c.facets.push_back(std::move(ch));
    }
    return c;
}

// Checks the shelling condition directly: for each k, the maximal members of
// {F_i ∩ F_k : i < k} must all have size |F_k| - 1.
inline bool is_shelling_order(const OrderComplex& c, const std::vector<std::size_t>& order) {
    const std::size_t n = c.facets.size();
    if (order.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (std::size_t k : order) {
        if (k >= n || seen[k]) return false;
        seen[k] = true;
    }
    for (std::size_t pos = 1; pos < n; ++pos) {
        const auto& fk = c.facets[order[pos]];
        std::vector<std::vector<Id>> meets;
        for (std::size_t q = 0; q < pos; ++q) {
            const auto& fi = c.facets[order[q]];
            std::vector<Id> m;
            std::set_intersection(fk.begin(), fk.end(), fi.begin(), fi.end(), std::back_inserter(m));
            meets.push_back(std::move(m));
        }
        for (std::size_t a = 0; a < meets.size(); ++a) {
            bool maximal = true;
            for (std::size_t b = 0; b < meets.size() && maximal; ++b) {
                if (meets[b].size() > meets[a].size() &&
                    std::includes(meets[b].begin(), meets[b].end(), meets[a].begin(), meets[a].end()))
                    maximal = false;
            }
            if (maximal && meets[a].size() + 1 != fk.size()) return false;
        }
    }
    return true;
}

struct ShellingResult {
    Decision decision = Decision::undecided;
    std::vector<std::size_t> order;  // facet indices, filled when shellable
    std::size_t states = 0;
};

namespace detail {

using Mask = std::uint64_t;

// Backtracking over facet orders. Facets are added in weakly decreasing size,
// which loses no shellings of nonpure complexes. A placed set that failed
// once fails again, so such sets are memoized.
//
// For each unplaced facet F_k the search keeps `covered`, the vertices v with
// F_k - v inside some placed facet, and `pending`, the intersections F_i ∩ F_k
// not yet contained in such a codimension-one face. F_k can be added next
// exactly when nothing is pending.
class ShellingSearch {
public:
    ShellingSearch(const OrderComplex& c, std::size_t budget) : c_(c), budget_(budget) {
        n_ = c.facets.size();
        for (const auto& f : c.facets)
            if (f.size() > 64) throw PreconditionError("facets longer than 64 vertices are not supported");
        by_size_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) by_size_[i] = i;
        std::stable_sort(by_size_.begin(), by_size_.end(),
                         [&](std::size_t a, std::size_t b) { return c.facets[a].size() > c.facets[b].size(); });
        // Pairwise intersections here and the final verification are quadratic.
        states_ = n_ * n_ / 1024;
        if (n_ <= kPrecomputeLimit) {
            masks_.resize(n_ * n_);
            for (std::size_t k = 0; k < n_; ++k)
                for (std::size_t i = 0; i < n_; ++i) masks_[k * n_ + i] = compute_mask(k, i);
        }
        placed_.assign((n_ + 63) / 64, 0);
        covered_.assign(n_, 0);
        pending_.assign(n_, {});
    }

    ShellingResult run() {
        ShellingResult r;
        try {
            if (states_ > budget_) throw OutOfBudget{};
            r.decision = dfs() ? Decision::yes : Decision::no;
        } catch (const OutOfBudget&) {
            r.decision = Decision::undecided;
        }
        if (r.decision == Decision::yes) r.order = order_;
        r.states = states_;
        return r;
    }

private:
    struct OutOfBudget {};
    struct WordsHash {
        std::size_t operator()(const std::vector<std::uint64_t>& w) const {
            return boost::hash_range(w.begin(), w.end());
        }
    };
    struct Change {
        std::size_t k;
        Mask old_covered;
        bool pushed;
        std::size_t removed_begin;
        std::size_t removed_count;
    };
    static constexpr std::size_t kPrecomputeLimit = 1024;
    // Bounds the undo log, whose growth per placement is linear in the facet count.
    static constexpr std::size_t kLogLimit = std::size_t{1} << 23;

    // Bit t set iff the t-th vertex of facet k lies in facet i.
    Mask compute_mask(std::size_t k, std::size_t i) const {
        const auto& fk = c_.facets[k];
        const auto& fi = c_.facets[i];
        Mask m = 0;
        std::size_t a = 0, b = 0;
        while (a < fk.size() && b < fi.size()) {
            if (fk[a] < fi[b]) {
                ++a;
            } else if (fi[b] < fk[a]) {
                ++b;
            } else {
                m |= Mask{1} << a;
                ++a;
                ++b;
            }
        }
        return m;
    }
    Mask mask(std::size_t k, std::size_t i) const {
        return masks_.empty() ? compute_mask(k, i) : masks_[k * n_ + i];
    }
    Mask full(std::size_t k) const {
        const std::size_t len = c_.facets[k].size();
        return len == 64 ? ~Mask{0} : (Mask{1} << len) - 1;
    }

    bool is_placed(std::size_t k) const { return (placed_[k / 64] >> (k % 64)) & 1U; }
    void flip(std::size_t k) { placed_[k / 64] ^= std::uint64_t{1} << (k % 64); }

    void place(std::size_t f) {
        flip(f);
        order_.push_back(f);
        marks_.push_back(log_.size());
        for (std::size_t k = 0; k < n_; ++k) {
            if (is_placed(k)) continue;
            const Mask m = mask(k, f);
            const Mask fk = full(k);
            if (std::popcount(m) + 1 == static_cast<int>(c_.facets[k].size())) {
                const Mask fresh = fk & ~m & ~covered_[k];
                if (!fresh) continue;
                Change ch{k, covered_[k], false, removed_.size(), 0};
                covered_[k] |= fresh;
                auto& pend = pending_[k];
                std::size_t keep = 0;
                for (Mask p : pend) {
                    if (fk & ~p & covered_[k]) {
                        removed_.push_back(p);
                        ++ch.removed_count;
                    } else {
                        pend[keep++] = p;
                    }
                }
                pend.resize(keep);
                log_.push_back(ch);
            } else if ((fk & ~m & covered_[k]) == 0) {
                pending_[k].push_back(m);
                log_.push_back(Change{k, covered_[k], true, removed_.size(), 0});
            }
        }
    }

    void unplace() {
        const std::size_t mark = marks_.back();
        marks_.pop_back();
        while (log_.size() > mark) {
            const Change ch = log_.back();
            log_.pop_back();
            auto& pend = pending_[ch.k];
            if (ch.pushed) pend.pop_back();
            for (std::size_t t = 0; t < ch.removed_count; ++t) pend.push_back(removed_[ch.removed_begin + t]);
            removed_.resize(ch.removed_begin);
            covered_[ch.k] = ch.old_covered;
        }
        flip(order_.back());
        order_.pop_back();
    }

    bool dfs() {
        if (order_.size() == n_) return true;
        if (dead_.count(placed_)) return false;
        states_ += masks_.empty() ? 1 + n_ / 64 : 1;
        if (states_ > budget_ || log_.size() > kLogLimit) throw OutOfBudget{};
        std::size_t size = 0;
        for (std::size_t k : by_size_) {
            if (!is_placed(k)) {
                size = c_.facets[k].size();
                break;
            }
        }
        for (std::size_t k : by_size_) {
            if (c_.facets[k].size() < size) break;
            if (is_placed(k) || c_.facets[k].size() != size || !pending_[k].empty()) continue;
            flip(k);
            const bool known_dead = dead_.count(placed_) != 0;
            flip(k);
            if (known_dead) continue;
            place(k);
            if (dfs()) return true;
            unplace();
        }
        dead_.insert(placed_);
        return false;
    }

    const OrderComplex& c_;
    std::size_t budget_;
    std::size_t n_ = 0;
    std::size_t states_ = 0;
    std::vector<std::size_t> by_size_;
    std::vector<Mask> masks_;
    std::vector<std::uint64_t> placed_;
    std::vector<std::size_t> order_;
    std::vector<Mask> covered_;
    std::vector<std::vector<Mask>> pending_;
    std::vector<Change> log_;
    std::vector<Mask> removed_;
    std::vector<std::size_t> marks_;
    std::unordered_set<std::vector<std::uint64_t>, WordsHash> dead_;
};

}  // namespace detail

// Exhaustive shelling search. Undecided when more than `budget` prefix
// states would be visited. Above 1024 facets intersections are not cached, and
// each state counts 1 + facets/64 times.
inline ShellingResult is_shellable(const OrderComplex& c, std::size_t budget = kDefaultShellingBudget) {
    if (c.facets.size() <= 1) {
        ShellingResult r;
        r.decision = Decision::yes;
        if (!c.facets.empty()) r.order = {0};
        return r;
    }
    ShellingResult r = detail::ShellingSearch(c, budget).run();
    if (r.decision == Decision::yes && !is_shelling_order(c, r.order))
        throw std::logic_error("shelling search produced an invalid order");
    return r;
}

// Interval whose proper part is two disjoint chains, each with at least two
// elements. Its order complex has exactly two facets meeting in {bottom, top}.
struct TwoChainWitness {
    Id bottom = 0;
    Id top = 0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
};

inline std::optional<TwoChainWitness> two_chain_witness(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<std::tuple<std::size_t, Id, Id>> candidates;
    for (Id x = 0; x < n; ++x)
        for (Id y = p.up(x).find_first(); y != Bits::npos; y = p.up(x).find_next(y)) {
            const std::size_t k = (p.up(x) & p.down(y)).count();
            if (k >= 6) candidates.emplace_back(k, x, y);
        }
    std::sort(candidates.begin(), candidates.end());
    auto comparable_with = [&](Id u) { return p.up(u) | p.down(u); };
    for (auto [k, x, y] : candidates) {
        Bits proper = p.up(x) & p.down(y);
        proper.reset(x);
        proper.reset(y);
        const Id z0 = proper.find_first();
        const Bits c1 = proper & comparable_with(z0);
        const Bits c2 = proper - c1;
        if (c1.count() < 2 || c2.count() < 2) continue;
        bool ok = true;
        for (Id u = c1.find_first(); u != Bits::npos && ok; u = c1.find_next(u))
            ok = c1.is_subset_of(comparable_with(u));
        for (Id u = c2.find_first(); u != Bits::npos && ok; u = c2.find_next(u)) {
            const Bits rel = comparable_with(u);
            ok = c2.is_subset_of(rel) && !rel.intersects(c1);
        }
        if (!ok) continue;
        const std::size_t a = c1.count(), b = c2.count();
        return TwoChainWitness{x, y, std::min(a, b), std::max(a, b)};
    }
    return std::nullopt;
}

inline constexpr std::size_t kSmallInterval = 10;

struct PosetShellability {
    Decision decision = Decision::undecided;
    std::vector<std::size_t> shelling;           // facet indices into order_complex(p)
    std::optional<std::pair<Id, Id>> witness;  // non-shellable interval, when found
    std::size_t states = 0;
};

// Brute-force decision for Δ(p), using that every interval of a shellable
// poset is shellable. Small intervals are searched first since they are cheap
// and usually expose non-shellability; then a short greedy attempt on the
// whole complex; then the remaining intervals; then the whole complex with
// what is left of the budget.
inline PosetShellability decide_shellable(const Poset& p, std::size_t budget = kDefaultShellingBudget) {
    PosetShellability out;
    const OrderComplex whole = order_complex(p);
    std::size_t spent = 0;
    auto remaining = [&] { return budget > spent ? budget - spent : 0; };
    auto finish = [&](ShellingResult& r) {
        out.decision = r.decision;
        out.shelling = std::move(r.order);
        out.states = spent;
        if (out.decision == Decision::no && is_bounded(p))
            out.witness = std::make_pair(minimal_elements(p).front(), maximal_elements(p).front());
        return out;
    };

    std::vector<std::tuple<std::size_t, Id, Id>> intervals;
    for (Id x = 0; x < p.size(); ++x)
        for (Id y = p.up(x).find_first(); y != Bits::npos; y = p.up(x).find_next(y)) {
            const std::size_t k = (p.up(x) & p.down(y)).count();
            if (k >= 6 && k < p.size()) intervals.emplace_back(k, x, y);
        }
    std::sort(intervals.begin(), intervals.end());

    std::size_t next = 0;
    auto scan = [&](std::size_t max_members) {
        for (; next < intervals.size(); ++next) {
            auto [k, x, y] = intervals[next];
            if (k > max_members || remaining() == 0) return false;
            const Interval iv = interval(p, x, y);
            const OrderComplex c = order_complex(iv.poset);
            ShellingResult r = is_shellable(c, std::min(remaining(), 50 * c.facets.size() + 1000));
            spent += r.states;
            if (r.decision == Decision::no) {
                out.decision = Decision::no;
                out.witness = std::make_pair(x, y);
                out.states = spent;
                return true;
            }
        }
        return false;
    };

    if (scan(kSmallInterval)) return out;
    ShellingResult first = is_shellable(whole, std::min(remaining(), whole.facets.size() * 5 / 4 + 64));
    spent += first.states;
    if (first.decision != Decision::undecided) return finish(first);
    if (scan(p.size())) return out;
    ShellingResult full = is_shellable(whole, remaining());
    spent += full.states;
    return finish(full);
}

// Integer labels on cover edges.
class EdgeLabeling {
public:
    void set(Edge e, int label) { labels_[e] = label; }
    int at(Edge e) const {
        auto it = labels_.find(e);
        if (it == labels_.end()) throw PreconditionError("edge is not labeled");
        return it->second;
    }
    bool contains(Edge e) const { return labels_.count(e) != 0; }
    std::size_t size() const noexcept { return labels_.size(); }
    const std::map<Edge, int>& labels() const noexcept { return labels_; }

private:
    std::map<Edge, int> labels_;
};

// True iff the labeled edges are exactly the covers of p.
inline bool labels_exactly_covers(const Poset& p, const EdgeLabeling& lab) {
    if (lab.size() != p.covers().size()) return false;
    for (const Edge& e : p.covers())
        if (!lab.contains(e)) return false;
    return true;
}

// Labels read bottom to top along a saturated chain.
inline std::vector<int> chain_labels(const EdgeLabeling& lab, const Chain& chain) {
    std::vector<int> v;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) v.push_back(lab.at({chain[i], chain[i + 1]}));
    return v;
}

inline std::vector<int> hook_chain_label_multiset(const Poset& p, const EdgeLabeling& lab, const Chain& chain) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!p.is_cover(chain[i], chain[i + 1])) throw PreconditionError("chain is not saturated");
    std::vector<int> v = chain_labels(lab, chain);
    std::sort(v.begin(), v.end());
    return v;
}

struct ElVerdict {
    bool ok = true;
    std::optional<std::pair<Id, Id>> failing;
    std::string reason;
};

// Every interval needs exactly one weakly rising maximal chain, and its label
// sequence must be strictly smaller (lexicographically, shorter prefix first)
// than that of every other maximal chain.
inline ElVerdict verify_el(const Poset& p, const EdgeLabeling& lab) {
    if (!is_bounded(p)) throw PreconditionError("EL verification needs a bounded poset");
    if (!labels_exactly_covers(p, lab)) throw PreconditionError("labeling does not match the cover edges");
    const std::size_t n = p.size();
    struct Stats {
        std::size_t rising = 0;
        std::size_t at_min = 0;
        bool min_rising = false;
        std::vector<int> min;
    };
    std::vector<Stats> st(n);
    std::vector<int> labels;
    for (Id x = 0; x < n; ++x) {
        for (Id y = p.up(x).find_first(); y != Bits::npos; y = p.up(x).find_next(y)) st[y] = Stats{};
        auto dfs = [&](auto&& self, Id z, bool rising) -> void {
            for (Id w : p.upper_covers(z)) {
                const int l = lab.at({z, w});
                const bool r = rising && (labels.empty() || labels.back() <= l);
                labels.push_back(l);
                Stats& s = st[w];
                if (r) ++s.rising;
                if (s.at_min == 0 || labels < s.min) {
                    s.min = labels;
                    s.at_min = 1;
                    s.min_rising = r;
                } else if (labels == s.min) {
                    ++s.at_min;
                }
                self(self, w, r);
                labels.pop_back();
            }
        };
        dfs(dfs, x, true);
        for (Id y = p.up(x).find_first(); y != Bits::npos; y = p.up(x).find_next(y)) {
            if (y == x) continue;
            const Stats& s = st[y];
            std::string why;
            if (s.rising != 1) why = std::to_string(s.rising) + " rising maximal chains";
            else if (!s.min_rising) why = "rising chain is not lexicographically least";
            else if (s.at_min != 1) why = "rising label sequence is shared by another chain";
            if (!why.empty()) return ElVerdict{false, std::make_pair(x, y), why};
        }
    }
    return {};
}

// Cell labels for a poset generated by a hook diagram, and the edge labels
// they induce (the label of the cell that moves).
struct HookDecoration {
    std::vector<std::map<Cell, int>> cell_labels;
    EdgeLabeling edges;
    bool one_row_drops = true;  // every cover moves its cell exactly one row
};

inline HookDecoration decorate_hook_poset(const KohnertPoset& kp) {
    const Diagram& top = kp[kp.generator];
    if (!is_hook(top)) throw PreconditionError("top diagram is not a hook diagram");
    if (maximal_elements(kp.order).size() != 1) throw PreconditionError("poset has several maximal elements");

    HookDecoration out;
    out.cell_labels.resize(kp.size());
    const std::vector<int> cols = top.columns();
    const int m = static_cast<int>(cols.size());
    auto& top_labels = out.cell_labels[kp.generator];
    for (int j = 1; j < m; ++j) top_labels[Cell{top.column(cols[j - 1]).front(), cols[j - 1]}] = j;
    std::vector<int> star = top.column(cols.back());
    std::reverse(star.begin(), star.end());
    for (std::size_t i = 0; i < star.size(); ++i)
        top_labels[Cell{star[i], cols.back()}] = m + static_cast<int>(i);

    std::vector<bool> done(kp.size(), false);
    done[kp.generator] = true;
    std::vector<Id> queue{kp.generator};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const Id upper = queue[h];
        for (Id lower : kp.order.lower_covers(upper)) {
            auto mv = single_move_between(kp[upper], kp[lower]);
            if (!mv) throw std::logic_error("cover edge is not a single Kohnert move");
            if (mv->from.row - mv->to.row != 1) out.one_row_drops = false;
            std::map<Cell, int> labels = out.cell_labels[upper];
            const int l = labels.at(mv->from);
            labels.erase(mv->from);
            labels[mv->to] = l;
            out.edges.set({lower, upper}, l);
            if (!done[lower]) {
                done[lower] = true;
                out.cell_labels[lower] = std::move(labels);
                queue.push_back(lower);
            } else if (out.cell_labels[lower] != labels) {
                throw std::logic_error("cell decoration is inconsistent at " + to_string(kp[lower]));
            }
        }
    }
    return out;
}

inline EdgeLabeling el_labeling_hook(const KohnertPoset& kp) { return decorate_hook_poset(kp).edges; }

}  // namespace kohnert
