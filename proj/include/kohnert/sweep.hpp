#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kohnert/classify.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/shellability.hpp"

namespace kohnert {

enum class Family { onecol, rows12, key, hooks, all_diagrams };

inline std::string_view to_string(Family f) {
    switch (f) {
        case Family::onecol: return "onecol";
        case Family::rows12: return "rows12";
        case Family::key: return "key";
        case Family::hooks: return "hooks";
        case Family::all_diagrams: return "all-diagrams";
    }
    return "?";
}

inline std::optional<Family> family_from_string(std::string_view s) {
    for (Family f : {Family::onecol, Family::rows12, Family::key, Family::hooks, Family::all_diagrams})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

struct SweepBounds {
    int rows = 4;       // diagram box height
    int cols = 4;       // diagram box width
    int max_cells = 5;  // cells per diagram
    int length = 4;     // composition length
    int max_entry = 3;  // composition entries
    int hook_max_row = 4;
    int hook_max_columns = 3;
    int hook_max_col = 5;
};

struct SweepConfig {
    std::size_t closure_budget = kDefaultClosureBudget;
    std::size_t shelling_budget = kDefaultShellingBudget;
    unsigned jobs = 1;
    std::uint64_t seed = 0;  // only permutes the processing order
};

enum class CheckStatus { pass, fail, undecided };

inline std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::undecided: return "undecided";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    bool experimental = false;
};

struct InstanceResult {
    std::string id;
    std::vector<CheckResult> checks;
    std::string error;  // set when the instance could not be processed
};

struct SweepReport {
    Family family = Family::onecol;
    SweepBounds bounds;
    std::vector<InstanceResult> instances;

    struct Tally {
        std::size_t pass = 0, fail = 0, undecided = 0;
        bool experimental = false;
    };

    std::map<std::string, Tally> tallies() const {
        std::map<std::string, Tally> t;
        for (const auto& inst : instances)
            for (const auto& c : inst.checks) {
                auto& x = t[c.name];
                x.experimental = c.experimental;
                if (c.status == CheckStatus::pass) ++x.pass;
                else if (c.status == CheckStatus::fail) ++x.fail;
                else ++x.undecided;
            }
        return t;
    }

    // Failures of non-experimental checks, plus instances that errored.
    std::size_t disagreements() const {
        std::size_t n = 0;
        for (const auto& inst : instances) {
            if (!inst.error.empty()) ++n;
            for (const auto& c : inst.checks)
                if (!c.experimental && c.status == CheckStatus::fail) ++n;
        }
        return n;
    }

    std::size_t undecided() const {
        std::size_t n = 0;
        for (const auto& inst : instances)
            for (const auto& c : inst.checks)
                if (c.status == CheckStatus::undecided) ++n;
        return n;
    }
};

// All maximal chains of each interval carry the same multiset of labels, and
// no two of them carry the same sequence.
inline bool interval_label_multisets_agree(const Poset& p, const EdgeLabeling& lab) {
    const std::size_t n = p.size();
    std::vector<std::optional<std::vector<int>>> multiset(n);
    std::vector<std::set<std::vector<int>>> sequences(n);
    std::vector<int> labels;
    bool ok = true;
    for (Id x = 0; x < n && ok; ++x) {
        for (Id y = 0; y < n; ++y) {
            multiset[y].reset();
            sequences[y].clear();
        }
        auto dfs = [&](auto&& self, Id z) -> void {
            for (Id w : p.upper_covers(z)) {
                if (!ok) return;
                labels.push_back(lab.at({z, w}));
                auto sorted = labels;
                std::sort(sorted.begin(), sorted.end());
                if (!multiset[w]) multiset[w] = sorted;
                else if (*multiset[w] != sorted) ok = false;
                if (!sequences[w].insert(labels).second) ok = false;
                self(self, w);
                labels.pop_back();
            }
        };
        dfs(dfs, x);
    }
    return ok;
}

namespace detail {

// Diagrams inside the rows x cols box with at most max_cells cells, canonical order.
inline std::vector<Diagram> box_diagrams(int rows, int cols, int max_cells, int min_row = 1) {
    std::vector<Cell> spots;
    for (int r = min_row; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) spots.push_back(Cell{r, c});
    std::vector<Diagram> out;
    std::vector<Cell> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == max_cells) return;
        for (std::size_t i = from; i < spots.size(); ++i) {
            cur.push_back(spots[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool one_cell_per_column(const Diagram& d) {
    for (int c : d.columns())
        if (d.column(c).size() > 1) return false;
    return true;
}

inline bool rows12_empty(const Diagram& d) {
    for (const Cell& c : d)
        if (c.row <= 2) return false;
    return true;
}

class Checker {
public:
    explicit Checker(const SweepConfig& cfg) : cfg_(cfg) {}

    void add(std::string name, CheckStatus s, bool experimental = false) {
        out_.checks.push_back(CheckResult{std::move(name), s, experimental});
    }
    void expect(std::string name, bool ok) { add(std::move(name), ok ? CheckStatus::pass : CheckStatus::fail); }
    // A check whose truth depends on a possibly undecided brute-force answer.
    void compare(std::string name, Decision brute, bool predicted, bool experimental = false) {
        if (brute == Decision::undecided) add(std::move(name), CheckStatus::undecided, experimental);
        else add(std::move(name), (brute == Decision::yes) == predicted ? CheckStatus::pass : CheckStatus::fail,
                 experimental);
    }
    // Certified non-shellability claims must meet a brute-force "no".
    void sound(std::string name, bool claims_non_shellable, const std::function<Decision()>& brute) {
        if (!claims_non_shellable) {
            add(std::move(name), CheckStatus::pass);
            return;
        }
        const Decision d = brute();
        add(std::move(name), d == Decision::no ? CheckStatus::pass
                                               : (d == Decision::undecided ? CheckStatus::undecided : CheckStatus::fail));
    }

    InstanceResult& result() { return out_; }

    const SweepConfig& cfg_;
    InstanceResult out_;
};

// Lazily computed brute-force shellability of one poset.
class Brute {
public:
    Brute(const Poset& p, std::size_t budget) : p_(p), budget_(budget) {}
    Decision operator()() {
        if (!d_) d_ = decide_shellable(p_, budget_).decision;
        return *d_;
    }

private:
    const Poset& p_;
    std::size_t budget_;
    std::optional<Decision> d_;
};

inline void diagram_checks(Checker& ck, const Diagram& d, const KohnertPoset& kp, Brute& brute, bool strict_family) {
    const SweepConfig& cfg = ck.cfg_;
    const bool onecol = one_cell_per_column(d);
    const bool rows12 = rows12_empty(d) && !d.empty();
    if (onecol || rows12) {
        const bool predicted = onecol ? shellable_onecell_columns(d) : shellable_rows12_empty(d);
        ck.compare("characterization", brute(), predicted);
        const bool mf = is_multiplicity_free(kohnert_polynomial(d, cfg.closure_budget));
        ck.compare("multiplicity-free", brute(), mf);
    } else if (strict_family) {
        ck.expect("precondition", false);
    }
    if (onecol) ck.expect("strip-isomorphism", are_isomorphic(kp.order, build_poset(strip_row_one(d), cfg.closure_budget).order));
    const bool hit = detect_strucasc(d, cfg.closure_budget) || detect_strucblock(d, cfg.closure_budget);
    ck.sound("detector-soundness", hit, std::ref(brute));
    ck.sound("two-chain-soundness", two_chain_witness(kp.order).has_value(), std::ref(brute));
}

inline InstanceResult check_diagram(const Diagram& d, Family family, const SweepConfig& cfg) {
    Checker ck(cfg);
    ck.result().id = to_string(d);
    const KohnertPoset kp = build_poset(d, cfg.closure_budget);
    Brute brute(kp.order, cfg.shelling_budget);
    diagram_checks(ck, d, kp, brute, family != Family::all_diagrams);
    return ck.result();
}

inline InstanceResult check_composition(const WeakComposition& a, const SweepConfig& cfg) {
    Checker ck(cfg);
    ck.result().id = to_string(a);
    const Diagram d = key_diagram(a);
    const KohnertPoset kp = build_poset(d, cfg.closure_budget);
    Brute brute(kp.order, cfg.shelling_budget);
    const bool pure_a = is_pure(a);
    const bool pure_p = is_pure(kp.order);

    ck.expect("bounded", is_bounded(kp.order));
    ck.expect("pure-iff-pure-poset", pure_a == pure_p);
    if (pure_p) ck.compare("pure-iff-shellable", brute(), pure_a);
    else ck.expect("pure-iff-shellable", !pure_a);
    if (pure_a) {
        const ProductSplit split = split_into_product(kp, a, cfg.closure_budget);
        ck.expect("product-split", split.certified && are_isomorphic(kp.order, product_of_blocks(split)));
        ck.expect("transported-el", verify_el(kp.order, el_labeling_key(kp, a, cfg.closure_budget)).ok);
    }
    const bool mf = is_multiplicity_free(kohnert_polynomial(d, cfg.closure_budget));
    const auto mf_hits = key_mf_patterns(a, 1);
    ck.expect("mf-patterns", mf_hits.empty() == mf);
    ck.expect("pure-avoids-mf-patterns", !pure_a || mf_hits.empty());
    ck.sound("necessary-patterns", !keynecrank_patterns(a, 1).empty(), std::ref(brute));

    bool exchange_ok = true;
    for (std::size_t i = 1; i <= a.size(); ++i)
        for (std::size_t j = i + 1; j <= a.size(); ++j)
            if (a[i - 1] < a[j - 1] && !kp.find(key_diagram(a.exchanged(i, j)))) exchange_ok = false;
    ck.expect("exchange-in-closure", exchange_ok);

    const bool hit = detect_strucasc(d, cfg.closure_budget) || detect_strucblock(d, cfg.closure_budget);
    ck.sound("detector-soundness", hit, std::ref(brute));
    ck.sound("two-chain-soundness", two_chain_witness(kp.order).has_value(), std::ref(brute));
    ck.compare("conjecture", brute(), conjecture_key_patterns(a, 1).empty(), true);
    return ck.result();
}

inline InstanceResult check_hook(const HookSpec& h, const SweepConfig& cfg) {
    Checker ck(cfg);
    ck.result().id = to_string(h);
    const Diagram d = hook_generator(h);
    const KohnertPoset kp = build_poset(d, cfg.closure_budget);
    Brute brute(kp.order, cfg.shelling_budget);

    const bool bounded = is_bounded(kp.order);
    ck.expect("bounded-min", bounded && kp[minimal_elements(kp.order).front()] == hook_min(h));
    bool all_hooks = true;
    for (const Diagram& e : kp.elements) all_hooks = all_hooks && is_hook(e);
    ck.expect("all-elements-hooks", all_hooks);
    const HookDecoration deco = decorate_hook_poset(kp);
    ck.expect("one-row-drops", deco.one_row_drops);
    ck.expect("el", bounded && verify_el(kp.order, deco.edges).ok);
    ck.expect("label-multisets", interval_label_multisets_agree(kp.order, deco.edges));
    ck.compare("shellable", brute(), true);
    ck.expect("detectors-absent", !detect_strucasc(d, cfg.closure_budget) && !detect_strucblock(d, cfg.closure_budget));
    ck.expect("multiplicity-free", is_multiplicity_free(kohnert_polynomial(d, cfg.closure_budget)));
    return ck.result();
}

template <class T, class F>
std::vector<InstanceResult> run_parallel(const std::vector<T>& items, const SweepConfig& cfg, F&& work) {
    std::vector<InstanceResult> results(items.size());
    std::vector<std::size_t> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (cfg.seed != 0) {
        std::mt19937_64 rng(cfg.seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < order.size(); k = next++) {
            const std::size_t i = order[k];
            try {
                results[i] = work(items[i]);
            } catch (const std::exception& e) {
                results[i].error = e.what();
            }
        }
    };
    const unsigned jobs = std::max(1U, cfg.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace detail

inline std::vector<Diagram> family_diagrams(Family f, const SweepBounds& b) {
    std::vector<Diagram> out;
    if (f == Family::onecol) {
        for (const Diagram& d : detail::box_diagrams(b.rows, b.cols, std::min(b.max_cells, b.cols)))
            if (detail::one_cell_per_column(d)) out.push_back(d);
    } else if (f == Family::rows12) {
        for (const Diagram& d : detail::box_diagrams(b.rows, b.cols, b.max_cells, 3))
            if (!d.empty()) out.push_back(d);
    } else if (f == Family::all_diagrams) {
        out = detail::box_diagrams(b.rows, b.cols, b.max_cells);
    }
    return out;
}

inline std::vector<WeakComposition> family_compositions(const SweepBounds& b) {
    std::vector<WeakComposition> out;
    std::vector<int> cur(static_cast<std::size_t>(std::max(0, b.length)), 0);
    while (true) {
        out.emplace_back(cur);
        std::size_t i = cur.size();
        while (i > 0 && cur[i - 1] == b.max_entry) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

inline std::vector<HookSpec> family_hooks(const SweepBounds& b) {
    std::vector<HookSpec> out;
    const int k = b.hook_max_col;
    for (int r2 = 1; r2 <= b.hook_max_row; ++r2)
        for (int r1 = 1; r1 <= r2; ++r1)
            for (int mask = 1; mask < (1 << k); ++mask) {
                if (__builtin_popcount(static_cast<unsigned>(mask)) > b.hook_max_columns) continue;
                std::vector<int> cols;
                for (int c = 0; c < k; ++c)
                    if (mask >> c & 1) cols.push_back(c + 1);
                out.emplace_back(r1, r2, cols);
            }
    return out;
}

inline SweepReport run_sweep(Family f, const SweepBounds& b, const SweepConfig& cfg) {
    SweepReport rep;
    rep.family = f;
    rep.bounds = b;
    if (f == Family::key) {
        rep.instances = detail::run_parallel(family_compositions(b), cfg,
                                             [&](const WeakComposition& a) { return detail::check_composition(a, cfg); });
    } else if (f == Family::hooks) {
        rep.instances = detail::run_parallel(family_hooks(b), cfg,
                                             [&](const HookSpec& h) { return detail::check_hook(h, cfg); });
    } else {
        rep.instances = detail::run_parallel(family_diagrams(f, b), cfg,
                                             [&](const Diagram& d) { return detail::check_diagram(d, f, cfg); });
    }
    return rep;
}

inline std::string bounds_text(Family f, const SweepBounds& b) {
    switch (f) {
        case Family::key:
            return "length=" + std::to_string(b.length) + " max_entry=" + std::to_string(b.max_entry);
        case Family::hooks:
            return "max_row=" + std::to_string(b.hook_max_row) + " max_columns=" + std::to_string(b.hook_max_columns) +
                   " max_col=" + std::to_string(b.hook_max_col);
        default:
            return "rows=" + std::to_string(b.rows) + " cols=" + std::to_string(b.cols) +
                   " max_cells=" + std::to_string(b.max_cells);
    }
}

inline std::string render_text(const SweepReport& r) {
    std::string s = "family: " + std::string(to_string(r.family)) + "\n";
    s += "bounds: " + bounds_text(r.family, r.bounds) + "\n";
    s += "instances: " + std::to_string(r.instances.size()) + "\n";
    for (const auto& [name, t] : r.tallies()) {
        s += std::string(t.experimental ? "experimental " : "check ") + name + ": pass=" + std::to_string(t.pass) +
             " fail=" + std::to_string(t.fail) + " undecided=" + std::to_string(t.undecided) + "\n";
    }
    for (const auto& inst : r.instances) {
        if (!inst.error.empty()) s += "ERROR " + inst.id + ": " + inst.error + "\n";
        for (const auto& c : inst.checks)
            if (c.status != CheckStatus::pass)
                s += std::string(c.experimental ? "experimental-" : "") + std::string(to_string(c.status)) + " " +
                     c.name + " " + inst.id + "\n";
    }
    s += "disagreements: " + std::to_string(r.disagreements()) + "\n";
    s += "undecided: " + std::to_string(r.undecided()) + "\n";
    return s;
}

inline nlohmann::json render_json(const SweepReport& r) {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, t] : r.tallies())
        checks[name] = {{"pass", t.pass}, {"fail", t.fail}, {"undecided", t.undecided}, {"experimental", t.experimental}};
    nlohmann::json issues = nlohmann::json::array();
    for (const auto& inst : r.instances) {
        if (!inst.error.empty()) issues.push_back({{"instance", inst.id}, {"error", inst.error}});
        for (const auto& c : inst.checks)
            if (c.status != CheckStatus::pass)
                issues.push_back({{"instance", inst.id},
                                  {"check", c.name},
                                  {"status", std::string(to_string(c.status))},
                                  {"experimental", c.experimental}});
    }
    return {{"family", std::string(to_string(r.family))},
            {"bounds", bounds_text(r.family, r.bounds)},
            {"instances", r.instances.size()},
            {"checks", checks},
            {"issues", issues},
            {"disagreements", r.disagreements()},
            {"undecided", r.undecided()}};
}

}  // namespace kohnert
