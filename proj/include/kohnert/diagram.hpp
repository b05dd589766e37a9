#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "kohnert/errors.hpp"

namespace kohnert {

// Rows count from the bottom, columns from the left; both start at 1.
struct Cell {
    int row = 1;
    int col = 1;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A finite set of cells kept sorted by (row, col).
class Diagram {
public:
    Diagram() = default;
    Diagram(std::initializer_list<Cell> cells) : Diagram(std::vector<Cell>(cells)) {}
    explicit Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
        for (const Cell& c : cells_) {
            if (c.row < 1 || c.col < 1) {
                throw PreconditionError("cell (" + std::to_string(c.row) + "," +
                                        std::to_string(c.col) + ") is outside the first quadrant");
            }
        }
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    const std::vector<Cell>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    auto begin() const noexcept { return cells_.begin(); }
    auto end() const noexcept { return cells_.end(); }

    bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }
    bool contains(int row, int col) const { return contains(Cell{row, col}); }

    int max_row() const { return cells_.empty() ? 0 : cells_.back().row; }
    int max_col() const {
        int m = 0;
        for (const Cell& c : cells_) m = std::max(m, c.col);
        return m;
    }

    std::vector<int> columns() const {
        std::vector<int> cols;
        for (const Cell& c : cells_) cols.push_back(c.col);
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        return cols;
    }

    // Rows occupied in column `col`, ascending.
    std::vector<int> column(int col) const {
        std::vector<int> rows;
        for (const Cell& c : cells_)
            if (c.col == col) rows.push_back(c.row);
        return rows;
    }

    // Columns occupied in row `row`, ascending.
    std::vector<int> row(int row) const {
        std::vector<int> cols;
        auto lo = std::lower_bound(cells_.begin(), cells_.end(), Cell{row, 0});
        for (; lo != cells_.end() && lo->row == row; ++lo) cols.push_back(lo->col);
        return cols;
    }

    bool row_has_cell_right_of(int row, int col) const {
        auto it = std::upper_bound(cells_.begin(), cells_.end(), Cell{row, col});
        return it != cells_.end() && it->row == row;
    }

    std::size_t hash() const {
        std::size_t seed = cells_.size();
        for (const Cell& c : cells_) {
            boost::hash_combine(seed, c.row);
            boost::hash_combine(seed, c.col);
        }
        return seed;
    }

    friend bool operator==(const Diagram&, const Diagram&) = default;
    friend auto operator<=>(const Diagram&, const Diagram&) = default;

private:
    std::vector<Cell> cells_;
};

struct DiagramHash {
    std::size_t operator()(const Diagram& d) const { return d.hash(); }
};

inline std::string to_string(const Diagram& d) {
    std::string s = "{";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(d.cells()[i].row) + "," + std::to_string(d.cells()[i].col) + ")";
    }
    return s + "}";
}

class WeakComposition {
public:
    WeakComposition() = default;
    WeakComposition(std::initializer_list<int> parts) : WeakComposition(std::vector<int>(parts)) {}
    explicit WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw PreconditionError("weak composition entries must be nonnegative");
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    int max() const { return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end()); }
    int min() const { return parts_.empty() ? 0 : *std::min_element(parts_.begin(), parts_.end()); }
    int total() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    // Entries [begin, end) as a new composition (0-based).
    WeakComposition slice(std::size_t begin, std::size_t end) const {
        return WeakComposition(std::vector<int>(parts_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                parts_.begin() + static_cast<std::ptrdiff_t>(end)));
    }

    // Swap the entries at 1-based positions i and j.
    WeakComposition exchanged(std::size_t i, std::size_t j) const {
        if (i < 1 || j < 1 || i > parts_.size() || j > parts_.size())
            throw PreconditionError("exchange index out of range");
        auto p = parts_;
        std::swap(p[i - 1], p[j - 1]);
        return WeakComposition(std::move(p));
    }

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
    friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

private:
    std::vector<int> parts_;
};

inline std::string to_string(const WeakComposition& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

// Parameters of the generator H(r1, r2; C).
class HookSpec {
public:
    HookSpec(int r1, int r2, std::vector<int> columns) : r1_(r1), r2_(r2), columns_(std::move(columns)) {
        std::sort(columns_.begin(), columns_.end());
        columns_.erase(std::unique(columns_.begin(), columns_.end()), columns_.end());
        if (r1_ < 1 || r2_ < r1_) throw PreconditionError("hook rows must satisfy 1 <= r1 <= r2");
        if (columns_.empty()) throw PreconditionError("hook column set must be nonempty");
        if (columns_.front() < 1) throw PreconditionError("hook columns must be positive");
    }

    int r1() const noexcept { return r1_; }
    int r2() const noexcept { return r2_; }
    const std::vector<int>& columns() const noexcept { return columns_; }
    int max_column() const { return columns_.back(); }

    friend bool operator==(const HookSpec&, const HookSpec&) = default;

private:
    int r1_;
    int r2_;
    std::vector<int> columns_;
};

inline std::string to_string(const HookSpec& h) {
    std::string s = "H(" + std::to_string(h.r1()) + "," + std::to_string(h.r2()) + ";{";
    for (std::size_t i = 0; i < h.columns().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(h.columns()[i]);
    }
    return s + "})";
}

// Sparse monomial in x1, x2, ...; zero exponents are never stored.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::map<int, int> exponents) {
        for (auto [var, e] : exponents) {
            if (var < 1 || e < 0) throw PreconditionError("invalid monomial exponent");
            if (e > 0) exps_[var] = e;
        }
    }

    const std::map<int, int>& exponents() const noexcept { return exps_; }
    int exponent(int var) const {
        auto it = exps_.find(var);
        return it == exps_.end() ? 0 : it->second;
    }
    int degree() const {
        int d = 0;
        for (auto [v, e] : exps_) d += e;
        return d;
    }
    void multiply_var(int var, int times = 1) {
        if (times > 0) exps_[var] += times;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::map<int, int> exps_;
};

// Moves the rightmost cell of row r down to the first empty spot in its column.
// Returns nothing when the row is empty or the column below is full.
inline std::optional<Diagram> kohnert_move(const Diagram& d, int r) {
    if (r < 1) throw PreconditionError("row index must be positive");
    std::vector<int> cols = d.row(r);
    if (cols.empty()) return std::nullopt;
    const int c = cols.back();
    int target = r - 1;
    while (target >= 1 && d.contains(target, c)) --target;
    if (target < 1) return std::nullopt;
    std::vector<Cell> cells;
    cells.reserve(d.size());
    for (const Cell& x : d)
        if (!(x.row == r && x.col == c)) cells.push_back(x);
    cells.push_back(Cell{target, c});
    return Diagram(std::move(cells));
}

// Closure under Kohnert moves in BFS discovery order, with the move graph.
struct MoveGraph {
    std::vector<Diagram> nodes;
    std::vector<std::vector<std::size_t>> successors;
};

inline MoveGraph explore_closure(const Diagram& d, std::size_t budget = kDefaultClosureBudget) {
    MoveGraph g;
    std::unordered_map<Diagram, std::size_t, DiagramHash> index;
    index.emplace(d, 0);
    g.nodes.push_back(d);
    g.successors.emplace_back();
    for (std::size_t head = 0; head < g.nodes.size(); ++head) {
        std::vector<int> rows;
        for (const Cell& c : g.nodes[head].cells())
            if (rows.empty() || rows.back() != c.row) rows.push_back(c.row);
        for (int r : rows) {
            auto next = kohnert_move(g.nodes[head], r);
            if (!next) continue;
            auto [it, inserted] = index.emplace(*next, g.nodes.size());
            if (inserted) {
                if (g.nodes.size() >= budget) throw BudgetExceeded("closure budget exceeded", g.nodes.size());
                g.nodes.push_back(std::move(*next));
                g.successors.emplace_back();
            }
            g.successors[head].push_back(it->second);
        }
    }
    return g;
}

// KD(d) in canonical order.
inline std::vector<Diagram> kd_closure(const Diagram& d, std::size_t budget = kDefaultClosureBudget) {
    auto nodes = explore_closure(d, budget).nodes;
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

inline Monomial weight(const Diagram& d) {
    Monomial m;
    for (const Cell& c : d) m.multiply_var(c.row);
    return m;
}

inline Diagram key_diagram(const WeakComposition& a) {
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = 1; j <= a[i]; ++j) cells.push_back(Cell{static_cast<int>(i) + 1, j});
    return Diagram(std::move(cells));
}

// The composition a with key_diagram(a) == d, read up to the top occupied row.
inline std::optional<WeakComposition> key_composition_of(const Diagram& d) {
    std::vector<int> parts;
    for (int r = 1; r <= d.max_row(); ++r) {
        const std::vector<int> cols = d.row(r);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (cols[j] != static_cast<int>(j) + 1) return std::nullopt;
        parts.push_back(static_cast<int>(cols.size()));
    }
    return WeakComposition(std::move(parts));
}

inline Diagram hook_generator(const HookSpec& h) {
    std::vector<Cell> cells;
    for (int c : h.columns()) cells.push_back(Cell{h.r2(), c});
    for (int j = h.r1(); j < h.r2(); ++j) cells.push_back(Cell{j, h.max_column()});
    return Diagram(std::move(cells));
}

inline Diagram hook_min(const HookSpec& h) {
    return hook_generator(HookSpec(1, h.r2() - h.r1() + 1, h.columns()));
}

// Recognizes elements of KD(H(r1,r2;C)) directly from their shape and
// reconstructs one generator. The empty diagram is not a hook.
inline std::optional<HookSpec> hook_spec_of(const Diagram& d) {
    if (d.empty()) return std::nullopt;
    const std::vector<int> cols = d.columns();
    const int cstar = cols.back();
    const std::vector<int> star_rows = d.column(cstar);
    const int star_top = star_rows.back();
    int prev_row = 0;
    int left_top = 0;
    for (std::size_t i = 0; i + 1 < cols.size(); ++i) {
        std::vector<int> rows = d.column(cols[i]);
        if (rows.size() != 1) return std::nullopt;
        if (rows[0] < star_top) return std::nullopt;
        if (i > 0 && rows[0] > prev_row) return std::nullopt;
        prev_row = rows[0];
        left_top = std::max(left_top, rows[0]);
    }
    const int n2 = static_cast<int>(star_rows.size());
    const int r2 = cols.size() > 1 ? left_top : star_top;
    return HookSpec(r2 - n2 + 1, r2, cols);
}

inline bool is_hook(const Diagram& d) { return hook_spec_of(d).has_value(); }

inline Diagram strip_row_one(const Diagram& d) {
    std::vector<Cell> cells;
    for (const Cell& c : d)
        if (c.row != 1) cells.push_back(c);
    return Diagram(std::move(cells));
}

struct Move {
    Cell from;
    Cell to;
};

// The Kohnert move taking d1 to d2, if d2 is a single-move image of d1.
inline std::optional<Move> single_move_between(const Diagram& d1, const Diagram& d2) {
    if (d1.size() != d2.size()) return std::nullopt;
    std::vector<Cell> gone, added;
    std::set_difference(d1.begin(), d1.end(), d2.begin(), d2.end(), std::back_inserter(gone));
    std::set_difference(d2.begin(), d2.end(), d1.begin(), d1.end(), std::back_inserter(added));
    if (gone.size() != 1 || added.size() != 1) return std::nullopt;
    const Move m{gone[0], added[0]};
    if (m.from.col != m.to.col || m.to.row >= m.from.row) return std::nullopt;
    auto image = kohnert_move(d1, m.from.row);
    if (!image || *image != d2) return std::nullopt;
    return m;
}

}  // namespace kohnert
