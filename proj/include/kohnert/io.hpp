#pragma once

#include <cctype>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kohnert/classify.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/shellability.hpp"

namespace kohnert {

using json = nlohmann::json;

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace detail

// Top row first; 'X' marks a cell and '.' an empty position. Blank lines
// before or after the grid are ignored.
inline Diagram parse_grid(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    std::size_t first = 0;
    while (first < lines.size() && lines[first].empty()) ++first;
    std::vector<Cell> cells;
    const int rows = static_cast<int>(lines.size() - first);
    for (std::size_t i = first; i < lines.size(); ++i) {
        const int row = rows - static_cast<int>(i - first);
        for (std::size_t j = 0; j < lines[i].size(); ++j) {
            const char ch = lines[i][j];
            if (ch == 'X' || ch == 'x') {
                cells.push_back(Cell{row, static_cast<int>(j) + 1});
            } else if (ch != '.') {
                throw ParseError(std::string("unexpected character '") + ch + "' in grid line " +
                                 std::to_string(i + 1));
            }
        }
    }
    return Diagram(std::move(cells));
}

inline std::string render_grid(const Diagram& d) {
    if (d.empty()) return ".\n";
    const int w = d.max_col();
    std::string out;
    for (int r = d.max_row(); r >= 1; --r) {
        std::string line(static_cast<std::size_t>(w), '.');
        for (int c : d.row(r)) line[static_cast<std::size_t>(c - 1)] = 'X';
        out += line + "\n";
    }
    return out;
}

inline json to_json(const Diagram& d) {
    json cells = json::array();
    for (const Cell& c : d) cells.push_back({c.row, c.col});
    return json{{"cells", cells}};
}

inline Diagram diagram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
        throw ParseError("diagram JSON needs a \"cells\" array");
    std::vector<Cell> cells;
    for (const auto& c : j["cells"]) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
            throw ParseError("each cell must be a [row, col] pair of integers");
        const int r = c[0].get<int>(), col = c[1].get<int>();
        if (r < 1 || col < 1) throw ParseError("cell coordinates must be positive");
        cells.push_back(Cell{r, col});
    }
    return Diagram(std::move(cells));
}

// "0 3 3", "0,3,3" or "(0,3,3)".
inline std::optional<WeakComposition> parse_composition(const std::string& text) {
    static const std::regex shape(R"(^\(?\s*(\d+(\s*[,\s]\s*\d+)*)?\s*\)?$)");
    const std::string t = detail::trim(text);
    if (t.empty() || !std::regex_match(t, shape)) return std::nullopt;
    std::vector<int> parts;
    std::string digits;
    for (char ch : t + " ") {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
        } else if (!digits.empty()) {
            if (digits.size() > 6) throw ParseError("composition entry too large");
            parts.push_back(std::stoi(digits));
            digits.clear();
        }
    }
    return WeakComposition(std::move(parts));
}

inline std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        item = detail::trim(item);
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw ParseError("bad integer '" + item + "'");
        } catch (const std::logic_error&) {
            throw ParseError("bad integer '" + item + "'");
        }
    }
    return out;
}

// A parsed command-line input: always a diagram, plus where it came from.
struct Input {
    Diagram diagram;
    std::optional<WeakComposition> composition;
    std::optional<HookSpec> hook;
};

inline Input input_from_composition(const WeakComposition& a) { return Input{key_diagram(a), a, std::nullopt}; }
inline Input input_from_hook(const HookSpec& h) { return Input{hook_generator(h), std::nullopt, h}; }

// A line of integers is a weak composition, '{' starts JSON, anything else is a grid.
inline Input parse_input(const std::string& text) {
    const std::string t = detail::trim(text);
    if (!t.empty() && t.front() == '{') {
        json j;
        try {
            j = json::parse(t);
        } catch (const json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        if (j.is_object() && j.contains("composition")) {
            if (!j["composition"].is_array()) throw ParseError("\"composition\" must be an array");
            std::vector<int> parts;
            for (const auto& x : j["composition"]) {
                if (!x.is_number_integer() || x.get<int>() < 0) throw ParseError("composition entries must be nonnegative integers");
                parts.push_back(x.get<int>());
            }
            return input_from_composition(WeakComposition(std::move(parts)));
        }
        return Input{diagram_from_json(j), std::nullopt, std::nullopt};
    }
    if (t.find('\n') == std::string::npos) {
        if (auto a = parse_composition(t)) return input_from_composition(*a);
    }
    return Input{parse_grid(text), std::nullopt, std::nullopt};
}

inline json to_json(const KohnertPolynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.graded_lex()) {
        json exps = json::object();
        for (auto [var, e] : m.exponents()) exps[std::to_string(var)] = e;
        terms.push_back({{"exponents", exps}, {"coeff", c}});
    }
    return json{{"terms", terms}};
}

inline json to_json(const PatternHit& h) {
    json j{{"kind", std::string(to_string(h.kind()))}, {"indices", h.indices()}};
    if (h.element()) j["element"] = to_json(*h.element());
    if (h.kind() == PatternKind::strucblock) j["two_row_case"] = h.two_row_case();
    return j;
}

inline json to_json(const KohnertPoset& kp, const EdgeLabeling* labels = nullptr) {
    json elements = json::array();
    for (const Diagram& d : kp.elements) elements.push_back(to_json(d));
    json covers = json::array();
    json labs = json::array();
    for (const Edge& e : kp.order.covers()) {
        covers.push_back({e.lower, e.upper});
        if (labels) labs.push_back(labels->at(e));
    }
    json j{{"elements", elements}, {"covers", covers}};
    if (labels) j["labels"] = labs;
    return j;
}

// Hasse diagram drawn bottom to top; nodes show their grids.
inline std::string to_dot(const KohnertPoset& kp, const EdgeLabeling* labels = nullptr) {
    std::string out = "digraph kohnert {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (Id i = 0; i < kp.size(); ++i) {
        std::string grid = render_grid(kp[i]);
        std::string label;
        for (char ch : grid) label += ch == '\n' ? std::string("\\l") : std::string(1, ch);
        out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (const Edge& e : kp.order.covers()) {
        out += "  n" + std::to_string(e.lower) + " -> n" + std::to_string(e.upper);
        if (labels) out += " [label=\"" + std::to_string(labels->at(e)) + "\"]";
        out += ";\n";
    }
    return out + "}\n";
}

}  // namespace kohnert
