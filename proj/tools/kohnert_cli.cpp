#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kohnert/kohnert.hpp"

namespace {

using namespace kohnert;
using nlohmann::json;

enum Exit { kOk = 0, kFalse = 1, kUndecided = 2, kInputError = 3 };

struct Options {
    std::string input;
    std::vector<std::string> hook;
    std::string format = "text";
    std::size_t closure_budget = kDefaultClosureBudget;
    std::size_t shelling_budget = kDefaultShellingBudget;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::string which = "bounded,ranked,pure,graded,shellable";
    std::string family;
    SweepBounds bounds;
};

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// A file path, "-" for stdin, or the input itself with '/' separating grid rows.
Input load_input(const Options& o) {
    if (!o.hook.empty()) {
        if (o.hook.size() != 3) throw ParseError("--hook takes r1 r2 c1,c2,...");
        const auto r = parse_int_list(o.hook[0] + "," + o.hook[1]);
        return input_from_hook(HookSpec(r.at(0), r.at(1), parse_int_list(o.hook[2])));
    }
    if (o.input.empty()) throw ParseError("no input given");
    std::string text;
    if (o.input == "-") {
        text = read_all(std::cin);
    } else if (std::filesystem::is_regular_file(o.input)) {
        std::ifstream f(o.input);
        text = read_all(f);
    } else {
        text = o.input;
        if (text.find('{') == std::string::npos) std::replace(text.begin(), text.end(), '/', '\n');
    }
    Input in = parse_input(text);
    if (!in.composition) in.composition = key_composition_of(in.diagram);
    if (!in.hook) in.hook = hook_spec_of(in.diagram);
    return in;
}

void emit(const Options& o, const json& j, const std::string& text) {
    if (o.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string indent(const std::string& grid) {
    std::string out;
    std::istringstream in(grid);
    for (std::string line; std::getline(in, line);) out += "  " + line + "\n";
    return out;
}

int cmd_closure(const Options& o) {
    const Input in = load_input(o);
    const auto elems = kd_closure(in.diagram, o.closure_budget);
    json arr = json::array();
    std::string text = "elements: " + std::to_string(elems.size()) + "\n";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const std::string wt = to_text(weight(elems[i]));
        json e = to_json(elems[i]);
        e["weight"] = wt;
        arr.push_back(e);
        text += "#" + std::to_string(i) + " " + wt + "\n" + indent(render_grid(elems[i]));
    }
    emit(o, json{{"count", elems.size()}, {"elements", arr}}, text);
    return kOk;
}

// A hook labeling when the generator is a hook, else the transported one for pure key diagrams.
std::optional<EdgeLabeling> known_labeling(const Input& in, const KohnertPoset& kp, std::size_t budget) {
    if (in.hook) return el_labeling_hook(kp);
    if (in.composition && is_pure(*in.composition)) return el_labeling_key(kp, *in.composition, budget);
    return std::nullopt;
}

int cmd_poset(const Options& o) {
    const Input in = load_input(o);
    const KohnertPoset kp = build_poset(in.diagram, o.closure_budget);
    if (o.format == "dot") {
        std::cout << to_dot(kp);
        return kOk;
    }
    std::string text = "elements: " + std::to_string(kp.size()) + "\ncovers: " +
                       std::to_string(kp.order.covers().size()) + "\n";
    for (Id i = 0; i < kp.size(); ++i) text += "#" + std::to_string(i) + " " + to_string(kp[i]) + "\n";
    for (const Edge& e : kp.order.covers())
        text += std::to_string(e.lower) + " < " + std::to_string(e.upper) + "\n";
    emit(o, to_json(kp), text);
    return kOk;
}

struct Verdict {
    std::string value;  // true, false, undecided, not-applicable
    json detail = json::object();
    std::string note;
};

Verdict boolean(bool v) { return Verdict{v ? "true" : "false", json::object(), ""}; }

Verdict check_one(const std::string& which, const Input& in, const KohnertPoset& kp, const Options& o) {
    const Poset& p = kp.order;
    if (which == "bounded") {
        Verdict v = boolean(is_bounded(p));
        v.detail = {{"minimal", minimal_elements(p).size()}, {"maximal", maximal_elements(p).size()}};
        v.note = std::to_string(minimal_elements(p).size()) + " minimal, " +
                 std::to_string(maximal_elements(p).size()) + " maximal";
        return v;
    }
    if (which == "ranked") return boolean(is_ranked(p));
    if (which == "pure" || which == "graded") {
        Verdict v = boolean(which == "pure" ? is_pure(p) : is_graded(p));
        std::size_t lo = SIZE_MAX, hi = 0;
        for (const Chain& c : maximal_chains(p)) {
            lo = std::min(lo, c.size());
            hi = std::max(hi, c.size());
        }
        v.detail = {{"shortest_chain", lo}, {"longest_chain", hi}};
        v.note = "maximal chains have " + std::to_string(lo) + " to " + std::to_string(hi) + " elements";
        return v;
    }
    if (which == "shellable") {
        // An EL-labeling that verifies is a shelling certificate and avoids the search.
        if (is_bounded(p))
            if (const auto lab = known_labeling(in, kp, o.closure_budget); lab && verify_el(p, *lab).ok)
                return Verdict{"true", {{"certified_by", "el-labeling"}}, "certified by an EL-labeling"};
        const PosetShellability s = decide_shellable(p, o.shelling_budget);
        Verdict v{std::string(to_string(s.decision)), {{"states", s.states}}, ""};
        if (s.witness) {
            v.detail["interval"] = {{"bottom", to_json(kp[s.witness->first])}, {"top", to_json(kp[s.witness->second])}};
            v.note = "non-shellable interval [" + to_string(kp[s.witness->first]) + ", " +
                     to_string(kp[s.witness->second]) + "]";
        }
        if (s.decision == Decision::undecided) v.note = "shelling budget exhausted";
        return v;
    }
    if (which == "el") {
        if (!is_bounded(p)) return Verdict{"not-applicable", json::object(), "poset is not bounded"};
        const auto lab = known_labeling(in, kp, o.closure_budget);
        if (!lab) return Verdict{"not-applicable", json::object(), "no hook or transported labeling for this input"};
        const ElVerdict e = verify_el(p, *lab);
        Verdict v = boolean(e.ok);
        v.detail = to_json(kp, &*lab);
        if (!e.ok) v.note = e.reason;
        return v;
    }
    throw ParseError("unknown predicate '" + which + "'");
}

int cmd_check(const Options& o) {
    const Input in = load_input(o);
    const KohnertPoset kp = build_poset(in.diagram, o.closure_budget);
    json results = json::object();
    std::string text;
    bool any_false = false, any_open = false;
    std::stringstream ss(o.which);
    for (std::string w; std::getline(ss, w, ',');) {
        if (w.empty()) continue;
        const Verdict v = check_one(w, in, kp, o);
        any_false = any_false || v.value == "false";
        any_open = any_open || v.value == "undecided" || v.value == "not-applicable";
        json r = v.detail;
        r["value"] = v.value;
        if (!v.note.empty()) r["note"] = v.note;
        results[w] = r;
        text += w + ": " + v.value + (v.note.empty() ? "" : " (" + v.note + ")") + "\n";
    }
    emit(o, json{{"diagram", to_json(in.diagram)}, {"results", results}}, text);
    return any_false ? kFalse : any_open ? kUndecided : kOk;
}

json hits_json(const std::vector<PatternHit>& hits) {
    json a = json::array();
    for (const auto& h : hits) a.push_back(to_json(h));
    return a;
}

std::string hits_text(const std::vector<PatternHit>& hits, const std::string& prefix = "hit") {
    std::string s;
    for (const auto& h : hits) {
        s += prefix + ": " + std::string(to_string(h.kind())) + " at (";
        for (std::size_t i = 0; i < h.indices().size(); ++i) s += (i ? "," : "") + std::to_string(h.indices()[i]);
        s += ")";
        if (h.element()) s += " in " + to_string(*h.element());
        s += "\n";
    }
    return s;
}

std::vector<PatternHit> detector_hits(const Diagram& d, std::size_t budget) {
    std::vector<PatternHit> hits;
    if (auto h = detect_strucasc(d, budget)) hits.push_back(*h);
    if (auto h = detect_strucblock(d, budget)) hits.push_back(*h);
    return hits;
}

int cmd_classify(const Options& o) {
    const Input in = load_input(o);
    const Diagram& d = in.diagram;
    std::string family, certified_by = "characterization";
    std::string value;
    std::vector<PatternHit> hits;
    json extra = json::object();
    std::string extra_text;

    const std::vector<int> cols = d.columns();
    const bool onecol = std::all_of(cols.begin(), cols.end(), [&](int c) { return d.column(c).size() <= 1; });
    const bool rows12 = !d.empty() && std::all_of(d.begin(), d.end(), [](const Cell& c) { return c.row > 2; });
    if (in.hook) {
        family = "hook";
        value = "true";
    } else if (in.composition) {
        family = "key";
        const auto& a = *in.composition;
        value = is_pure(a) ? "true" : "false";
        if (auto h = is_pure_composition(a)) hits.push_back(*h);
        const auto conj = conjecture_key_patterns(a);
        const auto mf = key_mf_patterns(a);
        extra["experimental"] = {{"conjecture_hits", hits_json(conj)}};
        extra["multiplicity_free"] = mf.empty();
        extra["mf_hits"] = hits_json(mf);
        extra_text = "multiplicity-free: " + std::string(mf.empty() ? "true" : "false") + "\n" +
                     hits_text(mf, "mf-hit") + hits_text(conj, "experimental-hit");
    } else if (onecol) {
        family = "onecol";
        value = shellable_onecell_columns(d) ? "true" : "false";
    } else if (rows12) {
        family = "rows12";
        value = shellable_rows12_empty(d) ? "true" : "false";
    } else {
        family = "general";
        certified_by = "brute-force";
        value = std::string(to_string(decide_shellable(build_poset(d, o.closure_budget).order, o.shelling_budget).decision));
    }
    if (family != "key" && value == "false") hits = detector_hits(d, o.closure_budget);

    json j{{"family", family},
           {"predicate", "shellable"},
           {"value", value},
           {"hits", hits_json(hits)},
           {"certified_by", certified_by}};
    j.update(extra);
    std::string text = "family: " + family + "\npredicate: shellable\nvalue: " + value + "\ncertified_by: " +
                       certified_by + "\n" + hits_text(hits) + extra_text;
    emit(o, j, text);
    return value == "true" ? kOk : value == "false" ? kFalse : kUndecided;
}

int cmd_poly(const Options& o) {
    const Input in = load_input(o);
    const KohnertPolynomial p = kohnert_polynomial(in.diagram, o.closure_budget);
    const bool mf = is_multiplicity_free(p);
    json j = to_json(p);
    j["multiplicity_free"] = mf;
    emit(o, j, to_text(p) + "\nmultiplicity-free: " + (mf ? "true" : "false") + "\n");
    return kOk;
}

// Exit 1 with a witness of non-shellability, 0 when a shelling exists.
int cmd_witness(const Options& o) {
    const Input in = load_input(o);
    const KohnertPoset kp = build_poset(in.diagram, o.closure_budget);
    const auto hits = detector_hits(in.diagram, o.closure_budget);
    json j{{"hits", hits_json(hits)}};
    std::string text = hits_text(hits);
    std::string value;
    if (auto w = two_chain_witness(kp.order)) {
        j["two_chain"] = {{"bottom", to_json(kp[w->bottom])}, {"top", to_json(kp[w->top])}, {"chains", {w->n1, w->n2}}};
        text += "two-chain interval [" + to_string(kp[w->bottom]) + ", " + to_string(kp[w->top]) + "] with chains of " +
                std::to_string(w->n1) + " and " + std::to_string(w->n2) + "\n";
    }
    if (!hits.empty() || j.contains("two_chain")) {
        value = "false";
    } else {
        const Verdict v = check_one("shellable", in, kp, o);
        value = v.value;
        j.update(v.detail);
        if (!v.note.empty()) text += v.note + "\n";
    }
    j["shellable"] = value;
    emit(o, j, text + "shellable: " + value + "\n");
    return value == "true" ? kOk : value == "false" ? kFalse : kUndecided;
}

int cmd_sweep(const Options& o) {
    const auto fam = family_from_string(o.family);
    if (!fam) throw ParseError("unknown family '" + o.family + "'");
    SweepConfig cfg;
    cfg.closure_budget = o.closure_budget;
    cfg.shelling_budget = o.shelling_budget;
    cfg.jobs = o.jobs;
    cfg.seed = o.seed;
    const SweepReport r = run_sweep(*fam, o.bounds, cfg);
    emit(o, render_json(r), render_text(r));
    return r.disagreements() ? kFalse : r.undecided() ? kUndecided : kOk;
}

int report_error(const Options& o, std::string_view kind, const std::string& msg) {
    if (o.format == "json") std::cout << json{{"error", {{"kind", kind}, {"message", msg}}}}.dump(2) << "\n";
    std::cerr << "error[" << kind << "]: " << msg << "\n";
    return kind == "budget" ? kUndecided : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Kohnert posets: closures, shellability checks, classification and polynomials"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto common = [&](CLI::App* sub, bool takes_input) {
        if (takes_input) {
            sub->add_option("input", o.input, "file, '-' for stdin, or inline text ('/' separates grid rows)");
            sub->add_option("--hook", o.hook, "hook generator: r1 r2 c1,c2,...")->expected(3);
        }
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--closure-budget", o.closure_budget, "maximum closure size")->check(CLI::PositiveNumber);
        sub->add_option("--shelling-budget", o.shelling_budget, "maximum shelling search states")
            ->check(CLI::PositiveNumber);
    };

    auto* closure = app.add_subcommand("closure", "list every diagram reachable by Kohnert moves");
    auto* poset = app.add_subcommand("poset", "Hasse diagram of the Kohnert poset");
    auto* check = app.add_subcommand("check", "decide poset predicates");
    auto* classify = app.add_subcommand("classify", "shellability by family characterization");
    auto* poly = app.add_subcommand("poly", "Kohnert polynomial and multiplicity");
    auto* witness = app.add_subcommand("witness", "find a witness of non-shellability");
    auto* sweep = app.add_subcommand("sweep", "cross-validate characterizations over a family");
    for (auto* s : {closure, poset, check, classify, poly, witness}) common(s, true);
    common(sweep, false);
    check->add_option("--which", o.which, "comma list of bounded,ranked,pure,graded,shellable,el");

    sweep->add_option("family", o.family, "onecol, rows12, key, hooks or all-diagrams")->required();
    sweep->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", o.seed, "processing order seed");
    sweep->add_option("--rows", o.bounds.rows, "box height")->check(CLI::PositiveNumber);
    sweep->add_option("--cols", o.bounds.cols, "box width")->check(CLI::PositiveNumber);
    sweep->add_option("--max-cells", o.bounds.max_cells, "cells per diagram")->check(CLI::NonNegativeNumber);
    sweep->add_option("--length", o.bounds.length, "composition length")->check(CLI::NonNegativeNumber);
    sweep->add_option("--max-entry", o.bounds.max_entry, "largest composition entry")->check(CLI::NonNegativeNumber);
    sweep->add_option("--hook-max-row", o.bounds.hook_max_row, "largest r2")->check(CLI::PositiveNumber);
    sweep->add_option("--hook-max-columns", o.bounds.hook_max_columns, "largest |C|")->check(CLI::PositiveNumber);
    sweep->add_option("--hook-max-col", o.bounds.hook_max_col, "largest column in C")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*closure) return cmd_closure(o);
        if (*poset) return cmd_poset(o);
        if (*check) return cmd_check(o);
        if (*classify) return cmd_classify(o);
        if (*poly) return cmd_poly(o);
        if (*witness) return cmd_witness(o);
        if (*sweep) return cmd_sweep(o);
    } catch (const Error& e) {
        return report_error(o, to_string(e.kind()), e.what());
    } catch (const std::invalid_argument& e) {
        return report_error(o, "parse", e.what());
    } catch (const std::out_of_range& e) {
        return report_error(o, "parse", e.what());
    }
    return kInputError;
}
