#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"

namespace kohnert {

class KohnertPolynomial {
public:
    void add(const Monomial& m, long long coeff = 1) {
        if (coeff <= 0) throw PreconditionError("coefficients must be positive");
        terms_[m] += coeff;
    }

    const std::map<Monomial, long long>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    long long coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }
    long long coefficient_sum() const {
        long long s = 0;
        for (const auto& [m, c] : terms_) s += c;
        return s;
    }

    // Terms by descending degree, then descending exponent of x1, x2, ...
    std::vector<std::pair<Monomial, long long>> graded_lex() const {
        std::vector<std::pair<Monomial, long long>> out(terms_.begin(), terms_.end());
        int vars = 0;
        for (const auto& [m, c] : terms_)
            if (!m.exponents().empty()) vars = std::max(vars, m.exponents().rbegin()->first);
        auto key = [vars](const Monomial& m) {
            std::vector<int> v{m.degree()};
            for (int i = 1; i <= vars; ++i) v.push_back(m.exponent(i));
            return v;
        };
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a.first) > key(b.first); });
        return out;
    }

    friend bool operator==(const KohnertPolynomial&, const KohnertPolynomial&) = default;

private:
    std::map<Monomial, long long> terms_;
};

inline KohnertPolynomial kohnert_polynomial(const Diagram& d, std::size_t closure_budget = kDefaultClosureBudget) {
    KohnertPolynomial p;
    for (const Diagram& t : explore_closure(d, closure_budget).nodes) p.add(weight(t));
    return p;
}

inline bool is_multiplicity_free(const KohnertPolynomial& p) {
    for (const auto& [m, c] : p.terms())
        if (c != 1) return false;
    return true;
}

inline std::string to_text(const Monomial& m) {
    std::string s;
    for (auto [var, e] : m.exponents()) {
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(var);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

inline std::string to_text(const KohnertPolynomial& p) {
    std::string s;
    for (const auto& [m, c] : p.graded_lex()) {
        if (!s.empty()) s += " + ";
        if (m.exponents().empty()) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += to_text(m);
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace kohnert
