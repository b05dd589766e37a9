#include <gtest/gtest.h>

#include "kohnert/polynomial.hpp"
#include "oracle.hpp"

using namespace kohnert;

namespace {

Monomial mono(std::map<int, int> e) { return Monomial(std::move(e)); }

}  // namespace

TEST(Polynomial, TwoCellExample) {
    const KohnertPolynomial p = kohnert_polynomial(Diagram{{2, 1}, {3, 2}});
    EXPECT_EQ(p.term_count(), 5U);
    EXPECT_EQ(p.coefficient(mono({{2, 1}, {3, 1}})), 1);
    EXPECT_EQ(p.coefficient(mono({{2, 2}})), 1);
    EXPECT_EQ(p.coefficient(mono({{1, 1}, {3, 1}})), 1);
    EXPECT_EQ(p.coefficient(mono({{1, 1}, {2, 1}})), 2);
    EXPECT_EQ(p.coefficient(mono({{1, 2}})), 1);
    EXPECT_EQ(p.coefficient(mono({{4, 1}})), 0);
    EXPECT_FALSE(is_multiplicity_free(p));
    EXPECT_EQ(to_text(p), "x1^2 + 2*x1*x2 + x1*x3 + x2^2 + x2*x3");
}

TEST(Polynomial, KeyZeroThreeThree) {
    const KohnertPolynomial p = kohnert_polynomial(key_diagram({0, 3, 3}));
    const std::vector<std::map<int, int>> want{
        {{1, 3}, {2, 3}}, {{1, 3}, {2, 2}, {3, 1}}, {{1, 2}, {2, 3}, {3, 1}}, {{1, 3}, {2, 1}, {3, 2}},
        {{1, 2}, {2, 2}, {3, 2}}, {{1, 1}, {2, 3}, {3, 2}}, {{1, 3}, {3, 3}}, {{1, 2}, {2, 1}, {3, 3}},
        {{1, 1}, {2, 2}, {3, 3}}, {{2, 3}, {3, 3}}};
    EXPECT_EQ(p.term_count(), want.size());
    for (const auto& e : want) EXPECT_EQ(p.coefficient(mono(e)), 1);
    EXPECT_TRUE(is_multiplicity_free(p));
}

TEST(Polynomial, EmptyAndSingleCell) {
    EXPECT_EQ(to_text(kohnert_polynomial(Diagram{})), "1");
    EXPECT_EQ(to_text(kohnert_polynomial(Diagram{{3, 1}})), "x1 + x2 + x3");
}

TEST(Polynomial, GradedLexOrder) {
    const auto terms = kohnert_polynomial(key_diagram({0, 2})).graded_lex();
    ASSERT_EQ(terms.size(), 3U);
    EXPECT_EQ(terms[0].first, mono({{1, 2}}));
    EXPECT_EQ(terms[2].first, mono({{2, 2}}));
}

// Every term has degree |D| and the coefficients count the closure.
TEST(PolynomialProperty, DegreeAndCoefficientSum) {
    for (const Diagram& d : oracle::box(3, 3, 5)) {
        const KohnertPolynomial p = kohnert_polynomial(d);
        ASSERT_EQ(p.coefficient_sum(), static_cast<long long>(oracle::closure(oracle::cells_of(d)).size()));
        for (const auto& [m, c] : p.terms()) {
            ASSERT_EQ(m.degree(), static_cast<int>(d.size()));
            ASSERT_GT(c, 0);
        }
    }
}
