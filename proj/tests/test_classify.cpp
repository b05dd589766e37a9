#include <gtest/gtest.h>

#include "kohnert/classify.hpp"
#include "kohnert/polynomial.hpp"
#include "oracle.hpp"

using namespace kohnert;

namespace {

std::vector<WeakComposition> compositions(std::size_t n, int max_entry) {
    std::vector<WeakComposition> out;
    std::vector<int> v(n, 0);
    while (true) {
        out.emplace_back(v);
        std::size_t i = 0;
        while (i < n && v[i] == max_entry) v[i++] = 0;
        if (i == n) return out;
        ++v[i];
    }
}

Diagram rect(int rows, int cols) {
    std::vector<Cell> c;
    for (int r = 1; r <= rows; ++r)
        for (int k = 1; k <= cols; ++k) c.push_back({r, k});
    return Diagram(c);
}

}  // namespace

TEST(Patterns, CompositionPredicates) {
    using K = PatternKind;
    EXPECT_TRUE(composition_pattern_holds(K::comp_a_i, {1, 2, 3}));
    EXPECT_TRUE(composition_pattern_holds(K::comp_a_ii, {0, 4, 3}));
    EXPECT_FALSE(composition_pattern_holds(K::comp_a_ii, {1, 4, 3}));
    EXPECT_TRUE(composition_pattern_holds(K::mf_1, {1, 2, 3}));
    EXPECT_TRUE(composition_pattern_holds(K::mf_2, {0, 0, 2, 4}));
    EXPECT_TRUE(composition_pattern_holds(K::mf_2, {0, 0, 2, 2}));
    EXPECT_FALSE(composition_pattern_holds(K::mf_2, {0, 0, 1, 4}));
    EXPECT_TRUE(composition_pattern_holds(K::pure_3, {0, 3, 3}));
    EXPECT_FALSE(composition_pattern_holds(K::pure_3, {1, 2, 2}));
    EXPECT_FALSE(composition_pattern_holds(K::comp_a_i, {1, 2}));
}

TEST(Patterns, HitsCarryPositions) {
    const auto a = keynecrank_patterns({1, 2, 3});
    ASSERT_FALSE(a.empty());
    EXPECT_EQ(a.front().kind(), PatternKind::comp_a_i);
    EXPECT_EQ(a.front().indices(), (std::vector<int>{1, 2, 3}));
    const auto b = keynecrank_patterns({0, 4, 3});
    ASSERT_FALSE(b.empty());
    EXPECT_EQ(b.front().kind(), PatternKind::comp_a_ii);
    EXPECT_EQ(key_mf_patterns({1, 2, 3}).front().kind(), PatternKind::mf_1);
    bool mf2 = false;
    for (const PatternHit& h : key_mf_patterns({0, 0, 2, 4}))
        mf2 = mf2 || (h.kind() == PatternKind::mf_2 && h.indices() == std::vector<int>{1, 2, 3, 4});
    EXPECT_TRUE(mf2);
    EXPECT_TRUE(key_mf_patterns({0, 3, 3}).empty());
    EXPECT_FALSE(conjecture_key_patterns({0, 3, 3}).empty());
    EXPECT_EQ(keynecrank_patterns({0, 1, 2, 3, 4, 5}, 3).size(), 3U);
    EXPECT_THROW(PatternHit::in_composition(PatternKind::comp_a_i, {3, 2, 1}, {1, 2, 3}), PreconditionError);
}

TEST(Patterns, Strucasc) {
    const auto hit = detect_strucasc(key_diagram({1, 2, 3}));
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->indices(), (std::vector<int>{1, 2, 3}));
    EXPECT_TRUE(strucasc_holds(*hit->element(), 1, 2, 3));
    EXPECT_FALSE(detect_strucasc(Diagram{{1, 1}, {2, 1}}));
}

TEST(Patterns, Strucblock) {
    const Diagram d{{2, 1}, {3, 1}, {3, 2}, {3, 4}};
    EXPECT_TRUE(strucblock_holds(d, 1, 3, 1, 4));
    const auto hit = detect_strucblock(d);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->indices(), (std::vector<int>{1, 3, 1, 4}));
    EXPECT_TRUE(hit->two_row_case());
    EXPECT_FALSE(detect_strucblock(key_diagram({1, 2, 2})));
}

TEST(Families, OneCellPerColumn) {
    EXPECT_TRUE(shellable_onecell_columns(Diagram{{1, 1}, {3, 2}}));
    EXPECT_FALSE(shellable_onecell_columns(Diagram{{2, 1}, {3, 2}}));
    EXPECT_TRUE(shellable_onecell_columns(Diagram{{1, 1}, {1, 2}}));
    EXPECT_TRUE(shellable_onecell_columns(Diagram{}));
    EXPECT_THROW(shellable_onecell_columns(Diagram{{1, 1}, {2, 1}}), PreconditionError);
}

TEST(Families, RowsOneTwoEmpty) {
    EXPECT_FALSE(shellable_rows12_empty(Diagram{{3, 1}, {4, 2}}));
    EXPECT_TRUE(shellable_rows12_empty(Diagram{{5, 3}}));
    EXPECT_TRUE(shellable_rows12_empty(hook_generator(HookSpec(4, 6, {1, 2, 4, 7}))));
    EXPECT_THROW(shellable_rows12_empty(Diagram{{2, 1}}), PreconditionError);
}

TEST(PureCompositions, Recognition) {
    EXPECT_TRUE(is_pure(WeakComposition{15, 15, 15, 14, 14, 15, 14, 15, 13, 11, 10, 7, 15, 7,
                                        6,  5,  4,  6,  3,  3,  4,  3,  4,  3,  2,  1,  0, 1}));
    const auto hit = is_pure_composition({0, 3, 3});
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->kind(), PatternKind::pure_3);
    EXPECT_EQ(hit->indices(), (std::vector<int>{1, 2, 3}));
    EXPECT_TRUE(is_pure(WeakComposition{}));
}

TEST(PureCompositions, BasicTypes) {
    EXPECT_EQ(basic_type({7, 6, 5, 4, 6}), BasicType::III);
    EXPECT_EQ(basic_type({3, 3, 4, 3, 4}), BasicType::II);
    EXPECT_EQ(basic_type({0, 2}), BasicType::III);
    EXPECT_EQ(basic_type({1, 2}), BasicType::II);
    EXPECT_EQ(basic_type({2, 2, 2}), BasicType::I);
    EXPECT_EQ(basic_type({3, 4, 3, 4, 3, 1, 4}), BasicType::IV);
    EXPECT_FALSE(basic_type({1, 0, 1}));
    EXPECT_FALSE(basic_type({0, 3, 3}));
}

TEST(PureCompositions, DecompositionIsCertified) {
    const WeakComposition a{15, 15, 15, 14, 14, 15, 14, 15, 13, 11, 10, 7, 15, 7,
                            6,  5,  4,  6,  3,  3,  4,  3,  4,  3,  2,  1,  0, 1};
    const PureDecomposition dec = pure_decomposition(a);
    EXPECT_EQ(certify_decomposition(a, dec), "");
    EXPECT_THROW(pure_decomposition({0, 3, 3}), PreconditionError);
    PureDecomposition bad = dec;
    std::swap(bad.blocks.front(), bad.blocks.back());
    EXPECT_NE(certify_decomposition(a, bad), "");
}

TEST(PureCompositions, FixedCellsOfBasicBlocks) {
    EXPECT_EQ(fixed_cells({2, 3, 3, 2, 3}), rect(4, 2));
    EXPECT_EQ(fixed_cells({4, 3, 2, 2, 4}), key_diagram({4, 3, 2, 2}));
    const Diagram box = rect(5, 3);
    std::vector<Cell> c(box.begin(), box.end());
    c.push_back({6, 1});
    EXPECT_EQ(fixed_cells({3, 4, 3, 4, 3, 1, 4}), Diagram(c));
}

TEST(PureCompositions, HookEmbeddingOfBasicBlocks) {
    for (const WeakComposition& a : {WeakComposition{2, 3, 3, 2, 3}, WeakComposition{4, 3, 2, 2, 4},
                                     WeakComposition{0, 2}, WeakComposition{3, 4, 3, 4, 3, 1, 4}}) {
        const HookEmbedding e = hook_embedding(a);
        EXPECT_TRUE(e.certified) << to_string(a) << ": " << e.failure;
        EXPECT_TRUE(is_hook(e.hook));
    }
    EXPECT_THROW(hook_embedding({2, 2, 1}), PreconditionError);
    EXPECT_THROW(hook_embedding({0, 3, 3}), PreconditionError);
}

// Splitting rows by block lengths gives the key diagrams of the blocks.
TEST(PureCompositions, SplitByBlocks) {
    const WeakComposition a{6, 5, 4, 5, 4, 3, 5, 3, 1, 3, 1, 0, 1};
    PureDecomposition dec;
    dec.blocks = {WeakComposition{6, 5}, WeakComposition{4, 5, 4, 3, 5}, WeakComposition{3, 1, 3},
                  WeakComposition{1, 0, 1}};
    const auto parts = split_by_decomposition(key_diagram(a), a, dec);
    ASSERT_EQ(parts.size(), 4U);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(parts[j], key_diagram(dec.blocks[j]));
    EXPECT_EQ(join_blocks(parts, dec), key_diagram(a));
}

TEST(PureCompositions, ProductAndTransportedLabeling) {
    for (const WeakComposition& a : {WeakComposition{2, 1, 0, 1}, WeakComposition{2, 3, 3, 2}, WeakComposition{1, 2, 0, 1}}) {
        const KohnertPoset kp = build_poset(key_diagram(a));
        const ProductSplit s = split_into_product(kp, a);
        ASSERT_TRUE(s.certified) << to_string(a) << ": " << s.failure;
        EXPECT_TRUE(are_isomorphic(product_of_blocks(s), kp.order));
        EXPECT_TRUE(verify_el(kp.order, el_labeling_key(kp, a)).ok) << to_string(a);
    }
    const KohnertPoset kp = build_poset(key_diagram({2, 1, 0, 1}));
    EXPECT_TRUE(are_isomorphic(kp.order, direct_product(build_poset(key_diagram({2, 1})).order,
                                                        build_poset(key_diagram({0, 1})).order)));
}

// Key posets: a is pure iff the poset is pure and shellable; necessary patterns
// rule that out; multiplicity-free polynomials are exactly those avoiding the mf patterns.
TEST(KeyProperty, SmallCompositions) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const WeakComposition& a : compositions(n, 3)) {
            const KohnertPoset kp = build_poset(key_diagram(a));
            ASSERT_TRUE(is_bounded(kp.order));
            ASSERT_EQ(is_pure(a), is_pure(kp.order)) << to_string(a);
            const Decision d = decide_shellable(kp.order).decision;
            ASSERT_NE(d, Decision::undecided);
            const bool graded_shellable = is_pure(kp.order) && d == Decision::yes;
            ASSERT_EQ(is_pure(a), graded_shellable) << to_string(a);
            if (!keynecrank_patterns(a).empty()) {
                ASSERT_FALSE(graded_shellable) << to_string(a);
            }
            ASSERT_EQ(key_mf_patterns(a).empty(), is_multiplicity_free(kohnert_polynomial(key_diagram(a))))
                << to_string(a);
            if (is_pure(a)) {
                ASSERT_TRUE(key_mf_patterns(a).empty()) << to_string(a);
            }
        }
}

// Detector hits are sound: a hit means the brute-force search says not shellable.
TEST(DetectorProperty, HitsImplyNotShellable) {
    for (const Diagram& d : oracle::box(4, 4, 4)) {
        const bool hit = detect_strucasc(d).has_value() || detect_strucblock(d).has_value();
        if (!hit) continue;
        ASSERT_EQ(decide_shellable(build_poset(d).order).decision, Decision::no) << to_string(d);
    }
}
