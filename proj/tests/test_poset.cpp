#include <gtest/gtest.h>

#include <random>

#include "kohnert/poset.hpp"
#include "oracle.hpp"

using namespace kohnert;

namespace {

// 0 < 1 < 2, 3 (ranked, two maxima).
Poset p1() { return Poset::from_relation(4, {{0, 1}, {1, 2}, {1, 3}}); }
// 0 < 1 < 3 < 4 and 0 < 2 < 4 (bounded, chains of different length).
Poset p2() { return Poset::from_relation(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}); }
// Two 2-element chains between a bottom and a top.
Poset hex() { return Poset::from_relation(6, {{0, 1}, {1, 3}, {3, 5}, {0, 2}, {2, 4}, {4, 5}}); }
Poset diamond() { return Poset::from_relation(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST(Poset, RelationIsTransitiveClosure) {
    const Poset p = p2();
    EXPECT_TRUE(p.leq(0, 4));
    EXPECT_TRUE(p.less(1, 4));
    EXPECT_FALSE(p.leq(4, 0));
    EXPECT_FALSE(p.comparable(1, 2));
    EXPECT_TRUE(p.leq(3, 3));
    EXPECT_FALSE(p.less(3, 3));
}

TEST(Poset, CoversAreTransitiveReduction) {
    const Poset p = Poset::from_relation(3, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(p.covers(), (std::vector<Edge>{{0, 1}, {1, 2}}));
    EXPECT_TRUE(p.is_cover(0, 1));
    EXPECT_FALSE(p.is_cover(0, 2));
    EXPECT_EQ(p.upper_covers(0), (std::vector<Id>{1}));
    EXPECT_EQ(p.lower_covers(2), (std::vector<Id>{1}));
}

TEST(Poset, CycleRejected) {
    EXPECT_THROW(Poset::from_relation(2, {{0, 1}, {1, 0}}), std::exception);
}

TEST(Poset, BoundedAndRanked) {
    EXPECT_EQ(minimal_elements(p1()), (std::vector<Id>{0}));
    EXPECT_EQ(maximal_elements(p1()), (std::vector<Id>{2, 3}));
    EXPECT_FALSE(is_bounded(p1()));
    EXPECT_TRUE(is_ranked(p1()));
    EXPECT_TRUE(is_bounded(p2()));
    EXPECT_FALSE(is_ranked(p2()));
    EXPECT_TRUE(is_bounded(Poset::chain(1)));
    EXPECT_TRUE(is_ranked(Poset::chain(5)));
}

TEST(Poset, PureAndGraded) {
    EXPECT_FALSE(is_pure(p2()));
    EXPECT_TRUE(is_pure(Poset::chain(4)));
    EXPECT_TRUE(is_graded(hex()));
    EXPECT_FALSE(is_graded(p1()));
}

TEST(Poset, MaximalChains) {
    auto c = maximal_chains(p1());
    std::sort(c.begin(), c.end());
    EXPECT_EQ(c, (std::vector<Chain>{{0, 1, 2}, {0, 1, 3}}));
    EXPECT_EQ(maximal_chains(Poset::chain(3)).size(), 1U);
    auto h = maximal_chains(hex());
    ASSERT_EQ(h.size(), 2U);
    EXPECT_EQ(h[0].size(), 4U);
    EXPECT_EQ(h[1].size(), 4U);
}

TEST(Poset, Intervals) {
    const Poset p = hex();
    const Interval single = interval(p, 3, 3);
    EXPECT_EQ(single.members, (std::vector<Id>{3}));
    const Interval whole = interval(p, 0, 5);
    EXPECT_EQ(whole.members.size(), 6U);
    EXPECT_TRUE(are_isomorphic(whole.poset, p));
    const Interval part = interval(p, 0, 3);
    EXPECT_EQ(part.members, (std::vector<Id>{0, 1, 3}));
    EXPECT_EQ(part.local(3), 2U);
    EXPECT_FALSE(part.local(2));
    EXPECT_THROW(interval(p, 1, 2), PreconditionError);
}

TEST(Poset, DirectProduct) {
    const Poset d = direct_product(Poset::chain(2), Poset::chain(2));
    EXPECT_EQ(d.size(), 4U);
    EXPECT_EQ(d.covers().size(), 4U);
    EXPECT_TRUE(are_isomorphic(d, diamond()));
    EXPECT_TRUE(are_isomorphic(direct_product(Poset::chain(1), hex()), hex()));
}

TEST(Poset, Isomorphism) {
    EXPECT_TRUE(are_isomorphic(hex(), hex()));
    EXPECT_FALSE(are_isomorphic(Poset::chain(3), diamond()));
    EXPECT_FALSE(are_isomorphic(p1(), Poset::from_relation(4, {{0, 2}, {1, 2}, {2, 3}})));
    const Poset relabeled = Poset::from_relation(6, {{5, 2}, {2, 0}, {0, 4}, {5, 1}, {1, 3}, {3, 4}});
    const auto iso = find_isomorphism(hex(), relabeled);
    ASSERT_TRUE(iso);
    for (Id x = 0; x < 6; ++x)
        for (Id y = 0; y < 6; ++y) EXPECT_EQ(hex().leq(x, y), relabeled.leq((*iso)[x], (*iso)[y]));
}

TEST(KohnertPoset, FourCellOrder) {
    const Diagram d{{1, 3}, {2, 1}, {2, 2}, {3, 2}};
    const KohnertPoset kp = build_poset(d);
    EXPECT_EQ(kp.size(), 5U);
    EXPECT_EQ(kp[kp.generator], d);
    EXPECT_TRUE(std::is_sorted(kp.elements.begin(), kp.elements.end()));
    EXPECT_EQ(maximal_elements(kp.order), (std::vector<Id>{kp.generator}));
    for (Id x = 0; x < kp.size(); ++x)
        for (Id y = 0; y < kp.size(); ++y)
            EXPECT_EQ(kp.order.less(x, y), oracle::reachable(oracle::cells_of(kp[y]), oracle::cells_of(kp[x])));
}

TEST(KohnertPoset, OrderMatchesReachability) {
    for (const Diagram& d : oracle::box(3, 3, 4)) {
        const KohnertPoset kp = build_poset(d);
        for (Id x = 0; x < kp.size(); ++x)
            for (Id y = 0; y < kp.size(); ++y)
                ASSERT_EQ(kp.order.less(x, y), oracle::reachable(oracle::cells_of(kp[y]), oracle::cells_of(kp[x])))
                    << to_string(d);
    }
}

TEST(KohnertPoset, CounterexampleSize) {
    EXPECT_EQ(build_poset(key_diagram({0, 3, 3})).size(), 10U);
    EXPECT_EQ(build_poset(Diagram{{1, 1}}).size(), 1U);
}

TEST(CoverCheck, Examples) {
    // (3,1) jumps (2,1); row 2 has a cell right of column 1, so nothing lies between.
    EXPECT_TRUE(cover_check_single_move(Diagram{{3, 1}, {2, 1}, {2, 2}}, Diagram{{1, 1}, {2, 1}, {2, 2}}));
    // Here {(3,1),(1,1)} lies between.
    EXPECT_FALSE(cover_check_single_move(Diagram{{3, 1}, {2, 1}}, Diagram{{1, 1}, {2, 1}}));
    EXPECT_TRUE(cover_check_single_move(Diagram{{2, 1}}, Diagram{{1, 1}}));
    // (3,1) would land on (2,1), so these are not single moves.
    EXPECT_THROW(cover_check_single_move(Diagram{{3, 1}}, Diagram{{1, 1}}), PreconditionError);
    EXPECT_THROW(cover_check_single_move(Diagram{{3, 1}, {2, 2}}, Diagram{{1, 1}, {2, 2}}), PreconditionError);
    EXPECT_THROW(cover_check_single_move(Diagram{{2, 1}}, Diagram{{2, 1}}), PreconditionError);
}

// For every single-move pair the criterion must agree with the computed covers.
TEST(CoverCheck, AgreesWithTransitiveReduction) {
    for (const Diagram& d : oracle::box(4, 4, 5)) {
        if (d.size() > 3 && d.max_row() < 3) continue;
        const KohnertPoset kp = build_poset(d);
        for (Id y = 0; y < kp.size(); ++y)
            for (int r = 1; r <= kp[y].max_row(); ++r) {
                const auto lower = kohnert_move(kp[y], r);
                if (!lower) continue;
                const Id x = *kp.find(*lower);
                ASSERT_EQ(cover_check_single_move(kp[y], *lower), kp.order.is_cover(x, y))
                    << to_string(kp[y]) << " -> " << to_string(*lower);
            }
    }
}

// Every element of an interval of a ranked poset has consistent rank differences.
TEST(PosetProperty, IntervalsOfRankedPosetsAreRanked) {
    for (const Diagram& d : oracle::box(3, 3, 4)) {
        const KohnertPoset kp = build_poset(d);
        if (!is_ranked(kp.order)) continue;
        for (Id x = 0; x < kp.size(); ++x)
            for (Id y = 0; y < kp.size(); ++y)
                if (kp.order.leq(x, y)) {
                    ASSERT_TRUE(is_ranked(interval(kp.order, x, y).poset)) << to_string(d);
                }
    }
}

TEST(PosetProperty, RandomRelationsAreClosedAndReduced) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        std::vector<Edge> rel;
        for (Id i = 0; i < n; ++i)
            for (Id j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) rel.push_back({i, j});
        const Poset p = Poset::from_relation(n, rel);
        for (const Edge& e : rel) ASSERT_TRUE(p.less(e.lower, e.upper));
        for (Id a = 0; a < n; ++a)
            for (Id b = 0; b < n; ++b)
                for (Id c = 0; c < n; ++c)
                    if (p.leq(a, b) && p.leq(b, c)) {
                        ASSERT_TRUE(p.leq(a, c));
                    }
        for (const Edge& e : p.covers())
            for (Id z = 0; z < n; ++z) ASSERT_FALSE(p.less(e.lower, z) && p.less(z, e.upper));
    }
}
