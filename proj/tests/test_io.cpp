#include <gtest/gtest.h>

#include "kohnert/io.hpp"
#include "oracle.hpp"

using namespace kohnert;

TEST(Grid, ParseTopRowFirst) {
    EXPECT_EQ(parse_grid(".X\nX.\n.."), (Diagram{{3, 2}, {2, 1}}));
    EXPECT_EQ(parse_grid("\n..X\nXX.\n.X.\n\n"), (Diagram{{3, 3}, {2, 1}, {2, 2}, {1, 2}}));
    EXPECT_THROW(parse_grid("X?"), ParseError);
}

TEST(Grid, RenderFourCellExample) {
    const Diagram d{{1, 3}, {2, 1}, {2, 2}, {3, 2}};
    EXPECT_EQ(render_grid(d), ".X.\nXX.\n..X\n");
    EXPECT_EQ(render_grid(Diagram{}), ".\n");
}

TEST(Json, DiagramShape) {
    const Diagram d{{1, 3}, {2, 1}};
    EXPECT_EQ(to_json(d).dump(), R"({"cells":[[1,3],[2,1]]})");
    EXPECT_THROW(diagram_from_json(json::parse(R"({"cells":[[0,1]]})")), ParseError);
    EXPECT_THROW(diagram_from_json(json::parse(R"({"cells":[[1]]})")), ParseError);
    EXPECT_THROW(diagram_from_json(json::parse(R"([1,2])")), ParseError);
}

TEST(Compositions, Parsing) {
    EXPECT_EQ(parse_composition("0 3 3"), (WeakComposition{0, 3, 3}));
    EXPECT_EQ(parse_composition("(0,3,3)"), (WeakComposition{0, 3, 3}));
    EXPECT_EQ(parse_composition("1, 0,2"), (WeakComposition{1, 0, 2}));
    EXPECT_FALSE(parse_composition("0 -3"));
    EXPECT_FALSE(parse_composition("X."));
    EXPECT_EQ(parse_int_list("1, 2,4,7"), (std::vector<int>{1, 2, 4, 7}));
    EXPECT_THROW(parse_int_list("1,a"), ParseError);
}

TEST(Input, Dispatch) {
    const Input a = parse_input("0 3 3\n");
    EXPECT_EQ(a.composition, (WeakComposition{0, 3, 3}));
    EXPECT_EQ(a.diagram, key_diagram({0, 3, 3}));
    const Input j = parse_input(R"({"composition":[1,2]})");
    EXPECT_EQ(j.diagram, key_diagram({1, 2}));
    const Input c = parse_input(R"({"cells":[[2,1]]})");
    EXPECT_EQ(c.diagram, (Diagram{{2, 1}}));
    EXPECT_FALSE(c.composition);
    EXPECT_EQ(parse_input("X.\n.X\n").diagram, (Diagram{{2, 1}, {1, 2}}));
    EXPECT_THROW(parse_input("{nope"), ParseError);
    EXPECT_THROW(parse_input(R"({"composition":[1,-2]})"), ParseError);
    EXPECT_EQ(input_from_hook(HookSpec(1, 2, {1})).diagram, (Diagram{{1, 1}, {2, 1}}));
}

TEST(Json, PolynomialAndHits) {
    const json p = to_json(kohnert_polynomial(Diagram{{2, 1}}));
    ASSERT_EQ(p["terms"].size(), 2U);
    EXPECT_EQ(p["terms"][0]["exponents"]["1"], 1);
    EXPECT_EQ(p["terms"][0]["coeff"], 1);
    const json h = to_json(*detect_strucblock(Diagram{{2, 1}, {3, 1}, {3, 2}, {3, 4}}));
    EXPECT_EQ(h["kind"], "strucblock");
    EXPECT_EQ(h["indices"], json::parse("[1,3,1,4]"));
    EXPECT_EQ(h["two_row_case"], true);
}

TEST(Json, PosetWithLabels) {
    const KohnertPoset kp = build_poset(Diagram{{2, 1}});
    const EdgeLabeling lab = el_labeling_hook(kp);
    const json j = to_json(kp, &lab);
    EXPECT_EQ(j["elements"].size(), 2U);
    EXPECT_EQ(j["covers"], json::parse("[[0,1]]"));
    EXPECT_EQ(j["labels"], json::parse("[1]"));
    EXPECT_FALSE(to_json(kp).contains("labels"));
}

TEST(Dot, ContainsNodesAndEdges) {
    const KohnertPoset kp = build_poset(Diagram{{2, 1}});
    const EdgeLabeling lab = el_labeling_hook(kp);
    const std::string dot = to_dot(kp, &lab);
    EXPECT_NE(dot.find("digraph kohnert"), std::string::npos);
    EXPECT_NE(dot.find("n0 -> n1 [label=\"1\"];"), std::string::npos);
    EXPECT_NE(dot.find("n1 [label=\"X\\l.\\l\"]"), std::string::npos);
}

TEST(IoProperty, RoundTrips) {
    for (const Diagram& d : oracle::box(3, 3, 9)) {
        ASSERT_EQ(diagram_from_json(json::parse(to_json(d).dump())), d);
        if (!d.empty()) {
            ASSERT_EQ(parse_grid(render_grid(d)), d);
        }
    }
}
