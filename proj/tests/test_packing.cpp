#include <gtest/gtest.h>

#include "support.hpp"

using namespace aimkit;
using namespace aimkit::testing;

namespace {

// Path 0-1-2 with pendant edges 3-4, 5-6 hanging off 0 and 7-8, 9-10 off 2.
Graph spider() {
    return make(11, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {2, 7}, {7, 8}, {2, 9}, {9, 10}});
}

} // namespace

TEST(Packing, GreedyMaximal) {
    EXPECT_EQ(greedy_maximal_packing(path_graph(3)).size(), 1u);
    EXPECT_EQ(greedy_maximal_packing(make(2, {{0, 1}})).size(), 0u);
    const auto p6 = greedy_maximal_packing(path_graph(6));
    ASSERT_EQ(p6.size(), 2u);
    EXPECT_EQ(p6.paths[0], (ThreePath{0, 1, 2}));
    EXPECT_EQ(p6.paths[1], (ThreePath{3, 4, 5}));
    EXPECT_TRUE(validate_packing(path_graph(6), p6, false));
}

TEST(Packing, ClassifyGood) {
    const auto ctx = classify(path_graph(3), Packing{{{0, 1, 2}}});
    EXPECT_TRUE(ctx.q_vertices.empty());
    ASSERT_EQ(ctx.paths.size(), 1u);
    EXPECT_TRUE(ctx.paths[0].good);
    EXPECT_EQ(ctx.paths[0].touching, 0u);

    const auto p4 = classify(path_graph(4), Packing{{{0, 1, 2}}});
    EXPECT_EQ(p4.q_vertices, VertexSet{3});
    EXPECT_EQ(p4.q0, VertexSet{3});
    EXPECT_TRUE(p4.paths[0].good);
    EXPECT_EQ(p4.good_count + p4.bad_count, 1u);
}

TEST(Packing, ClassifyBad) {
    // Pendant vertices on both ends of the packed path.
    const Graph g = make(5, {{0, 1}, {1, 2}, {0, 3}, {2, 4}});
    const auto ctx = classify(g, Packing{{{0, 1, 2}}});
    EXPECT_FALSE(ctx.paths[0].good);
    EXPECT_EQ(ctx.bad_count, 1u);
}

TEST(Packing, ClassifyRejectsNonMaximal) {
    EXPECT_THROW(classify(path_graph(6), Packing{{{0, 1, 2}}}), InternalError);
}

TEST(Packing, Rule1) {
    const Graph p6 = path_graph(6);
    const auto grown = apply_rule1(p6, Packing{{{1, 2, 3}}});
    ASSERT_TRUE(grown.has_value());
    EXPECT_EQ(grown->size(), 2u);
    EXPECT_TRUE(validate_packing(p6, *grown, false));
    EXPECT_FALSE(apply_rule1(path_graph(3), Packing{{{0, 1, 2}}}).has_value());
    const Graph two = make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    EXPECT_FALSE(apply_rule1(two, Packing{{{0, 1, 2}, {3, 4, 5}}}).has_value());
}

TEST(Packing, QuasiGoodOnSpider) {
    const Graph g = spider();
    const Packing p{{{0, 1, 2}}};
    const auto ctx = classify(g, p);
    ASSERT_FALSE(ctx.paths[0].good);
    ASSERT_EQ(ctx.paths[0].v_of.size(), 11u);

    const ThreePath l = find_quasi_good(g, p, 0);
    EXPECT_TRUE(is_three_path(g, l));
    for (Vertex v : l.vertices()) EXPECT_TRUE(ctx.paths[0].v_of.contains(v));
    const Packing swapped = extend_to_maximal(g, Packing{{l}});
    EXPECT_TRUE(classify(g, swapped).paths[0].good);
}

TEST(Packing, QuasiGoodGuards) {
    EXPECT_THROW(find_quasi_good(path_graph(3), Packing{{{0, 1, 2}}}, 0), std::invalid_argument);
    // Bad path with |V_i| = 5 < 7.
    const Graph g = make(5, {{0, 1}, {1, 2}, {0, 3}, {2, 4}});
    EXPECT_THROW(find_quasi_good(g, Packing{{{0, 1, 2}}}, 0), std::invalid_argument);
}

TEST(Packing, MakeProper) {
    const Graph p3 = path_graph(3);
    EXPECT_EQ(make_proper(p3, Packing{{{0, 1, 2}}}), (Packing{{{0, 1, 2}}}));
    EXPECT_EQ(make_proper(path_graph(6), Packing{{{1, 2, 3}}}).size(), 2u);
    const Graph s = spider();
    const auto proper = make_proper(s, Packing{{{0, 1, 2}}});
    EXPECT_TRUE(validate_packing(s, proper, true));
    const auto ctx = classify(s, proper);
    for (const auto& info : ctx.paths) {
        if (info.good) continue;
        EXPECT_LE(info.v_of.size(), 6u);
    }
}

TEST(Packing, Validate) {
    const Graph p6 = path_graph(6);
    EXPECT_TRUE(validate_packing(p6, Packing{{{0, 1, 2}, {3, 4, 5}}}, true));
    EXPECT_FALSE(validate_packing(p6, Packing{{{0, 1, 2}, {2, 3, 4}}}, false));
    EXPECT_FALSE(validate_packing(p6, Packing{{{0, 1, 2}}}, false));
    EXPECT_FALSE(validate_packing(p6, Packing{{{0, 2, 4}}}, false));
}

TEST(Packing, ProperOnRandomCorpus) {
    for (const auto& g : small_corpus(300, 11, 4, 40)) {
        const auto p = make_proper(g, greedy_maximal_packing(g));
        ASSERT_TRUE(validate_packing(g, p, true)) << format_graph(g);
    }
}
