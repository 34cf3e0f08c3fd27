#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fixtures.hpp"
#include "rcn/rcn.hpp"

using namespace rcn;

TEST_CASE("extremal digraph D0(10,1)") {
    Digraph g = build_D0(10, 1);
    REQUIRE(g.edge_count() == 20);
    std::vector<std::pair<int, int>> expected{
        {10, 9}, {9, 8}, {9, 7}, {8, 7}, {8, 6}, {7, 6}, {7, 5}, {7, 4}, {6, 5}, {6, 4},
        {6, 3},  {5, 4}, {5, 3}, {5, 2}, {4, 3}, {4, 2}, {4, 1}, {3, 2}, {3, 1}, {2, 1}};
    CHECK(g.edges == expected);
    CHECK(in_class(g, 1));
    std::vector<int> out = outdegrees(g);
    CHECK(out == std::vector<int>{0, 0, 1, 2, 3, 3, 3, 3, 2, 2, 1});
}

TEST_CASE("extremal digraph D0(10,3)") {
    Digraph g = build_D0(10, 3);
    REQUIRE(g.edge_count() == 33);
    CHECK(in_class(g, 3));
    std::vector<int> out = outdegrees(g);
    CHECK(out == std::vector<int>{0, 0, 1, 2, 3, 4, 5, 6, 5, 4, 3});
    // top four vertices form a complete block; adding the fifth breaks it
    CHECK(top_block_complete(g, 4));
    CHECK_FALSE(top_block_complete(g, 5));
    CHECK_THROWS_AS(top_block_complete(g, 11), std::invalid_argument);
    // the bottom six vertices induce a complete subgraph
    CHECK(induced_bottom_edges(g, 6) == 15);
    CHECK(induced_bottom_edges(g, 1) == 0);
    // cross edges from the top block into the bottom six
    CHECK(g.edge_count() - induced_bottom_edges(g, 6) - binom2(4) == 12);
}

TEST_CASE("D0 basics and small values") {
    CHECK(build_D0(6, 3).edge_count() == 13);
    CHECK(build_D0(10, 0).edge_count() == 0);
    CHECK(build_D0(1, 3).edge_count() == 0);
    CHECK(build_D0(2, 1).edges == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK_THROWS_AS(build_D0(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_D0(3, -1), std::invalid_argument);
    // m >= v-1 saturates into the complete DAG
    CHECK(build_D0(5, 4).edge_count() == binom2(5));
}

TEST_CASE("construction matches the exhaustive maximum") {
    for (int v = 1; v <= 6; ++v)
        for (int m = 0; m <= 3; ++m) {
            CAPTURE(v, m);
            REQUIRE(build_D0(v, m).edge_count() == max_edges_oracle(v, m));
        }
    CHECK_THROWS_AS(max_edges_oracle(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(max_edges_oracle(5, 4), std::invalid_argument);
}

TEST_CASE("sort_edges orders descending and deduplicates") {
    Digraph g{4, {{2, 1}, {4, 3}, {2, 1}, {3, 1}, {3, 2}}};
    sort_edges(g);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{4, 3}, {3, 2}, {3, 1}, {2, 1}});
    CHECK(indegrees(g) == std::vector<int>{0, 2, 1, 1, 0});
}

TEST_CASE("digraph serialization") {
    std::ostringstream os;
    write_digraph(os, build_D0(3, 1), 1);
    CHECK(os.str() == "3 1\n3 2\n2 1\n");
}

TEST_CASE("window digraphs of a decomposed sequence") {
    for (int n : {6, 9, 12}) {
        PointSet ps = fixtures::tuned_three_ray(n);
        HalfPeriod hp = from_point_set(ps);
        auto dec = search_decomposition(hp);
        REQUIRE(dec.has_value());
        PhaseStats st = phase_stats(hp, *dec);
        for (int k = 0; 2 * k < n; ++k) {
            Digraph da = build_Dk(hp, *dec, Block::A, k);
            Digraph db = build_Dk(hp, *dec, Block::B, k);
            Digraph dc = build_Dk(hp, *dec, Block::C, k);
            REQUIRE(da.edge_count() == st.center_aa[k]);
            REQUIRE(db.edge_count() == st.center_bb[k]);
            REQUIRE(dc.edge_count() == st.center_cc[k]);
            // each window digraph lives in the class that caps its edge count
            int m = n - 2 * k - 1;
            for (const Digraph* d : {&da, &db, &dc}) {
                REQUIRE(d->v == n / 3);
                REQUIRE(in_class(*d, m));
                REQUIRE(d->edge_count() <= build_D0(n / 3, m).edge_count());
            }
        }
    }
}

TEST_CASE("halving counters") {
    PointSet ps = fixtures::tuned_three_ray(6);
    HalfPeriod hp = from_point_set(ps);
    auto dec = search_decomposition(hp);
    REQUIRE(dec.has_value());
    PhaseStats st = phase_stats(hp, *dec);
    long long halving_mono = 0;
    for (Block cls : {Block::A, Block::B, Block::C})
        for (int j = 1; j <= 2; ++j) halving_mono += hal(hp, *dec, cls, j);
    CHECK(halving_mono == st.level_mono[3]);
    CHECK_THROWS_AS(hal(hp, *dec, Block::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(hal(hp, *dec, Block::A, 3), std::invalid_argument);

    HalfPeriod odd = from_point_set(fixtures::tuned_three_ray(9));
    auto dec9 = search_decomposition(odd);
    REQUIRE(dec9.has_value());
    CHECK_THROWS_AS(hal(odd, *dec9, Block::A, 1), std::invalid_argument);
}

TEST_CASE("depth labeling rejects blocks without distinct depths") {
    HalfPeriod hp = from_point_set(fixtures::unit_square());
    // labels 1 and 4 start at the two extremes: both reach depth 1
    CHECK_THROWS_WITH(detail::depth_vertex_map(hp, {1, 4}),
                      "depth labeling inconsistent for the given block");
}
