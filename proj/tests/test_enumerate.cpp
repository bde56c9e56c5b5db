#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include <radmoore/canonical.hpp>
#include <radmoore/enumerate.hpp>

#include "test_util.hpp"

using namespace radmoore;

TEST_CASE("input guards") {
    CHECK_THROWS_AS(enumerate_regular(3, 5), std::invalid_argument);  // odd d*n
    CHECK_THROWS_AS(enumerate_regular(3, 3), std::invalid_argument);  // n <= d
    CHECK_THROWS_AS(enumerate_regular(0, 4), std::invalid_argument);
}

TEST_CASE("cycles are the only connected 2-regular graphs") {
    for (int n = 3; n <= 9; ++n) {
        std::vector<Graph> graphs = enumerate_regular(2, n);
        REQUIRE(graphs.size() == 1);
        CHECK(canonical_graph6(graphs[0]) == canonical_graph6(testutil::cycle(n)));
    }
}

TEST_CASE("small cubic counts with explicit representatives") {
    std::vector<Graph> on4 = enumerate_regular(3, 4);
    REQUIRE(on4.size() == 1);
    CHECK(canonical_graph6(on4[0]) == canonical_graph6(testutil::complete(4)));

    std::vector<Graph> on6 = enumerate_regular(3, 6);
    REQUIRE(on6.size() == 2);
    std::set<std::string> got{canonical_graph6(on6[0]), canonical_graph6(on6[1])};
    std::set<std::string> expect{canonical_graph6(testutil::complete_bipartite_33()),
                                 canonical_graph6(testutil::prism())};
    CHECK(got == expect);

    CHECK(enumerate_regular(3, 8).size() == 5);
}

TEST_CASE("every emitted graph is connected, regular, and lexmax labeled") {
    for (auto [d, n] : {std::pair{3, 8}, std::pair{2, 7}, std::pair{4, 7}}) {
        for (const Graph& g : enumerate_regular(d, n)) {
            CHECK(is_connected(g));
            CHECK(g.regular_degree() == d);
            CHECK(is_lexmax_labeling(g));
        }
    }
}

TEST_CASE("the 19 connected cubic graphs on ten vertices") {
    std::vector<Graph> graphs = enumerate_regular(3, 10);
    CHECK(graphs.size() == 19);

    // mutually non-isomorphic, checked by permutation backtracking rather
    // than by canonical codes
    for (std::size_t a = 0; a < graphs.size(); ++a)
        for (std::size_t b = a + 1; b < graphs.size(); ++b)
            CHECK_FALSE(testutil::brute_force_isomorphic(graphs[a], graphs[b]));

    // the naive dedup oracle lands on the same 19 classes
    std::set<std::string> ours;
    for (const Graph& g : graphs) ours.insert(canonical_graph6(g));
    CHECK(ours.size() == 19);
    CHECK(testutil::labeled_regular_classes(3, 10, true) == ours);
}

TEST_CASE("oracle agreement on six and eight vertices, including disconnected") {
    std::set<std::string> ours6;
    for (const Graph& g : enumerate_regular(3, 6)) ours6.insert(canonical_graph6(g));
    CHECK(testutil::labeled_regular_classes(3, 6, true) == ours6);
    CHECK(testutil::labeled_regular_classes(3, 8, true).size() == 5);
    // on eight vertices exactly one cubic class is disconnected (two K_4's)
    CHECK(testutil::labeled_regular_classes(3, 8, false).size() == 6);
}

TEST_CASE("published counts for larger parameters") {
    CHECK(enumerate_regular(3, 12).size() == 85);
    CHECK(enumerate_regular(4, 7).size() == 2);
    CHECK(enumerate_regular(4, 8).size() == 6);
}

TEST_CASE("node budget reports an incomplete stream") {
    EnumOptions tiny;
    tiny.max_nodes = 5;
    int emitted = 0;
    EnumStats stats = enumerate_regular(3, 10, [&](const Graph&) { ++emitted; }, tiny);
    CHECK_FALSE(stats.complete);
    CHECK_THROWS_AS(enumerate_regular(3, 10, tiny), std::runtime_error);
}
