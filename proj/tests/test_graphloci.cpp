#include <doctest.h>

#include "asklab/graphloci.hpp"
#include "oracles.hpp"

using namespace asklab;
using namespace asklab::testing;

namespace {

PrimePower pp(std::uint64_t q) { return PrimePower::from_q(q); }

Graph complete(int n, std::string name) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::make(n, std::move(edges), std::move(name));
}

}  // namespace

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph::make(2, {{0, 0}}), InvalidInputError);
    CHECK_THROWS_AS(Graph::make(2, {{0, 1}, {1, 0}}), InvalidInputError);
    CHECK_THROWS_AS(Graph::make(2, {{0, 2}}), InvalidInputError);
    Graph g = Graph::make(3, {{2, 0}, {0, 1}});
    CHECK(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(1, 2));
}

TEST_CASE("graph representations") {
    ModuleRep k3 = graph_rep(complete(3, "K3"));
    CHECK(k3.l() == 3);  // diagonal matrices only
    CHECK(k3.d() == 3);

    ModuleRep empty2 = graph_rep(Graph::make(2, {}, "empty2"));
    CHECK(empty2.l() == 3);  // all symmetric 2x2

    ModuleRep p3 = graph_rep(Graph::make(3, {{0, 1}, {1, 2}}, "P3"));
    CHECK(p3.l() == 4);

    ModuleRep empty0 = graph_rep(Graph::make(0, {}, "empty0"));
    CHECK(empty0.l() == 0);
    CHECK(vmax_count(empty0, pp(3)) == 1);

    // every labeled graph on up to 4 vertices gives an immersive representation
    for (int n = 0; n <= 4; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
        for (std::uint64_t mask = 0; mask < (1ull << all_edges.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t t = 0; t < all_edges.size(); ++t)
                if (mask & (1ull << t)) edges.push_back(all_edges[t]);
            Graph g = Graph::make(n, edges);
            ModuleRep gamma = graph_rep(g);
            REQUIRE(gamma.l() == n * (n + 1) / 2 - static_cast<int>(edges.size()));
            REQUIRE(is_immersive(gamma));
        }
    }
}

TEST_CASE("full-rank locus counts") {
    for (std::uint64_t q : {2, 3, 5}) {
        CHECK(graph_vmax(complete(2, "K2"), pp(q)) ==
              Int(static_cast<long>((q - 1) * (q - 1))));
        CHECK(graph_vmax(complete(1, "K1"), pp(q)) == Int(static_cast<long>(q - 1)));
    }
    for (std::uint64_t q : {2, 3, 5, 7})
        CHECK(graph_vmax(Graph::make(2, {}), pp(q)) ==
              Int(static_cast<long>(q * q * (q - 1))));
}

TEST_CASE("limit congruences") {
    LimitCongruence k1 = limit_congruence_check(complete(1, "K1"), pp(3), 4);
    CHECK(k1.scaled_ask == 83);
    CHECK(k1.vmax == 2);
    CHECK(k1.holds);
    CHECK(k1.difference_valuation == 4);

    LimitCongruence e2 = limit_congruence_check(Graph::make(2, {}), pp(2), 2);
    CHECK(e2.scaled_ask == 32);
    CHECK(e2.vmax == 4);
    CHECK(e2.holds);

    // m = 1 always holds, and the congruence exponent is monotone in m
    for (std::uint64_t q : {2, 3}) {
        std::vector<Graph> graphs = {Graph::make(0, {}), complete(1, "K1"),
                                     Graph::make(2, {}), complete(2, "K2"),
                                     Graph::make(3, {{0, 1}, {1, 2}}, "P3"),
                                     complete(3, "K3")};
        for (const Graph& g : graphs) {
            long prev = -1;
            for (int m = 1; m <= 4; ++m) {
                LimitCongruence lc = limit_congruence_check(g, pp(q), m);
                CHECK(lc.holds);
                if (lc.difference_valuation) {
                    CHECK(*lc.difference_valuation >= m);
                    if (prev >= 0) CHECK(*lc.difference_valuation >= prev);
                    prev = *lc.difference_valuation;
                }
            }
        }
    }
}

TEST_CASE("isomorphic graphs share all invariants") {
    Graph p3a = Graph::make(3, {{0, 1}, {1, 2}});
    Graph p3b = Graph::make(3, {{1, 0}, {0, 2}});  // relabeled path, center at 0
    for (std::uint64_t q : {2, 3}) {
        CHECK(ask(graph_rep(p3a), pp(q)) == ask(graph_rep(p3b), pp(q)));
        CHECK(rank_histogram(graph_rep(p3a), pp(q)).counts ==
              rank_histogram(graph_rep(p3b), pp(q)).counts);
    }
}
