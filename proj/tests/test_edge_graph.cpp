#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "dhomology/cellular.hpp"
#include "dhomology/edge_graph.hpp"
#include "dhomology/generators.hpp"
#include "oracles.hpp"

using namespace dhomology;

namespace {

Graph family(Family f, std::vector<std::uint64_t> params = {})
{
    return named({.family = f, .params = std::move(params)});
}

/// Non-loop faces of a square that survive mod-2 cancellation.
std::set<std::pair<Vertex, Vertex>> reduced_boundary(const Square& s)
{
    std::set<std::pair<Vertex, Vertex>> out;
    for (auto [a, b] : s.faces())
    {
        if (a == b)
            continue;
        std::pair<Vertex, Vertex> f{std::min(a, b), std::max(a, b)};
        if (!out.erase(f))
            out.insert(f);
    }
    return out;
}

} // namespace

TEST_CASE("squares of C3 include one bounding the triangle")
{
    const Graph c3 = family(Family::cycle, {3});
    const auto squares = enumerate_squares(c3);
    CHECK(squares.size() == 6);
    const std::set<std::pair<Vertex, Vertex>> triangle = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(std::find(squares.begin(), squares.end(), Square{0, 1, 2, 2}) != squares.end());
    CHECK(reduced_boundary(Square{0, 1, 2, 2}) == triangle);
    // The w' = v square folds back onto two edges and cancels.
    CHECK(reduced_boundary(Square{0, 1, 2, 0}).empty());
}

TEST_CASE("squares of C4 include the 4-cycle")
{
    const Graph c4 = family(Family::cycle, {4});
    const auto squares = enumerate_squares(c4);
    const std::set<std::pair<Vertex, Vertex>> all_edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    bool found = false;
    for (const auto& s : squares)
        found = found || reduced_boundary(s) == all_edges;
    CHECK(found);
    CHECK(enumerate_squares(Graph::from_edge_list(5, {})).empty());
}

TEST_CASE("every square satisfies the adjacency pattern")
{
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial)
    {
        const Graph g = oracle::random_graph(rng, 1 + rng() % 25, 0.3);
        for (const auto& s : enumerate_squares(g))
        {
            REQUIRE(g.adjacent(s.v, s.w));
            REQUIRE(g.adjacent(s.v, s.v2));
            REQUIRE(g.adjacent(s.w, s.w2));
            REQUIRE(g.adjacent(s.v2, s.w2));
        }
    }
}

TEST_CASE("h1_edge_graph on named graphs")
{
    CHECK(h1_edge_graph(family(Family::cycle, {3})) == 0);
    CHECK(h1_edge_graph(family(Family::cycle, {4})) == 0);
    CHECK(h1_edge_graph(family(Family::cycle, {5})) == 1);
    CHECK(h1_edge_graph(family(Family::petersen)) == 6);
    CHECK(h1_edge_graph(family(Family::complete, {4})) == 0);
    CHECK(h1_edge_graph(family(Family::hypercube, {3})) == 0);
    CHECK(h1_edge_graph(Graph::from_edge_list(3, {})) == 0);
}

TEST_CASE("squares with cancelling boundary are inert")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial)
    {
        const Graph g = oracle::random_graph(rng, 2 + rng() % 30, std::uniform_real_distribution<double>(0.05, 0.4)(rng));
        const EdgeIndex index(g);
        const auto squares = enumerate_squares(g);
        std::vector<Square> live;
        for (const auto& s : squares)
            if (!reduced_boundary(s).empty())
                live.push_back(s);
        REQUIRE(rank(square_boundary_matrix(index, squares)) == rank(square_boundary_matrix(index, live)));
    }
}

TEST_CASE("edge-graph method agrees with the cellular method")
{
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 60; ++trial)
    {
        const Graph g = oracle::random_graph(rng, 1 + rng() % 40, std::uniform_real_distribution<double>(0.03, 0.4)(rng));
        const auto eg = edge_graph_homology(g);
        REQUIRE(eg.h1 == h1_cellular(g));
        REQUIRE(eg.rank_m1 == g.vertex_count() - connected_components(g).count);
    }
}
