#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "dhomology/cycles.hpp"
#include "dhomology/generators.hpp"

using namespace dhomology;

TEST_CASE("SplitMix64 reference stream")
{
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);

    SplitMix64 u(7);
    for (int i = 0; i < 1000; ++i)
    {
        const double x = u.uniform01();
        REQUIRE(x >= 0.0);
        REQUIRE(x < 1.0);
        const auto k = u.uniform_int(3, 9);
        REQUIRE(k >= 3);
        REQUIRE(k <= 9);
    }
    CHECK(u.uniform_int(5, 5) == 5);
}

TEST_CASE("erdos_renyi extremes")
{
    for (std::uint64_t seed : {0u, 1u, 99u})
    {
        CHECK(erdos_renyi(12, 0.0, seed).edge_count() == 0);
        CHECK(erdos_renyi(12, 1.0, seed).edge_count() == 66);
    }
    CHECK(erdos_renyi(0, 0.5, 1).vertex_count() == 0);
    CHECK(erdos_renyi(1, 0.5, 1).edge_count() == 0);
    CHECK_THROWS_AS(erdos_renyi(5, -0.1, 1), DomainError);
    CHECK_THROWS_AS(erdos_renyi(5, 1.5, 1), DomainError);
    CHECK_THROWS_AS(erdos_renyi(5, std::nan(""), 1), DomainError);
}

TEST_CASE("erdos_renyi edge counts follow the binomial law")
{
    // C(100,2) = 4950 pairs at p = 0.07: mean 346.5, sd sqrt(4950 * 0.07 * 0.93).
    const double sd = std::sqrt(4950 * 0.07 * 0.93);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
    {
        const auto m = static_cast<double>(erdos_renyi(100, 0.07, seed).edge_count());
        CHECK(std::abs(m - 346.5) < 5 * sd);
    }

    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed)
        total += static_cast<double>(erdos_renyi(30, 0.2, seed).edge_count());
    CHECK(std::abs(total / 1000.0 - 87.0) < 0.02 * 87.0);
}

TEST_CASE("erdos_renyi is deterministic")
{
    std::ostringstream a, b;
    write_edge_list(a, erdos_renyi(60, 0.1, 42));
    write_edge_list(b, erdos_renyi(60, 0.1, 42));
    CHECK(a.str() == b.str());
    CHECK(erdos_renyi(60, 0.1, 42) != erdos_renyi(60, 0.1, 43));
}

TEST_CASE("named families")
{
    const Graph c5 = named({.family = Family::cycle, .params = {5}});
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);

    const Graph i3 = named({.family = Family::path, .params = {3}});
    CHECK(i3.vertex_count() == 4);
    CHECK(i3.edge_count() == 3);

    const Graph q3 = named({.family = Family::hypercube, .params = {3}});
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    for (std::uint64_t d = 1; d <= 6; ++d)
        CHECK(named({.family = Family::hypercube, .params = {d}}).edge_count() == d * (1u << (d - 1)));

    const Graph grid = named({.family = Family::grid, .params = {2}});
    CHECK(grid.vertex_count() == 9);
    CHECK(grid.edge_count() == 12);

    const Graph petersen = named({.family = Family::petersen});
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v)
        CHECK(petersen.degree(v) == 3);
    CHECK(triangles(petersen).empty());
    CHECK(simple_four_cycles(petersen).empty());

    CHECK(named({.family = Family::complete, .params = {6}}).edge_count() == 15);

    const GenSpec prism{.family = Family::box_product,
                        .factors = {{.family = Family::cycle, .params = {5}}, {.family = Family::path, .params = {1}}}};
    const Graph p = named(prism);
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);

    const Graph er = named({.family = Family::erdos_renyi, .params = {30}, .p = 0.2, .seed = 3});
    CHECK(er == erdos_renyi(30, 0.2, 3));
}

TEST_CASE("named rejects bad specifications")
{
    CHECK_THROWS_AS(parse_family("wheel"), DomainError);
    CHECK(parse_family("grid") == Family::grid);
    CHECK_THROWS_AS(named({.family = Family::cycle, .params = {2}}), DomainError);
    CHECK_THROWS_AS(named({.family = Family::cycle}), DomainError);
    CHECK_THROWS_AS(named({.family = Family::petersen, .params = {1}}), DomainError);
    CHECK_THROWS_AS(named({.family = Family::box_product}), DomainError);
    CHECK_THROWS_AS(named({.family = Family::erdos_renyi, .params = {10}, .p = 2.0}), DomainError);
}
