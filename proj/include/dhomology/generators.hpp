/**
 * Seeded random graphs and standard graph families.
 *
 * Randomness comes from SplitMix64 (Steele, Lea & Flood 2014), a 64-bit
 * generator whose output depends only on the seed, so generated data sets
 * are reproducible on every platform and from any language that implements
 * the same three-line mixer.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dhomology/errors.hpp"
#include "dhomology/graph.hpp"

namespace dhomology {

/// SplitMix64 mixing function (finalizer of the generator).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class SplitMix64
{
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64_mix(state_);
    }

    /// Uniform double in [0, 1) from the top 53 bits of one draw.
    constexpr double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi] by rejection sampling (no modulo bias).
    constexpr std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept
    {
        const std::uint64_t span = hi - lo;
        if (span == ~std::uint64_t{0})
            return next();
        const std::uint64_t range = span + 1;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
        std::uint64_t x = next();
        while (x >= limit)
            x = next();
        return lo + x % range;
    }

private:
    std::uint64_t state_;
};

/**
 * G(n, p): pairs (0,1), (0,2), ..., (n-2, n-1) are visited in order and
 * each consumes exactly one draw; the pair is an edge when the draw's
 * uniform value is below p.
 */
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("edge probability must lie in [0, 1], got " + std::to_string(p));
    SplitMix64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u + 1 < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform01() < p)
                pairs.emplace_back(u, v);
    return Graph::from_edge_list(n, pairs);
}

enum class Family
{
    erdos_renyi,
    cycle,
    path,
    complete,
    hypercube,
    grid,
    petersen,
    box_product,
};

inline Family parse_family(std::string_view name)
{
    static constexpr std::pair<std::string_view, Family> table[] = {
        {"erdos_renyi", Family::erdos_renyi}, {"cycle", Family::cycle},
        {"path", Family::path},               {"complete", Family::complete},
        {"hypercube", Family::hypercube},     {"grid", Family::grid},
        {"petersen", Family::petersen},       {"box_product", Family::box_product},
    };
    for (auto [key, family] : table)
        if (key == name)
            return family;
    throw DomainError("unknown graph family '" + std::string(name) + "'");
}

/**
 * Description of a generated graph.
 *
 *   erdos_renyi  params = {n}, uses p and seed
 *   cycle        params = {n}, n >= 3
 *   path         params = {k}: the path I_k on vertices 0..k
 *   complete     params = {n}
 *   hypercube    params = {d}: d-fold box product of I_1
 *   grid         params = {k}: I_k box I_k, a (k+1) x (k+1) grid
 *   petersen     no params
 *   box_product  factors = {G, H}
 */
struct GenSpec
{
    Family family = Family::cycle;
    std::vector<std::uint64_t> params;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::vector<GenSpec> factors;
};

namespace detail {

inline std::uint64_t single_param(const GenSpec& spec, const char* family, std::uint64_t min)
{
    if (spec.params.size() != 1)
        throw DomainError(std::string(family) + " takes exactly one parameter");
    if (spec.params[0] < min)
        throw DomainError(std::string(family) + " parameter must be at least " + std::to_string(min));
    if (spec.params[0] > std::numeric_limits<Vertex>::max())
        throw DomainError(std::string(family) + " parameter too large");
    return spec.params[0];
}

inline Graph cycle_graph(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < n; ++v)
        pairs.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph::from_edge_list(n, pairs);
}

inline Graph path_graph(std::size_t k)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v < k; ++v)
        pairs.emplace_back(v, v + 1);
    return Graph::from_edge_list(k + 1, pairs);
}

inline Graph complete_graph(std::size_t n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return Graph::from_edge_list(n, pairs);
}

inline Graph petersen_graph()
{
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex i = 0; i < 5; ++i)
    {
        pairs.emplace_back(i, (i + 1) % 5);
        pairs.emplace_back(i, i + 5);
        pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edge_list(10, pairs);
}

} // namespace detail

inline Graph named(const GenSpec& spec)
{
    switch (spec.family)
    {
    case Family::erdos_renyi:
        return erdos_renyi(detail::single_param(spec, "erdos_renyi", 0), spec.p, spec.seed);
    case Family::cycle:
        return detail::cycle_graph(detail::single_param(spec, "cycle", 3));
    case Family::path:
        return detail::path_graph(detail::single_param(spec, "path", 1));
    case Family::complete:
        return detail::complete_graph(detail::single_param(spec, "complete", 1));
    case Family::hypercube:
    {
        const auto d = detail::single_param(spec, "hypercube", 1);
        if (d > 24)
            throw DomainError("hypercube dimension too large");
        const Graph edge = detail::path_graph(1);
        Graph g = edge;
        for (std::uint64_t i = 1; i < d; ++i)
            g = box_product(g, edge);
        return g;
    }
    case Family::grid:
    {
        const Graph side = detail::path_graph(detail::single_param(spec, "grid", 1));
        return box_product(side, side);
    }
    case Family::petersen:
        if (!spec.params.empty())
            throw DomainError("petersen takes no parameters");
        return detail::petersen_graph();
    case Family::box_product:
        if (spec.factors.size() != 2)
            throw DomainError("box_product takes exactly two factors");
        return box_product(named(spec.factors[0]), named(spec.factors[1]));
    }
    throw DomainError("unknown graph family");
}

} // namespace dhomology
