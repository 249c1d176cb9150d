/**
 * Finite simple undirected graphs.
 *
 * The adjacency relation of a graph is treated as reflexive: every vertex
 * is adjacent to itself. Loops are never stored, so `edge_count()` counts
 * only pairs of distinct vertices; `adjacent()` supplies the reflexive
 * convention at query time.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dhomology/errors.hpp"

namespace dhomology {

using Vertex = std::uint32_t;

/// Unordered pair of distinct vertices stored canonically with u < v.
struct Edge
{
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple graph on the vertices 0..n-1.
class Graph
{
public:
    Graph() = default;

    /**
     * Build a graph from an arbitrary list of vertex pairs. Self-loops are
     * dropped, and duplicate or reversed pairs collapse to a single edge.
     */
    static Graph from_edge_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs)
    {
        if (n > std::numeric_limits<Vertex>::max())
            throw DomainError("vertex count " + std::to_string(n) + " exceeds the vertex id range");

        Graph g;
        g.adj_.resize(n);
        for (auto [a, b] : pairs)
        {
            if (a >= n || b >= n)
                throw DomainError("edge (" + std::to_string(a) + "," + std::to_string(b)
                                  + ") references a vertex outside 0.." + std::to_string(n) + "-1");
            if (a == b)
                continue;
            g.adj_[a].push_back(b);
            g.adj_[b].push_back(a);
        }
        for (Vertex v = 0; v < n; ++v)
        {
            auto& nbrs = g.adj_[v];
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            for (Vertex w : nbrs)
                if (v < w)
                    g.edges_.push_back({v, w});
        }
        return g;
    }

    static Graph from_edge_list(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
    {
        return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
    }

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Sorted neighbors of `v`, excluding `v` itself.
    std::span<const Vertex> neighbors(Vertex v) const
    {
        check_vertex(v);
        return adj_[v];
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    /// All edges in lexicographic order.
    std::span<const Edge> edges() const noexcept { return edges_; }

    /// Reflexive adjacency: true when u == v or {u, v} is an edge.
    bool adjacent(Vertex u, Vertex v) const
    {
        check_vertex(u);
        check_vertex(v);
        return u == v || has_edge_unchecked(u, v);
    }

    /// Irreflexive adjacency without range checks; callers guarantee u, v < n.
    bool has_edge_unchecked(Vertex u, Vertex v) const noexcept
    {
        const auto& a = adj_[u];
        const auto& b = adj_[v];
        return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), v)
                                    : std::binary_search(b.begin(), b.end(), u);
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex v) const
    {
        if (v >= adj_.size())
            throw DomainError("vertex " + std::to_string(v) + " out of range for graph on "
                              + std::to_string(adj_.size()) + " vertices");
    }

    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

/**
 * Box product: (a,b) ~ (a',b') iff one coordinate is equal and the other
 * adjacent. Vertex (a,b) is numbered a * h.vertex_count() + b.
 */
inline Graph box_product(const Graph& g, const Graph& h)
{
    const std::size_t gn = g.vertex_count();
    const std::size_t hn = h.vertex_count();
    if (hn != 0 && gn > std::numeric_limits<Vertex>::max() / hn)
        throw DomainError("box product vertex count overflows the vertex id range");

    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(gn * h.edge_count() + hn * g.edge_count());
    auto id = [hn](std::size_t a, std::size_t b) { return static_cast<Vertex>(a * hn + b); };
    for (std::size_t a = 0; a < gn; ++a)
        for (const Edge& e : h.edges())
            pairs.emplace_back(id(a, e.u), id(a, e.v));
    for (const Edge& e : g.edges())
        for (std::size_t b = 0; b < hn; ++b)
            pairs.emplace_back(id(e.u, b), id(e.v, b));
    return Graph::from_edge_list(gn * hn, pairs);
}

/// Disjoint union; the vertices of `h` are shifted by g.vertex_count().
inline Graph disjoint_union(const Graph& g, const Graph& h)
{
    const std::size_t offset = g.vertex_count();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(g.edge_count() + h.edge_count());
    for (const Edge& e : g.edges())
        pairs.emplace_back(e.u, e.v);
    for (const Edge& e : h.edges())
        pairs.emplace_back(static_cast<Vertex>(e.u + offset), static_cast<Vertex>(e.v + offset));
    return Graph::from_edge_list(offset + h.vertex_count(), pairs);
}

struct Components
{
    std::size_t count = 0;
    std::vector<std::uint32_t> label; // in 0..count-1
};

inline Components connected_components(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    Components result;
    result.label.assign(n, unset);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s)
    {
        if (result.label[s] != unset)
            continue;
        const auto c = static_cast<std::uint32_t>(result.count++);
        result.label[s] = c;
        stack.push_back(s);
        while (!stack.empty())
        {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
            {
                if (result.label[w] == unset)
                {
                    result.label[w] = c;
                    stack.push_back(w);
                }
            }
        }
    }
    return result;
}

/**
 * Maps each canonical edge to its position in `Graph::edges()` with a
 * constant-time hash lookup.
 */
class EdgeIndex
{
public:
    explicit EdgeIndex(const Graph& g)
    {
        const auto edges = g.edges();
        index_.reserve(edges.size());
        for (std::size_t k = 0; k < edges.size(); ++k)
            index_.emplace(key(edges[k].u, edges[k].v), k);
    }

    std::size_t size() const noexcept { return index_.size(); }

    /// Position of {u, v} in either orientation, or nullopt for non-edges and loops.
    std::optional<std::size_t> find(Vertex u, Vertex v) const
    {
        if (u == v)
            return std::nullopt;
        auto it = index_.find(key(u, v));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t at(Vertex u, Vertex v) const
    {
        if (auto k = find(u, v))
            return *k;
        throw ConsistencyError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    }

private:
    static std::uint64_t key(Vertex u, Vertex v) noexcept
    {
        if (u > v)
            std::swap(u, v);
        return (std::uint64_t{u} << 32) | v;
    }

    std::unordered_map<std::uint64_t, std::size_t> index_;
};

// ------------------------------------------------------------------------
// Edge-list text format
//
//     # comment
//     n m
//     u v        (m lines)
//
// Whitespace separated decimal integers. Loops and duplicate pairs are
// tolerated when reading and normalized away.
// ------------------------------------------------------------------------

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, std::size_t& lineno)
{
    while (std::getline(in, line))
    {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        return true;
    }
    return false;
}

inline std::vector<std::uint64_t> parse_integers(const std::string& line, std::size_t lineno,
                                                 std::size_t expected)
{
    std::istringstream ss(line);
    std::vector<std::uint64_t> values;
    std::string token;
    while (ss >> token)
    {
        std::uint64_t value = 0;
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(lineno, "expected a non-negative integer, got '" + token + "'");
        try
        {
            value = std::stoull(token);
        }
        catch (const std::out_of_range&)
        {
            throw ParseError(lineno, "integer '" + token + "' is too large");
        }
        values.push_back(value);
    }
    if (values.size() != expected)
        throw ParseError(lineno, "expected " + std::to_string(expected) + " integers, got "
                                     + std::to_string(values.size()));
    return values;
}

} // namespace detail

inline Graph read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t lineno = 0;
    if (!detail::next_content_line(in, line, lineno))
        throw ParseError(lineno + 1, "missing 'n m' header");
    auto header = detail::parse_integers(line, lineno, 2);
    const std::uint64_t n = header[0];
    const std::uint64_t m = header[1];
    if (n > std::numeric_limits<Vertex>::max())
        throw ParseError(lineno, "vertex count too large");

    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 24)));
    for (std::uint64_t k = 0; k < m; ++k)
    {
        if (!detail::next_content_line(in, line, lineno))
            throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found "
                                             + std::to_string(k));
        auto uv = detail::parse_integers(line, lineno, 2);
        if (uv[0] >= n || uv[1] >= n)
            throw ParseError(lineno, "vertex id out of range 0.." + std::to_string(n) + "-1");
        pairs.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    }
    if (detail::next_content_line(in, line, lineno))
        throw ParseError(lineno, "unexpected content after " + std::to_string(m) + " edges");
    return Graph::from_edge_list(n, pairs);
}

inline void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

} // namespace dhomology
