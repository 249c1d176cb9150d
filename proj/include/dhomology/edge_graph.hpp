/**
 * Edge-graph method for first discrete homology.
 *
 * 1-chains are the edges of the graph. 2-chains are square maps
 * (v, w, v', w') with v ~ w, v ~ v', w ~ w', v' ~ w' found by a local
 * search around each vertex; faces that are loops vanish.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <iterator>
#include <span>
#include <vector>

#include "dhomology/gf2_matrix.hpp"
#include "dhomology/graph.hpp"

namespace dhomology {

struct Square
{
    Vertex v, w, v2, w2;

    /// Faces {v,w}, {v',w'}, {w,w'}, {v,v'} as unordered pairs (possibly loops).
    std::array<std::pair<Vertex, Vertex>, 4> faces() const noexcept
    {
        return {{{v, w}, {v2, w2}, {w, w2}, {v, v2}}};
    }

    auto operator<=>(const Square&) const = default;
};

/**
 * For each v, each pair w < v' of neighbors above v, and each
 * w' in N+(w) ∩ N+(v') with w' >= v, emit (v, w, v', w') and
 * (v, v', w, w'). N+ is the reflexive neighborhood, so w' may coincide
 * with w or v'; those squares are the degenerate ones that bound
 * triangles.
 */
inline std::vector<Square> enumerate_squares(const Graph& g)
{
    std::vector<Square> out;
    std::vector<Vertex> plus_w, plus_v2, common;
    // N+(x) restricted to entries >= floor, sorted.
    auto reflexive_from = [&g](Vertex x, Vertex floor, std::vector<Vertex>& buf) {
        auto nx = g.neighbors(x);
        buf.assign(std::lower_bound(nx.begin(), nx.end(), floor), nx.end());
        if (x >= floor)
            buf.insert(std::upper_bound(buf.begin(), buf.end(), x), x);
    };

    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex v = 0; v < n; ++v)
    {
        auto nv = g.neighbors(v);
        for (auto wi = std::upper_bound(nv.begin(), nv.end(), v); wi != nv.end(); ++wi)
        {
            const Vertex w = *wi;
            reflexive_from(w, v, plus_w);
            for (auto vi = wi + 1; vi != nv.end(); ++vi)
            {
                const Vertex v2 = *vi;
                reflexive_from(v2, v, plus_v2);
                common.clear();
                std::set_intersection(plus_w.begin(), plus_w.end(), plus_v2.begin(), plus_v2.end(),
                                      std::back_inserter(common));
                for (Vertex w2 : common)
                {
                    out.push_back({v, w, v2, w2});
                    out.push_back({v, v2, w, w2});
                }
            }
        }
    }
    return out;
}

/// Edge x square boundary matrix; loop faces are dropped, repeated faces cancel.
inline GF2Matrix square_boundary_matrix(const EdgeIndex& index, std::span<const Square> squares)
{
    Triplets d2;
    d2.reserve(4 * squares.size());
    for (std::size_t k = 0; k < squares.size(); ++k)
        for (auto [a, b] : squares[k].faces())
            if (auto e = index.find(a, b))
                d2.emplace_back(*e, k);
    return GF2Matrix::assemble(index.size(), squares.size(), d2);
}

struct EdgeGraphResult
{
    std::size_t h1 = 0;
    std::size_t rank_m1 = 0;
    std::size_t rank_m2 = 0;
    std::size_t squares = 0;
};

inline EdgeGraphResult edge_graph_homology(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    const EdgeIndex index(g);

    Triplets d1;
    d1.reserve(2 * m);
    const auto edges = g.edges();
    for (std::size_t k = 0; k < m; ++k)
    {
        d1.emplace_back(edges[k].u, k);
        d1.emplace_back(edges[k].v, k);
    }

    const auto squares = enumerate_squares(g);

    EdgeGraphResult r;
    r.rank_m1 = rank(GF2Matrix::assemble(n, m, d1));
    r.rank_m2 = rank(square_boundary_matrix(index, squares));
    r.h1 = m - r.rank_m1 - r.rank_m2;
    r.squares = squares.size();
    return r;
}

inline std::size_t h1_edge_graph(const Graph& g)
{
    return edge_graph_homology(g).h1;
}

} // namespace dhomology
