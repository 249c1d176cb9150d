/**
 * First homology of a graph through its cellular 2-complex: the graph
 * itself as 1-skeleton with a 2-cell attached along every triangle and
 * every chordless 4-cycle. Over Z/2,
 *
 *     dim H1 = m - rank(M1) - rank(M2)
 *
 * where M1 is the vertex-edge incidence block and M2 the edge-cell block
 * of the boundary matrix.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dhomology/cycles.hpp"
#include "dhomology/gf2_matrix.hpp"
#include "dhomology/graph.hpp"

namespace dhomology {

/// Index layout of the boundary matrix.
struct ColumnTable
{
    IndexRange vertex_rows;
    IndexRange edge_rows;
    IndexRange edge_cols;
    IndexRange cycle_cols;
    EdgeIndex edge_index;
};

/**
 * Boundary matrix of shape (n+m) x (n+m+S). The first n columns are
 * reserved and always zero; columns [n, n+m) are edge boundaries, followed
 * by S cell boundaries (triangles first, then 4-cycles, in input order).
 */
struct BoundaryMatrix
{
    GF2Matrix matrix;
    ColumnTable table;

    GF2Matrix m1() const { return column_block(matrix, table.vertex_rows, table.edge_cols); }
    GF2Matrix m2() const { return column_block(matrix, table.edge_rows, table.cycle_cols); }
};

inline BoundaryMatrix build_boundary_matrix(const Graph& g, std::span<const SimpleCycle> tris,
                                            std::span<const SimpleCycle> quads)
{
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    const std::size_t s = tris.size() + quads.size();
    ColumnTable table{
        .vertex_rows = {0, n},
        .edge_rows = {n, n + m},
        .edge_cols = {n, n + m},
        .cycle_cols = {n + m, n + m + s},
        .edge_index = EdgeIndex(g),
    };

    Triplets entries;
    entries.reserve(2 * m + 3 * tris.size() + 4 * quads.size());
    const auto edges = g.edges();
    for (std::size_t k = 0; k < m; ++k)
    {
        entries.emplace_back(edges[k].u, n + k);
        entries.emplace_back(edges[k].v, n + k);
    }
    std::size_t col = n + m;
    for (auto cells : {tris, quads})
    {
        for (const SimpleCycle& c : cells)
        {
            const auto cell_edges = c.edges();
            for (std::size_t i = 0; i < c.length(); ++i)
                entries.emplace_back(n + table.edge_index.at(cell_edges[i].u, cell_edges[i].v), col);
            ++col;
        }
    }
    return {GF2Matrix::assemble(n + m, n + m + s, entries), std::move(table)};
}

struct CellularResult
{
    std::size_t h1 = 0;
    std::size_t rank_m1 = 0;
    std::size_t rank_m2 = 0;
    std::size_t triangles = 0;
    std::size_t four_cycles = 0;
};

struct CellularOptions
{
    unsigned threads = 1;
};

/// Full cellular computation with the intermediate ranks and cell counts.
inline CellularResult cellular_homology(const Graph& g, CellularOptions opts = {})
{
    const auto tris = triangles(g);
    const auto quads = simple_four_cycles(g, {.chordless = true, .threads = opts.threads});
    const BoundaryMatrix bm = build_boundary_matrix(g, tris, quads);

    CellularResult r;
    r.rank_m1 = rank(bm.m1());
    r.rank_m2 = rank(bm.m2());
    r.h1 = g.edge_count() - r.rank_m1 - r.rank_m2;
    r.triangles = tris.size();
    r.four_cycles = quads.size();
    return r;
}

/**
 * dim H1 over Z/2. For a disconnected graph this is the sum over its
 * components.
 */
inline std::size_t h1_cellular(const Graph& g, CellularOptions opts = {})
{
    return cellular_homology(g, opts).h1;
}

} // namespace dhomology
