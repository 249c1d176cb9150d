/**
 * Cubical method for first discrete homology.
 *
 * A singular 1-cube is an ordered pair (a, b) with a ~ b under the
 * reflexive relation; it is degenerate when a == b. A singular 2-cube is a
 * square (a, b; c, d) whose rows (a, b), (c, d) and columns (a, c), (b, d)
 * are 1-cubes; it is degenerate when its rows or its columns coincide.
 * Chains are taken on non-degenerate cubes only, with degenerate faces
 * sent to zero. Over Z/2 all boundary signs disappear.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dhomology/gf2_matrix.hpp"
#include "dhomology/graph.hpp"

namespace dhomology {

struct Cube1
{
    Vertex a, b;

    bool degenerate() const noexcept { return a == b; }
    auto operator<=>(const Cube1&) const = default;
};

/// Vertices at (0,0), (1,0), (0,1), (1,1): bottom row (a, b), top row (c, d).
struct Cube2
{
    Vertex a, b, c, d;

    Cube1 bottom() const noexcept { return {a, b}; }
    Cube1 top() const noexcept { return {c, d}; }
    Cube1 left() const noexcept { return {a, c}; }
    Cube1 right() const noexcept { return {b, d}; }

    bool degenerate() const noexcept { return bottom() == top() || left() == right(); }
    auto operator<=>(const Cube2&) const = default;
};

/**
 * All singular 1-cubes: the n constant cubes (v, v) first, then the 2m
 * ordered adjacent pairs in lexicographic order. The non-degenerate cube
 * at position n + k therefore has chain index k.
 */
inline std::vector<Cube1> singular_one_cubes(const Graph& g)
{
    const auto n = static_cast<Vertex>(g.vertex_count());
    std::vector<Cube1> out;
    out.reserve(n + 2 * g.edge_count());
    for (Vertex v = 0; v < n; ++v)
        out.push_back({v, v});
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b : g.neighbors(a))
            out.push_back({a, b});
    return out;
}

/**
 * Every ordered pair (A, B) of 1-cubes that stacks into a non-degenerate
 * 2-cube with A as bottom row and B as top row. The search is the plain
 * quadratic scan over all pairs.
 */
inline std::vector<Cube2> pair_to_two_cubes(const Graph& g, const std::vector<Cube1>& cubes)
{
    std::vector<Cube2> out;
    for (const Cube1& lo : cubes)
    {
        for (const Cube1& hi : cubes)
        {
            if (lo == hi || (lo.degenerate() && hi.degenerate()))
                continue;
            if (!g.adjacent(lo.a, hi.a) || !g.adjacent(lo.b, hi.b))
                continue;
            out.push_back({lo.a, lo.b, hi.a, hi.b});
        }
    }
    return out;
}

struct CubicalResult
{
    std::size_t h1 = 0;
    std::size_t kernel_d1 = 0;
    std::size_t rank_d2 = 0;
    std::size_t one_cubes = 0; // non-degenerate
    std::size_t two_cubes = 0; // non-degenerate
};

struct CubicalOptions
{
    /// d2 is assembled densely up to this many bytes; larger boundaries are
    /// eliminated column by column with only the pivots kept in memory.
    std::size_t dense_limit_bytes = std::size_t{512} << 20;
};

inline CubicalResult cubical_homology(const Graph& g, const CubicalOptions& opts = {})
{
    const std::size_t n = g.vertex_count();
    const auto cubes = singular_one_cubes(g);
    const std::size_t basis1 = cubes.size() - n;

    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(basis1);
    auto key = [](Cube1 c) { return (std::uint64_t{c.a} << 32) | c.b; };
    Triplets d1;
    d1.reserve(2 * basis1);
    for (std::size_t k = 0; k < basis1; ++k)
    {
        const Cube1& c = cubes[n + k];
        index.emplace(key(c), k);
        d1.emplace_back(c.a, k);
        d1.emplace_back(c.b, k);
    }

    const auto squares = pair_to_two_cubes(g, cubes);
    auto faces_of = [&](const Cube2& s, auto&& emit) {
        for (Cube1 face : {s.bottom(), s.top(), s.left(), s.right()})
            if (!face.degenerate())
                emit(index.at(key(face)));
    };

    CubicalResult r;
    r.kernel_d1 = basis1 - rank(GF2Matrix::assemble(n, basis1, d1));
    const double dense_bytes = static_cast<double>(basis1) * static_cast<double>(squares.size()) / 8.0;
    if (dense_bytes <= static_cast<double>(opts.dense_limit_bytes))
    {
        Triplets d2;
        d2.reserve(4 * squares.size());
        for (std::size_t k = 0; k < squares.size(); ++k)
            faces_of(squares[k], [&](std::size_t row) { d2.emplace_back(row, k); });
        r.rank_d2 = rank(GF2Matrix::assemble(basis1, squares.size(), d2));
    }
    else
    {
        GF2Eliminator elim(basis1);
        std::vector<GF2Matrix::Word> column(elim.words());
        for (std::size_t k = 0; k < squares.size() && !elim.full(); ++k)
        {
            std::fill(column.begin(), column.end(), 0);
            faces_of(squares[k], [&](std::size_t row) {
                column[row / GF2Matrix::word_bits] ^= GF2Matrix::Word{1} << (row % GF2Matrix::word_bits);
            });
            elim.insert(column);
        }
        r.rank_d2 = elim.rank();
    }
    r.h1 = r.kernel_d1 - r.rank_d2;
    r.one_cubes = basis1;
    r.two_cubes = squares.size();
    return r;
}

inline std::size_t h1_cubical(const Graph& g)
{
    return cubical_homology(g).h1;
}

} // namespace dhomology
