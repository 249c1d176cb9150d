/**
 * Enumeration of triangles and chordless 4-cycles, the short simple cycles
 * that carry 2-cells in the cellular complex of a graph.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "dhomology/graph.hpp"

namespace dhomology {

/**
 * A simple 3- or 4-cycle in canonical form: the lexicographically least
 * vertex sequence among all rotations and reflections.
 */
class SimpleCycle
{
public:
    SimpleCycle() = default;

    std::size_t length() const noexcept { return length_; }
    std::span<const Vertex> vertices() const noexcept { return {verts_.data(), length_}; }
    Vertex operator[](std::size_t i) const noexcept { return verts_[i]; }

    /// The cycle's edges {v_i, v_{i+1 mod k}}, each in canonical orientation.
    std::array<Edge, 4> edges() const noexcept
    {
        std::array<Edge, 4> out{};
        for (std::size_t i = 0; i < length_; ++i)
        {
            Vertex a = verts_[i];
            Vertex b = verts_[(i + 1) % length_];
            out[i] = a < b ? Edge{a, b} : Edge{b, a};
        }
        return out;
    }

    auto operator<=>(const SimpleCycle&) const = default;

    friend SimpleCycle canonicalize(std::span<const Vertex> verts);

private:
    std::array<Vertex, 4> verts_{};
    std::uint8_t length_ = 0;
};

/// Least rotation or reflection of a 3- or 4-vertex cycle.
inline SimpleCycle canonicalize(std::span<const Vertex> verts)
{
    const std::size_t k = verts.size();
    if (k != 3 && k != 4)
        throw DomainError("only 3- and 4-cycles are supported, got length " + std::to_string(k));

    std::array<Vertex, 4> best{};
    bool have = false;
    for (std::size_t start = 0; start < k; ++start)
    {
        for (int dir : {1, -1})
        {
            std::array<Vertex, 4> cand{};
            for (std::size_t i = 0; i < k; ++i)
            {
                const auto step = static_cast<std::ptrdiff_t>(i) * dir;
                const auto idx = ((static_cast<std::ptrdiff_t>(start) + step) % static_cast<std::ptrdiff_t>(k)
                                  + static_cast<std::ptrdiff_t>(k))
                                 % static_cast<std::ptrdiff_t>(k);
                cand[i] = verts[static_cast<std::size_t>(idx)];
            }
            if (!have || std::lexicographical_compare(cand.begin(), cand.begin() + k, best.begin(), best.begin() + k))
            {
                best = cand;
                have = true;
            }
        }
    }
    SimpleCycle c;
    c.verts_ = best;
    c.length_ = static_cast<std::uint8_t>(k);
    return c;
}

inline SimpleCycle canonicalize(std::initializer_list<Vertex> verts)
{
    return canonicalize(std::span<const Vertex>(verts.begin(), verts.size()));
}

/**
 * Every triangle exactly once, sorted. For each edge (u, v) with u < v the
 * sorted neighbor lists are intersected, keeping only apexes w > v.
 */
inline std::vector<SimpleCycle> triangles(const Graph& g)
{
    std::vector<SimpleCycle> out;
    for (const Edge& e : g.edges())
    {
        auto nu = g.neighbors(e.u);
        auto nv = g.neighbors(e.v);
        auto a = std::upper_bound(nu.begin(), nu.end(), e.v);
        auto b = std::upper_bound(nv.begin(), nv.end(), e.v);
        while (a != nu.end() && b != nv.end())
        {
            if (*a < *b)
                ++a;
            else if (*b < *a)
                ++b;
            else
            {
                const Vertex tri[3] = {e.u, e.v, *a};
                out.push_back(canonicalize(tri));
                ++a;
                ++b;
            }
        }
    }
    return out;
}

struct FourCycleOptions
{
    /// Reject 4-cycles that have a chord (a diagonal that is also an edge).
    bool chordless = true;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 1;
};

namespace detail {

/**
 * 4-cycles whose least vertex lies in [first, last). A cycle u-v-w-v' with
 * least vertex u is found from the 2-paths u-v-w, bucketed by endpoint w;
 * every pair of middles in a bucket closes a cycle.
 */
inline void four_cycles_from(const Graph& g, Vertex first, Vertex last, bool chordless,
                             std::vector<SimpleCycle>& out)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Vertex>> middles(n);
    std::vector<Vertex> touched;
    for (Vertex u = first; u < last; ++u)
    {
        for (Vertex v : g.neighbors(u))
        {
            if (v <= u)
                continue;
            for (Vertex w : g.neighbors(v))
            {
                if (w <= u)
                    continue;
                if (middles[w].empty())
                    touched.push_back(w);
                middles[w].push_back(v);
            }
        }
        for (Vertex w : touched)
        {
            auto& mids = middles[w];
            if (mids.size() >= 2 && !(chordless && g.has_edge_unchecked(u, w)))
            {
                for (std::size_t i = 0; i < mids.size(); ++i)
                {
                    for (std::size_t j = i + 1; j < mids.size(); ++j)
                    {
                        if (chordless && g.has_edge_unchecked(mids[i], mids[j]))
                            continue;
                        const Vertex quad[4] = {u, mids[i], w, mids[j]};
                        out.push_back(canonicalize(quad));
                    }
                }
            }
            mids.clear();
        }
        touched.clear();
    }
}

} // namespace detail

/**
 * Every 4-cycle exactly once, sorted; by default only the chordless ones.
 * The result is identical for any thread count.
 */
inline std::vector<SimpleCycle> simple_four_cycles(const Graph& g, FourCycleOptions opts = {})
{
    const auto n = static_cast<Vertex>(g.vertex_count());
    unsigned workers = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.threads;
    workers = std::min<unsigned>(workers, std::max<Vertex>(n, 1));

    std::vector<SimpleCycle> out;
    if (workers <= 1)
    {
        detail::four_cycles_from(g, 0, n, opts.chordless, out);
    }
    else
    {
        // Interleave small blocks of start vertices; low ids start more 2-paths.
        constexpr Vertex block = 16;
        std::vector<std::vector<SimpleCycle>> parts(workers);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t)
        {
            pool.emplace_back([&, t] {
                for (Vertex b = t * block; b < n; b += workers * block)
                    detail::four_cycles_from(g, b, std::min<Vertex>(b + block, n), opts.chordless, parts[t]);
            });
        }
        for (auto& th : pool)
            th.join();
        for (auto& p : parts)
            out.insert(out.end(), p.begin(), p.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dhomology
