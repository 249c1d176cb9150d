/**
 * Benchmark harness comparing the cellular, edge-graph and cubical methods
 * on categories of seeded Erdős–Rényi graphs.
 */
#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dhomology/cellular.hpp"
#include "dhomology/cubical.hpp"
#include "dhomology/cycles.hpp"
#include "dhomology/edge_graph.hpp"
#include "dhomology/errors.hpp"
#include "dhomology/generators.hpp"

namespace dhomology {

enum class Algorithm
{
    cellular,
    edge_graph,
    cubical,
};

inline constexpr std::array<Algorithm, 3> all_algorithms = {Algorithm::cellular, Algorithm::edge_graph,
                                                            Algorithm::cubical};

inline constexpr std::string_view algorithm_name(Algorithm alg)
{
    switch (alg)
    {
    case Algorithm::cellular: return "cellular";
    case Algorithm::edge_graph: return "edge_graph";
    case Algorithm::cubical: return "cubical";
    }
    return "?";
}

inline std::size_t run_algorithm(Algorithm alg, const Graph& g, unsigned threads = 1)
{
    switch (alg)
    {
    case Algorithm::cellular: return h1_cellular(g, {.threads = threads});
    case Algorithm::edge_graph: return h1_edge_graph(g);
    case Algorithm::cubical: return h1_cubical(g);
    }
    throw DomainError("unknown algorithm");
}

/// Raised when the three methods disagree on a graph.
class HomologyMismatch : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Wall-clock seconds of `repeats` end-to-end runs.
inline std::vector<double> time_samples(Algorithm alg, const Graph& g, std::size_t repeats, unsigned threads = 1)
{
    if (repeats == 0)
        throw DomainError("repeats must be at least 1");
    std::vector<double> out;
    out.reserve(repeats);
    volatile std::size_t sink = 0;
    for (std::size_t r = 0; r < repeats; ++r)
    {
        const auto start = std::chrono::steady_clock::now();
        sink = run_algorithm(alg, g, threads);
        const auto stop = std::chrono::steady_clock::now();
        out.push_back(std::chrono::duration<double>(stop - start).count());
    }
    (void)sink;
    return out;
}

/// Median; the mean of the two middle values for an even count.
inline double median(std::vector<double> xs)
{
    if (xs.empty())
        throw DomainError("median of an empty sample");
    std::sort(xs.begin(), xs.end());
    const std::size_t mid = xs.size() / 2;
    return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

inline double time_algorithm(Algorithm alg, const Graph& g, std::size_t repeats, unsigned threads = 1)
{
    return median(time_samples(alg, g, repeats, threads));
}

struct IntRange
{
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

struct RealRange
{
    double lo = 0.0;
    double hi = 0.0;
};

/**
 * A family of benchmark graphs. Graph `i` is drawn from its own stream
 * seeded by mixing `seed` with `i`: first n, then p (each only when its
 * range is non-degenerate), then the Erdős–Rényi seed.
 */
struct Category
{
    int id = 1;
    IntRange n;
    RealRange p;
    std::size_t count = 0;
    std::uint64_t seed = 0;
};

struct CategoryGraph
{
    std::string name;
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    Graph graph;
};

inline CategoryGraph category_graph(const Category& cat, std::size_t index)
{
    if (cat.n.lo > cat.n.hi || !(cat.p.lo <= cat.p.hi) || cat.p.lo < 0.0 || cat.p.hi > 1.0)
        throw DomainError("invalid ranges in category " + std::to_string(cat.id));
    SplitMix64 rng(splitmix64_mix(cat.seed ^ splitmix64_mix(index + 1)));
    CategoryGraph out;
    out.n = cat.n.lo == cat.n.hi ? cat.n.lo : rng.uniform_int(cat.n.lo, cat.n.hi);
    out.p = cat.p.lo == cat.p.hi ? cat.p.lo : cat.p.lo + (cat.p.hi - cat.p.lo) * rng.uniform01();
    out.seed = rng.next();
    std::string idx = std::to_string(index);
    out.name = "cat" + std::to_string(cat.id) + "_" + std::string(idx.size() < 4 ? 4 - idx.size() : 0, '0') + idx;
    out.graph = erdos_renyi(out.n, out.p, out.seed);
    return out;
}

/// Column order of the benchmark CSV.
struct BenchRow
{
    std::string graph_name;
    std::size_t n = 0;
    double p = 0.0;
    std::size_t tri_count = 0;
    std::size_t quad_count = 0;
    std::size_t cell_total = 0;
    std::size_t h1_dim = 0;
    double t_cellular = 0.0;
    double t_edgegraph = 0.0;
    double t_cubical = 0.0;
    double ratio_eg_cell = 0.0;
    double ratio_cub_cell = 0.0;
    double ratio_cub_eg = 0.0;
    std::string fastest;
};

inline constexpr std::string_view csv_header =
    "graph_name,n,p,num_3_cycles,num_4_cycles,total_cycles,h1_dim,cellular_time,edge_graph_time,"
    "cubical_time,ratio_edgegraph_over_cellular,ratio_cubical_over_cellular,ratio_cubical_over_edgegraph,"
    "fastest";

inline double safe_ratio(double num, double den)
{
    return den > 0.0 ? num / den : 0.0;
}

/// Fill the ratio and `fastest` columns from the three times.
inline void finish_row(BenchRow& row)
{
    row.ratio_eg_cell = safe_ratio(row.t_edgegraph, row.t_cellular);
    row.ratio_cub_cell = safe_ratio(row.t_cubical, row.t_cellular);
    row.ratio_cub_eg = safe_ratio(row.t_cubical, row.t_edgegraph);
    const std::array<double, 3> times = {row.t_cellular, row.t_edgegraph, row.t_cubical};
    const auto best = static_cast<std::size_t>(std::min_element(times.begin(), times.end()) - times.begin());
    row.fastest = std::string(algorithm_name(all_algorithms[best]));
}

struct BenchOptions
{
    std::size_t repeats = 3;
    unsigned threads = 1;
};

/**
 * Time all three methods on one graph. Each method gets one untimed
 * warm-up run whose answer is cross-checked before the timed repeats.
 */
inline BenchRow bench_graph(const CategoryGraph& cg, const BenchOptions& opts)
{
    BenchRow row;
    row.graph_name = cg.name;
    row.n = cg.n;
    row.p = cg.p;
    row.tri_count = triangles(cg.graph).size();
    row.quad_count = simple_four_cycles(cg.graph, {.chordless = true, .threads = opts.threads}).size();
    row.cell_total = row.tri_count + row.quad_count;

    std::array<std::size_t, 3> h1{};
    for (std::size_t k = 0; k < all_algorithms.size(); ++k)
        h1[k] = run_algorithm(all_algorithms[k], cg.graph, opts.threads);
    if (h1[0] != h1[1] || h1[0] != h1[2])
        throw HomologyMismatch("H1 disagreement on " + cg.name + " (er seed " + std::to_string(cg.seed)
                               + "): cellular=" + std::to_string(h1[0]) + " edge_graph="
                               + std::to_string(h1[1]) + " cubical=" + std::to_string(h1[2]));
    row.h1_dim = h1[0];
    row.t_cellular = time_algorithm(Algorithm::cellular, cg.graph, opts.repeats, opts.threads);
    row.t_edgegraph = time_algorithm(Algorithm::edge_graph, cg.graph, opts.repeats, opts.threads);
    row.t_cubical = time_algorithm(Algorithm::cubical, cg.graph, opts.repeats, opts.threads);
    finish_row(row);
    return row;
}

inline std::vector<BenchRow> run_category(const Category& cat, const BenchOptions& opts = {})
{
    std::vector<BenchRow> rows;
    rows.reserve(cat.count);
    for (std::size_t i = 0; i < cat.count; ++i)
        rows.push_back(bench_graph(category_graph(cat, i), opts));
    return rows;
}

/// Reduced-size version of the published experiment.
inline std::vector<Category> desk_scale_categories(std::uint64_t seed = 2025)
{
    return {
        {1, {40, 120}, {0.07, 0.07}, 15, seed + 1},
        {2, {40, 120}, {0.13, 0.13}, 15, seed + 2},
        {3, {80, 80}, {0.07, 0.13}, 15, seed + 3},
        {4, {120, 120}, {0.07, 0.13}, 15, seed + 4},
    };
}

/// The published experiment: 4 x 200 graphs with n up to 300.
inline std::vector<Category> full_scale_categories(std::uint64_t seed = 2025)
{
    return {
        {1, {100, 300}, {0.07, 0.07}, 200, seed + 1},
        {2, {100, 300}, {0.13, 0.13}, 200, seed + 2},
        {3, {100, 100}, {0.07, 0.13}, 200, seed + 3},
        {4, {300, 300}, {0.07, 0.13}, 200, seed + 4},
    };
}

// ------------------------------------------------------------------------
// CSV
// ------------------------------------------------------------------------

namespace detail {

inline std::string format_fixed6(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 6);
    return std::string(buf, res.ptr);
}

inline std::string format_shortest(double x)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

template <typename T>
T parse_field(std::string_view s, std::size_t lineno, std::string_view column)
{
    T value{};
    auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ParseError(lineno, "bad value '" + std::string(s) + "' in column " + std::string(column));
    return value;
}

} // namespace detail

inline std::string format_row(const BenchRow& r)
{
    using detail::format_fixed6;
    std::string out;
    out += r.graph_name;
    out += ',' + std::to_string(r.n);
    out += ',' + detail::format_shortest(r.p);
    out += ',' + std::to_string(r.tri_count);
    out += ',' + std::to_string(r.quad_count);
    out += ',' + std::to_string(r.cell_total);
    out += ',' + std::to_string(r.h1_dim);
    out += ',' + format_fixed6(r.t_cellular);
    out += ',' + format_fixed6(r.t_edgegraph);
    out += ',' + format_fixed6(r.t_cubical);
    out += ',' + format_fixed6(r.ratio_eg_cell);
    out += ',' + format_fixed6(r.ratio_cub_cell);
    out += ',' + format_fixed6(r.ratio_cub_eg);
    out += ',' + r.fastest;
    return out;
}

inline void write_detailed_csv(std::ostream& out, const std::vector<BenchRow>& rows)
{
    out << csv_header << '\n';
    for (const BenchRow& r : rows)
        out << format_row(r) << '\n';
}

inline void write_detailed_csv(const std::vector<BenchRow>& rows, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_detailed_csv(out, rows);
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing '" + path + "'");
}

inline std::vector<BenchRow> read_detailed_csv(std::istream& in)
{
    using detail::parse_field;
    std::string line;
    std::size_t lineno = 1;
    if (!std::getline(in, line) || line != csv_header)
        throw ParseError(lineno, "unexpected CSV header");
    std::vector<BenchRow> rows;
    while (std::getline(in, line))
    {
        ++lineno;
        if (line.empty())
            continue;
        std::vector<std::string_view> f;
        std::string_view rest(line);
        for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
            f.push_back(rest.substr(0, pos));
        f.push_back(rest);
        if (f.size() != 14)
            throw ParseError(lineno, "expected 14 fields, got " + std::to_string(f.size()));
        BenchRow r;
        r.graph_name = std::string(f[0]);
        r.n = parse_field<std::size_t>(f[1], lineno, "n");
        r.p = parse_field<double>(f[2], lineno, "p");
        r.tri_count = parse_field<std::size_t>(f[3], lineno, "num_3_cycles");
        r.quad_count = parse_field<std::size_t>(f[4], lineno, "num_4_cycles");
        r.cell_total = parse_field<std::size_t>(f[5], lineno, "total_cycles");
        r.h1_dim = parse_field<std::size_t>(f[6], lineno, "h1_dim");
        r.t_cellular = parse_field<double>(f[7], lineno, "cellular_time");
        r.t_edgegraph = parse_field<double>(f[8], lineno, "edge_graph_time");
        r.t_cubical = parse_field<double>(f[9], lineno, "cubical_time");
        r.ratio_eg_cell = parse_field<double>(f[10], lineno, "ratio_edgegraph_over_cellular");
        r.ratio_cub_cell = parse_field<double>(f[11], lineno, "ratio_cubical_over_cellular");
        r.ratio_cub_eg = parse_field<double>(f[12], lineno, "ratio_cubical_over_edgegraph");
        r.fastest = std::string(f[13]);
        rows.push_back(std::move(r));
    }
    return rows;
}

/// Count of rows won by each method, in `all_algorithms` order.
inline std::array<std::size_t, 3> fastest_counts(const std::vector<BenchRow>& rows)
{
    std::array<std::size_t, 3> counts{};
    for (const BenchRow& r : rows)
        for (std::size_t k = 0; k < all_algorithms.size(); ++k)
            if (r.fastest == algorithm_name(all_algorithms[k]))
                ++counts[k];
    return counts;
}

// ------------------------------------------------------------------------
// key=value bench configuration
//
//     repeats = 5
//     category.1.n = 40:120      # or a single value
//     category.1.p = 0.07        # or lo:hi
//     category.1.count = 15
//     category.1.seed = 7
// ------------------------------------------------------------------------

struct BenchConfig
{
    std::vector<Category> categories;
    std::size_t repeats = 3;
};

inline BenchConfig parse_bench_config(std::istream& in)
{
    BenchConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    auto trim = [](std::string_view s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string_view::npos)
            return std::string_view{};
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    auto category = [&cfg](int id) -> Category& {
        for (auto& c : cfg.categories)
            if (c.id == id)
                return c;
        cfg.categories.push_back({.id = id, .n = {}, .p = {}, .count = 0,
                                  .seed = static_cast<std::uint64_t>(id)});
        return cfg.categories.back();
    };

    while (std::getline(in, line))
    {
        ++lineno;
        std::string_view s(line);
        if (auto hash = s.find('#'); hash != std::string_view::npos)
            s = s.substr(0, hash);
        s = trim(s);
        if (s.empty())
            continue;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(lineno, "expected key = value");
        const std::string_view key = trim(s.substr(0, eq));
        const std::string_view value = trim(s.substr(eq + 1));
        using detail::parse_field;

        if (key == "repeats")
        {
            cfg.repeats = parse_field<std::size_t>(value, lineno, key);
            if (cfg.repeats == 0)
                throw ParseError(lineno, "repeats must be at least 1");
            continue;
        }
        constexpr std::string_view prefix = "category.";
        const auto dot = key.find('.', prefix.size());
        if (key.substr(0, prefix.size()) != prefix || dot == std::string_view::npos)
            throw ParseError(lineno, "unknown key '" + std::string(key) + "'");
        const int id = parse_field<int>(key.substr(prefix.size(), dot - prefix.size()), lineno, "category id");
        const std::string_view field = key.substr(dot + 1);
        Category& cat = category(id);
        const auto colon = value.find(':');
        const std::string_view lo = colon == std::string_view::npos ? value : value.substr(0, colon);
        const std::string_view hi = colon == std::string_view::npos ? value : value.substr(colon + 1);
        if (field == "n")
            cat.n = {parse_field<std::uint64_t>(lo, lineno, key), parse_field<std::uint64_t>(hi, lineno, key)};
        else if (field == "p")
            cat.p = {parse_field<double>(lo, lineno, key), parse_field<double>(hi, lineno, key)};
        else if (field == "count")
            cat.count = parse_field<std::size_t>(value, lineno, key);
        else if (field == "seed")
            cat.seed = parse_field<std::uint64_t>(value, lineno, key);
        else
            throw ParseError(lineno, "unknown category field '" + std::string(field) + "'");
        if (cat.n.lo > cat.n.hi || cat.p.lo > cat.p.hi || cat.p.lo < 0.0 || cat.p.hi > 1.0)
            throw ParseError(lineno, "invalid range for '" + std::string(key) + "'");
    }
    return cfg;
}

} // namespace dhomology
