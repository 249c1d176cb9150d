/**
 * Command-line front end.
 *
 *   dhomology compute  (--file F | --family NAME ...) [--alg A] [--threads T]
 *   dhomology gen      --family NAME ... [--out F]
 *   dhomology cycles   (--file F | --family NAME ...) [--threads T]
 *   dhomology bench    [--config F] [--full] [--out F] [--repeats K] [--seed S]
 *
 * Exit status: 0 success, 1 the methods disagree, 2 usage or input error.
 */
#pragma once

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dhomology/dhomology.hpp"

namespace dhomology::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_disagree = 1;
inline constexpr int exit_usage = 2;

struct GraphSource
{
    std::string file;
    std::string family;
    std::vector<std::uint64_t> params;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> factors;

    void attach(CLI::App* cmd, bool allow_file)
    {
        if (allow_file)
            cmd->add_option("--file", file, "Graph in edge-list format");
        cmd->add_option("--family", family,
                        "erdos_renyi|cycle|path|complete|hypercube|grid|petersen|box_product");
        cmd->add_option("--param", params, "Family parameter (repeatable)");
        cmd->add_option("--p", p, "Edge probability for erdos_renyi");
        cmd->add_option("--seed", seed, "RNG seed for erdos_renyi");
        cmd->add_option("--factor", factors, "box_product factor as family[:param[,param]] (give two)");
    }
};

/// "cycle:5" or "petersen" or "path:2".
inline GenSpec parse_factor(const std::string& text)
{
    GenSpec spec;
    const auto colon = text.find(':');
    spec.family = parse_family(text.substr(0, colon));
    if (colon != std::string::npos)
    {
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= rest.size())
        {
            const auto comma = rest.find(',', pos);
            const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw DomainError("bad factor parameter '" + tok + "' in '" + text + "'");
            spec.params.push_back(std::stoull(tok));
            if (comma == std::string::npos)
                break;
            pos = comma + 1;
        }
    }
    return spec;
}

inline GenSpec to_genspec(const GraphSource& src)
{
    GenSpec spec;
    spec.family = parse_family(src.family);
    spec.params = src.params;
    spec.p = src.p;
    spec.seed = src.seed;
    for (const auto& f : src.factors)
        spec.factors.push_back(parse_factor(f));
    return spec;
}

inline Graph load_graph(const GraphSource& src)
{
    if (!src.file.empty() && !src.family.empty())
        throw DomainError("give either --file or --family, not both");
    if (!src.file.empty())
    {
        std::ifstream in(src.file);
        if (!in)
            throw DomainError("cannot open graph file '" + src.file + "'");
        try
        {
            return read_edge_list(in);
        }
        catch (const ParseError& e)
        {
            throw DomainError(src.file + ": " + e.what());
        }
    }
    if (src.family.empty())
        throw DomainError("no graph given: use --file or --family");
    return named(to_genspec(src));
}

inline std::optional<Algorithm> parse_algorithm(const std::string& name)
{
    if (name == "cellular")
        return Algorithm::cellular;
    if (name == "edgegraph" || name == "edge_graph")
        return Algorithm::edge_graph;
    if (name == "cubical")
        return Algorithm::cubical;
    if (name == "all")
        return std::nullopt;
    throw DomainError("unknown algorithm '" + name + "'");
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"First discrete homology of graphs over Z/2"};
    app.name("dhomology");
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads, 0 = auto")->capture_default_str();

    GraphSource compute_src;
    std::string alg_name = "all";
    auto* compute = app.add_subcommand("compute", "Compute dim H1");
    compute_src.attach(compute, true);
    compute->add_option("--alg", alg_name, "cellular|edgegraph|cubical|all")->capture_default_str();
    compute->add_option("--threads", threads, "Worker threads, 0 = auto");

    GraphSource gen_src;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Write a generated graph in edge-list format");
    gen_src.attach(gen, false);
    gen->add_option("--out", gen_out, "Output path (default: stdout)");

    GraphSource cycles_src;
    auto* cycles = app.add_subcommand("cycles", "Count triangles and chordless 4-cycles");
    cycles_src.attach(cycles, true);
    cycles->add_option("--threads", threads, "Worker threads, 0 = auto");

    std::string bench_config;
    std::string bench_out = "detailed_results.csv";
    bool bench_full = false;
    std::optional<std::size_t> bench_repeats;
    std::uint64_t bench_seed = 2025;
    auto* bench = app.add_subcommand("bench", "Time the three methods on random graph categories");
    bench->add_option("--config", bench_config, "key=value category file");
    bench->add_flag("--full", bench_full, "Full-size experiment (4 x 200 graphs, n up to 300)");
    bench->add_option("--out", bench_out, "CSV output path")->capture_default_str();
    bench->add_option("--repeats", bench_repeats, "Timed runs per method and graph");
    bench->add_option("--seed", bench_seed, "Base seed for the built-in categories")->capture_default_str();
    bench->add_option("--threads", threads, "Worker threads, 0 = auto");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (*compute)
        {
            const Graph g = load_graph(compute_src);
            const auto choice = parse_algorithm(alg_name);
            std::vector<Algorithm> algs;
            if (choice)
                algs.push_back(*choice);
            else
                algs.assign(all_algorithms.begin(), all_algorithms.end());
            std::optional<std::size_t> first;
            bool agree = true;
            for (Algorithm alg : algs)
            {
                const std::size_t h1 = run_algorithm(alg, g, threads);
                out << "H1 dim = " << h1 << "  (" << algorithm_name(alg) << ")\n";
                if (first && *first != h1)
                    agree = false;
                first = first.value_or(h1);
            }
            if (!agree)
            {
                err << "error: methods disagree\n";
                return exit_disagree;
            }
            return exit_ok;
        }
        if (*gen)
        {
            const Graph g = named(to_genspec(gen_src));
            if (gen_out.empty())
            {
                write_edge_list(out, g);
            }
            else
            {
                std::ofstream f(gen_out);
                if (!f)
                    throw DomainError("cannot open '" + gen_out + "' for writing");
                write_edge_list(f, g);
            }
            return exit_ok;
        }
        if (*cycles)
        {
            const Graph g = load_graph(cycles_src);
            out << "triangles=" << triangles(g).size()
                << " four_cycles=" << simple_four_cycles(g, {.chordless = true, .threads = threads}).size()
                << '\n';
            return exit_ok;
        }
        if (*bench)
        {
            BenchConfig cfg;
            if (!bench_config.empty())
            {
                std::ifstream in(bench_config);
                if (!in)
                    throw DomainError("cannot open config '" + bench_config + "'");
                cfg = parse_bench_config(in);
            }
            else
            {
                cfg.categories = bench_full ? full_scale_categories(bench_seed) : desk_scale_categories(bench_seed);
            }
            if (bench_repeats)
                cfg.repeats = *bench_repeats;
            if (cfg.repeats == 0)
                throw DomainError("--repeats must be at least 1");

            std::vector<BenchRow> rows;
            for (const Category& cat : cfg.categories)
            {
                auto part = run_category(cat, {.repeats = cfg.repeats, .threads = threads});
                rows.insert(rows.end(), part.begin(), part.end());
            }
            write_detailed_csv(rows, bench_out);
            const auto counts = fastest_counts(rows);
            out << "graphs=" << rows.size() << " fastest: cellular=" << counts[0]
                << " edge_graph=" << counts[1] << " cubical=" << counts[2] << "  -> " << bench_out << '\n';
            return exit_ok;
        }
    }
    catch (const HomologyMismatch& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_disagree;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace dhomology::cli
