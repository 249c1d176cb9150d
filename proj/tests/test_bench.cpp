#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dhomology/bench.hpp"

using namespace dhomology;

namespace {

std::string non_time_columns(const BenchRow& r)
{
    std::string line = format_row(r);
    std::size_t pos = 0;
    for (int i = 0; i < 7; ++i)
        pos = line.find(',', pos) + 1;
    return line.substr(0, pos);
}

std::size_t count_lines(const std::string& s)
{
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

} // namespace

TEST_CASE("timing primitives")
{
    const Graph c5 = named({.family = Family::cycle, .params = {5}});
    for (Algorithm alg : all_algorithms)
    {
        const double t = time_algorithm(alg, c5, 3);
        CHECK(std::isfinite(t));
        CHECK(t > 0.0);
    }
    const auto one = time_samples(Algorithm::cellular, c5, 1);
    REQUIRE(one.size() == 1);
    CHECK(median(one) == one[0]);

    const auto five = time_samples(Algorithm::cubical, c5, 5);
    REQUIRE(five.size() == 5);
    const double med = median(five);
    CHECK(med >= *std::min_element(five.begin(), five.end()));
    CHECK(med <= *std::max_element(five.begin(), five.end()));

    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
    CHECK_THROWS_AS(median({}), DomainError);
    CHECK_THROWS_AS(time_samples(Algorithm::cellular, c5, 0), DomainError);
}

TEST_CASE("run_algorithm dispatches all three methods")
{
    const Graph petersen = named({.family = Family::petersen});
    for (Algorithm alg : all_algorithms)
        CHECK(run_algorithm(alg, petersen) == 6);
    CHECK(algorithm_name(Algorithm::edge_graph) == "edge_graph");
}

TEST_CASE("category graphs are reproducible and respect their ranges")
{
    const Category cat{.id = 3, .n = {20, 60}, .p = {0.07, 0.13}, .count = 20, .seed = 5};
    for (std::size_t i = 0; i < cat.count; ++i)
    {
        const auto a = category_graph(cat, i);
        const auto b = category_graph(cat, i);
        CHECK(a.graph == b.graph);
        CHECK(a.name == b.name);
        CHECK(a.n >= 20);
        CHECK(a.n <= 60);
        CHECK(a.p >= 0.07);
        CHECK(a.p <= 0.13);
        CHECK(a.graph.vertex_count() == a.n);
    }
    CHECK(category_graph(cat, 7).name == "cat3_0007");
    CHECK(category_graph(cat, 0).graph != category_graph(cat, 1).graph);
    CHECK_THROWS_AS(category_graph({.id = 1, .n = {5, 4}, .p = {0.1, 0.1}, .count = 1, .seed = 0}, 0), DomainError);
}

TEST_CASE("run_category produces verified rows")
{
    const Category cat{.id = 1, .n = {20, 60}, .p = {0.07, 0.07}, .count = 10, .seed = 11};
    const auto rows = run_category(cat, {.repeats = 1});
    REQUIRE(rows.size() == 10);
    for (const auto& r : rows)
    {
        CHECK(r.p == 0.07);
        CHECK(r.cell_total == r.tri_count + r.quad_count);
        const std::array<double, 3> t = {r.t_cellular, r.t_edgegraph, r.t_cubical};
        const auto best = std::min_element(t.begin(), t.end()) - t.begin();
        CHECK(r.fastest == algorithm_name(all_algorithms[static_cast<std::size_t>(best)]));
        CHECK(r.ratio_eg_cell == Catch::Approx(r.t_edgegraph / r.t_cellular));
    }

    CHECK(run_category({.id = 2, .n = {10, 10}, .p = {0.1, 0.1}, .count = 0, .seed = 1}).empty());

    const auto complete = run_category({.id = 4, .n = {6, 6}, .p = {1.0, 1.0}, .count = 3, .seed = 2}, {.repeats = 1});
    for (const auto& r : complete)
    {
        CHECK(r.h1_dim == 0);
        CHECK(r.tri_count == 20);
        CHECK(r.quad_count == 0);
    }
}

TEST_CASE("non-time columns are reproducible")
{
    const Category cat{.id = 2, .n = {15, 40}, .p = {0.13, 0.13}, .count = 6, .seed = 99};
    const auto a = run_category(cat, {.repeats = 1});
    const auto b = run_category(cat, {.repeats = 1});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(non_time_columns(a[i]) == non_time_columns(b[i]));
}

TEST_CASE("detailed CSV format")
{
    std::ostringstream empty;
    write_detailed_csv(empty, {});
    CHECK(empty.str() == std::string(csv_header) + "\n");

    BenchRow row{.graph_name = "cat1_0000", .n = 120, .p = 0.1234567891, .tri_count = 3, .quad_count = 4,
                 .cell_total = 7, .h1_dim = 9, .t_cellular = 0.25, .t_edgegraph = 0.5, .t_cubical = 1.0};
    finish_row(row);
    CHECK(row.fastest == "cellular");
    CHECK(row.ratio_cub_eg == 2.0);

    std::ostringstream one;
    write_detailed_csv(one, {row});
    CHECK(count_lines(one.str()) == 2);
    CHECK(one.str().substr(one.str().find('\n') + 1)
          == "cat1_0000,120,0.1234567891,3,4,7,9,0.250000,0.500000,1.000000,2.000000,4.000000,2.000000,cellular\n");

    std::istringstream in(one.str());
    const auto back = read_detailed_csv(in);
    REQUIRE(back.size() == 1);
    CHECK(back[0].graph_name == row.graph_name);
    CHECK(back[0].n == row.n);
    CHECK(back[0].p == row.p);
    CHECK(back[0].tri_count == row.tri_count);
    CHECK(back[0].quad_count == row.quad_count);
    CHECK(back[0].cell_total == row.cell_total);
    CHECK(back[0].h1_dim == row.h1_dim);
    CHECK(back[0].t_cellular == row.t_cellular);
    CHECK(back[0].fastest == row.fastest);
    std::ostringstream again;
    write_detailed_csv(again, back);
    CHECK(again.str() == one.str());

    std::istringstream bad_header("graph,n\n");
    CHECK_THROWS_AS(read_detailed_csv(bad_header), ParseError);
    std::istringstream short_row(std::string(csv_header) + "\na,1,2\n");
    CHECK_THROWS_WITH(read_detailed_csv(short_row), Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("CSV file output")
{
    const auto dir = std::filesystem::temp_directory_path() / "dhomology_test_bench";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "detailed_results.csv").string();
    write_detailed_csv({}, path);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == csv_header);
    CHECK_THROWS_AS(write_detailed_csv({}, (dir / "no_such_dir" / "x.csv").string()), std::runtime_error);
}

TEST_CASE("bench configuration file")
{
    std::istringstream in(R"(# desk run
repeats = 4
category.1.n = 20:40
category.1.p = 0.07
category.1.count = 3
category.1.seed = 17
category.3.n = 50
category.3.p = 0.07:0.13   # random p
category.3.count = 2
)");
    const auto cfg = parse_bench_config(in);
    CHECK(cfg.repeats == 4);
    REQUIRE(cfg.categories.size() == 2);
    const auto& c1 = cfg.categories[0];
    CHECK(c1.id == 1);
    CHECK(c1.n.lo == 20);
    CHECK(c1.n.hi == 40);
    CHECK(c1.p.lo == 0.07);
    CHECK(c1.p.hi == 0.07);
    CHECK(c1.count == 3);
    CHECK(c1.seed == 17);
    const auto& c3 = cfg.categories[1];
    CHECK(c3.n.lo == 50);
    CHECK(c3.n.hi == 50);
    CHECK(c3.p.hi == 0.13);

    std::istringstream unknown("colour = red\n");
    CHECK_THROWS_AS(parse_bench_config(unknown), ParseError);
    std::istringstream bad_range("category.1.p = 0.5:0.2\n");
    CHECK_THROWS_AS(parse_bench_config(bad_range), ParseError);
    std::istringstream no_eq("repeats 3\n");
    CHECK_THROWS_WITH(parse_bench_config(no_eq), Catch::Matchers::ContainsSubstring("line 1"));
}

TEST_CASE("built-in categories follow the four-category design")
{
    for (const auto& cats : {desk_scale_categories(), full_scale_categories()})
    {
        REQUIRE(cats.size() == 4);
        CHECK(cats[0].p.lo == 0.07);
        CHECK(cats[0].p.hi == 0.07);
        CHECK(cats[1].p.lo == 0.13);
        CHECK(cats[1].p.hi == 0.13);
        for (int k : {2, 3})
        {
            CHECK(cats[k].p.lo == 0.07);
            CHECK(cats[k].p.hi == 0.13);
            CHECK(cats[k].n.lo == cats[k].n.hi);
        }
        CHECK(cats[2].n.lo < cats[3].n.lo);
    }
    const auto full = full_scale_categories();
    CHECK(full[0].count == 200);
    CHECK(full[0].n.lo == 100);
    CHECK(full[0].n.hi == 300);
    CHECK(full[2].n.lo == 100);
    CHECK(full[3].n.lo == 300);
}
