#include "support.hpp"

#include "commands.hpp"

#include <splitirr/decomposer.hpp>
#include <splitirr/errors.hpp>
#include <splitirr/io.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace splitirr;
using namespace splitirr::testing;
namespace fs = std::filesystem;

namespace
{
    class Scratch : public ::testing::Test
    {
    protected:
        void SetUp() override
        {
            const auto * info = ::testing::UnitTest::GetInstance()->current_test_info();
            dir = fs::temp_directory_path() / (std::string("splitirr_") + info->test_suite_name() + "_" + info->name());
            fs::remove_all(dir);
            fs::create_directories(dir);
        }

        void TearDown() override { fs::remove_all(dir); }

        fs::path write(const std::string & name, const std::string & text)
        {
            auto p = dir / name;
            std::ofstream(p) << text;
            return p;
        }

        fs::path write_graph_file(const std::string & name, const Graph & g)
        {
            std::ostringstream s;
            splitirr::write_graph(s, g);
            return write(name, s.str());
        }

        struct Run
        {
            int code;
            std::string out, err;
        };

        Run cli(std::vector<std::string> args)
        {
            args.insert(args.begin(), "splitirr");
            std::vector<const char *> argv;
            for (const auto & a : args)
                argv.push_back(a.c_str());
            std::ostringstream out, err;
            int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
            return {code, out.str(), err.str()};
        }

        fs::path dir;
    };

    bool contains(const std::string & hay, const std::string & needle)
    {
        return hay.find(needle) != std::string::npos;
    }
}

TEST(ParseGraph, RoundTrip)
{
    auto g = make(5, {{0, 1}, {1, 2}, {3, 4}});
    std::stringstream s;
    write_graph(s, g, {"three edges"});
    EXPECT_TRUE(contains(s.str(), "c three edges\n"));
    EXPECT_EQ(parse_graph(s), g);
}

TEST(ParseGraph, ReportsTheOffendingLine)
{
    auto line_of = [](const std::string & text) {
        std::istringstream in(text);
        try {
            parse_graph(in);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return -1;
    };
    EXPECT_EQ(line_of("p edge 3 2\ne 1 2\ne 2 1\n"), 3);
    EXPECT_EQ(line_of("c hi\np edge 3 1\ne 1 4\n"), 3);
    EXPECT_EQ(line_of("p edge 3 1\ne 2 2\n"), 2);
    EXPECT_EQ(line_of("e 1 2\n"), 1);
    EXPECT_EQ(line_of("p edge 3 1\nx 1 2\n"), 2);
    EXPECT_EQ(line_of("p edge 3 1\ne 1 2 3\n"), 2);
    EXPECT_GE(line_of("p edge 3 2\ne 1 2\n"), 0);
    EXPECT_GE(line_of(""), 0);
}

TEST(ParseColoring, AcceptsCommentsAndRejectsBadLines)
{
    auto g = share(path(3));
    std::istringstream good("# comment\n1 2 1\n\n2 3 2\n");
    auto col = parse_coloring(good, g);
    EXPECT_EQ(col.color(0), red);
    EXPECT_EQ(col.color(1), blue);
    EXPECT_EQ(col.k(), 2);

    for (std::string bad : {"1 2 4\n2 3 1\n", "1 3 1\n2 3 1\n", "1 2 1\n1 2 2\n2 3 1\n", "1 2 1\n", "1 2\n2 3 1\n"}) {
        std::istringstream in(bad);
        EXPECT_THROW(parse_coloring(in, g), InputError) << bad;
    }
}

TEST(WriteColoring, RoundTrip)
{
    auto dec = decompose_graph(Graph::complete(6));
    std::stringstream s;
    write_coloring(s, *dec.result.certificate);
    auto back = parse_coloring(s, dec.result.certificate->graph_ptr());
    EXPECT_EQ(back.colors(), dec.result.certificate->colors());
}

TEST(ToDot, ColoursAndAnnotations)
{
    auto k2 = share(Graph::complete(2));
    auto dot = to_dot(EdgeColoring(k2, 1, {1}));
    EXPECT_TRUE(contains(dot, "1 -- 2 [color=red]"));

    auto dec = decompose_graph(Graph::complete(10));
    auto text = to_dot(*dec.result.certificate, dec.partition);
    for (auto c : {"color=red", "color=blue", "color=green"})
        EXPECT_TRUE(contains(text, c)) << c;
    EXPECT_TRUE(contains(text, "shape=box"));
    EXPECT_TRUE(contains(text, "v1 d=0"));
}

TEST_F(Scratch, ChiOnCompleteGraph)
{
    auto r = cli({"chi", write_graph_file("k4.graph", Graph::complete(4)).string()});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_TRUE(contains(r.out, "chi=3 rule=clique-three-coloring")) << r.out;
}

TEST_F(Scratch, ChiOnPathAndCycle)
{
    auto p4 = cli({"chi", write_graph_file("p4.graph", path(4)).string()});
    EXPECT_EQ(p4.code, cli::not_decomposable);
    EXPECT_TRUE(contains(p4.out, "not decomposable (K2/K3/P4)"));
    auto c5 = cli({"chi", write_graph_file("c5.graph", cycle(5)).string()});
    EXPECT_EQ(c5.code, cli::not_split);
    EXPECT_TRUE(contains(c5.out, "not a split graph"));
}

TEST_F(Scratch, ChiWritesAVerifiableCertificate)
{
    auto graph = write_graph_file("g.graph", pendant_split({3, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0}));
    auto cert = dir / "g.col";
    auto r = cli({"chi", graph.string(), "--certificate", cert.string()});
    EXPECT_EQ(r.code, cli::ok);
    ASSERT_TRUE(fs::exists(cert));
    EXPECT_EQ(cli({"verify", graph.string(), cert.string()}).code, cli::ok);
}

TEST_F(Scratch, ChiWithOracle)
{
    auto small = cli({"chi", write_graph_file("k4.graph", Graph::complete(4)).string(), "--oracle"});
    EXPECT_EQ(small.code, cli::ok);
    EXPECT_TRUE(contains(small.out, "agree"));
    auto big = cli({"chi", write_graph_file("k10.graph", Graph::complete(10)).string(), "--oracle"});
    EXPECT_EQ(big.code, cli::ok);
    EXPECT_TRUE(contains(big.out, "skipped"));
}

TEST_F(Scratch, ChiBatchOverDirectory)
{
    fs::create_directories(dir / "batch");
    write_graph_file("batch/a.graph", Graph::complete(4));
    write_graph_file("batch/b.graph", path(4));
    write_graph_file("batch/c.graph", cycle(5));
    auto r = cli({"chi", (dir / "batch").string(), "--jobs", "3"});
    EXPECT_EQ(r.code, cli::ok);
    auto a = r.out.find("a.graph"), b = r.out.find("b.graph"), c = r.out.find("c.graph");
    EXPECT_LT(a, b);
    EXPECT_LT(b, c);
    EXPECT_TRUE(contains(r.out, "not a split graph"));

    write("batch/d.graph", "p edge 2 1\n");
    EXPECT_EQ(cli({"chi", (dir / "batch").string()}).code, cli::input_error);
    EXPECT_EQ(cli({"chi", (dir / "batch").string(), "--certificate", "x"}).code, cli::input_error);
}

TEST_F(Scratch, VerifyGoldenAndConflicts)
{
    auto golden = cli({"verify", (data_dir() / "golden_a_n8.graph").string(), (data_dir() / "golden_a_n8.col").string()});
    EXPECT_EQ(golden.code, cli::ok);

    auto k3 = write_graph_file("k3.graph", Graph::complete(3));
    auto all_one = write("k3.col", "1 2 1\n1 3 1\n2 3 1\n");
    auto bad = cli({"verify", k3.string(), all_one.string()});
    EXPECT_EQ(bad.code, cli::conflicts);
    EXPECT_TRUE(contains(bad.out, "3 conflicting edges"));

    auto missing = write("missing.col", "1 2 1\n1 3 1\n");
    EXPECT_EQ(cli({"verify", k3.string(), missing.string()}).code, cli::input_error);
    auto colour4 = write("c4.col", "1 2 4\n1 3 1\n2 3 1\n");
    EXPECT_EQ(cli({"verify", k3.string(), colour4.string()}).code, cli::input_error);
}

TEST_F(Scratch, Oracle)
{
    auto r = cli({"oracle", write_graph_file("k4.graph", Graph::complete(4)).string()});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_TRUE(contains(r.out, "chi=3"));
    auto k3 = cli({"oracle", write_graph_file("k3.graph", Graph::complete(3)).string()});
    EXPECT_EQ(k3.code, cli::not_decomposable);
    auto big = cli({"oracle", write_graph_file("k10.graph", Graph::complete(10)).string()});
    EXPECT_EQ(big.code, cli::input_error);
}

TEST_F(Scratch, GenIsDeterministic)
{
    std::vector<std::string> args{"gen", "--n", "10", "--d", "5,0,0,0,0,0,0,0,0,0", "--y", "1,1,1,1,1", "--seed", "7"};
    auto first = cli(args), second = cli(args);
    EXPECT_EQ(first.code, cli::ok);
    EXPECT_EQ(first.out, second.out);
    std::istringstream in(first.out);
    EXPECT_EQ(parse_graph(in).edge_count(), 50);

    auto bistar = cli({"gen", "--n", "2", "--d", "2,2", "--y", "1,1,1,1"});
    std::istringstream bin(bistar.out);
    auto g = parse_graph(bin);
    EXPECT_EQ(g.edge_count(), 5);
    EXPECT_EQ(cli({"gen", "--n", "2", "--d", "2,2", "--y", "1,1,1"}).code, cli::input_error);
}

TEST_F(Scratch, ExportDot)
{
    auto k2 = write_graph_file("k2.graph", Graph::complete(2));
    auto r = cli({"export-dot", k2.string(), write("k2.col", "1 2 1\n").string()});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_TRUE(contains(r.out, "color=red"));
    EXPECT_EQ(cli({"export-dot", k2.string(), write("bad.col", "1 2 4\n").string()}).code, cli::input_error);
}

TEST_F(Scratch, UsageErrors)
{
    EXPECT_EQ(cli({}).code, cli::input_error);
    EXPECT_EQ(cli({"chi"}).code, cli::input_error);
    EXPECT_EQ(cli({"chi", (dir / "nope.graph").string()}).code, cli::input_error);
    EXPECT_EQ(cli({"bogus"}).code, cli::input_error);
}
