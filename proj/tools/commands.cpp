#include "commands.hpp"

#include <splitirr/decomposer.hpp>
#include <splitirr/errors.hpp>
#include <splitirr/io.hpp>
#include <splitirr/oracle.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;

using std::make_shared;
using std::ostream;
using std::string;
using std::vector;

namespace splitirr::cli
{
    namespace
    {
        struct ChiOptions
        {
            string input;
            string certificate;
            bool oracle = false;
            int k_max = 4;
            int budget = 40;
            int jobs = 1;
        };

        string join(const vector<int> & xs)
        {
            string s;
            for (size_t i = 0; i < xs.size(); ++i)
                s += (i ? "," : "") + std::to_string(xs[i]);
            return s;
        }

        struct Outcome
        {
            int code = ok;
            string text;
        };

        Outcome chi_one(const string & path, const ChiOptions & opt, bool write_certificate)
        {
            std::ostringstream out;
            Outcome o;
            try {
                auto g = read_graph(path);
                out << "vertices=" << g.vertex_count() << " edges=" << g.edge_count();
                GraphDecomposition dec;
                try {
                    dec = decompose_graph(g);
                }
                catch (const NotSplit &) {
                    out << "\nnot a split graph\n";
                    return {not_split, out.str()};
                }
                out << " isolated=" << dec.isolated.size() << '\n';
                out << "n=" << dec.partition->n() << " d=(" << join(dec.partition->d) << ")\n";

                const auto & r = dec.result;
                if (! r.status.decomposable) {
                    out << "not decomposable (K2/K3/P4)\n";
                    o.code = not_decomposable;
                }
                else
                    out << r.status.to_string() << " rule=" << r.rule << '\n';
                if (! r.repairs.empty()) {
                    out << "repairs:";
                    for (const auto & step : r.repairs)
                        out << ' ' << step;
                    out << '\n';
                }

                if (opt.oracle) {
                    if (g.edge_count() > opt.budget)
                        out << "oracle: skipped (" << g.edge_count() << " edges exceed budget " << opt.budget << ")\n";
                    else {
                        auto oracle = oracle_chi(g, opt.k_max, opt.budget);
                        bool agree = oracle.chi == r.status;
                        out << "oracle: " << oracle.chi.to_string() << " nodes=" << oracle.nodes_explored
                            << (agree ? " agree" : " DISAGREE") << '\n';
                        if (! agree)
                            o.code = oracle_disagrees;
                    }
                }

                if (write_certificate && ! opt.certificate.empty() && r.certificate) {
                    std::ofstream cert(opt.certificate);
                    if (! cert)
                        throw InputError("cannot write certificate " + opt.certificate);
                    write_coloring(cert, *r.certificate);
                    out << "certificate: " << opt.certificate << '\n';
                }
            }
            catch (const InputError & e) {
                out << "error: " << e.what() << '\n';
                o.code = input_error;
            }
            catch (const std::exception & e) {
                out << "error: " << e.what() << '\n';
                o.code = input_error;
            }
            o.text = out.str();
            return o;
        }

        int cmd_chi(const ChiOptions & opt, ostream & out, ostream & err)
        {
            if (! fs::is_directory(opt.input)) {
                auto o = chi_one(opt.input, opt, true);
                (o.code == input_error ? err : out) << o.text;
                return o.code;
            }
            if (! opt.certificate.empty()) {
                err << "error: --certificate needs a single input file\n";
                return input_error;
            }

            vector<string> files;
            for (const auto & entry : fs::directory_iterator(opt.input))
                if (entry.is_regular_file())
                    files.push_back(entry.path().string());
            std::sort(files.begin(), files.end());

            vector<Outcome> outcomes(files.size());
            std::atomic<size_t> next{0};
            auto worker = [&] {
                for (size_t i = next++; i < files.size(); i = next++)
                    outcomes[i] = chi_one(files[i], opt, false);
            };
            vector<std::thread> pool;
            for (int t = 1; t < std::max(1, opt.jobs); ++t)
                pool.emplace_back(worker);
            worker();
            for (auto & t : pool)
                t.join();

            int code = ok;
            for (size_t i = 0; i < files.size(); ++i) {
                out << "== " << files[i] << '\n' << outcomes[i].text;
                if (outcomes[i].code == input_error)
                    code = input_error;
                else if (outcomes[i].code == oracle_disagrees && code == ok)
                    code = oracle_disagrees;
            }
            return code;
        }

        int cmd_verify(const string & graph_path, const string & colouring_path, ostream & out)
        {
            auto g = make_shared<const Graph>(read_graph(graph_path));
            auto col = read_coloring(colouring_path, g);
            auto report = verify_decomposition(col);
            if (report.clean()) {
                out << "clean: locally irregular " << col.colors_used() << "-edge coloring\n";
                return ok;
            }
            for (const auto & c : report.conflicts)
                out << "conflict: " << c.edge.u + 1 << ' ' << c.edge.v + 1 << " colour=" << color_name(c.color)
                    << " degree=" << c.degree << '\n';
            out << report.conflicts.size() << " conflicting edges\n";
            return conflicts;
        }

        int cmd_oracle(const string & graph_path, int k_max, int budget, ostream & out)
        {
            auto g = read_graph(graph_path);
            auto r = oracle_chi(g, k_max, budget);
            out << r.chi.to_string() << " nodes=" << r.nodes_explored << '\n';
            return r.chi.decomposable ? ok : not_decomposable;
        }

        int cmd_gen(int n, const vector<int> & d, const vector<int> & y, std::uint64_t seed, ostream & out)
        {
            auto g = gen_split_graph(n, d, y, seed);
            write_graph(out, g, {"gen n=" + std::to_string(n) + " d=" + join(d) + " y=" + join(y) + " seed=" + std::to_string(seed)});
            return ok;
        }

        int cmd_export_dot(const string & graph_path, const string & colouring_path, ostream & out)
        {
            auto g = make_shared<const Graph>(read_graph(graph_path));
            auto col = read_coloring(colouring_path, g);
            std::optional<SplitPartition> partition;
            try {
                partition = split_partition(g);
            }
            catch (const NotSplit &) {
            }
            out << to_dot(col, partition);
            return ok;
        }
    }

    int run(int argc, const char * const * argv, ostream & out, ostream & err)
    {
        CLI::App app{"Irregular chromatic index of split graphs"};
        app.require_subcommand(1);

        ChiOptions chi;
        auto * chi_cmd = app.add_subcommand("chi", "classify a graph file (or every file in a directory) and build a certificate");
        chi_cmd->add_option("input", chi.input, "graph file or directory")->required();
        chi_cmd->add_option("--certificate", chi.certificate, "write the certifying colouring here");
        chi_cmd->add_flag("--oracle", chi.oracle, "cross-check with the exhaustive oracle");
        chi_cmd->add_option("--k-max", chi.k_max, "largest colour count the oracle tries")->check(CLI::Range(1, 4));
        chi_cmd->add_option("--budget", chi.budget, "oracle edge budget");
        chi_cmd->add_option("--jobs", chi.jobs, "worker threads for directory input")->check(CLI::PositiveNumber);

        string graph_path, colouring_path;
        auto * verify_cmd = app.add_subcommand("verify", "check a colouring for conflicting edges");
        verify_cmd->add_option("graph", graph_path)->required();
        verify_cmd->add_option("coloring", colouring_path)->required();

        int k_max = 4, budget = 40;
        auto * oracle_cmd = app.add_subcommand("oracle", "exhaustive irregular chromatic index");
        oracle_cmd->add_option("graph", graph_path)->required();
        oracle_cmd->add_option("--k-max", k_max)->check(CLI::Range(1, 4));
        oracle_cmd->add_option("--budget", budget, "edge budget");

        int n = 0;
        vector<int> d, y;
        std::uint64_t seed = 1;
        auto * gen_cmd = app.add_subcommand("gen", "generate a split graph");
        gen_cmd->add_option("--n", n, "clique size")->required();
        gen_cmd->add_option("--d", d, "Y-degree of each clique vertex")->delimiter(',')->required();
        gen_cmd->add_option("--y", y, "degree of each Y vertex")->delimiter(',');
        gen_cmd->add_option("--seed", seed, "generator seed");

        auto * dot_cmd = app.add_subcommand("export-dot", "render a coloured graph as DOT");
        dot_cmd->add_option("graph", graph_path)->required();
        dot_cmd->add_option("coloring", colouring_path)->required();

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? ok : input_error;
        }

        try {
            if (*chi_cmd)
                return cmd_chi(chi, out, err);
            if (*verify_cmd)
                return cmd_verify(graph_path, colouring_path, out);
            if (*oracle_cmd)
                return cmd_oracle(graph_path, k_max, budget, out);
            if (*gen_cmd)
                return cmd_gen(n, d, y, seed, out);
            if (*dot_cmd)
                return cmd_export_dot(graph_path, colouring_path, out);
        }
        catch (const InputError & e) {
            err << "error: " << e.what() << '\n';
            return input_error;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return input_error;
        }
        return input_error;
    }
}
