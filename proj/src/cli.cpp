#include "nervepool/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "nervepool/cover.hpp"
#include "nervepool/errors.hpp"
#include "nervepool/generators.hpp"
#include "nervepool/homology.hpp"
#include "nervepool/io.hpp"
#include "nervepool/verify.hpp"

namespace nervepool {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << content;
}

void print_outcome(std::ostream& out, const std::string& name, const BatchOutcome& outcome) {
    out << name << ": " << outcome.passed << "/" << (outcome.passed + outcome.failed)
        << " passed\n";
    for (const VerificationReport& failure : outcome.failures) {
        out << "  seed " << failure.instance.seed << " (n0=" << failure.instance.n0
            << ", dim=" << failure.instance.dim << ", clusters=" << failure.instance.clusters
            << "): " << failure.detail << "\n";
    }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simplicial complex coarsening by vertex-cluster pooling"};
    app.name("nervepool");
    app.require_subcommand(1);

    std::string complex_path;
    std::string partition_path;
    std::string out_path;
    std::vector<std::string> feature_paths;
    bool normalize_adjacency = false;

    CLI::App* pool_cmd = app.add_subcommand("pool", "Pool a complex with a vertex partition");
    pool_cmd->add_option("--complex", complex_path, "Complex file")->required();
    pool_cmd->add_option("--partition", partition_path, "Partition file")->required();
    pool_cmd->add_option("--features", feature_paths, "Per-dimension feature files");
    pool_cmd->add_flag("--normalize-adjacency", normalize_adjacency,
                       "Include degree-normalized adjacency matrices");
    pool_cmd->add_option("--out", out_path, "Output file")->required();

    CLI::App* nerve_cmd =
        app.add_subcommand("nerve", "Pool through the extended-cover nerve construction");
    nerve_cmd->add_option("--complex", complex_path, "Complex file")->required();
    nerve_cmd->add_option("--partition", partition_path, "Partition file")->required();
    nerve_cmd->add_option("--out", out_path, "Output complex file")->required();

    CLI::App* betti_cmd = app.add_subcommand("betti", "Print the Betti numbers of a complex");
    betti_cmd->add_option("--complex", complex_path, "Complex file")->required();

    std::string suite = "all";
    int instances = 100;
    std::uint64_t seed = 42;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the property-check suites");
    verify_cmd->add_option("--suite", suite, "equivalence|identity|permutation|all")
        ->check(CLI::IsMember({"equivalence", "identity", "permutation", "all"}));
    verify_cmd->add_option("--instances", instances, "Instances per suite")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed, "Base seed");

    int gen_vertices = 10;
    int gen_max_dim = 2;
    double gen_density = 0.5;
    std::uint64_t gen_seed = 0;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Emit a seeded random complex");
    gen_cmd->add_option("--vertices", gen_vertices, "Vertex count")->required();
    gen_cmd->add_option("--max-dim", gen_max_dim, "Maximum simplex dimension")->required();
    gen_cmd->add_option("--density", gen_density, "Edge/promotion probability")->required();
    gen_cmd->add_option("--seed", gen_seed, "Seed")->required();
    gen_cmd->add_option("--out", out_path, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (pool_cmd->parsed()) {
            const SimplicialComplex k = parse_complex(read_file(complex_path));
            const VertexAssignment s0 = parse_partition(read_file(partition_path), k);
            std::vector<FeatureMatrix> features;
            for (const std::string& path : feature_paths) {
                features.push_back(parse_features(read_file(path), k));
            }
            const PooledResult result = pool(k, s0, features);
            write_file(out_path, pooled_output_json(k, result, normalize_adjacency));
        } else if (nerve_cmd->parsed()) {
            const SimplicialComplex k = parse_complex(read_file(complex_path));
            const VertexAssignment s0 = parse_partition(read_file(partition_path), k);
            const NerveComplex pooled = pool_via_nerve(k, to_cover(s0));
            write_file(out_path, serialize_complex(pooled));
        } else if (betti_cmd->parsed()) {
            const SimplicialComplex k = parse_complex(read_file(complex_path));
            const BettiVector b = betti(k);
            for (std::size_t i = 0; i < b.size(); ++i) {
                out << (i > 0 ? " " : "") << b[i];
            }
            out << "\n";
        } else if (verify_cmd->parsed()) {
            bool failed = false;
            if (suite == "equivalence" || suite == "all") {
                const BatchOutcome outcome = run_equivalence_suite(instances, seed);
                print_outcome(out, "equivalence", outcome);
                failed = failed || outcome.failed > 0;
            }
            if (suite == "identity" || suite == "all") {
                const BatchOutcome outcome = run_identity_suite(instances, seed);
                print_outcome(out, "identity", outcome);
                failed = failed || outcome.failed > 0;
            }
            if (suite == "permutation" || suite == "all") {
                const BatchOutcome outcome = run_permutation_suite(instances, seed);
                print_outcome(out, "permutation", outcome);
                failed = failed || outcome.failed > 0;
            }
            if (failed) {
                return 2;
            }
        } else if (gen_cmd->parsed()) {
            const SimplicialComplex k =
                random_complex(gen_seed, gen_vertices, gen_max_dim, gen_density);
            std::ostringstream content;
            content << "# vertices=" << gen_vertices << " max-dim=" << gen_max_dim
                    << " density=" << gen_density << " seed=" << gen_seed << "\n"
                    << serialize_complex(k);
            if (out_path.empty()) {
                out << content.str();
            } else {
                write_file(out_path, content.str());
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace nervepool
