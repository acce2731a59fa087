// csf: command-line front end for the chromatic symmetric function library.
//
// Verbs: compute, enumerate, verify, search, certify.
// Exit codes: 0 pass, 1 failure found, 2 usage/parse error, 3 resource guard.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csf/chromatic.hpp"
#include "csf/enumeration.hpp"
#include "csf/harness.hpp"
#include "csf/pointed.hpp"
#include "csf/special.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct GuardBreach : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Library guards throw invalid_argument with "guard" in the message; promote
// those to the dedicated exit code.
[[noreturn]] void rethrow_classified(const std::exception& e) {
    if (std::string(e.what()).find("guard") != std::string::npos)
        throw GuardBreach(e.what());
    throw;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--graph-file", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Accepts both the multi-line file format and the one-line ";"-separated
// variant emitted by `csf enumerate`.
std::pair<csf::Graph, int> parse_graph(std::string text) {
    for (char& c : text)
        if (c == ';') c = '\n';
    return csf::graph_from_text(text);
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw CLI::ValidationError("--out", "cannot open " + out_path);
    out << payload << "\n";
}

int require_root(int root) {
    if (root < 0)
        throw CLI::ValidationError("graph", "this invariant needs a root (add a 'root r' line)");
    return root;
}

std::string compute_invariant(const std::string& invariant, const csf::Graph& g, int root,
                              int n_colors, int color_i, int k, int p,
                              const std::vector<int>& weights) {
    using namespace csf;
    const int n = g.n();
    const int N = n_colors > 0 ? n_colors : n;
    if (invariant == "X") return multipoly_json(brute_force(g, N));
    if (invariant == "X0")
        return multipoly_json(brute_force(RootedGraph(g, require_root(root)), N,
                                          ColorMode::RootEquals, 0));
    if (invariant == "Xne0")
        return multipoly_json(brute_force(RootedGraph(g, require_root(root)), N,
                                          ColorMode::RootNotEquals, 0));
    if (invariant == "Xi")
        return multipoly_json(brute_force(RootedGraph(g, require_root(root)), N,
                                          ColorMode::RootEquals, color_i));
    if (invariant == "f0")
        return unipoly_json(f_specialize(RootedGraph(g, require_root(root)), FWhich::F0));
    if (invariant == "fne0")
        return unipoly_json(f_specialize(RootedGraph(g, require_root(root)), FWhich::FNe0));
    if (invariant == "chi") return unipoly_json(chromatic_polynomial(g));
    if (invariant == "principal") {
        std::vector<UniPoly> values;
        for (int i = 0; i < n; ++i) values.push_back(UniPoly::monomial(1, i));
        if (is_tree(g)) return unipoly_json(tree_chromatic_dp(g, values));
        MultiPoly x = brute_force(g, n - 1);
        std::vector<VarTarget> targets;
        for (int i = 0; i < n; ++i) targets.push_back(VarTarget::q_power(i));
        return unipoly_json(specialize_uni(x, targets));
    }
    if (invariant == "P")
        return zpoly_json(pointed_P(RootedGraph(g, require_root(root))));
    if (invariant == "U") return uwpoly_json(u_poly(g));
    if (invariant == "Ur")
        return uwpoly_json(rooted_u(RootedGraph(g, require_root(root))));
    if (invariant == "W") {
        WeightedGraph wg;
        wg.n = n;
        for (const Edge& e : g.edges()) wg.edges.emplace_back(e.u, e.v);
        wg.weights = weights.empty() ? std::vector<int>(n, 1) : weights;
        return uwpoly_json(w_poly(wg));
    }
    if (invariant == "spec-kp") return unipoly_json(spec_kp(g, k, p));
    if (invariant == "x-2p")
        return unipoly_json(
            x_2p(RootedGraph(g, require_root(root)), p, ColorMode::RootNotEquals));
    throw CLI::ValidationError("--invariant", "unknown invariant " + invariant);
}

std::string enumerate_lines(const std::string& kind, int n) {
    using namespace csf;
    std::ostringstream os;
    if (kind == "rooted-trees") {
        for (const RootedTree& rt : rooted_trees(n)) {
            RootedGraph rg = rt.to_rooted_graph();
            os << graph_line(rg.graph(), rg.root()) << "\n";
        }
    } else if (kind == "free-trees") {
        for (const Graph& t : free_trees(n)) os << graph_line(t) << "\n";
    } else if (kind == "graphs" || kind == "connected-graphs") {
        for (const Graph& g : small_graphs(n, kind == "connected-graphs"))
            os << graph_line(g) << "\n";
    } else if (kind == "posets") {
        for (const Poset& p : posets(n)) {
            os << "poset " << p.n;
            for (int i = 0; i < p.n; ++i)
                for (int j = 0; j < p.n; ++j)
                    if (p.less(i, j)) os << "; " << i << "<" << j;
            os << "\n";
        }
    } else {
        throw CLI::ValidationError("--kind", "unknown enumeration kind " + kind);
    }
    std::string s = os.str();
    if (!s.empty()) s.pop_back();
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic symmetric functions of rooted graphs"};
    app.require_subcommand(1);
    // Let global flags (--max-n, --format, ...) appear after the verb.
    app.fallthrough();

    int max_n = 0;
    int jobs = 1;
    uint64_t seed = 1;
    std::string out_path;
    std::string format = "json";
    app.add_option("--max-n", max_n, "sweep size limit (suite default when omitted)");
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized property checks");
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    auto* compute = app.add_subcommand("compute", "compute one invariant of one graph");
    std::string graph_file, graph_inline, invariant;
    int n_colors = 0, color_i = 0, opt_k = 1, opt_p = 2;
    std::vector<int> weights;
    compute->add_option("graph-file", graph_file, "graph in text format ('-' for stdin)");
    compute->add_option("--graph", graph_inline, "inline one-line graph text");
    compute->add_option("--invariant", invariant, "invariant to compute")
        ->required()
        ->check(CLI::IsMember({"X", "X0", "Xne0", "Xi", "f0", "fne0", "chi", "principal",
                               "P", "U", "Ur", "W", "spec-kp", "x-2p"}));
    compute->add_option("--n-colors", n_colors, "N: colors are {0..N} (default n)");
    compute->add_option("--i", color_i, "color index for the Xi invariant");
    compute->add_option("--k", opt_k, "k for spec-kp");
    compute->add_option("--p", opt_p, "p for spec-kp / x-2p");
    compute->add_option("--weights", weights, "vertex weights for W");

    auto* enumerate = app.add_subcommand("enumerate", "list objects, one per line");
    std::string enum_kind;
    int enum_n = 0;
    enumerate->add_option("--kind", enum_kind, "rooted-trees|free-trees|graphs|connected-graphs|posets")
        ->required();
    enumerate->add_option("--n", enum_n, "object size")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(csf::suite_names()));

    auto* search = app.add_subcommand("search", "exhaustive collision search");
    std::string search_kind;
    int search_n = 0;
    search->add_option("--kind", search_kind, "f-unrooted|X-unrooted|X0-rooted")->required();
    search->add_option("--n", search_n, "instance size")->required();

    auto* certify = app.add_subcommand("certify",
                                       "Eisenstein irreducibility certificate for chi-based spec_kp");
    std::string certify_file;
    certify->add_option("graph-file", certify_file, "graph in text format ('-' for stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    }

    try {
        try {
            if (*compute) {
                if (graph_inline.empty() && graph_file.empty())
                    throw CLI::ValidationError("compute", "need a graph file or --graph");
                auto [g, root] =
                    parse_graph(graph_inline.empty() ? read_input(graph_file) : graph_inline);
                emit(out_path, compute_invariant(invariant, g, root, n_colors, color_i,
                                                 opt_k, opt_p, weights));
                return kExitPass;
            }
            if (*enumerate) {
                emit(out_path, enumerate_lines(enum_kind, enum_n));
                return kExitPass;
            }
            if (*verify) {
                int mx = max_n > 0 ? max_n : csf::suite_default_max_n(suite);
                csf::Report rep = csf::verify_suite(suite, mx, jobs, seed);
                emit(out_path, format == "json" ? rep.to_json() : rep.to_text());
                return rep.passed() ? kExitPass : kExitFailure;
            }
            if (*search) {
                auto groups = csf::search_collision(search_kind, search_n);
                if (format == "json") {
                    emit(out_path, csf::collisions_json(search_kind, search_n, groups));
                } else {
                    std::ostringstream os;
                    os << groups.size() << " collision group(s) for " << search_kind
                       << " at n=" << search_n << "\n";
                    for (const auto& g : groups) {
                        os << "invariant: " << g.invariant << "\n";
                        for (const auto& m : g.members) os << "  " << m << "\n";
                    }
                    std::string s = os.str();
                    s.pop_back();
                    emit(out_path, s);
                }
                return kExitPass;
            }
            if (*certify) {
                if (certify_file.empty())
                    throw CLI::ValidationError("certify", "need a graph file");
                auto [g, root] = parse_graph(read_input(certify_file));
                (void)root;
                csf::IrredCertificate cert = csf::irreducibility_certificate(g);
                if (format == "json") {
                    std::ostringstream os;
                    os << "{\"k\":" << cert.k << ",\"p\":" << cert.p << ",\"M\":" << cert.M
                       << ",\"f\":" << csf::unipoly_json(cert.f)
                       << ",\"eisenstein\":" << csf::eisenstein_report_json(cert.report)
                       << "}";
                    emit(out_path, os.str());
                } else {
                    emit(out_path, "k=" + std::to_string(cert.k) + " p=" +
                                       std::to_string(cert.p) + " f=" + cert.f.str() +
                                       (cert.report.satisfied ? " (Eisenstein holds)"
                                                              : " (FAILED: " +
                                                                    cert.report.witness + ")"));
                }
                return cert.report.satisfied ? kExitPass : kExitFailure;
            }
        } catch (const std::invalid_argument& e) {
            rethrow_classified(e);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GuardBreach& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
