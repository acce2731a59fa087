#include "csf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "csf/chromatic.hpp"
#include "csf/enumeration.hpp"
#include "csf/pointed.hpp"
#include "csf/special.hpp"
#include "vendor_json.hpp"

namespace csf {

std::string graph_line(const Graph& g, int root) {
    std::string text = graph_to_text(g, root);
    std::string out;
    for (char c : text) {
        if (c == '\n') {
            if (!out.empty()) out += "; ";
        } else {
            out += c;
        }
    }
    while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
    return out;
}

namespace {

struct Task {
    std::string instance;
    std::function<std::string()> check; // empty string = pass
};

Report run_tasks(const std::string& suite, int max_n, uint64_t seed, int jobs,
                 std::vector<Task> tasks) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.suite = suite;
    rep.max_n = max_n;
    rep.seed = seed;
    rep.instances = static_cast<long>(tasks.size());
    std::string repro = "csf verify " + suite + " --max-n " + std::to_string(max_n) +
                        " --seed " + std::to_string(seed);

    std::vector<std::pair<size_t, Failure>> fails;
    std::mutex mu;
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            std::string detail;
            try {
                detail = tasks[i].check();
            } catch (const std::exception& e) {
                detail = std::string("exception: ") + e.what();
            }
            if (!detail.empty()) {
                std::lock_guard lk(mu);
                fails.emplace_back(i, Failure{tasks[i].instance, detail, repro});
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(fails.begin(), fails.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [i, f] : fails) rep.failures.push_back(std::move(f));
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---------------------------------------------------------------- generators

template <typename F>
void for_connected(int max_n, F&& fn) {
    for (int n = 1; n <= std::min(max_n, 7); ++n)
        for (const Graph& g : small_graphs(n, true)) fn(g);
}

// ---------------------------------------------------------------- suites

void build_identities(int max_n, std::vector<Task>& tasks) {
    for_connected(max_n, [&](const Graph& g) {
        const int n = g.n();
        tasks.push_back({graph_line(g) + " [pointing]", [g, n] {
                             return pointing_check(g, n) ? "" : "pointing identity fails";
                         }});
        for (int r = 0; r < n; ++r) {
            RootedGraph rg(g, r);
            tasks.push_back({graph_line(g, r), [rg, n]() -> std::string {
                const int N = n;
                MultiPoly x = brute_force(rg.graph(), N);
                MultiPoly x0 = brute_force(rg, N, ColorMode::RootEquals, 0);
                MultiPoly sum = x0;
                for (int i = 1; i <= N; ++i) {
                    MultiPoly xi = brute_force(rg, N, ColorMode::RootEquals, i);
                    if (xi != apply_transposition(x0, 0, i))
                        return "reln2: X_i != (0,i).X_0 at i=" + std::to_string(i);
                    sum += xi;
                }
                if (x != sum) return "reln: X != sum_i X_i";
                MultiPoly xne0 = brute_force(rg, N, ColorMode::RootNotEquals, 0);
                if (x != x0 + xne0) return "reln: X != X_0 + X_{!=0}";
                if (x != recover_X_from_Xne0(xne0, N))
                    return "x0-det: X != (1/N) sum (0,i).X_{!=0}";
                if (x0 != x0_from_xne0(xne0, N)) return "x0-det: X_0 recovery fails";
                X0Det2Report d2 = x0det2_relations(rg);
                if (!d2.all()) {
                    std::string bad;
                    if (!d2.a) bad += "a";
                    if (!d2.b) bad += "b";
                    if (!d2.c) bad += "c";
                    if (!d2.d) bad += "d";
                    if (!d2.e) bad += "e";
                    return "x0-det2 parts failing: " + bad;
                }
                return std::string();
            }});
        }
    });
}

void build_power_sum(int max_n, std::vector<Task>& tasks) {
    for_connected(max_n, [&](const Graph& g) {
        const int n = g.n();
        tasks.push_back({graph_line(g) + " [stan-p]", [g, n]() -> std::string {
            if (expand_vars_all(powersum_X(g), n) != brute_force(g, n))
                return "stan-p: power-sum expansion differs from brute force";
            return "";
        }});
        for (int r = 0; r < n; ++r) {
            RootedGraph rg(g, r);
            tasks.push_back({graph_line(g, r), [rg, n]() -> std::string {
                const int N = n;
                MultiPoly x0 = brute_force(rg, N, ColorMode::RootEquals, 0);
                if (expand_powersum_X0(powersum_X0(rg), N) != x0)
                    return "p-exp: X_0 power-sum expansion differs from brute force";
                MultiPoly xne0 = brute_force(rg, N, ColorMode::RootNotEquals, 0);
                for (int k = 0; k <= N; ++k) {
                    if (k >= 1 &&
                        expand_vars(coeff_zk(rg, k, true), N) != x0.coeff_of(0, k))
                        return "coeff-zk: X_0 coefficient of z^" + std::to_string(k);
                    if (expand_vars(coeff_zk(rg, k, false), N) != xne0.coeff_of(0, k))
                        return "coeff-zk: X_{!=0} coefficient of z^" + std::to_string(k);
                }
                return std::string();
            }});
        }
    });
}

void build_deletion_contraction(int max_n, std::vector<Task>& tasks) {
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        for (const RootedTree& rt : rooted_trees(n)) {
            RootedGraph rg = rt.to_rooted_graph();
            tasks.push_back({graph_line(rg.graph(), rg.root()) + " [tree]",
                             [rg, n]() -> std::string {
                MultiPoly a = brute_force(rg, n, ColorMode::RootEquals, 0);
                MultiPoly b = x0_tree_recursion(rg, n);
                MultiPoly c = x0_deletion_contraction(rg, n);
                if (a != b) return "brute force != tree recursion";
                if (a != c) return "brute force != deletion-contraction";
                return "";
            }});
        }
    }
    for_connected(std::min(max_n, 6), [&](const Graph& g) {
        if (is_tree(g)) return; // already covered above
        const int n = g.n();
        for (int r = 0; r < n; ++r) {
            RootedGraph rg(g, r);
            tasks.push_back({graph_line(g, r), [rg, n]() -> std::string {
                if (brute_force(rg, n, ColorMode::RootEquals, 0) !=
                    x0_deletion_contraction(rg, n))
                    return "brute force != deletion-contraction";
                return "";
            }});
        }
    });
}

void build_distinguish_rooted(int max_n, uint64_t seed, std::vector<Task>& tasks) {
    for (int n = 1; n <= std::min(max_n, 16); ++n) {
        tasks.push_back({"rooted trees n=" + std::to_string(n) + " [distinct]",
                         [n]() -> std::string {
            std::map<std::string, RootedGraph> seen;
            for (const RootedTree& rt : rooted_trees(n)) {
                RootedGraph rg = rt.to_rooted_graph();
                std::string key = f0_tree_fast(rg).str();
                auto [it, fresh] = seen.emplace(key, rg);
                if (!fresh)
                    return "f_0 collision: " + graph_line(it->second.graph(), it->second.root()) +
                           " vs " + graph_line(rg.graph(), rg.root()) + " share " + key;
            }
            return "";
        }});
        tasks.push_back({"rooted trees n=" + std::to_string(n) + " [iso-invariance]",
                         [n, seed]() -> std::string {
            std::mt19937_64 rng(seed * 1000003 + n);
            auto all = rooted_trees(n);
            size_t samples = std::min<size_t>(all.size(), 50);
            for (size_t s = 0; s < samples; ++s) {
                const RootedTree& rt = all[rng() % all.size()];
                RootedGraph a = rt.to_rooted_graph();
                std::vector<int> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                std::shuffle(perm.begin(), perm.end(), rng);
                Graph g2(n);
                for (const Edge& e : a.graph().edges()) g2.add_edge(perm[e.u], perm[e.v]);
                RootedGraph b(g2, perm[a.root()]);
                if (f0_tree_fast(a) != f0_tree_fast(b))
                    return "f_0 differs under relabeling of " +
                           graph_line(a.graph(), a.root());
            }
            return "";
        }});
    }
}

void build_principal(int max_n, std::vector<Task>& tasks) {
    for (int n = 1; n <= std::min(max_n, 16); ++n) {
        tasks.push_back({"free trees n=" + std::to_string(n) + " [distinct]",
                         [n]() -> std::string {
            std::vector<UniPoly> values;
            for (int i = 0; i < n; ++i) values.push_back(UniPoly::monomial(1, i));
            std::map<std::string, Graph> seen;
            for (const Graph& t : free_trees(n)) {
                std::string key = tree_chromatic_dp(t, values).str();
                auto [it, fresh] = seen.emplace(key, t);
                if (!fresh)
                    return "principal specialization collision: " + graph_line(it->second) +
                           " vs " + graph_line(t);
            }
            return "";
        }});
    }
}

void build_eisenstein_trees(int max_n, std::vector<Task>& tasks) {
    for (int n = 1; n <= std::min(max_n, 12); ++n) {
        for (const RootedTree& rt : rooted_trees(n)) {
            RootedGraph rg = rt.to_rooted_graph();
            for (long p : {2L, 3L, 5L, 7L}) {
                tasks.push_back({graph_line(rg.graph(), rg.root()) + " [p=" +
                                     std::to_string(p) + "]",
                                 [rg, n, p]() -> std::string {
                    UniPoly f = x_2p(rg, static_cast<int>(p), ColorMode::RootNotEquals);
                    if (f.degree() != n) return "X_{!=0}^{2,p} degree != n";
                    if (f.coeff(n) != 1) return "X_{!=0}^{2,p} not monic";
                    EisensteinReport r = eisenstein(f, p);
                    if (!r.satisfied) return "Eisenstein fails: " + r.witness;
                    return "";
                }});
            }
        }
    }
}

void build_eisenstein_bipartite(int max_n, std::vector<Task>& tasks) {
    for_connected(max_n, [&](const Graph& g) {
        const int n = g.n();
        if (is_bipartite(g)) {
            for (int r = 0; r < n; ++r) {
                RootedGraph rg(g, r);
                tasks.push_back({graph_line(g, r) + " [p=2]", [rg, n]() -> std::string {
                    UniPoly f = x_2p(rg, 2, ColorMode::RootNotEquals);
                    if (f.degree() != n) return "X_{!=0}^{2,2} degree != n";
                    if (f.coeff(n) != 1) return "X_{!=0}^{2,2} not monic";
                    EisensteinReport r2 = eisenstein(f, 2);
                    if (!r2.satisfied) return "Eisenstein fails: " + r2.witness;
                    return "";
                }});
            }
        }
        if (n <= 6) {
            tasks.push_back({graph_line(g) + " [certificate]", [g]() -> std::string {
                IrredCertificate c = irreducibility_certificate(g);
                if (!c.report.satisfied)
                    return "certificate (k=" + std::to_string(c.k) + ", p=" +
                           std::to_string(c.p) + ") fails: " + c.report.witness;
                if (c.f.degree() != g.n()) return "certificate polynomial degree != n";
                return "";
            }});
        }
    });
}

void build_parity(int max_n, std::vector<Task>& tasks) {
    for (int n = 1; n <= std::min(max_n, 7); ++n)
        for (const Graph& g : small_graphs(n, false))
            tasks.push_back({graph_line(g), [g]() -> std::string {
                return linear_coeff_parity(g) ? "" : "parity of c_1 inconsistent";
            }});
}

ZPoly z_shift(const ZPoly& x, int s) {
    ZPoly out(x.basis());
    for (const auto& [k, sym] : x.terms()) out.add(k + s, sym);
    return out;
}

void build_pointed(int max_n, uint64_t seed, std::vector<Task>& tasks) {
    for_connected(std::min(max_n, 6), [&](const Graph& g) {
        const int n = g.n();
        tasks.push_back({graph_line(g) + " [f(H)]", [g, seed]() -> std::string {
            auto [fixed, total] = internal_spanning_trees(g);
            if (fixed != total) return "fixed-point count != signed sum";
            if (fixed < 1) return "f(H) not positive";
            std::mt19937_64 rng(seed * 7919 + g.edge_count());
            std::vector<Edge> order = g.edges();
            for (int trial = 0; trial < 5; ++trial) {
                std::shuffle(order.begin(), order.end(), rng);
                auto [f2, t2] = internal_spanning_trees(g, order);
                if (f2 != fixed || t2 != total)
                    return "f(H) depends on the edge order";
            }
            return "";
        }});
        for (int r = 0; r < n; ++r) {
            RootedGraph rg(g, r);
            tasks.push_back({graph_line(g, r), [rg]() -> std::string {
                ZPoly p = pointed_P(rg);
                ZPoly zp = z_shift(p, 1);
                ZPoly x0 = powersum_X0_to_m(powersum_X0(rg));
                if (phi_transform(zp).converted(Basis::M) != x0)
                    return "X_0 != phi(z P)";
                if (psi_transform(x0).converted(Basis::M) != zp.converted(Basis::M))
                    return "psi(X_0) != z P";
                std::map<int, SymExpansion> pt = p.terms();
                for (const auto& [k, sym] : pt) {
                    SymExpansion m = convert(sym, Basis::M).scaled((k % 2) ? -1 : 1);
                    std::map<Partition, Rational> mc = m.coeffs();
                    for (const auto& [lam, c] : mc)
                        if (c < 0)
                            return "P(-z) not monomial-positive at z^" + std::to_string(k);
                }
                return std::string();
            }});
        }
    });
}

void build_ans_paw(int max_n, std::vector<Task>& tasks) {
    for_connected(std::min(max_n, 6), [&](const Graph& g) {
        for (int r = 0; r < g.n(); ++r) {
            RootedGraph rg(g, r);
            tasks.push_back({graph_line(g, r), [rg]() -> std::string {
                for (int k = 0; k < rg.n(); ++k)
                    if (!ans_paw_check(rg, k))
                        return "(-z)^" + std::to_string(k) +
                               " coefficient differs from the f(H) sum";
                return "";
            }});
        }
    });
}

void build_u_polynomials(int max_n, std::vector<Task>& tasks) {
    for_connected(std::min(max_n, 6), [&](const Graph& g) {
        const int n = g.n();
        tasks.push_back({graph_line(g), [g]() -> std::string {
            UWPoly u = u_poly(g);
            if (u != w_poly(WeightedGraph::unit_weights(g)))
                return "U != W at unit weights";
            if (X_from_U(u) != powersum_X(g)) return "X recovery from U fails";
            return "";
        }});
        for (int r = 0; r < n; ++r) {
            RootedGraph rg(g, r);
            tasks.push_back({graph_line(g, r) + " [Ur]", [rg, n]() -> std::string {
                if (P_from_rootedU(rooted_u(rg), n) != pointed_P(rg))
                    return "P recovery from rooted U fails";
                return "";
            }});
        }
    });
}

std::string poset_line(const Poset& p, int root) {
    std::ostringstream os;
    os << "poset " << p.n;
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.less(i, j)) os << "; " << i << "<" << j;
    if (root >= 0) os << " root " << root;
    return os.str();
}

void build_epositivity(int max_n, std::vector<Task>& tasks) {
    for (int n = 1; n <= std::min(max_n, 6); ++n) {
        for (const Poset& p : posets(n)) {
            for (int r = 0; r < n; ++r) {
                if (n > 1 && !is_31_free(delete_element(p, r))) continue;
                tasks.push_back({poset_line(p, r), [p, r]() -> std::string {
                    RootedGraph rg(incomparability_graph(p), r);
                    ZPoly x0 = powersum_X0_to_m(powersum_X0(rg));
                    if (!is_e_positive(x0)) return "X_0 of the incomparability graph is not e-positive";
                    return "";
                }});
            }
        }
    }
}

void build_paper_examples(std::vector<Task>& tasks) {
    // Frozen expansions for the 3-vertex path over colors {0,1,2} and the
    // 5-vertex fork, plus the U/W examples; all literals are documented in
    // the unit tests as well.
    auto mp = [](std::vector<std::pair<std::vector<uint8_t>, long>> terms) {
        MultiPoly out(3);
        for (auto& [e, c] : terms) out.add_term(e, c);
        return out;
    };
    const Graph p3 = Graph::path(3);
    const MultiPoly ex_xt = mp({{{1, 1, 1}, 6}, {{2, 1, 0}, 1}, {{2, 0, 1}, 1},
                                {{1, 2, 0}, 1}, {{0, 2, 1}, 1}, {{1, 0, 2}, 1},
                                {{0, 1, 2}, 1}});
    const MultiPoly exA = mp({{{1, 1, 1}, 2}, {{2, 1, 0}, 1}, {{2, 0, 1}, 1}});
    const MultiPoly exA_ne = mp({{{1, 1, 1}, 4}, {{1, 2, 0}, 1}, {{1, 0, 2}, 1},
                                 {{0, 2, 1}, 1}, {{0, 1, 2}, 1}});
    const MultiPoly exB = mp({{{1, 1, 1}, 2}, {{1, 2, 0}, 1}, {{1, 0, 2}, 1}});
    const MultiPoly exB_ne = mp({{{1, 1, 1}, 4}, {{2, 1, 0}, 1}, {{2, 0, 1}, 1},
                                 {{0, 1, 2}, 1}, {{0, 2, 1}, 1}});

    tasks.push_back({"path3: X expansion", [=]() -> std::string {
        return brute_force(p3, 2) == ex_xt ? "" : "X(P3) expansion differs";
    }});
    tasks.push_back({"path3: X_0 / X_{!=0} at each root", [=]() -> std::string {
        for (int r : {0, 2}) {
            RootedGraph rg(p3, r);
            if (brute_force(rg, 2, ColorMode::RootEquals, 0) != exA)
                return "endpoint X_0 differs";
            if (brute_force(rg, 2, ColorMode::RootNotEquals, 0) != exA_ne)
                return "endpoint X_{!=0} differs";
        }
        RootedGraph mid(p3, 1);
        if (brute_force(mid, 2, ColorMode::RootEquals, 0) != exB)
            return "middle X_0 differs";
        if (brute_force(mid, 2, ColorMode::RootNotEquals, 0) != exB_ne)
            return "middle X_{!=0} differs";
        return "";
    }});
    tasks.push_back({"path3: deletion-contraction", [=]() -> std::string {
        return x0_deletion_contraction(RootedGraph(p3, 0), 2) == exA
                   ? ""
                   : "deletion-contraction value differs";
    }});
    tasks.push_back({"path3: pointing sum", [=]() -> std::string {
        MultiPoly sum(3);
        for (int r = 0; r < 3; ++r)
            sum += brute_force(RootedGraph(p3, r), 2, ColorMode::RootEquals, 0);
        MultiPoly target = mp({{{1, 1, 1}, 6}, {{2, 1, 0}, 2}, {{2, 0, 1}, 2},
                               {{1, 2, 0}, 1}, {{1, 0, 2}, 1}});
        if (sum != target) return "sum of X_0 over roots differs";
        MultiPoly lhs = MultiPoly::var(3, 0) * brute_force(p3, 2).derivative(0);
        if (sum != lhs) return "pointing sum != x_0 d/dx_0 X";
        return "";
    }});
    tasks.push_back({"path3: U polynomial", [=]() -> std::string {
        UWPoly expect;
        expect.add(Partition({1, 1, 1}), 0, UniPoly::constant(1));
        expect.add(Partition({2, 1}), 0, UniPoly::constant(2));
        expect.add(Partition({3}), 0, UniPoly::constant(1));
        return u_poly(p3) == expect ? "" : "U(P3) differs";
    }});
    tasks.push_back({"path3 weighted (3,1,1): W polynomial", [=]() -> std::string {
        WeightedGraph wg;
        wg.n = 3;
        wg.edges = {{0, 1}, {1, 2}};
        wg.weights = {3, 1, 1};
        UWPoly expect;
        expect.add(Partition({3, 1, 1}), 0, UniPoly::constant(1));
        expect.add(Partition({3, 2}), 0, UniPoly::constant(1));
        expect.add(Partition({4, 1}), 0, UniPoly::constant(1));
        expect.add(Partition({5}), 0, UniPoly::constant(1));
        return w_poly(wg) == expect ? "" : "W differs";
    }});
    tasks.push_back({"path3 rooted middle: rooted U polynomial", [=]() -> std::string {
        UWPoly expect;
        expect.add(Partition({1, 1}), 1, UniPoly::constant(1));
        expect.add(Partition({1}), 2, UniPoly::constant(2));
        expect.add(Partition(), 3, UniPoly::constant(1));
        return rooted_u(RootedGraph(p3, 1)) == expect ? "" : "rooted U differs";
    }});
    tasks.push_back({"fork tree rooted: pointed P and phi(zP)", []() -> std::string {
        Graph fork = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}});
        RootedGraph rg(fork, 1);
        ZPoly target(Basis::P);
        target.add(0, Partition({1, 1, 1, 1}), 1);
        target.add(0, Partition({2, 1, 1}), -2);
        target.add(0, Partition({3, 1}), 1);
        target.add(1, Partition({1, 1, 1}), -2);
        target.add(1, Partition({2, 1}), 2);
        target.add(1, Partition({3}), -1);
        target.add(2, Partition({1, 1}), 3);
        target.add(3, Partition({1}), -3);
        target.add(4, Partition(), 1);
        ZPoly p = pointed_P(rg);
        if (p != target) return "P_{G,v} differs";
        ZPoly x0(Basis::P);
        x0.add(1, Partition({1, 1, 1, 1}), 1);
        x0.add(1, Partition({2, 1, 1}), -2);
        x0.add(1, Partition({3, 1}), 1);
        x0.add(2, Partition({1, 1, 1}), 2);
        x0.add(2, Partition({2, 1}), -2);
        x0.add(3, Partition({1, 1}), 1);
        if (phi_transform(z_shift(p, 1)) != x0) return "phi(z P) differs from X_0";
        if (powersum_X0_to_m(powersum_X0(rg)) != x0.converted(Basis::M))
            return "X_0 oracle differs from the example";
        return "";
    }});
    tasks.push_back({"single vertex: chromatic polynomial", []() -> std::string {
        return chromatic_polynomial(Graph(1)) == UniPoly::monomial(1, 1)
                   ? ""
                   : "chi(K1) != q";
    }});
}

const std::map<std::string, int>& suite_defaults() {
    static const std::map<std::string, int> d = {
        {"identities", 6},       {"power-sum", 6},
        {"deletion-contraction", 8}, {"distinguish-rooted", 12},
        {"principal-conjecture", 13}, {"eisenstein-trees", 10},
        {"eisenstein-bipartite", 7}, {"parity", 7},
        {"pointed", 6},          {"ans-paw", 6},
        {"u-polynomials", 6},    {"epositivity", 6},
        {"paper-examples", 3},
    };
    return d;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, n] : suite_defaults()) v.push_back(k);
        return v;
    }();
    return names;
}

int suite_default_max_n(const std::string& suite) {
    auto it = suite_defaults().find(suite);
    if (it == suite_defaults().end()) throw std::invalid_argument("unknown suite: " + suite);
    return it->second;
}

Report verify_suite(const std::string& suite, int max_n, int jobs, uint64_t seed) {
    if (max_n < 1) throw std::invalid_argument("max_n must be positive");
    std::vector<Task> tasks;
    if (suite == "identities") build_identities(std::min(max_n, 7), tasks);
    else if (suite == "power-sum") build_power_sum(std::min(max_n, 7), tasks);
    else if (suite == "deletion-contraction") build_deletion_contraction(max_n, tasks);
    else if (suite == "distinguish-rooted") build_distinguish_rooted(max_n, seed, tasks);
    else if (suite == "principal-conjecture") build_principal(max_n, tasks);
    else if (suite == "eisenstein-trees") build_eisenstein_trees(max_n, tasks);
    else if (suite == "eisenstein-bipartite") build_eisenstein_bipartite(std::min(max_n, 7), tasks);
    else if (suite == "parity") build_parity(max_n, tasks);
    else if (suite == "pointed") build_pointed(max_n, seed, tasks);
    else if (suite == "ans-paw") build_ans_paw(max_n, tasks);
    else if (suite == "u-polynomials") build_u_polynomials(max_n, tasks);
    else if (suite == "epositivity") build_epositivity(max_n, tasks);
    else if (suite == "paper-examples") build_paper_examples(tasks);
    else throw std::invalid_argument("unknown suite: " + suite);
    return run_tasks(suite, max_n, seed, jobs, std::move(tasks));
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["max_n"] = max_n;
    j["seed"] = seed;
    j["instances"] = instances;
    j["passed"] = passed();
    auto& arr = j["failures"] = nlohmann::json::array();
    for (const Failure& f : failures)
        arr.push_back({{"instance", f.instance}, {"detail", f.detail}, {"repro", f.repro}});
    j["wall_seconds"] = wall_seconds;
    return j.dump(2);
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "suite " << suite << " (max_n=" << max_n << ", seed=" << seed << "): "
       << instances << " instances, " << failures.size() << " failures, "
       << wall_seconds << "s\n";
    for (const Failure& f : failures)
        os << "  FAIL " << f.instance << ": " << f.detail << "\n    repro: " << f.repro
           << "\n";
    return os.str();
}

namespace {

// Groups serialized instances by an invariant key, keeping the exact
// invariant object for re-verification.
template <typename Inv>
std::vector<CollisionGroup> group_collisions(
    std::vector<std::pair<std::string, Inv>> items,
    const std::function<std::string(const Inv&)>& key_of,
    const std::function<bool(size_t, size_t)>& isomorphic) {
    std::map<std::string, std::vector<size_t>> buckets;
    for (size_t i = 0; i < items.size(); ++i)
        buckets[key_of(items[i].second)].push_back(i);
    std::vector<CollisionGroup> out;
    for (auto& [key, idxs] : buckets) {
        if (idxs.size() < 2) continue;
        // Exact re-verification: the key is a canonical serialization, but
        // equality is rechecked object-by-object all the same.
        std::vector<size_t> confirmed{idxs[0]};
        for (size_t i = 1; i < idxs.size(); ++i)
            if (items[idxs[i]].second == items[idxs[0]].second)
                confirmed.push_back(idxs[i]);
        // Exclude isomorphic duplicates.
        std::vector<size_t> reps;
        for (size_t i : confirmed) {
            bool dup = false;
            for (size_t r : reps)
                if (isomorphic(i, r)) { dup = true; break; }
            if (!dup) reps.push_back(i);
        }
        if (reps.size() < 2) continue;
        CollisionGroup g;
        g.invariant = key;
        for (size_t i : reps) g.members.push_back(items[i].first);
        out.push_back(std::move(g));
    }
    return out;
}

auto never_isomorphic = [](size_t, size_t) { return false; };

} // namespace

std::vector<CollisionGroup> search_collision(const std::string& kind, int n) {
    if (kind == "f-unrooted") {
        if (n < 1 || n > 14) throw std::invalid_argument("f-unrooted supports 1 <= n <= 14");
        std::vector<UniPoly> values{UniPoly::monomial(1, 1), UniPoly::monomial(1, 1),
                                    UniPoly::constant(1), UniPoly::constant(1)};
        std::vector<std::pair<std::string, UniPoly>> items;
        for (const Graph& t : free_trees(n))
            items.emplace_back(graph_line(t), tree_chromatic_dp(t, values));
        return group_collisions<UniPoly>(
            std::move(items), [](const UniPoly& f) { return f.str(); }, never_isomorphic);
    }
    if (kind == "X-unrooted") {
        if (n < 1 || n > 7) throw std::invalid_argument("X-unrooted supports 1 <= n <= 7");
        std::vector<std::pair<std::string, SymExpansion>> items;
        for (const Graph& g : small_graphs(n, true))
            items.emplace_back(graph_line(g), convert(powersum_X(g), Basis::M));
        return group_collisions<SymExpansion>(
            std::move(items), [](const SymExpansion& x) { return x.str(); },
            never_isomorphic);
    }
    if (kind == "X0-rooted") {
        if (n < 1 || n > 7) throw std::invalid_argument("X0-rooted supports 1 <= n <= 7");
        std::vector<std::pair<std::string, ZPoly>> items;
        auto rooted = std::make_shared<std::vector<RootedGraph>>();
        for (const Graph& g : small_graphs(n, true))
            for (int r = 0; r < n; ++r) {
                RootedGraph rg(g, r);
                items.emplace_back(graph_line(g, r), powersum_X0_to_m(powersum_X0(rg)));
                rooted->push_back(std::move(rg));
            }
        auto iso = [rooted](size_t a, size_t b) {
            return rooted_iso_naive((*rooted)[a], (*rooted)[b]);
        };
        return group_collisions<ZPoly>(
            std::move(items), [](const ZPoly& x) { return x.str(); }, iso);
    }
    throw std::invalid_argument("unknown collision kind: " + kind);
}

std::string collisions_json(const std::string& kind, int n,
                            const std::vector<CollisionGroup>& groups) {
    nlohmann::json j;
    j["kind"] = kind;
    j["n"] = n;
    auto& arr = j["groups"] = nlohmann::json::array();
    for (const CollisionGroup& g : groups)
        arr.push_back({{"invariant", g.invariant}, {"members", g.members}});
    return j.dump(2);
}

} // namespace csf
