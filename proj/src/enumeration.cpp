#include "csf/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace csf {

RootedGraph RootedTree::to_rooted_graph() const {
    const int m = n();
    Graph g(m);
    for (int i = 1; i < m; ++i) {
        int parent = -1;
        for (int j = i - 1; j >= 0; --j)
            if (levels[j] == levels[i] - 1) { parent = j; break; }
        if (parent < 0) throw std::logic_error("malformed level sequence");
        g.add_edge(parent, i);
    }
    return RootedGraph(std::move(g), 0);
}

std::vector<RootedTree> rooted_trees(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("rooted_trees supports 1 <= n <= 20");
    std::vector<RootedTree> out;
    // Beyer-Hedetniemi: canonical level sequences in decreasing lex order,
    // starting from the path (1,2,...,n) and ending at the star (1,2,...,2).
    std::vector<int> L(n);
    std::iota(L.begin(), L.end(), 1);
    while (true) {
        out.push_back(RootedTree{L});
        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (L[i] > 2) { p = i; break; }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (L[i] == L[p] - 1) { q = i; break; }
        for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
    }
    return out;
}

namespace {

std::string ahu_rec(const Graph& g, int v, int parent) {
    std::vector<std::string> kids;
    uint64_t m = g.adj(v);
    while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (w != parent) kids.push_back(ahu_rec(g, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const std::string& k : kids) s += k;
    return s + ")";
}

} // namespace

std::string ahu_string(const RootedGraph& t) {
    if (!is_tree(t.graph())) throw std::invalid_argument("ahu_string requires a tree");
    return ahu_rec(t.graph(), t.root(), -1);
}

std::vector<int> tree_centroids(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_centroids requires a tree");
    const int n = t.n();
    std::vector<int> size(n, 1), best(n, 0);
    // Iterative post-order from vertex 0.
    std::vector<int> order, parent(n, -1), stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        uint64_t m = t.adj(v);
        while (m) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
    for (int v = 0; v < n; ++v) {
        int mx = n - size[v];
        uint64_t m = t.adj(v);
        while (m) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (parent[w] == v) mx = std::max(mx, size[w]);
        }
        best[v] = mx;
    }
    int opt = *std::min_element(best.begin(), best.end());
    std::vector<int> cs;
    for (int v = 0; v < n; ++v)
        if (best[v] == opt) cs.push_back(v);
    return cs;
}

std::string free_tree_key(const Graph& t) {
    std::vector<int> cs = tree_centroids(t);
    if (cs.size() == 1) return "C1:" + ahu_string(RootedGraph(t, cs[0]));
    // Two centroids are joined by an edge; split there and hash both halves.
    std::string a = ahu_rec(t, cs[0], cs[1]);
    std::string b = ahu_rec(t, cs[1], cs[0]);
    if (b < a) std::swap(a, b);
    return "C2:" + a + "|" + b;
}

std::vector<Graph> free_trees(int n) {
    if (n < 1 || n > 18) throw std::invalid_argument("free_trees supports 1 <= n <= 18");
    std::vector<Graph> out;
    std::set<std::string> seen;
    for (const RootedTree& rt : rooted_trees(n)) {
        RootedGraph rg = rt.to_rooted_graph();
        std::string key = free_tree_key(rg.graph());
        if (seen.insert(key).second) out.push_back(rg.graph());
    }
    return out;
}

bool rooted_iso(const RootedGraph& a, const RootedGraph& b) {
    if (!is_tree(a.graph()) || !is_tree(b.graph()))
        throw std::invalid_argument("rooted_iso requires trees");
    return a.n() == b.n() && ahu_string(a) == ahu_string(b);
}

bool rooted_iso_naive(const RootedGraph& a, const RootedGraph& b) {
    const int n = a.n();
    if (n != b.n()) return false;
    if (n > 8) throw std::invalid_argument("rooted_iso_naive supports n <= 8");
    if (a.graph().edge_count() != b.graph().edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm[a.root()] != b.root()) continue;
        bool ok = true;
        for (const Edge& e : a.graph().edges())
            if (!b.graph().has_edge(perm[e.u], perm[e.v])) { ok = false; break; }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

// Edge-pair bit index for i < j in an n-vertex graph.
int pair_index(int n, int i, int j) {
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

uint64_t graph_canon_key(int n, uint64_t mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t(0);
    do {
        uint64_t m2 = 0;
        uint64_t m = mask;
        while (m) {
            int idx = std::countr_zero(m);
            m &= m - 1;
            // Invert pair index.
            int i = 0, base = 0;
            while (idx >= base + (n - 1 - i)) {
                base += n - 1 - i;
                ++i;
            }
            int j = i + 1 + (idx - base);
            int a = perm[i], b = perm[j];
            if (a > b) std::swap(a, b);
            m2 |= uint64_t(1) << pair_index(n, a, b);
        }
        best = std::min(best, m2);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_pair_mask(int n, uint64_t mask) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((mask >> pair_index(n, i, j)) & 1) g.add_edge(i, j);
    return g;
}

} // namespace

std::vector<Graph> small_graphs(int n, bool connected_only) {
    if (n < 1 || n > 7) throw std::invalid_argument("small_graphs supports 1 <= n <= 7");
    // Grow canonical representatives one vertex at a time: every k-vertex
    // graph arises from some (k-1)-vertex graph by attaching the new vertex.
    std::set<uint64_t> level{0};
    for (int k = 2; k <= n; ++k) {
        std::set<uint64_t> next;
        for (uint64_t base : level) {
            // Re-index the (k-1)-vertex mask into k-vertex pair positions.
            uint64_t lifted = 0;
            for (int i = 0; i < k - 1; ++i)
                for (int j = i + 1; j < k - 1; ++j)
                    if ((base >> pair_index(k - 1, i, j)) & 1)
                        lifted |= uint64_t(1) << pair_index(k, i, j);
            for (uint64_t sub = 0; sub < (uint64_t(1) << (k - 1)); ++sub) {
                uint64_t mask = lifted;
                for (int i = 0; i < k - 1; ++i)
                    if ((sub >> i) & 1) mask |= uint64_t(1) << pair_index(k, i, k - 1);
                next.insert(graph_canon_key(k, mask));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (uint64_t mask : level) {
        Graph g = graph_from_pair_mask(n, mask);
        if (!connected_only || is_connected(g)) out.push_back(g);
    }
    return out;
}

namespace {

uint64_t poset_canon_key(int n, const Poset& p) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t(0);
    do {
        uint64_t key = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (p.less(i, j)) key |= uint64_t(1) << (perm[i] * n + perm[j]);
        best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

std::vector<Poset> posets(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("posets supports 1 <= n <= 6");
    // Every poset has a linear extension, so it suffices to scan relations
    // where i <_P j implies i < j, filter for transitivity, and dedup.
    const int npairs = n * (n - 1) / 2;
    std::set<uint64_t> seen;
    std::vector<Poset> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << npairs); ++mask) {
        Poset p;
        p.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((mask >> pair_index(n, i, j)) & 1) p.rel |= uint64_t(1) << (i * n + j);
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = 0; j < n && transitive; ++j) {
                if (!p.less(i, j)) continue;
                for (int k = 0; k < n; ++k)
                    if (p.less(j, k) && !p.less(i, k)) { transitive = false; break; }
            }
        if (!transitive) continue;
        if (seen.insert(poset_canon_key(n, p)).second) out.push_back(p);
    }
    return out;
}

bool is_31_free(const Poset& p) {
    const int n = p.n;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        if (std::popcount(mask) != 4) continue;
        int v[4], t = 0;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) v[t++] = i;
        // Try each element as the isolated one, the rest as a 3-chain.
        for (int iso = 0; iso < 4; ++iso) {
            int c[3], s = 0;
            for (int i = 0; i < 4; ++i)
                if (i != iso) c[s++] = v[i];
            bool isolated = p.incomparable(v[iso], c[0]) && p.incomparable(v[iso], c[1]) &&
                            p.incomparable(v[iso], c[2]);
            if (!isolated) continue;
            std::sort(c, c + 3);
            do {
                if (p.less(c[0], c[1]) && p.less(c[1], c[2])) return false;
            } while (std::next_permutation(c, c + 3));
        }
    }
    return true;
}

Poset delete_element(const Poset& p, int v) {
    if (v < 0 || v >= p.n) throw std::invalid_argument("element out of range");
    Poset q;
    q.n = p.n - 1;
    auto remap = [&](int i) { return i > v ? i - 1 : i; };
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (i != v && j != v && p.less(i, j))
                q.rel |= uint64_t(1) << (remap(i) * q.n + remap(j));
    return q;
}

Graph incomparability_graph(const Poset& p) {
    Graph g(p.n);
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j)
            if (p.incomparable(i, j)) g.add_edge(i, j);
    return g;
}

namespace {

std::vector<Edge> pruefer_decode(int n, const std::vector<int>& seq) {
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::vector<Edge> edges;
    uint64_t leaves = 0;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves |= uint64_t(1) << v;
    for (int x : seq) {
        int leaf = std::countr_zero(leaves);
        leaves &= leaves - 1;
        edges.emplace_back(leaf, x);
        if (--degree[x] == 1) leaves |= uint64_t(1) << x;
    }
    int a = std::countr_zero(leaves);
    leaves &= leaves - 1;
    int b = std::countr_zero(leaves);
    edges.emplace_back(a, b);
    return edges;
}

template <typename F>
void for_each_labeled_tree(int n, F&& visit) {
    if (n == 1) {
        visit(Graph(1));
        return;
    }
    if (n == 2) {
        visit(Graph::path(2));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        visit(Graph::from_edges(n, pruefer_decode(n, seq)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

} // namespace

long naive_rooted_tree_count(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("naive generators support n <= 8");
    std::set<std::string> keys;
    for_each_labeled_tree(n, [&](const Graph& g) {
        for (int r = 0; r < n; ++r) keys.insert(ahu_string(RootedGraph(g, r)));
    });
    return static_cast<long>(keys.size());
}

long naive_free_tree_count(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("naive generators support n <= 8");
    std::set<std::string> keys;
    for_each_labeled_tree(n, [&](const Graph& g) { keys.insert(free_tree_key(g)); });
    return static_cast<long>(keys.size());
}

} // namespace csf
