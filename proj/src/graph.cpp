#include "csf/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace csf {

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 1 || n > 64) throw std::invalid_argument("vertex count must be in 1..64");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("no self-loops in a simple graph");
    adj_[u] |= uint64_t(1) << v;
    adj_[v] |= uint64_t(1) << u;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const {
    int s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        uint64_t m = adj_[u] >> (u + 1) << (u + 1);
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

RootedGraph::RootedGraph(Graph g, int root) : g_(std::move(g)), root_(root) {
    if (root < 0 || root >= g_.n()) throw std::invalid_argument("root out of range");
}

WeightedGraph WeightedGraph::unit_weights(const Graph& g) {
    WeightedGraph w;
    w.n = g.n();
    w.weights.assign(g.n(), 1);
    for (const Edge& e : g.edges()) w.edges.emplace_back(e.u, e.v);
    return w;
}

void WeightedGraph::validate() const {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (static_cast<int>(weights.size()) != n) throw std::invalid_argument("weights size mismatch");
    for (int w : weights)
        if (w < 1) throw std::invalid_argument("weights must be positive");
    for (auto [u, v] : edges)
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
}

namespace {

struct UnionFind {
    std::vector<int> parent, sz;
    explicit UnionFind(int n) : parent(n), sz(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (sz[a] < sz[b]) std::swap(a, b);
        parent[b] = a;
        sz[a] += sz[b];
    }
};

} // namespace

Partition components_partition(const Graph& g, EdgeSubset s) {
    auto es = g.edges();
    UnionFind uf(g.n());
    for (size_t i = 0; i < es.size(); ++i)
        if (s.contains(static_cast<int>(i))) uf.unite(es[i].u, es[i].v);
    std::vector<int> parts;
    for (int v = 0; v < g.n(); ++v)
        if (uf.find(v) == v) parts.push_back(uf.sz[v]);
    return Partition(std::move(parts));
}

std::pair<int, Partition> rooted_split(const RootedGraph& g, EdgeSubset s) {
    auto es = g.graph().edges();
    UnionFind uf(g.n());
    for (size_t i = 0; i < es.size(); ++i)
        if (s.contains(static_cast<int>(i))) uf.unite(es[i].u, es[i].v);
    int rc = uf.find(g.root());
    std::vector<int> parts;
    for (int v = 0; v < g.n(); ++v)
        if (uf.find(v) == v && v != rc) parts.push_back(uf.sz[v]);
    return {uf.sz[rc], Partition(std::move(parts))};
}

RootedGraph delete_edge(const RootedGraph& g, Edge e) {
    if (!g.graph().has_edge(e.u, e.v)) throw std::invalid_argument("not an edge");
    Graph h(g.n());
    for (const Edge& f : g.graph().edges())
        if (!(f == e)) h.add_edge(f.u, f.v);
    return RootedGraph(std::move(h), g.root());
}

RootedGraph contract_root_edge(const RootedGraph& g, Edge e) {
    if (!g.graph().has_edge(e.u, e.v)) throw std::invalid_argument("not an edge");
    int r = g.root();
    if (e.u != r && e.v != r) throw std::invalid_argument("contraction edge must touch the root");
    int s = (e.u == r) ? e.v : e.u;
    // Map: s merges into r; vertices above s shift down by one.
    auto remap = [&](int v) { return v == s ? (r > s ? r - 1 : r) : (v > s ? v - 1 : v); };
    Graph h(g.n() - 1);
    for (const Edge& f : g.graph().edges()) {
        if (f == e) continue;
        int a = remap(f.u), b = remap(f.v);
        if (a != b && !h.has_edge(a, b)) h.add_edge(a, b);
    }
    return RootedGraph(std::move(h), remap(r));
}

UniPoly chromatic_polynomial(const Graph& g) {
    // Deletion-contraction on an unrooted simple graph; recursion bottoms out
    // at edgeless graphs with chi = x^n.
    auto es = g.edges();
    if (es.empty()) return UniPoly::monomial(1, g.n());
    Edge e = es.front();
    Graph del(g.n());
    for (const Edge& f : es)
        if (!(f == e)) del.add_edge(f.u, f.v);
    // Contract e: identify e.v into e.u, drop loops/parallels.
    auto remap = [&](int v) { return v == e.v ? e.u : (v > e.v ? v - 1 : v); };
    Graph con(g.n() - 1);
    for (const Edge& f : es) {
        if (f == e) continue;
        int a = remap(f.u), b = remap(f.v);
        if (a != b && !con.has_edge(a, b)) con.add_edge(a, b);
    }
    return chromatic_polynomial(del) - chromatic_polynomial(con);
}

bool is_connected(const Graph& g) {
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adj(v) & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    uint64_t all = (g.n() == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.n()) - 1);
    return seen == all;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            uint64_t m = g.adj(v);
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

bool colorable(const Graph& g, int k) {
    std::vector<int> color(g.n(), -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.n()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            uint64_t m = g.adj(v);
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                if (w < v && color[w] == c) { ok = false; break; }
            }
            if (ok) {
                color[v] = c;
                if (self(self, v + 1)) return true;
            }
        }
        color[v] = -1;
        return false;
    };
    return rec(rec, 0);
}

} // namespace

int chromatic_number(const Graph& g) {
    for (int k = 1; k <= g.n(); ++k)
        if (colorable(g, k)) return k;
    return g.n();
}

bool is_tree(const Graph& g) {
    return g.edge_count() == g.n() - 1 && is_connected(g);
}

std::vector<uint64_t> independent_sets(const Graph& g, int size, int must_contain) {
    std::vector<uint64_t> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, uint64_t mask, int count) -> void {
        if (count == size) {
            if (must_contain < 0 || ((mask >> must_contain) & 1)) out.push_back(mask);
            return;
        }
        for (int v = start; v < g.n(); ++v) {
            if (g.adj(v) & mask) continue;
            self(self, v + 1, mask | (uint64_t(1) << v), count + 1);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

std::vector<EdgeSubset> connected_spanning_subsets(const Graph& g) {
    auto es = g.edges();
    if (es.size() > 30) throw std::invalid_argument("edge-subset guard: more than 30 edges");
    std::vector<EdgeSubset> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << es.size()); ++mask) {
        UnionFind uf(g.n());
        for (size_t i = 0; i < es.size(); ++i)
            if ((mask >> i) & 1) uf.unite(es[i].u, es[i].v);
        if (uf.sz[uf.find(0)] == g.n()) out.push_back(EdgeSubset{mask});
    }
    return out;
}

Graph induced_subgraph(const Graph& g, uint64_t mask) {
    std::vector<int> verts;
    for (int v = 0; v < g.n(); ++v)
        if ((mask >> v) & 1) verts.push_back(v);
    if (verts.empty()) throw std::invalid_argument("induced subgraph must be nonempty");
    Graph h(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph delete_vertices(const Graph& g, uint64_t mask) {
    uint64_t all = (g.n() == 64) ? ~uint64_t(0) : ((uint64_t(1) << g.n()) - 1);
    return induced_subgraph(g, all & ~mask);
}

std::string graph_to_text(const Graph& g, int root) {
    std::ostringstream os;
    auto es = g.edges();
    os << g.n() << " " << es.size() << "\n";
    if (root >= 0) os << "root " << root << "\n";
    for (const Edge& e : es) os << e.u << " " << e.v << "\n";
    return os.str();
}

std::pair<Graph, int> graph_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int n = -1, m = -1, root = -1, lineno = 0, edges_read = 0;
    Graph g(1);
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 1 || n > 64 || m < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'n m'");
            g = Graph(n);
            continue;
        }
        std::string first;
        ls >> first;
        if (first == "root") {
            if (!(ls >> root) || root < 0 || root >= n)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad root");
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (...) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected edge");
        }
        if (!(ls >> v))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected edge 'u v'");
        g.add_edge(u, v);
        ++edges_read;
    }
    if (n < 0) throw std::invalid_argument("empty graph file");
    if (edges_read != m)
        throw std::invalid_argument("edge count mismatch: header says " + std::to_string(m) +
                                    ", found " + std::to_string(edges_read));
    return {g, root};
}

} // namespace csf
