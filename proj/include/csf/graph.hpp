#ifndef CSF_GRAPH_HPP
#define CSF_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csf/partition.hpp"
#include "csf/poly.hpp"

namespace csf {

struct Edge {
    int u, v; // u < v after normalization
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
    auto operator<=>(const Edge&) const = default;
};

// Simple graph on at most 64 vertices, bitset adjacency.
class Graph {
public:
    explicit Graph(int n = 1);

    static Graph from_edges(int n, const std::vector<Edge>& edges);
    static Graph path(int n);
    static Graph complete(int n);

    int n() const { return n_; }
    uint64_t adj(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    void add_edge(int u, int v);
    int degree(int v) const;
    int edge_count() const;

    // Canonical edge list: lexicographic on (min, max).
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<uint64_t> adj_;
};

class RootedGraph {
public:
    RootedGraph(Graph g, int root);
    const Graph& graph() const { return g_; }
    int root() const { return root_; }
    int n() const { return g_.n(); }
    bool operator==(const RootedGraph&) const = default;

private:
    Graph g_;
    int root_;
};

// Multigraph with loops and positive vertex weights.
struct WeightedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // u == v allowed (loop); repeats allowed
    std::vector<int> weights;               // all >= 1

    static WeightedGraph unit_weights(const Graph& g);
    void validate() const;
};

// Subset of a graph's canonical edge list, as a bitmask over edge indices.
struct EdgeSubset {
    uint64_t mask = 0;
    bool contains(int i) const { return (mask >> i) & 1; }
};

// lambda(G_S): component sizes of the spanning subgraph (V, S), weakly decreasing.
Partition components_partition(const Graph& g, EdgeSubset s);

// (lambda_v^+, lambda_v^-): root component size and the remaining partition.
std::pair<int, Partition> rooted_split(const RootedGraph& g, EdgeSubset s);

RootedGraph delete_edge(const RootedGraph& g, Edge e);
// Identifies the endpoints of an edge incident to the root into the new root;
// drops the loop and merges parallels (simple-graph contraction).
RootedGraph contract_root_edge(const RootedGraph& g, Edge e);

UniPoly chromatic_polynomial(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
int chromatic_number(const Graph& g);
bool is_tree(const Graph& g);

// Independent sets of the given size; optionally only those containing the root.
std::vector<uint64_t> independent_sets(const Graph& g, int size,
                                       int must_contain = -1);

// Edge subsets S with (V, S) connected.
std::vector<EdgeSubset> connected_spanning_subsets(const Graph& g);

// Induced subgraph on the vertices of `mask`, and the induced rooted variant.
Graph induced_subgraph(const Graph& g, uint64_t mask);
// G - A: delete the vertices in `mask` (and incident edges).
Graph delete_vertices(const Graph& g, uint64_t mask);

// Text format: "n m" header, optional "root r" line, then m lines "u v".
std::string graph_to_text(const Graph& g, int root = -1);
std::pair<Graph, int> graph_from_text(const std::string& text); // root -1 if absent

} // namespace csf

#endif
