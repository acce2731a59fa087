#ifndef CSF_ENUMERATION_HPP
#define CSF_ENUMERATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "csf/graph.hpp"

namespace csf {

// Unlabeled rooted tree in canonical level-sequence form (root has level 1;
// each node's parent is the nearest earlier node one level up).
struct RootedTree {
    std::vector<int> levels;
    int n() const { return static_cast<int>(levels.size()); }
    RootedGraph to_rooted_graph() const;
};

// One representative per isomorphism class. 1 <= n <= 20.
std::vector<RootedTree> rooted_trees(int n);

// One representative per isomorphism class of free (unrooted) trees.
// 1 <= n <= 18.
std::vector<Graph> free_trees(int n);

// Canonical string of a rooted tree (children sorted recursively); equal
// strings <=> rooted-isomorphic.
std::string ahu_string(const RootedGraph& t);

// Canonical key of a free tree via its centroid(s).
std::string free_tree_key(const Graph& t);

// Centroid vertices (one or two, adjacent when two).
std::vector<int> tree_centroids(const Graph& t);

bool rooted_iso(const RootedGraph& a, const RootedGraph& b);

// Brute-force root-preserving bijection search, for cross-checking
// rooted_iso at small n (n <= 8).
bool rooted_iso_naive(const RootedGraph& a, const RootedGraph& b);

// All unlabeled simple graphs on n vertices (optionally connected only),
// by incremental generation + canonical dedup. n <= 7.
std::vector<Graph> small_graphs(int n, bool connected_only);

// Strict partial order on {0..n-1}; bit i*n+j set iff i <_P j.
struct Poset {
    int n = 0;
    uint64_t rel = 0;
    bool less(int i, int j) const { return (rel >> (i * n + j)) & 1; }
    bool incomparable(int i, int j) const { return i != j && !less(i, j) && !less(j, i); }
};

// All unlabeled posets on n elements. n <= 6.
std::vector<Poset> posets(int n);

// True iff no 4-element induced subposet is a 3-chain plus one element
// incomparable to all of it.
bool is_31_free(const Poset& p);

// Delete one element, keeping the induced order on the rest.
Poset delete_element(const Poset& p, int v);

// Vertices = elements, edges = incomparable pairs.
Graph incomparability_graph(const Poset& p);

// Independent naive generators (Pruefer sequences over labeled trees +
// canonical dedup) used to cross-check the fast enumerators. n <= 8.
long naive_rooted_tree_count(int n);
long naive_free_tree_count(int n);

} // namespace csf

#endif
