#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ic/bitset.hpp"

namespace ic {

using VertexId = int;
using EdgeList = std::vector<std::pair<int, int>>;

// Universal-vertex markers attached by augment().
struct SpecialVertices {
    VertexId r;
    VertexId r_left;
    VertexId r_right;
};

// Undirected simple graph on dense ids 0..n-1. The id order is the fixed
// total vertex order used for all tie-breaking and canonization.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {}

    static Graph from_edges(int n, const EdgeList& edges);

    int n() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_[static_cast<std::size_t>(v)];
        s.add(v);
        return s;
    }
    // N(S): neighbors of S outside S.
    VertexSet neighborhood_of_set(const VertexSet& s) const;

    VertexSet vertices() const { return VertexSet::range(n_); }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    EdgeList edges() const;
    EdgeList non_edges() const;

    bool is_clique(const VertexSet& s) const;

    // Induced subgraph on `keep`; ids compacted preserving relative order.
    // Also returns the map from new id to old id.
    std::pair<Graph, std::vector<int>> induced(const VertexSet& keep) const;

    Graph with_edges(const EdgeList& extra) const;

    const std::optional<SpecialVertices>& special() const { return special_; }
    void set_special(SpecialVertices s) { special_ = s; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::optional<SpecialVertices> special_;
};

// Connected components of the subgraph induced on V \ excluded,
// ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& excluded);

bool is_connected(const Graph& g);

// Adds a universal vertex r and two pendants r_left, r_right adjacent only
// to r. New order: r < r_left < (old vertices, shifted by 2) < r_right.
Graph augment(const Graph& g);

// Partition of V \ a into classes of equal N(v) & a, ordered by smallest member.
std::vector<VertexSet> neighborhood_classes(const Graph& g, const VertexSet& a);

// Number of components C of G \ a containing some v with |a \ N(v)| <= r.
int count_low_deficiency_components(const Graph& g, const VertexSet& a, int r);

}  // namespace ic
