#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ic/graph.hpp"

namespace ic {

enum class NodeKind { leaf, union_node, join_node, prime };

struct MDNode {
    NodeKind kind;
    VertexSet label;
    std::vector<int> children;  // indices into ModuleDecomposition::nodes
};

struct ModuleDecomposition {
    std::vector<MDNode> nodes;  // nodes[0] is the root, label V(G)
    const MDNode& root() const { return nodes.front(); }
};

// The unique module decomposition tree. Children are ordered by smallest
// label member. Recursive pairwise-refinement construction.
ModuleDecomposition decompose(const Graph& g);

// N(a) \ m = N(b) \ m for all a, b in m.
bool is_module(const Graph& g, const VertexSet& m);

struct RuleApplication {
    VertexSet x;                     // shared outside neighborhood of the modules
    std::vector<VertexSet> modules;  // >= 2k+3 equal-neighborhood components
    bool no_instance = false;        // more than k of them are non-interval
    VertexSet removed;               // otherwise: the deleted module
};

// Scans union nodes of the decomposition root-to-leaf; first union node with
// >= 2k+3 equal-neighborhood children wins. The removed module is the
// interval one whose smallest vertex is largest.
std::optional<RuleApplication> find_rule_application(const Graph& g, int k);

struct ReduceStep {
    VertexSet x;                     // in original vertex ids
    std::vector<VertexSet> modules;  // in original vertex ids
    VertexSet removed;               // in original vertex ids
};

struct ReduceResult {
    Graph graph;                 // reduced graph, ids compacted
    std::vector<int> orig_ids;   // reduced id -> original id
    std::vector<ReduceStep> trace;
    bool no_instance = false;
};

ReduceResult reduce_exhaustively(const Graph& g, int k);

// Whether a connected module of g survives as a module of g + f.
// Throws std::invalid_argument unless m is a connected module of g.
bool check_module_stays(const Graph& g, const EdgeList& f, const VertexSet& m);

std::string node_kind_name(NodeKind k);

}  // namespace ic
