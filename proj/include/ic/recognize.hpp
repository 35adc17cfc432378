#pragma once

#include <optional>

#include "ic/interval_model.hpp"

namespace ic {

bool is_chordal(const Graph& g);
bool is_interval(const Graph& g);

struct RecognizeResult {
    std::optional<IntervalModel> model;  // set iff interval
    VertexSet witness;                   // otherwise: vertex-minimal induced non-interval set
    bool interval() const { return model.has_value(); }
};

// Finds some valid model, or a minimal witness obtained by greedy vertex
// deletion in id order.
RecognizeResult recognize(const Graph& g);

// The model whose tuple (begin positions in id order, end positions in
// reverse id order) is lexicographically minimum. Deterministic.
// Throws std::invalid_argument if g is not interval.
IntervalModel canonical_model(const Graph& g);

// A model of g starting with all begin events of omega1 and ending with all
// end events of omega2, when one exists. Built via an auxiliary graph with
// two attached 3-vertex paths, then transformed back.
// Throws std::invalid_argument if omega1/omega2 is not a clique or g is not
// interval.
std::optional<IntervalModel> model_with_prescribed_cliques(const Graph& g, const VertexSet& omega1,
                                                           const VertexSet& omega2);

namespace detail {
// Maximal cliques of a chordal graph, deterministically ordered.
std::vector<VertexSet> maximal_cliques_chordal(const Graph& g);
// True iff the cliques admit an ordering where every vertex's cliques are
// consecutive; writes one such ordering (first found, deterministic).
bool consecutive_clique_order(const std::vector<VertexSet>& cliques, std::vector<int>* order_out);
// The model induced by a consecutive clique ordering: boundary end blocks
// in decreasing id order, begin blocks in increasing id order.
IntervalModel model_from_clique_order(int n, const std::vector<VertexSet>& cliques,
                                      const std::vector<int>& order);
}  // namespace detail

}  // namespace ic
