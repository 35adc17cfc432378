#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ic/graph.hpp"
#include "ic/interval_model.hpp"

namespace ic {

// A set of non-edges; normalized so that u < v inside pairs and pairs are
// sorted. The pair order is the vertex order lifted to pairs; completions
// compare as sorted pair sequences, lexicographically.
struct Completion {
    EdgeList edges;

    static Completion of(EdgeList es);
    int size() const { return static_cast<int>(edges.size()); }
    bool empty() const { return edges.empty(); }

    static int compare(const Completion& a, const Completion& b);
    friend bool operator<(const Completion& a, const Completion& b) { return compare(a, b) < 0; }
    bool operator==(const Completion&) const = default;

    std::string str() const;
};

std::vector<int> incident_counts(int n, const Completion& f);

struct VertexClass {
    bool touched = false;
    bool cheap = true;  // at most sqrt(k) incident solution edges
};

// Touched/cheap classification; the cheap test compares squared counts so no
// floating point is involved.
std::vector<VertexClass> classify_vertices(const Graph& g, const Completion& f, int k);

enum class SolveStatus { solved, over_budget, capped };

struct SolveResult {
    SolveStatus status = SolveStatus::over_budget;
    std::optional<int> opt;
    std::optional<Completion> canonical;  // oracle: first hit in (size, order) enumeration
    std::optional<Completion> witness;    // branching: some minimum completion
    std::vector<Completion> all_minimum;
    std::vector<Completion> all_minimal;  // inclusion-minimal, sizes opt..horizon
    std::uint64_t tests = 0;              // interval tests spent
};

struct OracleOptions {
    int k = 0;
    int horizon = -1;  // largest size explored; defaults to k
    bool list_minimum = false;
    bool list_minimal = false;
    std::uint64_t work_cap = std::numeric_limits<std::uint64_t>::max();
};

// Enumerates non-edge subsets by size, then by the completion order, so the
// first interval hit is the canonical solution by construction.
SolveResult solve_oracle(const Graph& g, const OracleOptions& opt);

// Iterative deepening with the module reduction rule as preprocessing and
// branching over the non-edges of a minimal non-interval witness.
SolveResult solve_branching(const Graph& g, int k);

// Exact inclusion-minimality: no nonempty subset of f can be dropped.
bool is_minimal_completion(const Graph& g, const Completion& f);

}  // namespace ic
