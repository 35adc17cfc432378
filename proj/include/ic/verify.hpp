#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ic/graph.hpp"
#include "ic/interval_model.hpp"
#include "ic/solve.hpp"

namespace ic {

enum class Verdict { holds, violated, precondition_failed };

struct LemmaReport {
    std::string lemma;
    std::string instance;
    Verdict verdict = Verdict::holds;
    std::string details;

    static LemmaReport make(std::string lemma, Verdict v, std::string details = "") {
        return {std::move(lemma), "", v, std::move(details)};
    }
};

std::string verdict_name(Verdict v);

// Eight distinguished vertices and the expensive/fill sets around one
// maximal clique of G+F, read off a model.
struct CliqueAnatomy {
    VertexSet omega;
    int p = 0;  // omega = section(p), begin at p, end at p+1
    int v1 = -1, v2 = -1, c1 = -1, c2 = -1, f1 = -1, f2 = -1, g1 = -1, g2 = -1;
    VertexSet x1, x2;      // expensive vertices ending/starting between c_i and the clique
    VertexSet fset1, fset2;  // fill neighbors of c1 / c2
};

// Positions and sections around one vertex, read off a model.
struct FillInContext {
    int v = -1, f_l = -1, f_r = -1;
    int p_l_v = 0, p_r_v = 0, p_l_f = 0, p_r_f = 0;
    VertexSet omega_l_f, omega_l_v, omega_r_v, omega_r_f;
};

// Mutation hooks for the negative-control suite; defaults are the real
// bound constants.
struct BoundConstants {
    // neighborhood classes w.r.t. A: (2|A|+1)^2 * nei_scale + |F|
    int nei_scale = 1;
    // low-deficiency components: (12kr + 4k + 18r + 4) * lowdef_scale
    int lowdef_scale = 1;
    // small separation: sep_sqrt_mult * sqrt(k) + |K|
    int sep_sqrt_mult = 3;
};

// Checks the clique characterization equality together with the positional
// and membership facts of the anatomy. g must be augmented; f minimal.
LemmaReport verify_clique_characterization(const Graph& g, const Completion& f, int k,
                                           const IntervalModel& m, const VertexSet& omega);

// Checks the canonical-model section layout between consecutive maximal
// cliques and that every section is reconstructible from its two nearest
// maximal cliques. m must be the canonical model of g+f.
LemmaReport verify_section_reconstruction(const Graph& g, const Completion& f,
                                          const IntervalModel& m);

// Classifies every component of G minus the four sections around v and
// checks all positional and adjacency clauses, exhaustively.
LemmaReport verify_fill_in_structure(const Graph& g, const Completion& f, int k,
                                     const IntervalModel& m, int v);

// Counts the components between two sections that occupy an event of kset;
// the count is bounded by sep_sqrt_mult*sqrt(k) + |kset|.
LemmaReport verify_small_separation(const Graph& g, int k, const Completion& f,
                                    const IntervalModel& m, int p_l, int p_r,
                                    const VertexSet& kset,
                                    const BoundConstants& bc = {});

struct BoundsOptions {
    int max_a_exhaustive = 3;  // exhaustive over |A| <= this when n <= 7
    int random_samples = 1000;
    std::uint64_t seed = 0;
    BoundConstants constants;
};

// Samples sets A (and r in 1..k) and checks the neighborhood-class and
// low-deficiency-component bounds. opt_size is |F| for a solved instance.
std::vector<LemmaReport> verify_bounds(const Graph& g, int k, int opt_size,
                                       const BoundsOptions& opts = {});

// Builds the anatomy without judging it; shared with the checker and tests.
// Returns false (with reason) when omega is not realized as a clique section
// of m or the required vertices cannot be chosen.
bool build_clique_anatomy(const Graph& g, const Completion& f, int k, const IntervalModel& m,
                          const VertexSet& omega, CliqueAnatomy* out, std::string* reason);

FillInContext build_fill_in_context(const Graph& g, const Completion& f, int k,
                                    const IntervalModel& m, int v);

}  // namespace ic
