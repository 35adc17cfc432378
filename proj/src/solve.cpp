#include "ic/solve.hpp"

#include <algorithm>
#include <stdexcept>

#include "ic/modular.hpp"
#include "ic/recognize.hpp"

namespace ic {

Completion Completion::of(EdgeList es) {
    for (auto& [u, v] : es) {
        if (u == v) throw std::invalid_argument("completion: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Completion{std::move(es)};
}

int Completion::compare(const Completion& a, const Completion& b) {
    if (a.edges == b.edges) return 0;
    return std::lexicographical_compare(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end()) ? -1
                                                                                                        : 1;
}

std::string Completion::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
    }
    return s + "}";
}

std::vector<int> incident_counts(int n, const Completion& f) {
    std::vector<int> inc(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : f.edges) {
        ++inc[static_cast<std::size_t>(u)];
        ++inc[static_cast<std::size_t>(v)];
    }
    return inc;
}

std::vector<VertexClass> classify_vertices(const Graph& g, const Completion& f, int k) {
    auto inc = incident_counts(g.n(), f);
    std::vector<VertexClass> out(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        int c = inc[static_cast<std::size_t>(v)];
        out[static_cast<std::size_t>(v)].touched = c > 0;
        out[static_cast<std::size_t>(v)].cheap = static_cast<long long>(c) * c <= k;
    }
    return out;
}

namespace {

struct ScratchGraph {
    Graph g;

    explicit ScratchGraph(const Graph& base) : g(base) {}

    bool interval_with(const EdgeList& f) {
        for (auto [u, v] : f) g.add_edge(u, v);
        bool ok = is_interval(g);
        for (auto [u, v] : f) g.remove_edge(u, v);
        return ok;
    }
};

}  // namespace

bool is_minimal_completion(const Graph& g, const Completion& f) {
    if (!is_interval(g.with_edges(f.edges))) return false;
    const int s = f.size();
    ScratchGraph scratch(g);
    // every nonempty removal must break intervalness
    for (unsigned mask = 1; mask + 1 < (1u << s); ++mask) {
        EdgeList kept;
        for (int i = 0; i < s; ++i)
            if (!(mask & (1u << i))) kept.push_back(f.edges[static_cast<std::size_t>(i)]);
        if (scratch.interval_with(kept)) return false;
    }
    if (s > 0 && is_interval(g)) return false;  // the full removal
    return true;
}

SolveResult solve_oracle(const Graph& g, const OracleOptions& opt) {
    const int horizon = opt.horizon < 0 ? opt.k : opt.horizon;
    SolveResult res;
    EdgeList non_edges = g.non_edges();  // already in pair order
    const int mbar = static_cast<int>(non_edges.size());
    ScratchGraph scratch(g);

    auto test = [&](const EdgeList& f) -> std::optional<bool> {
        if (res.tests >= opt.work_cap) return std::nullopt;
        ++res.tests;
        return scratch.interval_with(f);
    };

    for (int size = 0; size <= std::min(horizon, mbar); ++size) {
        // combinations of non-edge indices in lexicographic order: exactly
        // the completion order on sets of this cardinality
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        bool more = true;
        while (more) {
            EdgeList f;
            f.reserve(static_cast<std::size_t>(size));
            for (int i : idx) f.push_back(non_edges[static_cast<std::size_t>(i)]);
            auto ok = test(f);
            if (!ok) {
                res.status = SolveStatus::capped;
                return res;
            }
            if (*ok) {
                Completion comp = Completion::of(f);
                if (!res.opt) {
                    res.opt = size;
                    res.canonical = comp;
                    res.status = size <= opt.k ? SolveStatus::solved : SolveStatus::over_budget;
                    if (!opt.list_minimum && !opt.list_minimal) return res;
                }
                if (opt.list_minimum && size == *res.opt) res.all_minimum.push_back(comp);
                if (opt.list_minimal) {
                    bool minimal = size == *res.opt;  // minimum is always minimal
                    if (!minimal) minimal = is_minimal_completion(g, comp);
                    if (minimal) res.all_minimal.push_back(comp);
                }
            }
            // advance combination
            more = false;
            for (int i = size - 1; i >= 0; --i) {
                if (idx[static_cast<std::size_t>(i)] < mbar - (size - i)) {
                    ++idx[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < size; ++j)
                        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
                    more = true;
                    break;
                }
            }
            if (size == 0) break;
        }
        if (res.opt && !opt.list_minimal && size >= *res.opt) break;  // all_minimum done at this size
    }
    if (!res.opt) res.status = SolveStatus::over_budget;
    return res;
}

namespace {

struct BranchSearch {
    int budget_left;
    EdgeList added;

    bool rec(Graph g, int budget, std::vector<VertexSet>& forbidden) {
        auto r = recognize(g);
        if (r.interval()) return true;
        if (budget == 0) return false;
        // non-edges inside the witness, in pair order
        EdgeList cands;
        auto w = r.witness.members();
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                int u = w[i], v = w[j];
                if (!g.has_edge(u, v) && !forbidden[static_cast<std::size_t>(u)].contains(v))
                    cands.emplace_back(u, v);
            }
        for (std::size_t i = 0; i < cands.size(); ++i) {
            auto [u, v] = cands[i];
            Graph g2 = g;
            g2.add_edge(u, v);
            added.emplace_back(u, v);
            if (rec(std::move(g2), budget - 1, forbidden)) return true;
            added.pop_back();
            forbidden[static_cast<std::size_t>(u)].add(v);
            forbidden[static_cast<std::size_t>(v)].add(u);
        }
        // undo the exclusions introduced at this node
        for (const auto& [u, v] : cands) {
            forbidden[static_cast<std::size_t>(u)].remove(v);
            forbidden[static_cast<std::size_t>(v)].remove(u);
        }
        return false;
    }
};

}  // namespace

SolveResult solve_branching(const Graph& g, int k) {
    SolveResult res;
    for (int b = 0; b <= k; ++b) {
        ReduceResult red = reduce_exhaustively(g, b);
        if (red.no_instance) continue;  // needs more than b edges
        BranchSearch search;
        std::vector<VertexSet> forbidden(static_cast<std::size_t>(red.graph.n()));
        if (search.rec(red.graph, b, forbidden)) {
            res.status = SolveStatus::solved;
            res.opt = b;
            EdgeList orig;
            for (auto [u, v] : search.added)
                orig.emplace_back(red.orig_ids[static_cast<std::size_t>(u)],
                                  red.orig_ids[static_cast<std::size_t>(v)]);
            res.witness = Completion::of(orig);
            return res;
        }
    }
    res.status = SolveStatus::over_budget;
    return res;
}

}  // namespace ic
