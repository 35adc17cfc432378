#include "ic/recognize.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace ic {

namespace {

// Maximum cardinality search. Returns the visit order; the reverse visit
// order is a perfect elimination ordering iff g is chordal.
std::vector<int> mcs_order(const Graph& g) {
    const int n = g.n();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    VertexSet chosen;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!chosen.contains(v) && (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        chosen.add(best);
        order.push_back(best);
        g.neighbors(best).for_each([&](int u) {
            if (!chosen.contains(u)) ++weight[static_cast<std::size_t>(u)];
        });
    }
    return order;
}

bool chordal_with_order(const Graph& g, const std::vector<int>& order) {
    VertexSet earlier;
    for (int v : order) {
        VertexSet back = g.neighbors(v) & earlier;
        if (!g.is_clique(back)) return false;
        earlier.add(v);
    }
    return true;
}

struct OrderSearch {
    const std::vector<VertexSet>& cliques;
    std::vector<VertexSet> cliques_of;  // per vertex: indices of cliques containing it
    std::unordered_set<std::uint64_t> failed;  // hashed (used, last) states
    std::vector<int> order;

    explicit OrderSearch(const std::vector<VertexSet>& cs, int n) : cliques(cs) {
        cliques_of.assign(static_cast<std::size_t>(n), VertexSet{});
        for (std::size_t j = 0; j < cs.size(); ++j)
            cs[j].for_each([&](int v) { cliques_of[static_cast<std::size_t>(v)].add(static_cast<int>(j)); });
    }

    static std::uint64_t key(const VertexSet& used, int last) {
        std::uint64_t h = used.word0() * 0x9e3779b97f4a7c15ULL;
        h ^= used.word1() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h * 31 + static_cast<std::uint64_t>(last + 1);
    }

    bool dfs(VertexSet used, int last, const VertexSet& seen) {
        const int m = static_cast<int>(cliques.size());
        if (used.count() == m) return true;
        std::uint64_t k = key(used, last);
        if (failed.contains(k)) return false;
        for (int j = 0; j < m; ++j) {
            if (used.contains(j)) continue;
            const VertexSet& kj = cliques[static_cast<std::size_t>(j)];
            VertexSet dead = seen;
            if (last >= 0) dead -= cliques[static_cast<std::size_t>(last)];
            if (kj.intersects(dead)) continue;
            if (last >= 0) {
                // retiring vertices must have no cliques left
                bool ok = true;
                (cliques[static_cast<std::size_t>(last)] - kj).for_each([&](int v) {
                    if (!(cliques_of[static_cast<std::size_t>(v)] - used).empty()) ok = false;
                });
                if (!ok) continue;
            }
            VertexSet used2 = used;
            used2.add(j);
            order.push_back(j);
            if (dfs(used2, j, seen | kj)) return true;
            order.pop_back();
        }
        failed.insert(k);
        return false;
    }
};

void append_block(std::vector<Event>& seq, const VertexSet& vs, bool ends, bool descending) {
    auto mem = vs.members();
    if (descending) std::reverse(mem.begin(), mem.end());
    for (int v : mem) seq.push_back(ends ? Event::end(v) : Event::begin(v));
}

}  // namespace

namespace detail {

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g) {
    std::vector<int> order = mcs_order(g);
    std::vector<VertexSet> cand;
    VertexSet earlier;
    for (int v : order) {
        VertexSet c = g.neighbors(v) & earlier;
        c.add(v);
        cand.push_back(c);
        earlier.add(v);
    }
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cand.size(); ++j)
            if (i != j && cand[i].subset_of(cand[j]) && cand[i] != cand[j]) maximal = false;
        if (maximal) out.push_back(cand[i]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool consecutive_clique_order(const std::vector<VertexSet>& cliques, std::vector<int>* order_out) {
    if (cliques.empty()) {
        if (order_out) order_out->clear();
        return true;
    }
    int n = 0;
    for (const auto& c : cliques) n = std::max(n, c.max() + 1);
    OrderSearch s(cliques, n);
    if (!s.dfs(VertexSet{}, -1, VertexSet{})) return false;
    if (order_out) *order_out = s.order;
    return true;
}

IntervalModel model_from_clique_order(int n, const std::vector<VertexSet>& cliques,
                                      const std::vector<int>& order) {
    std::vector<Event> seq;
    seq.reserve(static_cast<std::size_t>(2 * n));
    if (!order.empty()) {
        append_block(seq, cliques[static_cast<std::size_t>(order[0])], false, false);
        for (std::size_t i = 1; i < order.size(); ++i) {
            const VertexSet& prev = cliques[static_cast<std::size_t>(order[i - 1])];
            const VertexSet& cur = cliques[static_cast<std::size_t>(order[i])];
            append_block(seq, prev - cur, true, true);
            append_block(seq, cur - prev, false, false);
        }
        append_block(seq, cliques[static_cast<std::size_t>(order.back())], true, true);
    }
    return IntervalModel(n, std::move(seq));
}

}  // namespace detail

bool is_chordal(const Graph& g) { return chordal_with_order(g, mcs_order(g)); }

bool is_interval(const Graph& g) {
    if (g.n() == 0) return true;
    if (!is_chordal(g)) return false;
    return detail::consecutive_clique_order(detail::maximal_cliques_chordal(g), nullptr);
}

RecognizeResult recognize(const Graph& g) {
    if (g.n() == 0) return {IntervalModel(0, {}), {}};
    if (is_chordal(g)) {
        auto cliques = detail::maximal_cliques_chordal(g);
        std::vector<int> order;
        if (detail::consecutive_clique_order(cliques, &order))
            return {detail::model_from_clique_order(g.n(), cliques, order), {}};
    }
    // greedy minimal witness: drop vertices in id order while non-interval
    VertexSet w = g.vertices();
    for (int v = 0; v < g.n(); ++v) {
        if (!w.contains(v)) continue;
        VertexSet w2 = w;
        w2.remove(v);
        if (!is_interval(g.induced(w2).first)) w = w2;
    }
    return {std::nullopt, w};
}

namespace {

// Branch-and-prune over consecutive clique orderings; boundary blocks are
// filled in the unique order a tuple-minimal model uses, so the search space
// is exactly the clique orderings.
struct CanonicalSearch {
    const Graph& g;
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> cliques_of;
    int n, m;

    std::vector<int> pb, pe;  // partial positions, 0 = unplaced
    int placed = 0;

    bool have_best = false;
    std::vector<int> best_pb, best_pe;
    std::vector<Event> best_seq;
    std::vector<Event> seq;

    explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.n()) {
        cliques = detail::maximal_cliques_chordal(g);
        m = static_cast<int>(cliques.size());
        cliques_of.assign(static_cast<std::size_t>(n), VertexSet{});
        for (int j = 0; j < m; ++j)
            cliques[static_cast<std::size_t>(j)].for_each(
                [&](int v) { cliques_of[static_cast<std::size_t>(v)].add(j); });
        pb.assign(static_cast<std::size_t>(n), 0);
        pe.assign(static_cast<std::size_t>(n), 0);
    }

    // -1: partial already beats best somewhere; 0: undecided; 1: prunable
    int compare_partial() const {
        if (!have_best) return 0;
        for (int v = 0; v < n; ++v) {
            int q = pb[static_cast<std::size_t>(v)], qb = best_pb[static_cast<std::size_t>(v)];
            if (q != 0) {
                if (q < qb) return -1;
                if (q > qb) return 1;
            } else {
                return qb <= placed ? 1 : 0;
            }
        }
        for (int v = n - 1; v >= 0; --v) {
            int q = pe[static_cast<std::size_t>(v)], qb = best_pe[static_cast<std::size_t>(v)];
            if (q != 0) {
                if (q < qb) return -1;
                if (q > qb) return 1;
            } else {
                return qb <= placed ? 1 : 0;
            }
        }
        return 1;  // identical to best
    }

    void push(Event e) {
        seq.push_back(e);
        ++placed;
        (e.is_end ? pe : pb)[static_cast<std::size_t>(e.v)] = placed;
    }
    void pop() {
        Event e = seq.back();
        (e.is_end ? pe : pb)[static_cast<std::size_t>(e.v)] = 0;
        seq.pop_back();
        --placed;
    }

    void push_block(const VertexSet& vs, bool ends, bool descending, int* count) {
        auto mem = vs.members();
        if (descending) std::reverse(mem.begin(), mem.end());
        for (int v : mem) {
            push(ends ? Event::end(v) : Event::begin(v));
            ++*count;
        }
    }

    void take_best() {
        if (have_best) {
            for (int v = 0; v < n; ++v) {
                std::size_t i = static_cast<std::size_t>(v);
                if (pb[i] != best_pb[i]) {
                    if (pb[i] > best_pb[i]) return;
                    break;
                }
            }
        }
        // full tuple compare when prefixes tie on begins
        if (have_best) {
            bool better = false, decided = false;
            for (int v = 0; v < n && !decided; ++v) {
                std::size_t i = static_cast<std::size_t>(v);
                if (pb[i] != best_pb[i]) { better = pb[i] < best_pb[i]; decided = true; }
            }
            for (int v = n - 1; v >= 0 && !decided; --v) {
                std::size_t i = static_cast<std::size_t>(v);
                if (pe[i] != best_pe[i]) { better = pe[i] < best_pe[i]; decided = true; }
            }
            if (!decided || !better) return;
        }
        have_best = true;
        best_pb = pb;
        best_pe = pe;
        best_seq = seq;
    }

    void dfs(VertexSet used, int last, const VertexSet& seen) {
        if (used.count() == m) {
            int added = 0;
            push_block(cliques[static_cast<std::size_t>(last)], true, true, &added);
            take_best();
            while (added--) pop();
            return;
        }
        for (int j = 0; j < m; ++j) {
            if (used.contains(j)) continue;
            const VertexSet& kj = cliques[static_cast<std::size_t>(j)];
            VertexSet dead = seen;
            if (last >= 0) dead -= cliques[static_cast<std::size_t>(last)];
            if (kj.intersects(dead)) continue;
            if (last >= 0) {
                bool ok = true;
                (cliques[static_cast<std::size_t>(last)] - kj).for_each([&](int v) {
                    if (!(cliques_of[static_cast<std::size_t>(v)] - used).empty()) ok = false;
                });
                if (!ok) continue;
            }
            int added = 0;
            if (last >= 0) push_block(cliques[static_cast<std::size_t>(last)] - kj, true, true, &added);
            push_block(kj - (last >= 0 ? cliques[static_cast<std::size_t>(last)] : VertexSet{}), false, false,
                       &added);
            if (compare_partial() <= 0) {
                VertexSet used2 = used;
                used2.add(j);
                dfs(used2, j, seen | kj);
            }
            while (added--) pop();
        }
    }
};

}  // namespace

IntervalModel canonical_model(const Graph& g) {
    if (g.n() == 0) return IntervalModel(0, {});
    if (!is_chordal(g)) throw std::invalid_argument("canonical_model: graph is not interval");
    CanonicalSearch s(g);
    s.dfs(VertexSet{}, -1, VertexSet{});
    if (!s.have_best) throw std::invalid_argument("canonical_model: graph is not interval");
    return IntervalModel(g.n(), std::move(s.best_seq));
}

namespace {

bool starts_with_begins_of(const IntervalModel& m, const VertexSet& omega) {
    int c = omega.count();
    for (int p = 1; p <= c; ++p) {
        Event e = m.at(p);
        if (e.is_end || !omega.contains(e.v)) return false;
    }
    return true;
}

bool ends_with_ends_of(const IntervalModel& m, const VertexSet& omega) {
    int c = omega.count();
    for (int p = m.positions() - c + 1; p <= m.positions(); ++p) {
        Event e = m.at(p);
        if (!e.is_end || !omega.contains(e.v)) return false;
    }
    return true;
}

std::vector<Event> events_of(const IntervalModel& m, const VertexSet& vs) {
    std::vector<Event> out;
    for (const Event& e : m.sequence())
        if (vs.contains(e.v)) out.push_back(e);
    return out;
}

std::vector<Event> reversed_events(std::vector<Event> seq) {
    std::reverse(seq.begin(), seq.end());
    for (Event& e : seq) e.is_end = !e.is_end;
    return seq;
}

}  // namespace

std::optional<IntervalModel> model_with_prescribed_cliques(const Graph& g, const VertexSet& omega1,
                                                           const VertexSet& omega2) {
    if (!g.is_clique(omega1) || !g.is_clique(omega2))
        throw std::invalid_argument("model_with_prescribed_cliques: not a clique");
    if (!is_interval(g)) throw std::invalid_argument("model_with_prescribed_cliques: graph is not interval");

    auto comps = components(g, VertexSet{});
    auto comp_of = [&](const VertexSet& s) -> int {
        if (s.empty()) return -1;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (s.subset_of(comps[i])) return static_cast<int>(i);
        return -1;
    };
    int c1 = comp_of(omega1), c2 = comp_of(omega2);

    if (!omega1.empty() && !omega2.empty() && c1 == c2 && comps.size() > 1) return std::nullopt;

    // Auxiliary graph: 3-vertex paths attached to omega1 and omega2. Its
    // intervalness decides feasibility; its model transforms back.
    const int n = g.n();
    Graph h(n + 6);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    const int x1 = n, x2 = n + 1, x3 = n + 2, y1 = n + 3, y2 = n + 4, y3 = n + 5;
    if (!omega1.empty()) {
        h.add_edge(x1, x2);
        h.add_edge(x2, x3);
        omega1.for_each([&](int v) { h.add_edge(x1, v); });
    }
    if (!omega2.empty()) {
        h.add_edge(y1, y2);
        h.add_edge(y2, y3);
        omega2.for_each([&](int v) { h.add_edge(y1, v); });
    }
    auto rec = recognize(h);
    if (!rec.interval()) return std::nullopt;
    const IntervalModel& sigma = *rec.model;

    auto oriented = [&](int comp_idx, const VertexSet& omega, bool starting) -> std::vector<Event> {
        std::vector<Event> seq = events_of(sigma, comps[static_cast<std::size_t>(comp_idx)]);
        auto good = [&](const std::vector<Event>& s) {
            if (omega.empty()) return true;
            int c = omega.count();
            if (starting) {
                for (int i = 0; i < c; ++i)
                    if (s[static_cast<std::size_t>(i)].is_end || !omega.contains(s[static_cast<std::size_t>(i)].v))
                        return false;
            } else {
                for (int i = 0; i < c; ++i) {
                    const Event& e = s[s.size() - 1 - static_cast<std::size_t>(i)];
                    if (!e.is_end || !omega.contains(e.v)) return false;
                }
            }
            return true;
        };
        if (good(seq)) return seq;
        std::vector<Event> rev = reversed_events(seq);
        if (!good(rev)) throw std::logic_error("prescribed cliques: neither orientation fits");
        return rev;
    };

    std::vector<Event> final_seq;
    if (!omega1.empty() && !omega2.empty() && c1 == c2) {
        // single component graph: restrict and orient globally
        std::vector<Event> seq = events_of(sigma, g.vertices());
        IntervalModel cand(n, seq);
        if (!(starts_with_begins_of(cand, omega1) && ends_with_ends_of(cand, omega2))) {
            cand = IntervalModel(n, reversed_events(seq));
            if (!(starts_with_begins_of(cand, omega1) && ends_with_ends_of(cand, omega2)))
                throw std::logic_error("prescribed cliques: neither orientation fits");
        }
        final_seq = cand.sequence();
    } else {
        // component-wise reshuffle: omega1's component first, omega2's last
        if (c1 >= 0) {
            auto s = oriented(c1, omega1, true);
            final_seq.insert(final_seq.end(), s.begin(), s.end());
        }
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (static_cast<int>(i) == c1 || static_cast<int>(i) == c2) continue;
            auto s = events_of(sigma, comps[i]);
            final_seq.insert(final_seq.end(), s.begin(), s.end());
        }
        if (c2 >= 0 && c2 != c1) {
            auto s = oriented(c2, omega2, false);
            final_seq.insert(final_seq.end(), s.begin(), s.end());
        }
    }

    IntervalModel result(n, std::move(final_seq));
    if (validate_model(g, result)) throw std::logic_error("prescribed cliques: produced invalid model");
    if (!starts_with_begins_of(result, omega1) || !ends_with_ends_of(result, omega2))
        throw std::logic_error("prescribed cliques: transformed model misses the prescription");
    return result;
}

}  // namespace ic
