#include "ic/dp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ic/recognize.hpp"

namespace ic {

namespace {

Completion incident_fill(const Completion& f, int v) {
    EdgeList es;
    for (auto [a, b] : f.edges)
        if (a == v || b == v) es.emplace_back(a, b);
    return Completion::of(std::move(es));
}

VertexSet fill_partners(const Completion& f, int v) {
    VertexSet s;
    for (auto [a, b] : f.edges) {
        if (a == v) s.add(b);
        if (b == v) s.add(a);
    }
    return s;
}

[[noreturn]] void world_fail(int v, const std::string& what) {
    throw std::logic_error("world(v=" + std::to_string(v) + "): " + what);
}

}  // namespace

World make_world(const Graph& g, int v, VertexSet omega_l, VertexSet omega_r, int p_l, int p_r,
                 Completion f_v, int k) {
    const int n = g.n();
    if (v < 0 || v >= n) world_fail(v, "vertex out of range");
    if (!(1 <= p_l && p_l <= p_r && p_r <= 2 * n - 1)) world_fail(v, "positions out of range");
    for (auto [a, b] : f_v.edges) {
        if (a != v && b != v) world_fail(v, "fill edge not incident to v");
        if (g.has_edge(a, b)) world_fail(v, "fill edge already in the graph");
    }
    if (!(omega_l.contains(v) && omega_r.contains(v))) world_fail(v, "v outside its sections");

    World w;
    w.v = v;
    w.omega_l = omega_l;
    w.omega_r = omega_r;
    w.p_l = p_l;
    w.p_r = p_r;
    w.f_v = f_v;
    w.closed_nbhd = g.closed_neighborhood(v) | fill_partners(f_v, v);

    VertexSet open_nbhd = w.closed_nbhd;
    open_nbhd.remove(v);
    if (p_r - p_l != (omega_l ^ omega_r).count() + 2 * (open_nbhd - (omega_l | omega_r)).count())
        world_fail(v, "width identity broken");
    bool cond4 = true;
    (omega_l | omega_r).for_each([&](int u) {
        if (u != v && !open_nbhd.contains(u)) cond4 = false;
    });
    if (!cond4) world_fail(v, "section vertex not adjacent to v");
    for (const VertexSet& c : components(g, omega_l | omega_r)) {
        if (c.intersects(open_nbhd) && !c.subset_of(open_nbhd))
            world_fail(v, "component split by N(v)");
    }
    long long fc = f_v.size();
    if (fc * fc > k) world_fail(v, "more than sqrt(k) fill edges at v");
    return w;
}

World world_from_model(const Graph& g, const Completion& f, const IntervalModel& m, int v, int k) {
    return make_world(g, v, m.section(m.begin_pos(v)), m.section(m.end_pos(v) - 1), m.begin_pos(v),
                      m.end_pos(v) - 1, incident_fill(f, v), k);
}

bool world_appears(const World& w, const Completion& f, const IntervalModel& m) {
    if (!(w.f_v == incident_fill(f, w.v))) return false;
    if (w.p_l != m.begin_pos(w.v) || w.p_r != m.end_pos(w.v) - 1) return false;
    return w.omega_l == m.section(w.p_l) && w.omega_r == m.section(w.p_r);
}

Terrace flat_terrace(const World& w) {
    Terrace t;
    t.nested = false;
    t.win = w;
    return t;
}

Terrace make_nested_terrace(const Graph& g, World win, World wout1, World wout2, VertexSet side1,
                            VertexSet side2, int k) {
    auto fail = [&](const std::string& what) {
        throw std::logic_error("terrace(x=" + std::to_string(win.v) + "): " + what);
    };
    if (wout1.v == win.v || wout2.v == win.v) fail("inner world equals an outer world");
    if (!(wout2.p_l <= wout1.p_l && wout1.p_l < win.p_l && win.p_l <= win.p_r && win.p_r < wout2.p_r &&
          wout2.p_r <= wout1.p_r))
        fail("position chain broken");
    long long kc = ((win.omega_l & win.omega_r) - (wout1.omega_l & wout2.omega_r)).count();
    if (kc * kc > 4LL * k) fail("more than 2*sqrt(k) expensive middle vertices");
    if (side1.intersects(side2)) fail("sides overlap");
    VertexSet dom = (wout1.interior() & wout2.interior()) - win.closed_nbhd;
    if ((side1 | side2) != dom) fail("sides do not partition the squeezed vertices");
    for (const VertexSet& c : components(g, g.vertices() - dom))
        if (!(c.subset_of(side1) || c.subset_of(side2))) fail("side assignment splits a component");

    Terrace t;
    t.nested = true;
    t.win = std::move(win);
    t.wout1 = std::move(wout1);
    t.wout2 = std::move(wout2);
    t.side1 = side1;
    t.side2 = side2;
    return t;
}

Terrace terrace_from_model(const Graph& g, const Completion& f, const IntervalModel& m, int x, int k) {
    if (g.special() && x == g.special()->r) throw std::invalid_argument("terrace pivot must differ from the universal vertex");
    auto cls = classify_vertices(g, f, k);
    int y1 = -1, y2 = -1;
    for (int y = 0; y < g.n(); ++y) {
        if (!cls[static_cast<std::size_t>(y)].cheap) continue;
        if (!(m.begin_pos(y) < m.begin_pos(x) && m.end_pos(x) < m.end_pos(y))) continue;
        if (y1 < 0 || m.begin_pos(y) > m.begin_pos(y1)) y1 = y;
        if (y2 < 0 || m.end_pos(y) < m.end_pos(y2)) y2 = y;
    }
    if (y1 < 0) throw std::logic_error("terrace: no cheap enclosing vertex");

    VertexSet side1, side2;
    for (int w = 0; w < g.n(); ++w) {
        if (m.begin_pos(y1) < m.begin_pos(w) && m.end_pos(w) < m.begin_pos(x)) side1.add(w);
        if (m.end_pos(x) < m.begin_pos(w) && m.end_pos(w) < m.end_pos(y2)) side2.add(w);
    }
    return make_nested_terrace(g, world_from_model(g, f, m, x, k), world_from_model(g, f, m, y1, k),
                               world_from_model(g, f, m, y2, k), side1, side2, k);
}

bool terrace_appears(const Terrace& t, const Completion& f, const IntervalModel& m) {
    if (!world_appears(t.win, f, m)) return false;
    if (!t.nested) return true;
    if (!world_appears(t.wout1, f, m) || !world_appears(t.wout2, f, m)) return false;
    bool ok = true;
    (t.side1 | t.side2).for_each([&](int w) {
        bool left = m.end_pos(w) < m.begin_pos(t.win.v);
        if (left != t.side1.contains(w)) ok = false;
    });
    return ok;
}

State make_state(Terrace t1, Terrace t2) {
    State s;
    s.t1 = std::move(t1);
    s.t2 = std::move(t2);
    if (!(s.t2.a_p_l() <= s.t1.b_p_l() && s.t1.b_p_l() < s.t2.a_p_r() && s.t2.a_p_r() <= s.t1.b_p_r()))
        throw std::logic_error("state: area positions misaligned");
    if (s.width() != 2 * s.interior().count() + (s.omega_l() ^ s.omega_r()).count())
        throw std::logic_error("state: width identity broken");
    return s;
}

bool state_appears(const State& s, const Completion& f, const IntervalModel& m) {
    return terrace_appears(s.t1, f, m) && terrace_appears(s.t2, f, m);
}

std::vector<Event> state_events(const State& s) {
    std::vector<Event> out;
    (s.interior() | (s.omega_r() - s.omega_l())).for_each([&](int v) { out.push_back(Event::begin(v)); });
    (s.interior() | (s.omega_l() - s.omega_r())).for_each([&](int v) { out.push_back(Event::end(v)); });
    return out;
}

namespace {

std::string world_key(const World& w) {
    std::string s = std::to_string(w.v) + ":" + std::to_string(w.p_l) + ":" + std::to_string(w.p_r);
    auto words = [&](const VertexSet& vs) {
        s += ":" + std::to_string(vs.word0()) + "." + std::to_string(vs.word1());
    };
    words(w.omega_l);
    words(w.omega_r);
    s += ":" + w.f_v.str();
    return s;
}

std::string terrace_key(const Terrace& t) {
    if (!t.nested) return "F[" + world_key(t.win) + "]";
    return "N[" + world_key(t.win) + "|" + world_key(t.wout1) + "|" + world_key(t.wout2) + "|" +
           std::to_string(t.side1.word0()) + "." + std::to_string(t.side1.word1()) + "]";
}

struct EventMask {
    VertexSet begins, ends;
    bool operator==(const EventMask&) const = default;
    bool disjoint(const EventMask& o) const {
        return !begins.intersects(o.begins) && !ends.intersects(o.ends);
    }
    EventMask united(const EventMask& o) const { return {begins | o.begins, ends | o.ends}; }
};

EventMask event_mask(const State& s) {
    return {s.interior() | (s.omega_r() - s.omega_l()), s.interior() | (s.omega_l() - s.omega_r())};
}

std::string border_key(int p, const VertexSet& omega) {
    return std::to_string(p) + "/" + std::to_string(omega.word0()) + "." + std::to_string(omega.word1());
}

}  // namespace

std::string State::key() const { return terrace_key(t1) + "+" + terrace_key(t2); }

bool evaluate_completion(const Graph& g, const State& s, const std::vector<Event>& seq,
                         Completion* f_pi) {
    const VertexSet wset = s.w_set();
    const VertexSet omega_l = s.omega_l(), omega_r = s.omega_r();
    EventMask expect = event_mask(s);
    EventMask got;
    for (const Event& e : seq) {
        VertexSet& m = e.is_end ? got.ends : got.begins;
        if (m.contains(e.v)) return false;
        m.add(e.v);
    }
    if (!(got == expect)) return false;

    EdgeList fills;
    auto base_pairs = [&](const VertexSet& side) {
        auto mem = side.members();
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j)
                if (!g.has_edge(mem[i], mem[j])) fills.emplace_back(mem[i], mem[j]);
    };
    base_pairs(omega_l);
    base_pairs(omega_r);

    VertexSet active = omega_l, begun = omega_l, finished;
    for (const Event& e : seq) {
        VertexSet nb = g.neighbors(e.v) & wset;
        if (!e.is_end) {
            if (begun.contains(e.v)) return false;
            if (nb.intersects(finished)) return false;
            VertexSet overlaps = active - nb;
            overlaps.remove(e.v);
            if (omega_r.contains(e.v)) overlaps -= omega_r;  // counted in the base pairs
            overlaps.for_each([&](int u) { fills.emplace_back(e.v, u); });
            active.add(e.v);
            begun.add(e.v);
        } else {
            if (!active.contains(e.v)) return false;
            if (!nb.subset_of(begun)) return false;
            active.remove(e.v);
            finished.add(e.v);
        }
    }
    if (!(active == omega_r)) return false;
    if (f_pi) *f_pi = Completion::of(std::move(fills));
    return true;
}

namespace {

// (|F|, F, associated sequence) comparison of two completions of one state
struct CompletionOrder {
    std::vector<Event> assoc;  // begins ascending, then ends descending

    explicit CompletionOrder(const State& s) {
        EventMask m = event_mask(s);
        m.begins.for_each([&](int v) { assoc.push_back(Event::begin(v)); });
        auto ends = m.ends.members();
        std::reverse(ends.begin(), ends.end());
        for (int v : ends) assoc.push_back(Event::end(v));
    }

    static std::vector<int> positions_of(const std::vector<Event>& assoc, const std::vector<Event>& seq) {
        std::vector<int> out;
        out.reserve(assoc.size());
        for (const Event& a : assoc) {
            for (std::size_t i = 0; i < seq.size(); ++i)
                if (seq[i] == a) {
                    out.push_back(static_cast<int>(i));
                    break;
                }
        }
        return out;
    }

    // true when a is strictly better
    bool better(const StateCompletion& a, const StateCompletion& b) const {
        if (a.f_pi.size() != b.f_pi.size()) return a.f_pi.size() < b.f_pi.size();
        int c = Completion::compare(a.f_pi, b.f_pi);
        if (c != 0) return c < 0;
        return positions_of(assoc, a.seq) < positions_of(assoc, b.seq);
    }
};

struct BruteState {
    const Graph& g;
    const State& s;
    VertexSet wset, omega_l, omega_r;
    std::vector<Event> events;
    std::vector<bool> used;
    std::vector<Event> seq;
    EdgeList fills;
    VertexSet active, begun, finished;
    std::optional<StateCompletion> best;
    CompletionOrder order;

    BruteState(const Graph& graph, const State& st)
        : g(graph), s(st), wset(st.w_set()), omega_l(st.omega_l()), omega_r(st.omega_r()),
          events(state_events(st)), used(events.size(), false), order(st) {
        active = omega_l;
        begun = omega_l;
        auto base_pairs = [&](const VertexSet& side) {
            auto mem = side.members();
            for (std::size_t i = 0; i < mem.size(); ++i)
                for (std::size_t j = i + 1; j < mem.size(); ++j)
                    if (!g.has_edge(mem[i], mem[j])) fills.emplace_back(mem[i], mem[j]);
        };
        base_pairs(omega_l);
        base_pairs(omega_r);
    }

    void run() { dfs(); }

    void dfs() {
        if (seq.size() == events.size()) {
            StateCompletion cand{seq, Completion::of(fills)};
            if (!best || order.better(cand, *best)) best = std::move(cand);
            return;
        }
        if (best && static_cast<int>(fills.size()) > best->f_pi.size()) return;  // cannot win on |F|
        for (std::size_t i = 0; i < events.size(); ++i) {
            if (used[i]) continue;
            const Event e = events[i];
            VertexSet nb = g.neighbors(e.v) & wset;
            std::size_t added = 0;
            if (!e.is_end) {
                if (begun.contains(e.v)) continue;
                if (nb.intersects(finished)) continue;
                VertexSet overlaps = active - nb;
                overlaps.remove(e.v);
                if (omega_r.contains(e.v)) overlaps -= omega_r;
                overlaps.for_each([&](int u) {
                    fills.emplace_back(std::min(e.v, u), std::max(e.v, u));
                    ++added;
                });
                active.add(e.v);
                begun.add(e.v);
                used[i] = true;
                seq.push_back(e);
                dfs();
                seq.pop_back();
                used[i] = false;
                begun.remove(e.v);
                active.remove(e.v);
            } else {
                if (!active.contains(e.v)) continue;
                if (!nb.subset_of(begun)) continue;
                active.remove(e.v);
                finished.add(e.v);
                used[i] = true;
                seq.push_back(e);
                dfs();
                seq.pop_back();
                used[i] = false;
                finished.remove(e.v);
                active.add(e.v);
            }
            while (added--) fills.pop_back();
        }
    }
};

}  // namespace

std::optional<StateCompletion> best_completion(const Graph& g, const State& s) {
    BruteState brute(g, s);
    brute.run();
    return brute.best;
}

bool dp_base_case(int event_count, int k, int base_floor) {
    if (event_count <= base_floor) return true;
    long long d = event_count - 4;
    return d >= 0 && d * d <= 16LL * k;
}

std::vector<State> generate_states(const Graph& g, const Completion& f, const IntervalModel& m,
                                   const DpOptions& opt) {
    if (!g.special()) throw std::invalid_argument("generate_states: graph must be augmented");
    auto cls = classify_vertices(g, f, opt.k);

    std::vector<State> out;
    std::map<std::string, bool> seen;
    std::vector<State> queue;

    auto add_state = [&](State s) {
        if (!state_appears(s, f, m)) throw std::logic_error("generated state does not appear: " + s.key());
        std::string key = s.key();
        if (seen.emplace(key, true).second) {
            out.push_back(s);
            queue.push_back(std::move(s));
        }
    };

    World wr = world_from_model(g, f, m, g.special()->r, opt.k);
    add_state(make_state(flat_terrace(wr), flat_terrace(wr)));

    while (!queue.empty()) {
        State s = std::move(queue.back());
        queue.pop_back();
        std::vector<Event> ev = state_events(s);
        if (dp_base_case(static_cast<int>(ev.size()), opt.k, opt.base_floor)) continue;

        // pivot: cheap vertex with the longest stretch inside the state;
        // ties prefer the interior, then the smallest id
        VertexSet cand = (s.omega_l() ^ s.omega_r()) | s.interior();
        int x = -1, x_value = -1;
        bool x_interior = false;
        cand.for_each([&](int v) {
            if (!cls[static_cast<std::size_t>(v)].cheap) return;
            int value = std::min(m.end_pos(v), s.p_r() + 1) - std::max(m.begin_pos(v), s.p_l());
            bool in_i = s.interior().contains(v);
            if (value > x_value || (value == x_value && in_i && !x_interior)) {
                x = v;
                x_value = value;
                x_interior = in_i;
            }
        });
        if (x < 0) throw std::logic_error("no cheap pivot for state " + s.key());

        Terrace tf = flat_terrace(world_from_model(g, f, m, x, opt.k));
        Terrace tn = terrace_from_model(g, f, m, x, opt.k);
        if (s.interior().contains(x)) {
            add_state(make_state(s.t1, tn));
            add_state(make_state(tf, tf));
            add_state(make_state(tn, s.t2));
        } else if (s.omega_l().contains(x)) {
            add_state(make_state(s.t1, tf));
            add_state(make_state(tn, s.t2));
        } else {
            add_state(make_state(s.t1, tn));
            add_state(make_state(tf, s.t2));
        }
    }
    return out;
}

DpResult dp_reconstruct(const Graph& g, const Completion& f, const IntervalModel& m,
                        const std::vector<State>& states, const DpOptions& opt) {
    std::vector<int> indices(states.size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[static_cast<std::size_t>(i)] = static_cast<int>(i);
    std::sort(indices.begin(), indices.end(), [&](int a, int b) {
        int wa = states[static_cast<std::size_t>(a)].width(), wb = states[static_cast<std::size_t>(b)].width();
        if (wa != wb) return wa < wb;
        return states[static_cast<std::size_t>(a)].key() < states[static_cast<std::size_t>(b)].key();
    });

    std::map<std::string, std::vector<int>> by_left;
    for (std::size_t i = 0; i < states.size(); ++i)
        by_left[border_key(states[i].p_l(), states[i].omega_l())].push_back(static_cast<int>(i));

    std::vector<std::optional<StateCompletion>> table(states.size());
    std::vector<EventMask> masks(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) masks[i] = event_mask(states[i]);

    DpStats stats;
    stats.states = static_cast<int>(states.size());

    for (int idx : indices) {
        const State& s = states[static_cast<std::size_t>(idx)];
        const int width = s.width();
        if (dp_base_case(width, opt.k, opt.base_floor)) {
            auto got = best_completion(g, s);
            if (!got) throw std::logic_error("base state has no completion: " + s.key());
            table[static_cast<std::size_t>(idx)] = std::move(got);
            ++stats.base_cases;
            continue;
        }
        CompletionOrder order(s);
        std::optional<StateCompletion> best;
        auto consider = [&](std::initializer_list<int> parts) {
            EventMask u;
            std::vector<Event> seq;
            for (int p : parts) {
                if (!masks[static_cast<std::size_t>(p)].disjoint(u)) return;
                u = u.united(masks[static_cast<std::size_t>(p)]);
                const auto& sub = table[static_cast<std::size_t>(p)];
                seq.insert(seq.end(), sub->seq.begin(), sub->seq.end());
            }
            if (!(u == masks[static_cast<std::size_t>(idx)])) return;
            Completion fpi;
            if (!evaluate_completion(g, s, seq, &fpi)) return;
            StateCompletion cand{std::move(seq), std::move(fpi)};
            if (!best || order.better(cand, *best)) best = std::move(cand);
        };

        auto it1 = by_left.find(border_key(s.p_l(), s.omega_l()));
        if (it1 != by_left.end()) {
            for (int i1 : it1->second) {
                const State& s1 = states[static_cast<std::size_t>(i1)];
                if (s1.width() >= width || !table[static_cast<std::size_t>(i1)]) continue;
                auto it2 = by_left.find(border_key(s1.p_r(), s1.omega_r()));
                if (it2 == by_left.end()) continue;
                for (int i2 : it2->second) {
                    const State& s2 = states[static_cast<std::size_t>(i2)];
                    if (s2.width() >= width || !table[static_cast<std::size_t>(i2)]) continue;
                    if (s2.p_r() == s.p_r() && s2.omega_r() == s.omega_r()) consider({i1, i2});
                    // three-part chains
                    auto it3 = by_left.find(border_key(s2.p_r(), s2.omega_r()));
                    if (it3 == by_left.end()) continue;
                    for (int i3 : it3->second) {
                        const State& s3 = states[static_cast<std::size_t>(i3)];
                        if (s3.width() >= width || !table[static_cast<std::size_t>(i3)]) continue;
                        if (s3.p_r() == s.p_r() && s3.omega_r() == s.omega_r()) consider({i1, i2, i3});
                    }
                }
            }
        }
        if (!best) throw std::logic_error("no gluing found for state: " + s.key());
        table[static_cast<std::size_t>(idx)] = std::move(best);
        ++stats.glued;
    }

    // root: the pair of flat terraces over the universal vertex
    const auto sp = g.special();
    if (!sp) throw std::invalid_argument("dp_reconstruct: graph must be augmented");
    World wr = world_from_model(g, f, m, sp->r, opt.k);
    std::string root_key = make_state(flat_terrace(wr), flat_terrace(wr)).key();
    int root = -1;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i].key() == root_key) root = static_cast<int>(i);
    if (root < 0 || !table[static_cast<std::size_t>(root)])
        throw std::logic_error("root state missing from the family");

    std::vector<Event> full;
    full.push_back(Event::begin(sp->r));
    const auto& rootsol = *table[static_cast<std::size_t>(root)];
    full.insert(full.end(), rootsol.seq.begin(), rootsol.seq.end());
    full.push_back(Event::end(sp->r));

    DpResult res{IntervalModel(g.n(), std::move(full)), stats, false};
    res.match = res.model == m;
    return res;
}

DpResult dp_reconstruct(const Graph& g, const Completion& f, const IntervalModel& m,
                        const DpOptions& opt) {
    return dp_reconstruct(g, f, m, generate_states(g, f, m, opt), opt);
}

}  // namespace ic
