#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ic/graph.hpp"
#include "ic/interval_model.hpp"
#include "ic/solve.hpp"

namespace ic {

// The neighborhood snapshot of one cheap vertex: its fill edges, the
// sections at its endpoints and the positions they sit at.
struct World {
    int v = -1;
    VertexSet omega_l, omega_r;
    int p_l = 0, p_r = 0;
    Completion f_v;            // fill edges incident to v
    VertexSet closed_nbhd;     // N_{G+F_v}[v]

    VertexSet interior() const { return closed_nbhd - (omega_l | omega_r); }
    bool operator==(const World&) const = default;
};

// Validates all six defining conditions; throws std::logic_error naming the
// first one that fails.
World make_world(const Graph& g, int v, VertexSet omega_l, VertexSet omega_r, int p_l, int p_r,
                 Completion f_v, int k);

World world_from_model(const Graph& g, const Completion& f, const IntervalModel& m, int v, int k);

bool world_appears(const World& w, const Completion& f, const IntervalModel& m);

// Flat: one world, both areas coincide. Nested: an inner world strictly
// inside two outer worlds plus a left/right assignment of the vertices
// squeezed between them.
struct Terrace {
    bool nested = false;
    World win, wout1, wout2;  // flat uses win only
    VertexSet side1, side2;   // nested only: the two assigned interiors

    VertexSet a_omega_l() const { return nested ? wout1.omega_l : win.omega_l; }
    VertexSet a_omega_r() const { return nested ? win.omega_l : win.omega_r; }
    VertexSet b_omega_l() const { return nested ? win.omega_r : win.omega_l; }
    VertexSet b_omega_r() const { return nested ? wout2.omega_r : win.omega_r; }
    int a_p_l() const { return nested ? wout1.p_l : win.p_l; }
    int a_p_r() const { return nested ? win.p_l : win.p_r; }
    int b_p_l() const { return nested ? win.p_r : win.p_l; }
    int b_p_r() const { return nested ? wout2.p_r : win.p_r; }
    VertexSet interior1() const { return nested ? side1 : win.interior(); }
    VertexSet interior2() const { return nested ? side2 : win.interior(); }

    bool operator==(const Terrace&) const = default;
};

Terrace flat_terrace(const World& w);
Terrace make_nested_terrace(const Graph& g, World win, World wout1, World wout2, VertexSet side1,
                            VertexSet side2, int k);

// T(sigma, x): inner world of x, outer worlds of the tightest cheap
// enclosing vertices, sides read off the model.
Terrace terrace_from_model(const Graph& g, const Completion& f, const IntervalModel& m, int x, int k);

bool terrace_appears(const Terrace& t, const Completion& f, const IntervalModel& m);

// A pair of terraces whose facing areas overlap; the DP asks for the best
// event arrangement strictly inside.
struct State {
    Terrace t1, t2;

    VertexSet omega_l() const { return t1.b_omega_l(); }
    VertexSet omega_r() const { return t2.a_omega_r(); }
    int p_l() const { return t1.b_p_l(); }
    int p_r() const { return t2.a_p_r(); }
    int width() const { return p_r() - p_l(); }
    VertexSet interior() const { return t1.interior2() & t2.interior1(); }
    VertexSet w_set() const { return interior() | omega_l() | omega_r(); }

    bool operator==(const State&) const = default;
    std::string key() const;
};

State make_state(Terrace t1, Terrace t2);

bool state_appears(const State& s, const Completion& f, const IntervalModel& m);

// The events living strictly inside the state: both events of the interior,
// ends of omega_l \ omega_r, begins of omega_r \ omega_l. Deterministic order
// (by vertex, begins first); their count equals the state's width.
std::vector<Event> state_events(const State& s);

// A bijection of the state's events onto its positions, wrapped by begins of
// omega_l in front and ends of omega_r behind; f_pi is the implied fill.
struct StateCompletion {
    std::vector<Event> seq;  // events at positions p_l+1 .. p_r, in order
    Completion f_pi;
};

// Completion-validity test for an explicit arrangement; fills f_pi.
bool evaluate_completion(const Graph& g, const State& s, const std::vector<Event>& seq,
                         Completion* f_pi);

// Exhaustive search for the minimum completion under the order
// (|f_pi|, f_pi, associated sequence); nullopt when no arrangement is valid.
std::optional<StateCompletion> best_completion(const Graph& g, const State& s);

struct DpOptions {
    int k = 0;
    int base_floor = 10;  // brute-force cap: max(base_floor, 4*sqrt(k)+4) events
};

struct DpStats {
    int states = 0;
    int base_cases = 0;
    int glued = 0;
};

// All states the case analysis derives from the model: the root pair of the
// universal-vertex world plus the recursive pivot splits.
std::vector<State> generate_states(const Graph& g, const Completion& f, const IntervalModel& m,
                                   const DpOptions& opt);

struct DpResult {
    IntervalModel model;
    DpStats stats;
    bool match = false;  // reconstruction equals the input model
};

// Fills the table in increasing width order, gluing 2-3 substates above the
// brute-force cap, and rebuilds the full model from the root state.
DpResult dp_reconstruct(const Graph& g, const Completion& f, const IntervalModel& m,
                        const std::vector<State>& states, const DpOptions& opt);
DpResult dp_reconstruct(const Graph& g, const Completion& f, const IntervalModel& m,
                        const DpOptions& opt);

bool dp_base_case(int event_count, int k, int base_floor);

}  // namespace ic
