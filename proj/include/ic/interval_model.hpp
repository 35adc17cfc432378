#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ic/graph.hpp"

namespace ic {

// An interval model is a permutation of the 2n events begin(v), end(v)
// onto positions 1..2n. Everything downstream reads models through
// positions and sections.
struct Event {
    int v;
    bool is_end;

    static Event begin(int v) { return {v, false}; }
    static Event end(int v) { return {v, true}; }
    bool operator==(const Event&) const = default;
};

struct Section {
    int at = 0;  // position p, 0..2n
    VertexSet members;
};

class IntervalModel {
public:
    IntervalModel() = default;
    // seq[i] is the event at position i+1.
    IntervalModel(int n, std::vector<Event> seq);

    int n() const { return n_; }
    int positions() const { return 2 * n_; }

    const std::vector<Event>& sequence() const { return seq_; }
    Event at(int p) const { return seq_[static_cast<std::size_t>(p - 1)]; }

    int begin_pos(int v) const { return pos_begin_[static_cast<std::size_t>(v)]; }
    int end_pos(int v) const { return pos_end_[static_cast<std::size_t>(v)]; }
    int pos(const Event& e) const { return e.is_end ? end_pos(e.v) : begin_pos(e.v); }

    // Section at position p: vertices pinned just after the p-th event.
    VertexSet section(int p) const;

    // First/last position of an event of any member of x.
    int first_event_pos(const VertexSet& x) const;
    int last_event_pos(const VertexSet& x) const;

    IntervalModel reversed() const;

    // One line of 2n tokens "v+" / "v-" in position order.
    std::string serialize() const;
    static IntervalModel parse(const std::string& line);

    bool operator==(const IntervalModel&) const = default;

private:
    int n_ = 0;
    std::vector<Event> seq_;
    std::vector<int> pos_begin_, pos_end_;
};

struct ModelViolation {
    enum class Kind { wrong_domain, ends_before_begin, adjacent_disjoint, nonadjacent_overlap };
    Kind kind;
    int u = -1;  // offending vertex (or first of the pair)
    int v = -1;
    std::string describe() const;
};

// valid iff both model conditions hold for g.
std::optional<ModelViolation> validate_model(const Graph& g, const IntervalModel& m);

// All sections drawn between a starting and an ending event, with their
// positions; for a valid model these are exactly the maximal cliques.
std::vector<Section> maximal_cliques_of_model(const IntervalModel& m);

}  // namespace ic
