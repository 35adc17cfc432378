#include "ic/interval_model.hpp"

#include <sstream>
#include <stdexcept>

namespace ic {

IntervalModel::IntervalModel(int n, std::vector<Event> seq) : n_(n), seq_(std::move(seq)) {
    if (seq_.size() != static_cast<std::size_t>(2 * n)) throw std::invalid_argument("model: wrong domain size");
    pos_begin_.assign(static_cast<std::size_t>(n), 0);
    pos_end_.assign(static_cast<std::size_t>(n), 0);
    for (int p = 1; p <= 2 * n; ++p) {
        const Event& e = seq_[static_cast<std::size_t>(p - 1)];
        if (e.v < 0 || e.v >= n) throw std::invalid_argument("model: vertex out of range");
        auto& slot = e.is_end ? pos_end_[static_cast<std::size_t>(e.v)] : pos_begin_[static_cast<std::size_t>(e.v)];
        if (slot != 0) throw std::invalid_argument("model: duplicate event");
        slot = p;
    }
}

VertexSet IntervalModel::section(int p) const {
    VertexSet s;
    for (int v = 0; v < n_; ++v)
        if (begin_pos(v) <= p && p < end_pos(v)) s.add(v);
    return s;
}

int IntervalModel::first_event_pos(const VertexSet& x) const {
    int best = 2 * n_ + 1;
    x.for_each([&](int v) { best = std::min(best, begin_pos(v)); });
    return best;
}

int IntervalModel::last_event_pos(const VertexSet& x) const {
    int best = 0;
    x.for_each([&](int v) { best = std::max(best, end_pos(v)); });
    return best;
}

IntervalModel IntervalModel::reversed() const {
    std::vector<Event> rev(seq_.rbegin(), seq_.rend());
    for (Event& e : rev) e.is_end = !e.is_end;
    return IntervalModel(n_, std::move(rev));
}

std::string IntervalModel::serialize() const {
    std::string out;
    for (std::size_t i = 0; i < seq_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(seq_[i].v);
        out += seq_[i].is_end ? '-' : '+';
    }
    return out;
}

IntervalModel IntervalModel::parse(const std::string& line) {
    std::istringstream in(line);
    std::vector<Event> seq;
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2) throw std::runtime_error("model token too short: " + tok);
        char sign = tok.back();
        if (sign != '+' && sign != '-') throw std::runtime_error("model token needs +/-: " + tok);
        int v = std::stoi(tok.substr(0, tok.size() - 1));
        seq.push_back({v, sign == '-'});
    }
    if (seq.size() % 2 != 0) throw std::runtime_error("model line has odd token count");
    return IntervalModel(static_cast<int>(seq.size() / 2), std::move(seq));
}

std::string ModelViolation::describe() const {
    switch (kind) {
        case Kind::wrong_domain: return "wrong domain size";
        case Kind::ends_before_begin: return "vertex " + std::to_string(u) + " ends before it begins";
        case Kind::adjacent_disjoint:
            return "adjacent pair (" + std::to_string(u) + "," + std::to_string(v) + ") has disjoint intervals";
        case Kind::nonadjacent_overlap:
            return "nonadjacent pair (" + std::to_string(u) + "," + std::to_string(v) + ") has overlapping intervals";
    }
    return "?";
}

std::optional<ModelViolation> validate_model(const Graph& g, const IntervalModel& m) {
    if (m.n() != g.n()) return ModelViolation{ModelViolation::Kind::wrong_domain};
    for (int v = 0; v < g.n(); ++v)
        if (m.end_pos(v) < m.begin_pos(v)) return ModelViolation{ModelViolation::Kind::ends_before_begin, v};
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool disjoint = m.end_pos(v) < m.begin_pos(u) || m.end_pos(u) < m.begin_pos(v);
            if (g.has_edge(u, v) && disjoint) return ModelViolation{ModelViolation::Kind::adjacent_disjoint, u, v};
            if (!g.has_edge(u, v) && !disjoint)
                return ModelViolation{ModelViolation::Kind::nonadjacent_overlap, u, v};
        }
    return std::nullopt;
}

std::vector<Section> maximal_cliques_of_model(const IntervalModel& m) {
    std::vector<Section> out;
    for (int p = 1; p + 1 <= m.positions(); ++p) {
        if (!m.at(p).is_end && m.at(p + 1).is_end) out.push_back({p, m.section(p)});
    }
    return out;
}

}  // namespace ic
