#include "ic/graph.hpp"

#include <stdexcept>

namespace ic {

Graph Graph::from_edges(int n, const EdgeList& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
}

void Graph::remove_edge(int u, int v) {
    adj_[static_cast<std::size_t>(u)].remove(v);
    adj_[static_cast<std::size_t>(v)].remove(u);
}

int Graph::edge_count() const {
    int deg = 0;
    for (const auto& a : adj_) deg += a.count();
    return deg / 2;
}

VertexSet Graph::neighborhood_of_set(const VertexSet& s) const {
    VertexSet out;
    s.for_each([&](int v) { out |= adj_[static_cast<std::size_t>(v)]; });
    out -= s;
    return out;
}

EdgeList Graph::edges() const {
    EdgeList out;
    for (int u = 0; u < n_; ++u)
        adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

EdgeList Graph::non_edges() const {
    EdgeList out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::is_clique(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](int v) {
        VertexSet rest = s;
        rest.remove(v);
        if (!rest.subset_of(adj_[static_cast<std::size_t>(v)])) ok = false;
    });
    return ok;
}

std::pair<Graph, std::vector<int>> Graph::induced(const VertexSet& keep) const {
    std::vector<int> old_ids = keep.members();
    std::vector<int> new_id(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[static_cast<std::size_t>(old_ids[i])] = static_cast<int>(i);
    Graph h(static_cast<int>(old_ids.size()));
    for (int u : old_ids) {
        (adj_[static_cast<std::size_t>(u)] & keep).for_each([&](int v) {
            if (u < v) h.add_edge(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(v)]);
        });
    }
    return {h, old_ids};
}

Graph Graph::with_edges(const EdgeList& extra) const {
    Graph h = *this;
    for (auto [u, v] : extra) {
        if (h.has_edge(u, v)) throw std::invalid_argument("completion edge already present");
        h.add_edge(u, v);
    }
    return h;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& excluded) {
    std::vector<VertexSet> out;
    VertexSet remaining = g.vertices() - excluded;
    while (!remaining.empty()) {
        VertexSet comp = VertexSet::single(remaining.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next &= remaining;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        remaining -= comp;
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return components(g, VertexSet{}).size() == 1;
}

Graph augment(const Graph& g) {
    if (g.special()) throw std::invalid_argument("graph already augmented");
    int n = g.n();
    Graph h(n + 3);
    const int r = 0, rl = 1, rr = n + 2;
    for (auto [u, v] : g.edges()) h.add_edge(u + 2, v + 2);
    for (int v = 0; v < n; ++v) h.add_edge(r, v + 2);
    h.add_edge(r, rl);
    h.add_edge(r, rr);
    h.set_special({r, rl, rr});
    return h;
}

std::vector<VertexSet> neighborhood_classes(const Graph& g, const VertexSet& a) {
    std::vector<VertexSet> keys;
    std::vector<VertexSet> classes;
    for (int v = 0; v < g.n(); ++v) {
        if (a.contains(v)) continue;
        VertexSet key = g.neighbors(v) & a;
        bool found = false;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (keys[i] == key) {
                classes[i].add(v);
                found = true;
                break;
            }
        }
        if (!found) {
            keys.push_back(key);
            classes.push_back(VertexSet::single(v));
        }
    }
    // first-occurrence construction already orders classes by smallest member
    return classes;
}

int count_low_deficiency_components(const Graph& g, const VertexSet& a, int r) {
    int cnt = 0;
    for (const VertexSet& c : components(g, a)) {
        bool low = false;
        c.for_each([&](int v) {
            if ((a - g.neighbors(v)).count() <= r) low = true;
        });
        if (low) ++cnt;
    }
    return cnt;
}

}  // namespace ic
