#include "ic/modular.hpp"

#include <algorithm>
#include <stdexcept>

#include "ic/recognize.hpp"

namespace ic {

namespace {

// Components of the complement of G[s], ordered by smallest member.
std::vector<VertexSet> co_components(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> out;
    VertexSet remaining = s;
    while (!remaining.empty()) {
        VertexSet comp = VertexSet::single(remaining.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= (s - g.neighbors(v)); });
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

// Smallest module of G[s] containing seed: closure under splitters. Every
// vertex with a mixed view of the seed belongs to every enclosing module.
VertexSet min_module_within(const Graph& g, const VertexSet& s, VertexSet seed) {
    while (true) {
        VertexSet add;
        (s - seed).for_each([&](int x) {
            VertexSet inter = g.neighbors(x) & seed;
            if (!inter.empty() && inter != seed) add.add(x);
        });
        if (add.empty()) return seed;
        seed |= add;
    }
}

int build(const Graph& g, const VertexSet& s, std::vector<MDNode>& nodes) {
    int idx = static_cast<int>(nodes.size());
    nodes.push_back({NodeKind::leaf, s, {}});
    if (s.count() == 1) return idx;

    VertexSet excluded = g.vertices() - s;
    std::vector<VertexSet> parts = components(g, excluded);
    NodeKind kind = NodeKind::union_node;
    if (parts.size() < 2) {
        parts = co_components(g, s);
        kind = NodeKind::join_node;
    }
    if (parts.size() < 2) {
        // prime: classes of "some proper module of G[s] contains both"
        kind = NodeKind::prime;
        parts.clear();
        VertexSet assigned;
        s.for_each([&](int u) {
            if (assigned.contains(u)) return;
            VertexSet cls = VertexSet::single(u);
            (s - assigned).for_each([&](int w) {
                if (w == u || cls.contains(w)) return;
                if (min_module_within(g, s, VertexSet::of({u, w})) != s) cls.add(w);
            });
            assigned |= cls;
            parts.push_back(cls);
        });
    }
    nodes[static_cast<std::size_t>(idx)].kind = kind;
    for (const VertexSet& p : parts) {
        int c = build(g, p, nodes);
        nodes[static_cast<std::size_t>(idx)].children.push_back(c);
    }
    return idx;
}

}  // namespace

ModuleDecomposition decompose(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("decompose: empty graph");
    ModuleDecomposition md;
    build(g, g.vertices(), md.nodes);
    return md;
}

bool is_module(const Graph& g, const VertexSet& m) {
    if (m.empty()) return true;
    bool ok = true;
    (g.vertices() - m).for_each([&](int v) {
        VertexSet inter = g.neighbors(v) & m;
        if (!inter.empty() && inter != m) ok = false;
    });
    return ok;
}

std::optional<RuleApplication> find_rule_application(const Graph& g, int k) {
    ModuleDecomposition md = decompose(g);
    const int need = 2 * k + 3;
    // root-to-leaf: construction order is already a preorder walk
    for (const MDNode& node : md.nodes) {
        if (node.kind != NodeKind::union_node) continue;
        std::vector<VertexSet> keys;
        std::vector<std::vector<VertexSet>> groups;
        for (int c : node.children) {
            const VertexSet& lbl = md.nodes[static_cast<std::size_t>(c)].label;
            VertexSet nb = g.neighborhood_of_set(lbl);
            bool found = false;
            for (std::size_t i = 0; i < keys.size(); ++i)
                if (keys[i] == nb) {
                    groups[i].push_back(lbl);
                    found = true;
                    break;
                }
            if (!found) {
                keys.push_back(nb);
                groups.push_back({lbl});
            }
        }
        for (std::size_t i = 0; i < groups.size(); ++i) {
            if (static_cast<int>(groups[i].size()) < need) continue;
            RuleApplication app;
            app.x = keys[i];
            app.modules = groups[i];
            int non_interval = 0;
            std::vector<VertexSet> eligible;
            for (const VertexSet& mod : groups[i]) {
                if (is_interval(g.induced(mod).first))
                    eligible.push_back(mod);
                else
                    ++non_interval;
            }
            if (non_interval > k) {
                app.no_instance = true;
                return app;
            }
            // deterministic pick: largest smallest-vertex among eligible modules
            const VertexSet* pick = &eligible.front();
            for (const VertexSet& mod : eligible)
                if (mod.min() > pick->min()) pick = &mod;
            app.removed = *pick;
            return app;
        }
    }
    return std::nullopt;
}

ReduceResult reduce_exhaustively(const Graph& g, int k) {
    ReduceResult res;
    res.graph = g;
    res.orig_ids.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) res.orig_ids[static_cast<std::size_t>(v)] = v;

    while (true) {
        auto app = find_rule_application(res.graph, k);
        if (!app) break;
        auto to_orig = [&](const VertexSet& s) {
            VertexSet out;
            s.for_each([&](int v) { out.add(res.orig_ids[static_cast<std::size_t>(v)]); });
            return out;
        };
        ReduceStep step;
        step.x = to_orig(app->x);
        for (const VertexSet& m : app->modules) step.modules.push_back(to_orig(m));
        if (app->no_instance) {
            res.no_instance = true;
            res.trace.push_back(std::move(step));
            return res;
        }
        step.removed = to_orig(app->removed);
        res.trace.push_back(std::move(step));

        VertexSet keep = res.graph.vertices() - app->removed;
        auto [h, old_of_new] = res.graph.induced(keep);
        std::vector<int> orig2(old_of_new.size());
        for (std::size_t i = 0; i < old_of_new.size(); ++i)
            orig2[i] = res.orig_ids[static_cast<std::size_t>(old_of_new[i])];
        res.graph = std::move(h);
        res.orig_ids = std::move(orig2);
    }
    return res;
}

bool check_module_stays(const Graph& g, const EdgeList& f, const VertexSet& m) {
    if (!is_module(g, m)) throw std::invalid_argument("check_module_stays: not a module");
    VertexSet excluded = g.vertices() - m;
    if (components(g, excluded).size() != 1) throw std::invalid_argument("check_module_stays: module not connected");
    return is_module(g.with_edges(f), m);
}

std::string node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::leaf: return "leaf";
        case NodeKind::union_node: return "union";
        case NodeKind::join_node: return "join";
        case NodeKind::prime: return "prime";
    }
    return "?";
}

}  // namespace ic
