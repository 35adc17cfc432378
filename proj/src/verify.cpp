#include "ic/verify.hpp"

#include <algorithm>
#include <random>

#include "ic/modular.hpp"
#include "ic/recognize.hpp"

namespace ic {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::precondition_failed: return "precondition_failed";
    }
    return "?";
}

namespace {

LemmaReport pre_failed(const std::string& lemma, const std::string& why) {
    return LemmaReport::make(lemma, Verdict::precondition_failed, why);
}

// Common entry checks: m models g+f and f is inclusion-minimal.
bool certify(const std::string& lemma, const Graph& g, const Completion& f, const IntervalModel& m,
             LemmaReport* out) {
    Graph gf = g.with_edges(f.edges);
    if (auto viol = validate_model(gf, m)) {
        *out = pre_failed(lemma, "model invalid: " + viol->describe());
        return false;
    }
    if (!is_minimal_completion(g, f)) {
        *out = pre_failed(lemma, "completion not minimal: " + f.str());
        return false;
    }
    return true;
}

bool is_maximal_clique(const Graph& g, const VertexSet& s) {
    if (s.empty() || !g.is_clique(s)) return false;
    bool dominated = false;
    (g.vertices() - s).for_each([&](int w) {
        if (s.subset_of(g.neighbors(w))) dominated = true;
    });
    return !dominated;
}

}  // namespace

bool build_clique_anatomy(const Graph& g, const Completion& f, int k, const IntervalModel& m,
                          const VertexSet& omega, CliqueAnatomy* out, std::string* reason) {
    out->omega = omega;
    out->p = -1;
    for (const Section& s : maximal_cliques_of_model(m))
        if (s.members == omega) out->p = s.at;
    if (out->p < 0) {
        *reason = "omega is not a clique section of the model";
        return false;
    }
    const int p = out->p;
    out->v2 = m.at(p).v;
    out->v1 = m.at(p + 1).v;

    auto cls = classify_vertices(g, f, k);
    auto cheap = [&](int v) { return cls[static_cast<std::size_t>(v)].cheap; };
    auto untouched = [&](int v) { return !cls[static_cast<std::size_t>(v)].touched; };

    out->c1 = out->c2 = out->f1 = out->f2 = -1;
    for (int v = 0; v < g.n(); ++v) {
        if (cheap(v) && m.end_pos(v) <= p + 1 && (out->c1 < 0 || m.end_pos(v) > m.end_pos(out->c1)))
            out->c1 = v;
        if (cheap(v) && m.begin_pos(v) >= p && (out->c2 < 0 || m.begin_pos(v) < m.begin_pos(out->c2)))
            out->c2 = v;
        if (untouched(v) && m.end_pos(v) <= p + 1 && (out->f1 < 0 || m.end_pos(v) > m.end_pos(out->f1)))
            out->f1 = v;
        if (untouched(v) && m.begin_pos(v) >= p && (out->f2 < 0 || m.begin_pos(v) < m.begin_pos(out->f2)))
            out->f2 = v;
    }
    if (out->c1 < 0 || out->c2 < 0 || out->f1 < 0 || out->f2 < 0) {
        *reason = "no cheap/untouched vertex on one side of the clique";
        return false;
    }

    auto pick_g = [&](int fv, int exclude_v, bool leftmost_begin) {
        VertexSet cand = g.closed_neighborhood(fv) - (omega - VertexSet::single(exclude_v));
        int best = -1;
        cand.for_each([&](int v) {
            if (!untouched(v)) return;
            int key = leftmost_begin ? m.begin_pos(v) : m.end_pos(v);
            if (best < 0) best = v;
            else {
                int bk = leftmost_begin ? m.begin_pos(best) : m.end_pos(best);
                if (leftmost_begin ? key < bk : key > bk) best = v;
            }
        });
        return best;
    };
    out->g1 = pick_g(out->f1, out->v1, true);
    out->g2 = pick_g(out->f2, out->v2, false);
    if (out->g1 < 0 || out->g2 < 0) {
        *reason = "no untouched candidate for g1/g2";
        return false;
    }

    out->x1 = {};
    out->x2 = {};
    for (int v = 0; v < g.n(); ++v) {
        if (m.end_pos(out->c1) < m.end_pos(v) && m.end_pos(v) <= p + 1) out->x1.add(v);
        if (p <= m.begin_pos(v) && m.begin_pos(v) < m.begin_pos(out->c2)) out->x2.add(v);
    }
    out->fset1 = {};
    out->fset2 = {};
    for (auto [a, b] : f.edges) {
        if (a == out->c1) out->fset1.add(b);
        if (b == out->c1) out->fset1.add(a);
        if (a == out->c2) out->fset2.add(b);
        if (b == out->c2) out->fset2.add(a);
    }
    return true;
}

LemmaReport verify_clique_characterization(const Graph& g, const Completion& f, int k,
                                           const IntervalModel& m, const VertexSet& omega) {
    const std::string lemma = "pmc-char";
    LemmaReport rep;
    if (!g.special()) return pre_failed(lemma, "graph is not augmented");
    if (!certify(lemma, g, f, m, &rep)) return rep;

    Graph gf = g.with_edges(f.edges);
    if (!is_maximal_clique(gf, omega)) return pre_failed(lemma, "omega not a maximal clique of g+f");
    auto sp = *g.special();
    if (omega == VertexSet::of({sp.r, sp.r_left}) || omega == VertexSet::of({sp.r, sp.r_right}))
        return pre_failed(lemma, "omega is an obvious boundary clique");

    CliqueAnatomy a;
    std::string reason;
    if (!build_clique_anatomy(g, f, k, m, omega, &a, &reason)) return pre_failed(lemma, reason);

    auto fail = [&](const std::string& what) {
        return LemmaReport::make(lemma, Verdict::violated,
                                 what + " [omega=" + omega.str() + " p=" + std::to_string(a.p) + "]");
    };

    // positional facts around the clique
    if (!(m.end_pos(a.g1) <= m.end_pos(a.f1) && m.end_pos(a.f1) <= m.end_pos(a.c1) &&
          m.end_pos(a.c1) <= a.p + 1))
        return fail("left end-position chain broken");
    if (!(m.begin_pos(a.g2) >= m.begin_pos(a.f2) && m.begin_pos(a.f2) >= m.begin_pos(a.c2) &&
          m.begin_pos(a.c2) >= a.p))
        return fail("right begin-position chain broken");
    if (!(a.v1 == a.v2 || g.has_edge(a.v1, a.v2))) return fail("v1 not in N[v2]");

    // size facts about the expensive/fill sets
    auto cls = classify_vertices(g, f, k);
    long long s1 = a.fset1.count(), s2 = a.fset2.count();
    if (s1 * s1 > k || s2 * s2 > k) return fail("fill set of a cheap vertex larger than sqrt(k)");
    bool all_expensive = true;
    (a.x1 | a.x2).for_each([&](int v) {
        if (cls[static_cast<std::size_t>(v)].cheap) all_expensive = false;
    });
    if (!all_expensive) return fail("cheap vertex inside x1/x2");
    long long sx = a.x1.count() + a.x2.count();
    if (sx >= 1 && (sx - 1) * (sx - 1) > 4LL * k) return fail("|x1|+|x2| above 2*sqrt(k)+1");

    // the characterization equality
    VertexSet left_core = a.x1;
    left_core.add(a.v1);
    left_core.add(a.c1);
    left_core.add(a.f1);
    VertexSet right_core = a.x2;
    right_core.add(a.v2);
    right_core.add(a.c2);
    right_core.add(a.f2);
    VertexSet lhs = (g.neighborhood_of_set(left_core) | left_core | a.fset1) &
                    (g.neighborhood_of_set(right_core) | right_core | a.fset2);
    if (lhs != omega)
        return fail("characterization mismatch: got " + lhs.str());
    return LemmaReport::make(lemma, Verdict::holds);
}

LemmaReport verify_section_reconstruction(const Graph& g, const Completion& f,
                                          const IntervalModel& m) {
    const std::string lemma = "sections";
    LemmaReport rep;
    if (!g.special()) return pre_failed(lemma, "graph is not augmented");
    if (!certify(lemma, g, f, m, &rep)) return rep;
    Graph gf = g.with_edges(f.edges);
    if (!(m == canonical_model(gf))) return pre_failed(lemma, "model is not canonical");

    auto sp = *g.special();
    auto fail = [&](const std::string& what) { return LemmaReport::make(lemma, Verdict::violated, what); };

    const int total = m.positions();
    std::vector<VertexSet> obvious = {VertexSet{}, VertexSet::single(sp.r),
                                      VertexSet::of({sp.r, sp.r_left}), VertexSet::of({sp.r, sp.r_right})};
    for (const VertexSet& want : obvious) {
        bool found = false;
        for (int p = 0; p <= total && !found; ++p)
            if (m.section(p) == want) found = true;
        if (!found) return fail("obvious section missing: " + want.str());
    }

    auto junctions = maximal_cliques_of_model(m);
    for (int p = 0; p <= total; ++p) {
        VertexSet omega = m.section(p);
        bool skip = false;
        for (const VertexSet& o : obvious)
            if (omega == o) skip = true;
        if (skip) continue;

        int p1 = -1, p2 = -1;
        for (const Section& j : junctions) {
            if (j.at <= p) p1 = j.at;
            if (j.at >= p && p2 < 0) p2 = j.at;
        }
        if (p1 < 0 || p2 < 0) return fail("no flanking maximal clique at p=" + std::to_string(p));
        VertexSet o1 = m.section(p1), o2 = m.section(p2);
        VertexSet leaving = o1 - o2, entering = o2 - o1;
        const int r = leaving.count();

        // ends of o1\o2 first, in decreasing order ...
        auto lv = leaving.members();
        std::reverse(lv.begin(), lv.end());
        for (int i = 0; i < r; ++i) {
            Event e = m.at(p1 + 1 + i);
            if (!e.is_end || e.v != lv[static_cast<std::size_t>(i)])
                return fail("end block out of order after p1=" + std::to_string(p1));
        }
        // ... then begins of o2\o1 in increasing order
        auto ev = entering.members();
        for (int i = 0; i < static_cast<int>(ev.size()); ++i) {
            Event e = m.at(p1 + r + 1 + i);
            if (e.is_end || e.v != ev[static_cast<std::size_t>(i)])
                return fail("begin block out of order before p2=" + std::to_string(p2));
        }
        if (p1 + r + static_cast<int>(ev.size()) != p2) return fail("junction gap has stray events");

        // reconstruct section(p) from (o1, o2, p - p1)
        VertexSet rebuilt;
        if (p <= p1 + r) {
            rebuilt = o1;
            for (int i = 0; i < p - p1; ++i) rebuilt.remove(lv[static_cast<std::size_t>(i)]);
        } else {
            rebuilt = o1 & o2;
            for (int i = 0; i < p - p1 - r; ++i) rebuilt.add(ev[static_cast<std::size_t>(i)]);
        }
        if (rebuilt != omega)
            return fail("section at p=" + std::to_string(p) + " not reconstructible: got " + rebuilt.str());
    }
    return LemmaReport::make(lemma, Verdict::holds);
}

FillInContext build_fill_in_context(const Graph& g, const Completion& f, int k,
                                    const IntervalModel& m, int v) {
    (void)k;
    FillInContext c;
    c.v = v;
    c.p_l_v = m.begin_pos(v);
    c.p_r_v = m.end_pos(v);
    auto cls = classify_vertices(g, f, 0);  // only touched/untouched needed
    c.f_l = c.f_r = -1;
    for (int u = 0; u < g.n(); ++u) {
        if (cls[static_cast<std::size_t>(u)].touched) continue;
        if (!(m.begin_pos(u) <= c.p_l_v && c.p_r_v <= m.end_pos(u))) continue;
        if (c.f_l < 0 || m.begin_pos(u) > m.begin_pos(c.f_l)) c.f_l = u;
        if (c.f_r < 0 || m.end_pos(u) < m.end_pos(c.f_r)) c.f_r = u;
    }
    if (c.f_l >= 0) c.p_l_f = m.begin_pos(c.f_l);
    if (c.f_r >= 0) c.p_r_f = m.end_pos(c.f_r);
    if (c.f_l >= 0 && c.f_r >= 0) {
        c.omega_l_f = m.section(c.p_l_f);
        c.omega_l_v = m.section(c.p_l_v);
        c.omega_r_v = m.section(c.p_r_v - 1);
        c.omega_r_f = m.section(c.p_r_f - 1);
    }
    return c;
}

LemmaReport verify_fill_in_structure(const Graph& g, const Completion& f, int k,
                                     const IntervalModel& m, int v) {
    const std::string lemma = "fi-structure";
    LemmaReport rep;
    if (!g.special()) return pre_failed(lemma, "graph is not augmented");
    if (!certify(lemma, g, f, m, &rep)) return rep;

    FillInContext c = build_fill_in_context(g, f, k, m, v);
    if (c.f_l < 0 || c.f_r < 0) return pre_failed(lemma, "no untouched vertex encloses v");

    auto fail = [&](const std::string& what) {
        return LemmaReport::make(
            lemma, Verdict::violated,
            what + " [v=" + std::to_string(v) + " fL=" + std::to_string(c.f_l) + " fR=" + std::to_string(c.f_r) + "]");
    };

    if (!(m.begin_pos(c.f_r) <= c.p_l_f && c.p_l_f <= c.p_l_v && c.p_l_v < c.p_r_v && c.p_r_v <= c.p_r_f &&
          c.p_r_f <= m.end_pos(c.f_l)))
        return fail("position chain of v/f_l/f_r broken");

    // consistency of the four sections
    if (!(c.omega_l_v.contains(v) && c.omega_r_v.contains(v))) return pre_failed(lemma, "v outside its sections");
    VertexSet ff = VertexSet::of({c.f_l, c.f_r});
    if (!ff.subset_of(c.omega_l_f & c.omega_r_f)) return pre_failed(lemma, "f_l/f_r outside their sections");

    VertexSet cut = c.omega_l_f | c.omega_l_v | c.omega_r_v | c.omega_r_f;
    VertexSet common = g.neighbors(c.f_l) & g.neighbors(c.f_r);
    VertexSet fill_at_v;
    for (auto [a, b] : f.edges) {
        if (a == v) fill_at_v.add(b);
        if (b == v) fill_at_v.add(a);
    }

    for (const VertexSet& comp : components(g, cut)) {
        int beg = m.first_event_pos(comp), end = m.last_event_pos(comp);
        std::string cname = comp.str();
        if (!comp.intersects(common)) {
            // category 1: fully outside the untouched span
            if (!(end < c.p_l_f || beg > c.p_r_f)) return fail("category-1 component inside span " + cname);
            bool bad = false;
            comp.for_each([&](int w) {
                if (g.has_edge(v, w) || fill_at_v.contains(w)) bad = true;
            });
            if (bad) return fail("category-1 component adjacent to v " + cname);
            continue;
        }
        // base clause of categories 3/4
        if (!(c.p_l_f < beg && end < c.p_r_f)) return fail("inner component leaves the span " + cname);
        if (!comp.subset_of(common)) return fail("inner component not inside N(f_l)&N(f_r) " + cname);

        if (comp.intersects(g.neighbors(v))) {
            // category 3: forced next to v
            if (!(c.p_l_v < beg && end < c.p_r_v)) return fail("category-3 component outside v's span " + cname);
            bool bad = false;
            comp.for_each([&](int w) {
                if (!g.has_edge(v, w) && !fill_at_v.contains(w)) bad = true;
            });
            if (bad) return fail("category-3 component missing v edges " + cname);
            continue;
        }
        // category 4: position decides the case; exactly one applies
        bool case_a = c.p_l_v < beg && end < c.p_r_v;
        bool case_b = c.p_l_f < beg && end < c.p_l_v;
        bool case_c = c.p_r_v < beg && end < c.p_r_f;
        if (case_a + case_b + case_c != 1) return fail("category-4 component fits " +
                                                       std::to_string(case_a + case_b + case_c) +
                                                       " cases " + cname);
        bool filled = true, untouched_by_v = true;
        comp.for_each([&](int w) {
            if (!fill_at_v.contains(w)) filled = false;
            if (fill_at_v.contains(w)) untouched_by_v = false;
        });
        VertexSet nc = g.neighborhood_of_set(comp);
        if (case_a) {
            if (!filled) return fail("case-a component not fully filled to v " + cname);
            if (!nc.subset_of(c.omega_l_v | c.omega_r_v)) return fail("case-a neighborhood escapes " + cname);
            if (comp.count() > k) return fail("case-a component larger than k " + cname);
        } else if (case_b) {
            if (!untouched_by_v) return fail("case-b component filled to v " + cname);
            if (!nc.subset_of(c.omega_l_f | c.omega_l_v)) return fail("case-b neighborhood escapes " + cname);
        } else {
            if (!untouched_by_v) return fail("case-c component filled to v " + cname);
            if (!nc.subset_of(c.omega_r_f | c.omega_r_v)) return fail("case-c neighborhood escapes " + cname);
        }
    }
    return LemmaReport::make(lemma, Verdict::holds);
}

LemmaReport verify_small_separation(const Graph& g, int k, const Completion& f,
                                    const IntervalModel& m, int p_l, int p_r,
                                    const VertexSet& kset, const BoundConstants& bc) {
    const std::string lemma = "left-right";
    if (p_l >= p_r) return pre_failed(lemma, "p_l >= p_r");
    if (auto viol = validate_model(g.with_edges(f.edges), m))
        return pre_failed(lemma, "model invalid: " + viol->describe());
    if (f.size() > k) return pre_failed(lemma, "completion exceeds budget");

    VertexSet omega_l = m.section(p_l), omega_r = m.section(p_r - 1);
    bool left_side = kset.subset_of(omega_l - omega_r);
    bool right_side = kset.subset_of(omega_r - omega_l);
    if (!left_side && !right_side) return pre_failed(lemma, "kset straddles the sections");

    int count = 0;
    VertexSet barrier = omega_l | omega_r;
    VertexSet inner = kset | (omega_l & omega_r);
    for (const VertexSet& comp : components(g, barrier)) {
        if (!g.neighborhood_of_set(comp).subset_of(inner)) continue;
        int beg = m.first_event_pos(comp), end = m.last_event_pos(comp);
        if (!(p_l < beg && end < p_r)) continue;
        bool occupies = false;
        kset.for_each([&](int x) {
            if (beg < m.begin_pos(x) && m.begin_pos(x) < end) occupies = true;
            if (beg < m.end_pos(x) && m.end_pos(x) < end) occupies = true;
        });
        if (occupies) ++count;
    }

    long long excess = count - kset.count();
    bool ok = excess <= 0 || excess * excess <= static_cast<long long>(bc.sep_sqrt_mult) *
                                                     bc.sep_sqrt_mult * k;
    if (!ok)
        return LemmaReport::make(lemma, Verdict::violated,
                                 "count=" + std::to_string(count) + " |K|=" + std::to_string(kset.count()) +
                                     " k=" + std::to_string(k) + " pL=" + std::to_string(p_l) +
                                     " pR=" + std::to_string(p_r));
    return LemmaReport::make(lemma, Verdict::holds);
}

std::vector<LemmaReport> verify_bounds(const Graph& g, int k, int opt_size, const BoundsOptions& opts) {
    std::vector<LemmaReport> out;
    const int n = g.n();

    std::vector<VertexSet> samples;
    if (n <= 7) {
        for (int mask = 0; mask < (1 << n); ++mask) {
            VertexSet a;
            for (int v = 0; v < n; ++v)
                if (mask & (1 << v)) a.add(v);
            if (a.count() <= opts.max_a_exhaustive) samples.push_back(a);
        }
        samples.push_back(g.vertices());
    } else {
        std::mt19937_64 rng(opts.seed);
        samples.push_back(VertexSet{});
        samples.push_back(g.vertices());
        for (int i = 0; i < opts.random_samples; ++i) {
            VertexSet a;
            for (int v = 0; v < n; ++v)
                if (rng() & 1) a.add(v);
            samples.push_back(a);
        }
    }

    // neighborhood-class bound
    {
        LemmaReport rep = LemmaReport::make("a-nei", Verdict::holds);
        for (const VertexSet& a : samples) {
            long long bound =
                static_cast<long long>(opts.constants.nei_scale) * (2LL * a.count() + 1) * (2LL * a.count() + 1) +
                opt_size;
            long long classes = static_cast<long long>(neighborhood_classes(g, a).size());
            if (classes > bound) {
                rep.verdict = Verdict::violated;
                rep.details = "A=" + a.str() + " classes=" + std::to_string(classes) +
                              " bound=" + std::to_string(bound);
                break;
            }
        }
        out.push_back(rep);
    }

    // low-deficiency component bound; needs the reduction rule inapplicable
    {
        LemmaReport rep = LemmaReport::make("a-r-nei", Verdict::holds);
        if (k < 1) {
            rep.verdict = Verdict::precondition_failed;
            rep.details = "no r in 1..k";
        } else if (find_rule_application(g, k)) {
            rep.verdict = Verdict::precondition_failed;
            rep.details = "module reduction rule applicable";
        } else {
            for (const VertexSet& a : samples) {
                for (int r = 1; r <= k && rep.verdict == Verdict::holds; ++r) {
                    long long bound = static_cast<long long>(opts.constants.lowdef_scale) *
                                      (12LL * k * r + 4LL * k + 18LL * r + 4);
                    int cnt = count_low_deficiency_components(g, a, r);
                    if (cnt > bound) {
                        rep.verdict = Verdict::violated;
                        rep.details = "A=" + a.str() + " r=" + std::to_string(r) +
                                      " count=" + std::to_string(cnt) + " bound=" + std::to_string(bound);
                    }
                }
                if (rep.verdict != Verdict::holds) break;
            }
        }
        out.push_back(rep);
    }
    return out;
}

}  // namespace ic
