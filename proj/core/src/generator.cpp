#include "trifree/generator.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

#include "trifree/flow.hpp"
#include "trifree/layout.hpp"
#include "trifree/witness.hpp"

namespace trifree {

namespace {

// Build state: the already-glued internal faces plus the still-unfilled
// holes.  Each hole boundary is a simple cycle stored clockwise (region on
// the right), and the face containing a hole's canonical edge is peeled
// next, so every finished subdivision arises from exactly one sequence.
struct State {
    std::vector<std::vector<Vertex>> adj;
    std::vector<std::vector<Vertex>> faces;
    std::vector<std::vector<Vertex>> holes;
    int n_internal = 0;
};

bool edge_exists(const State& st, Vertex a, Vertex b) {
    return std::find(st.adj[a].begin(), st.adj[a].end(), b) != st.adj[a].end();
}

bool makes_triangle(const State& st, Vertex a, Vertex b) {
    for (Vertex x : st.adj[a])
        if (edge_exists(st, x, b)) return true;
    return false;
}

void add_edge(State& st, Vertex a, Vertex b) {
    st.adj[a].push_back(b);
    st.adj[b].push_back(a);
}

// Canonical hole ordering: by least boundary edge.
std::pair<Vertex, Vertex> hole_key(const std::vector<Vertex>& h) {
    std::pair<Vertex, Vertex> best{-1, -1};
    for (size_t i = 0; i < h.size(); ++i) {
        Vertex a = h[i], b = h[(i + 1) % h.size()];
        if (a > b) std::swap(a, b);
        if (best.first < 0 || std::make_pair(a, b) < best) best = {a, b};
    }
    return best;
}

int marked_edge_pos(const std::vector<Vertex>& h) {
    auto key = hole_key(h);
    for (size_t i = 0; i < h.size(); ++i) {
        Vertex a = h[i], b = h[(i + 1) % h.size()];
        if (std::make_pair(std::min(a, b), std::max(a, b)) == key)
            return static_cast<int>(i);
    }
    return 0;
}

struct Walker {
    const GenConfig& cfg;
    const std::function<void(const PlaneGraph&)>& sink;
    std::set<std::string> seen;
    long long emitted = 0;

    Walker(const GenConfig& c, const std::function<void(const PlaneGraph&)>& s)
        : cfg(c), sink(s) {}

    void finish(const State& st) {
        std::vector<Vertex> outer;
        for (int i = 0; i < cfg.outer_len; ++i) outer.push_back(i);
        PlaneGraph g = from_faces(outer, st.faces,
                                  cfg.outer_len + st.n_internal);
        for (int i = 0; i < cfg.outer_len; ++i)
            g.name[i] = "c" + std::to_string(i + 1);
        g.triangle_free = true;
        validate(g);
        std::string key = canonical_form(g);
        if (seen.insert(key).second) {
            ++emitted;
            sink(g);
        }
    }

    void expand(State st) {
        if (st.holes.empty()) {
            finish(st);
            return;
        }
        // Pick the hole with the least marked edge; rotate it there.
        size_t pick = 0;
        for (size_t i = 1; i < st.holes.size(); ++i)
            if (hole_key(st.holes[i]) < hole_key(st.holes[pick])) pick = i;
        std::vector<Vertex> hole = st.holes[pick];
        st.holes.erase(st.holes.begin() + pick);
        std::rotate(hole.begin(), hole.begin() + marked_edge_pos(hole),
                    hole.end());

        // The new face starts with the marked edge hole[0]->hole[1] and then
        // alternates arcs along the hole with jumps through fresh vertices.
        struct Seg {
            int from, to;        // hole positions (to == hole.size() means h0)
            int through;         // number of new internal vertices
        };
        std::vector<Seg> jumps;
        const int m = static_cast<int>(hole.size());

        auto close_face = [&](const State& base) {
            // Face walk: hole arcs between jumps plus the jump paths.
            State next = base;
            std::vector<Vertex> face;
            std::vector<std::vector<Vertex>> jump_path(jumps.size());
            int vid = cfg.outer_len + base.n_internal;
            size_t j = 0;
            int pos = 0;
            while (pos < m) {
                face.push_back(hole[pos]);
                if (j < jumps.size() && jumps[j].from == pos) {
                    for (int t = 0; t < jumps[j].through; ++t)
                        jump_path[j].push_back(vid++);
                    for (Vertex v : jump_path[j]) face.push_back(v);
                    pos = jumps[j].to;
                    ++j;
                } else {
                    ++pos;
                }
            }
            int face_len = static_cast<int>(face.size());
            if (face_len < 4 || face_len > cfg.max_face) return;

            next.n_internal = vid - cfg.outer_len;
            next.adj.resize(cfg.outer_len + next.n_internal);
            // Wire the jump paths, checking simplicity and girth.
            for (size_t t = 0; t < jumps.size(); ++t) {
                Vertex a = hole[jumps[t].from];
                Vertex b = hole[jumps[t].to % m];
                std::vector<Vertex> chain{a};
                for (Vertex v : jump_path[t]) chain.push_back(v);
                chain.push_back(b);
                for (size_t s = 0; s + 1 < chain.size(); ++s) {
                    Vertex x = chain[s], y = chain[s + 1];
                    if (edge_exists(next, x, y)) return;
                    if (makes_triangle(next, x, y)) return;
                    add_edge(next, x, y);
                }
            }
            next.faces.push_back(face);
            // Sub-holes: for every jump, the skipped arc plus the reversed
            // jump path bounds a fresh hole with the same orientation.
            for (size_t t = 0; t < jumps.size(); ++t) {
                std::vector<Vertex> sub;
                for (int p = jumps[t].from; p <= jumps[t].to; ++p)
                    sub.push_back(hole[p % m]);
                for (auto it = jump_path[t].rbegin(); it != jump_path[t].rend(); ++it)
                    sub.push_back(*it);
                if (sub.size() >= 3) next.holes.push_back(std::move(sub));
            }
            expand(std::move(next));
        };

        // Enumerate the face shapes: from position `pos` (>= 1) either step
        // along the hole, jump to a later position, or close up at h0.
        auto rec = [&](auto&& self, int pos, int face_len, int budget) -> void {
            if (face_len > cfg.max_face) return;
            if (pos == m) {
                close_face(st);
                return;
            }
            // arc step
            self(self, pos + 1, face_len + 1, budget);
            // jumps to every later position (m == h0 closes the face)
            for (int to = pos + 1; to <= m; ++to) {
                for (int through = 0; through <= budget; ++through) {
                    int extra = through + 1;
                    if (face_len + extra > cfg.max_face) break;
                    jumps.push_back({pos, to, through});
                    self(self, to == m ? m : to,
                         to == m ? face_len + extra : face_len + extra,
                         budget - through);
                    jumps.pop_back();
                }
            }
        };
        // position 1 is reached via the marked edge, contributing length 1
        rec(rec, 1, 1, cfg.max_internal - st.n_internal);
    }
};

}  // namespace

long long enumerate_graphs(const GenConfig& cfg,
                           const std::function<void(const PlaneGraph&)>& sink) {
    if (cfg.outer_len < 4 || cfg.outer_len > 9)
        throw std::invalid_argument("outer_len must be 4..9");
    if (cfg.max_internal > 12)
        throw std::invalid_argument("max_internal exceeds the practical ceiling");
    State st;
    st.adj.resize(cfg.outer_len);
    std::vector<Vertex> outer;
    for (int i = 0; i < cfg.outer_len; ++i) outer.push_back(i);
    for (int i = 0; i < cfg.outer_len; ++i)
        add_edge(st, i, (i + 1) % cfg.outer_len);
    st.holes.push_back(outer);
    Walker w(cfg, sink);
    w.expand(std::move(st));
    return w.emitted;
}

std::optional<std::vector<Precoloring>> predicted_nonextendable(
    const PlaneGraph& g, const Classification& c) {
    const int n = static_cast<int>(g.outer.size());
    // Positions of c_1, c_2, ... in psi-index space under the alignment.
    auto pos = [&](int i) {
        return c.reflected ? ((c.rotation - i) % n + n) % n : (c.rotation + i) % n;
    };
    auto filter = [&](const std::function<bool(const Precoloring&)>& pred) {
        std::vector<Precoloring> out;
        for (const Precoloring& psi : proper_cycle_colorings(n))
            if (pred(psi)) out.push_back(psi);
        return out;
    };
    switch (c.family) {
        case Family::Quad6: {
            // With a chord both sides are quadrangulated 4-disks, where every
            // boundary coloring extends: exactly the chord-blocked colorings
            // fail.  Chordless quadrangulations block the antipodal ones.
            for (Vertex u : g.outer)
                for (Vertex v : g.rot[u]) {
                    if (!g.on_outer(v)) continue;
                    int iu = g.outer_index(u), iv = g.outer_index(v);
                    if ((iv - iu + n) % n == 3)
                        return filter([&](const Precoloring& p) {
                            return p[iu] == p[iv];
                        });
                }
            return filter([&](const Precoloring& p) {
                return p[0] == p[3] && p[1] == p[4] && p[2] == p[5];
            });
        }
        case Family::F7a:
            return filter([&](const Precoloring& p) {
                return p[pos(0)] == p[pos(4)];
            });
        case Family::F7b:
            // 5-face on c1..c4: psi(c4)=psi(c7) and psi(c5)=psi(c1)
            return filter([&](const Precoloring& p) {
                return p[pos(3)] == p[pos(6)] && p[pos(4)] == p[pos(0)];
            });
        case Family::F7c:
            return filter([&](const Precoloring& p) {
                return p[pos(2)] == p[pos(5)] && p[pos(1)] == p[pos(3)] &&
                       p[pos(1)] == p[pos(6)] && p[pos(0)] == p[pos(4)];
            });
        case Family::F9b: {
            // psi extends iff the edges of C outside the 7-face carry both a
            // source and a sink.
            FaceSet fs = faces(g);
            int f7 = -1;
            for (int f : fs.internal_faces())
                if (fs.face_length(f) == 7) f7 = f;
            std::set<int> shared;
            const auto& walk = fs.faces[f7];
            for (size_t i = 0; i < walk.size(); ++i) {
                Vertex a = walk[i], b = walk[(i + 1) % walk.size()];
                int ia = g.outer_index(a), ib = g.outer_index(b);
                if (ia < 0 || ib < 0) continue;
                if ((ia + 1) % n == ib) shared.insert(ia);
                if ((ib + 1) % n == ia) shared.insert(ib);
            }
            return filter([&](const Precoloring& p) {
                BoundaryProfile prof = boundary_profile(g, p);
                bool src = false, snk = false;
                for (int e = 0; e < n; ++e) {
                    if (shared.count(e)) continue;
                    (prof.pattern[e] ? src : snk) = true;
                }
                return !(src && snk);
            });
        }
        default:
            return std::nullopt;
    }
}

CrosscheckReport crosscheck(const GenConfig& cfg, const CrosscheckOptions& opt) {
    CrosscheckReport rep;
    std::mutex mu;
    std::vector<PlaneGraph> batch;
    enumerate_graphs(cfg, [&](const PlaneGraph& g) { batch.push_back(g); });
    rep.graphs = static_cast<long long>(batch.size());

    std::atomic<size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= batch.size()) break;
            const PlaneGraph& g = batch[i];
            CriticalityVerdict v = is_critical(g);
            Classification c = classify(g);
            bool agree = v.is_critical == (c.family != Family::NotCritical);

            long long pattern_bad = 0;
            if (opt.check_patterns && v.is_critical && agree) {
                auto pred = predicted_nonextendable(g, c);
                if (pred && *pred != v.nonextendable) pattern_bad = 1;
            }
            long long wit_checks = 0, wit_fail = 0;
            if (opt.check_witnesses) {
                FaceSet fs = faces(g);
                for (const Precoloring& psi : v.nonextendable)
                    for (const Layout& q : enumerate_balanced(g, fs, psi)) {
                        ++wit_checks;
                        auto w = find_witness(g, fs, psi, q);
                        if (!w || !verify_witness(g, psi, q, *w)) ++wit_fail;
                    }
            }
            std::lock_guard<std::mutex> lock(mu);
            if (v.is_critical) {
                ++rep.criticals;
                rep.family_counts[family_name(c.family)]++;
            }
            if (!agree) {
                ++rep.disagreements;
                if (rep.offenders.size() < 8) rep.offenders.push_back(format_graph(g));
            }
            rep.pattern_mismatches += pattern_bad;
            rep.witness_checks += wit_checks;
            rep.witness_failures += wit_fail;
        }
    };
    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return rep;
}

}  // namespace trifree
