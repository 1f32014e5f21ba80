#include "trifree/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace trifree {

namespace {

long long dart_key(const PlaneGraph& g, Vertex u, Vertex v) {
    return static_cast<long long>(u) * g.vertex_count() + v;
}

long long edge_key(int n, Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<long long>(u) * n + v;
}

// Lexicographically least rotation of the walk, over both directions.
std::vector<Vertex> cyclic_key(std::vector<Vertex> w) {
    std::vector<Vertex> best;
    for (int dir = 0; dir < 2; ++dir) {
        for (size_t s = 0; s < w.size(); ++s) {
            std::vector<Vertex> cand;
            cand.reserve(w.size());
            for (size_t t = 0; t < w.size(); ++t) cand.push_back(w[(s + t) % w.size()]);
            if (best.empty() || cand < best) best = cand;
        }
        std::reverse(w.begin(), w.end());
    }
    return best;
}

}  // namespace

int PlaneGraph::edge_count() const {
    int d = 0;
    for (const auto& r : rot) d += static_cast<int>(r.size());
    return d / 2;
}

bool PlaneGraph::adjacent(Vertex u, Vertex v) const {
    return rot_index(u, v) >= 0;
}

bool PlaneGraph::on_outer(Vertex v) const { return outer_index(v) >= 0; }

int PlaneGraph::outer_index(Vertex v) const {
    for (size_t i = 0; i < outer.size(); ++i)
        if (outer[i] == v) return static_cast<int>(i);
    return -1;
}

int PlaneGraph::rot_index(Vertex v, Vertex u) const {
    for (size_t i = 0; i < rot[v].size(); ++i)
        if (rot[v][i] == u) return static_cast<int>(i);
    return -1;
}

int FaceSet::face_of_dart(const PlaneGraph& g, Vertex u, Vertex v) const {
    long long key = dart_key(g, u, v);
    auto it = std::lower_bound(dart_keys.begin(), dart_keys.end(), key);
    if (it == dart_keys.end() || *it != key) throw GraphError("unknown dart");
    return dart_faces[it - dart_keys.begin()];
}

std::vector<int> FaceSet::internal_5plus() const {
    std::vector<int> out;
    for (size_t f = 0; f < faces.size(); ++f)
        if (static_cast<int>(f) != outer_face && faces[f].size() >= 5)
            out.push_back(static_cast<int>(faces[f].size()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FaceSet::internal_faces() const {
    std::vector<int> out;
    for (size_t f = 0; f < faces.size(); ++f)
        if (static_cast<int>(f) != outer_face) out.push_back(static_cast<int>(f));
    return out;
}

FaceSet faces(const PlaneGraph& g) {
    const int n = g.vertex_count();
    FaceSet fs;
    std::vector<std::pair<long long, std::pair<Vertex, Vertex>>> darts;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.rot[u]) darts.push_back({dart_key(g, u, v), {u, v}});
    std::sort(darts.begin(), darts.end());
    fs.dart_keys.reserve(darts.size());
    for (auto& d : darts) fs.dart_keys.push_back(d.first);
    fs.dart_faces.assign(darts.size(), -1);

    auto dart_pos = [&](Vertex u, Vertex v) {
        long long key = dart_key(g, u, v);
        return std::lower_bound(fs.dart_keys.begin(), fs.dart_keys.end(), key) -
               fs.dart_keys.begin();
    };

    // Next dart of the face on the right of (u, v): with clockwise rotation
    // lists this is the predecessor of the reversed dart at v (equivalently,
    // the counterclockwise successor).
    for (size_t i = 0; i < darts.size(); ++i) {
        if (fs.dart_faces[i] >= 0) continue;
        int fid = static_cast<int>(fs.faces.size());
        std::vector<Vertex> walk;
        Vertex u = darts[i].second.first, v = darts[i].second.second;
        Vertex su = u, sv = v;
        do {
            fs.dart_faces[dart_pos(u, v)] = fid;
            walk.push_back(u);
            int d = g.degree(v);
            int p = g.rot_index(v, u);
            Vertex w = g.rot[v][(p + d - 1) % d];
            u = v;
            v = w;
        } while (!(u == su && v == sv));
        fs.faces.push_back(std::move(walk));
    }

    // The outer face is the orbit of the reversed outer walk.
    if (g.outer.size() >= 2) {
        long long key = dart_key(g, g.outer[1], g.outer[0]);
        auto it = std::lower_bound(fs.dart_keys.begin(), fs.dart_keys.end(), key);
        if (it != fs.dart_keys.end() && *it == key)
            fs.outer_face = fs.dart_faces[it - fs.dart_keys.begin()];
    }
    return fs;
}

void validate(const PlaneGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw GraphError("empty graph");
    if (g.name.size() != g.rot.size()) throw GraphError("name/rotation size mismatch");
    for (Vertex v = 0; v < n; ++v) {
        std::set<Vertex> seen;
        for (Vertex u : g.rot[v]) {
            if (u < 0 || u >= n) throw GraphError("neighbor out of range");
            if (u == v) throw GraphError("loop at " + g.name[v]);
            if (!seen.insert(u).second)
                throw GraphError("parallel edge at " + g.name[v]);
            if (g.rot_index(u, v) < 0)
                throw GraphError("asymmetric adjacency " + g.name[v] + "-" + g.name[u]);
        }
    }

    // Connectivity.
    std::vector<char> vis(n, 0);
    std::vector<Vertex> stack{0};
    vis[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.rot[v])
            if (!vis[u]) { vis[u] = 1; ++reached; stack.push_back(u); }
    }
    if (reached != n) throw GraphError("graph not connected");

    // Outer cycle: simple, consecutive vertices adjacent.
    if (g.outer.size() < 4) throw GraphError("outer cycle shorter than 4");
    std::set<Vertex> outset(g.outer.begin(), g.outer.end());
    if (outset.size() != g.outer.size())
        throw GraphError("outer walk repeats a vertex");
    for (size_t i = 0; i < g.outer.size(); ++i) {
        Vertex a = g.outer[i], b = g.outer[(i + 1) % g.outer.size()];
        if (!g.adjacent(a, b)) throw GraphError("outer cycle not a cycle");
    }

    // Embedding consistency: Euler's formula, and the outer walk is a face.
    FaceSet fs = faces(g);
    int V = n, E = g.edge_count(), F = static_cast<int>(fs.faces.size());
    if (V - E + F != 2) throw GraphError("embedding violates Euler's formula");
    if (fs.outer_face < 0) throw GraphError("outer walk missing from embedding");
    std::vector<Vertex> rev(g.outer.rbegin(), g.outer.rend());
    if (cyclic_key(rev) != cyclic_key(fs.faces[fs.outer_face]))
        throw GraphError("outer sequence is not a face of the embedding");

    int total = 0;
    for (const auto& f : fs.faces) total += static_cast<int>(f.size());
    if (total != 2 * E || total % 2 != 0)
        throw GraphError("face lengths do not sum to 2|E|");

    if (g.triangle_free) {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : g.rot[u]) {
                if (v < u) continue;
                for (Vertex w : g.rot[u])
                    if (w != v && g.adjacent(w, v))
                        throw GraphError("triangle at " + g.name[u] + "," +
                                         g.name[v] + "," + g.name[w]);
            }
    }
}

PlaneGraph parse_graph(const std::string& text) {
    PlaneGraph g;
    std::map<std::string, Vertex> id;
    auto vertex = [&](const std::string& s) {
        auto it = id.find(s);
        if (it != id.end()) return it->second;
        Vertex v = static_cast<Vertex>(g.name.size());
        id[s] = v;
        g.name.push_back(s);
        g.rot.emplace_back();
        return v;
    };

    std::istringstream in(text);
    std::string line;
    std::vector<char> has_rot;
    g.triangle_free = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "outer:") {
            std::string tok;
            while (ls >> tok) g.outer.push_back(vertex(tok));
        } else if (head == "v") {
            std::string vn;
            if (!(ls >> vn) || vn.empty() || vn.back() != ':')
                throw GraphError("malformed vertex line: " + line);
            vn.pop_back();
            Vertex v = vertex(vn);
            has_rot.resize(std::max(has_rot.size(), static_cast<size_t>(v + 1)), 0);
            if (has_rot[v]) throw GraphError("duplicate rotation for " + vn);
            has_rot[v] = 1;
            std::string tok;
            while (ls >> tok) {
                Vertex u = vertex(tok);  // may reallocate g.rot
                g.rot[v].push_back(u);
            }
        } else if (head == "flags:") {
            std::string tok;
            while (ls >> tok)
                if (tok == "triangle_free") g.triangle_free = true;
        } else {
            throw GraphError("unrecognized line: " + line);
        }
    }
    if (g.outer.empty()) throw GraphError("missing outer: line");
    has_rot.resize(g.name.size(), 0);
    for (size_t v = 0; v < g.name.size(); ++v)
        if (!has_rot[v]) throw GraphError("no rotation given for " + g.name[v]);
    validate(g);
    return g;
}

std::string format_graph(const PlaneGraph& g) {
    std::ostringstream out;
    out << "outer:";
    for (Vertex v : g.outer) out << ' ' << g.name[v];
    out << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "v " << g.name[v] << ':';
        for (Vertex u : g.rot[v]) out << ' ' << g.name[u];
        out << '\n';
    }
    if (g.triangle_free) out << "flags: triangle_free\n";
    return out.str();
}

std::vector<CycleInfo> cycles_up_to(const PlaneGraph& g, int maxlen) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> found;

    std::vector<char> inpath(n, 0);
    std::vector<Vertex> path;
    // Cycles are rooted at their least vertex; direction fixed by requiring
    // the second vertex to be smaller than the last.
    auto dfs = [&](auto&& self, Vertex s, Vertex v) -> void {
        for (Vertex u : g.rot[v]) {
            if (u == s && path.size() >= 3) {
                if (path[1] < path.back()) found.push_back(path);
                continue;
            }
            if (u <= s || inpath[u]) continue;
            if (static_cast<int>(path.size()) >= maxlen) continue;
            inpath[u] = 1;
            path.push_back(u);
            self(self, s, u);
            path.pop_back();
            inpath[u] = 0;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path = {s};
        inpath.assign(n, 0);
        inpath[s] = 1;
        dfs(dfs, s, s);
    }

    FaceSet fs = faces(g);
    std::set<std::vector<Vertex>> face_keys;
    for (const auto& f : fs.faces) face_keys.insert(cyclic_key(f));

    std::vector<CycleInfo> out;
    for (auto& c : found) {
        CycleInfo info;
        info.cycle = c;
        info.facial = face_keys.count(cyclic_key(c)) > 0;
        // Separating: deleting the cycle's vertices disconnects the rest.
        std::vector<char> dead(n, 0);
        for (Vertex v : c) dead[v] = 1;
        int comps = 0;
        std::vector<char> vis(n, 0);
        for (Vertex s = 0; s < n; ++s) {
            if (dead[s] || vis[s]) continue;
            ++comps;
            std::vector<Vertex> st{s};
            vis[s] = 1;
            while (!st.empty()) {
                Vertex v = st.back();
                st.pop_back();
                for (Vertex u : g.rot[v])
                    if (!dead[u] && !vis[u]) { vis[u] = 1; st.push_back(u); }
            }
        }
        info.separating = comps >= 2;
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const CycleInfo& a, const CycleInfo& b) {
        if (a.cycle.size() != b.cycle.size()) return a.cycle.size() < b.cycle.size();
        return a.cycle < b.cycle;
    });
    return out;
}

std::vector<int> faces_inside(const PlaneGraph& g, const FaceSet& fs,
                              const std::vector<Vertex>& cycle) {
    const int n = g.vertex_count();
    if (cycle.size() < 3) throw GraphError("not a cycle");
    std::set<Vertex> cset(cycle.begin(), cycle.end());
    if (cset.size() != cycle.size()) throw GraphError("not a simple cycle");
    std::unordered_set<long long> cyc_edges;
    for (size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (!g.adjacent(a, b)) throw GraphError("cycle edge missing from graph");
        cyc_edges.insert(edge_key(n, a, b));
    }

    // Flood the dual from the outer face without crossing the cycle.
    std::vector<char> outside(fs.faces.size(), 0);
    std::vector<int> st{fs.outer_face};
    outside[fs.outer_face] = 1;
    while (!st.empty()) {
        int f = st.back();
        st.pop_back();
        const auto& walk = fs.faces[f];
        for (size_t i = 0; i < walk.size(); ++i) {
            Vertex a = walk[i], b = walk[(i + 1) % walk.size()];
            if (cyc_edges.count(edge_key(n, a, b))) continue;
            int f2 = fs.face_of_dart(g, b, a);
            if (!outside[f2]) { outside[f2] = 1; st.push_back(f2); }
        }
    }
    std::vector<int> inside;
    for (size_t f = 0; f < fs.faces.size(); ++f)
        if (!outside[f]) inside.push_back(static_cast<int>(f));
    return inside;
}

PlaneGraph disk_subgraph(const PlaneGraph& g, const std::vector<Vertex>& cycle) {
    const int n = g.vertex_count();
    FaceSet fs = faces(g);
    std::vector<int> inside = faces_inside(g, fs, cycle);
    std::vector<char> is_inside(fs.faces.size(), 0);
    for (int f : inside) is_inside[f] = 1;

    // Keep an edge iff a face on either side is inside the disk.
    auto keep = [&](Vertex u, Vertex v) {
        return is_inside[fs.face_of_dart(g, u, v)] ||
               is_inside[fs.face_of_dart(g, v, u)];
    };

    std::vector<Vertex> remap(n, -1);
    PlaneGraph h;
    h.triangle_free = g.triangle_free;
    auto touch = [&](Vertex v) {
        if (remap[v] < 0) {
            remap[v] = static_cast<Vertex>(h.name.size());
            h.name.push_back(g.name[v]);
            h.rot.emplace_back();
        }
        return remap[v];
    };
    for (Vertex v : cycle) touch(v);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.rot[v])
            if (keep(v, u)) { touch(v); touch(u); }
    for (Vertex v = 0; v < n; ++v) {
        if (remap[v] < 0) continue;
        for (Vertex u : g.rot[v])
            if (keep(v, u)) h.rot[remap[v]].push_back(remap[u]);
    }
    for (Vertex v : cycle) h.outer.push_back(remap[v]);

    try {
        validate(h);
        return h;
    } catch (const GraphError&) {
        std::reverse(h.outer.begin(), h.outer.end());
        validate(h);
        return h;
    }
}

std::string canonical_form(const PlaneGraph& g) {
    const int n = g.vertex_count();
    const int m = static_cast<int>(g.outer.size());
    std::string best;
    for (int start = 0; start < m; ++start) {
        for (int dir : {1, -1}) {
            Vertex root = g.outer[start];
            Vertex second = g.outer[((start + dir) % m + m) % m];
            std::vector<int> lab(n, -1);
            std::vector<Vertex> order;
            std::vector<Vertex> anchor(n, -1);
            lab[root] = 0;
            anchor[root] = second;
            order.push_back(root);
            size_t head = 0;
            int next = 1;
            // Root's anchor is already its rotation start; everyone else is
            // anchored at the neighbor that discovered it.
            while (head < order.size()) {
                Vertex v = order[head++];
                int d = g.degree(v);
                int a = g.rot_index(v, anchor[v]);
                for (int t = 0; t < d; ++t) {
                    Vertex u = g.rot[v][((a + dir * t) % d + d) % d];
                    if (lab[u] < 0) {
                        lab[u] = next++;
                        anchor[u] = v;
                        order.push_back(u);
                    }
                }
            }
            std::ostringstream enc;
            enc << m << '|';
            for (Vertex v : order) {
                int d = g.degree(v);
                int a = g.rot_index(v, anchor[v]);
                enc << '(';
                for (int t = 0; t < d; ++t) {
                    Vertex u = g.rot[v][((a + dir * t) % d + d) % d];
                    enc << lab[u] << (t + 1 < d ? "," : "");
                }
                enc << ')';
            }
            std::string s = enc.str();
            if (best.empty() || s < best) best = std::move(s);
        }
    }
    return best;
}

PlaneGraph from_faces(const std::vector<Vertex>& outer,
                      const std::vector<std::vector<Vertex>>& internal,
                      int n_vertices, std::vector<std::string> names) {
    PlaneGraph g;
    g.rot.assign(n_vertices, {});
    if (names.empty()) {
        for (int v = 0; v < n_vertices; ++v) names.push_back("v" + std::to_string(v));
    }
    g.name = std::move(names);
    g.outer = outer;

    // For each face walk ... a b c ... the face sits in the corner between
    // the darts to a and to c at b, with c immediately clockwise-before a:
    // the clockwise rotation at b satisfies succ_b(c) = a.
    std::map<std::pair<Vertex, Vertex>, Vertex> succ;
    auto add_walk = [&](const std::vector<Vertex>& w) {
        for (size_t i = 0; i < w.size(); ++i) {
            Vertex a = w[i], b = w[(i + 1) % w.size()], c = w[(i + 2) % w.size()];
            auto [it, fresh] = succ.insert({{b, c}, a});
            if (!fresh && it->second != a)
                throw GraphError("inconsistent face walks at vertex " + g.name[b]);
        }
    };
    for (const auto& f : internal) add_walk(f);
    std::vector<Vertex> rev(outer.rbegin(), outer.rend());
    add_walk(rev);

    std::vector<std::vector<Vertex>> nbrs(n_vertices);
    for (const auto& [dart, c] : succ) nbrs[dart.first].push_back(dart.second);
    for (Vertex v = 0; v < n_vertices; ++v) {
        if (nbrs[v].empty()) throw GraphError("vertex missing from all faces");
        std::set<Vertex> remaining;
        for (const auto& [dart, c] : succ)
            if (dart.first == v) remaining.insert(dart.second);
        Vertex start = *remaining.begin();
        Vertex cur = start;
        do {
            g.rot[v].push_back(cur);
            auto it = succ.find({v, cur});
            if (it == succ.end()) throw GraphError("open rotation at " + g.name[v]);
            cur = it->second;
        } while (cur != start && g.rot[v].size() <= remaining.size());
        if (g.rot[v].size() != remaining.size())
            throw GraphError("rotation at " + g.name[v] + " is not a single cycle");
    }
    validate(g);
    return g;
}

void fill_region(const std::vector<Vertex>& boundary, const std::string& style,
                 std::vector<std::vector<Vertex>>& out, int& next_vertex,
                 std::vector<std::string>* names) {
    const int len = static_cast<int>(boundary.size());
    if (len % 2 != 0) throw GraphError("odd region cannot be quadrangulated");
    if (len == 4) {
        out.push_back(boundary);
        return;
    }
    const int m = len / 2;
    if (style == "fan") {
        Vertex x = next_vertex++;
        if (names) names->push_back("q" + std::to_string(x));
        for (int j = 0; j < m; ++j)
            out.push_back({boundary[2 * j], boundary[2 * j + 1],
                           boundary[(2 * j + 2) % len], x});
        return;
    }
    // Ladder: strip of quads between the two halves of the boundary.
    for (int i = 0; i + 1 <= m - 1; ++i)
        out.push_back({boundary[i], boundary[i + 1], boundary[2 * m - 2 - i],
                       boundary[(2 * m - 1 - i) % len]});
}

}  // namespace trifree
