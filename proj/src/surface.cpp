#include "sl3skein/surface.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace sl3 {

Triangulation Triangulation::build(const std::vector<std::string>& edgeIds,
                                   const std::vector<bool>& edgeBoundary,
                                   const std::vector<std::string>& triIds,
                                   const std::vector<std::array<std::string, 3>>& triSides) {
    Triangulation T;
    for (size_t i = 0; i < edgeIds.size(); ++i) {
        if (!T.edgeByName_.emplace(edgeIds[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate edge id " + edgeIds[i]);
        T.edges_.push_back({edgeIds[i], edgeBoundary[i], {}});
    }
    for (size_t i = 0; i < triIds.size(); ++i) {
        if (!T.triByName_.emplace(triIds[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate triangle id " + triIds[i]);
        Tri t{triIds[i], {}};
        for (int s = 0; s < 3; ++s) {
            auto it = T.edgeByName_.find(triSides[i][s]);
            if (it == T.edgeByName_.end())
                throw std::invalid_argument("unknown edge " + triSides[i][s]);
            t.side[s] = it->second;
        }
        T.tris_.push_back(t);
    }
    T.finish();
    return T;
}

void Triangulation::finish() {
    for (auto& e : edges_) e.inc.clear();
    for (int t = 0; t < num_tris(); ++t)
        for (int s = 0; s < 3; ++s)
            edges_[tris_[t].side[s]].inc.emplace_back(t, s);
    for (auto& e : edges_) {
        std::sort(e.inc.begin(), e.inc.end());
        size_t want = e.boundary ? 1 : 2;
        if (e.inc.size() != want)
            throw std::invalid_argument("edge " + e.id + " has " + std::to_string(e.inc.size()) +
                                        " incidences, expected " + std::to_string(want));
    }

    // Rotation around the vertex at corner (t,i) crosses side slot i+1; the
    // shared vertex is the clockwise end of that side in the neighbor, so the
    // neighbor corner index equals the neighbor slot.
    auto rotate = [&](Corner c) -> std::optional<Corner> {
        int e = tris_[c.tri].side[(c.corner + 1) % 3];
        if (edges_[e].boundary) return std::nullopt;
        auto [rt, rs] = other_side(e, c.tri, (c.corner + 1) % 3);
        return Corner{rt, rs};
    };
    auto rotateBack = [&](Corner c) -> std::optional<Corner> {
        int e = tris_[c.tri].side[c.corner];
        if (edges_[e].boundary) return std::nullopt;
        auto [rt, rs] = other_side(e, c.tri, c.corner);
        return Corner{rt, (rs + 2) % 3};
    };

    punctureCorners_.clear();
    std::set<Corner> seen;
    for (int t = 0; t < num_tris(); ++t)
        for (int i = 0; i < 3; ++i) {
            Corner start{t, i};
            if (seen.count(start)) continue;
            std::vector<Corner> cycle{start};
            seen.insert(start);
            bool closed = false;
            Corner cur = start;
            while (true) {
                auto next = rotate(cur);
                if (!next) break;
                if (*next == start) { closed = true; break; }
                cycle.push_back(*next);
                seen.insert(*next);
                cur = *next;
            }
            if (closed) {
                if (cycle.size() < 3)
                    throw std::invalid_argument("puncture of valence " +
                                                std::to_string(cycle.size()) +
                                                ": triangulation not regular");
                punctureCorners_.push_back(cycle);
            } else {
                // boundary marked point: sweep back to mark its whole fan
                cur = start;
                while (true) {
                    auto prev = rotateBack(cur);
                    if (!prev) break;
                    if (seen.count(*prev)) break;
                    seen.insert(*prev);
                    cur = *prev;
                }
            }
        }
}

int Triangulation::edge_index(const std::string& id) const {
    auto it = edgeByName_.find(id);
    if (it == edgeByName_.end()) throw std::out_of_range("unknown edge " + id);
    return it->second;
}

int Triangulation::tri_index(const std::string& id) const {
    auto it = triByName_.find(id);
    if (it == triByName_.end()) throw std::out_of_range("unknown triangle " + id);
    return it->second;
}

std::pair<int, int> Triangulation::other_side(int e, int t, int slot) const {
    const auto& inc = edges_[e].inc;
    if (inc.size() != 2) throw std::invalid_argument("edge " + edges_[e].id + " is boundary");
    if (inc[0] == std::make_pair(t, slot)) return inc[1];
    if (inc[1] == std::make_pair(t, slot)) return inc[0];
    throw std::invalid_argument("incidence mismatch");
}

int Triangulation::puncture_of_corner(int t, int corner) const {
    for (int p = 0; p < num_punctures(); ++p)
        for (const auto& c : punctureCorners_[p])
            if (c.tri == t && c.corner == corner) return p;
    return -1;
}

bool Triangulation::has_boundary() const {
    for (const auto& e : edges_)
        if (e.boundary) return true;
    return false;
}

Triangulation Triangulation::flipped(int e) const {
    if (edges_[e].boundary) throw std::invalid_argument("cannot flip boundary edge");
    auto [t, a] = edges_[e].inc[0];
    auto [r, b] = edges_[e].inc[1];
    if (t == r) throw std::invalid_argument("cannot flip self-glued edge");
    Triangulation T = *this;
    T.tris_[t].side = {tris_[t].side[(a + 2) % 3], tris_[r].side[(b + 1) % 3], e};
    T.tris_[r].side = {tris_[r].side[(b + 2) % 3], tris_[t].side[(a + 1) % 3], e};
    T.finish();
    return T;
}

std::optional<std::pair<int, int>> Triangulation::flip_side_preimage(int e, int newTri,
                                                                     int newSlot) const {
    auto [t, a] = edges_[e].inc[0];
    auto [r, b] = edges_[e].inc[1];
    if (newTri == t) {
        if (newSlot == 0) return std::make_pair(t, (a + 2) % 3);
        if (newSlot == 1) return std::make_pair(r, (b + 1) % 3);
        return std::nullopt;
    }
    if (newTri == r) {
        if (newSlot == 0) return std::make_pair(r, (b + 2) % 3);
        if (newSlot == 1) return std::make_pair(t, (a + 1) % 3);
        return std::nullopt;
    }
    return std::make_pair(newTri, newSlot);
}

Triangulation Triangulation::single_triangle() {
    return build({"e0", "e1", "e2"}, {true, true, true}, {"t0"}, {{"e0", "e1", "e2"}});
}

Triangulation Triangulation::square() {
    return build({"d", "e0", "e1", "e2", "e3"}, {false, true, true, true, true},
                 {"t0", "t1"}, {{"d", "e0", "e1"}, {"d", "e2", "e3"}});
}

Triangulation Triangulation::once_punctured_torus() {
    return build({"e0", "e1", "e2"}, {false, false, false},
                 {"t0", "t1"}, {{"e0", "e1", "e2"}, {"e0", "e1", "e2"}});
}

Triangulation Triangulation::four_punctured_sphere() {
    return build({"e0", "e1", "e2", "e3", "e4", "e5"},
                 {false, false, false, false, false, false}, {"t0", "t1", "t2", "t3"},
                 {{"e0", "e1", "e2"}, {"e0", "e4", "e3"}, {"e1", "e3", "e5"}, {"e2", "e5", "e4"}});
}

Quiver::Quiver(const Triangulation& tri) {
    triNode_.resize(tri.num_tris());
    edgeNode_.resize(tri.num_edges());
    sideEdge_.resize(tri.num_tris());
    sidePrimary_.resize(tri.num_tris());
    for (int e = 0; e < tri.num_edges(); ++e) {
        edgeNode_[e][0] = static_cast<int>(names_.size());
        names_.push_back(tri.edge(e).id + ".1");
        edgeNode_[e][1] = static_cast<int>(names_.size());
        names_.push_back(tri.edge(e).id + ".2");
    }
    for (int t = 0; t < tri.num_tris(); ++t) {
        triNode_[t] = static_cast<int>(names_.size());
        names_.push_back(tri.tri(t).id);
    }
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) byName_[names_[i]] = i;

    for (int t = 0; t < tri.num_tris(); ++t)
        for (int s = 0; s < 3; ++s) {
            sideEdge_[t][s] = tri.tri(t).side[s];
            sidePrimary_[t][s] =
                tri.edge(tri.tri(t).side[s]).inc[0] == std::make_pair(t, s);
        }

    int n = num_nodes();
    eps_.assign(n, std::vector<int>(n, 0));
    auto arrow = [&](int v, int w) { eps_[v][w] += 1; eps_[w][v] -= 1; };
    for (int t = 0; t < tri.num_tris(); ++t)
        for (int a = 0; a < 3; ++a) {
            int first = side_node(t, a, 0);
            int second = side_node(t, (a + 2) % 3, 1);
            arrow(triNode_[t], first);
            arrow(first, second);
            arrow(second, triNode_[t]);
        }

    tehat_.assign(n, std::vector<int>(n, 0));
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) tehat_[v][w] = 2 * eps_[v][w];
    for (int e = 0; e < tri.num_edges(); ++e)
        if (tri.edge(e).boundary) {
            int v1 = edgeNode_[e][0], v2 = edgeNode_[e][1];
            tehat_[v1][v2] = 1;
            tehat_[v2][v1] = -1;
        }
}

int Quiver::node_index(const std::string& name) const {
    auto it = byName_.find(name);
    if (it == byName_.end()) throw std::out_of_range("unknown node " + name);
    return it->second;
}

Quiver Quiver::mutated(int k) const {
    Quiver q = *this;
    int n = num_nodes();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k)
                q.eps_[i][j] = -eps_[i][j];
            else
                q.eps_[i][j] = eps_[i][j] + (eps_[i][k] * std::abs(eps_[k][j]) +
                                             std::abs(eps_[i][k]) * eps_[k][j]) / 2;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int halfOffset = tehat_[i][j] - 2 * eps_[i][j];
            q.tehat_[i][j] = 2 * q.eps_[i][j] + halfOffset;
        }
    return q;
}

std::vector<double> x_mutate(const std::vector<double>& x, int k, const Quiver& q) {
    std::vector<double> y(x.size());
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
        if (i == k) {
            if (x[k] == 0) throw std::invalid_argument("X-mutation at vanishing coordinate");
            y[i] = 1.0 / x[k];
            continue;
        }
        int e = q.eps(i, k);
        if (e == 0) { y[i] = x[i]; continue; }
        double base = e > 0 ? 1.0 + 1.0 / x[k] : 1.0 + x[k];
        if (base == 0) throw std::invalid_argument("X-mutation hits 1 + X_k^{+-1} = 0");
        y[i] = x[i] * std::pow(base, -e);
    }
    return y;
}

std::vector<int> tropical_a_mutate_at(const std::vector<int>& a3, int k, const Quiver& q) {
    std::vector<int> b = a3;
    long long in = 0, out = 0;
    for (int v = 0; v < static_cast<int>(a3.size()); ++v) {
        int e = q.eps(v, k);
        if (e > 0) in += static_cast<long long>(e) * a3[v];
        else if (e < 0) out += static_cast<long long>(-e) * a3[v];
    }
    b[k] = static_cast<int>(-static_cast<long long>(a3[k]) + std::max(in, out));
    return b;
}

std::vector<int> flip_mutation_sequence(const Triangulation& tri, const Quiver& q, int e) {
    auto [t, a] = tri.edge(e).inc[0];
    auto [r, b] = tri.edge(e).inc[1];
    (void)a; (void)b;
    return {q.edge_node(e, 0), q.edge_node(e, 1), q.tri_node(t), q.tri_node(r)};
}

std::vector<int> flip_node_map(const Triangulation& tri, const Quiver& q,
                               const Triangulation& fl, const Quiver& qf, int e) {
    std::vector<int> map(q.num_nodes(), -1);
    auto [t, a] = tri.edge(e).inc[0];
    auto [r, b] = tri.edge(e).inc[1];
    (void)a; (void)b;
    // Across a flip the nodes on the flipped edge and the two adjacent
    // triangle centers trade places: the old edge nodes land at the new
    // centers and the old centers land on the new diagonal.
    map[q.edge_node(e, 0)] = qf.tri_node(t);
    map[q.edge_node(e, 1)] = qf.tri_node(r);
    map[q.tri_node(t)] = qf.edge_node(e, 1);
    map[q.tri_node(r)] = qf.edge_node(e, 0);
    for (int tt = 0; tt < tri.num_tris(); ++tt)
        if (tt != t && tt != r) map[q.tri_node(tt)] = qf.tri_node(tt);
    for (int ed = 0; ed < tri.num_edges(); ++ed) {
        if (ed == e) continue;
        // The two nodes on an outer edge are fixed points; the global labels
        // follow the primary incidence, so the pair swaps exactly when the new
        // primary incidence sits on the other geometric side than the old one.
        auto newInc = fl.edge(ed).inc[0];
        auto pre = tri.flip_side_preimage(e, newInc.first, newInc.second);
        bool swap = !(pre && *pre == tri.edge(ed).inc[0]);
        map[q.edge_node(ed, 0)] = qf.edge_node(ed, swap ? 1 : 0);
        map[q.edge_node(ed, 1)] = qf.edge_node(ed, swap ? 0 : 1);
    }
    return map;
}

std::vector<int> tropical_a_flip(const std::vector<int>& a3, const Triangulation& tri,
                                 const Quiver& q, int e) {
    Triangulation fl = tri.flipped(e);
    Quiver qf(fl);
    std::vector<int> cur = a3;
    Quiver qq = q;
    for (int k : flip_mutation_sequence(tri, q, e)) {
        cur = tropical_a_mutate_at(cur, k, qq);
        qq = qq.mutated(k);
    }
    auto map = flip_node_map(tri, q, fl, qf, e);
    std::vector<int> out(cur.size());
    for (int v = 0; v < static_cast<int>(cur.size()); ++v) out[map[v]] = cur[v];
    return out;
}

std::vector<double> x_flip(const std::vector<double>& x, const Triangulation& tri,
                           const Quiver& q, int e) {
    Triangulation fl = tri.flipped(e);
    Quiver qf(fl);
    std::vector<double> cur = x;
    Quiver qq = q;
    for (int k : flip_mutation_sequence(tri, q, e)) {
        cur = x_mutate(cur, k, qq);
        qq = qq.mutated(k);
    }
    auto map = flip_node_map(tri, q, fl, qf, e);
    std::vector<double> out(cur.size());
    for (int v = 0; v < static_cast<int>(cur.size()); ++v) out[map[v]] = cur[v];
    return out;
}

} // namespace sl3
