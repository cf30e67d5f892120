#include "sl3skein/tropical.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl3 {

namespace {
int pos_part(int x) { return x > 0 ? x : 0; }
}

Lamination Lamination::empty(const Triangulation& T) {
    Lamination l;
    l.tris.resize(T.num_tris());
    l.peripheral.resize(T.num_punctures());
    return l;
}

bool Lamination::is_empty() const {
    for (const auto& t : tris) {
        if (t.d != 0) return false;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (t.c[a][b] != 0) return false;
    }
    for (const auto& p : peripheral)
        if (p.cw != 0 || p.ccw != 0) return false;
    return true;
}

std::pair<int, int> side_inout(const Lamination& lam, int t, int slot) {
    const auto& d = lam.tris[t];
    int a = slot, a1 = (slot + 1) % 3, a2 = (slot + 2) % 3;
    int out = d.c[a1][a] + d.c[a2][a] + pos_part(d.d);
    int in = d.c[a][a1] + d.c[a][a2] + pos_part(-d.d);
    return {out, in};
}

void validate(const Lamination& lam, const Triangulation& T) {
    if (static_cast<int>(lam.tris.size()) != T.num_tris() ||
        static_cast<int>(lam.peripheral.size()) != T.num_punctures())
        throw std::invalid_argument("lamination shape does not match triangulation");
    for (const auto& td : lam.tris)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b && td.c[a][b] < 0)
                    throw std::invalid_argument("negative corner weight");
    for (int e = 0; e < T.num_edges(); ++e) {
        if (T.edge(e).boundary) continue;
        auto [t, s] = T.edge(e).inc[0];
        auto [r, u] = T.edge(e).inc[1];
        auto [outT, inT] = side_inout(lam, t, s);
        auto [outR, inR] = side_inout(lam, r, u);
        if (outT != inR || inT != outR)
            throw std::invalid_argument("edge matching fails at " + T.edge(e).id);
    }
}

TropicalVector corner_arc_coords3(const Triangulation& T, const Quiver& q,
                                  int t, int fromSlot, int toSlot) {
    if (fromSlot == toSlot) throw std::invalid_argument("corner arc needs distinct sides");
    TropicalVector a3(q.num_nodes(), 0);
    a3[q.side_node(t, fromSlot, 0)] += 2;
    a3[q.side_node(t, fromSlot, 1)] += 1;
    a3[q.side_node(t, toSlot, 0)] += 1;
    a3[q.side_node(t, toSlot, 1)] += 2;
    bool left = toSlot == (fromSlot + 1) % 3;
    a3[q.tri_node(t)] += left ? 2 : 1;
    (void)T;
    return a3;
}

TropicalVector pyramid_coords3(const Triangulation& T, const Quiver& q, int t, int d) {
    TropicalVector a3(q.num_nodes(), 0);
    for (int s = 0; s < 3; ++s) {
        a3[q.side_node(t, s, 0)] += d > 0 ? d : -2 * d;
        a3[q.side_node(t, s, 1)] += d > 0 ? 2 * d : -d;
    }
    a3[q.tri_node(t)] += 3 * std::abs(d);
    (void)T;
    return a3;
}

namespace {

// coordinates of the canonical per-triangle data, peripheral fields ignored
TropicalVector coords_canonical(const Lamination& lam, const Triangulation& T,
                                const Quiver& q) {
    TropicalVector a3(q.num_nodes(), 0);
    for (int e = 0; e < T.num_edges(); ++e) {
        auto [t, s] = T.edge(e).inc[0];
        auto [out, in] = side_inout(lam, t, s);
        a3[q.edge_node(e, 0)] = out + 2 * in;
        a3[q.edge_node(e, 1)] = 2 * out + in;
    }
    for (int t = 0; t < T.num_tris(); ++t) {
        const auto& td = lam.tris[t];
        int rot = 0;
        for (int a = 0; a < 3; ++a) rot += td.c[a][(a + 1) % 3] - td.c[(a + 1) % 3][a];
        int sum = 0;
        for (int s = 0; s < 3; ++s) sum += a3[q.side_node(t, s, td.d >= 0 ? 1 : 0)];
        int num = rot + sum;
        if (num % 2 != 0) throw std::invalid_argument("inconsistent lamination data");
        a3[q.tri_node(t)] = num / 2;
    }
    return a3;
}

} // namespace

TropicalVector peripheral_coords3(const Triangulation& T, const Quiver& q, int p, bool ccw) {
    // the weight-1 peripheral loop, realized by its fan of corner arcs
    Lamination lam = Lamination::empty(T);
    for (const auto& c : T.puncture_corners(p)) {
        int lo = c.corner, hi = (c.corner + 1) % 3;
        if (ccw) lam.tris[c.tri].c[lo][hi] += 1;
        else lam.tris[c.tri].c[hi][lo] += 1;
    }
    return coords_canonical(lam, T, q);
}

TropicalVector coords(const Lamination& lam, const Triangulation& T, const Quiver& q) {
    validate(lam, T);
    TropicalVector a3 = coords_canonical(lam, T, q);
    for (int p = 0; p < T.num_punctures(); ++p) {
        const auto& per = lam.peripheral[p];
        if (per.ccw != 0) {
            auto v = peripheral_coords3(T, q, p, true);
            for (size_t i = 0; i < a3.size(); ++i) a3[i] += per.ccw * v[i];
        }
        if (per.cw != 0) {
            auto v = peripheral_coords3(T, q, p, false);
            for (size_t i = 0; i < a3.size(); ++i) a3[i] += per.cw * v[i];
        }
    }
    return a3;
}

bool is_balanced(const TropicalVector& a3, const Triangulation& T, const Quiver& q) {
    if (static_cast<int>(a3.size()) != q.num_nodes()) return false;
    auto div3 = [](long long x) { return x % 3 == 0; };
    for (int t = 0; t < T.num_tris(); ++t) {
        long long s1 = 0, s2 = 0;
        for (int s = 0; s < 3; ++s) {
            int n1 = a3[q.side_node(t, s, 0)], n2 = a3[q.side_node(t, s, 1)];
            s1 += n1;
            s2 += n2;
            if (!div3(n1 + n2)) return false;  // (BE2)
        }
        if (!div3(s1) || !div3(s2)) return false;  // (BE1)
        for (int s = 0; s < 3; ++s) {  // (BE3)
            long long x = -static_cast<long long>(a3[q.tri_node(t)]) +
                          a3[q.side_node(t, s, 1)] + a3[q.side_node(t, (s + 1) % 3, 0)];
            if (!div3(x)) return false;
        }
    }
    return true;
}

bool is_congruent(const TropicalVector& a3) {
    for (int x : a3)
        if (x % 3 != 0) return false;
    return true;
}

Lamination reconstruct(const TropicalVector& a3, const Triangulation& T, const Quiver& q) {
    if (!is_balanced(a3, T, q))
        throw std::invalid_argument("reconstruct needs a balanced vector");
    Lamination lam = Lamination::empty(T);
    for (int t = 0; t < T.num_tris(); ++t) {
        long long sum1 = 0, sum2 = 0;
        for (int s = 0; s < 3; ++s) {
            sum1 += a3[q.side_node(t, s, 0)];
            sum2 += a3[q.side_node(t, s, 1)];
        }
        int d = static_cast<int>((sum2 - sum1) / 3);
        lam.tris[t].d = d;
        int at = a3[q.tri_node(t)];
        for (int a = 0; a < 3; ++a) {
            int a1 = (a + 1) % 3, a2 = (a + 2) % 3;
            long long cBack = (-static_cast<long long>(at) + a3[q.side_node(t, a, 1)] +
                               a3[q.side_node(t, a1, 0)]);
            long long cFwd = (static_cast<long long>(at) + a3[q.side_node(t, a1, 1)] -
                              a3[q.side_node(t, a1, 0)] - a3[q.side_node(t, a2, 0)]) -
                             3LL * pos_part(d);
            if (cBack % 3 != 0 || cFwd % 3 != 0)
                throw std::invalid_argument("balanced vector with fractional corner weights");
            lam.tris[t].c[a1][a] = static_cast<int>(cBack / 3);
            lam.tris[t].c[a][a1] = static_cast<int>(cFwd / 3);
        }
    }
    // uniform peripheral shift making all corners nonnegative
    int k = 0;
    for (int t = 0; t < T.num_tris(); ++t)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b) k = std::max(k, -lam.tris[t].c[a][b]);
    if (k > 0) {
        for (int t = 0; t < T.num_tris(); ++t)
            for (int i = 0; i < 3; ++i) {
                if (T.puncture_of_corner(t, i) < 0) {
                    int hi = (i + 1) % 3;
                    if (lam.tris[t].c[i][hi] < 0 || lam.tris[t].c[hi][i] < 0)
                        throw std::invalid_argument(
                            "negative corner weight at a boundary marked point");
                    continue;
                }
                int hi = (i + 1) % 3;
                lam.tris[t].c[i][hi] += k;   // CCW loop piece
                lam.tris[t].c[hi][i] += k;   // CW loop piece
            }
        for (int p = 0; p < T.num_punctures(); ++p) {
            lam.peripheral[p].cw = -k;
            lam.peripheral[p].ccw = -k;
        }
    }
    validate(lam, T);
    return lam;
}

Lamination lam_union(const Lamination& a, const Lamination& b) {
    if (a.tris.size() != b.tris.size() || a.peripheral.size() != b.peripheral.size())
        throw std::invalid_argument("laminations on different triangulations");
    Lamination r = a;
    for (size_t t = 0; t < r.tris.size(); ++t) {
        if (a.tris[t].d > 0 && b.tris[t].d < 0)
            throw std::invalid_argument("pyramids of opposite sign in one triangle");
        if (a.tris[t].d < 0 && b.tris[t].d > 0)
            throw std::invalid_argument("pyramids of opposite sign in one triangle");
        r.tris[t].d += b.tris[t].d;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.tris[t].c[i][j] += b.tris[t].c[i][j];
    }
    for (size_t p = 0; p < r.peripheral.size(); ++p) {
        r.peripheral[p].cw += b.peripheral[p].cw;
        r.peripheral[p].ccw += b.peripheral[p].ccw;
    }
    return r;
}

} // namespace sl3
