#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace sl3 {

// Combinatorial ideal triangulation. Triangles list their three side slots in
// clockwise order; every interior edge appears in exactly two (triangle, slot)
// incidences, boundary edges in exactly one. Puncture classes are derived by
// corner traversal; valence < 3 at a puncture is rejected.
class Triangulation {
public:
    struct Tri {
        std::string id;
        std::array<int, 3> side;  // edge indices, clockwise
    };
    struct Edge {
        std::string id;
        bool boundary = false;
        // (triangle, slot) incidences in lexicographic order; first is primary
        std::vector<std::pair<int, int>> inc;
    };
    // Corner i of a triangle sits between side slots i and i+1 (mod 3).
    struct Corner {
        int tri, corner;
        bool operator==(const Corner& o) const { return tri == o.tri && corner == o.corner; }
        bool operator<(const Corner& o) const {
            return std::tie(tri, corner) < std::tie(o.tri, o.corner);
        }
    };

    static Triangulation build(const std::vector<std::string>& edgeIds,
                               const std::vector<bool>& edgeBoundary,
                               const std::vector<std::string>& triIds,
                               const std::vector<std::array<std::string, 3>>& triSides);

    int num_tris() const { return static_cast<int>(tris_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const Tri& tri(int t) const { return tris_[t]; }
    const Edge& edge(int e) const { return edges_[e]; }
    int edge_index(const std::string& id) const;
    int tri_index(const std::string& id) const;

    // the (triangle, slot) on the other side of interior edge e
    std::pair<int, int> other_side(int e, int t, int slot) const;

    // Punctures: cyclically closed corner classes, listed in rotation order
    // (rotation from corner (t,i) crosses side slot i+1).
    int num_punctures() const { return static_cast<int>(punctureCorners_.size()); }
    const std::vector<Corner>& puncture_corners(int p) const { return punctureCorners_[p]; }
    int puncture_of_corner(int t, int corner) const;  // -1 at boundary marked points

    bool has_boundary() const;

    // Flip at interior edge e with incidences (t,a), (r,b). New sides:
    //   t' = [t.side[a+2], r.side[b+1], e],  r' = [r.side[b+2], t.side[a+1], e].
    // Edge and triangle ids persist.
    Triangulation flipped(int e) const;
    // For a new incidence of the flipped triangulation, the old (triangle,
    // slot) occupying the same geometric side; nullopt for the new diagonal.
    std::optional<std::pair<int, int>> flip_side_preimage(int e, int newTri, int newSlot) const;

    // bundled examples
    static Triangulation single_triangle();
    static Triangulation square();
    static Triangulation once_punctured_torus();
    static Triangulation four_punctured_sphere();

private:
    std::vector<Tri> tris_;
    std::vector<Edge> edges_;
    std::map<std::string, int> triByName_, edgeByName_;
    std::vector<std::vector<Corner>> punctureCorners_;

    void finish();  // derive incidences and punctures, validate
};

// 3-triangulation quiver: two nodes per edge and one per triangle.
// Global edge-node order (v_{e,1}, v_{e,2}) follows the clockwise orientation
// of the primary incidence triangle; the other triangle sees them swapped.
// Arrows: one counterclockwise 3-cycle per corner of each triangle,
//   v_t -> v_{e_a,1} -> v_{e_{a-1},2} -> v_t   (a = 1,2,3, labels local to t).
class Quiver {
public:
    explicit Quiver(const Triangulation& tri);

    int num_nodes() const { return static_cast<int>(names_.size()); }
    const std::string& node_name(int v) const { return names_[v]; }
    int node_index(const std::string& name) const;

    int tri_node(int t) const { return triNode_[t]; }
    // global first/second node on edge e (primary incidence order), which = 0,1
    int edge_node(int e, int which) const { return edgeNode_[e][which]; }
    // node v_{e_slot, which+1} in the clockwise labeling of triangle t
    int side_node(int t, int slot, int which) const {
        return edgeNode_[sideEdge_[t][slot]][sidePrimary_[t][slot] ? which : 1 - which];
    }
    bool side_is_primary(int t, int slot) const { return sidePrimary_[t][slot]; }

    int eps(int v, int w) const { return eps_[v][w]; }
    // 2 * eps_hat: equals 2*eps except +-1 between the two nodes of a boundary
    // edge (in the local order of its unique triangle)
    int twice_eps_hat(int v, int w) const { return tehat_[v][w]; }

    // quiver mutation at node k; boundary half-unit offsets preserved
    Quiver mutated(int k) const;

    bool operator==(const Quiver& o) const { return eps_ == o.eps_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, int> byName_;
    std::vector<int> triNode_;
    std::vector<std::array<int, 2>> edgeNode_;
    std::vector<std::array<int, 3>> sideEdge_;
    std::vector<std::array<bool, 3>> sidePrimary_;
    std::vector<std::vector<int>> eps_, tehat_;
};

// Cluster X-mutation at node k: X'_k = 1/X_k, X'_i = X_i (1+X_k^{-sgn(e_ik)})^{-e_ik}.
std::vector<double> x_mutate(const std::vector<double>& x, int k, const Quiver& q);

// Tropical A-mutation at node k on third-integer coordinates (stored as 3a):
// a'_k = -a_k + max(sum_v [eps(v,k)]_+ a_v, sum_v [-eps(v,k)]_+ a_v).
std::vector<int> tropical_a_mutate_at(const std::vector<int>& a3, int k, const Quiver& q);

// The four-step mutation sequence realizing a flip at interior edge e:
// the two nodes on e, then the two adjacent triangle nodes.
std::vector<int> flip_mutation_sequence(const Triangulation& tri, const Quiver& q, int e);

// Node correspondence old quiver -> flipped quiver.
std::vector<int> flip_node_map(const Triangulation& tri, const Quiver& q,
                               const Triangulation& fl, const Quiver& qf, int e);

// Coordinates across a flip: the four tropical A-mutations of the flip
// sequence, re-indexed by the flipped quiver's nodes.
std::vector<int> tropical_a_flip(const std::vector<int>& a3, const Triangulation& tri,
                                 const Quiver& q, int e);
// Positive real X-coordinates across a flip (four X-mutations, re-indexed).
std::vector<double> x_flip(const std::vector<double>& x, const Triangulation& tri,
                           const Quiver& q, int e);

} // namespace sl3
