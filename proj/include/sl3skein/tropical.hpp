#pragma once

#include "sl3skein/surface.hpp"

#include <array>
#include <vector>

namespace sl3 {

// Canonical per-triangle data of a lamination: corner-arc weights c[a][b]
// (arcs from side a to side b, a != b, nonnegative) and one pyramid degree per
// triangle. Negative weights enter only through per-puncture peripheral loops.
struct Lamination {
    struct TriData {
        std::array<std::array<int, 3>, 3> c{};  // c[a][b], diagonal unused
        int d = 0;                              // pyramid degree
    };
    struct Peripheral {
        int cw = 0;   // weight of the clockwise loop (against the hole orientation)
        int ccw = 0;  // weight of the counterclockwise loop
    };
    std::vector<TriData> tris;        // indexed by triangle
    std::vector<Peripheral> peripheral;  // indexed by puncture

    static Lamination empty(const Triangulation& T);
    bool is_empty() const;
};

// Third-integer coordinate vector indexed by quiver nodes, stored as 3a_v.
using TropicalVector = std::vector<int>;

// Per-side intersection weights of the canonical data (peripheral part
// excluded): out = arcs/pyramid legs terminating on the side, in = starting.
std::pair<int, int> side_inout(const Lamination& lam, int t, int slot);

// validates edge matching and nonnegativity
void validate(const Lamination& lam, const Triangulation& T);

// edge/triangle coordinates plus peripheral loop contributions
TropicalVector coords(const Lamination& lam, const Triangulation& T, const Quiver& q);

// coordinates (times 3) of one corner arc / pyramid / peripheral loop
TropicalVector corner_arc_coords3(const Triangulation& T, const Quiver& q,
                                  int t, int fromSlot, int toSlot);
TropicalVector pyramid_coords3(const Triangulation& T, const Quiver& q, int t, int d);
TropicalVector peripheral_coords3(const Triangulation& T, const Quiver& q,
                                  int p, bool ccw);

// (BE1)-(BE3) per triangle
bool is_balanced(const TropicalVector& a3, const Triangulation& T, const Quiver& q);
// all coordinates integral
bool is_congruent(const TropicalVector& a3);

// Inverse of coords on balanced vectors. Corner weights and degrees are
// solved per triangle; a minimal uniform peripheral shift k >= 0 (k CW and k
// CCW loops at every puncture, recorded as -k) makes all corners nonnegative.
Lamination reconstruct(const TropicalVector& a3, const Triangulation& T, const Quiver& q);

// componentwise union; rejects pyramids of opposite sign in one triangle
Lamination lam_union(const Lamination& a, const Lamination& b);

} // namespace sl3
