#pragma once

#include "sl3skein/surface.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace sl3 {

// Commutative Laurent polynomial in formal cube roots X_v^{1/3}, one variable
// per quiver node; exponents stored as integer counts of thirds.
class CubeRootPoly {
public:
    using Exp = std::vector<std::pair<int, int>>;  // sorted (node, thirds), nonzero

    CubeRootPoly() = default;
    static CubeRootPoly constant(long long c);
    static CubeRootPoly monomial(Exp e, long long c = 1);
    static CubeRootPoly var_third(int node, int thirds, long long c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, long long>& terms() const { return terms_; }

    CubeRootPoly& operator+=(const CubeRootPoly& o);
    CubeRootPoly operator+(const CubeRootPoly& o) const { auto r = *this; r += o; return r; }
    CubeRootPoly operator*(const CubeRootPoly& o) const;
    CubeRootPoly operator-() const;
    bool operator==(const CubeRootPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const CubeRootPoly& o) const { return !(*this == o); }

    bool nonnegative_coeffs() const;
    double eval(const std::vector<double>& x) const;  // substitute X_v = x[v]
    std::string str(const Quiver& q) const;

private:
    std::map<Exp, long long> terms_;
};

using CubeMatrix = std::array<std::array<CubeRootPoly, 3>, 3>;

// One step of an oriented loop: a triangle passage from an entry side to an
// exit side. Exit == entry means a U-turn.
struct Turn {
    int tri;
    int inSlot;
    int outSlot;
};

// Segment matrices: the diagonal edge matrix uses the coordinates left and
// right of the crossing direction; turn matrices use the triangle's center.
CubeMatrix edge_segment_matrix(const Quiver& q, int leftNode, int rightNode);
CubeMatrix left_turn_matrix(const Quiver& q, int centerNode);
CubeMatrix right_turn_matrix(const Quiver& q, int centerNode);
CubeMatrix uturn_matrix();

CubeMatrix cube_mul(const CubeMatrix& a, const CubeMatrix& b);
CubeRootPoly cube_trace(const CubeMatrix& m);
CubeRootPoly cube_det(const CubeMatrix& m);

// Normalized variants used in mutation computations: original matrices divided
// by their (1,1) entry. Diagnostic only.
CubeMatrix edge_segment_matrix_normalized(const Quiver& q, int leftNode, int rightNode);
CubeMatrix left_turn_matrix_normalized(const Quiver& q, int centerNode);
CubeMatrix right_turn_matrix_normalized(const Quiver& q, int centerNode);

// checks closure/adjacency of a cyclic turn sequence
void validate_turns(const std::vector<Turn>& turns, const Triangulation& T);

// full monodromy matrix of a closed turn sequence
CubeMatrix loop_monodromy(const std::vector<Turn>& turns, const Triangulation& T,
                          const Quiver& q);
CubeRootPoly loop_trace(const std::vector<Turn>& turns, const Triangulation& T,
                        const Quiver& q);

// the counterclockwise peripheral turn sequence around puncture p
std::vector<Turn> peripheral_turns(const Triangulation& T, int p, bool ccw);

// the three diagonal monomials of the peripheral monodromy around p
std::array<CubeRootPoly, 3> peripheral_functions(const Triangulation& T, const Quiver& q,
                                                 int p);

} // namespace sl3
