#pragma once

#include "sl3skein/surface.hpp"
#include "sl3skein/torus.hpp"

#include <array>
#include <map>
#include <memory>
#include <vector>

namespace sl3 {

// Quantum tori attached to a triangulation: one seven-generator triangle
// algebra per triangle (with the half-unit same-side offsets), their tensor
// product, and the combined-node subalgebra generated by Z_v = Z_{t,v} Z_{r,v}
// at interior edges.
class SplitAlgebra {
public:
    SplitAlgebra(const Triangulation& T, const Quiver& q);

    const Triangulation& tri() const { return *tri_; }
    const Quiver& quiver() const { return *quiver_; }
    const Pairing& tensor_pairing() const { return tensor_; }
    const Pairing& combined_pairing() const { return combined_; }

    // tensor-pairing index of Z_{t,v} for v = v_{e_slot, which+1} of triangle t
    int local_side_node(int t, int slot, int which) const {
        return local_[t][2 * slot + which];
    }
    int local_center(int t) const { return local_[t][6]; }

    // combined-pairing index of a quiver node (same indexing as the quiver)
    int combined_node(int v) const { return v; }

    // Z_v expressed in the tensor algebra (product of local copies)
    TorusElement combined_generator(int v) const;

    // true iff every term has equal exponents on the two local copies of each
    // interior edge node
    bool in_combined_subalgebra(const TorusElement& x) const;
    // rewrite in combined-node coordinates; throws if not in the subalgebra
    TorusElement to_combined(const TorusElement& x) const;
    // (BE1)-(BE3) per triangle on every term of a combined-coordinates element
    bool balanced(const TorusElement& combined) const;

private:
    const Triangulation* tri_;
    const Quiver* quiver_;
    Pairing tensor_;
    Pairing combined_;
    std::vector<std::array<int, 7>> local_;  // per triangle: e0.1,e0.2,e1.1,...,center
};

using TorusMatrix = std::array<std::array<TorusElement, 3>, 3>;
using ScalarMatrix = std::array<std::array<CoeffPoly, 3>, 3>;

TorusMatrix torus_mat_mul(const TorusMatrix& a, const TorusMatrix& b);
TorusMatrix torus_mat_mul(const TorusMatrix& a, const ScalarMatrix& b);
TorusMatrix torus_mat_mul(const ScalarMatrix& a, const TorusMatrix& b);
TorusMatrix torus_transpose(const TorusMatrix& a);

// index-inversion tables and sign weights
int r1_of(int eps);               // {1,2,3} -> {1,1,2}
int r2_of(int eps);               // {1,2,3} -> {2,3,3}
int third_index(int a, int b);    // eps with {r1,r2} = {a,b}, or 0
int g_of(int eps);                // g(1)=g(3)=-1, g(2)=2
int p_of(int eps);                // p(1)=p(3)=1, p(2)=-1

// Local quantum matrices of one triangle, entries in the tensor algebra.
class TriangleMatrices {
public:
    TriangleMatrices(const SplitAlgebra& alg, int t);

    // Weyl-ordered diagonal matrices attached to side slot (out uses the
    // clockwise node order, in the reversed one)
    TorusMatrix edge_out(int slot) const;
    TorusMatrix edge_in(int slot) const;
    // turn matrices with argument omega^{2m} Z_center
    TorusMatrix left(int m = 0) const;
    TorusMatrix right(int m = 0) const;
    TorusMatrix left_tran(int m = 0) const;
    TorusMatrix right_tran(int m = 0) const;

    // omega exponent (in omega units) making the ordered product of edge
    // diagonal entries (slots 1,3,2) Weyl-ordered
    int eta(bool out, int e1, int e2, int e3) const;

    // 3-way tensors: entry (e1,e2,e3), Laurent in Z_center^3
    TorusElement threeway_out(int e1, int e2, int e3) const;
    TorusElement threeway_in(int e1, int e2, int e3) const;

    const SplitAlgebra& algebra() const { return *alg_; }
    int tri_index() const { return t_; }

private:
    const SplitAlgebra* alg_;
    int t_;
    TorusElement zpow(int node, int k, int omegaHalfUnits) const;
};

// constant scalar matrices
ScalarMatrix uturn_matrix_q(bool plus);
ScalarMatrix fork_matrix_q(bool out, bool plus, int eps);
ScalarMatrix twisted_fork_matrix_q(bool out, int eps);

// Multilinear biangle operator: CoeffPoly value per assignment of states in
// {1,2,3} to the left and right strand slots. Sparse, nonzero entries only.
class BOp {
public:
    using Key = std::pair<std::vector<uint8_t>, std::vector<uint8_t>>;

    BOp(int nLeft, int nRight) : nL_(nLeft), nR_(nRight) {}
    static BOp identity(int n);

    int left_arity() const { return nL_; }
    int right_arity() const { return nR_; }
    const std::map<Key, CoeffPoly>& entries() const { return entries_; }
    void set(std::vector<uint8_t> l, std::vector<uint8_t> r, CoeffPoly v);
    CoeffPoly value(const std::vector<uint8_t>& l, const std::vector<uint8_t>& r) const;

    bool operator==(const BOp& o) const;

    // all coefficients under q -> q^{-1}
    BOp q_inverted() const;

    friend BOp compose(const BOp& a, const BOp& b);  // a's right glued to b's left
    friend BOp tensor(const BOp& a, const BOp& b);   // a above b

private:
    int nL_, nR_;
    std::map<Key, CoeffPoly> entries_;
};

// Elementary biangle gadgets. Pair indices are listed top slot first; the
// "+" variants are the ones whose first-listed endpoint has the higher
// elevation.
enum class CrossFamily {
    Parallel = 1,     // both strands oriented the same way
    AntiIn = 2,       // opposite strands, variant with the incoming pair on top
    AntiOut = 3,      // opposite strands, the other pattern
};

BOp b_strand();
BOp b_fork_split(bool out, bool plus);   // 1 -> 2
BOp b_fork_join(bool out, bool plus);    // 2 -> 1
BOp b_cap(bool plus);                    // 2 -> 0
BOp b_cup(bool plus);                    // 0 -> 2
BOp b_crossing(CrossFamily f, bool inverse);
BOp b_hweb(bool plus);
BOp b_iweb(bool plus);

// 9x9 reference tables (rows (x1,x2), columns (y1,y2), basis 11,12,...,33)
using Table9 = std::array<std::array<CoeffPoly, 9>, 9>;
Table9 table_I(bool plus);
Table9 table_H(bool plus);
Table9 table_C(bool plus);  // plus = parallel family, minus = antiparallel family

// endpoint charges of one boundary side: counts n[orientation][state]
struct SideCounts {
    // n[0][e] = outbound strands with state e+1, n[1][e] = inbound
    std::array<std::array<int, 3>, 2> n{};
};
int charge1(const SideCounts& s);
int charge2(const SideCounts& s);
int charge3(const SideCounts& s);
int charge4(const SideCounts& s);

} // namespace sl3
