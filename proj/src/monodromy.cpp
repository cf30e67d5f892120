#include "sl3skein/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sl3 {

CubeRootPoly CubeRootPoly::constant(long long c) {
    CubeRootPoly p;
    if (c != 0) p.terms_[{}] = c;
    return p;
}

CubeRootPoly CubeRootPoly::monomial(Exp e, long long c) {
    CubeRootPoly p;
    if (c != 0) {
        std::sort(e.begin(), e.end());
        Exp clean;
        for (auto& [v, k] : e)
            if (k != 0) clean.emplace_back(v, k);
        p.terms_[clean] = c;
    }
    return p;
}

CubeRootPoly CubeRootPoly::var_third(int node, int thirds, long long c) {
    return monomial({{node, thirds}}, c);
}

CubeRootPoly& CubeRootPoly::operator+=(const CubeRootPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) terms_.emplace(e, c);
        else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

CubeRootPoly CubeRootPoly::operator*(const CubeRootPoly& o) const {
    CubeRootPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e;
            size_t i = 0, j = 0;
            while (i < e1.size() || j < e2.size()) {
                if (j >= e2.size() || (i < e1.size() && e1[i].first < e2[j].first)) e.push_back(e1[i++]);
                else if (i >= e1.size() || e2[j].first < e1[i].first) e.push_back(e2[j++]);
                else {
                    int k = e1[i].second + e2[j].second;
                    if (k != 0) e.emplace_back(e1[i].first, k);
                    ++i; ++j;
                }
            }
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) r.terms_.emplace(std::move(e), c1 * c2);
            else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

CubeRootPoly CubeRootPoly::operator-() const {
    CubeRootPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

bool CubeRootPoly::nonnegative_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

double CubeRootPoly::eval(const std::vector<double>& x) const {
    double s = 0;
    for (const auto& [e, c] : terms_) {
        double m = static_cast<double>(c);
        for (const auto& [v, k] : e) m *= std::pow(x[v], k / 3.0);
        s += m;
    }
    return s;
}

std::string CubeRootPoly::str(const Quiver& q) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (const auto& [v, k] : e)
            os << "*X[" << q.node_name(v) << "]^{" << k << "/3}";
    }
    return os.str();
}

namespace {
CubeRootPoly X3(const Quiver&, int v, int thirds) { return CubeRootPoly::var_third(v, thirds); }
}

CubeMatrix edge_segment_matrix(const Quiver& q, int leftNode, int rightNode) {
    CubeMatrix m{};
    m[0][0] = X3(q, leftNode, 1) * X3(q, rightNode, 2);
    m[1][1] = X3(q, leftNode, 1) * X3(q, rightNode, -1);
    m[2][2] = X3(q, leftNode, -2) * X3(q, rightNode, -1);
    return m;
}

CubeMatrix left_turn_matrix(const Quiver& q, int centerNode) {
    auto X = [&](int k) { return X3(q, centerNode, k); };
    CubeMatrix m{};
    m[0][0] = X(2);
    m[0][1] = X(2) + X(-1);
    m[0][2] = X(-1);
    m[1][1] = X(-1);
    m[1][2] = X(-1);
    m[2][2] = X(-1);
    return m;
}

CubeMatrix right_turn_matrix(const Quiver& q, int centerNode) {
    auto X = [&](int k) { return X3(q, centerNode, k); };
    CubeMatrix m{};
    m[0][0] = X(1);
    m[1][0] = X(1);
    m[1][1] = X(1);
    m[2][0] = X(1);
    m[2][1] = X(1) + X(-2);
    m[2][2] = X(-2);
    return m;
}

CubeMatrix uturn_matrix() {
    CubeMatrix m{};
    m[0][2] = CubeRootPoly::constant(1);
    m[1][1] = CubeRootPoly::constant(-1);
    m[2][0] = CubeRootPoly::constant(1);
    return m;
}

CubeMatrix cube_mul(const CubeMatrix& a, const CubeMatrix& b) {
    CubeMatrix r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

CubeRootPoly cube_trace(const CubeMatrix& m) { return m[0][0] + m[1][1] + m[2][2]; }

CubeRootPoly cube_det(const CubeMatrix& m) {
    CubeRootPoly d;
    int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    for (int p = 0; p < 6; ++p) {
        CubeRootPoly term = m[0][perm[p][0]] * m[1][perm[p][1]] * m[2][perm[p][2]];
        d += p < 3 ? term : -term;
    }
    return d;
}

CubeMatrix edge_segment_matrix_normalized(const Quiver& q, int leftNode, int rightNode) {
    CubeMatrix m{};
    m[0][0] = CubeRootPoly::constant(1);
    m[1][1] = X3(q, rightNode, -3);
    m[2][2] = X3(q, leftNode, -3) * X3(q, rightNode, -3);
    return m;
}

CubeMatrix left_turn_matrix_normalized(const Quiver& q, int centerNode) {
    auto X = [&](int k) { return X3(q, centerNode, k); };
    CubeMatrix m{};
    m[0][0] = CubeRootPoly::constant(1);
    m[0][1] = CubeRootPoly::constant(1) + X(-3);
    m[0][2] = X(-3);
    m[1][1] = X(-3);
    m[1][2] = X(-3);
    m[2][2] = X(-3);
    return m;
}

CubeMatrix right_turn_matrix_normalized(const Quiver& q, int centerNode) {
    auto X = [&](int k) { return X3(q, centerNode, k); };
    CubeMatrix m{};
    m[0][0] = CubeRootPoly::constant(1);
    m[1][0] = CubeRootPoly::constant(1);
    m[1][1] = CubeRootPoly::constant(1);
    m[2][0] = CubeRootPoly::constant(1);
    m[2][1] = CubeRootPoly::constant(1) + X(-3);
    m[2][2] = X(-3);
    return m;
}

void validate_turns(const std::vector<Turn>& turns, const Triangulation& T) {
    if (turns.empty()) throw std::invalid_argument("empty turn sequence");
    for (size_t i = 0; i < turns.size(); ++i) {
        const Turn& cur = turns[i];
        const Turn& nxt = turns[(i + 1) % turns.size()];
        if (cur.tri < 0 || cur.tri >= T.num_tris())
            throw std::invalid_argument("turn references unknown triangle");
        int e = T.tri(cur.tri).side[cur.outSlot];
        if (T.edge(e).boundary)
            throw std::invalid_argument("loop exits through boundary edge " + T.edge(e).id);
        auto [rt, rs] = T.other_side(e, cur.tri, cur.outSlot);
        if (rt != nxt.tri || rs != nxt.inSlot)
            throw std::invalid_argument("turn sequence does not close up at step " +
                                        std::to_string(i));
    }
}

CubeMatrix loop_monodromy(const std::vector<Turn>& turns, const Triangulation& T,
                          const Quiver& q) {
    validate_turns(turns, T);
    CubeMatrix m{};
    for (int i = 0; i < 3; ++i) m[i][i] = CubeRootPoly::constant(1);
    for (size_t i = 0; i < turns.size(); ++i) {
        const Turn& cur = turns[i];
        CubeMatrix turnM;
        if (cur.outSlot == (cur.inSlot + 1) % 3)
            turnM = left_turn_matrix(q, q.tri_node(cur.tri));
        else if (cur.outSlot == (cur.inSlot + 2) % 3)
            turnM = right_turn_matrix(q, q.tri_node(cur.tri));
        else
            turnM = uturn_matrix();
        m = cube_mul(m, turnM);
        // crossing out of cur.tri through outSlot: the first clockwise node of
        // that side sits to the left of the crossing direction
        int left = q.side_node(cur.tri, cur.outSlot, 0);
        int right = q.side_node(cur.tri, cur.outSlot, 1);
        m = cube_mul(m, edge_segment_matrix(q, left, right));
    }
    return m;
}

CubeRootPoly loop_trace(const std::vector<Turn>& turns, const Triangulation& T,
                        const Quiver& q) {
    return cube_trace(loop_monodromy(turns, T, q));
}

std::vector<Turn> peripheral_turns(const Triangulation& T, int p, bool ccw) {
    std::vector<Turn> turns;
    const auto& corners = T.puncture_corners(p);
    for (const auto& c : corners)
        turns.push_back({c.tri, c.corner, (c.corner + 1) % 3});
    if (!ccw) {
        std::reverse(turns.begin(), turns.end());
        for (auto& t : turns) std::swap(t.inSlot, t.outSlot);
    }
    return turns;
}

std::array<CubeRootPoly, 3> peripheral_functions(const Triangulation& T, const Quiver& q,
                                                 int p) {
    CubeMatrix m = loop_monodromy(peripheral_turns(T, p, true), T, q);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < i; ++j)
            if (!m[i][j].is_zero())
                throw std::logic_error("peripheral monodromy not upper triangular");
    return {m[0][0], m[1][1], m[2][2]};
}

} // namespace sl3
