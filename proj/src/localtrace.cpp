#include "sl3skein/localtrace.hpp"

#include <stdexcept>

namespace sl3 {

namespace {
CoeffPoly W(int halfUnits, long long c = 1) { return CoeffPoly::omega_half_pow(halfUnits, c); }
CoeffPoly Q(long long num, long long den = 1, long long c = 1) {
    return CoeffPoly::q_pow_frac(num, den, c);
}
} // namespace

SplitAlgebra::SplitAlgebra(const Triangulation& T, const Quiver& q)
    : tri_(&T), quiver_(&q), tensor_({}), combined_({}) {
    std::vector<std::string> tensorNames;
    local_.resize(T.num_tris());
    for (int t = 0; t < T.num_tris(); ++t) {
        for (int slot = 0; slot < 3; ++slot)
            for (int which = 0; which < 2; ++which) {
                local_[t][2 * slot + which] = static_cast<int>(tensorNames.size());
                tensorNames.push_back(T.tri(t).id + "|" +
                                      q.node_name(q.side_node(t, slot, which)));
            }
        local_[t][6] = static_cast<int>(tensorNames.size());
        tensorNames.push_back(T.tri(t).id + "|" + T.tri(t).id);
    }
    tensor_ = Pairing(tensorNames);
    // per-triangle commutation: half units on same-side pairs, corner cycles
    for (int t = 0; t < T.num_tris(); ++t) {
        for (int slot = 0; slot < 3; ++slot)
            tensor_.set_twice_eps_hat(local_side_node(t, slot, 0),
                                      local_side_node(t, slot, 1), 1);
        for (int a = 0; a < 3; ++a) {
            int first = local_side_node(t, a, 0);
            int second = local_side_node(t, (a + 2) % 3, 1);
            tensor_.set_twice_eps_hat(local_center(t), first, 2);
            tensor_.set_twice_eps_hat(first, second, 2);
            tensor_.set_twice_eps_hat(second, local_center(t), 2);
        }
    }

    std::vector<std::string> combinedNames;
    for (int v = 0; v < q.num_nodes(); ++v) combinedNames.push_back(q.node_name(v));
    combined_ = Pairing(combinedNames);
    for (int v = 0; v < q.num_nodes(); ++v)
        for (int w = v + 1; w < q.num_nodes(); ++w)
            combined_.set_twice_eps_hat(v, w, q.twice_eps_hat(v, w));
}

TorusElement SplitAlgebra::combined_generator(int v) const {
    const Quiver& q = *quiver_;
    ExpVec a;
    for (int t = 0; t < tri_->num_tris(); ++t)
        for (int slot = 0; slot < 3; ++slot)
            for (int which = 0; which < 2; ++which)
                if (q.side_node(t, slot, which) == v)
                    a.add(local_side_node(t, slot, which), 1);
    for (int t = 0; t < tri_->num_tris(); ++t)
        if (q.tri_node(t) == v) a.add(local_center(t), 1);
    return TorusElement::monomial(&tensor_, a, CoeffPoly(1));
}

bool SplitAlgebra::in_combined_subalgebra(const TorusElement& x) const {
    const Quiver& q = *quiver_;
    for (const auto& [a, c] : x.terms()) {
        for (int e = 0; e < tri_->num_edges(); ++e) {
            if (tri_->edge(e).boundary) continue;
            auto [t, s] = tri_->edge(e).inc[0];
            auto [r, u] = tri_->edge(e).inc[1];
            for (int which = 0; which < 2; ++which) {
                int v = q.edge_node(e, which);
                int lt = -1, lr = -1;
                for (int w = 0; w < 2; ++w) {
                    if (q.side_node(t, s, w) == v) lt = local_side_node(t, s, w);
                    if (q.side_node(r, u, w) == v) lr = local_side_node(r, u, w);
                }
                if (a.get(lt) != a.get(lr)) return false;
            }
        }
    }
    return true;
}

TorusElement SplitAlgebra::to_combined(const TorusElement& x) const {
    if (!in_combined_subalgebra(x))
        throw std::invalid_argument("element is not in the combined-node subalgebra");
    const Quiver& q = *quiver_;
    TorusElement out(&combined_);
    for (const auto& [a, c] : x.terms()) {
        ExpVec b;
        for (int t = 0; t < tri_->num_tris(); ++t) {
            b.add(q.tri_node(t), a.get(local_center(t)));
            for (int slot = 0; slot < 3; ++slot)
                for (int which = 0; which < 2; ++which) {
                    // interior edge nodes have two local copies; count once
                    if (!q.side_is_primary(t, slot)) continue;
                    b.add(q.side_node(t, slot, which),
                          a.get(local_side_node(t, slot, which)));
                }
        }
        out += TorusElement::monomial(&combined_, b, c);
    }
    return out;
}

bool SplitAlgebra::balanced(const TorusElement& combined) const {
    const Quiver& q = *quiver_;
    for (const auto& [a, c] : combined.terms()) {
        for (int t = 0; t < tri_->num_tris(); ++t) {
            long long s1 = 0, s2 = 0;
            for (int s = 0; s < 3; ++s) {
                int n1 = a.get(q.side_node(t, s, 0)), n2 = a.get(q.side_node(t, s, 1));
                s1 += n1;
                s2 += n2;
                if ((n1 + n2) % 3 != 0) return false;
            }
            if (s1 % 3 != 0 || s2 % 3 != 0) return false;
            for (int s = 0; s < 3; ++s) {
                long long x = -static_cast<long long>(a.get(q.tri_node(t))) +
                              a.get(q.side_node(t, s, 1)) +
                              a.get(q.side_node(t, (s + 1) % 3, 0));
                if (x % 3 != 0) return false;
            }
        }
    }
    return true;
}

TorusMatrix torus_mat_mul(const TorusMatrix& a, const TorusMatrix& b) {
    TorusMatrix r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

TorusMatrix torus_mat_mul(const TorusMatrix& a, const ScalarMatrix& b) {
    TorusMatrix r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
    return r;
}

TorusMatrix torus_mat_mul(const ScalarMatrix& a, const TorusMatrix& b) {
    TorusMatrix r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] += b[k][j] * a[i][k];
    return r;
}

TorusMatrix torus_transpose(const TorusMatrix& a) {
    TorusMatrix r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

int r1_of(int eps) { return eps == 3 ? 2 : 1; }
int r2_of(int eps) { return eps == 1 ? 2 : 3; }
int third_index(int a, int b) {
    for (int e = 1; e <= 3; ++e)
        if ((r1_of(e) == a && r2_of(e) == b) || (r1_of(e) == b && r2_of(e) == a)) return e;
    return 0;
}
int g_of(int eps) { return eps == 2 ? 2 : -1; }
int p_of(int eps) { return eps == 2 ? -1 : 1; }

TriangleMatrices::TriangleMatrices(const SplitAlgebra& alg, int t) : alg_(&alg), t_(t) {}

TorusElement TriangleMatrices::zpow(int node, int k, int omegaHalfUnits) const {
    ExpVec a;
    a.add(node, k);
    return TorusElement::monomial(&alg_->tensor_pairing(), a, W(omegaHalfUnits));
}

TorusMatrix TriangleMatrices::edge_out(int slot) const {
    int n1 = alg_->local_side_node(t_, slot, 0);
    int n2 = alg_->local_side_node(t_, slot, 1);
    const Pairing* p = &alg_->tensor_pairing();
    TorusMatrix m{};
    m[0][0] = TorusElement::monomial(p, ExpVec({{n1, 1}, {n2, 2}}), CoeffPoly(1));
    m[1][1] = TorusElement::monomial(p, ExpVec({{n1, 1}, {n2, -1}}), CoeffPoly(1));
    m[2][2] = TorusElement::monomial(p, ExpVec({{n1, -2}, {n2, -1}}), CoeffPoly(1));
    return m;
}

TorusMatrix TriangleMatrices::edge_in(int slot) const {
    int n1 = alg_->local_side_node(t_, slot, 0);
    int n2 = alg_->local_side_node(t_, slot, 1);
    const Pairing* p = &alg_->tensor_pairing();
    TorusMatrix m{};
    m[0][0] = TorusElement::monomial(p, ExpVec({{n2, 1}, {n1, 2}}), CoeffPoly(1));
    m[1][1] = TorusElement::monomial(p, ExpVec({{n2, 1}, {n1, -1}}), CoeffPoly(1));
    m[2][2] = TorusElement::monomial(p, ExpVec({{n2, -2}, {n1, -1}}), CoeffPoly(1));
    return m;
}

TorusMatrix TriangleMatrices::left(int m) const {
    int z = alg_->local_center(t_);
    TorusMatrix r{};
    auto Z = [&](int w, int k) { return zpow(z, k, 2 * w + 4 * m * k); };
    r[0][0] = Z(5, 2);
    r[0][1] = Z(-1, 2) + Z(2, -1);
    r[0][2] = Z(-4, -1);
    r[1][1] = Z(5, -1);
    r[1][2] = Z(-1, -1);
    r[2][2] = Z(2, -1);
    return r;
}

TorusMatrix TriangleMatrices::right(int m) const {
    int z = alg_->local_center(t_);
    TorusMatrix r{};
    auto Z = [&](int w, int k) { return zpow(z, k, 2 * w + 4 * m * k); };
    r[0][0] = Z(-2, 1);
    r[1][0] = Z(1, 1);
    r[1][1] = Z(-5, 1);
    r[2][0] = Z(4, 1);
    r[2][1] = Z(-2, 1) + Z(1, -2);
    r[2][2] = Z(-5, -2);
    return r;
}

TorusMatrix TriangleMatrices::left_tran(int m) const {
    int z = alg_->local_center(t_);
    TorusMatrix r{};
    auto Z = [&](int w, int k) { return zpow(z, k, 2 * w + 4 * m * k); };
    r[0][0] = Z(-5, 2);
    r[1][0] = Z(1, 2) + Z(-2, -1);
    r[1][1] = Z(-5, -1);
    r[2][0] = Z(4, -1);
    r[2][1] = Z(1, -1);
    r[2][2] = Z(-2, -1);
    return r;
}

TorusMatrix TriangleMatrices::right_tran(int m) const {
    int z = alg_->local_center(t_);
    TorusMatrix r{};
    auto Z = [&](int w, int k) { return zpow(z, k, 2 * w + 4 * m * k); };
    r[0][0] = Z(2, 1);
    r[0][1] = Z(-1, 1);
    r[0][2] = Z(-4, 1);
    r[1][1] = Z(5, 1);
    r[1][2] = Z(2, 1) + Z(-1, -2);
    r[2][2] = Z(5, -2);
    return r;
}

int TriangleMatrices::eta(bool out, int e1, int e2, int e3) const {
    TorusMatrix m1 = out ? edge_out(0) : edge_in(0);
    TorusMatrix m3 = out ? edge_out(2) : edge_in(2);
    TorusMatrix m2 = out ? edge_out(1) : edge_in(1);
    TorusElement prod = m1[e1 - 1][e1 - 1] * m3[e3 - 1][e3 - 1] * m2[e2 - 1][e2 - 1];
    const auto& [a, c] = *prod.terms().begin();
    auto [halfExp, coef] = c.monomial();
    if (halfExp % 2 != 0 || coef != 1)
        throw std::logic_error("eta normalization is not an omega power");
    return halfExp / 2;
}

TorusElement TriangleMatrices::threeway_out(int e1, int e2, int e3) const {
    ScalarMatrix F = twisted_fork_matrix_q(true, e3);
    TorusMatrix L = left_tran(g_of(e2) + g_of(e3));
    TorusMatrix R = right(g_of(e2));
    TorusElement sum(&alg_->tensor_pairing());
    for (int e4 = 0; e4 < 3; ++e4)
        for (int e5 = 0; e5 < 3; ++e5)
            sum += L[e1 - 1][e4] * F[e4][e5] * R[e5][e2 - 1];
    return sum * W(2 * eta(true, e1, e2, e3));
}

TorusElement TriangleMatrices::threeway_in(int e1, int e2, int e3) const {
    ScalarMatrix F = twisted_fork_matrix_q(false, e3);
    TorusMatrix R = right(-g_of(e2) - g_of(e3));
    TorusMatrix L = left_tran(-g_of(e2));
    TorusElement sum(&alg_->tensor_pairing());
    for (int e4 = 0; e4 < 3; ++e4)
        for (int e5 = 0; e5 < 3; ++e5)
            sum += R[e1 - 1][e4] * F[e4][e5] * L[e5][e2 - 1];
    return sum * W(2 * eta(false, e1, e2, e3));
}

ScalarMatrix uturn_matrix_q(bool plus) {
    ScalarMatrix m{};
    int s = plus ? 1 : -1;
    m[0][2] = Q(7 * s, 3);
    m[1][1] = Q(4 * s, 3, -1);
    m[2][0] = Q(s, 3);
    return m;
}

ScalarMatrix fork_matrix_q(bool out, bool plus, int eps) {
    (void)out;  // the plain fork values do not depend on the orientation
    ScalarMatrix m{};
    int r1 = r1_of(eps) - 1, r2 = r2_of(eps) - 1;
    if (plus) {
        m[r1][r2] = W(3);
        m[r2][r1] = W(21, -1);
    } else {
        m[r1][r2] = W(-3);
        m[r2][r1] = W(-21, -1);
    }
    return m;
}

ScalarMatrix twisted_fork_matrix_q(bool out, int eps) {
    ScalarMatrix f = fork_matrix_q(out, true, eps);
    ScalarMatrix m{};
    int p = p_of(eps);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (f[i][j].is_zero()) continue;
            bool upper = i <= j;
            int s = (out == upper) ? 3 * p : -3 * p;
            m[i][j] = f[i][j] * W(s);
        }
    return m;
}

BOp BOp::identity(int n) {
    BOp op(n, n);
    if (n == 0) {
        op.set({}, {}, CoeffPoly(1));
        return op;
    }
    std::vector<uint8_t> states(n, 1);
    while (true) {
        op.set(states, states, CoeffPoly(1));
        int i = 0;
        while (i < n && states[i] == 3) states[i++] = 1;
        if (i == n) break;
        ++states[i];
    }
    return op;
}

void BOp::set(std::vector<uint8_t> l, std::vector<uint8_t> r, CoeffPoly v) {
    if (static_cast<int>(l.size()) != nL_ || static_cast<int>(r.size()) != nR_)
        throw std::invalid_argument("BOp entry arity mismatch");
    if (v.is_zero()) return;
    entries_[{std::move(l), std::move(r)}] = std::move(v);
}

CoeffPoly BOp::value(const std::vector<uint8_t>& l, const std::vector<uint8_t>& r) const {
    auto it = entries_.find({l, r});
    return it == entries_.end() ? CoeffPoly() : it->second;
}

bool BOp::operator==(const BOp& o) const {
    return nL_ == o.nL_ && nR_ == o.nR_ && entries_ == o.entries_;
}

BOp BOp::q_inverted() const {
    BOp r(nL_, nR_);
    for (const auto& [k, v] : entries_) r.entries_[k] = v.q_inverted();
    return r;
}

BOp compose(const BOp& a, const BOp& b) {
    if (a.nR_ != b.nL_) throw std::invalid_argument("BOp composition arity mismatch");
    BOp r(a.nL_, b.nR_);
    for (const auto& [ka, va] : a.entries_)
        for (const auto& [kb, vb] : b.entries_) {
            if (ka.second != kb.first) continue;
            auto key = std::make_pair(ka.first, kb.second);
            CoeffPoly add = va * vb;
            auto it = r.entries_.find(key);
            if (it == r.entries_.end()) {
                if (!add.is_zero()) r.entries_.emplace(std::move(key), std::move(add));
            } else {
                it->second += add;
                if (it->second.is_zero()) r.entries_.erase(it);
            }
        }
    return r;
}

BOp tensor(const BOp& a, const BOp& b) {
    BOp r(a.nL_ + b.nL_, a.nR_ + b.nR_);
    for (const auto& [ka, va] : a.entries_)
        for (const auto& [kb, vb] : b.entries_) {
            std::vector<uint8_t> l = ka.first;
            l.insert(l.end(), kb.first.begin(), kb.first.end());
            std::vector<uint8_t> rr = ka.second;
            rr.insert(rr.end(), kb.second.begin(), kb.second.end());
            CoeffPoly v = va * vb;
            if (!v.is_zero()) r.entries_[{std::move(l), std::move(rr)}] = std::move(v);
        }
    return r;
}

BOp b_strand() { return BOp::identity(1); }

BOp b_fork_split(bool out, bool plus) {
    BOp op(1, 2);
    for (int eps = 1; eps <= 3; ++eps) {
        ScalarMatrix f = fork_matrix_q(out, plus, eps);
        for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d)
                if (!f[c][d].is_zero())
                    op.set({static_cast<uint8_t>(eps)},
                           {static_cast<uint8_t>(c + 1), static_cast<uint8_t>(d + 1)},
                           f[c][d]);
    }
    return op;
}

BOp b_fork_join(bool out, bool plus) {
    // pairs on the left wall read the 3x3 tables with reversed indices
    BOp op(2, 1);
    for (int eps = 1; eps <= 3; ++eps) {
        ScalarMatrix f = fork_matrix_q(out, plus, eps);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (!f[b][a].is_zero())
                    op.set({static_cast<uint8_t>(a + 1), static_cast<uint8_t>(b + 1)},
                           {static_cast<uint8_t>(eps)}, f[b][a]);
    }
    return op;
}

BOp b_cap(bool plus) {
    BOp op(2, 0);
    ScalarMatrix u = uturn_matrix_q(plus);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (!u[a][b].is_zero())
                op.set({static_cast<uint8_t>(a + 1), static_cast<uint8_t>(b + 1)}, {},
                       u[a][b]);
    return op;
}

BOp b_cup(bool plus) {
    BOp op(0, 2);
    ScalarMatrix u = uturn_matrix_q(plus);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (!u[b][a].is_zero())
                op.set({}, {static_cast<uint8_t>(a + 1), static_cast<uint8_t>(b + 1)},
                       u[b][a]);
    return op;
}

namespace {

int pairIndex(int a, int b) { return 3 * (a - 1) + (b - 1); }

BOp table_to_op(const Table9& t) {
    BOp op(2, 2);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                for (int d = 1; d <= 3; ++d) {
                    const CoeffPoly& v = t[pairIndex(a, b)][pairIndex(c, d)];
                    if (!v.is_zero())
                        op.set({static_cast<uint8_t>(a), static_cast<uint8_t>(b)},
                               {static_cast<uint8_t>(c), static_cast<uint8_t>(d)}, v);
                }
    return op;
}

} // namespace

Table9 table_I(bool plus) {
    Table9 t{};
    auto E = [&](int a, int b, int c, int d, CoeffPoly v) {
        t[pairIndex(a, b)][pairIndex(c, d)] = std::move(v);
    };
    CoeffPoly qm = plus ? Q(-1) : Q(1);
    CoeffPoly qp = plus ? Q(1) : Q(-1);
    E(1, 2, 1, 2, -qm);
    E(1, 2, 2, 1, CoeffPoly(1));
    E(1, 3, 1, 3, -qm);
    E(1, 3, 3, 1, CoeffPoly(1));
    E(2, 1, 1, 2, CoeffPoly(1));
    E(2, 1, 2, 1, -qp);
    E(2, 3, 2, 3, -qm);
    E(2, 3, 3, 2, CoeffPoly(1));
    E(3, 1, 1, 3, CoeffPoly(1));
    E(3, 1, 3, 1, -qp);
    E(3, 2, 2, 3, CoeffPoly(1));
    E(3, 2, 3, 2, -qp);
    return t;
}

Table9 table_H(bool plus) {
    Table9 t{};
    auto E = [&](int a, int b, int c, int d, CoeffPoly v) {
        t[pairIndex(a, b)][pairIndex(c, d)] = std::move(v);
    };
    CoeffPoly qm = plus ? Q(-1) : Q(1);
    CoeffPoly qp = plus ? Q(1) : Q(-1);
    E(1, 1, 1, 1, CoeffPoly(1));
    E(1, 2, 2, 1, CoeffPoly(1));
    E(1, 3, 1, 3, -qm);
    E(1, 3, 2, 2, CoeffPoly(1));
    E(2, 1, 1, 2, CoeffPoly(1));
    E(2, 2, 1, 3, CoeffPoly(1));
    E(2, 2, 3, 1, CoeffPoly(1));
    E(2, 3, 3, 2, CoeffPoly(1));
    E(3, 1, 2, 2, CoeffPoly(1));
    E(3, 1, 3, 1, -qp);
    E(3, 2, 2, 3, CoeffPoly(1));
    E(3, 3, 3, 3, CoeffPoly(1));
    return t;
}

Table9 table_C(bool plus) {
    Table9 t{};
    auto E = [&](int a, int b, int c, int d, CoeffPoly v) {
        t[pairIndex(a, b)][pairIndex(c, d)] = std::move(v);
    };
    if (plus) {
        for (int a = 1; a <= 3; ++a) E(a, a, a, a, Q(-2, 3));
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                if (a != b) E(a, b, a, b, Q(1, 3));
        E(1, 2, 2, 1, Q(-2, 3) - Q(4, 3));
        E(1, 3, 3, 1, Q(-2, 3) - Q(4, 3));
        E(2, 3, 3, 2, Q(-2, 3) - Q(4, 3));
    } else {
        E(1, 1, 1, 1, Q(-1, 3));
        E(1, 2, 1, 2, Q(-1, 3));
        E(2, 1, 2, 1, Q(-1, 3));
        E(2, 3, 2, 3, Q(-1, 3));
        E(3, 2, 3, 2, Q(-1, 3));
        E(3, 3, 3, 3, Q(-1, 3));
        E(1, 3, 2, 2, Q(-1, 3) - Q(5, 3));
        E(2, 2, 3, 1, Q(-1, 3) - Q(5, 3));
        E(1, 3, 1, 3, Q(2, 3));
        E(2, 2, 2, 2, Q(2, 3));
        E(3, 1, 3, 1, Q(2, 3));
        E(1, 3, 3, 1, Q(8, 3) - Q(2, 3));
    }
    return t;
}

BOp b_crossing(CrossFamily f, bool inverse) {
    BOp op = table_to_op(table_C(f == CrossFamily::Parallel));
    return inverse ? op.q_inverted() : op;
}

BOp b_hweb(bool plus) { return table_to_op(table_H(plus)); }
BOp b_iweb(bool plus) { return table_to_op(table_I(plus)); }

int charge1(const SideCounts& s) {
    return s.n[0][0] - s.n[0][2] + s.n[1][0] - s.n[1][2];
}
int charge2(const SideCounts& s) {
    return s.n[0][0] - 2 * s.n[0][1] + s.n[0][2] - s.n[1][0] + 2 * s.n[1][1] - s.n[1][2];
}
int charge3(const SideCounts& s) {
    return s.n[0][0] + s.n[0][1] - 2 * s.n[0][2] + 2 * s.n[1][0] - s.n[1][1] - s.n[1][2];
}
int charge4(const SideCounts& s) {
    return 2 * s.n[0][0] - s.n[0][1] - s.n[0][2] + s.n[1][0] + s.n[1][1] - 2 * s.n[1][2];
}

} // namespace sl3
