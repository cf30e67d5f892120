#pragma once

#include "sl3skein/coeffs.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sl3 {

// Sparse integer exponent vector over node ids, sorted by node, no zeros.
class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(std::vector<std::pair<int, int>> entries);

    int get(int node) const;
    void add(int node, int delta);
    bool empty() const { return e_.empty(); }
    const std::vector<std::pair<int, int>>& entries() const { return e_; }

    ExpVec operator+(const ExpVec& o) const;
    ExpVec operator-() const;
    bool operator==(const ExpVec& o) const { return e_ == o.e_; }
    bool operator<(const ExpVec& o) const { return e_ < o.e_; }
    // componentwise comparison; nullopt if incomparable, else -1/0/+1
    std::optional<int> compare(const ExpVec& o) const;
    bool congruent_mod3(const ExpVec& o) const;

private:
    std::vector<std::pair<int, int>> e_;
};

// Antisymmetric half-integer commutation pairing: Z_v Z_w = w^{2eh(v,w)} Z_w Z_v,
// stored as the integer matrix 2*eh.
class Pairing {
public:
    explicit Pairing(std::vector<std::string> nodeNames);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    int index(const std::string& name) const;

    void set_twice_eps_hat(int v, int w, int value); // sets (v,w) and -(w,v)
    int twice_eps_hat(int v, int w) const { return m_[v][w]; }

    // sum over entries of 2*eh(v,w) a_v b_w, in omega^{1/2} units
    long long twist(const ExpVec& a, const ExpVec& b) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int> byName_;
    std::vector<std::vector<int>> m_;
};

// Finite sum of Weyl-ordered monomials coeff * [Z^a]_Weyl over a fixed pairing.
class TorusElement {
public:
    TorusElement() : pairing_(nullptr) {}
    explicit TorusElement(const Pairing* p) : pairing_(p) {}
    static TorusElement unit(const Pairing* p) { return monomial(p, ExpVec{}, CoeffPoly(1)); }
    static TorusElement monomial(const Pairing* p, ExpVec a, CoeffPoly c);
    // scalar * Z_{w_1}^{k_1} ... Z_{w_n}^{k_n} normal-ordered into c*[Z^a]_Weyl
    static TorusElement of_word(const Pairing* p,
                                const std::vector<std::pair<int, int>>& word,
                                CoeffPoly scalar = CoeffPoly(1));

    const Pairing* pairing() const { return pairing_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExpVec, CoeffPoly>& terms() const { return terms_; }
    CoeffPoly coeff(const ExpVec& a) const;

    TorusElement& operator+=(const TorusElement& o);
    TorusElement operator+(const TorusElement& o) const { TorusElement r = *this; r += o; return r; }
    TorusElement operator-() const;
    TorusElement operator-(const TorusElement& o) const { return *this + (-o); }
    // Weyl product: [Z^a]_W [Z^b]_W = w^{<a,b>} [Z^{a+b}]_W, extended bilinearly
    TorusElement operator*(const TorusElement& o) const;
    TorusElement operator*(const CoeffPoly& c) const;
    bool operator==(const TorusElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TorusElement& o) const { return !(*this == o); }

    // star on coefficients; Weyl monomials themselves are star-fixed
    TorusElement star() const;
    // every coefficient evaluated at omega^{1/2} = 1
    TorusElement classical() const;
    bool is_classical() const;
    // substitute Z_v = values[v]; all values > 0
    double eval(const std::vector<double>& values) const;

    // unique componentwise-maximal term, if it dominates all others
    std::optional<std::pair<ExpVec, CoeffPoly>> highest_term() const;
    // all exponent vectors pairwise congruent componentwise mod 3
    bool congruent_mod3() const;

    // terms sorted lexicographically by exponent vector; Weyl bracket implied
    std::string str() const;

private:
    const Pairing* pairing_;
    std::map<ExpVec, CoeffPoly> terms_;  // no zero coefficients
};

} // namespace sl3
