#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace sl3 {

// Laurent polynomial over Z in the formal half power w = omega^{1/2},
// with q = omega^9 = w^18. Exponents are stored as integer counts of
// omega^{1/2} units, so q^{a/b} is representable iff 18*a/b is an integer.
class CoeffPoly {
public:
    using Exp = int;          // units of omega^{1/2}
    using Coef = long long;

    CoeffPoly() = default;
    CoeffPoly(Coef c) { if (c != 0) terms_[0] = c; }

    // c * omega^{halfUnits/2}
    static CoeffPoly omega_half_pow(Exp halfUnits, Coef c = 1);
    // c * q^{num/den}; den must divide 18*num exactly
    static CoeffPoly q_pow_frac(long long num, long long den, Coef c = 1);
    static CoeffPoly q_pow(long long n, Coef c = 1) { return q_pow_frac(n, 1, c); }
    // [n]_q = (q^n - q^-n)/(q - q^-1), n >= 1
    static CoeffPoly quantum_integer(int n);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // nonzero single term?
    bool is_monomial() const { return terms_.size() == 1; }
    // the only term, as (half-exponent, coefficient); requires is_monomial()
    std::pair<Exp, Coef> monomial() const { return *terms_.begin(); }

    const std::map<Exp, Coef>& terms() const { return terms_; }

    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    CoeffPoly operator+(const CoeffPoly& o) const { CoeffPoly r = *this; r += o; return r; }
    CoeffPoly operator-(const CoeffPoly& o) const { CoeffPoly r = *this; r -= o; return r; }
    CoeffPoly operator-() const;
    CoeffPoly operator*(const CoeffPoly& o) const;
    CoeffPoly& operator*=(const CoeffPoly& o) { *this = *this * o; return *this; }
    bool operator==(const CoeffPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const CoeffPoly& o) const { return !(*this == o); }

    // shift all exponents by halfUnits of omega^{1/2}
    CoeffPoly shifted(Exp halfUnits) const;

    // exponent-negating involution (omega^{1/2} -> omega^{-1/2})
    CoeffPoly star() const;
    // substitute q -> q^{-1} (omega^{1/2} -> omega^{-1/2}; same as star here)
    CoeffPoly q_inverted() const { return star(); }

    // substitute omega^{1/2} = w (w > 0); w = 1 gives the classical value
    double eval(double w) const;
    // integer classical value at omega^{1/2} = 1
    Coef eval_one() const;

    // "a*q^{p/18} + ..." with reduced fractional q-exponents, terms by
    // increasing exponent; "0" for zero
    std::string str() const;
    // accepts the str() format plus omega-exponent syntax ("w^{p/2}")
    static std::optional<CoeffPoly> parse(const std::string& text);

private:
    std::map<Exp, Coef> terms_;   // no zero coefficients stored
};

} // namespace sl3
