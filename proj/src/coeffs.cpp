#include "sl3skein/coeffs.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sl3 {

CoeffPoly CoeffPoly::omega_half_pow(Exp halfUnits, Coef c) {
    CoeffPoly p;
    if (c != 0) p.terms_[halfUnits] = c;
    return p;
}

CoeffPoly CoeffPoly::q_pow_frac(long long num, long long den, Coef c) {
    if (den == 0) throw std::invalid_argument("q exponent with zero denominator");
    long long n = 18 * num;
    if (n % den != 0) throw std::invalid_argument("q exponent outside (1/18)Z");
    return omega_half_pow(static_cast<Exp>(n / den), c);
}

CoeffPoly CoeffPoly::quantum_integer(int n) {
    if (n < 1) throw std::invalid_argument("[n]_q needs n >= 1");
    CoeffPoly r;
    for (int k = 0; k < n; ++k) r += q_pow(n - 1 - 2 * k);
    return r;
}

bool CoeffPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) { return *this += -o; }

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

CoeffPoly CoeffPoly::operator*(const CoeffPoly& o) const {
    CoeffPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            auto& slot = r.terms_[e1 + e2];
            slot += c1 * c2;
            if (slot == 0) r.terms_.erase(e1 + e2);
        }
    return r;
}

CoeffPoly CoeffPoly::shifted(Exp halfUnits) const {
    CoeffPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + halfUnits] = c;
    return r;
}

CoeffPoly CoeffPoly::star() const {
    CoeffPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

double CoeffPoly::eval(double w) const {
    if (!(w > 0)) throw std::invalid_argument("eval needs w > 0");
    double s = 0;
    for (const auto& [e, c] : terms_) s += static_cast<double>(c) * std::pow(w, e);
    return s;
}

CoeffPoly::Coef CoeffPoly::eval_one() const {
    Coef s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string CoeffPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coef a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) { os << a; continue; }
        if (a != 1) os << a << "*";
        // exponent e half-units of omega = q^{e/18}, reduced
        long long num = e, den = 18;
        long long g = std::gcd(num < 0 ? -num : num, den);
        num /= g; den /= g;
        os << "q^";
        if (den == 1) {
            if (num < 0) os << "{" << num << "}";
            else os << num;
        } else {
            os << "{" << num << "/" << den << "}";
        }
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eof() { skip(); return i >= s.size(); }
    char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) { skip(); if (i < s.size() && s[i] == c) { ++i; return true; } return false; }
};

bool parse_int(Cursor& cur, long long& out) {
    cur.skip();
    size_t j = cur.i;
    bool neg = false;
    if (j < cur.s.size() && (cur.s[j] == '-' || cur.s[j] == '+')) { neg = cur.s[j] == '-'; ++j; }
    size_t k = j;
    while (k < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[k]))) ++k;
    if (k == j) return false;
    out = std::stoll(cur.s.substr(j, k - j));
    if (neg) out = -out;
    cur.i = k;
    return true;
}

// q^3, q^{-2/3}, w^{5/2}, w^3
bool parse_power(Cursor& cur, CoeffPoly& out) {
    cur.skip();
    if (cur.i >= cur.s.size()) return false;
    char base = cur.s[cur.i];
    if (base != 'q' && base != 'w') return false;
    ++cur.i;
    long long num = 1, den = 1;
    if (cur.eat('^')) {
        bool braced = cur.eat('{');
        if (!parse_int(cur, num)) return false;
        if (cur.eat('/')) {
            if (!parse_int(cur, den)) return false;
        }
        if (braced && !cur.eat('}')) return false;
    }
    if (base == 'q') {
        out = CoeffPoly::q_pow_frac(num, den);
    } else {
        long long n = 2 * num;
        if (n % den != 0) return false;
        out = CoeffPoly::omega_half_pow(static_cast<CoeffPoly::Exp>(n / den));
    }
    return true;
}

} // namespace

std::optional<CoeffPoly> CoeffPoly::parse(const std::string& text) {
    Cursor cur{text};
    CoeffPoly total;
    bool any = false;
    while (!cur.eof()) {
        long long sign = 1;
        while (true) {
            if (cur.eat('+')) continue;
            if (cur.eat('-')) { sign = -sign; continue; }
            break;
        }
        long long mag = 1;
        bool haveNum = parse_int(cur, mag);
        if (haveNum) cur.eat('*');
        CoeffPoly pw(1);
        char c = cur.peek();
        if (c == 'q' || c == 'w') {
            if (!parse_power(cur, pw)) return std::nullopt;
        } else if (!haveNum) {
            return std::nullopt;
        }
        total += pw * CoeffPoly(sign * mag);
        any = true;
    }
    if (!any) return std::nullopt;
    return total;
}

} // namespace sl3
