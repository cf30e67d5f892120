#include "sl3skein/torus.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sl3 {

ExpVec::ExpVec(std::vector<std::pair<int, int>> entries) {
    std::sort(entries.begin(), entries.end());
    for (auto& [v, k] : entries) {
        if (k == 0) continue;
        if (!e_.empty() && e_.back().first == v) throw std::invalid_argument("duplicate node in ExpVec");
        e_.emplace_back(v, k);
    }
}

int ExpVec::get(int node) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), std::make_pair(node, INT_MIN));
    if (it != e_.end() && it->first == node) return it->second;
    return 0;
}

void ExpVec::add(int node, int delta) {
    if (delta == 0) return;
    auto it = std::lower_bound(e_.begin(), e_.end(), std::make_pair(node, INT_MIN));
    if (it != e_.end() && it->first == node) {
        it->second += delta;
        if (it->second == 0) e_.erase(it);
    } else {
        e_.insert(it, {node, delta});
    }
}

ExpVec ExpVec::operator+(const ExpVec& o) const {
    ExpVec r = *this;
    for (const auto& [v, k] : o.e_) r.add(v, k);
    return r;
}

ExpVec ExpVec::operator-() const {
    ExpVec r = *this;
    for (auto& [v, k] : r.e_) k = -k;
    return r;
}

std::optional<int> ExpVec::compare(const ExpVec& o) const {
    bool le = true, ge = true;
    size_t i = 0, j = 0;
    auto note = [&](int a, int b) {
        if (a < b) ge = false;
        if (a > b) le = false;
    };
    while (i < e_.size() || j < o.e_.size()) {
        if (j >= o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
            note(e_[i].second, 0); ++i;
        } else if (i >= e_.size() || o.e_[j].first < e_[i].first) {
            note(0, o.e_[j].second); ++j;
        } else {
            note(e_[i].second, o.e_[j].second); ++i; ++j;
        }
    }
    if (le && ge) return 0;
    if (ge) return 1;
    if (le) return -1;
    return std::nullopt;
}

bool ExpVec::congruent_mod3(const ExpVec& o) const {
    size_t i = 0, j = 0;
    auto ok = [](int a, int b) { return (a - b) % 3 == 0; };
    while (i < e_.size() || j < o.e_.size()) {
        if (j >= o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
            if (!ok(e_[i].second, 0)) return false;
            ++i;
        } else if (i >= e_.size() || o.e_[j].first < e_[i].first) {
            if (!ok(0, o.e_[j].second)) return false;
            ++j;
        } else {
            if (!ok(e_[i].second, o.e_[j].second)) return false;
            ++i; ++j;
        }
    }
    return true;
}

Pairing::Pairing(std::vector<std::string> nodeNames) : names_(std::move(nodeNames)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (!byName_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate node name: " + names_[i]);
    }
    m_.assign(names_.size(), std::vector<int>(names_.size(), 0));
}

int Pairing::index(const std::string& name) const {
    auto it = byName_.find(name);
    if (it == byName_.end()) throw std::out_of_range("unknown node: " + name);
    return it->second;
}

void Pairing::set_twice_eps_hat(int v, int w, int value) {
    if (v == w && value != 0) throw std::invalid_argument("pairing diagonal must be zero");
    m_[v][w] = value;
    m_[w][v] = -value;
}

long long Pairing::twist(const ExpVec& a, const ExpVec& b) const {
    long long s = 0;
    for (const auto& [v, av] : a.entries())
        for (const auto& [w, bw] : b.entries())
            s += static_cast<long long>(m_[v][w]) * av * bw;
    return s;
}

TorusElement TorusElement::monomial(const Pairing* p, ExpVec a, CoeffPoly c) {
    TorusElement r(p);
    if (!c.is_zero()) r.terms_.emplace(std::move(a), std::move(c));
    return r;
}

TorusElement TorusElement::of_word(const Pairing* p,
                                   const std::vector<std::pair<int, int>>& word,
                                   CoeffPoly scalar) {
    // scalar * prod_i Z_{w_i}^{k_i} = scalar * w^{sum_{i<j} eh(w_i,w_j) k_i k_j} [Z^a]_Weyl
    long long twistHalf = 0;  // in units of omega^{1/2}
    ExpVec a;
    for (size_t j = 0; j < word.size(); ++j) {
        for (size_t i = 0; i < j; ++i)
            twistHalf += static_cast<long long>(p->twice_eps_hat(word[i].first, word[j].first)) *
                         word[i].second * word[j].second;
        a.add(word[j].first, word[j].second);
    }
    return monomial(p, a, scalar.shifted(static_cast<CoeffPoly::Exp>(twistHalf)));
}

CoeffPoly TorusElement::coeff(const ExpVec& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? CoeffPoly() : it->second;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    if (!pairing_) pairing_ = o.pairing_;
    else if (o.pairing_ && o.pairing_ != pairing_) throw std::invalid_argument("pairing mismatch");
    for (const auto& [a, c] : o.terms_) {
        auto it = terms_.find(a);
        if (it == terms_.end()) {
            terms_.emplace(a, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

TorusElement TorusElement::operator-() const {
    TorusElement r(pairing_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
    return r;
}

TorusElement TorusElement::operator*(const TorusElement& o) const {
    if (pairing_ && o.pairing_ && pairing_ != o.pairing_)
        throw std::invalid_argument("pairing mismatch");
    const Pairing* p = pairing_ ? pairing_ : o.pairing_;
    TorusElement r(p);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) {
            CoeffPoly c = (ca * cb).shifted(static_cast<CoeffPoly::Exp>(p->twist(a, b)));
            ExpVec ab = a + b;
            auto it = r.terms_.find(ab);
            if (it == r.terms_.end()) r.terms_.emplace(std::move(ab), std::move(c));
            else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

TorusElement TorusElement::operator*(const CoeffPoly& c) const {
    TorusElement r(pairing_);
    if (c.is_zero()) return r;
    for (const auto& [a, ca] : terms_) {
        CoeffPoly x = ca * c;
        if (!x.is_zero()) r.terms_.emplace(a, std::move(x));
    }
    return r;
}

TorusElement TorusElement::star() const {
    TorusElement r(pairing_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, c.star());
    return r;
}

TorusElement TorusElement::classical() const {
    TorusElement r(pairing_);
    for (const auto& [a, c] : terms_) {
        CoeffPoly x(c.eval_one());
        if (!x.is_zero()) r.terms_.emplace(a, std::move(x));
    }
    return r;
}

bool TorusElement::is_classical() const {
    for (const auto& [a, c] : terms_)
        if (c.terms().size() != 1 || c.terms().begin()->first != 0) return false;
    return true;
}

double TorusElement::eval(const std::vector<double>& values) const {
    double s = 0;
    for (const auto& [a, c] : terms_) {
        double m = c.eval(1.0);
        for (const auto& [v, k] : a.entries()) {
            if (!(values[v] > 0)) throw std::invalid_argument("eval needs positive values");
            m *= std::pow(values[v], k);
        }
        s += m;
    }
    return s;
}

std::optional<std::pair<ExpVec, CoeffPoly>> TorusElement::highest_term() const {
    if (terms_.empty()) throw std::invalid_argument("highest_term of zero element");
    const ExpVec* best = &terms_.begin()->first;
    for (const auto& [a, c] : terms_) {
        auto cmp = a.compare(*best);
        if (cmp && *cmp > 0) best = &a;
    }
    for (const auto& [a, c] : terms_) {
        if (a == *best) continue;
        auto cmp = best->compare(a);
        if (!cmp || *cmp <= 0) return std::nullopt;
    }
    return std::make_pair(*best, terms_.at(*best));
}

bool TorusElement::congruent_mod3() const {
    if (terms_.empty()) return true;
    const ExpVec& first = terms_.begin()->first;
    for (const auto& [a, c] : terms_)
        if (!first.congruent_mod3(a)) return false;
    return true;
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool firstTerm = true;
    for (const auto& [a, c] : terms_) {
        if (!firstTerm) os << " + ";
        firstTerm = false;
        os << "(" << c.str() << ")";
        for (const auto& [v, k] : a.entries()) {
            os << "*" << (pairing_ ? pairing_->name(v) : std::to_string(v));
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace sl3
