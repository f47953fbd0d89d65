#include "lne/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lne/errors.hpp"

namespace lne {

const char* var_name(Var v) {
    switch (v) {
        case Var::x: return "x";
        case Var::y: return "y";
        case Var::z: return "z";
        case Var::t: return "t";
        case Var::u: return "u";
        case Var::v: return "v";
    }
    return "?";
}

bool var_from_name(char c, Var& out) {
    switch (c) {
        case 'x': out = Var::x; return true;
        case 'y': out = Var::y; return true;
        case 'z': out = Var::z; return true;
        case 't': out = Var::t; return true;
        case 'u': out = Var::u; return true;
        case 'v': out = Var::v; return true;
        default: return false;
    }
}

Poly::Poly(const Rat& c) {
    if (!c.is_zero()) terms_.emplace(Exps{}, c);
}

Poly Poly::variable(Var v) {
    Poly p;
    p.vars_ = {v};
    p.terms_.emplace(Exps{1}, Rat(1));
    return p;
}

Poly Poly::monomial(const Rat& c, const std::vector<std::pair<Var, int>>& powers) {
    Poly p(c);
    for (const auto& [v, e] : powers) {
        if (e < 0) throw UsageError("negative exponent in monomial");
        p *= Poly::variable(v).pow(e);
    }
    return p;
}

Rat Poly::constant_value() const {
    if (is_zero()) return Rat(0);
    if (!is_constant()) throw UsageError("constant_value on nonconstant polynomial");
    return terms_.begin()->second;
}

bool Poly::uses(Var v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return false;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    for (const auto& [e, c] : terms_)
        if (e[idx] > 0) return true;
    return false;
}

int Poly::degree() const {
    if (is_zero()) return kDegreeNegInf;
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int Poly::degree_in(Var v) const {
    if (is_zero()) return kDegreeNegInf;
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return 0;
    size_t idx = static_cast<size_t>(it - vars_.begin());
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

void Poly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
    // Drop variables that no remaining term uses.
    std::vector<size_t> used;
    for (size_t i = 0; i < vars_.size(); ++i) {
        bool any = false;
        for (const auto& [e, c] : terms_)
            if (e[i] > 0) { any = true; break; }
        if (any) used.push_back(i);
    }
    if (used.size() == vars_.size()) return;
    std::vector<Var> nv;
    for (size_t i : used) nv.push_back(vars_[i]);
    std::map<Exps, Rat> nt;
    for (const auto& [e, c] : terms_) {
        Exps ne(used.size());
        for (size_t k = 0; k < used.size(); ++k) ne[k] = e[used[k]];
        nt.emplace(std::move(ne), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

Poly Poly::with_vars(const std::vector<Var>& vars) const {
    Poly r;
    r.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exps ne(vars.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(vars.begin(), vars.end(), vars_[i]);
            ne[static_cast<size_t>(it - vars.begin())] = e[i];
        }
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

void Poly::align(Poly& a, Poly& b) {
    if (a.vars_ == b.vars_) return;
    std::vector<Var> merged;
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(merged));
    a = a.with_vars(merged);
    b = b.with_vars(merged);
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    Poly rhs(o);
    align(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) it->second += c;
    }
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    Poly lhs(a), rhs(b);
    Poly::align(lhs, rhs);
    Poly r;
    r.vars_ = lhs.vars_;
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Poly::Exps e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rat prod = ca * cb;
            auto [it, inserted] = r.terms_.emplace(std::move(e), prod);
            if (!inserted) it->second += prod;
        }
    }
    r.normalize();
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        vars_.clear();
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_) coef *= c;
    return *this;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw UsageError("negative power of a polynomial");
    Poly r(Rat(1));
    Poly base(*this);
    while (e > 0) {
        if (e & 1) r *= base;
        base = (e >>= 1) > 0 ? base * base : base;
    }
    return r;
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

Poly Poly::derivative(Var v) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return Poly();
    size_t idx = static_cast<size_t>(it - vars_.begin());
    Poly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exps ne(e);
        ne[idx] -= 1;
        r.terms_.emplace(std::move(ne), c * Rat(e[idx]));
    }
    r.normalize();
    return r;
}

Poly Poly::homogeneous_part(int deg) const {
    Poly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == deg) r.terms_.emplace(e, c);
    r.normalize();
    return r;
}

int Poly::order_at_origin() const {
    if (is_zero()) return kDegreeNegInf;
    int d = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_)
        d = std::min(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Poly Poly::coefficient_of(Var v, int k) const {
    auto it = std::find(vars_.begin(), vars_.end(), v);
    if (it == vars_.end()) return k == 0 ? *this : Poly();
    size_t idx = static_cast<size_t>(it - vars_.begin());
    Poly r;
    r.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k) continue;
        Exps ne(e);
        ne[idx] = 0;
        r.terms_.emplace(std::move(ne), c);
    }
    r.normalize();
    return r;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
    int d = std::max(degree_in(v), 0);
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) out.push_back(coefficient_of(v, k));
    return out;
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& coeffs) {
    Poly r;
    Poly vp = Poly::variable(v);
    for (size_t k = 0; k < coeffs.size(); ++k) r += coeffs[k] * vp.pow(static_cast<int>(k));
    return r;
}

Poly Poly::substituted(const std::map<Var, Poly>& subst) const {
    Poly r;
    // Power cache per variable keeps repeated expansion cheap.
    std::map<Var, std::vector<Poly>> powers;
    for (const auto& [e, c] : terms_) {
        Poly term(c);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            Var v = vars_[i];
            auto sit = subst.find(v);
            const Poly base = (sit == subst.end()) ? Poly::variable(v) : sit->second;
            auto& cache = powers[v];
            if (cache.empty()) cache.push_back(Poly(Rat(1)));
            while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * base);
            term *= cache[static_cast<size_t>(e[i])];
        }
        r += term;
    }
    return r;
}

Rat Poly::eval_rat(const std::map<Var, Rat>& point) const {
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = point.find(vars_[i]);
            if (it == point.end()) throw UsageError("eval_rat: missing value for variable");
            for (int k = 0; k < e[i]; ++k) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

std::complex<double> Poly::eval_complex(const std::map<Var, std::complex<double>>& point) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> term(c.to_double(), 0.0);
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = point.find(vars_[i]);
            if (it == point.end()) throw UsageError("eval_complex: missing value for variable");
            for (int k = 0; k < e[i]; ++k) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

std::vector<Rat> Poly::univariate_coeffs() const {
    if (vars_.size() > 1) throw UsageError("univariate_coeffs on multivariate polynomial");
    if (is_zero()) return {};
    if (vars_.empty()) return {terms_.begin()->second};
    std::vector<Rat> out(static_cast<size_t>(degree_in(vars_[0])) + 1, Rat(0));
    for (const auto& [e, c] : terms_) out[static_cast<size_t>(e[0])] = c;
    return out;
}

Poly Poly::from_univariate(Var v, const std::vector<Rat>& coeffs) {
    Poly r;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        r += Poly::monomial(coeffs[k], {{v, static_cast<int>(k)}});
    }
    return r;
}

Rat Poly::leading_coefficient_lex() const {
    if (is_zero()) return Rat(0);
    return terms_.rbegin()->second;
}

Rat Poly::normalization_constant() const {
    if (is_zero()) return Rat(1);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, c.num());
        den_lcm = lcm(den_lcm, c.den());
    }
    Rat content(num_gcd, den_lcm);
    if (leading_coefficient_lex().sign() < 0) content = -content;
    return content;
}

Poly Poly::primitive_normalized() const {
    if (is_zero()) return *this;
    Poly r(*this);
    r *= normalization_constant().reciprocal();
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    // Terms sorted by total degree descending, then reverse-lex, so output is
    // stable and reads highest-order first.
    std::vector<std::pair<Exps, Rat>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rat coeff = c;
        if (first) {
            if (coeff.sign() < 0) {
                os << "-";
                coeff = -coeff;
            }
            first = false;
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
            coeff = coeff.abs();
        }
        bool any_var = std::any_of(e.begin(), e.end(), [](int k) { return k > 0; });
        bool coeff_shown = !any_var || coeff != Rat(1);
        if (coeff_shown) os << coeff.str();
        bool need_star = coeff_shown;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << var_name(vars_[i]);
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace lne
