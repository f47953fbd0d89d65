#include "lne/polyarith.hpp"

#include <algorithm>

#include "lne/errors.hpp"

namespace lne {

namespace {

// Dense view of a polynomial in one main variable; coefficients are
// polynomials in the remaining variables, index = power of the main variable.
using UPoly = std::vector<Poly>;

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly to_upoly(const Poly& p, Var var) {
    UPoly u = p.coefficients_in(var);
    trim(u);
    return u;
}

Poly from_upoly(const UPoly& u, Var var) { return Poly::from_coefficients(var, u); }

UPoly umul_scalar(UPoly p, const Poly& c) {
    for (auto& coef : p) coef = coef * c;
    trim(p);
    return p;
}

UPoly usub(UPoly a, const UPoly& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// shift by X^k
UPoly ushift(const UPoly& p, int k) {
    if (p.empty()) return p;
    UPoly r(p.size() + static_cast<size_t>(k));
    for (size_t i = 0; i < p.size(); ++i) r[i + static_cast<size_t>(k)] = p[i];
    return r;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
UPoly prem(UPoly a, const UPoly& b) {
    int db = udeg(b);
    const Poly& lb = b.back();
    int e = udeg(a) - db + 1;
    while (udeg(a) >= db && !a.empty()) {
        Poly la = a.back();
        UPoly scaled = umul_scalar(a, lb);
        UPoly sub = umul_scalar(ushift(b, udeg(a) - db), la);
        a = usub(scaled, sub);
        --e;
    }
    // Top up the lc(b) factor so the total power is exactly deg a - deg b + 1.
    for (; e > 0; --e) a = umul_scalar(a, lb);
    return a;
}

UPoly udivide_exact(UPoly p, const Poly& d) {
    for (auto& c : p) c = exact_divide(c, d);
    return p;
}

// Subresultant pseudo-remainder sequence resultant (Brown-Traub recurrences).
Poly resultant_upoly(UPoly a, UPoly b) {
    if (a.empty() || b.empty()) return Poly();
    int sign = 1;
    if (udeg(a) < udeg(b)) {
        if ((udeg(a) & 1) && (udeg(b) & 1)) sign = -sign;
        std::swap(a, b);
    }
    if (udeg(b) == 0) {
        Poly r = b[0].pow(udeg(a));
        return sign < 0 ? -r : r;
    }
    Poly g(Rat(1)), h(Rat(1));
    while (true) {
        int da = udeg(a), db = udeg(b);
        int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        UPoly r = prem(a, b);
        a = std::move(b);
        b = udivide_exact(std::move(r), g * h.pow(delta));
        g = a.back();
        if (delta > 0) {
            // h <- g^delta / h^(delta-1), exact in the coefficient ring.
            Poly num = g.pow(delta);
            h = (delta == 1) ? num : exact_divide(num, h.pow(delta - 1));
        }
        if (b.empty()) return Poly();  // common factor of positive degree
        if (udeg(b) == 0) {
            int dap = udeg(a);
            // S_0 = lc(B)^deg(A) / h^(deg(A)-1)
            Poly num = b[0].pow(dap);
            Poly res = (dap <= 1) ? num : exact_divide(num, h.pow(dap - 1));
            return sign < 0 ? -res : res;
        }
    }
}

// Last nonzero element of the subresultant PRS; gcd of primitive parts up to
// content.
UPoly gcd_prs(UPoly a, UPoly b) {
    if (udeg(a) < udeg(b)) std::swap(a, b);
    if (udeg(b) == 0) return {Poly(Rat(1))};
    Poly g(Rat(1)), h(Rat(1));
    while (true) {
        int delta = udeg(a) - udeg(b);
        UPoly r = prem(a, b);
        if (r.empty()) return b;
        a = std::move(b);
        b = udivide_exact(std::move(r), g * h.pow(delta));
        g = a.back();
        if (delta > 0) {
            Poly num = g.pow(delta);
            h = (delta == 1) ? num : exact_divide(num, h.pow(delta - 1));
        }
        if (udeg(b) == 0) return {Poly(Rat(1))};
    }
}

Var main_var(const Poly& p, const Poly& q) {
    Var best = Var::x;
    bool found = false;
    for (const Poly* pp : {&p, &q}) {
        for (Var v : pp->vars()) {
            if (!found || static_cast<int>(v) > static_cast<int>(best)) best = v;
            found = true;
        }
    }
    if (!found) throw DegenerateInputError("no variables present");
    return best;
}

// Content of p with respect to var: gcd of the coefficient polynomials.
Poly content_in(const Poly& p, Var var) {
    UPoly u = to_upoly(p, var);
    Poly c;
    for (const Poly& coef : u) {
        if (coef.is_zero()) continue;
        c = c.is_zero() ? coef : poly_gcd(c, coef);
        if (c.is_constant()) return Poly(Rat(1));
    }
    return c.primitive_normalized();
}

}  // namespace

Poly exact_divide(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw DegenerateInputError("exact division by zero polynomial");
    if (p.is_zero()) return Poly();
    if (d.is_constant()) {
        Poly r(p);
        r *= d.constant_value().reciprocal();
        return r;
    }
    // Long division on raw exponent maps over the union variable frame,
    // cancelling lexicographic leading terms; exactness guarantees progress.
    std::vector<Var> uvars;
    {
        std::vector<Var> a = p.vars(), b = d.vars();
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uvars));
    }
    auto embed = [&uvars](const Poly& f) {
        std::map<Poly::Exps, Rat> out;
        for (const auto& [e, c] : f.terms()) {
            Poly::Exps ne(uvars.size(), 0);
            for (size_t i = 0; i < f.vars().size(); ++i) {
                auto it = std::find(uvars.begin(), uvars.end(), f.vars()[i]);
                ne[static_cast<size_t>(it - uvars.begin())] = e[i];
            }
            out.emplace(std::move(ne), c);
        }
        return out;
    };
    std::map<Poly::Exps, Rat> rem = embed(p);
    const std::map<Poly::Exps, Rat> dm = embed(d);
    const auto& dlead = *dm.rbegin();
    Poly quot;
    while (!rem.empty()) {
        const auto& rlead = *rem.rbegin();
        Poly::Exps qe(uvars.size());
        for (size_t i = 0; i < qe.size(); ++i) {
            qe[i] = rlead.first[i] - dlead.first[i];
            if (qe[i] < 0) throw ConsistencyError("exact_divide: not divisible");
        }
        Rat qc = rlead.second / dlead.second;
        std::vector<std::pair<Var, int>> powers;
        for (size_t i = 0; i < qe.size(); ++i)
            if (qe[i] > 0) powers.push_back({uvars[i], qe[i]});
        quot += Poly::monomial(qc, powers);
        for (const auto& [e, c] : dm) {
            Poly::Exps ne(uvars.size());
            for (size_t i = 0; i < ne.size(); ++i) ne[i] = e[i] + qe[i];
            auto [it, inserted] = rem.emplace(std::move(ne), -qc * c);
            if (!inserted) {
                it->second -= qc * c;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return quot;
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero())
        throw DegenerateInputError("gcd of two zero polynomials");
    if (p.is_zero()) return q.primitive_normalized();
    if (q.is_zero()) return p.primitive_normalized();
    if (p.is_constant() || q.is_constant()) return Poly(Rat(1));
    Var v = main_var(p, q);
    if (p.degree_in(v) == 0 || q.degree_in(v) == 0) {
        // One operand is v-free; the gcd divides the content of the other.
        const Poly& free_one = p.degree_in(v) == 0 ? p : q;
        const Poly& other = p.degree_in(v) == 0 ? q : p;
        return poly_gcd(free_one, content_in(other, v));
    }
    Poly cp = content_in(p, v);
    Poly cq = content_in(q, v);
    Poly pp = exact_divide(p, cp);
    Poly qq = exact_divide(q, cq);
    UPoly g = gcd_prs(to_upoly(pp, v), to_upoly(qq, v));
    Poly gp = from_upoly(g, v);
    if (gp.degree_in(v) > 0) gp = exact_divide(gp, content_in(gp, v));
    Poly cont_gcd = cp.is_constant() && cq.is_constant() ? Poly(Rat(1)) : poly_gcd(cp, cq);
    return (gp * cont_gcd).primitive_normalized();
}

bool is_squarefree(const Poly& p) {
    if (p.is_zero()) throw DegenerateInputError("squarefree test of the zero polynomial");
    if (p.is_constant()) return true;
    size_t nvars = p.vars().size();
    if (nvars == 1) {
        Var v = p.vars()[0];
        if (p.degree_in(v) == 1) return true;
        Poly g = poly_gcd(p, p.derivative(v));
        return g.degree() == 0;
    }
    if (nvars == 2) {
        Var a = p.vars()[0], b = p.vars()[1];
        int d = p.degree();
        if (p.homogeneous_part(d) != p)
            throw UsageError("squarefree test expects a univariate polynomial or a binary form");
        // Shear until the pure power of b has a nonzero coefficient, then
        // dehomogenize and run the univariate test.
        Poly sheared = p;
        if (sheared.coefficient_of(b, d).is_zero()) {
            for (int k = 1;; ++k) {
                std::map<Var, Poly> shift{{a, Poly::variable(a) + Rat(k) * Poly::variable(b)}};
                sheared = p.substituted(shift);
                if (!sheared.coefficient_of(b, d).is_zero()) break;
                if (k > d + 1) throw ConsistencyError("binary form shear failed");
            }
        }
        std::map<Var, Poly> dehom{{b, Poly(Rat(1))}};
        Poly g = sheared.substituted(dehom);
        return is_squarefree(g);
    }
    throw UsageError("squarefree test expects a univariate polynomial or a binary form");
}

Poly resultant_eliminate(const Poly& p, const Poly& q, Var var) {
    bool var_known = false;
    for (const Poly* pp : {&p, &q})
        for (Var v : pp->vars())
            if (v == var) var_known = true;
    if (!var_known)
        throw UsageError("resultant variable does not occur in either polynomial");
    if (p.is_zero() || q.is_zero())
        throw DegenerateInputError("resultant of a zero polynomial");
    return resultant_upoly(to_upoly(p, var), to_upoly(q, var));
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw DegenerateInputError("squarefree part of the zero polynomial");
    if (p.is_constant()) return Poly(Rat(1));
    Poly g;
    for (Var v : p.vars()) {
        Poly d = p.derivative(v);
        if (d.is_zero()) continue;
        g = g.is_zero() ? poly_gcd(p, d) : poly_gcd(g, d);
        if (g.degree() == 0) return p.primitive_normalized();
    }
    if (g.is_zero()) return p.primitive_normalized();
    return exact_divide(p, g).primitive_normalized();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p, Var v) {
    if (p.is_zero()) throw DegenerateInputError("squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly a = p.primitive_normalized();
    if (a.degree_in(v) == 0) return out;
    // Yun's algorithm.
    Poly d = a.derivative(v);
    Poly g = poly_gcd(a, d);
    Poly c = exact_divide(a, g);
    Poly w = exact_divide(d, g) - c.derivative(v);
    int mult = 1;
    while (c.degree() > 0) {
        Poly f = poly_gcd(c, w);
        if (f.degree() > 0) out.push_back({f.primitive_normalized(), mult});
        c = exact_divide(c, f);
        w = exact_divide(w, f) - c.derivative(v);
        ++mult;
    }
    return out;
}

std::vector<std::vector<Poly>> sylvester_matrix(const Poly& p, const Poly& q, Var var) {
    UPoly a = to_upoly(p, var), b = to_upoly(q, var);
    int da = udeg(a), db = udeg(b);
    if (da < 0 || db < 0) throw DegenerateInputError("sylvester matrix of zero polynomial");
    int n = da + db;
    std::vector<std::vector<Poly>> m(static_cast<size_t>(n),
                                     std::vector<Poly>(static_cast<size_t>(n)));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k) m[r][r + da - k] = a[static_cast<size_t>(k)];
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k) m[db + r][r + db - k] = b[static_cast<size_t>(k)];
    return m;
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) return Poly(Rat(1));
    int sign = 1;
    Poly prev(Rat(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Poly();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_divide(num, prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Poly subresultant_polynomial(const Poly& p, const Poly& q, Var var, int j) {
    UPoly a = to_upoly(p, var), b = to_upoly(q, var);
    int da = udeg(a), db = udeg(b);
    if (da < 0 || db < 0) throw DegenerateInputError("subresultant of zero polynomial");
    if (da < db) std::swap(a, b), std::swap(da, db);
    if (j >= db) throw UsageError("subresultant index must be below the smaller degree");
    // Matrix rows: X^(db-j-1)*A ... A, X^(da-j-1)*B ... B over monomials
    // X^(da+db-j-1) .. X^0; determinant polynomial over the last j+1 columns.
    int rows = (db - j) + (da - j);
    int cols = da + db - j;
    auto coeff = [](const UPoly& f, int k) {
        return (k >= 0 && k <= udeg(f)) ? f[static_cast<size_t>(k)] : Poly();
    };
    std::vector<std::vector<Poly>> full(static_cast<size_t>(rows),
                                        std::vector<Poly>(static_cast<size_t>(cols)));
    for (int r = 0; r < db - j; ++r)
        for (int c = 0; c < cols; ++c)
            full[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                coeff(a, da + db - j - 1 - c - (db - j - 1 - r));
    for (int r = 0; r < da - j; ++r)
        for (int c = 0; c < cols; ++c)
            full[static_cast<size_t>(db - j + r)][static_cast<size_t>(c)] =
                coeff(b, da + db - j - 1 - c - (da - j - 1 - r));
    Poly result;
    for (int k = 0; k <= j; ++k) {
        // Square submatrix: first rows-1 columns, plus the column of X^k.
        std::vector<std::vector<Poly>> sq(static_cast<size_t>(rows));
        for (int r = 0; r < rows; ++r) {
            auto& row = sq[static_cast<size_t>(r)];
            row.assign(full[static_cast<size_t>(r)].begin(),
                       full[static_cast<size_t>(r)].begin() + rows - 1);
            row.push_back(full[static_cast<size_t>(r)][static_cast<size_t>(cols - 1 - k)]);
        }
        result += bareiss_determinant(std::move(sq)) * Poly::variable(var).pow(k);
    }
    return result;
}

}  // namespace lne
