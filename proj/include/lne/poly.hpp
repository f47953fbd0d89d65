#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "lne/rational.hpp"

namespace lne {

/// The fixed variable universe. The declaration order is the canonical
/// variable order used everywhere (exponent vectors, printing, elimination).
enum class Var : uint8_t { x = 0, y = 1, z = 2, t = 3, u = 4, v = 5 };

const char* var_name(Var v);
bool var_from_name(char c, Var& out);

/// Degree of the zero polynomial.
inline constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

/// Exact multivariate polynomial over the rationals. Terms map exponent
/// vectors (parallel to the sorted variable list) to nonzero coefficients;
/// variables that no term uses are dropped, so representation is canonical.
class Poly {
public:
    using Exps = std::vector<int>;

    Poly() = default;
    Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
    Poly(int c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly variable(Var v);
    static Poly monomial(const Rat& c, const std::vector<std::pair<Var, int>>& powers);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exps(vars_.size(), 0)); }
    Rat constant_value() const;

    const std::vector<Var>& vars() const { return vars_; }
    bool uses(Var v) const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Exps, Rat>& terms() const { return terms_; }

    int degree() const;          // total degree; kDegreeNegInf for 0
    int degree_in(Var v) const;  // kDegreeNegInf for 0, 0 if v unused

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

    Poly pow(int e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Arbitrary strict total order, usable as a map key.
    friend bool operator<(const Poly& a, const Poly& b);

    Poly derivative(Var v) const;

    /// Homogeneous part of the given total degree.
    Poly homogeneous_part(int deg) const;
    /// Smallest total degree with a nonzero term; kDegreeNegInf for 0.
    int order_at_origin() const;

    /// Coefficient of v^k, a polynomial in the remaining variables.
    Poly coefficient_of(Var v, int k) const;
    /// Dense coefficient list [c0, ..., cd] of the poly seen in v.
    std::vector<Poly> coefficients_in(Var v) const;
    static Poly from_coefficients(Var v, const std::vector<Poly>& coeffs);

    /// Simultaneous substitution; variables absent from the map are kept.
    Poly substituted(const std::map<Var, Poly>& subst) const;

    Rat eval_rat(const std::map<Var, Rat>& point) const;
    std::complex<double> eval_complex(const std::map<Var, std::complex<double>>& point) const;

    /// Dense univariate coefficient vector; requires at most one variable.
    std::vector<Rat> univariate_coeffs() const;
    static Poly from_univariate(Var v, const std::vector<Rat>& coeffs);

    /// Rational constant c such that p/c has coprime integer coefficients and
    /// positive leading (lexicographically largest exponent) coefficient.
    Rat normalization_constant() const;
    /// p / normalization_constant().
    Poly primitive_normalized() const;

    Rat leading_coefficient_lex() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void normalize();
    static void align(Poly& a, Poly& b);
    Poly with_vars(const std::vector<Var>& vars) const;

    std::vector<Var> vars_;        // strictly increasing by enum value
    std::map<Exps, Rat> terms_;    // exponent vector -> nonzero coefficient
};

}  // namespace lne
