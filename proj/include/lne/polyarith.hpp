#pragma once

#include <utility>
#include <vector>

#include "lne/poly.hpp"

namespace lne {

/// Exact quotient p/d; throws ConsistencyError if d does not divide p.
Poly exact_divide(const Poly& p, const Poly& d);

/// Greatest common divisor, primitive with positive lexicographic leading
/// coefficient. Both inputs zero is a degenerate-input error.
Poly poly_gcd(const Poly& p, const Poly& q);

/// True iff p has no repeated irreducible factor over the complex numbers.
/// p must be nonzero and either univariate or a homogeneous binary form.
bool is_squarefree(const Poly& p);

/// Sylvester resultant of p and q with respect to var, computed by a
/// subresultant pseudo-remainder sequence.
Poly resultant_eliminate(const Poly& p, const Poly& q, Var var);

/// p with all repeated factors reduced to multiplicity one (any number of
/// variables), primitive-normalized.
Poly squarefree_part(const Poly& p);

/// Yun decomposition of a univariate p: list of (factor, multiplicity) with
/// the factors squarefree, pairwise coprime, nonconstant.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p, Var v);

/// j-th subresultant polynomial of p, q with respect to var (degree <= j),
/// from the determinant-polynomial definition via fraction-free elimination.
Poly subresultant_polynomial(const Poly& p, const Poly& q, Var var, int j);

/// Determinant of a square matrix of polynomials (fraction-free Bareiss).
Poly bareiss_determinant(std::vector<std::vector<Poly>> m);

/// Sylvester matrix of p, q with respect to var; entries are polynomials in
/// the remaining variables.
std::vector<std::vector<Poly>> sylvester_matrix(const Poly& p, const Poly& q, Var var);

}  // namespace lne
