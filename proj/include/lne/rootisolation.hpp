#pragma once

#include <vector>

#include "lne/interval.hpp"
#include "lne/poly.hpp"

namespace lne {

/// Isolating intervals for the distinct real roots of a univariate p, sorted
/// ascending. Interval endpoints are never roots unless the interval is a
/// single rational point (an exactly-known root).
std::vector<RatInterval> isolate_real_roots(const Poly& p);

/// Shrinks an isolating interval of the squarefree polynomial given by dense
/// coefficients until its width is below the target. The interval must carry
/// a sign change (or be a point already).
RatInterval refine_real_root(const std::vector<Rat>& coeffs, RatInterval iv, const Rat& width);

/// Isolating boxes for all distinct complex roots of a univariate p, sorted
/// by (re midpoint, im midpoint). Real roots come out with exact zero
/// imaginary part; strictly complex roots appear in conjugate pairs. Boxes
/// are pairwise disjoint and certified to contain exactly one root each,
/// refined below the requested width.
std::vector<Box> isolate_complex_roots(const Poly& p, const Rat& width);

/// Newton contraction of a certified root box of the squarefree polynomial
/// with the given dense coefficients (derivative must exclude zero on it).
Box refine_box(const std::vector<Rat>& coeffs, Box box, const Rat& width);

/// Number of sign changes of the Sturm chain of p at x minus at y; equals the
/// number of distinct real roots in (x, y] for x < y non-roots.
class SturmChain {
public:
    explicit SturmChain(const Poly& p);
    int variations_at(const Rat& x) const;
    int count_in(const Rat& lo, const Rat& hi) const {
        return variations_at(lo) - variations_at(hi);
    }
    const std::vector<Rat>& squarefree_coeffs() const { return chain_.front(); }

private:
    std::vector<std::vector<Rat>> chain_;
};

}  // namespace lne
