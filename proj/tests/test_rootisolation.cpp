#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "lne/rootisolation.hpp"

using namespace lne;

namespace {
Poly T() { return Poly::variable(Var::t); }

bool box_near(const Box& b, std::complex<double> target, double tol = 1e-5) {
    auto m = b.mid_complex();
    return std::abs(m - target) < tol;
}
}  // namespace

TEST_CASE("interval arithmetic basics") {
    RatInterval a(Rat(1), Rat(2)), b(Rat(-1), Rat(1));
    CHECK((a * b).lo == Rat(-2));
    CHECK((a * b).hi == Rat(2));
    CHECK(b.contains_zero());
    CHECK_FALSE(a.contains_zero());
    CHECK_THROWS_AS(b.reciprocal(), DomainError);
    CHECK(a.reciprocal().lo == Rat(1, 2));

    Box i(RatInterval(Rat(0), Rat(0)), RatInterval(Rat(1), Rat(1)));
    Box sq = i * i;
    CHECK(sq.re.lo == Rat(-1));
    CHECK(sq.im.lo == Rat(0));
}

TEST_CASE("sqrt enclosure") {
    RatInterval r = sqrt_enclosure(Rat(2), 40);
    CHECK(r.lo * r.lo <= Rat(2));
    CHECK(r.hi * r.hi >= Rat(2));
    CHECK(r.width() < Rat(1, 1000000));
    CHECK(sqrt_enclosure(Rat(9, 4), 40).contains(Rat(3, 2)));
}

TEST_CASE("real root isolation on simple polynomials") {
    // t^2 - 2: two roots at +-sqrt(2)
    Poly p2 = T().pow(2) - Poly(Rat(2));
    auto roots = isolate_real_roots(p2);
    REQUIRE(roots.size() == 2);
    auto d2 = p2.univariate_coeffs();
    CHECK(std::abs(refine_real_root(d2, roots[0], Rat(1, 1 << 16)).mid().to_double() +
                   1.41421356) < 1e-4);
    CHECK(std::abs(refine_real_root(d2, roots[1], Rat(1, 1 << 16)).mid().to_double() -
                   1.41421356) < 1e-4);

    // (t-1)(t-2)(t-3), with multiplicity collapsed internally
    Poly p = (T() - Poly(Rat(1))) * (T() - Poly(Rat(2))).pow(2) * (T() - Poly(Rat(3)));
    auto r2 = isolate_real_roots(p);
    REQUIRE(r2.size() == 3);
    CHECK(r2[0].contains(Rat(1)));
    CHECK(r2[1].contains(Rat(2)));
    CHECK(r2[2].contains(Rat(3)));

    CHECK(isolate_real_roots(T().pow(2) + Poly(Rat(1))).empty());
}

TEST_CASE("real root refinement") {
    Poly p = T().pow(2) - Poly(Rat(2));
    auto roots = isolate_real_roots(p);
    auto iv = refine_real_root(p.univariate_coeffs(), roots[1], Rat(1, 1 << 20));
    CHECK(iv.width() <= Rat(1, 1 << 20));
    double mid = iv.mid().to_double();
    CHECK(std::abs(mid - 1.41421356237) < 1e-5);
}

TEST_CASE("complex root isolation: quadratics") {
    // t^2 + 1 -> +-i
    auto boxes = isolate_complex_roots(T().pow(2) + Poly(Rat(1)), Rat(1, 1 << 20));
    REQUIRE(boxes.size() == 2);
    CHECK(box_near(boxes[0], {0.0, -1.0}));
    CHECK(box_near(boxes[1], {0.0, 1.0}));

    // t^2 - 2 -> +-sqrt(2), real boxes with exact zero imaginary part
    auto real_boxes = isolate_complex_roots(T().pow(2) - Poly(Rat(2)), Rat(1, 1 << 20));
    REQUIRE(real_boxes.size() == 2);
    CHECK(real_boxes[0].im.lo.is_zero());
    CHECK(real_boxes[0].im.hi.is_zero());
    CHECK(box_near(real_boxes[0], {-1.4142135623730951, 0.0}));
}

TEST_CASE("complex root isolation: cube roots of unity") {
    Poly p = T().pow(3) - Poly(Rat(1));
    auto boxes = isolate_complex_roots(p, Rat(1, 1 << 20));
    REQUIRE(boxes.size() == 3);
    CHECK(box_near(boxes[0], {-0.5, -0.8660254037844386}));
    CHECK(box_near(boxes[1], {-0.5, 0.8660254037844386}));
    CHECK(box_near(boxes[2], {1.0, 0.0}));
}

TEST_CASE("complex root isolation: mixed rational and complex, repeated input") {
    // (t-3)^2 (t^2+4): distinct roots 3, +-2i
    Poly p = (T() - Poly(Rat(3))).pow(2) * (T().pow(2) + Poly(Rat(4)));
    auto boxes = isolate_complex_roots(p, Rat(1, 1 << 20));
    REQUIRE(boxes.size() == 3);
    CHECK(box_near(boxes[0], {0.0, -2.0}));
    CHECK(box_near(boxes[1], {0.0, 2.0}));
    CHECK(box_near(boxes[2], {3.0, 0.0}));
    for (size_t i = 0; i < boxes.size(); ++i)
        for (size_t j = i + 1; j < boxes.size(); ++j) CHECK_FALSE(boxes[i].intersects(boxes[j]));
}

TEST_CASE("complex root isolation: roots sharing real or imaginary parts") {
    // t^4 - 1: roots 1, -1, i, -i; i and -i share real part 0.
    auto boxes = isolate_complex_roots(T().pow(4) - Poly(Rat(1)), Rat(1, 1 << 20));
    REQUIRE(boxes.size() == 4);
    // t^4 + 4: roots 1+i, 1-i, -1+i, -1-i; shared real and imaginary parts.
    auto boxes2 = isolate_complex_roots(T().pow(4) + Poly(Rat(4)), Rat(1, 1 << 12));
    REQUIRE(boxes2.size() == 4);
    CHECK(box_near(boxes2[0], {-1.0, -1.0}, 1e-3));
    CHECK(box_near(boxes2[3], {1.0, 1.0}, 1e-3));
}

TEST_CASE("box widths meet the requested bound") {
    auto boxes = isolate_complex_roots(T().pow(3) - Poly(Rat(1)), Rat(1, 1 << 20));
    for (const Box& b : boxes) CHECK(b.width() <= Rat(1, 1 << 20));
}
