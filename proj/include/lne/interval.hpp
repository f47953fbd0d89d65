#pragma once

#include <complex>
#include <string>
#include <vector>

#include "lne/rational.hpp"

namespace lne {

/// Closed interval with exact rational endpoints.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {}
    static RatInterval point(const Rat& r) { return {r, r}; }

    bool valid() const { return lo <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const Rat& r) const { return lo <= r && r <= hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) * Rat(1, 2); }
    Rat mag() const { return std::max(lo.abs(), hi.abs()); }

    RatInterval operator-() const { return {-hi, -lo}; }
    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b);
    /// Tight square: nonnegative even when the interval straddles zero.
    RatInterval square() const;
    /// Reciprocal; requires the interval to exclude zero.
    RatInterval reciprocal() const;

    bool intersects(const RatInterval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool contains_interval(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    RatInterval intersection(const RatInterval& o) const {
        return {std::max(lo, o.lo), std::min(hi, o.hi)};
    }
    RatInterval hull(const RatInterval& o) const {
        return {std::min(lo, o.lo), std::max(hi, o.hi)};
    }

    /// Outward rounding to denominators 2^bits; caps coefficient growth in
    /// iterative refinements.
    RatInterval rounded_out(int bits) const;
};

/// Axis-aligned rectangle in the complex plane with rational corners.
struct Box {
    RatInterval re, im;

    Box() = default;
    Box(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
    static Box point(const Rat& r, const Rat& i) {
        return {RatInterval::point(r), RatInterval::point(i)};
    }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    Rat width() const { return std::max(re.width(), im.width()); }
    std::complex<double> mid_complex() const { return {re.mid().to_double(), im.mid().to_double()}; }

    Box operator-() const { return {-re, -im}; }
    friend Box operator+(const Box& a, const Box& b) { return {a.re + b.re, a.im + b.im}; }
    friend Box operator-(const Box& a, const Box& b) { return {a.re - b.re, a.im - b.im}; }
    friend Box operator*(const Box& a, const Box& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    /// Complex interval division; denominator box must exclude zero.
    friend Box operator/(const Box& a, const Box& b);

    bool intersects(const Box& o) const { return re.intersects(o.re) && im.intersects(o.im); }
    bool contains_box(const Box& o) const {
        return re.contains_interval(o.re) && im.contains_interval(o.im);
    }
    Box intersection(const Box& o) const {
        return {re.intersection(o.re), im.intersection(o.im)};
    }
    Box rounded_out(int bits) const { return {re.rounded_out(bits), im.rounded_out(bits)}; }

    std::string str() const;
};

/// Interval Horner evaluation of a dense univariate rational polynomial.
RatInterval eval_interval(const std::vector<Rat>& coeffs, const RatInterval& x);
Box eval_box(const std::vector<Rat>& coeffs, const Box& x);

/// Exact evaluation at a rational point.
Rat eval_at(const std::vector<Rat>& coeffs, const Rat& x);

/// Rational bounds [lo, hi] enclosing sqrt(r) for r >= 0, sharp to ~bits bits.
RatInterval sqrt_enclosure(const Rat& r, int bits);

}  // namespace lne
