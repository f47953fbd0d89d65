#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "lne/errors.hpp"

namespace lne {

using Int = mpz_class;

/// Arbitrary-precision rational, always kept canonical: positive denominator,
/// gcd(|num|, den) = 1, zero stored as 0/1.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}            // NOLINT(google-explicit-constructor)
    Rat(long n) : q_(n) {}           // NOLINT(google-explicit-constructor)
    Rat(const Int& n) : q_(n) {}     // NOLINT(google-explicit-constructor)
    Rat(const Int& n, const Int& d) : q_(n, d) {
        if (d == 0) throw DegenerateInputError("rational with zero denominator");
        q_.canonicalize();
    }
    Rat(long n, long d) : Rat(Int(n), Int(d)) {}

    /// Parses "p" or "p/q" with optional sign on p.
    static Rat parse(const std::string& text);

    const Int num() const { return Int(q_.get_num()); }
    const Int den() const { return Int(q_.get_den()); }

    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DegenerateInputError("division of rational by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }
    Rat reciprocal() const {
        if (is_zero()) throw DegenerateInputError("reciprocal of zero");
        return Rat(mpq_class(1 / q_));
    }

    double to_double() const { return q_.get_d(); }

    /// "p" when the denominator is 1, else "p/q".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    explicit Rat(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace lne
