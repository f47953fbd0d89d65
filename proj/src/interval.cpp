#include "lne/interval.hpp"

#include <algorithm>
#include <sstream>

#include "lne/errors.hpp"

namespace lne {

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval RatInterval::square() const {
    Rat a = lo * lo, b = hi * hi;
    Rat high = std::max(a, b);
    Rat low = contains_zero() ? Rat(0) : std::min(a, b);
    return {low, high};
}

RatInterval RatInterval::reciprocal() const {
    if (contains_zero()) throw DomainError("interval reciprocal across zero");
    return {hi.reciprocal(), lo.reciprocal()};
}

static Rat round_down(const Rat& r, const Int& scale) {
    Int n = r.num() * scale;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), r.den().get_mpz_t());
    return Rat(q, scale);
}

static Rat round_up(const Rat& r, const Int& scale) {
    Int n = r.num() * scale;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), r.den().get_mpz_t());
    return Rat(q, scale);
}

RatInterval RatInterval::rounded_out(int bits) const {
    Int scale(1);
    scale <<= bits;
    return {round_down(lo, scale), round_up(hi, scale)};
}

Box operator/(const Box& a, const Box& b) {
    RatInterval den = b.re.square() + b.im.square();
    if (den.contains_zero()) throw DomainError("complex interval division across zero");
    RatInterval inv = den.reciprocal();
    return {(a.re * b.re + a.im * b.im) * inv, (a.im * b.re - a.re * b.im) * inv};
}

std::string Box::str() const {
    std::ostringstream os;
    os << "[" << re.lo << ", " << re.hi << "] + [" << im.lo << ", " << im.hi << "]*i";
    return os.str();
}

RatInterval eval_interval(const std::vector<Rat>& coeffs, const RatInterval& x) {
    RatInterval acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + RatInterval::point(*it);
    return acc;
}

Box eval_box(const std::vector<Rat>& coeffs, const Box& x) {
    Box acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + Box::point(*it, Rat(0));
    return acc;
}

Rat eval_at(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatInterval sqrt_enclosure(const Rat& r, int bits) {
    if (r.sign() < 0) throw DomainError("sqrt of negative rational");
    if (r.is_zero()) return RatInterval::point(Rat(0));
    // sqrt(p/q) = sqrt(p*q)/q; scale by 4^bits for precision.
    Int scale(1);
    scale <<= bits;
    Int pq = r.num() * r.den() * scale * scale;
    Int root;
    mpz_sqrt(root.get_mpz_t(), pq.get_mpz_t());
    Int den = r.den() * scale;
    return {Rat(root, den), Rat(root + 1, den)};
}

}  // namespace lne
